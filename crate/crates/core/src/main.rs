fn main() {
    std::process::exit(edgecode::cli::run(std::env::args_os()));
}
