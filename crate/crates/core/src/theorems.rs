//! Closed-form predictions for edge-code parameters, the extremal
//! polynomials that attain them, and suites that compare every prediction
//! with brute force.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::hypergraph::{
    cycle_graph, edge_of_mask, five_vertex_catalog, interval_hypergraph, partite_path_clutter,
    path_graph, star, Branch, Hypergraph,
};
use crate::metrics::{
    footprint_bound, minimum_distance, weight_distribution, zeros_disjoint_binomials,
    zeros_linear_form, zeros_tree_poly,
};
use crate::torus::{count_zeros, weight, EdgeCode, EdgePolynomial};
use crate::Limits;

pub const FOOTPRINT_SEED: u64 = 0x5eed_ed6e;
pub const FOOTPRINT_SAMPLES: usize = 1000;

/// Which case of the uniform-clutter formula a prediction uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClutterCase {
    /// `d <= s/2`
    First,
    /// `s/2 < d < s`, via the edge-removed clutter
    Second,
}

impl ClutterCase {
    pub fn of(branch: &Branch) -> Option<ClutterCase> {
        match branch {
            Branch::First { .. } => Some(ClutterCase::First),
            Branch::Second { .. } => Some(ClutterCase::Second),
            Branch::NotCovered => None,
        }
    }
}

/// Minimum distance of the edge code of a `d`-uniform clutter on `s` vertices
/// that contains the partite-path clutter (case `First`) or whose edge-removed
/// clutter does (case `Second`).
pub fn predict_clutter(s: usize, d: usize, q: u64, case: ClutterCase) -> Result<u64> {
    if q < 3 {
        return Err(Error::BadParams(format!("need q >= 3, got {q}")));
    }
    match case {
        ClutterCase::First if d >= 1 && 2 * d <= s => {
            Ok((q - 2).pow(d as u32) * (q - 1).pow((s - d) as u32))
        }
        ClutterCase::Second if 2 * d > s && d < s => {
            Ok((q - 2).pow((s - d) as u32) * (q - 1).pow(d as u32))
        }
        _ => Err(Error::NotCovered(format!("{case:?} with s={s} d={d}"))),
    }
}

/// Minimum distance of the edge code of a hypergraph containing every subset
/// of size `d2..=d1`.
pub fn predict_interval(s: usize, d1: usize, d2: usize, q: u64) -> Result<u64> {
    if q < 3 || !(1 <= d2 && d2 <= d1 && d1 <= s) {
        return Err(Error::BadParams(format!(
            "need 1 <= d2 <= d1 <= s and q >= 3, got s={s} d1={d1} d2={d2} q={q}"
        )));
    }
    let (a, b) = if d1 + d2 <= s { (d1, s - d1) } else { (s - d2, d2) };
    Ok((q - 2).pow(a as u32) * (q - 1).pow(b as u32))
}

/// The `t`-th Hamming weight of the edge code of a tree on `s` vertices, for
/// `t = 1..=t_max`: `(q-1)^s - Σ_{i=1}^{2t-1} (-1)^(i-1) (q-1)^(s-i)`.
pub fn predict_tree_weights(s: usize, q: u64, t_max: usize) -> Result<Vec<u64>> {
    if q < 3 || t_max == 0 || 2 * t_max + 1 > s {
        return Err(Error::BadParams(format!(
            "need q >= 3 and 1 <= t <= (s-1)/2, got s={s} q={q} t={t_max}"
        )));
    }
    Ok((1..=t_max)
        .map(|t| {
            let mut w = ((q - 1) as i128).pow(s as u32);
            for i in 1..2 * t {
                let term = ((q - 1) as i128).pow((s - i) as u32);
                w += if i % 2 == 1 { -term } else { term };
            }
            w as u64
        })
        .collect())
}

/// A factor of a product of variable-disjoint linear polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `t_a - t_b`
    Difference(usize, usize),
    /// `t_a - 1`
    MinusOne(usize),
    /// `t_a`
    Variable(usize),
}

impl Factor {
    fn vars(self) -> Vec<usize> {
        match self {
            Factor::Difference(a, b) => vec![a, b],
            Factor::MinusOne(a) | Factor::Variable(a) => vec![a],
        }
    }

    pub fn is_binomial(self) -> bool {
        !matches!(self, Factor::Variable(_))
    }
}

/// Expands a product of variable-disjoint factors into squarefree monomials
/// (as vertex bitmasks) with integer coefficients.
pub fn expand(factors: &[Factor]) -> Result<BTreeMap<u64, i64>> {
    let mut seen = 0u64;
    for v in factors.iter().flat_map(|f| f.vars()) {
        if v == 0 || v > 64 || seen >> (v - 1) & 1 == 1 {
            return Err(Error::BadParams(format!("factors {factors:?} share or misuse variable {v}")));
        }
        seen |= 1 << (v - 1);
    }
    let mut terms = BTreeMap::from([(0u64, 1i64)]);
    for &factor in factors {
        let mut next = BTreeMap::new();
        for (&m, &c) in &terms {
            let parts: Vec<(u64, i64)> = match factor {
                Factor::Difference(a, b) => vec![(1 << (a - 1), c), (1 << (b - 1), -c)],
                Factor::MinusOne(a) => vec![(1 << (a - 1), c), (0, -c)],
                Factor::Variable(a) => vec![(1 << (a - 1), c)],
            };
            for (extra, coeff) in parts {
                *next.entry(m | extra).or_insert(0) += coeff;
            }
        }
        terms = next;
    }
    terms.retain(|_, c| *c != 0);
    Ok(terms)
}

/// The product of `factors` as an element of the edge space of `h`.
pub fn polynomial_from_factors<'h>(
    h: &'h Hypergraph,
    field: &Field,
    factors: &[Factor],
) -> Result<EdgePolynomial<'h>> {
    let mut coeffs = vec![FieldElement::ZERO; h.edge_count()];
    for (mask, c) in expand(factors)? {
        let edge = edge_of_mask(mask);
        let idx = h.index_of(&edge).ok_or(Error::EmbeddingMissing(edge))?;
        coeffs[idx] = field.from_int(c);
    }
    EdgePolynomial::new(h, coeffs)
}

/// `(t_{l1} - t_{l2}) (t_{l3} - t_{l4}) ...` over the edges of `h`; its
/// monomials are exactly the partite paths through the parts of `labels`.
pub fn witness_clutter<'h>(
    h: &'h Hypergraph,
    field: &Field,
    labels: &[usize],
) -> Result<EdgePolynomial<'h>> {
    if labels.is_empty() || !labels.len().is_multiple_of(2) {
        return Err(Error::BadParams("need labels for d two-vertex parts".into()));
    }
    let factors: Vec<Factor> = labels
        .chunks(2)
        .map(|p| Factor::Difference(p[0], p[1]))
        .collect();
    polynomial_from_factors(h, field, &factors)
}

/// Factors of the extremal polynomial for the interval hypergraph on sizes
/// `d2..=d1`. For `d1 + d2 <= s`:
/// `(t_1 - t_2)...(t_{2d2-1} - t_{2d2}) (t_{2d2+1} - 1)...(t_{d1+d2} - 1)`.
/// Otherwise `s - d1` differences, then `d1 - d2` shifted variables, then the
/// remaining `d1 + d2 - s` variables as plain factors.
pub fn interval_witness_factors(s: usize, d1: usize, d2: usize) -> Result<Vec<Factor>> {
    if !(1 <= d2 && d2 <= d1 && d1 <= s) {
        return Err(Error::BadParams(format!(
            "need 1 <= d2 <= d1 <= s, got s={s} d1={d1} d2={d2}"
        )));
    }
    let mut factors = Vec::new();
    if d1 + d2 <= s {
        factors.extend((1..=d2).map(|i| Factor::Difference(2 * i - 1, 2 * i)));
        factors.extend((2 * d2 + 1..=d1 + d2).map(Factor::MinusOne));
    } else {
        let pairs = s - d1;
        factors.extend((1..=pairs).map(|i| Factor::Difference(2 * i - 1, 2 * i)));
        let shifted = 2 * pairs + 1..=2 * pairs + (d1 - d2);
        let rest = 2 * pairs + (d1 - d2) + 1..=s;
        factors.extend(shifted.map(Factor::MinusOne));
        factors.extend(rest.map(Factor::Variable));
    }
    Ok(factors)
}

pub fn witness_interval<'h>(
    h: &'h Hypergraph,
    field: &Field,
    d1: usize,
    d2: usize,
) -> Result<EdgePolynomial<'h>> {
    let factors = interval_witness_factors(h.vertex_count(), d1, d2)?;
    polynomial_from_factors(h, field, &factors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Table1,
    Table2,
    Table3,
    Clutter,
    Interval,
    Tree,
    SelfOrth,
    Aster,
    Footprint,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Table1,
        Suite::Table2,
        Suite::Table3,
        Suite::Clutter,
        Suite::Interval,
        Suite::Tree,
        Suite::SelfOrth,
        Suite::Aster,
        Suite::Footprint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Table3 => "table3",
            Suite::Clutter => "clutter",
            Suite::Interval => "interval",
            Suite::Tree => "tree",
            Suite::SelfOrth => "selforth",
            Suite::Aster => "aster",
            Suite::Footprint => "footprint",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub id: String,
    pub predicted: Option<u64>,
    /// `None` when the case was refused by an enumeration limit.
    pub actual: Option<u64>,
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    pub witness: Vec<usize>,
    /// Wall time; not deterministic.
    pub elapsed_ms: u64,
    pub note: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_covered: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub q: u64,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn case(&self, id: &str) -> Option<&CaseRecord> {
        self.cases.iter().find(|c| c.id == id)
    }

    /// The report with every timing field zeroed, for comparisons.
    pub fn without_timings(&self) -> VerificationReport {
        let mut r = self.clone();
        r.cases.iter_mut().for_each(|c| c.elapsed_ms = 0);
        r
    }
}

/// Standing notes attached to every report.
pub fn standing_notes(q: u64) -> Vec<String> {
    let mut notes = vec![
        "a product of d variable-disjoint factors t_k - t_l or t_k - 1 has \
         (q-1)^s - (q-2)^d (q-1)^(s-d) torus zeros; the transposed form \
         (q-1)^s - (q-2)^(s-d) (q-1)^d disagrees already at s = d = 1 and is not used"
            .to_string(),
    ];
    if q == 3 {
        notes.push(
            "at q = 3 every diagonal Gram entry equals (q-1)^s = 2^s != 0 in F_3, so no edge \
             code is self-orthogonal; self-orthogonality cases are recorded without a verdict"
                .to_string(),
        );
    }
    notes
}

struct Outcome {
    predicted: Option<u64>,
    actual: u64,
    matched: Option<bool>,
    witness: Vec<usize>,
    note: String,
}

impl Outcome {
    fn exact(predicted: u64, actual: u64) -> Outcome {
        Outcome {
            predicted: Some(predicted),
            actual,
            matched: Some(predicted == actual),
            witness: Vec::new(),
            note: String::new(),
        }
    }

    fn with_witness(mut self, w: &[FieldElement]) -> Outcome {
        self.witness = w.iter().map(|x| x.code()).collect();
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Outcome {
        self.note = note.into();
        self
    }
}

type CaseFn<'a> = Box<dyn Fn() -> Result<Outcome> + Send + Sync + 'a>;

struct Case<'a> {
    id: String,
    run: CaseFn<'a>,
}

fn case<'a>(id: impl Into<String>, run: impl Fn() -> Result<Outcome> + Send + Sync + 'a) -> Case<'a> {
    Case { id: id.into(), run: Box::new(run) }
}

fn execute(case: &Case<'_>) -> CaseRecord {
    let started = Instant::now();
    let result = (case.run)();
    let elapsed_ms = started.elapsed().as_millis() as u64;
    match result {
        Ok(o) => CaseRecord {
            id: case.id.clone(),
            predicted: o.predicted,
            actual: Some(o.actual),
            matched: o.matched,
            witness: o.witness,
            elapsed_ms,
            note: o.note,
        },
        Err(e) => CaseRecord {
            id: case.id.clone(),
            predicted: None,
            actual: None,
            matched: if e.is_resource_limit() { None } else { Some(false) },
            witness: Vec::new(),
            elapsed_ms,
            note: format!("error: {e}"),
        },
    }
}

/// Zero counts of every polynomial whose support is exactly `support`.
fn support_zero_counts(
    h: &Hypergraph,
    field: &Field,
    support: &[usize],
    limits: &Limits,
) -> Result<BTreeSet<u64>> {
    let q = field.order() as u64;
    let r = support.len() as u32;
    let total = (q - 1).pow(r);
    let mut counts = BTreeSet::new();
    for k in 0..total {
        let mut coeffs = vec![FieldElement::ZERO; h.edge_count()];
        let mut rest = k;
        for &i in support {
            coeffs[i] = field.element((rest % (q - 1) + 1) as usize)?;
            rest /= q - 1;
        }
        let f = EdgePolynomial::new(h, coeffs)?;
        counts.insert(count_zeros(field, &f, limits.max_points)?);
    }
    Ok(counts)
}

/// Every polynomial with one of `supports` has exactly `predicted` zeros.
fn uniform_zero_case(
    h: &Hypergraph,
    field: &Field,
    supports: &[Vec<usize>],
    predicted: u64,
    limits: &Limits,
) -> Result<Outcome> {
    let mut counts = BTreeSet::new();
    for s in supports {
        counts.extend(support_zero_counts(h, field, s, limits)?);
    }
    let actual = if counts.len() == 1 {
        *counts.first().unwrap()
    } else {
        *counts.iter().find(|&&c| c != predicted).unwrap_or(&predicted)
    };
    let matched = counts.len() == 1 && actual == predicted;
    Ok(Outcome {
        predicted: Some(predicted),
        actual,
        matched: Some(matched),
        witness: Vec::new(),
        note: format!("{} supports, zero counts {:?}", supports.len(), counts),
    })
}

fn distance_case(h: &Hypergraph, field: &Field, predicted: u64, limits: &Limits) -> Result<Outcome> {
    let code = EdgeCode::new(h, field, limits)?;
    let d = minimum_distance(&code, limits)?;
    Ok(Outcome::exact(predicted, d.distance as u64).with_witness(&d.witness))
}

fn witness_weight(f: &EdgePolynomial<'_>, field: &Field, limits: &Limits) -> Result<u64> {
    let code = EdgeCode::new(f.hypergraph(), field, limits)?;
    Ok(weight(&code.encode(f.coeffs())?) as u64)
}

fn table1_cases<'a>(field: &'a Field, limits: &'a Limits) -> Result<Vec<Case<'a>>> {
    let q = field.order() as u64;
    let rows: [(&str, Vec<Vec<usize>>, u64); 4] = [
        ("t_it_j", vec![vec![0], vec![1], vec![2]], 0),
        ("(t_i+t_j)t_k", vec![vec![0, 1], vec![1, 2]], (q - 1).pow(3)),
        ("t_it_j+t_kt_h", vec![vec![0, 2]], (q - 1).pow(3)),
        ("t_it_j+t_jt_k+t_kt_h", vec![vec![0, 1, 2]], (q - 1).pow(2) * (q - 2)),
    ];
    let p4 = path_graph(4)?;
    Ok(rows
        .into_iter()
        .enumerate()
        .map(|(i, (label, supports, predicted))| {
            let p4 = p4.clone();
            case(format!("table1/row{}:{label}", i + 1), move || {
                uniform_zero_case(&p4, field, &supports, predicted, limits)
            })
        })
        .collect())
}

fn table2_cases<'a>(field: &'a Field, limits: &'a Limits) -> Result<Vec<Case<'a>>> {
    let q = field.order() as u64;
    let c5 = cycle_graph(5)?;
    let idx = |pairs: &[[usize; 2]]| -> Vec<usize> {
        pairs.iter().map(|e| c5.index_of(e).unwrap()).collect()
    };
    let t4 = (q - 1).pow(4);
    let t3 = (q - 1).pow(3);
    let t2 = (q - 1).pow(2);
    let rows = vec![
        ("t1t2", idx(&[[1, 2]]), 0),
        ("(t1+t3)t2", idx(&[[1, 2], [2, 3]]), t4),
        ("t1t2+t4t5", idx(&[[1, 2], [4, 5]]), t4),
        ("t1t2+t2t3+t3t4", idx(&[[1, 2], [2, 3], [3, 4]]), t4 - t3),
        ("t1t2+t2t3+t4t5", idx(&[[1, 2], [2, 3], [4, 5]]), t4 - t3),
        ("t1t2+t2t3+t3t4+t4t5", idx(&[[1, 2], [2, 3], [3, 4], [4, 5]]), t4 - t3 + t2),
    ];
    let mut cases: Vec<Case<'a>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, (label, support, predicted))| {
            let c5 = c5.clone();
            case(format!("table2/row{}:{label}", i + 1), move || {
                uniform_zero_case(&c5, field, std::slice::from_ref(&support), predicted, limits)
            })
        })
        .collect();
    let cycle = c5.clone();
    cases.push(case("table2/row7:cycle", move || {
        let all: Vec<usize> = (0..5).collect();
        let counts = support_zero_counts(&cycle, field, &all, limits)?;
        let max = *counts.last().unwrap();
        Ok(Outcome {
            predicted: Some(t4),
            actual: max,
            matched: Some(max <= t4),
            witness: Vec::new(),
            note: format!("upper bound; zero counts {counts:?}"),
        })
    }));
    cases.push(case("table2/distance", move || {
        distance_case(&c5, field, t4 * (q - 2), limits)
    }));
    Ok(cases)
}

fn table3_cases<'a>(field: &'a Field, limits: &'a Limits) -> Vec<Case<'a>> {
    let q = field.order() as u64;
    five_vertex_catalog()
        .into_iter()
        .map(|entry| {
            case(format!("table3/row{:02}", entry.row), move || {
                let covered = match entry.graph.clutter_branch()? {
                    Branch::NotCovered => "outside the uniform-clutter theorem",
                    _ => "covered by the uniform-clutter theorem",
                };
                let o = distance_case(&entry.graph, field, entry.formula.distance(q), limits)?;
                Ok(o.with_note(format!(
                    "{}; {} edges; {covered}",
                    entry.formula.label(),
                    entry.graph.edge_count()
                )))
            })
        })
        .collect()
}

/// `(s, d)` placements of the partite-path clutter exercised by the clutter suite.
pub const CLUTTER_CASES: &[(usize, usize)] =
    &[(2, 1), (3, 1), (4, 2), (5, 2), (6, 3), (3, 2), (5, 3), (6, 4), (3, 3)];

/// The uniform clutter used for `(s, d)`: the partite-path clutter on
/// `1..=2d` when `2d <= s`, otherwise the edge-removed partite-path clutter
/// of size `s - d`.
pub fn clutter_instance(s: usize, d: usize) -> Result<Hypergraph> {
    if d == 0 || d > s {
        return Err(Error::BadParams(format!("need 1 <= d <= s, got s={s} d={d}")));
    }
    if 2 * d <= s {
        partite_path_clutter(s, &(1..=2 * d).collect::<Vec<_>>())
    } else if d < s {
        partite_path_clutter(s, &(1..=2 * (s - d)).collect::<Vec<_>>())?.edge_removed()
    } else {
        Hypergraph::new(s, vec![(1..=s).collect()])
    }
}

/// The extremal polynomial for a clutter covered by either case.
pub fn clutter_witness<'h>(
    c: &'h Hypergraph,
    removed: Option<&Hypergraph>,
    field: &Field,
) -> Result<Option<EdgePolynomial<'h>>> {
    match c.clutter_branch()? {
        Branch::First { labels } => Ok(Some(witness_clutter(c, field, &labels)?)),
        Branch::Second { labels } => {
            let removed = removed.ok_or_else(|| Error::BadParams("missing edge-removed clutter".into()))?;
            let f = witness_clutter(removed, field, &labels)?;
            Ok(Some(f.complement(c)?))
        }
        Branch::NotCovered => Ok(None),
    }
}

fn clutter_cases<'a>(field: &'a Field, limits: &'a Limits) -> Vec<Case<'a>> {
    let q = field.order() as u64;
    let mut cases = Vec::new();
    for &(s, d) in CLUTTER_CASES {
        let id = format!("clutter/s{s}d{d}");
        cases.push(case(id.clone(), move || {
            let c = clutter_instance(s, d)?;
            let branch = c.clutter_branch()?;
            let code = EdgeCode::new(&c, field, limits)?;
            let dist = minimum_distance(&code, limits)?;
            let actual = dist.distance as u64;
            Ok(match ClutterCase::of(&branch) {
                Some(case) => Outcome::exact(predict_clutter(s, d, q, case)?, actual)
                    .with_witness(&dist.witness)
                    .with_note(format!("{branch:?}")),
                None => Outcome {
                    predicted: None,
                    actual,
                    matched: None,
                    witness: Vec::new(),
                    note: format!("not covered (d = s); observed distance {actual}"),
                }
                .with_witness(&dist.witness),
            })
        }));
        if d < s {
            cases.push(case(format!("{id}/witness"), move || {
                let c = clutter_instance(s, d)?;
                let removed = c.edge_removed().ok();
                let branch = c.clutter_branch()?;
                let case = ClutterCase::of(&branch)
                    .ok_or_else(|| Error::NotCovered(format!("s={s} d={d}")))?;
                let f = clutter_witness(&c, removed.as_ref(), field)?
                    .ok_or_else(|| Error::NotCovered(format!("s={s} d={d}")))?;
                let w = witness_weight(&f, field, limits)?;
                Ok(Outcome::exact(predict_clutter(s, d, q, case)?, w).with_witness(f.coeffs()))
            }));
        }
    }
    cases
}

/// `(s, d1, d2)` triples exercised by the interval suite.
pub const INTERVAL_CASES: &[(usize, usize, usize)] = &[
    (2, 1, 1),
    (3, 1, 1),
    (3, 2, 1),
    (3, 2, 2),
    (3, 3, 1),
    (4, 2, 1),
    (4, 2, 2),
    (4, 3, 1),
];

fn interval_cases<'a>(field: &'a Field, limits: &'a Limits) -> Vec<Case<'a>> {
    let q = field.order() as u64;
    let mut cases = Vec::new();
    for &(s, d1, d2) in INTERVAL_CASES {
        let id = format!("interval/s{s}d{d1}-{d2}");
        cases.push(case(id.clone(), move || {
            let h = interval_hypergraph(s, d1, d2)?;
            distance_case(&h, field, predict_interval(s, d1, d2, q)?, limits)
        }));
        cases.push(case(format!("{id}/witness"), move || {
            let h = interval_hypergraph(s, d1, d2)?;
            let f = witness_interval(&h, field, d1, d2)?;
            let factors = interval_witness_factors(s, d1, d2)?;
            let binomials = factors.iter().filter(|f| f.is_binomial()).count();
            let zeros = count_zeros(field, &f, limits.max_points)?;
            let expected_zeros = zeros_disjoint_binomials(s, binomials, q)?;
            let w = witness_weight(&f, field, limits)?;
            let o = Outcome::exact(predict_interval(s, d1, d2, q)?, w).with_witness(f.coeffs());
            Ok(Outcome {
                matched: o.matched.map(|m| m && zeros == expected_zeros),
                ..o
            }
            .with_note(format!("{binomials} binomial factors; zeros {zeros} (expected {expected_zeros})")))
        }));
    }
    cases
}

fn tree_graphs() -> Result<Vec<(&'static str, Hypergraph)>> {
    Ok(vec![("P4", path_graph(4)?), ("P5", path_graph(5)?), ("star5", star(5)?)])
}

fn tree_cases<'a>(field: &'a Field, limits: &'a Limits) -> Result<Vec<Case<'a>>> {
    let q = field.order() as u64;
    let mut cases = Vec::new();
    for (name, tree) in tree_graphs()? {
        let s = tree.vertex_count();
        let t_max = (s - 1) / 2;
        let predictions = predict_tree_weights(s, q, t_max)?;
        for (t, predicted) in (1..=t_max).zip(predictions) {
            let tree = tree.clone();
            cases.push(case(format!("tree/{name}/t{t}"), move || {
                let code = EdgeCode::new(&tree, field, limits)?;
                let weights = weight_distribution(&code, limits)?.nonzero_weights();
                // the t-th Hamming weight is the t-th smallest nonzero weight
                let actual = *weights.get(t - 1).unwrap_or(&0) as u64;
                let contained = weights.contains(&(predicted as usize));
                Ok(Outcome::exact(predicted, actual).with_note(format!(
                    "weights {weights:?}; prediction {} the weight set",
                    if contained { "in" } else { "not in" }
                )))
            }));
        }
        let n = tree.edge_count();
        for subset in 1u64..1 << n {
            let support: Vec<usize> = (0..n).filter(|i| subset >> i & 1 == 1).collect();
            let edges: Vec<String> = support
                .iter()
                .map(|&i| tree.edges()[i].iter().map(|v| v.to_string()).collect())
                .collect();
            let tree = tree.clone();
            cases.push(case(format!("tree/{name}/support{{{}}}", edges.join(",")), move || {
                let predicted = zeros_tree_poly(support.len(), s, q)?;
                uniform_zero_case(&tree, field, std::slice::from_ref(&support), predicted, limits)
            }));
        }
    }
    for s in [3usize, 4] {
        for r in 2..=s {
            cases.push(case(format!("linear/s{s}r{r}"), move || {
                let singletons = Hypergraph::new(s, (1..=s).map(|v| vec![v]).collect())?;
                let predicted = zeros_linear_form(r, s, q)?;
                uniform_zero_case(&singletons, field, &[(0..r).collect()], predicted, limits)
            }));
        }
    }
    Ok(cases)
}

/// Hypergraphs checked for self-orthogonality and for edge-removal duality.
pub fn catalog_hypergraphs() -> Result<Vec<(String, Hypergraph)>> {
    let mut out = vec![
        ("P4".to_string(), path_graph(4)?),
        ("C5".to_string(), cycle_graph(5)?),
        ("K5".to_string(), crate::hypergraph::complete_graph(5)?),
        ("interval4-2-1".to_string(), interval_hypergraph(4, 2, 1)?),
    ];
    out.extend(
        five_vertex_catalog()
            .into_iter()
            .map(|e| (format!("table3-row{:02}", e.row), e.graph)),
    );
    Ok(out)
}

fn selforth_cases<'a>(field: &'a Field, limits: &'a Limits) -> Result<Vec<Case<'a>>> {
    let q = field.order() as u64;
    Ok(catalog_hypergraphs()?
        .into_iter()
        .map(|(name, h)| {
            case(format!("selforth/{name}"), move || {
                let code = EdgeCode::new(&h, field, limits)?;
                let gram = code.gram_matrix();
                let nonzero = gram.iter().flatten().filter(|x| !x.is_zero()).count() as u64;
                let diagonal = (0..gram.len()).filter(|&i| !gram[i][i].is_zero()).count();
                Ok(Outcome {
                    predicted: Some(0),
                    actual: nonzero,
                    matched: (q != 3).then_some(nonzero == 0),
                    witness: Vec::new(),
                    note: format!(
                        "nonzero Gram entries {nonzero} of {} ({diagonal} diagonal){}",
                        gram.len() * gram.len(),
                        if q == 3 { "; recorded only at q = 3" } else { "" }
                    ),
                })
            })
        })
        .collect())
}

fn aster_cases<'a>(field: &'a Field, limits: &'a Limits) -> Result<Vec<Case<'a>>> {
    let mut graphs = catalog_hypergraphs()?;
    graphs.push(("star5".to_string(), star(5)?));
    Ok(graphs
        .into_iter()
        .map(|(name, h)| {
            case(format!("aster/{name}"), move || {
                let removed = h.edge_removed()?;
                let a = EdgeCode::new(&h, field, limits)?;
                let b = EdgeCode::new(&removed, field, limits)?;
                let da = minimum_distance(&a, limits)?.distance;
                let db = minimum_distance(&b, limits)?.distance;
                let pa = (a.length(), a.dimension(), da);
                let pb = (b.length(), b.dimension(), db);
                Ok(Outcome {
                    predicted: Some(da as u64),
                    actual: db as u64,
                    matched: Some(pa == pb),
                    witness: Vec::new(),
                    note: format!("(length, dimension, distance) {pa:?} vs edge-removed {pb:?}"),
                })
            })
        })
        .collect())
}

/// Seeded random polynomials over all nonempty squarefree monomials in `s`
/// variables.
pub fn random_polynomials(s: usize, q: u64, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let n = (1usize << s) - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (s as u64) << 32 ^ q << 40);
    (0..count)
        .map(|_| {
            let mut coeffs = vec![0usize; n];
            if rng.gen_bool(0.5) {
                for c in coeffs.iter_mut() {
                    *c = rng.gen_range(0..q as usize);
                }
            }
            let k = rng.gen_range(1..=n.min(6));
            for _ in 0..k {
                coeffs[rng.gen_range(0..n)] = rng.gen_range(1..q as usize);
            }
            coeffs
        })
        .collect()
}

fn footprint_cases<'a>(field: &'a Field, limits: &'a Limits) -> Vec<Case<'a>> {
    let q = field.order() as u64;
    [4usize, 5]
        .into_iter()
        .map(|s| {
            case(format!("footprint/s{s}"), move || {
                let h = interval_hypergraph(s, s, 1)?;
                let mut violations = 0u64;
                let mut tight = 0usize;
                let mut checked = 0usize;
                for coeffs in random_polynomials(s, q, FOOTPRINT_SAMPLES, FOOTPRINT_SEED) {
                    let coeffs = coeffs
                        .into_iter()
                        .map(|c| field.element(c))
                        .collect::<Result<Vec<_>>>()?;
                    let f = EdgePolynomial::new(&h, coeffs)?;
                    if f.is_zero() {
                        continue;
                    }
                    checked += 1;
                    let zeros = count_zeros(field, &f, limits.max_points)?;
                    let bound = footprint_bound(&f, field)?;
                    let degree = f.degree().expect("nonzero polynomial");
                    let squarefree = zeros_disjoint_binomials(s, degree, q)?;
                    violations += (zeros > bound) as u64 + (zeros > squarefree) as u64;
                    tight += (zeros == bound) as usize;
                }
                Ok(Outcome::exact(0, violations).with_note(format!(
                    "{checked} nonzero polynomials, {tight} attain the footprint bound"
                )))
            })
        })
        .collect()
}

fn suite_cases<'a>(suite: Suite, field: &'a Field, limits: &'a Limits) -> Result<Vec<Case<'a>>> {
    Ok(match suite {
        Suite::Table1 => table1_cases(field, limits)?,
        Suite::Table2 => table2_cases(field, limits)?,
        Suite::Table3 => table3_cases(field, limits),
        Suite::Clutter => clutter_cases(field, limits),
        Suite::Interval => interval_cases(field, limits),
        Suite::Tree => tree_cases(field, limits)?,
        Suite::SelfOrth => selforth_cases(field, limits)?,
        Suite::Aster => aster_cases(field, limits)?,
        Suite::Footprint => footprint_cases(field, limits),
    })
}

pub fn run_suite(suite: Suite, q: u64, limits: &Limits) -> Result<VerificationReport> {
    run_suite_with(suite, q, limits, &HashMap::new(), &|_| {})
}

/// Runs a suite, reusing records from `resume` by case id and reporting each
/// freshly computed record through `on_case` as soon as it is done. Cases run
/// in parallel; the report lists them in canonical order.
pub fn run_suite_with(
    suite: Suite,
    q: u64,
    limits: &Limits,
    resume: &HashMap<String, CaseRecord>,
    on_case: &(dyn Fn(&CaseRecord) + Sync),
) -> Result<VerificationReport> {
    let field = Field::new(q)?;
    if q < 3 {
        return Err(Error::DegenerateField(q as usize));
    }
    let cases = suite_cases(suite, &field, limits)?;
    let sink = Mutex::new(on_case);
    let records: Vec<CaseRecord> = cases
        .par_iter()
        .map(|c| {
            if let Some(done) = resume.get(&c.id) {
                return done.clone();
            }
            let record = execute(c);
            (sink.lock().expect("progress sink"))(&record);
            record
        })
        .collect();
    let mut summary = Summary::default();
    for r in &records {
        match r.matched {
            Some(true) => summary.pass += 1,
            Some(false) => summary.fail += 1,
            None => summary.not_covered += 1,
        }
    }
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        q,
        cases: records,
        summary,
        notes: standing_notes(q),
    })
}
