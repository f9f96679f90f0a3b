//! Exact code parameters by exhaustive enumeration, plus the closed-form zero
//! counts and the footprint bound they are checked against.
//!
//! A message `λ` is identified with the integer `Σ λ_i q^(n-1-i)` (digits are
//! canonical element codes, `λ_0` most significant). Enumeration walks index
//! ranges in ascending order, split into fixed-size chunks that are processed
//! independently and then merged with an associative reduction, so results do
//! not depend on how many workers ran.
//!
//! With projective collapse only messages whose first nonzero coefficient is 1
//! are visited: for leading position `i` those are exactly the indices in
//! `[q^k, 2 q^k)` with `k = n - 1 - i`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::hypergraph::mask_of;
use crate::torus::{EdgeCode, EdgePolynomial};
use crate::Limits;

const MESSAGE_CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceResult {
    pub distance: usize,
    pub witness: Vec<FieldElement>,
    pub search_space: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    /// Weight -> number of codewords, including `A_0 = 1`.
    pub counts: BTreeMap<usize, u64>,
    pub length: usize,
    pub dimension: usize,
}

impl WeightDistribution {
    pub fn minimum_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }

    /// Distinct nonzero weights in ascending order.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }
}

/// Index ranges visited by the search, ascending.
fn message_ranges(q: u64, n: usize, projective: bool) -> Result<Vec<(u64, u64)>> {
    let overflow = || Error::SearchTooLarge {
        required: (q as u128).saturating_pow(n as u32),
        limit: u64::MAX,
    };
    let total = q.checked_pow(n as u32).ok_or_else(overflow)?;
    if projective {
        (0..n as u32)
            .map(|k| {
                let lo = q.pow(k);
                Ok((lo, 2 * lo))
            })
            .collect()
    } else {
        Ok(vec![(1, total)])
    }
}

fn checked_ranges(code: &EdgeCode, limits: &Limits) -> Result<(Vec<(u64, u64)>, u64)> {
    let q = code.field().order() as u64;
    let n = code.rows().len();
    let required = if limits.full_enumeration {
        (q as u128).pow(n as u32) - 1
    } else {
        ((q as u128).pow(n as u32) - 1) / (q as u128 - 1)
    };
    if required > limits.max_messages as u128 {
        return Err(Error::SearchTooLarge { required, limit: limits.max_messages });
    }
    let ranges = message_ranges(q, n, !limits.full_enumeration)?;
    Ok((ranges, required as u64))
}

fn chunks(ranges: &[(u64, u64)]) -> Vec<(u64, u64)> {
    ranges
        .iter()
        .flat_map(|&(lo, hi)| {
            (lo..hi)
                .step_by(MESSAGE_CHUNK as usize)
                .map(move |start| (start, (start + MESSAGE_CHUNK).min(hi)))
        })
        .collect()
}

pub fn message_of_index(q: u64, n: usize, mut index: u64) -> Vec<FieldElement> {
    let mut out = vec![FieldElement::ZERO; n];
    for slot in out.iter_mut().rev() {
        *slot = FieldElement::from_code((index % q) as u16);
        index /= q;
    }
    out
}

/// Walks messages `start..end`, calling `visit(index, weight)` for each.
/// The codeword is updated in place as the message's digits tick over.
fn walk(code: &EdgeCode, start: u64, end: u64, mut visit: impl FnMut(u64, usize)) {
    let field = code.field();
    let q = field.order() as u64;
    let rows = code.rows();
    let n = rows.len();
    let len = code.length();

    let mut digits = message_of_index(q, n, start);
    let mut word = code.encode(&digits).expect("message length matches");
    let mut zeros = word.iter().filter(|x| x.is_zero()).count();

    for index in start..end {
        visit(index, len - zeros);
        if index + 1 == end {
            break;
        }
        for i in (0..n).rev() {
            let old = digits[i];
            let new = FieldElement::from_code(((old.code() as u64 + 1) % q) as u16);
            digits[i] = new;
            let delta = field.sub(new, old);
            let scaled = field.mul_row(delta);
            for (w, g) in word.iter_mut().zip(&rows[i]) {
                let before = w.is_zero();
                *w = FieldElement::from_code(field.add_row(*w)[scaled[g.code()] as usize]);
                match (before, w.is_zero()) {
                    (true, false) => zeros -= 1,
                    (false, true) => zeros += 1,
                    _ => {}
                }
            }
            if !new.is_zero() {
                break;
            }
        }
    }
}

/// Exact minimum distance with the first attaining message as witness.
pub fn minimum_distance(code: &EdgeCode, limits: &Limits) -> Result<DistanceResult> {
    let started = Instant::now();
    let (ranges, search_space) = checked_ranges(code, limits)?;
    let best = chunks(&ranges)
        .into_par_iter()
        .map(|(start, end)| {
            let mut best = (usize::MAX, u64::MAX);
            walk(code, start, end, |index, w| {
                if w > 0 && (w, index) < best {
                    best = (w, index);
                }
            });
            best
        })
        .reduce(|| (usize::MAX, u64::MAX), std::cmp::min);
    if best.0 == usize::MAX {
        return Err(Error::BadParams("code has no nonzero codeword".into()));
    }
    let q = code.field().order() as u64;
    Ok(DistanceResult {
        distance: best.0,
        witness: message_of_index(q, code.rows().len(), best.1),
        search_space,
        elapsed: started.elapsed(),
    })
}

pub fn weight_distribution(code: &EdgeCode, limits: &Limits) -> Result<WeightDistribution> {
    let (ranges, _) = checked_ranges(code, limits)?;
    let len = code.length();
    let hist = chunks(&ranges)
        .into_par_iter()
        .map(|(start, end)| {
            let mut h = vec![0u64; len + 1];
            walk(code, start, end, |_, w| h[w] += 1);
            h
        })
        .reduce(
            || vec![0u64; len + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let scale = if limits.full_enumeration {
        1
    } else {
        code.field().order() as u64 - 1
    };
    let mut counts: BTreeMap<usize, u64> = hist
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(w, c)| (w, c * scale))
        .collect();
    *counts.entry(0).or_insert(0) += 1;
    Ok(WeightDistribution {
        counts,
        length: len,
        dimension: code.dimension(),
    })
}

fn check_q(q: u64) -> Result<()> {
    if q < 3 {
        Err(Error::BadParams(format!("need q >= 3, got {q}")))
    } else {
        Ok(())
    }
}

/// Zeros on the torus of a product of `d` variable-disjoint factors of the
/// form `t_k - t_l` or `t_k - 1`.
pub fn zeros_disjoint_binomials(s: usize, d: usize, q: u64) -> Result<u64> {
    check_q(q)?;
    if d > s {
        return Err(Error::BadParams(format!("need d <= s, got d={d} s={s}")));
    }
    Ok((q - 1).pow(s as u32) - (q - 2).pow(d as u32) * (q - 1).pow((s - d) as u32))
}

/// `Σ_{i=1}^{r-1} (-1)^(i-1) (q-1)^(s-i)`.
fn alternating_sum(r: usize, s: usize, q: u64) -> u64 {
    let mut acc: i128 = 0;
    for i in 1..r {
        let term = ((q - 1) as i128).pow((s - i) as u32);
        acc += if i % 2 == 1 { term } else { -term };
    }
    acc as u64
}

/// Zeros of a linear form with `r` nonzero coefficients.
pub fn zeros_linear_form(r: usize, s: usize, q: u64) -> Result<u64> {
    check_q(q)?;
    if !(2 <= r && r <= s) {
        return Err(Error::BadParams(format!("need 2 <= r <= s, got r={r} s={s}")));
    }
    Ok(alternating_sum(r, s, q))
}

/// Zeros of a polynomial supported on `r` edges of a tree (or forest).
pub fn zeros_tree_poly(r: usize, s: usize, q: u64) -> Result<u64> {
    check_q(q)?;
    if r == 0 || s < r + 1 {
        return Err(Error::BadParams(format!("need 1 <= r <= s-1, got r={r} s={s}")));
    }
    Ok(alternating_sum(r, s, q))
}

/// Graded reverse lexicographic comparison of squarefree monomials with
/// `t_1 > t_2 > ... > t_s`.
pub fn grevlex_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match a.len().cmp(&b.len()) {
        Ordering::Equal => {}
        other => return other,
    }
    let (ma, mb) = (mask_of(a), mask_of(b));
    let diff = ma ^ mb;
    if diff == 0 {
        return Ordering::Equal;
    }
    // the last variable where the exponents differ; the larger monomial has
    // the smaller exponent there
    let last = 63 - diff.leading_zeros();
    if ma >> last & 1 == 1 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Leading monomial (as an edge index) under graded reverse lex order.
pub fn leading_edge(f: &EdgePolynomial<'_>) -> Option<usize> {
    let edges = f.hypergraph().edges();
    f.support()
        .into_iter()
        .max_by(|&i, &j| grevlex_cmp(&edges[i], &edges[j]))
}

/// Upper bound on the torus zeros of `f` from its leading monomial `t^a`:
/// `(q-1)^s - Π_k ((q-1) - a_k)`.
pub fn footprint_bound(f: &EdgePolynomial<'_>, field: &Field) -> Result<u64> {
    let lead = leading_edge(f).ok_or(Error::ZeroPolynomial)?;
    let q = field.order() as u64;
    let s = f.hypergraph().vertex_count();
    let a = &f.hypergraph().edges()[lead];
    let standard: u64 = (1..=s)
        .map(|v| if a.contains(&v) { q - 2 } else { q - 1 })
        .product();
    Ok((q - 1).pow(s as u32) - standard)
}
