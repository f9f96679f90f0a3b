//! Evaluation of edge polynomials on the affine torus `(F_q^*)^s` and the
//! resulting edge codes.
//!
//! Torus points are ordered lexicographically by the canonical codes of their
//! coordinates, coordinate 1 most significant. Point `k` therefore has
//! coordinate `j` equal to the element with code `1 + digit_j(k)` where the
//! digits are taken in base `q - 1`. That order fixes the column order of
//! every generator matrix.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::hypergraph::Hypergraph;
use crate::linalg;
use crate::Limits;

const POINT_CHUNK: usize = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint(pub Vec<FieldElement>);

/// The ordered torus `(F_q^*)^s`; points are generated on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Torus {
    q: usize,
    s: usize,
    len: usize,
}

impl Torus {
    pub fn new(field: &Field, s: usize, max_points: u64) -> Result<Torus> {
        if s == 0 {
            return Err(Error::BadParams("torus needs s >= 1".into()));
        }
        let q = field.order();
        let required = ((q - 1) as u128).checked_pow(s as u32).unwrap_or(u128::MAX);
        if required > max_points as u128 {
            return Err(Error::TooLarge { required, limit: max_points });
        }
        Ok(Torus { q, s, len: required as usize })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dimension(&self) -> usize {
        self.s
    }

    /// Coordinate codes of point `k`, written into `out`.
    fn digits_into(&self, mut k: usize, out: &mut [u16]) {
        let base = self.q - 1;
        for slot in out.iter_mut().rev() {
            *slot = (k % base + 1) as u16;
            k /= base;
        }
    }

    pub fn point(&self, k: usize) -> TorusPoint {
        let mut codes = vec![0u16; self.s];
        self.digits_into(k, &mut codes);
        TorusPoint(codes.into_iter().map(FieldElement::from_code).collect())
    }

    pub fn points(&self) -> impl Iterator<Item = TorusPoint> + '_ {
        (0..self.len).map(|k| self.point(k))
    }

    /// Visits points `start..end` in order, passing the coordinate codes.
    fn for_each_in(&self, start: usize, end: usize, mut visit: impl FnMut(&[u16])) {
        if start >= end {
            return;
        }
        let top = (self.q - 1) as u16;
        let mut codes = vec![0u16; self.s];
        self.digits_into(start, &mut codes);
        for _ in start..end {
            visit(&codes);
            for c in codes.iter_mut().rev() {
                if *c < top {
                    *c += 1;
                    break;
                }
                *c = 1;
            }
        }
    }
}

pub fn enumerate_torus(field: &Field, s: usize, max_points: u64) -> Result<Vec<TorusPoint>> {
    Ok(Torus::new(field, s, max_points)?.points().collect())
}

/// `sum_i coeffs[i] * prod_{j in e_i} t_j` for a fixed hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePolynomial<'h> {
    hypergraph: &'h Hypergraph,
    coeffs: Vec<FieldElement>,
}

impl<'h> EdgePolynomial<'h> {
    pub fn new(hypergraph: &'h Hypergraph, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.len() != hypergraph.edge_count() {
            return Err(Error::LengthMismatch {
                expected: hypergraph.edge_count(),
                actual: coeffs.len(),
            });
        }
        Ok(EdgePolynomial { hypergraph, coeffs })
    }

    pub fn zero(hypergraph: &'h Hypergraph) -> Self {
        EdgePolynomial {
            hypergraph,
            coeffs: vec![FieldElement::ZERO; hypergraph.edge_count()],
        }
    }

    pub fn hypergraph(&self) -> &'h Hypergraph {
        self.hypergraph
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Indices of the edges with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect()
    }

    /// Largest edge size in the support, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.support()
            .into_iter()
            .map(|i| self.hypergraph.edges()[i].len())
            .max()
    }

    /// The same coefficients carried over to the edge-removed hypergraph, so
    /// that `complement(f)(P) = (prod_j P_j) * f(1/P)`.
    pub fn complement<'r>(&self, removed: &'r Hypergraph) -> Result<EdgePolynomial<'r>> {
        let s = self.hypergraph.vertex_count();
        let mut coeffs = vec![FieldElement::ZERO; removed.edge_count()];
        for (edge, &c) in self.hypergraph.edges().iter().zip(&self.coeffs) {
            let comp: Vec<usize> = (1..=s).filter(|v| !edge.contains(v)).collect();
            let idx = removed
                .index_of(&comp)
                .ok_or_else(|| Error::EmbeddingMissing(comp.clone()))?;
            coeffs[idx] = c;
        }
        EdgePolynomial::new(removed, coeffs)
    }
}

fn eval_codes(field: &Field, edges: &[Vec<usize>], coeffs: &[FieldElement], codes: &[u16]) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    for (edge, &c) in edges.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let mut term = c;
        for &v in edge {
            term = field.mul(term, FieldElement::from_code(codes[v - 1]));
        }
        acc = field.add(acc, term);
    }
    acc
}

pub fn evaluate(field: &Field, f: &EdgePolynomial<'_>, point: &TorusPoint) -> FieldElement {
    let codes: Vec<u16> = point.0.iter().map(|e| e.code() as u16).collect();
    eval_codes(field, f.hypergraph.edges(), &f.coeffs, &codes)
}

/// Number of torus points where `f` vanishes, by direct evaluation.
pub fn count_zeros(field: &Field, f: &EdgePolynomial<'_>, max_points: u64) -> Result<u64> {
    let torus = Torus::new(field, f.hypergraph.vertex_count(), max_points)?;
    let edges = f.hypergraph.edges();
    let chunks = torus.len().div_ceil(POINT_CHUNK);
    Ok((0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * POINT_CHUNK;
            let end = (start + POINT_CHUNK).min(torus.len());
            let mut zeros = 0u64;
            torus.for_each_in(start, end, |codes| {
                if eval_codes(field, edges, &f.coeffs, codes).is_zero() {
                    zeros += 1;
                }
            });
            zeros
        })
        .sum())
}

pub fn weight(word: &[FieldElement]) -> usize {
    word.iter().filter(|x| !x.is_zero()).count()
}

/// The edge code of a hypergraph: the span of the evaluated edge monomials.
#[derive(Debug, Clone)]
pub struct EdgeCode {
    field: Field,
    hypergraph: Hypergraph,
    torus: Torus,
    rows: Vec<Vec<FieldElement>>,
    rank: usize,
}

impl EdgeCode {
    pub fn new(hypergraph: &Hypergraph, field: &Field, limits: &Limits) -> Result<EdgeCode> {
        if field.order() < 3 {
            return Err(Error::DegenerateField(field.order()));
        }
        if hypergraph.edge_count() == 0 {
            return Err(Error::BadParams("hypergraph has no edges".into()));
        }
        let torus = Torus::new(field, hypergraph.vertex_count(), limits.max_points)?;
        let rows: Vec<Vec<FieldElement>> = hypergraph
            .edges()
            .par_iter()
            .map(|edge| {
                let mut row = Vec::with_capacity(torus.len());
                torus.for_each_in(0, torus.len(), |codes| {
                    let v = edge.iter().fold(FieldElement::ONE, |acc, &j| {
                        field.mul(acc, FieldElement::from_code(codes[j - 1]))
                    });
                    row.push(v);
                });
                row
            })
            .collect();
        let rank = linalg::rank(field, &rows);
        Ok(EdgeCode {
            field: field.clone(),
            hypergraph: hypergraph.clone(),
            torus,
            rows,
            rank,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn torus(&self) -> &Torus {
        &self.torus
    }

    pub fn length(&self) -> usize {
        self.torus.len()
    }

    /// Rank of the generator matrix.
    pub fn dimension(&self) -> usize {
        self.rank
    }

    /// Generator matrix rows, one per edge in canonical order.
    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn encode(&self, coeffs: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if coeffs.len() != self.rows.len() {
            return Err(Error::LengthMismatch {
                expected: self.rows.len(),
                actual: coeffs.len(),
            });
        }
        let f = &self.field;
        let mut word = vec![FieldElement::ZERO; self.length()];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            if c.is_zero() {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(c, g));
            }
        }
        Ok(word)
    }

    pub fn polynomial(&self, coeffs: Vec<FieldElement>) -> Result<EdgePolynomial<'_>> {
        EdgePolynomial::new(&self.hypergraph, coeffs)
    }

    /// `G * G^T` under the standard inner product on `F_q^n`.
    pub fn gram_matrix(&self) -> Vec<Vec<FieldElement>> {
        let f = &self.field;
        let n = self.rows.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .into_par_iter()
                    .map(|j| {
                        self.rows[i]
                            .iter()
                            .zip(&self.rows[j])
                            .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gram_matrix().iter().flatten().all(|x| x.is_zero())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|x| x.code().to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export<'a> {
            q: usize,
            s: usize,
            edges: &'a [Vec<usize>],
            point_order: &'static str,
            matrix: Vec<Vec<usize>>,
        }
        serde_json::to_string(&Export {
            q: self.field.order(),
            s: self.hypergraph.vertex_count(),
            edges: self.hypergraph.edges(),
            point_order: "lex-canonical",
            matrix: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x.code()).collect())
                .collect(),
        })
        .expect("matrix serializes")
    }
}
