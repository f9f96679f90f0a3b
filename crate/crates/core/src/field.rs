//! Table-driven arithmetic in `F_q` for prime powers `q <= 1024`.
//!
//! Elements are identified by a canonical code in `0..q`. For a prime field
//! the code is the residue. For `F_{p^m}` an element is a polynomial
//! `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` reduced modulo a fixed monic
//! irreducible polynomial, and its code is `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//! The reduction polynomial for every supported `(p, m)` is the smallest monic
//! irreducible one when its lower coefficients are read as that same base-`p`
//! number, so encodings never depend on the run or the machine.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: u64 = 1024;

/// Lower coefficients `c_0..c_{m-1}` of the monic reduction polynomial
/// `x^m + c_{m-1} x^{m-1} + ... + c_0` for each extension field.
const MODULI: &[(u16, u32, &[u16])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 0, 0, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0]),
    (2, 9, &[1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (3, 2, &[1, 0]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 1, 0, 0]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (3, 6, &[2, 1, 0, 0, 0, 0]),
    (5, 2, &[2, 0]),
    (5, 3, &[1, 1, 0]),
    (5, 4, &[2, 0, 0, 0]),
    (7, 2, &[1, 0]),
    (7, 3, &[2, 0, 0]),
    (11, 2, &[1, 0]),
    (13, 2, &[2, 0]),
    (17, 2, &[3, 0]),
    (19, 2, &[1, 0]),
    (23, 2, &[1, 0]),
    (29, 2, &[2, 0]),
    (31, 2, &[1, 0]),
];

/// An element of some `F_q`, stored as its canonical code.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
#[repr(transparent)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn code(self) -> usize {
        self.0 as usize
    }

    /// Callers guarantee `code < q` for the field the element is used with.
    #[inline]
    pub(crate) fn from_code(code: u16) -> FieldElement {
        FieldElement(code)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    q: usize,
    p: usize,
    m: u32,
    /// Full monic modulus, low degree first. `[0, 1]` (i.e. `x`) for prime fields.
    modulus: Vec<u16>,
    generator: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    log: Vec<u32>,
    exp: Vec<u16>,
}

/// A finite field `F_q`. Cloning is cheap; the lookup tables are shared.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.t.q)
            .field("p", &self.t.p)
            .field("m", &self.t.m)
            .field("modulus", &self.t.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.t.q == other.t.q
    }
}

impl Eq for Field {}

/// Splits `q` into `(p, m)` with `q = p^m`, or reports why it cannot.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotAPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::NotAPrimePower(q));
    }
    Ok((p, m))
}

fn modulus_for(p: usize, m: u32) -> Vec<u16> {
    if m == 1 {
        return vec![0, 1];
    }
    let (_, _, low) = MODULI
        .iter()
        .find(|(pp, mm, _)| *pp as usize == p && *mm == m)
        .expect("every supported extension field has a modulus");
    let mut full = low.to_vec();
    full.push(1);
    full
}

fn digits(code: usize, p: usize, m: u32) -> Vec<usize> {
    let mut c = code;
    (0..m)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Schoolbook multiplication modulo the reduction polynomial; only used to
/// bootstrap the exp/log tables.
fn slow_mul(a: usize, b: usize, p: usize, m: u32, modulus: &[u16]) -> usize {
    if m == 1 {
        return a * b % p;
    }
    let m = m as usize;
    let da = digits(a, p, m as u32);
    let db = digits(b, p, m as u32);
    let mut prod = vec![0usize; 2 * m - 1];
    for (i, x) in da.iter().enumerate() {
        for (j, y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (m..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
        for (k, &mk) in modulus[..m].iter().enumerate() {
            let sub = c * mk as usize % p;
            prod[deg - m + k] = (prod[deg - m + k] + p - sub) % p;
        }
        prod[deg] = 0;
    }
    undigits(&prod[..m], p)
}

impl Field {
    /// Builds `F_q` with its canonical encoding.
    pub fn new(q: u64) -> Result<Field> {
        if q > MAX_ORDER {
            // still distinguish e.g. 2000 from 1031
            return match prime_power(q) {
                Ok(_) => Err(Error::Unsupported(q)),
                Err(e) => Err(e),
            };
        }
        let (p, m) = prime_power(q)?;
        let (q, p) = (q as usize, p as usize);
        let modulus = modulus_for(p, m);

        let add: Vec<u16> = if m == 1 {
            (0..q * q).map(|k| ((k / q + k % q) % p) as u16).collect()
        } else {
            let ds: Vec<Vec<usize>> = (0..q).map(|c| digits(c, p, m)).collect();
            let mut add = vec![0u16; q * q];
            for a in 0..q {
                for b in 0..q {
                    let sum: Vec<usize> =
                        ds[a].iter().zip(&ds[b]).map(|(x, y)| (x + y) % p).collect();
                    add[a * q + b] = undigits(&sum, p) as u16;
                }
            }
            add
        };
        let neg: Vec<u16> = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16)
            .collect();

        let order = q - 1;
        let generator = (1..q)
            .find(|&g| {
                let mut x = g;
                for k in 1..=order {
                    if x == 1 {
                        return k == order;
                    }
                    x = slow_mul(x, g, p, m, &modulus);
                }
                false
            })
            .expect("the multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u16; order];
        let mut log = vec![u32::MAX; q];
        let mut x = 1usize;
        for (k, e) in exp.iter_mut().enumerate() {
            *e = x as u16;
            log[x] = k as u32;
            x = slow_mul(x, generator, p, m, &modulus);
        }

        let mut mul = vec![0u16; q * q];
        let mut inv = vec![0u16; q];
        for a in 1..q {
            let la = log[a] as usize;
            for b in 1..q {
                mul[a * q + b] = exp[(la + log[b] as usize) % order];
            }
            inv[a] = exp[(order - la) % order];
        }

        Ok(Field {
            t: Arc::new(Tables {
                q,
                p,
                m,
                modulus,
                generator: generator as u16,
                add,
                mul,
                neg,
                inv,
                log,
                exp,
            }),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.t.q
    }

    pub fn characteristic(&self) -> usize {
        self.t.p
    }

    pub fn degree(&self) -> u32 {
        self.t.m
    }

    /// Coefficients of the monic reduction polynomial, lowest degree first.
    pub fn modulus(&self) -> &[u16] {
        &self.t.modulus
    }

    pub fn generator(&self) -> FieldElement {
        FieldElement(self.t.generator)
    }

    pub fn element(&self, code: usize) -> Result<FieldElement> {
        if code < self.t.q {
            Ok(FieldElement(code as u16))
        } else {
            Err(Error::BadParams(format!(
                "code {code} is not an element of F_{}",
                self.t.q
            )))
        }
    }

    /// Base-`p` coefficient digits of an element, lowest degree first.
    pub fn decode(&self, a: FieldElement) -> Vec<usize> {
        digits(a.code(), self.t.p, self.t.m)
    }

    pub fn encode(&self, coeffs: &[usize]) -> Result<FieldElement> {
        if coeffs.len() != self.t.m as usize || coeffs.iter().any(|&c| c >= self.t.p) {
            return Err(Error::BadParams(format!(
                "{coeffs:?} is not a coefficient vector of F_{}",
                self.t.q
            )));
        }
        Ok(FieldElement(undigits(coeffs, self.t.p) as u16))
    }

    /// The image of an integer under `Z -> F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.t.p as i64) as u16)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.t.add[a.code() * self.t.q + b.code()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.t.mul[a.code() * self.t.q + b.code()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.t.neg[a.code()])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElement(self.t.inv[a.code()]))
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` with the convention `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let order = (self.t.q - 1) as u64;
        let l = self.t.log[a.code()] as u64;
        FieldElement(self.t.exp[((l * (e % order)) % order) as usize])
    }

    /// Discrete logarithm to the base of [`Field::generator`].
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (!a.is_zero()).then(|| self.t.log[a.code()])
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.t.q as u16).map(FieldElement)
    }

    /// The multiplicative group in ascending code order.
    pub fn nonzero_elements(&self) -> Vec<FieldElement> {
        (1..self.t.q as u16).map(FieldElement).collect()
    }

    #[inline]
    pub(crate) fn mul_row(&self, a: FieldElement) -> &[u16] {
        let q = self.t.q;
        &self.t.mul[a.code() * q..(a.code() + 1) * q]
    }

    #[inline]
    pub(crate) fn add_row(&self, a: FieldElement) -> &[u16] {
        let q = self.t.q;
        &self.t.add[a.code() * q..(a.code() + 1) * q]
    }
}
