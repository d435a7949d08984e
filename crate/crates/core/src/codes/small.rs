//! Table-driven arithmetic for alphabets of at most 256 symbols, used by the
//! distance searches.

use crate::gf::{Field, FieldElement, Poly};

pub(crate) const MAX_SMALL_ORDER: u64 = 256;

#[derive(Clone, Debug)]
pub(crate) struct SmallField {
    pub q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl SmallField {
    pub fn new(f: &Field) -> Option<SmallField> {
        if f.order() > MAX_SMALL_ORDER {
            return None;
        }
        let q = f.order() as usize;
        let el = |v: usize| f.from_value(v as u64).expect("below order");
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = f.neg(el(a)).value() as u8;
            inv[a] = f.inv(el(a)).map_or(0, |x| x.value() as u8);
            for b in 0..q {
                add[a * q + b] = f.add(el(a), el(b)).value() as u8;
                mul[a * q + b] = f.mul(el(a), el(b)).value() as u8;
            }
        }
        Some(SmallField { q, add, mul, neg, inv })
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }
}

/// The coefficients of `p` as symbols, padded to length `n`.
pub(crate) fn symbols(p: &Poly, n: usize) -> Vec<u8> {
    let mut v = vec![0u8; n];
    for (i, c) in p.coeffs().iter().enumerate() {
        v[i] = c.value() as u8;
    }
    v
}

/// `x^shift * p(x)` as a length-n symbol vector (no wrap-around expected).
pub(crate) fn shifted(p: &[u8], shift: usize, n: usize) -> Vec<u8> {
    let mut v = vec![0u8; n];
    for (i, &c) in p.iter().enumerate() {
        if c != 0 {
            v[(i + shift) % n] = c;
        }
    }
    v
}

#[allow(dead_code)]
pub(crate) fn element(v: u8) -> FieldElement {
    FieldElement(v as u64)
}
