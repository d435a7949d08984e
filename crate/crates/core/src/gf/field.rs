use std::fmt;
use std::sync::Arc;

use super::prime_poly;
use super::GfError;
use crate::arith;

/// Field orders up to this size get log/antilog tables.
const TABLE_LIMIT: u64 = 1 << 20;

/// An element of GF(p^k), stored as its coefficient vector read as a base-p
/// integer: coefficient `i` (of the modulus root raised to `i`) is digit `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub(crate) u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The base-p integer encoding of the coefficient vector.
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    p: u64,
    k: u32,
    order: u64,
    /// Monic modulus, low-to-high, length k+1. Empty for prime fields.
    modulus: Vec<u64>,
    primitive: FieldElement,
    tables: Option<Tables>,
}

/// The finite field GF(p^k). Cloning is cheap; clones share the same tables.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.k == other.inner.k
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.inner.p, self.inner.k)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.k == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.k)
        }
    }
}

/// Builds GF(p^k) with the lexicographically smallest monic irreducible
/// modulus of degree `k` (coefficients compared from degree k-1 downwards).
pub fn build_field(p: u64, k: u32) -> Result<Field, GfError> {
    if !arith::is_prime(p) {
        return Err(GfError::NotPrime(p));
    }
    if k == 0 {
        return Err(GfError::DegreeZero);
    }
    let order = match arith::checked_pow(p, k) {
        Some(o) if o < 1 << 32 => o,
        _ => return Err(GfError::FieldTooLarge { p, k }),
    };
    let modulus = if k == 1 {
        Vec::new()
    } else {
        // digit k-1 is the most significant digit of the index, so ascending
        // index order is the required lexicographic order
        (0..order)
            .map(|idx| prime_poly::monic_from_index(idx, k, p))
            .find(|f| prime_poly::is_irreducible(f, p))
            .expect("an irreducible polynomial of every degree exists")
    };
    let mut inner = Inner {
        p,
        k,
        order,
        modulus,
        primitive: FieldElement::ONE,
        tables: None,
    };
    inner.primitive = find_primitive(&inner);
    if order <= TABLE_LIMIT {
        inner.tables = Some(build_tables(&inner));
    }
    Ok(Field {
        inner: Arc::new(inner),
    })
}

/// Builds GF(q) for a prime power `q`.
pub fn field_of_order(q: u64) -> Result<Field, GfError> {
    let (p, k) = arith::prime_power(q).ok_or(GfError::NotPrimePower(q))?;
    build_field(p, k)
}

fn digits(inner: &Inner, mut v: u64) -> Vec<u64> {
    let mut out = vec![0u64; inner.k as usize];
    for d in out.iter_mut() {
        *d = v % inner.p;
        v /= inner.p;
    }
    out
}

fn undigits(inner: &Inner, ds: &[u64]) -> u64 {
    ds.iter().rev().fold(0u64, |acc, &d| acc * inner.p + d)
}

fn mul_slow(inner: &Inner, a: u64, b: u64) -> u64 {
    let p = inner.p;
    if inner.k == 1 {
        return arith::mul_mod(a, b, p);
    }
    let da = digits(inner, a);
    let db = digits(inner, b);
    let k = inner.k as usize;
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let r = prime_poly::rem_monic(&prod, &inner.modulus, p);
    let mut out = vec![0u64; k];
    out[..r.len()].copy_from_slice(&r);
    undigits(inner, &out)
}

fn pow_slow(inner: &Inner, base: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_slow(inner, acc, b);
        }
        b = mul_slow(inner, b, b);
        e >>= 1;
    }
    acc
}

fn find_primitive(inner: &Inner) -> FieldElement {
    let group = inner.order - 1;
    if group == 1 {
        return FieldElement::ONE;
    }
    let factors = arith::prime_factors(group);
    (1..inner.order)
        .find(|&g| factors.iter().all(|&f| pow_slow(inner, g, group / f) != 1))
        .map(FieldElement)
        .expect("the multiplicative group is cyclic")
}

fn build_tables(inner: &Inner) -> Tables {
    let group = (inner.order - 1) as usize;
    let mut exp = vec![0u32; group.max(1)];
    let mut log = vec![0u32; inner.order as usize];
    let mut x = 1u64;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = x as u32;
        log[x as usize] = i as u32;
        x = mul_slow(inner, x, inner.primitive.0);
    }
    Tables { exp, log }
}

impl Field {
    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// The monic modulus, low-to-high; empty for a prime field.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The smallest element (by encoded value) of multiplicative order q-1.
    pub fn primitive_element(&self) -> FieldElement {
        self.inner.primitive
    }

    /// Element from a coefficient vector (low-to-high, at most k entries).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement, GfError> {
        if coeffs.len() > self.inner.k as usize || coeffs.iter().any(|&c| c >= self.inner.p) {
            return Err(GfError::BadElement);
        }
        Ok(FieldElement(undigits(&self.inner, coeffs)))
    }

    /// Element from its encoded value.
    pub fn from_value(&self, v: u64) -> Result<FieldElement, GfError> {
        if v >= self.inner.order {
            return Err(GfError::BadElement);
        }
        Ok(FieldElement(v))
    }

    /// Embeds an integer via the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.inner.p as i64) as u64)
    }

    /// Coefficient vector of length k.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        digits(&self.inner, a.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.order).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if self.inner.k == 1 {
            return FieldElement((a.0 + b.0) % p);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut scale = 1u64;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0u64;
        let mut scale = 1u64;
        while x > 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        match &self.inner.tables {
            Some(t) => {
                let group = t.exp.len();
                let s = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                FieldElement(t.exp[if s >= group { s - group } else { s }] as u64)
            }
            None => FieldElement(mul_slow(&self.inner, a.0, b.0)),
        }
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        match &self.inner.tables {
            Some(t) => {
                let group = t.exp.len() as u64;
                let l = t.log[a.0 as usize] as u64;
                FieldElement(t.exp[arith::mul_mod(l, e % group, group) as usize] as u64)
            }
            None => FieldElement(pow_slow(&self.inner, a.0, e)),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        Some(self.pow(a, self.inner.order - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let mut ord = self.inner.order - 1;
        for f in arith::prime_factors(ord) {
            while ord % f == 0 && self.pow(a, ord / f) == FieldElement::ONE {
                ord /= f;
            }
        }
        Some(ord)
    }

    /// The Frobenius map `a -> a^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.inner.p)
    }

    /// `primitive^((order-1)/n)`, an element of multiplicative order exactly `n`.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<FieldElement, GfError> {
        let group = self.inner.order - 1;
        if n == 0 || group % n != 0 {
            return Err(GfError::DoesNotDivide { n, group });
        }
        Ok(self.pow(self.inner.primitive, group / n))
    }

    pub(crate) fn same_as(&self, other: &Field) -> bool {
        self == other
    }
}

/// Free-function form of [`Field::primitive_element`].
pub fn primitive_element(f: &Field) -> FieldElement {
    f.primitive_element()
}

/// Free-function form of [`Field::nth_root_of_unity`].
pub fn nth_root_of_unity(f: &Field, n: u64) -> Result<FieldElement, GfError> {
    f.nth_root_of_unity(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_errors() {
        assert_eq!(build_field(4, 1).unwrap_err(), GfError::NotPrime(4));
        assert_eq!(build_field(2, 0).unwrap_err(), GfError::DegreeZero);
        assert!(matches!(
            build_field(2, 32).unwrap_err(),
            GfError::FieldTooLarge { .. }
        ));
    }

    #[test]
    fn small_fields() {
        let f2 = build_field(2, 1).unwrap();
        assert!(f2.modulus().is_empty());
        assert_eq!(f2.primitive_element(), FieldElement::ONE);

        let f4 = build_field(2, 2).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        // the modulus root x is encoded as 2
        assert_eq!(f4.primitive_element(), FieldElement(2));
        assert_eq!(f4.element_order(FieldElement(2)), Some(3));

        let f7 = build_field(7, 1).unwrap();
        assert_eq!(f7.primitive_element(), FieldElement(3));
        assert_eq!(f7.element_order(FieldElement(2)), Some(3));
    }

    #[test]
    fn roots_of_unity() {
        let f7 = build_field(7, 1).unwrap();
        assert_eq!(f7.nth_root_of_unity(6).unwrap(), f7.primitive_element());
        let b3 = f7.nth_root_of_unity(3).unwrap();
        assert_eq!(b3, f7.pow(f7.primitive_element(), 2));
        assert_eq!(f7.element_order(b3), Some(3));
        assert!(f7.nth_root_of_unity(4).is_err());

        let f64 = build_field(2, 6).unwrap();
        let beta = f64.nth_root_of_unity(21).unwrap();
        assert_eq!(beta, f64.pow(f64.primitive_element(), 3));
        assert_eq!(f64.pow(beta, 21), FieldElement::ONE);
        assert_ne!(f64.pow(beta, 7), FieldElement::ONE);
        assert_ne!(f64.pow(beta, 3), FieldElement::ONE);
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let f = build_field(3, 4).unwrap();
        for a in f.elements() {
            for b in f.elements().step_by(7) {
                assert_eq!(f.mul(a, b).0, mul_slow(&f.inner, a.0, b.0));
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = build_field(2, 22).unwrap();
        assert!(f.inner.tables.is_none());
        let a = f.primitive_element();
        assert_eq!(f.element_order(a), Some((1 << 22) - 1));
        let b = f.inv(a).unwrap();
        assert_eq!(f.mul(a, b), FieldElement::ONE);
    }
}
