//! Arithmetic in GF(p^k) and in polynomial rings over it.
//!
//! Everything here is exact and deterministic: the modulus of an extension
//! field is the lexicographically smallest monic irreducible of its degree,
//! and the primitive element is the smallest one by encoded value.

mod field;
mod poly;
pub(crate) mod prime_poly;

use std::collections::HashMap;

use thiserror::Error;

pub use field::{build_field, field_of_order, nth_root_of_unity, primitive_element, Field, FieldElement};
pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("GF({p}^{k}) has order at least 2^32")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("{n} does not divide the multiplicative group order {group}")]
    DoesNotDivide { n: u64, group: u64 },
    #[error("GF({small}) is not a subfield of GF({big})")]
    NotASubfield { small: u64, big: u64 },
    #[error("element out of range for the field")]
    BadElement,
    #[error("division by the zero polynomial")]
    DivideByZeroPoly,
    #[error("polynomials live over different fields")]
    FieldMismatch,
}

/// A copy of GF(q) inside GF(q^r).
///
/// The image of GF(q) is `{0} ∪ <γ>` with `γ = α^((q^r-1)/(q-1))`. The small
/// field's modulus root is sent to the smallest power of `γ` that is a root
/// of that modulus, which makes the map a field homomorphism.
#[derive(Clone, Debug)]
pub struct Subfield {
    big: Field,
    small: Field,
    up: Vec<FieldElement>,
    down: HashMap<FieldElement, FieldElement>,
}

impl Subfield {
    pub fn new(big: &Field, small: &Field) -> Result<Subfield, GfError> {
        let not_sub = GfError::NotASubfield {
            small: small.order(),
            big: big.order(),
        };
        if big.characteristic() != small.characteristic() || big.degree() % small.degree() != 0 {
            return Err(not_sub);
        }
        let q = small.order();
        let gamma = big.pow(big.primitive_element(), (big.order() - 1) / (q - 1));
        let theta = if small.degree() == 1 {
            FieldElement::ONE
        } else {
            let modulus = small.modulus();
            (0..q - 1)
                .map(|j| big.pow(gamma, j))
                .find(|&cand| {
                    let v = modulus.iter().rev().fold(FieldElement::ZERO, |acc, &c| {
                        big.add(big.mul(acc, cand), big.from_int(c as i64))
                    });
                    v.is_zero()
                })
                .ok_or(not_sub)?
        };
        let mut up = Vec::with_capacity(q as usize);
        let mut down = HashMap::with_capacity(q as usize);
        for e in small.elements() {
            let coeffs = small.coeffs(e);
            let image = coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| {
                big.add(big.mul(acc, theta), big.from_int(c as i64))
            });
            up.push(image);
            down.insert(image, e);
        }
        Ok(Subfield {
            big: big.clone(),
            small: small.clone(),
            up,
            down,
        })
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn embed(&self, e: FieldElement) -> FieldElement {
        self.up[e.value() as usize]
    }

    /// Inverse of [`Subfield::embed`]; `None` outside the image.
    pub fn restrict(&self, e: FieldElement) -> Option<FieldElement> {
        self.down.get(&e).copied()
    }

    /// Lifts a polynomial over the small field to the big field.
    pub fn lift(&self, p: &Poly) -> Poly {
        Poly::new(&self.big, p.coeffs().iter().map(|&c| self.embed(c)).collect())
    }

    /// The conjugates `e, e^q, e^(q^2), ...` until the orbit closes.
    pub fn conjugates(&self, e: FieldElement) -> Vec<FieldElement> {
        let q = self.small.order();
        let mut out = vec![e];
        let mut x = self.big.pow(e, q);
        while x != e {
            out.push(x);
            x = self.big.pow(x, q);
        }
        out
    }

    /// The minimal polynomial of `e` over the small field, as the product of
    /// `(x - c)` over the conjugates of `e`.
    pub fn minimal_polynomial(&self, e: FieldElement) -> Result<Poly, GfError> {
        let mut acc = Poly::one(&self.big);
        for c in self.conjugates(e) {
            acc = acc.mul(&Poly::linear(&self.big, c))?;
        }
        let coeffs = acc
            .coeffs()
            .iter()
            .map(|&c| self.restrict(c).ok_or(GfError::BadElement))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(&self.small, coeffs))
    }
}

/// Minimal polynomial of `e ∈ big` over the subfield of order `small_order`.
pub fn minimal_polynomial(big: &Field, e: FieldElement, small_order: u64) -> Result<Poly, GfError> {
    let small = field_of_order(small_order).map_err(|_| GfError::NotASubfield {
        small: small_order,
        big: big.order(),
    })?;
    Subfield::new(big, &small)?.minimal_polynomial(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_minimal_polynomials() {
        let big = build_field(2, 4).unwrap();
        let one = minimal_polynomial(&big, FieldElement::ONE, 2).unwrap();
        assert_eq!(one.values(), vec![1, 1]);
        let zero = minimal_polynomial(&big, FieldElement::ZERO, 2).unwrap();
        assert_eq!(zero.values(), vec![0, 1]);
    }

    #[test]
    fn minimal_polynomial_order_21() {
        let big = build_field(2, 6).unwrap();
        let beta = big.nth_root_of_unity(21).unwrap();
        let m = minimal_polynomial(&big, beta, 2).unwrap();
        assert_eq!(m.degree(), Some(6));
        assert!(m.values().iter().all(|&c| c <= 1));
        let small = m.field().clone();
        let (_, r) = Poly::x_pow_minus_one(&small, 21).div_rem(&m).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn subfield_embedding_is_a_homomorphism() {
        let big = build_field(2, 6).unwrap();
        let small = build_field(2, 2).unwrap();
        let sub = Subfield::new(&big, &small).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(sub.embed(small.add(a, b)), big.add(sub.embed(a), sub.embed(b)));
                assert_eq!(sub.embed(small.mul(a, b)), big.mul(sub.embed(a), sub.embed(b)));
            }
        }
        assert!(Subfield::new(&big, &build_field(2, 4).unwrap()).is_err());
        assert!(Subfield::new(&big, &build_field(3, 1).unwrap()).is_err());
    }
}
