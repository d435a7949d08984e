use std::fmt;

use super::{Field, FieldElement, GfError};

/// A polynomial over a finite field, coefficients low-to-high with trailing
/// zeros stripped. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<u64> = self.coeffs.iter().map(|c| c.value()).collect();
        write!(f, "Poly[{:?}]{:?}", self.field, vals)
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds from encoded element values, low-to-high.
    pub fn from_values(field: &Field, values: &[u64]) -> Result<Poly, GfError> {
        let coeffs = values
            .iter()
            .map(|&v| field.from_value(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(field, coeffs))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::new(field, vec![FieldElement::ONE])
    }

    /// `x - root`.
    pub fn linear(field: &Field, root: FieldElement) -> Poly {
        Poly::new(field, vec![field.neg(root), FieldElement::ONE])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(field: &Field, n: usize) -> Poly {
        let mut c = vec![FieldElement::ZERO; n + 1];
        c[0] = field.neg(FieldElement::ONE);
        c[n] = FieldElement::ONE;
        Poly::new(field, c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn values(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check(&self, other: &Poly) -> Result<(), GfError> {
        if self.field.same_as(&other.field) {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly, GfError> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let c = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or_default();
                let b = other.coeffs.get(i).copied().unwrap_or_default();
                f.add(a, b)
            })
            .collect();
        Ok(Poly::new(f, c))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly, GfError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        let c = self.coeffs.iter().map(|&a| self.field.neg(a)).collect();
        Poly::new(&self.field, c)
    }

    pub fn scale(&self, s: FieldElement) -> Poly {
        let c = self.coeffs.iter().map(|&a| self.field.mul(a, s)).collect();
        Poly::new(&self.field, c)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly, GfError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut c = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, c))
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), GfError> {
        self.check(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(GfError::DivideByZeroPoly)?;
        let lead_inv = f.inv(divisor.leading().unwrap()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut q = vec![FieldElement::ZERO; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = r[top];
            if c.is_zero() {
                continue;
            }
            let t = f.mul(c, lead_inv);
            let shift = top - dd;
            q[shift] = t;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                r[shift + j] = f.sub(r[shift + j], f.mul(t, d));
            }
        }
        r.truncate(dd);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly, GfError> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(self.field.inv(l).unwrap()),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly, GfError> {
        self.check(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Result<Poly, GfError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let g = self.gcd(other)?;
        let (q, _) = self.div_rem(&g)?;
        Ok(q.mul(other)?.monic())
    }

    /// Horner evaluation. `at` must live in this polynomial's field.
    pub fn eval(&self, at: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, at), c))
    }

    /// `x^deg * p(1/x)`: the coefficient list reversed.
    pub fn reciprocal(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(&self.field, c)
    }

    /// The formal derivative.
    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(f.from_int(i as i64), a))
            .collect();
        Poly::new(f, c)
    }
}
