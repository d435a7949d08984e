use serde::Serialize;

use super::{bch_bound, defining_set, dual_of, BchSpec, CodeError, DefiningSet};
use crate::arith;
use crate::cosets::{minus_one_is_power, CosetParams};
use crate::gf::{build_field, Field, FieldElement, GfError, Poly, Subfield};

/// GF(q) inside the splitting field GF(q^r) of `x^n - 1`, `r = ord_n(q)`,
/// with a fixed primitive n-th root of unity β.
#[derive(Clone, Debug)]
pub struct Extension {
    n: u64,
    sub: Subfield,
    beta: FieldElement,
}

impl Extension {
    pub fn new(q: u64, n: u64) -> Result<Extension, CodeError> {
        let (p, k) = arith::prime_power(q).ok_or_else(|| CodeError::InvalidSpec(format!("q={q} is not a prime power")))?;
        let r = CosetParams::new(q, n)?.ord();
        let too_large = CodeError::FieldTooLarge { q, r };
        let big_degree = u32::try_from(r * k as u64).map_err(|_| too_large.clone())?;
        let big = match build_field(p, big_degree) {
            Ok(f) => f,
            Err(GfError::FieldTooLarge { .. }) => return Err(too_large),
            Err(e) => return Err(e.into()),
        };
        let small = build_field(p, k)?;
        let sub = Subfield::new(&big, &small)?;
        let beta = big.nth_root_of_unity(n)?;
        Ok(Extension { n, sub, beta })
    }

    pub fn small(&self) -> &Field {
        self.sub.small()
    }

    pub fn big(&self) -> &Field {
        self.sub.big()
    }

    pub fn beta(&self) -> FieldElement {
        self.beta
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Minimal polynomial of `β^i` over GF(q).
    pub fn minimal_polynomial(&self, i: u64) -> Result<Poly, CodeError> {
        let e = self.big().pow(self.beta, i % self.n);
        Ok(self.sub.minimal_polynomial(e)?)
    }
}

/// `∏ M_(β^l)(x)` over the leaders l of T: monic, of degree |T|, dividing `x^n - 1`.
pub fn generator_polynomial(ds: &DefiningSet, ext: &Extension) -> Result<Poly, CodeError> {
    if ext.n() != ds.n || ext.small().order() != ds.q {
        return Err(CodeError::InvalidSpec("extension does not match the defining set".into()));
    }
    let mut g = Poly::one(ext.small());
    for &(l, _) in &ds.leaders {
        g = g.mul(&ext.minimal_polynomial(l)?)?;
    }
    debug_assert_eq!(g.degree(), Some(ds.total_size as usize));
    Ok(g)
}

/// A cyclic code given by its defining set, with its generator polynomial
/// when the splitting field is small enough to build.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    pub defining_set: DefiningSet,
    pub gen_poly: Option<Poly>,
    ext: Option<Extension>,
}

impl CyclicCode {
    pub fn new(defining_set: DefiningSet, ext: Option<&Extension>) -> Result<CyclicCode, CodeError> {
        let gen_poly = ext.map(|e| generator_polynomial(&defining_set, e)).transpose()?;
        Ok(CyclicCode {
            defining_set,
            gen_poly,
            ext: ext.cloned(),
        })
    }

    pub fn q(&self) -> u64 {
        self.defining_set.q
    }

    pub fn n(&self) -> u64 {
        self.defining_set.n
    }

    pub fn dim(&self) -> u64 {
        self.n() - self.defining_set.total_size
    }

    pub fn extension(&self) -> Option<&Extension> {
        self.ext.as_ref()
    }

    pub fn small_field(&self) -> Option<&Field> {
        self.ext.as_ref().map(|e| e.small())
    }

    /// The BCH bound of the defining set, or 1 when it cannot be materialized.
    pub fn bch_bound(&self) -> u64 {
        bch_bound(&self.defining_set).unwrap_or(1)
    }

    /// `h(x) = (x^n - 1) / g(x)`.
    pub fn check_polynomial(&self) -> Result<Poly, CodeError> {
        let g = self.gen_poly.as_ref().ok_or(CodeError::NoGenerator)?;
        let (h, r) = Poly::x_pow_minus_one(g.field(), self.n() as usize).div_rem(g)?;
        debug_assert!(r.is_zero());
        Ok(h)
    }

    /// The dual code, with defining set `Z_n \ (-T)`.
    pub fn dual(&self) -> Result<CyclicCode, CodeError> {
        CyclicCode::new(dual_of(&self.defining_set)?, self.ext.as_ref())
    }

    /// Whether `p` is a codeword, i.e. divisible by g.
    pub fn contains(&self, p: &Poly) -> Result<bool, CodeError> {
        let g = self.gen_poly.as_ref().ok_or(CodeError::NoGenerator)?;
        Ok(p.degree().map_or(true, |d| d < self.n() as usize) && p.rem(g)?.is_zero())
    }
}

/// `C(q, n, δ, b)` together with the cyclic code it defines.
#[derive(Clone, Debug)]
pub struct BchCode {
    pub spec: BchSpec,
    pub code: CyclicCode,
}

impl BchCode {
    /// Builds the code; the generator polynomial is omitted (not an error)
    /// when the splitting field is too large.
    pub fn new(spec: BchSpec) -> Result<BchCode, CodeError> {
        match Extension::new(spec.q, spec.n) {
            Ok(ext) => BchCode::with_extension(spec, Some(&ext)),
            Err(CodeError::FieldTooLarge { .. }) => BchCode::with_extension(spec, None),
            Err(e) => Err(e),
        }
    }

    pub fn with_extension(spec: BchSpec, ext: Option<&Extension>) -> Result<BchCode, CodeError> {
        let code = CyclicCode::new(defining_set(&spec)?, ext)?;
        Ok(BchCode { spec, code })
    }

    pub fn dim(&self) -> u64 {
        self.code.dim()
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.code.defining_set
    }

    pub fn gen_poly(&self) -> Option<&Poly> {
        self.code.gen_poly.as_ref()
    }
}

/// Both LCD tests for a cyclic code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LcdReport {
    /// `gcd(g, h*) = 1`, with h* the monic reciprocal of the check polynomial.
    pub gcd_criterion: bool,
    pub gcd_degree: usize,
    /// `Some(true)` when -1 is a power of q mod n; `None` (not applicable)
    /// otherwise, since the shortcut is only sufficient.
    pub shortcut: Option<bool>,
}

pub fn is_lcd(code: &CyclicCode) -> Result<LcdReport, CodeError> {
    let g = code.gen_poly.as_ref().ok_or(CodeError::NoGenerator)?;
    let h_star = code.check_polynomial()?.reciprocal().monic();
    let d = g.gcd(&h_star)?;
    let gcd_degree = d.degree().unwrap_or(0);
    let params = code.defining_set.params();
    Ok(LcdReport {
        gcd_criterion: gcd_degree == 0,
        gcd_degree,
        shortcut: minus_one_is_power(&params).then_some(true),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(q: u64, n: u64, d: u64, b: u64) -> BchCode {
        BchCode::new(BchSpec::new(q, n, d, b).unwrap()).unwrap()
    }

    #[test]
    fn generator_degrees() {
        let c = code(3, 28, 2, 0);
        assert_eq!(c.gen_poly().unwrap().values(), vec![2, 1]);
        let c = code(2, 43, 3, 1);
        assert_eq!(c.gen_poly().unwrap().degree(), Some(14));
        let c = code(5, 21, 7, 1);
        assert_eq!(c.gen_poly().unwrap().degree(), Some(18));
        assert_eq!(c.dim(), 3);
    }

    #[test]
    fn generator_roots_are_the_defining_set() {
        let c = code(2, 43, 7, 1);
        let ext = c.code.extension().unwrap();
        let g = ext.big().clone();
        let lifted = Poly::new(&g, c.gen_poly().unwrap().coeffs().iter().map(|&x| {
            Subfield::new(ext.big(), ext.small()).unwrap().embed(x)
        }).collect());
        for i in 0..43 {
            let at = g.pow(ext.beta(), i);
            assert_eq!(lifted.eval(at).is_zero(), c.defining_set().contains(i), "i={i}");
        }
    }

    #[test]
    fn hamming_generator() {
        let c = code(2, 7, 3, 1);
        let g = c.gen_poly().unwrap().values();
        assert!(g == vec![1, 1, 0, 1] || g == vec![1, 0, 1, 1]);
    }

    #[test]
    fn lcd_examples() {
        let r = is_lcd(&code(5, 21, 7, 1).code).unwrap();
        assert!(r.gcd_criterion);
        assert_eq!(r.shortcut, Some(true));
        let r = is_lcd(&code(2, 43, 7, 1).code).unwrap();
        assert!(r.gcd_criterion && r.shortcut == Some(true));
        let r = is_lcd(&code(2, 7, 3, 1).code).unwrap();
        assert!(!r.gcd_criterion);
        assert_eq!(r.gcd_degree, 3);
        assert_eq!(r.shortcut, None);
    }

    #[test]
    fn dual_dimension_is_complementary() {
        let c = code(3, 28, 5, 1);
        let d = c.code.dual().unwrap();
        assert_eq!(c.dim() + d.dim(), 28);
        assert_eq!(d.gen_poly.as_ref().unwrap().degree(), Some(28 - 18));
    }
}
