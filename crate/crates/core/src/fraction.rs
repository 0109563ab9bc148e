//! Rational functions over `Q`.
//!
//! A [`Fraction`] is an element of `Q(x1, ..., xn)` kept in canonical form:
//! numerator and denominator are coprime and the lexicographically leading
//! coefficient of the denominator is 1. Every ring the pipeline touches
//! (`R[x]`, `R(x)`, `R_m`, `Q(x1)[X]`, ...) embeds in this field, and
//! membership in a particular subring is a predicate on the canonical form
//! rather than a separate type.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gcd::gcd;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::vars::VarContext;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: MultiPoly,
    den: MultiPoly,
}

impl Fraction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.ctx() != den.ctx() {
            return Err(Error::ContextMismatch);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Fraction { den: MultiPoly::one(num.ctx()), num };
        }
        if let Some(c) = den.constant_value() {
            let inv = c.recip();
            return Fraction { num: num.scale(&inv), den: MultiPoly::one(num.ctx()) };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = den.leading_coefficient();
        let inv = lc.recip();
        Fraction { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.ctx());
        Fraction { num: p, den }
    }

    pub fn zero(ctx: &VarContext) -> Self {
        Self::from_poly(MultiPoly::zero(ctx))
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::from_poly(MultiPoly::one(ctx))
    }

    pub fn constant(ctx: &VarContext, c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(ctx, c))
    }

    pub fn ctx(&self) -> &VarContext {
        self.num.ctx()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn to_poly(&self) -> Option<MultiPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn involves(&self, var: usize) -> bool {
        self.num.involves(var) || self.den.involves(var)
    }

    pub fn only_involves(&self, vars: &[usize]) -> bool {
        self.num.only_involves(vars) && self.den.only_involves(vars)
    }

    /// Lies in `K[var]` where `K` is the fraction field of the other variables.
    pub fn is_polynomial_in(&self, var: usize) -> bool {
        !self.den.involves(var)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Fraction) -> Option<Fraction> {
        other.inv().map(|i| self * &i)
    }

    pub fn scale(&self, c: &Rational) -> Fraction {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    pub fn substitute(&self, var: usize, replacement: &MultiPoly) -> Result<Fraction> {
        let num = self.num.substitute(var, replacement);
        let den = self.den.substitute(var, replacement);
        Fraction::new(num, den)
    }

    pub fn evaluate(&self, point: &[(usize, Rational)]) -> Result<Fraction> {
        let den = self.den.evaluate(point);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Fraction::new(self.num.evaluate(point), den)
    }

    pub fn embed(&self, target: &VarContext) -> Result<Fraction> {
        Ok(Fraction { num: self.num.embed(target)?, den: self.den.embed(target)? })
    }

    /// Degree in `var` of an element of `K[var]`; `None` for zero.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        debug_assert!(self.is_polynomial_in(var));
        self.num.degree_in(var)
    }

    /// Leading coefficient in `var` of an element of `K[var]` (lies in `K`).
    pub fn lc_in(&self, var: usize) -> Fraction {
        debug_assert!(self.is_polynomial_in(var));
        Self::canonical(self.num.lc_in(var), self.den.clone())
    }

    /// Coefficients in `var` of an element of `K[var]`.
    pub fn coeffs_in(&self, var: usize) -> alloc::vec::Vec<Fraction> {
        debug_assert!(self.is_polynomial_in(var));
        self.num
            .coeffs_in(var)
            .into_iter()
            .map(|c| Self::canonical(c, self.den.clone()))
            .collect()
    }

    /// Splits `self = q + proper` with `q` in `K[var]` and
    /// `deg_var(num proper) < deg_var(den proper)`, where `K` is the fraction
    /// field of the remaining variables. When the denominator's leading
    /// coefficient in `var` is a unit of a subring `R ⊂ K`, `q` is the
    /// polynomial part of `self` in `R[var]`.
    pub fn polynomial_part(&self, var: usize) -> (Fraction, Fraction) {
        if !self.den.involves(var) {
            return (self.clone(), Fraction::zero(self.ctx()));
        }
        let (k, q, r) = self.num.pseudo_divmod(&self.den, var);
        let scale = self.den.lc_in(var).pow(k);
        let poly = Fraction::canonical(q, scale.clone());
        let proper = Fraction::canonical(r, &scale * &self.den);
        (poly, proper)
    }

    /// Euclidean division in `K[var]`: both operands must have denominators
    /// free of `var`. Returns `(q, r)` with `self = d·q + r`,
    /// `deg_var r < deg_var d`.
    pub fn divmod_in(&self, d: &Fraction, var: usize) -> Result<(Fraction, Fraction)> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !self.is_polynomial_in(var) || !d.is_polynomial_in(var) {
            return Err(Error::InvalidInput("divmod_in needs elements of K[var]".into()));
        }
        // self = A/a, d = B/b; lc(B)^k·A = B·Q + R
        let (k, q0, r0) = self.num.pseudo_divmod(&d.num, var);
        let s = &d.num.lc_in(var).pow(k) * &self.den;
        let q = Fraction::new(&q0 * &d.den, s.clone())?;
        let r = Fraction::new(r0, s)?;
        Ok((q, r))
    }
}

impl<'a> Add<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return Fraction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let bd = self.den.div_exact(&g).unwrap();
        let dd = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &dd) + &(&rhs.num * &bd);
        let den = &self.den * &dd;
        Fraction::canonical(num, den)
    }
}

impl<'a> Sub<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        if self.is_zero() || rhs.is_zero() {
            return Fraction::zero(self.ctx());
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return Fraction::from_poly(&self.num * &rhs.num);
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = rhs.den.div_exact(&g1).unwrap();
        let c = rhs.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        let num = &a * &c;
        let den = &b * &d;
        let lc = den.leading_coefficient();
        let inv = lc.recip();
        Fraction { num: num.scale(&inv), den: den.scale(&inv) }
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction { num: -&self.num, den: self.den.clone() }
    }
}

impl From<MultiPoly> for Fraction {
    fn from(p: MultiPoly) -> Self {
        Fraction::from_poly(p)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}


#[cfg(test)]
mod tests {
    use super::test_support::fr;
    use super::*;
    use crate::poly::test_support::{ctx, p};
    use crate::rational;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_examples() {
        let c = ctx(&["x"]);
        assert!((&fr(&c, "1", "x+1") + &fr(&c, "x", "x+1")).is_one());
        assert_eq!(&fr(&c, "x", "x^2+1") * &fr(&c, "x^2+1", "1"), fr(&c, "x", "1"));
        assert_eq!(
            &fr(&c, "1", "x+1") + &fr(&c, "1", "x+2"),
            Fraction::new(p(&c, "2*x+3"), p(&c, "x^2+3*x+2")).unwrap()
        );
        let s = &fr(&c, "1", "x+1") + &fr(&c, "1", "x+2");
        assert_eq!(s.den(), &p(&c, "x^2+3*x+2"));
    }

    #[test]
    fn canonical_form_is_reduced_and_normalized() {
        let c = ctx(&["x", "y"]);
        let f = fr(&c, "2*x^2 - 2*y^2", "4*x + 4*y");
        assert_eq!(f.num(), &p(&c, "1/2*x - 1/2*y"));
        assert!(f.is_polynomial());
        let g = fr(&c, "1", "3*y*x + 6");
        assert_eq!(g.den(), &p(&c, "x*y + 2"));
        assert_eq!(g.num(), &p(&c, "1/3"));
        assert_eq!(Fraction::new(p(&c, "1"), MultiPoly::zero(&c)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn polynomial_part_examples() {
        let c = ctx(&["x"]);
        let (q, r) = fr(&c, "x^2+1", "x+1").polynomial_part(0);
        assert_eq!(q, fr(&c, "x-1", "1"));
        assert_eq!(r, fr(&c, "2", "x+1"));
        let (q, r) = fr(&c, "x^3+x", "1").polynomial_part(0);
        assert_eq!(q, fr(&c, "x^3+x", "1"));
        assert!(r.is_zero());
        let (q, r) = fr(&c, "1", "x+1").polynomial_part(0);
        assert!(q.is_zero());
        assert_eq!(r, fr(&c, "1", "x+1"));
    }

    #[test]
    fn polynomial_part_with_unit_leading_coefficient() {
        let c = ctx(&["x", "y"]);
        // leading x-coefficient of the denominator is (y+1), a unit near y = 0
        let phi = fr(&c, "x^2", "y*x + x + 1");
        let (q, r) = phi.polynomial_part(0);
        assert!(q.is_polynomial_in(0));
        assert_eq!(&q + &r, phi);
        assert!(r.num().degree_in(0).unwrap_or(0) < r.den().degree_in(0).unwrap());
        assert_eq!(q, fr(&c, "x*y + x - 1", "y^2 + 2*y + 1"));
    }

    #[test]
    fn divmod_over_rational_function_coefficients() {
        let c = ctx(&["x", "y"]);
        // in Q(x)[y]
        let a = fr(&c, "y^2 + x", "x + 1");
        let d = fr(&c, "x*y + 1", "1");
        let (q, r) = a.divmod_in(&d, 1).unwrap();
        assert_eq!(&(&d * &q) + &r, a);
        assert_eq!(r.degree_in(1).unwrap_or(0), 0);
        assert!(q.is_polynomial_in(1) && r.is_polynomial_in(1));
    }

    fn small_poly(c: VarContext, max_deg: u32) -> impl Strategy<Value = MultiPoly> {
        let n = c.len();
        proptest::collection::vec(
            (proptest::collection::vec(0u32..=max_deg, n), -4i64..5, 1i64..3),
            0..4,
        )
        .prop_map(move |ts| {
            MultiPoly::from_terms(&c, ts.into_iter().map(|(e, a, b)| (e, rational::from_frac(a, b))))
                .unwrap()
        })
    }

    pub(crate) fn monic_fraction(c: VarContext) -> impl Strategy<Value = Fraction> {
        (small_poly(c.clone(), 3), 0u32..3, small_poly(c.clone(), 3)).prop_map(move |(n, d, tail)| {
            let low: alloc::vec::Vec<MultiPoly> =
                tail.coeffs_in(0).into_iter().take(d as usize).collect();
            let den = &MultiPoly::from_coeffs_in(&c, 0, &low) + &MultiPoly::var(&c, 0).pow(d);
            Fraction::new(n, den).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn field_axioms(a in monic_fraction(ctx(&["x", "y"])), b in monic_fraction(ctx(&["x", "y"]))) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if let Some(bi) = b.inv() {
                prop_assert_eq!(&(&a * &b) * &bi, a.clone());
            }
        }

        #[test]
        fn decomposition_and_linearity(
            a in monic_fraction(ctx(&["x"])),
            b in monic_fraction(ctx(&["x"])),
            s in -5i64..6, t in -5i64..6,
        ) {
            let (qa, ra) = a.polynomial_part(0);
            prop_assert_eq!(&qa + &ra, a.clone());
            if !ra.is_zero() {
                prop_assert!(ra.num().degree_in(0).unwrap() < ra.den().degree_in(0).unwrap());
            }
            let (qb, _) = b.polynomial_part(0);
            let comb = &a.scale(&rational::from_int(s)) + &b.scale(&rational::from_int(t));
            let (qc, _) = comb.polynomial_part(0);
            prop_assert_eq!(qc, &qa.scale(&rational::from_int(s)) + &qb.scale(&rational::from_int(t)));
        }
    }
}
