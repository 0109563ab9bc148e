//! Multivariate polynomials over `Q` in a fixed variable context.
//!
//! Terms live in a `BTreeMap` keyed by dense exponent vectors, so iteration
//! order is the lexicographic monomial order induced by the context and the
//! leading term is the last entry. Zero coefficients are never stored, which
//! makes structural equality coincide with polynomial equality.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::vars::VarContext;

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ctx: VarContext,
    terms: BTreeMap<Exponent, Rational>,
}

impl MultiPoly {
    pub fn zero(ctx: &VarContext) -> Self {
        MultiPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &VarContext, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(vec![0; ctx.len()], c);
        }
        p
    }

    pub fn from_int(ctx: &VarContext, c: i64) -> Self {
        Self::constant(ctx, rational::from_int(c))
    }

    /// The variable with index `i`.
    pub fn var(ctx: &VarContext, i: usize) -> Self {
        Self::monomial(ctx, Self::unit_exponent(ctx.len(), i, 1), Rational::one())
    }

    pub fn var_named(ctx: &VarContext, name: &str) -> Result<Self> {
        Ok(Self::var(ctx, ctx.index_of(name)?))
    }

    pub fn monomial(ctx: &VarContext, e: Exponent, c: Rational) -> Self {
        assert_eq!(e.len(), ctx.len(), "exponent length must match context");
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(
        ctx: &VarContext,
        terms: I,
    ) -> Result<Self> {
        let mut p = Self::zero(ctx);
        for (e, c) in terms {
            if e.len() != ctx.len() {
                return Err(Error::InvalidInput(alloc::format!(
                    "exponent vector of length {} in a {}-variable context",
                    e.len(),
                    ctx.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn unit_exponent(n: usize, i: usize, k: u32) -> Exponent {
        let mut e = vec![0; n];
        e[i] = k;
        e
    }

    fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.last_key_value()
    }

    /// Coefficient of the lexicographically leading term.
    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&v| self.involves(v)).collect()
    }

    /// Only variables from `vars` occur.
    pub fn only_involves(&self, vars: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().enumerate().all(|(i, &k)| k == 0 || vars.contains(&i)))
    }

    /// Degree in `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficients as a polynomial in `var`: entry `k` multiplies `var^k`.
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let Some(d) = self.degree_in(var) else {
            return Vec::new();
        };
        let mut out = vec![Self::zero(&self.ctx); d as usize + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = core::mem::replace(&mut e2[var], 0);
            out[k as usize].terms.insert(e2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(ctx: &VarContext, var: usize, coeffs: &[MultiPoly]) -> Self {
        let mut p = Self::zero(ctx);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, a) in &c.terms {
                let mut e2 = e.clone();
                e2[var] += k as u32;
                p.add_term(e2, a.clone());
            }
        }
        p
    }

    /// Leading coefficient as a polynomial in `var`.
    pub fn lc_in(&self, var: usize) -> MultiPoly {
        self.coeff_of_power(var, self.degree_in(var).unwrap_or(0))
    }

    pub fn coeff_of_power(&self, var: usize, k: u32) -> MultiPoly {
        let mut out = Self::zero(&self.ctx);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        out
    }

    pub fn mul_var_pow(&self, var: usize, k: u32) -> MultiPoly {
        if k == 0 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2[var] += k;
                (e2, c.clone())
            })
            .collect();
        MultiPoly { ctx: self.ctx.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect();
        MultiPoly { ctx: self.ctx.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = Self::one(&self.ctx);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so that the lexicographically leading coefficient is 1.
    pub fn monic_normalized(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Division by a polynomial monic in `var`: returns `(q, r)` with
    /// `self = g·q + r` and `deg_var r < deg_var g`.
    pub fn divmod_monic(&self, g: &MultiPoly, var: usize) -> Result<(MultiPoly, MultiPoly)> {
        self.check_ctx(g)?;
        if g.is_zero() || !g.lc_in(var).is_one() {
            return Err(Error::NonMonicDivisor);
        }
        let dg = g.degree_in(var).unwrap();
        let mut q = Self::zero(&self.ctx);
        let mut r = self.clone();
        while let Some(dr) = r.degree_in(var) {
            if dr < dg {
                break;
            }
            let t = r.lc_in(var).mul_var_pow(var, dr - dg);
            r = &r - &(&t * g);
            q = &q + &t;
        }
        Ok((q, r))
    }

    /// Pseudo-division in `var`: returns `(k, q, r)` with
    /// `lc(g)^k · self = g·q + r`, `deg_var r < deg_var g`, and
    /// `k = max(deg f - deg g + 1, 0)`.
    pub fn pseudo_divmod(&self, g: &MultiPoly, var: usize) -> (u32, MultiPoly, MultiPoly) {
        assert!(!g.is_zero(), "pseudo-division by zero");
        let dg = g.degree_in(var).unwrap();
        let lc = g.lc_in(var);
        let k = match self.degree_in(var) {
            Some(df) if df >= dg => df - dg + 1,
            _ => 0,
        };
        let mut q = Self::zero(&self.ctx);
        let mut r = self.clone();
        let mut left = k;
        while let Some(dr) = r.degree_in(var) {
            if dr < dg || r.is_zero() {
                break;
            }
            let t = r.lc_in(var).mul_var_pow(var, dr - dg);
            q = &(&q * &lc) + &t;
            r = &(&r * &lc) - &(&t * g);
            left -= 1;
        }
        if left > 0 {
            let f = lc.pow(left);
            q = &q * &f;
            r = &r * &f;
        }
        (k, q, r)
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &MultiPoly) -> Option<MultiPoly> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if let Some(c) = g.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (ge, gc) = g.leading_term().unwrap();
        let mut q = Self::zero(&self.ctx);
        let mut r = self.clone();
        while let Some((re, rc)) = r.leading_term() {
            if !re.iter().zip(ge).all(|(a, b)| a >= b) {
                return None;
            }
            let e: Exponent = re.iter().zip(ge).map(|(a, b)| a - b).collect();
            let t = Self::monomial(&self.ctx, e, rc / gc);
            r = &r - &(&t * g);
            q = &q + &t;
        }
        Some(q)
    }

    /// Replaces variable `var` by `replacement` (a ring endomorphism fixing
    /// the other variables).
    pub fn substitute(&self, var: usize, replacement: &MultiPoly) -> MultiPoly {
        assert!(self.ctx == replacement.ctx, "substitution across contexts");
        if !self.involves(var) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(var);
        let mut acc = Self::zero(&self.ctx);
        for c in coeffs.iter().rev() {
            acc = &(&acc * replacement) + c;
        }
        acc
    }

    /// Replaces each listed variable by a rational constant.
    pub fn evaluate(&self, point: &[(usize, Rational)]) -> MultiPoly {
        if point.is_empty() {
            return self.clone();
        }
        let mut out = Self::zero(&self.ctx);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut c2 = c.clone();
            for (v, val) in point {
                let k = core::mem::replace(&mut e2[*v], 0);
                if k > 0 {
                    c2 *= num_traits::pow(val.clone(), k as usize);
                }
            }
            out.add_term(e2, c2);
        }
        out
    }

    /// Same polynomial in another context, matching variables by name.
    /// Fails if a variable that occurs is missing from `target`.
    pub fn embed(&self, target: &VarContext) -> Result<MultiPoly> {
        if &self.ctx == target {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> =
            self.ctx.names().iter().map(|n| target.index_of(n).ok()).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let j = map[i].ok_or_else(|| {
                        Error::UnknownVariable(self.ctx.name(i).into())
                    })?;
                    e2[j] = k;
                }
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    fn check_ctx(&self, other: &MultiPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn combine(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        assert!(self.ctx == other.ctx, "polynomial arithmetic across contexts");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), if negate { -c } else { c.clone() });
        }
        out
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(self.ctx == rhs.ctx, "polynomial arithmetic across contexts");
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(&self.ctx);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        // integer products, one reduction per output term
        let (ia, da) = self.integer_terms();
        let (ib, db) = rhs.integer_terms();
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (ea, ca) in &ia {
            for (eb, cb) in &ib {
                let e: Exponent = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, Rational::new(c, den.clone())))
            .collect();
        MultiPoly { ctx: self.ctx.clone(), terms }
    }
}

impl MultiPoly {
    /// Terms scaled to integers by the lcm of the coefficient denominators,
    /// and that lcm.
    fn integer_terms(&self) -> (Vec<(&Exponent, BigInt)>, BigInt) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let terms = self.terms.iter().map(|(e, c)| (e, c.numer() * (&den / c.denom()))).collect();
        (terms, den)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        MultiPoly { ctx: self.ctx.clone(), terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            let mut wrote = false;
            if !a.is_one() || is_const {
                write!(f, "{}", rational::format(&a))?;
                wrote = true;
            }
            for (v, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ctx.name(v))?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A ring endomorphism sending one variable to a polynomial and fixing the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    target: usize,
    replacement: MultiPoly,
}

impl Substitution {
    pub fn new(target: &str, replacement: MultiPoly) -> Result<Self> {
        let target = replacement.ctx().index_of(target)?;
        Ok(Substitution { target, replacement })
    }

    pub fn by_index(target: usize, replacement: MultiPoly) -> Self {
        assert!(target < replacement.ctx().len());
        Substitution { target, replacement }
    }

    /// `var ↦ var + shift·along`, the translation used by patching.
    pub fn translation(var: usize, shift: &MultiPoly, along: usize) -> Self {
        let ctx = shift.ctx();
        let repl = &MultiPoly::var(ctx, var) + &(shift * &MultiPoly::var(ctx, along));
        Substitution::by_index(var, repl)
    }

    /// `var ↦ factor·var`.
    pub fn scaling(var: usize, factor: &MultiPoly) -> Self {
        Substitution::by_index(var, factor * &MultiPoly::var(factor.ctx(), var))
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn replacement(&self) -> &MultiPoly {
        &self.replacement
    }

    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if f.ctx() != self.replacement.ctx() {
            return Err(Error::ContextMismatch);
        }
        Ok(f.substitute(self.target, &self.replacement))
    }
}

/// Parses a point given by variable names into index form.
impl MultiPoly {
    /// Parses sums of terms such as `"x^2*y - 3/2*x + 1"`: each term is an
    /// optional sign followed by `*`-separated rational and `var^k` factors.
    /// This is the format produced by `Display`.
    pub fn parse(ctx: &VarContext, s: &str) -> Result<MultiPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |what: &str| Error::Parse(alloc::format!("{what} in polynomial {s:?}"));
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = MultiPoly::zero(ctx);
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coeff = rational::from_int(sign);
            let mut e = vec![0u32; ctx.len()];
            for factor in term.split('*') {
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= rational::parse(factor)?;
                } else {
                    let (name, k) = match factor.split_once('^') {
                        Some((n, k)) => (n, k.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (factor, 1),
                    };
                    e[ctx.index_of(name)?] += k;
                }
            }
            out = &out + &MultiPoly::monomial(ctx, e, coeff);
        }
        Ok(out)
    }
}

pub fn point_indices(ctx: &VarContext, point: &[(&str, Rational)]) -> Result<Vec<(usize, Rational)>> {
    point.iter().map(|(n, v)| Ok((ctx.index_of(n)?, v.clone()))).collect()
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    pub fn p(ctx: &VarContext, s: &str) -> MultiPoly {
        MultiPoly::parse(ctx, s).unwrap()
    }

    pub fn ctx(names: &[&str]) -> VarContext {
        VarContext::new(names).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_support::{ctx, p};
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn divmod_examples() {
        let c = ctx(&["x", "y"]);
        let (q, r) = p(&c, "x^2+1").divmod_monic(&p(&c, "x+1"), 0).unwrap();
        assert_eq!(q, p(&c, "x-1"));
        assert_eq!(r, p(&c, "2"));
        let (q, r) = MultiPoly::zero(&c).divmod_monic(&p(&c, "x"), 0).unwrap();
        assert!(q.is_zero() && r.is_zero());
        let (q, r) = p(&c, "x*y+y").divmod_monic(&p(&c, "x+1"), 0).unwrap();
        assert_eq!(q, p(&c, "y"));
        assert!(r.is_zero());
        assert_eq!(
            p(&c, "x^2").divmod_monic(&p(&c, "2*x+1"), 0),
            Err(Error::NonMonicDivisor)
        );
        assert_eq!(p(&c, "x^2").divmod_monic(&p(&c, "y*x+1"), 0), Err(Error::NonMonicDivisor));
    }

    #[test]
    fn substitute_examples() {
        let c = ctx(&["x", "y"]);
        let s = Substitution::new("x", p(&c, "x+y")).unwrap();
        assert_eq!(s.apply(&p(&c, "x^2")).unwrap(), p(&c, "x^2+2*x*y+y^2"));
        let s = Substitution::new("y", p(&c, "-x")).unwrap();
        assert_eq!(s.apply(&p(&c, "y")).unwrap(), p(&c, "-x"));
        let s = Substitution::new("y", p(&c, "3*y")).unwrap();
        assert_eq!(s.apply(&p(&c, "x+y")).unwrap(), p(&c, "x+3*y"));
        assert_eq!(
            Substitution::new("z", p(&c, "x")),
            Err(Error::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn evaluate_examples() {
        let c = ctx(&["x", "y"]);
        let y0 = point_indices(&c, &[("y", rational::from_int(0))]).unwrap();
        let y1 = point_indices(&c, &[("y", rational::from_int(1))]).unwrap();
        assert!(p(&c, "x*y+y^2").evaluate(&y0).is_zero());
        assert_eq!(p(&c, "x*y+x").evaluate(&y1), p(&c, "2*x"));
        assert_eq!(p(&c, "5").evaluate(&y1), p(&c, "5"));
        assert!(point_indices(&c, &[("z", rational::from_int(1))]).is_err());
    }

    #[test]
    fn display_descending_lex() {
        let c = ctx(&["x", "y"]);
        let f = p(&c, "1 - 3/2*x + x^2*y");
        assert_eq!(alloc::format!("{f}"), "x^2*y - 3/2*x + 1");
    }

    #[test]
    fn pseudo_division_identity() {
        let c = ctx(&["x", "y"]);
        let f = p(&c, "x^3*y + x + y^2");
        let g = p(&c, "y*x^2 + x + 1");
        let (k, q, r) = f.pseudo_divmod(&g, 0);
        assert_eq!(k, 2);
        let lhs = &g.lc_in(0).pow(k) * &f;
        assert_eq!(lhs, &(&g * &q) + &r);
        assert!(r.degree_in(0).unwrap_or(0) < 2);
    }

    #[test]
    fn exact_division() {
        let c = ctx(&["x", "y"]);
        let a = p(&c, "x^2 - y^2");
        assert_eq!(a.div_exact(&p(&c, "x+y")), Some(p(&c, "x-y")));
        assert_eq!(a.div_exact(&p(&c, "x+2*y")), None);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        let c = ctx(&["x", "y"]);
        assert!(MultiPoly::parse(&c, "").is_err());
        assert!(MultiPoly::parse(&c, "x++y").is_err());
        assert!(MultiPoly::parse(&c, "z").is_err());
        assert!(MultiPoly::parse(&c, "x^a").is_err());
        assert_eq!(MultiPoly::parse(&c, "2*x*x - 1/2").unwrap(), p(&c, "2*x^2 - 1/2"));
    }

    fn small_poly(c: VarContext) -> impl Strategy<Value = MultiPoly> {
        let n = c.len();
        proptest::collection::vec(
            (proptest::collection::vec(0u32..4, n), -5i64..6, 1i64..4),
            0..6,
        )
        .prop_map(move |ts| {
            MultiPoly::from_terms(
                &c,
                ts.into_iter().map(|(e, a, b)| (e, rational::from_frac(a, b))),
            )
            .unwrap()
        })
    }

    fn monic_in_x(c: VarContext) -> impl Strategy<Value = MultiPoly> {
        (1u32..4, small_poly(c.clone())).prop_map(move |(d, tail)| {
            // truncate the tail below degree d in x, then add x^d
            let coeffs = tail.coeffs_in(0);
            let kept: Vec<MultiPoly> = coeffs.into_iter().take(d as usize).collect();
            let low = MultiPoly::from_coeffs_in(&c, 0, &kept);
            &low + &MultiPoly::var(&c, 0).pow(d)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn divmod_is_exact(f in small_poly(ctx(&["x", "y"])), g in monic_in_x(ctx(&["x", "y"]))) {
            let (q, r) = f.divmod_monic(&g, 0).unwrap();
            prop_assert!((&(&f - &(&g * &q)) - &r).is_zero());
            let dr = r.degree_in(0).map(|d| d as i64).unwrap_or(-1);
            prop_assert!(dr < g.degree_in(0).unwrap() as i64);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn canonical_form_round_trip(a in small_poly(ctx(&["x", "y"])), b in small_poly(ctx(&["x", "y"])), c2 in small_poly(ctx(&["x", "y"]))) {
            // (a+b)·c = c·b + a·c regardless of evaluation order
            let lhs = &(&a + &b) * &c2;
            let rhs = &(&c2 * &b) + &(&a * &c2);
            prop_assert_eq!(&lhs, &rhs);
            prop_assert!((&lhs - &rhs).is_zero());
        }

        #[test]
        fn translations_compose(f in small_poly(ctx(&["x", "y"])), j in -3i64..4, j2 in -3i64..4) {
            let c = ctx(&["x", "y"]);
            let t = |k: i64| Substitution::translation(0, &MultiPoly::from_int(&c, k), 1);
            let twice = t(j2).apply(&t(j).apply(&f).unwrap()).unwrap();
            let once = t(j + j2).apply(&f).unwrap();
            prop_assert_eq!(twice, once);
        }

        #[test]
        fn y_to_zero_is_constant_term(f in small_poly(ctx(&["x", "y"]))) {
            let c = ctx(&["x", "y"]);
            let s = Substitution::by_index(1, MultiPoly::zero(&c));
            let coeffs = f.coeffs_in(1);
            let expected = coeffs.first().cloned().unwrap_or_else(|| MultiPoly::zero(&c));
            prop_assert_eq!(s.apply(&f).unwrap(), expected);
        }

        #[test]
        fn display_parses_back(f in small_poly(ctx(&["x", "y"]))) {
            let s = alloc::format!("{f}");
            prop_assert_eq!(MultiPoly::parse(f.ctx(), &s).unwrap(), f);
        }

        #[test]
        fn substitution_is_a_ring_map(a in small_poly(ctx(&["x", "y"])), b in small_poly(ctx(&["x", "y"]))) {
            let c = ctx(&["x", "y"]);
            let s = Substitution::new("x", p(&c, "x+2*y-1")).unwrap();
            let sa = s.apply(&a).unwrap();
            let sb = s.apply(&b).unwrap();
            prop_assert_eq!(s.apply(&(&a + &b)).unwrap(), &sa + &sb);
            prop_assert_eq!(s.apply(&(&a * &b)).unwrap(), &sa * &sb);
        }
    }
}
