//! Localization at rational points and residue maps.
//!
//! A [`PointIdeal`] is the maximal ideal of `Q[X]` of polynomials vanishing at
//! a point of `Q^|X|`. The local ring `R = Q[X]_m` is represented inside
//! [`Fraction`] by a predicate: numerator and denominator involve only `X`
//! and the denominator does not vanish at the point. The empty point stands
//! for `R = Q` with `m = (0)`.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::vars::VarContext;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointIdeal {
    ctx: VarContext,
    point: Vec<(usize, Rational)>,
}

impl PointIdeal {
    /// `R = Q`, `m = (0)`: the residue map is the identity.
    pub fn trivial(ctx: &VarContext) -> Self {
        PointIdeal { ctx: ctx.clone(), point: Vec::new() }
    }

    pub fn new(ctx: &VarContext, point: &[(&str, Rational)]) -> Result<Self> {
        let mut pts = Vec::with_capacity(point.len());
        for (name, value) in point {
            let i = ctx.index_of(name)?;
            if pts.iter().any(|(j, _)| *j == i) {
                return Err(Error::InvalidInput(alloc::format!("{name} assigned twice")));
            }
            pts.push((i, value.clone()));
        }
        pts.sort_by_key(|(i, _)| *i);
        Ok(PointIdeal { ctx: ctx.clone(), point: pts })
    }

    pub fn from_indices(ctx: &VarContext, mut point: Vec<(usize, Rational)>) -> Self {
        point.sort_by_key(|(i, _)| *i);
        PointIdeal { ctx: ctx.clone(), point }
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn point(&self) -> &[(usize, Rational)] {
        &self.point
    }

    /// The localized variables `X`.
    pub fn vars(&self) -> Vec<usize> {
        self.point.iter().map(|(i, _)| *i).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.point.is_empty()
    }

    /// Same point in another context (matched by variable name).
    pub fn embed(&self, target: &VarContext) -> Result<Self> {
        let point = self
            .point
            .iter()
            .map(|(i, v)| Ok((target.index_of(self.ctx.name(*i))?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(PointIdeal::from_indices(target, point))
    }

    /// Residue map on polynomials: evaluate `X` at the point.
    pub fn residue(&self, f: &MultiPoly) -> MultiPoly {
        f.evaluate(&self.point)
    }

    /// Membership of an element of `Q[X]`.
    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.residue(f).is_zero()
    }

    /// `f` lies in `Q[X]` and is a unit of `Q[X]_m`.
    pub fn is_unit(&self, f: &MultiPoly) -> bool {
        f.only_involves(&self.vars()) && !self.contains(f)
    }

    /// `f` lies in `R = Q[X]_m`.
    pub fn is_local(&self, f: &Fraction) -> bool {
        let xs = self.vars();
        f.num().only_involves(&xs) && self.is_unit(f.den())
    }

    /// `f` lies in `R[var]`: the denominator is a unit of `R`.
    pub fn is_local_polynomial(&self, f: &Fraction, var: usize) -> bool {
        let mut allowed = self.vars();
        allowed.push(var);
        f.num().only_involves(&allowed) && self.is_unit(f.den())
    }

    /// `f` lies in `R(var)`: the denominator's leading coefficient in `var`
    /// is a unit of `R`.
    pub fn is_in_monic_localization(&self, f: &Fraction, var: usize) -> bool {
        let mut allowed = self.vars();
        allowed.push(var);
        f.num().only_involves(&allowed)
            && f.den().only_involves(&allowed)
            && self.is_unit(&f.den().lc_in(var))
    }

    /// Residue map `R(x) → Q(x)`.
    pub fn reduce_fraction(&self, f: &Fraction) -> Result<Fraction> {
        let den = self.residue(f.den());
        if den.is_zero() {
            return Err(Error::NotLocal(f.to_string()));
        }
        Fraction::new(self.residue(f.num()), den)
    }

    /// Inverse of `phi` in `R(var)` when the leading `var`-coefficient of its
    /// numerator is a unit of `R`. This is a sufficient test, not a decision
    /// procedure for the unit group.
    pub fn invert_unit(&self, phi: &Fraction, var: usize) -> Result<Fraction> {
        if phi.is_zero() || !self.is_unit(&phi.num().lc_in(var)) {
            return Err(Error::NotRecognizedUnit);
        }
        phi.inv().ok_or(Error::NotRecognizedUnit)
    }

    /// The residue of an element of `R`, a rational number.
    pub fn residue_value(&self, f: &Fraction) -> Result<Rational> {
        if !self.is_local(f) {
            return Err(Error::NotLocal(f.to_string()));
        }
        let r = self.reduce_fraction(f)?;
        Ok(r.num().constant_value().unwrap_or_else(Rational::zero))
    }
}

/// An element of `Q[X]_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalElem {
    value: Fraction,
}

impl LocalElem {
    pub fn new(value: Fraction, ideal: &PointIdeal) -> Result<Self> {
        if !ideal.is_local(&value) {
            return Err(Error::NotLocal(value.to_string()));
        }
        Ok(LocalElem { value })
    }

    pub fn value(&self) -> &Fraction {
        &self.value
    }

    pub fn residue(&self, ideal: &PointIdeal) -> Rational {
        ideal.residue_value(&self.value).expect("checked at construction")
    }
}
