//! Translation certificates and the local-to-global patching step.
//!
//! For an idempotent `E` over `R[x]` and `j ∈ R`, a translation certificate
//! is a pair `(A, B)` over `R[x, y]` with `A·B = E^(x↦x+j·y)` and `B·A = E`.
//! The admissible `j` form an ideal; a certificate for `j = 1` specializes
//! under `y ↦ -x` to an equivalence `E^(x↦0) ~ E`.

use alloc::vec::Vec;

use crate::certificate::{EquivalenceCertificate, FreeCertificate};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::gcd::lcm;
use crate::local::PointIdeal;
use crate::matrix::Mat;
use crate::poly::MultiPoly;
use crate::vars::VarContext;

#[derive(Clone, Debug, PartialEq)]
pub struct TranslationCertificate {
    pub e: Mat<MultiPoly>,
    pub j: MultiPoly,
    pub a: Mat<MultiPoly>,
    pub b: Mat<MultiPoly>,
    /// The translated variable `x`.
    pub x: usize,
    /// The auxiliary variable `y`.
    pub y: usize,
}

fn translate(m: &Mat<MultiPoly>, x: usize, shift: &MultiPoly) -> Mat<MultiPoly> {
    let xs = &MultiPoly::var(m.ctx(), x) + shift;
    m.substitute(x, &xs)
}

impl TranslationCertificate {
    pub fn ctx(&self) -> &VarContext {
        self.e.ctx()
    }

    fn shift(&self) -> MultiPoly {
        &self.j * &MultiPoly::var(self.ctx(), self.y)
    }

    /// `E^(x↦x+j·y)`.
    pub fn translated_e(&self) -> Mat<MultiPoly> {
        translate(&self.e, self.x, &self.shift())
    }

    /// The certificate read as an equivalence `E^(x↦x+j·y) ~ E`.
    pub fn to_equivalence(&self) -> EquivalenceCertificate<MultiPoly> {
        EquivalenceCertificate { e: self.translated_e(), f: self.e.clone(), a: self.a.clone(), b: self.b.clone() }
    }

    pub fn verify(&self) -> Result<()> {
        if self.x == self.y {
            return Err(Error::InvalidInput("x and y must differ".into()));
        }
        if self.e.involves(self.y) || self.j.involves(self.x) || self.j.involves(self.y) {
            return Err(Error::InvalidInput("E must be free of y and j free of x, y".into()));
        }
        self.to_equivalence().verify().into_result()
    }

    /// The certificate for `j = 0`: `A = B = E`.
    pub fn zero(e: &Mat<MultiPoly>, x: usize, y: usize) -> Self {
        TranslationCertificate { e: e.clone(), j: MultiPoly::zero(e.ctx()), a: e.clone(), b: e.clone(), x, y }
    }
}

/// From a free certificate of `E` over `R_m[x]` (entries with denominators in
/// `Q[X]` not vanishing at the point), a translation certificate for the
/// least common denominator `r ∉ m`. With `C = A·B^(x↦x+y)` and
/// `D = A^(x↦x+y)·B`, `D^(y↦r·y)` and `C^(y↦r·y)` are polynomial and certify
/// `j = r`.
pub fn translation_from_local_trivialization(
    cert: &FreeCertificate<Fraction>,
    ideal: &PointIdeal,
    x: usize,
    y: usize,
) -> Result<TranslationCertificate> {
    let ctx = cert.e.ctx().clone();
    if x == y || ideal.vars().contains(&x) || ideal.vars().contains(&y) {
        return Err(Error::InvalidInput("x, y and the localized variables must be distinct".into()));
    }
    cert.verify().into_result()?;
    let e = cert.e.to_polys().ok_or_else(|| Error::InvalidInput("E must be polynomial".into()))?;
    if e.involves(y) {
        return Err(Error::InvalidInput("E must not involve the auxiliary variable".into()));
    }
    let shifted = &MultiPoly::var(&ctx, x) + &MultiPoly::var(&ctx, y);
    let c = cert.a.mul(&cert.b.substitute(x, &shifted)?)?;
    let d = cert.a.substitute(x, &shifted)?.mul(&cert.b)?;
    let mut r = MultiPoly::one(&ctx);
    for f in c.entries().iter().chain(d.entries()) {
        r = lcm(&r, f.den());
    }
    if ideal.contains(&r) || r.involves(x) || r.involves(y) {
        return Err(Error::DenominatorInIdeal);
    }
    let ry = &r * &MultiPoly::var(&ctx, y);
    let clear = |m: &Mat<Fraction>| -> Result<Mat<MultiPoly>> {
        m.substitute(y, &ry)?.to_polys().ok_or(Error::DenominatorInIdeal)
    };
    let out = TranslationCertificate { e, j: r, a: clear(&d)?, b: clear(&c)?, x, y };
    out.verify()?;
    Ok(out)
}

/// Certificate for `j₁ + j₂`: translate the first by `j₂·y`, then compose.
pub fn cert_add(c1: &TranslationCertificate, c2: &TranslationCertificate) -> Result<TranslationCertificate> {
    if c1.e != c2.e || c1.x != c2.x || c1.y != c2.y {
        return Err(Error::MismatchedE);
    }
    let shift = c2.shift();
    let a1 = translate(&c1.a, c1.x, &shift);
    let b1 = translate(&c1.b, c1.x, &shift);
    Ok(TranslationCertificate {
        e: c1.e.clone(),
        j: &c1.j + &c2.j,
        a: a1.mul(&c2.a)?,
        b: c2.b.mul(&b1)?,
        x: c1.x,
        y: c1.y,
    })
}

/// Certificate for `j·r` via `y ↦ r·y`; `r` must be free of `x` and `y`.
pub fn cert_scale(c: &TranslationCertificate, r: &MultiPoly) -> Result<TranslationCertificate> {
    if r.involves(c.x) || r.involves(c.y) {
        return Err(Error::InvalidInput("the scalar must lie in R".into()));
    }
    let ry = r * &MultiPoly::var(c.ctx(), c.y);
    Ok(TranslationCertificate {
        e: c.e.clone(),
        j: &c.j * r,
        a: c.a.substitute(c.y, &ry),
        b: c.b.substitute(c.y, &ry),
        x: c.x,
        y: c.y,
    })
}

/// Folds `Σ uᵢ·cᵢ` into a certificate for `Σ uᵢ·rᵢ = 1`.
pub fn bezout_combine(certs: &[TranslationCertificate], us: &[MultiPoly]) -> Result<TranslationCertificate> {
    let Some(first) = certs.first() else {
        return Err(Error::NotBezout);
    };
    if certs.len() != us.len() {
        return Err(Error::InvalidInput("one coefficient per certificate is required".into()));
    }
    let mut sum = MultiPoly::zero(first.ctx());
    for (c, u) in certs.iter().zip(us) {
        sum = &sum + &(&c.j * u);
    }
    if !sum.is_one() {
        return Err(Error::NotBezout);
    }
    let mut acc = TranslationCertificate::zero(&first.e, first.x, first.y);
    for (c, u) in certs.iter().zip(us) {
        if u.is_zero() {
            continue;
        }
        acc = cert_add(&acc, &cert_scale(c, u)?)?;
    }
    acc.verify()?;
    Ok(acc)
}

/// `E^(x↦0) ~ E` from a certificate for `j = 1`, via `y ↦ -x`.
pub fn specialize_to_zero(c: &TranslationCertificate) -> Result<EquivalenceCertificate<MultiPoly>> {
    if !c.j.is_one() {
        return Err(Error::NotUnitTranslation);
    }
    let minus_x = -&MultiPoly::var(c.ctx(), c.x);
    let out = EquivalenceCertificate {
        e: c.e.substitute(c.x, &MultiPoly::zero(c.ctx())),
        f: c.e.clone(),
        a: c.a.substitute(c.y, &minus_x),
        b: c.b.substitute(c.y, &minus_x),
    };
    out.verify().into_result()?;
    Ok(out)
}

/// The Bézout-ready list of denominators of several certificates.
pub fn denominators(certs: &[TranslationCertificate]) -> Vec<MultiPoly> {
    certs.iter().map(|c| c.j.clone()).collect()
}
