//! Local freeness over `R[x]` from freeness over the monic localization
//! `R(x)`, for `R = Q[X]_m` a rational-point localization (or `R = Q`).
//!
//! Given `A·B = E`, `B·A = I_m` over `R(x)`, the pipeline rotates `(A, B)` by
//! a lifted invertible matrix so that both reduce to polynomial matrices,
//! solves `[F'·A'] = I_m` for a polynomial `F'`, and reads off the polynomial
//! certificate `B'' = F'·E`, `A'' = E·G''` with `[B''·G''] = I_m`.

use alloc::vec::Vec;

use crate::certificate::FreeCertificate;
use crate::elementary::{elementary_factorization, inverse_factors, product, ElementaryFactor};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::gcd::lcm;
use crate::hermite::hermite_basis_poly;
use crate::linalg::{determinant, inverse, solve};
use crate::local::PointIdeal;
use crate::matrix::Mat;
use crate::poly::MultiPoly;
use crate::vars::VarContext;

/// An invertible matrix over `R(x)` kept as a product of elementary factors,
/// together with the matrix over `Q(x)` it reduces to.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedUnit {
    pub factors: Vec<ElementaryFactor<Fraction>>,
    pub target: Mat<Fraction>,
}

impl LiftedUnit {
    pub fn size(&self) -> usize {
        self.target.rows()
    }

    pub fn matrix(&self) -> Mat<Fraction> {
        product(self.target.ctx(), self.size(), &self.factors)
    }

    pub fn inverse_matrix(&self) -> Mat<Fraction> {
        product(self.target.ctx(), self.size(), &inverse_factors(&self.factors))
    }
}

/// Lifts an invertible matrix over `Q(x)` to one over `R(x)` reducing to it.
/// Elementary factors over `Q(x)` already lie in `R(x)`, so the lift is
/// factor-wise the identity; the factored form gives `U⁻¹` without an
/// adjugate.
pub fn lift_invertible(target: &Mat<Fraction>, ideal: &PointIdeal) -> Result<LiftedUnit> {
    let xs = ideal.vars();
    if target.entries().iter().any(|f| xs.iter().any(|&v| f.involves(v))) {
        return Err(Error::InvalidInput("target must not involve the localized variables".into()));
    }
    let factors = elementary_factorization(target)?;
    Ok(LiftedUnit { factors, target: target.clone() })
}

/// Which side the polynomial-part identity is solved on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `F` (m×n) with `[F·A'] = I_m`.
    Left,
    /// `G` (n×m) with `[A'·G] = I_m`.
    Right,
}

fn poly_part(f: &Fraction, var: usize) -> Fraction {
    f.polynomial_part(var).0
}

fn poly_part_product(l: &Mat<Fraction>, r: &Mat<Fraction>, var: usize) -> Result<Mat<Fraction>> {
    Ok(l.mul(r)?.map_same(|f| poly_part(f, var)))
}

/// Solves `[F·A'] = I_m` (entry-wise polynomial part in `var`) for a matrix
/// `F` over `R[var]`, where `partner·A' = I_m` and both `A'` and `partner`
/// reduce to polynomial matrices modulo the ideal.
///
/// With `h` monic such that `h·partner` is polynomial, the operator
/// `G ↦ [[G·partner]·A'] mod h` on `(R[x]/h)^m` reduces to the identity, so
/// its matrix on the basis `x^k·e_j` is invertible over `R` and a single
/// exact solve over the fraction field of `R` yields `F` modulo `h`. The
/// remaining multiple of `h` is cancelled with `h·partner`.
pub fn solve_polynomial_part_identity(
    a: &Mat<Fraction>,
    partner: &Mat<Fraction>,
    ideal: &PointIdeal,
    var: usize,
    side: Side,
) -> Result<Mat<Fraction>> {
    match side {
        Side::Left => solve_left(a, partner, ideal, var),
        Side::Right => Ok(solve_left(&a.transpose(), &partner.transpose(), ideal, var)?.transpose()),
    }
}

fn solve_left(a: &Mat<Fraction>, partner: &Mat<Fraction>, ideal: &PointIdeal, var: usize) -> Result<Mat<Fraction>> {
    let (n, m) = a.dims();
    let ctx = a.ctx().clone();
    if !partner.mul(a)?.is_identity() {
        return Err(Error::NotSplitPair);
    }
    let mut den = MultiPoly::one(&ctx);
    for f in partner.entries() {
        den = lcm(&den, f.den());
    }
    let lc = den.lc_in(var);
    if !ideal.is_unit(&lc) {
        return Err(Error::NotLocal(alloc::format!("{den}")));
    }
    let h = Fraction::new(den, lc)?;
    let d = h.degree_in(var).unwrap_or(0) as usize;
    let f = if d == 0 {
        partner.clone()
    } else {
        let x = MultiPoly::var(&ctx, var);
        let mut lifts = Vec::with_capacity(m * d);
        let mut t = Mat::zeros(&ctx, m * d, m * d);
        for j in 0..m {
            for k in 0..d {
                let xk = Fraction::from_poly(x.pow(k as u32));
                let lift = Mat::from_vec(
                    &ctx,
                    1,
                    n,
                    partner.row(j).iter().map(|p| poly_part(&(&xk * p), var)).collect(),
                )?;
                let image = poly_part_product(&lift, a, var)?;
                for s in 0..m {
                    let (_, rem) = image.get(0, s).divmod_in(&h, var)?;
                    for (kk, c) in rem.coeffs_in(var).into_iter().enumerate() {
                        t.set(s * d + kk, j * d + k, c);
                    }
                }
                lifts.push(lift);
            }
        }
        let mut rhs = Mat::zeros(&ctx, m * d, m);
        for i in 0..m {
            rhs.set(i * d, i, Fraction::one(&ctx));
        }
        let sol = solve(&t, &rhs)?.ok_or(Error::NakayamaSingular)?;
        if sol.entries().iter().any(|c| !ideal.is_local(c)) {
            return Err(Error::NakayamaSingular);
        }
        let mut f = Mat::zeros(&ctx, m, n);
        for i in 0..m {
            for (idx, lift) in lifts.iter().enumerate() {
                let c = sol.get(idx, i);
                if c.is_zero() {
                    continue;
                }
                for l in 0..n {
                    let v = f.get(i, l) + &(c * lift.get(0, l));
                    f.set(i, l, v);
                }
            }
        }
        // [F·A'] = I + h·G; subtract G·(h·partner)
        let excess = poly_part_product(&f, a, var)?.sub(&Mat::identity(&ctx, m))?;
        let mut g = Mat::zeros(&ctx, m, m);
        for i in 0..m {
            for s in 0..m {
                let (q, rem) = excess.get(i, s).divmod_in(&h, var)?;
                if !rem.is_zero() {
                    return Err(Error::NakayamaSingular);
                }
                g.set(i, s, q);
            }
        }
        f.sub(&g.mul(&partner.scale(&h))?)?
    };
    if !poly_part_product(&f, a, var)?.is_identity()
        || f.entries().iter().any(|c| !ideal.is_local_polynomial(c, var))
    {
        return Err(Error::NakayamaSingular);
    }
    Ok(f)
}

/// `det = f/g` with `f`, `g` monic in `var` of equal residue: the group
/// `1 + m·R(x)₀`.
pub fn in_unit_group(det: &Fraction, ideal: &PointIdeal, var: usize) -> bool {
    let (num, den) = (det.num(), det.den());
    if num.is_zero() || num.degree_in(var) != den.degree_in(var) {
        return false;
    }
    let (lf, lg) = (num.lc_in(var), den.lc_in(var));
    if lf != lg || !ideal.is_unit(&lf) {
        return false;
    }
    let monic = |p: &MultiPoly| Fraction::new(p.clone(), lf.clone()).and_then(|f| ideal.reduce_fraction(&f));
    matches!((monic(num), monic(den)), (Ok(a), Ok(b)) if a == b)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HorrocksInput {
    pub e: Mat<MultiPoly>,
    pub a: Mat<Fraction>,
    pub b: Mat<Fraction>,
    pub ideal: PointIdeal,
    /// The polynomial variable `x` of `R[x]`.
    pub var: usize,
}

impl HorrocksInput {
    pub fn ctx(&self) -> &VarContext {
        self.e.ctx()
    }

    fn validate(&self) -> Result<()> {
        let ctx = self.ctx();
        if self.a.ctx() != ctx || self.b.ctx() != ctx || self.ideal.ctx() != ctx {
            return Err(Error::ContextMismatch);
        }
        let xs = self.ideal.vars();
        if xs.contains(&self.var) {
            return Err(Error::InvalidInput("the polynomial variable is localized".into()));
        }
        let mut allowed = xs;
        allowed.push(self.var);
        if self.e.entries().iter().any(|f| !f.only_involves(&allowed)) {
            return Err(Error::InvalidInput("E involves variables outside R[x]".into()));
        }
        if !self.e.is_square() || !self.e.is_idempotent() {
            return Err(Error::NotIdempotent);
        }
        for f in self.a.entries().iter().chain(self.b.entries()) {
            if !self.ideal.is_in_monic_localization(f, self.var) {
                return Err(Error::NotLocal(alloc::format!("{f}")));
            }
        }
        let free = FreeCertificate { e: self.e.to_fractions(), a: self.a.clone(), b: self.b.clone() };
        free.verify().into_result()
    }
}

/// Intermediate matrices of one Horrocks run.
#[derive(Clone, Debug, PartialEq)]
pub struct HorrocksTrace {
    pub e_bar: Mat<MultiPoly>,
    pub c_hat: Mat<MultiPoly>,
    pub d_hat: Mat<MultiPoly>,
    pub unit: LiftedUnit,
    pub a1: Mat<Fraction>,
    pub b1: Mat<Fraction>,
    pub f1: Mat<Fraction>,
    pub v: Mat<Fraction>,
    pub det_v: Fraction,
    pub g2: Mat<Fraction>,
}

/// Polynomial certificate `(A'', B'')` over `R[x]` for the input idempotent.
pub fn horrocks_free_basis(input: &HorrocksInput) -> Result<FreeCertificate<Fraction>> {
    horrocks_with_trace(input).map(|(c, _)| c)
}

pub fn horrocks_with_trace(input: &HorrocksInput) -> Result<(FreeCertificate<Fraction>, HorrocksTrace)> {
    input.validate()?;
    let HorrocksInput { e, a, b, ideal, var } = input;
    let var = *var;
    let ctx = e.ctx().clone();
    let m = b.rows();

    let e_bar = e.evaluate(ideal.point());
    let (c_hat, d_hat) = hermite_basis_poly(&e_bar, Some(var))?;
    if d_hat.rows() != m {
        return Err(Error::ResidueMismatch("rank of the reduction"));
    }
    let a_bar = a.try_map(&ctx, |f| ideal.reduce_fraction(f))?;
    let target = d_hat.to_fractions().mul(&a_bar)?;
    let unit = lift_invertible(&target, ideal)?;

    let a1 = a.mul(&unit.inverse_matrix())?;
    let b1 = unit.matrix().mul(b)?;
    if a1.try_map(&ctx, |f| ideal.reduce_fraction(f))? != c_hat.to_fractions() {
        return Err(Error::ResidueMismatch("A' does not reduce to C"));
    }
    if b1.try_map(&ctx, |f| ideal.reduce_fraction(f))? != d_hat.to_fractions() {
        return Err(Error::ResidueMismatch("B' does not reduce to D"));
    }

    let f1 = solve_polynomial_part_identity(&a1, &b1, ideal, var, Side::Left)?;
    let v = f1.mul(&a1)?;
    let det_v = determinant(&v)?;
    if !in_unit_group(&det_v, ideal, var) {
        return Err(Error::DeterminantNotInGroup);
    }

    let ef = e.to_fractions();
    let b2 = f1.mul(&ef)?;
    let a2 = a1.mul(&inverse(&v)?)?;
    let g2 = solve_polynomial_part_identity(&b2, &a2, ideal, var, Side::Right)?;
    let a3 = ef.mul(&g2)?;

    let cert = FreeCertificate { e: ef, a: a3, b: b2 };
    cert.verify().into_result()?;
    if cert.a.entries().iter().chain(cert.b.entries()).any(|f| !ideal.is_local_polynomial(f, var)) {
        return Err(Error::VerificationFailed("output has a denominator in the ideal".into()));
    }
    let trace = HorrocksTrace { e_bar, c_hat, d_hat, unit, a1, b1, f1, v, det_v, g2 };
    Ok((cert, trace))
}
