//! The induction driver: free bases of projective modules over
//! `Q[x1, ..., xv]`, rational point search and unimodular row completion.
//!
//! With `v ≤ 1` a Hermite basis suffices. For `v = 2` a Hermite basis over
//! `Q(x1)[x2]` trivializes `E` over every `Q[x2]_m(x1)`; Horrocks turns it into
//! local certificates over `Q[x2]_m[x1]` at rational points `m`, chosen until
//! the patching denominators generate the unit ideal. Patching then gives
//! `E ~ E^(x1↦0)`, which has one variable fewer.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::certificate::{compose_certificates, EquivalenceCertificate, FreeCertificate};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::gcd::{bezout_univariate, gcd};
use crate::hermite::{hermite_basis_of_idempotent, hermite_basis_poly, Domain};
use crate::horrocks::{horrocks_free_basis, HorrocksInput};
use crate::linalg::{determinant, solve};
use crate::local::PointIdeal;
use crate::matrix::Mat;
use crate::patching::{bezout_combine, specialize_to_zero, translation_from_local_trivialization};
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::vars::VarContext;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Bound on numerator and denominator of candidate rational roots.
    pub max_point_height: u64,
    /// Extra degree allowed when searching for a unimodularity witness.
    pub degree_escalation_ceiling: u32,
    /// Maximum number of points visited in one patching loop.
    pub max_patch_points: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_point_height: 1000, degree_escalation_ceiling: 10, max_patch_points: 64 }
    }
}

/// Local free certificates of `E` over `Q[X]_m[x]` with Bézout coefficients
/// for their patching denominators. Each denominator is the least common
/// denominator of the translated local certificate, scaled to leading
/// coefficient 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Cover {
    /// The polynomial variable `x`.
    pub var: usize,
    pub locals: Vec<(PointIdeal, FreeCertificate<Fraction>)>,
    pub bezout: Vec<MultiPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSearch {
    /// The generators have no common zero.
    Unit,
    Point(PointIdeal),
}

/// A rational point where all `generators` vanish, among the variables `vars`.
pub fn rational_point_search(
    ctx: &VarContext,
    vars: &[usize],
    generators: &[MultiPoly],
    config: &SolverConfig,
) -> Result<PointSearch> {
    if generators.is_empty() || generators.iter().all(MultiPoly::is_zero) {
        return Err(Error::InvalidInput("generators must not all be zero".into()));
    }
    if generators.iter().any(|g| !g.only_involves(vars)) {
        return Err(Error::InvalidInput("generators involve other variables".into()));
    }
    match vars {
        [] => Ok(if generators.iter().any(|g| !g.is_zero()) {
            PointSearch::Unit
        } else {
            PointSearch::Point(PointIdeal::trivial(ctx))
        }),
        [var] => {
            let g = generators.iter().fold(MultiPoly::zero(ctx), |acc, r| gcd(&acc, r));
            if g.is_constant() {
                return Ok(PointSearch::Unit);
            }
            match rational_root(&g, *var, config.max_point_height) {
                Some(root) => Ok(PointSearch::Point(PointIdeal::from_indices(ctx, vec![(*var, root)]))),
                None => Err(Error::NonRationalLocus(alloc::format!("{g}"))),
            }
        }
        _ => Err(Error::UnsupportedDimension(vars.len())),
    }
}

fn divisors_up_to(n: &BigInt, bound: u64) -> Vec<u64> {
    (1..=bound).filter(|&d| (n % BigInt::from(d)).is_zero()).collect()
}

/// The first rational root of a univariate `g`, ordered by height, by the
/// rational root theorem.
fn rational_root(g: &MultiPoly, var: usize, bound: u64) -> Option<Rational> {
    let coeffs = g.coeffs_in(var);
    let point = |r: &Rational| g.evaluate(&[(var, r.clone())]).is_zero();
    let zero = Rational::zero();
    if point(&zero) {
        return Some(zero);
    }
    let denom_lcm = coeffs
        .iter()
        .filter_map(|c| c.constant_value())
        .fold(BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let int = |c: &MultiPoly| {
        let v = c.constant_value().unwrap_or_else(Rational::zero);
        (v * Rational::from_integer(denom_lcm.clone())).to_integer().abs()
    };
    let a0 = int(coeffs.first()?);
    let an = int(coeffs.last()?);
    let ps = divisors_up_to(&a0, bound);
    let qs = divisors_up_to(&an, bound);
    let mut candidates: Vec<(u64, u64, u64)> = Vec::new();
    for &p in &ps {
        for &q in &qs {
            if num_integer::Integer::gcd(&p, &q) == 1 {
                candidates.push((p.max(q), p, q));
            }
        }
    }
    candidates.sort_unstable();
    for (_, p, q) in candidates {
        for sign in [1i64, -1] {
            let r = Rational::new(BigInt::from(p) * sign, BigInt::from(q));
            if point(&r) {
                return Some(r);
            }
        }
    }
    None
}

/// One visited point of a patching loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchRecord {
    /// The translated variable.
    pub var: String,
    pub point: Vec<(String, Rational)>,
    /// The patching denominator obtained there.
    pub denominator: String,
}

/// Free certificate of an idempotent over `Q[x1, ..., xv]`.
pub fn quillen_suslin_free_basis(
    e: &Mat<MultiPoly>,
    config: &SolverConfig,
    cover: Option<&Cover>,
) -> Result<FreeCertificate<MultiPoly>> {
    solve_with_log(e, config, cover).map(|(c, _)| c)
}

/// [`quillen_suslin_free_basis`] together with the points visited.
pub fn solve_with_log(
    e: &Mat<MultiPoly>,
    config: &SolverConfig,
    cover: Option<&Cover>,
) -> Result<(FreeCertificate<MultiPoly>, Vec<PatchRecord>)> {
    let mut log = Vec::new();
    let cert = solve_rec(e, config, cover, &mut log)?;
    cert.verify().into_result()?;
    Ok((cert, log))
}

fn solve_rec(
    e: &Mat<MultiPoly>,
    config: &SolverConfig,
    cover: Option<&Cover>,
    log: &mut Vec<PatchRecord>,
) -> Result<FreeCertificate<MultiPoly>> {
    if !e.is_square() || !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let support = e.support();
    if support.len() <= 1 && cover.is_none() {
        let (a, b) = hermite_basis_poly(e, support.first().copied())?;
        return Ok(FreeCertificate { e: e.clone(), a, b });
    }
    let to_zero = patch_to_zero(e, &support, config, cover, log)?;
    let rest = solve_rec(&to_zero.e, config, None, log)?;
    // E ~ E^(x1↦0) ~ I_m
    let composed = compose_certificates(&to_zero.reversed(), &rest.to_equivalence())?;
    FreeCertificate::from_equivalence(composed)
}

/// `E^(x1↦0) ~ E` over `Q[x1, ..., xv]`.
fn patch_to_zero(
    e: &Mat<MultiPoly>,
    support: &[usize],
    config: &SolverConfig,
    cover: Option<&Cover>,
    log: &mut Vec<PatchRecord>,
) -> Result<EquivalenceCertificate<MultiPoly>> {
    let ctx = e.ctx().clone();
    let aux = ctx.fresh_name("t");
    let ctx2 = ctx.with_var(&aux)?;
    let y = ctx2.len() - 1;
    let e2 = e.embed(&ctx2)?;
    let mut certs = Vec::new();
    let (x, us) = match cover {
        Some(cover) => {
            let x = cover.var;
            for (ideal, local) in &cover.locals {
                let ideal = ideal.embed(&ctx2)?;
                let local = FreeCertificate {
                    e: local.e.embed(&ctx2)?,
                    a: local.a.embed(&ctx2)?,
                    b: local.b.embed(&ctx2)?,
                };
                if local.e != e2.to_fractions() {
                    return Err(Error::MismatchedE);
                }
                let t = translation_from_local_trivialization(&local, &ideal, x, y)?;
                log.push(record(&ctx2, x, &ideal, &t.j));
                certs.push(t);
            }
            let us = cover.bezout.iter().map(|u| u.embed(&ctx2)).collect::<Result<Vec<_>>>()?;
            (x, us)
        }
        None => {
            let [x1, x2] = support else {
                return Err(Error::UnsupportedDimension(support.len()));
            };
            let (x1, x2) = (*x1, *x2);
            let (a, b) = hermite_basis_of_idempotent(&e2.to_fractions(), Domain::Poly(x2))?;
            let mut rs: Vec<MultiPoly> = Vec::new();
            loop {
                let ideal = if rs.is_empty() {
                    PointIdeal::from_indices(&ctx2, vec![(x2, Rational::zero())])
                } else {
                    match rational_point_search(&ctx2, &[x2], &rs, config)? {
                        PointSearch::Unit => break,
                        PointSearch::Point(p) => p,
                    }
                };
                if rs.len() >= config.max_patch_points {
                    return Err(Error::InvalidInput("patching did not close within the point budget".into()));
                }
                let input = HorrocksInput { e: e2.clone(), a: a.clone(), b: b.clone(), ideal: ideal.clone(), var: x1 };
                let local = horrocks_free_basis(&input)?;
                let t = translation_from_local_trivialization(&local, &ideal, x1, y)?;
                log.push(record(&ctx2, x1, &ideal, &t.j));
                rs.push(t.j.clone());
                certs.push(t);
            }
            let (g, us) = bezout_univariate(&rs, x2)?;
            if !g.is_one() {
                return Err(Error::NotBezout);
            }
            (x1, us)
        }
    };
    let one = bezout_combine(&certs, &us)?;
    let spec = specialize_to_zero(&one)?;
    let back = |m: &Mat<MultiPoly>| m.embed(&ctx);
    let out = EquivalenceCertificate { e: back(&spec.e)?, f: back(&spec.f)?, a: back(&spec.a)?, b: back(&spec.b)? };
    debug_assert!(!out.e.involves(x));
    out.verify().into_result()?;
    Ok(out)
}

fn record(ctx: &VarContext, x: usize, ideal: &PointIdeal, r: &MultiPoly) -> PatchRecord {
    PatchRecord {
        var: ctx.name(x).into(),
        point: ideal.point().iter().map(|(i, v)| (ctx.name(*i).into(), v.clone())).collect(),
        denominator: alloc::format!("{r}"),
    }
}

/// Monomials of total degree at most `d` in `vars`, as exponent vectors.
fn monomials(len: usize, vars: &[usize], d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; len]];
    for &v in vars {
        let mut next = Vec::new();
        for e in &out {
            let used: u32 = e.iter().sum();
            for k in 0..=(d - used) {
                let mut e2 = e.clone();
                e2[v] = k;
                next.push(e2);
            }
        }
        out = next;
    }
    out
}

/// A column `w` with `v·w = 1`, searched by exact linear solving over `Q`
/// with entries of total degree up to `max_degree`.
pub fn unimodular_witness(v: &Mat<MultiPoly>, max_degree: u32) -> Result<Option<Mat<MultiPoly>>> {
    let ctx = v.ctx().clone();
    let n = v.cols();
    let vars = v.support();
    for d in 0..=max_degree {
        let mons = monomials(ctx.len(), &vars, d);
        let mut rows: Vec<Vec<u32>> = vec![vec![0; ctx.len()]];
        let mut columns = Vec::with_capacity(n * mons.len());
        for i in 0..n {
            for mon in &mons {
                let prod = v.get(0, i) * &MultiPoly::monomial(&ctx, mon.clone(), Rational::from_integer(1.into()));
                let mut col = Vec::new();
                for (e, c) in prod.terms() {
                    let r = match rows.iter().position(|x| x == e) {
                        Some(r) => r,
                        None => {
                            rows.push(e.clone());
                            rows.len() - 1
                        }
                    };
                    col.push((r, c.clone()));
                }
                columns.push(col);
            }
        }
        let mut a = Mat::<Rational>::zeros(&(), rows.len(), columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (r, c) in col {
                a.set(*r, j, c.clone());
            }
        }
        let mut rhs = Mat::<Rational>::zeros(&(), rows.len(), 1);
        rhs.set(0, 0, Rational::from_integer(1.into()));
        if let Some(sol) = solve(&a, &rhs)? {
            let mut w = Mat::zeros(&ctx, n, 1);
            for i in 0..n {
                let terms = mons
                    .iter()
                    .enumerate()
                    .map(|(k, mon)| (mon.clone(), sol.get(i * mons.len() + k, 0).clone()));
                w.set(i, 0, MultiPoly::from_terms(&ctx, terms)?);
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// An invertible matrix with first row `v`: the remaining rows are a free
/// basis of the complement `R^n·(I - w·v)`, where `v·w = 1`.
pub fn complete_unimodular_row(v: &Mat<MultiPoly>, config: &SolverConfig) -> Result<Mat<MultiPoly>> {
    if v.rows() != 1 || v.cols() == 0 {
        return Err(Error::InvalidInput("expected a nonempty row vector".into()));
    }
    let ctx = v.ctx().clone();
    let origin: Vec<(usize, Rational)> = (0..ctx.len()).map(|i| (i, Rational::zero())).collect();
    if v.evaluate(&origin).is_zero() {
        return Err(Error::NotUnimodular);
    }
    let deg = v.entries().iter().filter_map(MultiPoly::total_degree).max().unwrap_or(0);
    let w = unimodular_witness(v, deg + config.degree_escalation_ceiling)?.ok_or(Error::NotUnimodular)?;
    let n = v.cols();
    let e = w.mul(v)?;
    let complement = Mat::identity(&ctx, n).sub(&e)?;
    let free = quillen_suslin_free_basis(&complement, config, None)?;
    let m = v.vstack(&free.b)?;
    let det = determinant(&m)?;
    match det.constant_value() {
        Some(c) if !c.is_zero() => Ok(m),
        _ => Err(Error::VerificationFailed(alloc::format!("determinant {det} is not a nonzero constant"))),
    }
}
