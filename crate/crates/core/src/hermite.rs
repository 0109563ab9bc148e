//! Free bases of projective row modules over a Euclidean domain.
//!
//! The domain is either a field `K` (the fraction field of the context) or
//! `K[var]` with `K` the fraction field of the remaining variables; in both
//! cases entries are [`Fraction`]s and membership is a predicate.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::matrix::Mat;
use crate::poly::MultiPoly;

/// A Euclidean domain inside the rational function field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// The whole fraction field.
    Field,
    /// `K[var]`, `K` the fraction field of the other variables.
    Poly(usize),
}

impl Domain {
    fn degree(&self, a: &Fraction) -> u32 {
        match self {
            Domain::Field => 0,
            Domain::Poly(v) => a.degree_in(*v).unwrap_or(0),
        }
    }

    fn divmod(&self, a: &Fraction, d: &Fraction) -> Result<(Fraction, Fraction)> {
        match self {
            Domain::Field => Ok((a.checked_div(d).ok_or(Error::ZeroDenominator)?, Fraction::zero(a.ctx()))),
            Domain::Poly(v) => a.divmod_in(d, *v),
        }
    }

    fn leading(&self, a: &Fraction) -> Fraction {
        match self {
            Domain::Field => a.clone(),
            Domain::Poly(v) => a.lc_in(*v),
        }
    }

    pub fn contains(&self, a: &Fraction) -> bool {
        match self {
            Domain::Field => true,
            Domain::Poly(v) => a.is_polynomial_in(*v),
        }
    }
}

fn row_axpy(m: &mut Mat<Fraction>, target: usize, q: &Fraction, source: usize) {
    for j in 0..m.cols() {
        let v = m.get(target, j) - &(q * m.get(source, j));
        m.set(target, j, v);
    }
}

fn swap_rows(m: &mut Mat<Fraction>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let t = m.get(a, j).clone();
        m.set(a, j, m.get(b, j).clone());
        m.set(b, j, t);
    }
}

/// Hermite normal form by unimodular row operations: pivots are monic
/// (leading coefficient 1) and entries above a pivot are reduced modulo it.
/// Within a column the pivot is the entry of smallest degree, ties going to
/// the topmost row. Returns the form and its pivot columns.
pub fn hermite_normal_form(m: &Mat<Fraction>, domain: Domain) -> Result<(Mat<Fraction>, Vec<usize>)> {
    if let Some(bad) = m.entries().iter().find(|a| !domain.contains(a)) {
        return Err(Error::InvalidInput(alloc::format!("{bad} is outside the Euclidean domain")));
    }
    let mut h = m.clone();
    let rows = h.rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..h.cols() {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by_key(|&i| (domain.degree(h.get(i, c)), i));
            let Some(p) = best else { break };
            swap_rows(&mut h, p, r);
            let mut done = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let (q, rem) = domain.divmod(h.get(i, c), h.get(r, c))?;
                row_axpy(&mut h, i, &q, r);
                if !rem.is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        let unit = domain.leading(h.get(r, c)).inv().expect("nonzero pivot");
        for j in 0..h.cols() {
            let v = h.get(r, j) * &unit;
            h.set(r, j, v);
        }
        for i in 0..r {
            if h.get(i, c).is_zero() {
                continue;
            }
            let (q, _) = domain.divmod(h.get(i, c), h.get(r, c))?;
            row_axpy(&mut h, i, &q, r);
        }
        pivots.push(c);
        r += 1;
    }
    Ok((h, pivots))
}

/// `(C, D)` with `C·D = E` and `D·C = I_m`: the rows of `D` are the nonzero
/// rows of the Hermite normal form of `E`, a basis of the row module `R^n·E`.
pub fn hermite_basis_of_idempotent(e: &Mat<Fraction>, domain: Domain) -> Result<(Mat<Fraction>, Mat<Fraction>)> {
    if !e.is_square() || !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let n = e.rows();
    let ctx = e.ctx().clone();
    let (h, pivots) = hermite_normal_form(e, domain)?;
    let m = pivots.len();
    let d = h.submatrix(0..m, 0..n);
    let mut c = Mat::zeros(&ctx, n, m);
    for i in 0..n {
        let mut residual: Vec<Fraction> = e.row(i).to_vec();
        for (k, &p) in pivots.iter().enumerate() {
            if residual[p].is_zero() {
                continue;
            }
            let (q, rem) = domain.divmod(&residual[p], d.get(k, p))?;
            if !rem.is_zero() {
                return Err(Error::NotIdempotent);
            }
            for (j, r) in residual.iter_mut().enumerate() {
                *r = &*r - &(&q * d.get(k, j));
            }
            c.set(i, k, q);
        }
        if residual.iter().any(|r| !r.is_zero()) {
            return Err(Error::NotIdempotent);
        }
    }
    if !d.mul(&c)?.is_identity() {
        return Err(Error::NotIdempotent);
    }
    Ok((c, d))
}

/// [`hermite_basis_of_idempotent`] for a polynomial idempotent over `Q[var]`
/// (or over `Q` when `var` is `None`); the basis is again polynomial.
pub fn hermite_basis_poly(e: &Mat<MultiPoly>, var: Option<usize>) -> Result<(Mat<MultiPoly>, Mat<MultiPoly>)> {
    let allowed: Vec<usize> = var.into_iter().collect();
    if e.entries().iter().any(|a| !a.only_involves(&allowed)) {
        return Err(Error::InvalidInput("entries must lie in a univariate polynomial ring".into()));
    }
    let domain = var.map_or(Domain::Field, Domain::Poly);
    let (c, d) = hermite_basis_of_idempotent(&e.to_fractions(), domain)?;
    let to_poly = |m: Mat<Fraction>| m.to_polys().ok_or(Error::NotIdempotent);
    Ok((to_poly(c)?, to_poly(d)?))
}
