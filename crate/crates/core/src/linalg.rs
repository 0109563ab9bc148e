//! Exact linear algebra: Gauss–Jordan solving over a field and Bareiss
//! determinants over any ring with exact division.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::matrix::Mat;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::{Field, Ring};

/// Rings in which a known-exact quotient can be computed.
pub trait ExactDivision: Ring {
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

impl ExactDivision for MultiPoly {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        MultiPoly::div_exact(self, d)
    }
}

impl ExactDivision for Fraction {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.checked_div(d)
    }
}

impl ExactDivision for Rational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        Field::div(self, d)
    }
}

/// Fraction-free determinant (Bareiss), with row swaps on zero pivots.
pub fn determinant<T: ExactDivision>(a: &Mat<T>) -> Result<T> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { op: "det", left: a.dims(), right: a.dims() });
    }
    let n = a.rows();
    let ctx = a.ctx().clone();
    if n == 0 {
        return Ok(T::one(&ctx));
    }
    let mut m: Vec<Vec<T>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = T::one(&ctx);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(T::zero(&ctx)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// Reduced row echelon form; returns the pivot columns.
pub fn rref<F: Field>(a: &mut Mat<F>) -> Vec<usize> {
    let (rows, cols) = a.dims();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let t = a.get(p, j).clone();
                a.set(p, j, a.get(r, j).clone());
                a.set(r, j, t);
            }
        }
        let inv = a.get(r, c).inv().unwrap();
        for j in c..cols {
            let v = a.get(r, j).mul(&inv);
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..cols {
                let v = a.get(i, j).sub(&f.mul(a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A particular solution `X` of `A·X = B` (free unknowns set to zero), or
/// `None` when the system is inconsistent.
pub fn solve<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Result<Option<Mat<F>>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch { op: "solve", left: a.dims(), right: b.dims() });
    }
    let n = a.cols();
    let mut aug = a.hstack(b)?;
    let pivots = rref(&mut aug);
    if pivots.iter().any(|&c| c >= n) {
        return Ok(None);
    }
    let mut x = Mat::zeros(a.ctx(), n, b.cols());
    for (r, &c) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(c, j, aug.get(r, n + j).clone());
        }
    }
    Ok(Some(x))
}

pub fn inverse<F: Field>(a: &Mat<F>) -> Result<Mat<F>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch { op: "inverse", left: a.dims(), right: a.dims() });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(a.clone());
    }
    let mut aug = a.hstack(&Mat::identity(a.ctx(), n))?;
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::SingularMatrix);
    }
    Ok(aug.submatrix(0..n, n..2 * n))
}

pub fn rank<F: Field>(a: &Mat<F>) -> usize {
    let mut m = a.clone();
    rref(&mut m).len()
}
