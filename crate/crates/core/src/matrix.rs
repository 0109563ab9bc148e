//! Dense matrices over any [`Ring`].
//!
//! Zero-row and zero-column matrices are legal; an empty product is the
//! identity of the right size.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::Ring;
use crate::vars::VarContext;

#[derive(Clone, PartialEq)]
pub struct Mat<T: Ring> {
    rows: usize,
    cols: usize,
    ctx: T::Ctx,
    entries: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn zeros(ctx: &T::Ctx, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, ctx: ctx.clone(), entries: alloc::vec![T::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &T::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one(ctx);
        }
        m
    }

    /// Row-major construction.
    pub fn from_vec(ctx: &T::Ctx, rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(alloc::format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Mat { rows, cols, ctx: ctx.clone(), entries })
    }

    pub fn from_rows(ctx: &T::Ctx, rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput("ragged rows".into()));
        }
        Self::from_vec(ctx, r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ctx(&self) -> &T::Ctx {
        &self.ctx
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Mat<T>) -> Result<Mat<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: self.dims(),
                right: rhs.dims(),
            });
        }
        let mut out: Mat<T> = Mat::zeros(&self.ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Mat<T>, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Mat<T>> {
        if self.dims() != rhs.dims() {
            return Err(Error::DimensionMismatch { op, left: self.dims(), right: rhs.dims() });
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), entries })
    }

    pub fn add(&self, rhs: &Mat<T>) -> Result<Mat<T>> {
        self.zip_with(rhs, "add", |a, b| a.add(b))
    }

    pub fn sub(&self, rhs: &Mat<T>) -> Result<Mat<T>> {
        self.zip_with(rhs, "sub", |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Mat<T> {
        self.map_same(|a| a.neg())
    }

    pub fn scale(&self, c: &T) -> Mat<T> {
        self.map_same(|a| a.mul(c))
    }

    pub fn transpose(&self) -> Mat<T> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Mat { rows: self.cols, cols: self.rows, ctx: self.ctx.clone(), entries }
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Mat<T>) -> Result<Mat<T>> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch { op: "hstack", left: self.dims(), right: rhs.dims() });
        }
        let mut entries = Vec::with_capacity(self.entries.len() + rhs.entries.len());
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(rhs.row(i));
        }
        Ok(Mat { rows: self.rows, cols: self.cols + rhs.cols, ctx: self.ctx.clone(), entries })
    }

    /// `self` above `rhs`.
    pub fn vstack(&self, rhs: &Mat<T>) -> Result<Mat<T>> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch { op: "vstack", left: self.dims(), right: rhs.dims() });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&rhs.entries);
        Ok(Mat { rows: self.rows + rhs.rows, cols: self.cols, ctx: self.ctx.clone(), entries })
    }

    pub fn block_diag(&self, rhs: &Mat<T>) -> Mat<T> {
        let mut out = Mat::zeros(&self.ctx, self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Mat<T> {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            for j in cols.clone() {
                entries.push(self.get(i, j).clone());
            }
        }
        Mat { rows: rows.len(), cols: cols.len(), ctx: self.ctx.clone(), entries }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols))
            .fold(T::zero(&self.ctx), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(&self.ctx, self.rows)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    pub fn map_same(&self, f: impl Fn(&T) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx.clone(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn map<U: Ring>(&self, ctx: &U::Ctx, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, ctx: ctx.clone(), entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, ctx: &U::Ctx, f: impl Fn(&T) -> Result<U>) -> Result<Mat<U>> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<U>>>()?;
        Ok(Mat { rows: self.rows, cols: self.cols, ctx: ctx.clone(), entries })
    }

    /// First `(row, col)` where the two matrices differ.
    pub fn first_difference(&self, other: &Mat<T>) -> Option<(usize, usize)> {
        if self.dims() != other.dims() {
            return Some((0, 0));
        }
        (0..self.entries.len())
            .find(|&k| self.entries[k] != other.entries[k])
            .map(|k| (k / self.cols, k % self.cols))
    }
}

impl Mat<MultiPoly> {
    pub fn to_fractions(&self) -> Mat<Fraction> {
        self.map(&self.ctx, |p| Fraction::from_poly(p.clone()))
    }

    pub fn substitute(&self, var: usize, replacement: &MultiPoly) -> Mat<MultiPoly> {
        self.map_same(|p| p.substitute(var, replacement))
    }

    pub fn evaluate(&self, point: &[(usize, Rational)]) -> Mat<MultiPoly> {
        self.map_same(|p| p.evaluate(point))
    }

    pub fn embed(&self, target: &VarContext) -> Result<Mat<MultiPoly>> {
        self.try_map(target, |p| p.embed(target))
    }

    pub fn involves(&self, var: usize) -> bool {
        self.entries.iter().any(|p| p.involves(var))
    }

    /// Variables occurring in some entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ctx.len()).filter(|&v| self.involves(v)).collect()
    }
}

impl Mat<Fraction> {
    /// `None` unless every entry has denominator 1.
    pub fn to_polys(&self) -> Option<Mat<MultiPoly>> {
        self.try_map(&self.ctx, |f| f.to_poly().ok_or(Error::ZeroDenominator)).ok()
    }

    pub fn substitute(&self, var: usize, replacement: &MultiPoly) -> Result<Mat<Fraction>> {
        self.try_map(&self.ctx, |f| f.substitute(var, replacement))
    }

    pub fn embed(&self, target: &VarContext) -> Result<Mat<Fraction>> {
        self.try_map(target, |f| f.embed(target))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl<T: Ring> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}


#[cfg(test)]
mod tests {
    use super::test_support::pm;
    use super::*;
    use crate::poly::test_support::ctx;

    #[test]
    fn arithmetic_examples() {
        let c = ctx(&["x", "y"]);
        let i2 = Mat::<MultiPoly>::identity(&c, 2);
        assert_eq!(i2.mul(&i2).unwrap(), i2);
        assert_eq!(pm(&c, &[&["x"]]).mul(&pm(&c, &[&["y"]])).unwrap(), pm(&c, &[&["x*y"]]));
        let a = pm(&c, &[&["1", "x", "y"], &["2", "0", "x*y"]]);
        let b = pm(&c, &[&["x"], &["y"], &["1"]]);
        assert_eq!(a.mul(&b).unwrap(), pm(&c, &[&["x*y + x + y"], &["2*x + x*y"]]));
        assert!(matches!(b.mul(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn empty_shapes() {
        let c = ctx(&["x"]);
        let a = Mat::<MultiPoly>::zeros(&c, 3, 0);
        let b = Mat::<MultiPoly>::zeros(&c, 0, 3);
        assert_eq!(a.mul(&b).unwrap(), Mat::zeros(&c, 3, 3));
        assert_eq!(b.mul(&a).unwrap(), Mat::identity(&c, 0));
        assert!(Mat::<MultiPoly>::identity(&c, 0).is_idempotent());
    }

    #[test]
    fn stacking_and_trace() {
        let c = ctx(&["x"]);
        let a = pm(&c, &[&["1", "x"]]);
        let b = pm(&c, &[&["x", "0"]]);
        let v = a.vstack(&b).unwrap();
        assert_eq!(v, pm(&c, &[&["1", "x"], &["x", "0"]]));
        assert_eq!(v.transpose(), pm(&c, &[&["1", "x"], &["x", "0"]]));
        assert_eq!(a.hstack(&b).unwrap().dims(), (1, 4));
        assert_eq!(v.trace(), MultiPoly::one(&c));
        let d = a.block_diag(&b);
        assert_eq!(d.dims(), (2, 4));
    }
}
