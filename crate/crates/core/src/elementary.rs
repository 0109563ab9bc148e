//! Elementary matrices and Gauss–Jordan factorization over a field.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::ring::Field;

#[derive(Clone, Debug, PartialEq)]
pub enum ElementaryKind<T> {
    /// `I + scalar·e_{row,col}`: adds `scalar` times row `col` to row `row`.
    Transvection { row: usize, col: usize, scalar: T },
    /// Multiplies row `row` by the unit `scalar`.
    Dilation { row: usize, scalar: T },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ElementaryFactor<T> {
    pub size: usize,
    pub kind: ElementaryKind<T>,
}

impl<T: Field> ElementaryFactor<T> {
    pub fn transvection(size: usize, row: usize, col: usize, scalar: T) -> Result<Self> {
        if row == col || row >= size || col >= size {
            return Err(Error::InvalidInput(alloc::format!("bad transvection ({row}, {col}) in size {size}")));
        }
        Ok(ElementaryFactor { size, kind: ElementaryKind::Transvection { row, col, scalar } })
    }

    pub fn dilation(size: usize, row: usize, scalar: T) -> Result<Self> {
        if row >= size || scalar.is_zero() {
            return Err(Error::InvalidInput(alloc::format!("bad dilation at row {row} in size {size}")));
        }
        Ok(ElementaryFactor { size, kind: ElementaryKind::Dilation { row, scalar } })
    }

    pub fn to_matrix(&self, ctx: &T::Ctx) -> Mat<T> {
        let mut m = Mat::identity(ctx, self.size);
        match &self.kind {
            ElementaryKind::Transvection { row, col, scalar } => m.set(*row, *col, scalar.clone()),
            ElementaryKind::Dilation { row, scalar } => m.set(*row, *row, scalar.clone()),
        }
        m
    }

    pub fn inverse(&self) -> Self {
        let kind = match &self.kind {
            ElementaryKind::Transvection { row, col, scalar } => {
                ElementaryKind::Transvection { row: *row, col: *col, scalar: scalar.neg() }
            }
            ElementaryKind::Dilation { row, scalar } => {
                ElementaryKind::Dilation { row: *row, scalar: scalar.inv().expect("dilations are units") }
            }
        };
        ElementaryFactor { size: self.size, kind }
    }

    /// `self · m`, as a row operation on `m`.
    pub fn apply_left(&self, m: &mut Mat<T>) {
        match &self.kind {
            ElementaryKind::Transvection { row, col, scalar } => {
                for j in 0..m.cols() {
                    let v = m.get(*row, j).add(&scalar.mul(m.get(*col, j)));
                    m.set(*row, j, v);
                }
            }
            ElementaryKind::Dilation { row, scalar } => {
                for j in 0..m.cols() {
                    let v = scalar.mul(m.get(*row, j));
                    m.set(*row, j, v);
                }
            }
        }
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> ElementaryFactor<U> {
        let kind = match &self.kind {
            ElementaryKind::Transvection { row, col, scalar } => {
                ElementaryKind::Transvection { row: *row, col: *col, scalar: f(scalar) }
            }
            ElementaryKind::Dilation { row, scalar } => ElementaryKind::Dilation { row: *row, scalar: f(scalar) },
        };
        ElementaryFactor { size: self.size, kind }
    }
}

/// Ordered product `f_0 · f_1 · ... · f_k`.
pub fn product<T: Field>(ctx: &T::Ctx, size: usize, factors: &[ElementaryFactor<T>]) -> Mat<T> {
    let mut m = Mat::identity(ctx, size);
    for f in factors.iter().rev() {
        f.apply_left(&mut m);
    }
    m
}

/// Factors of the inverse: the inverted factors in reverse order.
pub fn inverse_factors<T: Field>(factors: &[ElementaryFactor<T>]) -> Vec<ElementaryFactor<T>> {
    factors.iter().rev().map(ElementaryFactor::inverse).collect()
}

/// Factors whose ordered product is `m`, by Gauss–Jordan elimination without
/// row swaps. A zero pivot is repaired by adding the first lower row with a
/// nonzero entry in that column; the dilation of each pivot row comes last in
/// its column block and is omitted when the pivot is already 1. At most
/// `m² + m` factors are produced.
pub fn elementary_factorization<T: Field>(m: &Mat<T>) -> Result<Vec<ElementaryFactor<T>>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { op: "factorize", left: m.dims(), right: m.dims() });
    }
    let n = m.rows();
    let ctx = m.ctx().clone();
    let mut work = m.clone();
    let mut ops: Vec<ElementaryFactor<T>> = Vec::new();
    let record = |op: ElementaryFactor<T>, work: &mut Mat<T>, ops: &mut Vec<ElementaryFactor<T>>| {
        op.apply_left(work);
        ops.push(op);
    };
    for c in 0..n {
        if work.get(c, c).is_zero() {
            let Some(i) = (c + 1..n).find(|&i| !work.get(i, c).is_zero()) else {
                return Err(Error::SingularMatrix);
            };
            record(ElementaryFactor::transvection(n, c, i, T::one(&ctx))?, &mut work, &mut ops);
        }
        let pivot_inv = work.get(c, c).inv().expect("nonzero pivot");
        for i in 0..n {
            if i == c || work.get(i, c).is_zero() {
                continue;
            }
            let s = work.get(i, c).mul(&pivot_inv).neg();
            record(ElementaryFactor::transvection(n, i, c, s)?, &mut work, &mut ops);
        }
        if !work.get(c, c).is_one(&ctx) {
            record(ElementaryFactor::dilation(n, c, pivot_inv)?, &mut work, &mut ops);
        }
    }
    debug_assert!(work.is_identity());
    // ops_k ... ops_1 · m = I, so m = ops_1⁻¹ · ... · ops_k⁻¹
    Ok(ops.iter().map(ElementaryFactor::inverse).collect())
}
