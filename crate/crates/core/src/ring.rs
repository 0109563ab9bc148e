//! Minimal ring interface shared by matrix code.

use core::fmt::Debug;

use num_traits::{One, Zero};

use crate::fraction::Fraction;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::vars::VarContext;

/// A commutative ring whose elements know the context they live in, so that
/// matrices of any shape (including empty ones) can produce zeros and ones.
pub trait Ring: Clone + PartialEq + Debug {
    type Ctx: Clone + PartialEq + Debug;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self, ctx: &Self::Ctx) -> bool {
        *self == Self::one(ctx)
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl Ring for Rational {
    type Ctx = ();
    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Ring for MultiPoly {
    type Ctx = VarContext;
    fn zero(ctx: &VarContext) -> Self {
        MultiPoly::zero(ctx)
    }
    fn one(ctx: &VarContext) -> Self {
        MultiPoly::one(ctx)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self, _: &VarContext) -> bool {
        MultiPoly::is_one(self)
    }
}

impl Ring for Fraction {
    type Ctx = VarContext;
    fn zero(ctx: &VarContext) -> Self {
        Fraction::zero(ctx)
    }
    fn one(ctx: &VarContext) -> Self {
        Fraction::one(ctx)
    }
    fn is_zero(&self) -> bool {
        Fraction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self, _: &VarContext) -> bool {
        Fraction::is_one(self)
    }
}

impl Field for Fraction {
    fn inv(&self) -> Option<Self> {
        Fraction::inv(self)
    }
}
