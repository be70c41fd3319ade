use std::fmt::{Debug, Display};

use super::matrix::{bareiss_rank, gaussian_rank, Matrix};
use super::prime::{Fp, PrimeField};
use super::rational::Rational;

/// Exact field scalars. `Ctx` carries whatever is needed to build constants
/// (the modulus for `F_p`, nothing for `Q`).
pub trait Scalar: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    type Ctx: Copy + Debug + PartialEq + Eq + Send + Sync + 'static;

    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn from_i64(v: i64, ctx: Self::Ctx) -> Self;
    fn ctx(&self) -> Self::Ctx;

    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn rank_of(m: &Matrix<Self>) -> usize {
        gaussian_rank(m)
    }
}

impl Scalar for Rational {
    type Ctx = ();

    fn zero(_: ()) -> Self {
        Rational::zero()
    }
    fn one(_: ()) -> Self {
        Rational::one()
    }
    fn from_i64(v: i64, _: ()) -> Self {
        Rational::from_int(v)
    }
    fn ctx(&self) {}
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
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
    fn inv(&self) -> Option<Self> {
        if Rational::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn rank_of(m: &Matrix<Self>) -> usize {
        bareiss_rank(m)
    }
}

impl Scalar for Fp {
    type Ctx = PrimeField;

    fn zero(ctx: PrimeField) -> Self {
        ctx.zero()
    }
    fn one(ctx: PrimeField) -> Self {
        ctx.one()
    }
    fn from_i64(v: i64, ctx: PrimeField) -> Self {
        ctx.elem(v)
    }
    fn ctx(&self) -> PrimeField {
        self.field()
    }
    fn is_zero(&self) -> bool {
        Fp::is_zero(*self)
    }
    fn add(&self, o: &Self) -> Self {
        Fp::add(*self, *o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::sub(*self, *o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp::mul(*self, *o)
    }
    fn neg(&self) -> Self {
        Fp::neg(*self)
    }
    fn inv(&self) -> Option<Self> {
        Fp::inv(*self)
    }
}
