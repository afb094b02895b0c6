//! Exact coefficient domains: rationals, polynomials and rational functions
//! in `t`, truncated power series and multiquadratic radical extensions.

mod poly;
mod radext;
mod ratfun;
mod series;
mod spoly;

pub use poly::Poly;
pub use radext::{rad_inv, rad_mul, squarefree_decompose, RadExt};
pub use ratfun::RatFun;
pub use series::{series_of, Series2, TruncSeries};
pub use spoly::SPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn pow2(e: i64) -> Rat {
    let p = Rat::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| crate::Error::Parse(format!("not a rational: {s:?}")))
}

/// Coefficient domain shared by symmetric functions and multivariate polynomials.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn czero() -> Self;
    fn cone() -> Self;
    fn from_rat(r: Rat) -> Self;
    fn is_czero(&self) -> bool;
    fn cadd(&self, o: &Self) -> Self;
    fn csub(&self, o: &Self) -> Self;
    fn cmul(&self, o: &Self) -> Self;
    fn cneg(&self) -> Self;
    fn cscale(&self, r: &Rat) -> Self;
    fn cparse(s: &str) -> crate::Result<Self>;
}

impl Coeff for Rat {
    fn czero() -> Self {
        Zero::zero()
    }
    fn cone() -> Self {
        One::one()
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn is_czero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cadd(&self, o: &Self) -> Self {
        self + o
    }
    fn csub(&self, o: &Self) -> Self {
        self - o
    }
    fn cmul(&self, o: &Self) -> Self {
        self * o
    }
    fn cneg(&self) -> Self {
        -self
    }
    fn cscale(&self, r: &Rat) -> Self {
        self * r
    }
    fn cparse(s: &str) -> crate::Result<Self> {
        parse_rat(s)
    }
}

/// Formats a rational for use as a coefficient in front of a power of a variable.
pub(crate) fn coeff_prefix(c: &Rat) -> String {
    if c.is_integer() {
        if c.is_one() {
            String::new()
        } else {
            c.to_string()
        }
    } else {
        format!("({c})")
    }
}

pub(crate) fn is_neg(c: &Rat) -> bool {
    c.is_negative()
}
