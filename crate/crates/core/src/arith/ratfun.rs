use super::{Poly, Rat};
use super::Coeff as C;
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Rational function in `t`, kept gcd-reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(Poly::default()));
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let l = den.lead().recip();
        Ok(RatFun { num: num.scale_ref(&l), den: den.scale_ref(&l) })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun { num: p, den: Poly::constant(Rat::one()) }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    /// `1 / (1 - t^k)`.
    pub fn geometric(k: usize) -> Self {
        Self::new(Poly::constant(Rat::one()), Poly::one_minus_tpow(k)).expect("nonzero")
    }

    pub fn is_polynomial(&self) -> Option<Poly> {
        (self.den.degree() == Some(0)).then(|| self.num.scale_ref(&self.den.lead().recip()))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        Self::new(self.num.mul_ref(&o.num), self.den.mul_ref(&o.den)).expect("nonzero")
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add_ref(&o.num), self.den.clone()).expect("nonzero");
        }
        Self::new(
            self.num.mul_ref(&o.den).add_ref(&o.num.mul_ref(&self.den)),
            self.den.mul_ref(&o.den),
        )
        .expect("nonzero")
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }

    /// `f(t^k)`.
    pub fn subs_pow(&self, k: usize) -> Self {
        Self::new(self.num.subs_pow(k), self.den.subs_pow(k)).expect("nonzero")
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.is_polynomial() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

impl C for RatFun {
    fn czero() -> Self {
        Self::from_poly(Poly::default())
    }
    fn cone() -> Self {
        Self::from_poly(Poly::constant(Rat::one()))
    }
    fn from_rat(r: Rat) -> Self {
        Self::from_poly(Poly::constant(r))
    }
    fn is_czero(&self) -> bool {
        self.num.is_zero()
    }
    fn cadd(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn csub(&self, o: &Self) -> Self {
        self.add_ref(&o.cneg())
    }
    fn cmul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn cneg(&self) -> Self {
        RatFun { num: self.num.neg_ref(), den: self.den.clone() }
    }
    fn cscale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::czero();
        }
        RatFun { num: self.num.scale_ref(r), den: self.den.clone() }
    }
    fn cparse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some(split) = top_level_split(rest) {
                let num = Poly::parse_var(&rest[..split], "t")?;
                let den_part = &rest[split + 3..];
                let den = den_part
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("bad rational function {s:?}")))?;
                return Self::new(num, Poly::parse_var(den, "t")?);
            }
        }
        Ok(Self::from_poly(Poly::parse_var(s, "t")?))
    }
}

/// Position of the `)/(` separating numerator and denominator.
fn top_level_split(rest: &str) -> Option<usize> {
    let mut depth = 0i32;
    let b = rest.as_bytes();
    for i in 0..b.len() {
        match b[i] {
            b'(' => depth += 1,
            b')' => {
                if depth == 0 {
                    return rest[i..].starts_with(")/(").then_some(i);
                }
                depth -= 1;
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced() {
        let a = RatFun::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-2, 2])).unwrap();
        assert_eq!(a.is_polynomial().unwrap(), Poly::from_ints(&[1, 1]).scale_ref(&crate::arith::rat(1, 2)));
        let b = RatFun::new(Poly::from_ints(&[2]), Poly::from_ints(&[2, -2])).unwrap();
        assert_eq!(b.den().lead(), Rat::one());
        assert_eq!(b, RatFun::geometric(1));
    }

    #[test]
    fn parse_round_trips() {
        let a = RatFun::new(Poly::from_ints(&[1, 0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
        let s = a.to_string();
        assert_eq!(<RatFun as C>::cparse(&s).unwrap(), a);
        let p = RatFun::from_poly(Poly::from_ints(&[0, 3]));
        assert_eq!(<RatFun as C>::cparse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn arithmetic_identities() {
        let g = RatFun::geometric(1);
        let one = <RatFun as C>::cone();
        let lhs = g.mul_ref(&RatFun::from_poly(Poly::one_minus_tpow(1)));
        assert_eq!(lhs, one);
        let x = g.add_ref(&g.cneg());
        assert!(C::is_czero(&x));
    }
}
