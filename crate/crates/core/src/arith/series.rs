use super::{Poly, RatFun, Rat};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// Power series in `t` known exactly up to and including `t^order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    c: Vec<Rat>,
    order: usize,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { c: vec![Rat::zero(); order + 1], order }
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(&Poly::constant(Rat::one()), order)
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, a) in p.coeffs().iter().enumerate().take(order + 1) {
            s.c[k] = a.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn add_at(&mut self, k: usize, r: &Rat) {
        if k <= self.order {
            self.c[k] += r;
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        TruncSeries { c: (0..=order).map(|k| &self.c[k] + &o.c[k]).collect(), order }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        TruncSeries { c: (0..=order).map(|k| &self.c[k] - &o.c[k]).collect(), order }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        TruncSeries { c: self.c.iter().map(|a| a * r).collect(), order: self.order }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut c = vec![Rat::zero(); order + 1];
        for i in 0..=order {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if !o.c[j].is_zero() {
                    c[i + j] += &self.c[i] * &o.c[j];
                }
            }
        }
        TruncSeries { c, order }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncSeries { c: self.c[..=order].to_vec(), order }
    }

    /// The known part as a polynomial.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.c.clone())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            write!(f, "O(t^{})", self.order + 1)
        } else {
            write!(f, "{p} + O(t^{})", self.order + 1)
        }
    }
}

/// Taylor expansion of a rational function at `t = 0`.
pub fn series_of(f: &RatFun, order: usize) -> Result<TruncSeries> {
    let den = f.den();
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::SeriesPole);
    }
    let inv0 = d0.recip();
    let mut c = vec![Rat::zero(); order + 1];
    for k in 0..=order {
        let mut acc = f.num().coeff(k);
        for j in 1..=k {
            let dj = den.coeff(j);
            if !dj.is_zero() {
                acc -= &dj * &c[k - j];
            }
        }
        c[k] = acc * &inv0;
    }
    Ok(TruncSeries { c, order })
}

/// Bivariate power series in `(t, s)` known for `t`-degree `<= order_t` and `s`-degree `<= order_s`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series2 {
    c: Vec<Vec<Rat>>,
    order_t: usize,
    order_s: usize,
}

impl Series2 {
    pub fn zero(order_t: usize, order_s: usize) -> Self {
        Series2 { c: vec![vec![Rat::zero(); order_s + 1]; order_t + 1], order_t, order_s }
    }

    pub fn one(order_t: usize, order_s: usize) -> Self {
        let mut s = Self::zero(order_t, order_s);
        s.c[0][0] = Rat::one();
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.order_t, self.order_s)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rat {
        &self.c[i][j]
    }

    pub fn add_at(&mut self, i: usize, j: usize, r: &Rat) {
        if i <= self.order_t && j <= self.order_s {
            self.c[i][j] += r;
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let (ot, os) = (self.order_t.min(o.order_t), self.order_s.min(o.order_s));
        let mut r = Self::zero(ot, os);
        for i in 0..=ot {
            for j in 0..=os {
                r.c[i][j] = &self.c[i][j] + &o.c[i][j];
            }
        }
        r
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Series2 {
            c: self.c.iter().map(|row| row.iter().map(|a| a * k).collect()).collect(),
            order_t: self.order_t,
            order_s: self.order_s,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (ot, os) = (self.order_t.min(o.order_t), self.order_s.min(o.order_s));
        let mut r = Self::zero(ot, os);
        for i in 0..=ot {
            for j in 0..=os {
                let a = &self.c[i][j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..=(ot - i) {
                    for l in 0..=(os - j) {
                        let b = &o.c[k][l];
                        if !b.is_zero() {
                            r.c[i + k][j + l] += a * b;
                        }
                    }
                }
            }
        }
        r
    }

    /// Coefficient of `s^j` as a univariate series in `t`.
    pub fn s_slice(&self, j: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(self.order_t);
        for i in 0..=self.order_t {
            s.c[i] = self.c[i][j].clone();
        }
        s
    }
}

impl fmt::Display for Series2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for j in 0..=self.order_s {
            let p = self.s_slice(j).to_poly();
            if p.is_zero() {
                continue;
            }
            let sp = match j {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{j}"),
            };
            if sp.is_empty() {
                parts.push(format!("({p})"));
            } else {
                parts.push(format!("({p}){sp}"));
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O(t^{}, s^{})", parts.join(" + "), self.order_t + 1, self.order_s + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rint;

    #[test]
    fn geometric_series() {
        let s = series_of(&RatFun::geometric(2), 6).unwrap();
        let want: Vec<Rat> = [1, 0, 1, 0, 1, 0, 1].iter().map(|&x| rint(x)).collect();
        assert_eq!(s.coeffs(), &want[..]);
    }

    #[test]
    fn pole_is_rejected() {
        let f = RatFun::new(Poly::constant(rint(1)), Poly::t()).unwrap();
        assert_eq!(series_of(&f, 3), Err(Error::SeriesPole));
    }

    #[test]
    fn product_matches_rational_product() {
        let a = RatFun::geometric(1);
        let b = RatFun::geometric(3);
        let lhs = series_of(&a.mul_ref(&b), 10).unwrap();
        let rhs = series_of(&a, 10).unwrap().mul(&series_of(&b, 10).unwrap());
        assert_eq!(lhs, rhs);
    }
}
