use super::{series_of, Rat, RatFun, Series2};
use super::Coeff as C;
use crate::Result;
use std::fmt;

/// Polynomial in a second variable `s` with coefficients in `Q(t)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SPoly {
    c: Vec<RatFun>,
}

impl SPoly {
    pub fn from_coeffs(mut c: Vec<RatFun>) -> Self {
        while c.last().is_some_and(|x| C::is_czero(x)) {
            c.pop();
        }
        SPoly { c }
    }

    pub fn constant(f: RatFun) -> Self {
        Self::from_coeffs(vec![f])
    }

    /// `a + b s`.
    pub fn linear(a: RatFun, b: RatFun) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn coeff(&self, j: usize) -> RatFun {
        self.c.get(j).cloned().unwrap_or_else(<RatFun as C>::czero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs((0..n).map(|j| self.coeff(j).add_ref(&o.coeff(j))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.c.is_empty() || o.c.is_empty() {
            return Self::default();
        }
        let mut c = vec![<RatFun as C>::czero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::from_coeffs(c)
    }

    pub fn scale_rf(&self, f: &RatFun) -> Self {
        Self::from_coeffs(self.c.iter().map(|a| a.mul_ref(f)).collect())
    }

    /// Substitutes a rational value for `s`.
    pub fn eval_s(&self, s: &Rat) -> RatFun {
        let mut acc = <RatFun as C>::czero();
        for a in self.c.iter().rev() {
            acc = acc.cscale(s).add_ref(a);
        }
        acc
    }

    pub fn to_series(&self, order_t: usize, order_s: usize) -> Result<Series2> {
        let mut out = Series2::zero(order_t, order_s);
        for (j, a) in self.c.iter().enumerate().take(order_s + 1) {
            let sa = series_of(a, order_t)?;
            for i in 0..=order_t {
                out.add_at(i, j, sa.coeff(i));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, a)| !C::is_czero(*a))
            .map(|(j, a)| match j {
                0 => format!("[{a}]"),
                1 => format!("[{a}]s"),
                _ => format!("[{a}]s^{j}"),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
