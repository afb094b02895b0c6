use super::{coeff_prefix, is_neg, parse_rat, Rat};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense univariate polynomial over the rationals, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn from_coeffs(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| super::rint(x)).collect())
    }

    pub fn constant(r: Rat) -> Self {
        Self::from_coeffs(vec![r])
    }

    pub fn monomial(r: Rat, k: usize) -> Self {
        let mut c = vec![Rat::zero(); k + 1];
        c[k] = r;
        Self::from_coeffs(c)
    }

    /// The variable itself.
    pub fn t() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// `t^k`.
    pub fn tpow(k: usize) -> Self {
        Self::monomial(Rat::one(), k)
    }

    /// `1 - t^k`.
    pub fn one_minus_tpow(k: usize) -> Self {
        let mut p = Self::tpow(k).neg_ref();
        p = p.add_ref(&Self::constant(Rat::one()));
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn lead(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_ref(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub_ref(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg_ref(&self) -> Poly {
        Poly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn scale_ref(&self, r: &Rat) -> Poly {
        Poly::from_coeffs(self.c.iter().map(|x| x * r).collect())
    }

    pub fn mul_ref(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::default();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::constant(Rat::one());
        for _ in 0..e {
            r = r.mul_ref(self);
        }
        r
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::default();
        }
        let mut c = vec![Rat::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Euclidean division; fails on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.lead();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::default(), self.clone()));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] / &lead;
            if f.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] -= &f * b;
            }
            q[k] = f;
        }
        r.truncate(dd);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::default();
        }
        let l = self.lead();
        self.scale_ref(&l.recip())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// `p(t^k)`.
    pub fn subs_pow(&self, k: usize) -> Poly {
        let mut c = vec![Rat::zero(); (self.c.len().max(1) - 1) * k + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[i * k] = a.clone();
        }
        Poly::from_coeffs(c)
    }

    /// `p(-t)`.
    pub fn subs_neg(&self) -> Poly {
        Poly::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 1 { -a } else { a.clone() })
                .collect(),
        )
    }

    /// `t^d p(1/t)`; `None` if `deg p > d`.
    pub fn reflect(&self, d: usize) -> Option<Poly> {
        if self.degree().is_some_and(|g| g > d) {
            return None;
        }
        let mut c = vec![Rat::zero(); d + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[d - i] = a.clone();
        }
        Some(Poly::from_coeffs(c))
    }

    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.c.iter().all(|a| a.is_integer() && !a.is_negative())
    }

    pub fn sum_coeffs(&self) -> Rat {
        self.c.iter().fold(Rat::zero(), |a, b| a + b)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = is_neg(a);
            let abs = if neg { -a } else { a.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if k == 0 {
                out.push_str(&abs.to_string());
            } else {
                out.push_str(&coeff_prefix(&abs));
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }

    /// Parses the output of [`Poly::fmt_var`].
    pub fn parse_var(s: &str, var: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut neg = false;
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let ch = chars[i];
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (ch == '+' || ch == '-') && !cur.trim().is_empty() && !cur.trim_end().ends_with('^') {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
                i += 1;
                continue;
            }
            if depth == 0 && ch == '-' && cur.trim().is_empty() {
                neg = !neg;
                i += 1;
                continue;
            }
            cur.push(ch);
            i += 1;
        }
        terms.push((neg, cur));
        let mut p = Poly::default();
        for (neg, t) in terms {
            let t: String = t.chars().filter(|c| !c.is_whitespace()).collect();
            if t.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let (coef, k) = match t.find(var) {
                None => (parse_rat(&t)?, 0usize),
                Some(pos) => {
                    let head = &t[..pos];
                    let tail = &t[pos + var.len()..];
                    let c = if head.is_empty() {
                        Rat::one()
                    } else if head.starts_with('(') && head.ends_with(')') {
                        parse_rat(&head[1..head.len() - 1])?
                    } else {
                        parse_rat(head)?
                    };
                    let k = if tail.is_empty() {
                        1
                    } else if let Some(e) = tail.strip_prefix('^') {
                        e.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?
                    } else {
                        return Err(Error::Parse(format!("bad term {t:?}")));
                    };
                    (c, k)
                }
            };
            let coef = if neg { -coef } else { coef };
            p = p.add_ref(&Poly::monomial(coef, k));
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("t"))
    }
}

impl super::Coeff for Poly {
    fn czero() -> Self {
        Poly::default()
    }
    fn cone() -> Self {
        Poly::constant(Rat::one())
    }
    fn from_rat(r: Rat) -> Self {
        Poly::constant(r)
    }
    fn is_czero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn cadd(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn csub(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn cmul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn cneg(&self) -> Self {
        self.neg_ref()
    }
    fn cscale(&self, r: &Rat) -> Self {
        self.scale_ref(r)
    }
    fn cparse(s: &str) -> Result<Self> {
        Poly::parse_var(s, "t")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn display_is_ascending_with_explicit_signs() {
        assert_eq!(Poly::from_ints(&[0, 1, 1]).to_string(), "t + t^2");
        assert_eq!(Poly::from_ints(&[1, 0, -1]).to_string(), "1 - t^2");
        assert_eq!(Poly::from_ints(&[-2, 3]).to_string(), "-2 + 3t");
        let p = Poly::from_coeffs(vec![rat(1, 2), rat(-3, 4)]);
        assert_eq!(p.to_string(), "1/2 - (3/4)t");
        assert_eq!(Poly::default().to_string(), "0");
    }

    #[test]
    fn parse_round_trips() {
        for p in [
            Poly::from_ints(&[0, 1, 1]),
            Poly::from_ints(&[-1, 0, 0, 5]),
            Poly::from_coeffs(vec![rat(-1, 2), rat(-3, 4), rat(7, 3)]),
            Poly::default(),
        ] {
            assert_eq!(Poly::parse_var(&p.to_string(), "t").unwrap(), p);
        }
    }

    #[test]
    fn gcd_and_division() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.div_exact(&b).unwrap(), Poly::from_ints(&[1, 1]));
        assert!(a.div_exact(&Poly::from_ints(&[2, 1])).is_none());
    }

    #[test]
    fn reflect_matches_definition() {
        let k = Poly::from_ints(&[0, 1, 1]);
        assert_eq!(k.reflect(3).unwrap(), Poly::from_ints(&[0, 1, 1, 0]));
        assert_eq!(k.reflect(2).unwrap(), Poly::from_ints(&[1, 1]));
        assert!(k.reflect(1).is_none());
    }
}
