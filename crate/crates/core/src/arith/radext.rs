use super::{coeff_prefix, is_neg, parse_rat, Rat};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

const TRIAL_BOUND: u128 = 1_000_000;

/// Element of the multiquadratic field spanned by square roots of squarefree integers.
///
/// Stored as `Σ c_d √d` with `d` squarefree; `d = 1` is the rational part.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RadExt {
    terms: BTreeMap<u64, Rat>,
}

/// Writes `n = m² d` with `d` squarefree, returning `(m, d)`.
pub fn squarefree_decompose(mut n: u128) -> Result<(u128, u128)> {
    if n == 0 {
        return Ok((0, 1));
    }
    let (mut m, mut d) = (1u128, 1u128);
    let mut p = 2u128;
    while p <= TRIAL_BOUND && p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            m *= p;
        }
        if e % 2 == 1 {
            d *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        if n > TRIAL_BOUND * TRIAL_BOUND && p > TRIAL_BOUND {
            return Err(Error::RadicandTooLarge(n));
        }
        d *= n;
    }
    Ok((m, d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `√a · √b = m √d` for squarefree `a, b`.
pub fn rad_mul(a: u64, b: u64) -> (u64, u64) {
    let g = a.gcd(&b);
    (g, (a / g) * (b / g))
}

/// Inverse by repeated multiplication with the conjugate flipping one prime radicand at a time.
pub fn rad_inv(a: &RadExt) -> Result<RadExt> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut primes: Vec<u64> = a.terms.keys().flat_map(|&d| prime_factors(d)).collect();
    primes.sort_unstable();
    primes.dedup();
    let mut cur = a.clone();
    let mut mult = RadExt::from_rat(Rat::one());
    for p in primes {
        let conj = cur.conjugate(p);
        cur = cur.mul(&conj);
        mult = mult.mul(&conj);
    }
    let n = cur
        .to_rat()
        .ok_or_else(|| Error::Inconsistent("norm is not rational".into()))?;
    Ok(mult.scale(&n.recip()))
}

impl RadExt {
    pub fn zero() -> Self {
        RadExt::default()
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::term(r, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(super::rint(n))
    }

    fn term(r: Rat, d: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(d, r);
        }
        RadExt { terms }
    }

    /// `√r` for a nonnegative rational `r`.
    pub fn sqrt_rat(r: &Rat) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::NegativeRadicand(r.to_string()));
        }
        if r.is_zero() {
            return Ok(Self::zero());
        }
        let num = r.numer().to_u128().ok_or(Error::RadicandTooLarge(u128::MAX))?;
        let den = r.denom().to_u128().ok_or(Error::RadicandTooLarge(u128::MAX))?;
        let prod = num.checked_mul(den).ok_or(Error::RadicandTooLarge(u128::MAX))?;
        let (m, d) = squarefree_decompose(prod)?;
        let d = u64::try_from(d).map_err(|_| Error::RadicandTooLarge(d))?;
        let c = Rat::new(BigInt::from(m), BigInt::from(den));
        Ok(Self::term(c, d))
    }

    pub fn sqrt_int(n: i64) -> Result<Self> {
        Self::sqrt_rat(&super::rint(n))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rat)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.to_rat().is_some()
    }

    fn insert_add(&mut self, d: u64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(d).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&d, c) in &o.terms {
            r.insert_add(d, c.clone());
        }
        r
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (&d, c) in &o.terms {
            self.insert_add(d, c.clone());
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RadExt { terms: self.terms.iter().map(|(&d, c)| (d, -c)).collect() }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        RadExt { terms: self.terms.iter().map(|(&d, c)| (d, c * r)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = RadExt::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &o.terms {
                let (m, d) = rad_mul(a, b);
                r.insert_add(d, ca * cb * Rat::from_integer(BigInt::from(m)));
            }
        }
        r
    }

    pub fn inv(&self) -> Result<Self> {
        rad_inv(self)
    }

    /// Image under the automorphism `√p ↦ -√p`.
    pub fn conjugate(&self, p: u64) -> Self {
        RadExt {
            terms: self
                .terms
                .iter()
                .map(|(&d, c)| (d, if d % p == 0 { -c } else { c.clone() }))
                .collect(),
        }
    }
}

impl fmt::Display for RadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&d, c) in &self.terms {
            let neg = is_neg(c);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if d == 1 {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{}sqrt({d})", coeff_prefix(&abs))?;
            }
        }
        Ok(())
    }
}

impl Serialize for RadExt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (d, c) in &self.terms {
            m.serialize_entry(&d.to_string(), &c.to_string())?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for RadExt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RadExt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from squarefree radicands to rational strings")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut a: A) -> std::result::Result<RadExt, A::Error> {
                let mut r = RadExt::zero();
                while let Some((k, v)) = a.next_entry::<String, String>()? {
                    let d: u64 = k.parse().map_err(de::Error::custom)?;
                    let (m, dd) = squarefree_decompose(d as u128).map_err(de::Error::custom)?;
                    if m != 1 {
                        return Err(de::Error::custom(format!("radicand {d} is not squarefree")));
                    }
                    r.insert_add(dd as u64, parse_rat(&v).map_err(de::Error::custom)?);
                }
                Ok(r)
            }
        }
        d.deserialize_map(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rint};

    fn s(n: i64) -> RadExt {
        RadExt::sqrt_int(n).unwrap()
    }

    #[test]
    fn products_of_radicals() {
        assert_eq!(rad_mul(6, 10), (2, 15));
        assert_eq!(s(2).mul(&s(2)), RadExt::from_int(2));
        assert_eq!(s(12), s(3).scale(&rint(2)));
        assert_eq!(RadExt::sqrt_rat(&rat(1, 2)).unwrap(), s(2).scale(&rat(1, 2)));
    }

    #[test]
    fn inverse_of_multiquadratic_element() {
        let a = RadExt::one().add(&s(2)).add(&s(3)).add(&s(6).scale(&rint(5)));
        let b = a.inv().unwrap();
        assert_eq!(a.mul(&b), RadExt::one());
        assert!(RadExt::zero().inv().is_err());
    }

    #[test]
    fn negative_radicand_fails() {
        assert!(RadExt::sqrt_rat(&rint(-3)).is_err());
    }

    #[test]
    fn large_prime_radicand_is_rejected() {
        // product of two primes above the trial bound
        let n: u128 = 1_000_003u128 * 1_000_033u128 * 1_000_037u128;
        assert!(squarefree_decompose(n).is_err());
        assert_eq!(squarefree_decompose(1_000_003).unwrap(), (1, 1_000_003));
    }

    #[test]
    fn json_form() {
        let a = RadExt::from_rat(rat(1, 2)).add(&s(2).scale(&rint(3)));
        let j = serde_json::to_string(&a).unwrap();
        assert_eq!(j, r#"{"1":"1/2","2":"3"}"#);
        let back: RadExt = serde_json::from_str(&j).unwrap();
        assert_eq!(back, a);
    }
}
