//! Homogeneous symmetric functions over a generic coefficient domain, in the
//! monomial, complete, elementary, power-sum and Schur bases.

mod multipoly;
mod transition;

pub use multipoly::MultiPoly;
pub(crate) use multipoly::{all_permutations, distinct_permutations, perm_sign};
pub use transition::invert;

use crate::arith::{pow2, Coeff, Rat};
use crate::partitions::{Partition, enumerate, Kind};
use crate::tableaux::skew_ssyt;
use crate::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    M,
    H,
    E,
    P,
    S,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::P => "p",
            Basis::S => "s",
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        Ok(match s {
            "m" => Basis::M,
            "h" => Basis::H,
            "e" => Basis::E,
            "p" => Basis::P,
            "s" => Basis::S,
            _ => return Err(Error::Parse(format!("unknown basis {s:?}"))),
        })
    }
}

/// Homogeneous symmetric function of a fixed degree, as a sparse combination of basis elements.
#[derive(Clone, PartialEq, Debug)]
pub struct SymF<C: Coeff> {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

pub type SymQ = SymF<Rat>;

impl<C: Coeff> SymF<C> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymF { degree, basis, terms: BTreeMap::new() }
    }

    /// The basis element indexed by `lambda`.
    pub fn basis_elt(basis: Basis, lambda: &Partition) -> Self {
        let mut f = Self::zero(lambda.size(), basis);
        f.add_term(lambda.clone(), C::cone());
        f
    }

    pub fn one() -> Self {
        Self::basis_elt(Basis::P, &Partition::empty())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, l: &Partition) -> C {
        self.terms.get(l).cloned().unwrap_or_else(C::czero)
    }

    pub fn add_term(&mut self, l: Partition, c: C) {
        assert_eq!(l.size(), self.degree, "term of the wrong degree");
        if c.is_czero() {
            return;
        }
        match self.terms.get_mut(&l) {
            Some(v) => {
                *v = v.cadd(&c);
                if v.is_czero() {
                    self.terms.remove(&l);
                }
            }
            None => {
                self.terms.insert(l, c);
            }
        }
    }

    fn check_compatible(&self, o: &Self) -> Result<()> {
        if self.degree != o.degree {
            return Err(Error::DegreeMismatch(self.degree, o.degree));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_compatible(o)?;
        let o = o.convert(self.basis);
        let mut r = self.clone();
        for (l, c) in o.terms {
            r.add_term(l, c);
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        SymF {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.cneg())).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.cscale(r));
        }
        out
    }

    pub fn scale_c(&self, k: &C) -> Self {
        let mut out = Self::zero(self.degree, self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.cmul(k));
        }
        out
    }

    /// Exact change of basis through the monomial basis.
    pub fn convert(&self, to: Basis) -> Self {
        if to == self.basis {
            return self.clone();
        }
        let n = self.degree;
        let src = transition::transition(n, self.basis);
        let dst = transition::transition(n, to);
        let k = src.parts.len();
        let mut in_m = vec![C::czero(); k];
        for (l, c) in &self.terms {
            let i = src.index[l];
            for (j, a) in src.to_m[i].iter().enumerate() {
                if !a.is_zero() {
                    in_m[j] = in_m[j].cadd(&c.cscale(a));
                }
            }
        }
        let mut out = Self::zero(n, to);
        let mut acc = vec![C::czero(); k];
        for (j, c) in in_m.iter().enumerate() {
            if c.is_czero() {
                continue;
            }
            for (v, a) in dst.from_m[j].iter().enumerate() {
                if !a.is_zero() {
                    acc[v] = acc[v].cadd(&c.cscale(a));
                }
            }
        }
        for (v, c) in acc.into_iter().enumerate() {
            out.add_term(dst.parts[v].clone(), c);
        }
        out
    }

    /// Product, returned in the power-sum basis.
    pub fn mul(&self, o: &Self) -> Self {
        let a = self.convert(Basis::P);
        let b = o.convert(Basis::P);
        let mut out = Self::zero(self.degree + o.degree, Basis::P);
        for (l, c) in &a.terms {
            for (m, d) in &b.terms {
                let mut parts = l.parts().to_vec();
                parts.extend_from_slice(m.parts());
                out.add_term(Partition::from_unsorted(parts), c.cmul(d));
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Hall inner product `<p_λ, p_μ> = z_λ δ_{λμ}`.
    pub fn inner_product(&self, o: &Self) -> C {
        let a = self.convert(Basis::P);
        let b = o.convert(Basis::P);
        let mut acc = C::czero();
        for (l, c) in &a.terms {
            if let Some(d) = b.terms.get(l) {
                acc = acc.cadd(&c.cmul(d).cscale(&Rat::from_integer(l.z())));
            }
        }
        acc
    }

    /// Whether the power-sum expansion involves only odd parts.
    pub fn in_gamma(&self) -> bool {
        self.convert(Basis::P).terms.keys().all(|l| l.all_odd())
    }

    /// The form `<p_α, p_β> = 2^{-ℓ(α)} z_α δ_{αβ}` on Γ; fails outside Γ.
    pub fn gamma_inner_product(&self, o: &Self) -> Result<C> {
        let a = self.convert(Basis::P);
        let b = o.convert(Basis::P);
        for f in [&a, &b] {
            if let Some(l) = f.terms.keys().find(|l| !l.all_odd()) {
                return Err(Error::NotInGamma(format!("coefficient on p_{l}")));
            }
        }
        let mut acc = C::czero();
        for (l, c) in &a.terms {
            if let Some(d) = b.terms.get(l) {
                let w = Rat::from_integer(l.z()) * pow2(-(l.len() as i64));
                acc = acc.cadd(&c.cmul(d).cscale(&w));
            }
        }
        Ok(acc)
    }

    /// The map `p_r ↦ 2 p_r` (r odd), `p_r ↦ 0` (r even); result in the power-sum basis.
    pub fn phi(&self) -> Self {
        let a = self.convert(Basis::P);
        let mut out = Self::zero(self.degree, Basis::P);
        for (l, c) in &a.terms {
            if l.all_odd() {
                out.add_term(l.clone(), c.cscale(&pow2(l.len() as i64)));
            }
        }
        out
    }

    /// Polynomial in `nvars` variables obtained by restriction.
    pub fn expand(&self, nvars: usize) -> MultiPoly<C> {
        let m = self.convert(Basis::M);
        let mut out = MultiPoly::zero(nvars);
        for (l, c) in &m.terms {
            if l.len() > nvars {
                continue;
            }
            let mut e: Vec<u32> = l.parts().iter().map(|&x| x as u32).collect();
            e.resize(nvars, 0);
            for perm in distinct_permutations(&e) {
                out.add_term(perm, c.clone());
            }
        }
        out
    }

    /// Coefficients as a dense vector indexed by the partitions of the degree.
    pub fn dense(&self, basis: Basis) -> Vec<C> {
        let f = self.convert(basis);
        enumerate(self.degree, Kind::All).iter().map(|l| f.coeff(l)).collect()
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SymF<D> {
        let mut out = SymF::zero(self.degree, self.basis);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SymFJson {
            degree: self.degree,
            basis: self.basis.name().to_string(),
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermJson { partition: l.clone(), coeff: c.to_string() })
                .collect(),
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: SymFJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut f = Self::zero(j.degree, Basis::parse(&j.basis)?);
        for t in j.terms {
            if t.partition.size() != j.degree {
                return Err(Error::DegreeMismatch(t.partition.size(), j.degree));
            }
            f.add_term(t.partition, C::cparse(&t.coeff)?);
        }
        Ok(f)
    }
}

/// Equality as symmetric functions, whatever the stored bases.
pub fn sym_eq<C: Coeff>(a: &SymF<C>, b: &SymF<C>) -> bool {
    a.degree == b.degree && a.convert(Basis::M).terms == b.convert(Basis::M).terms
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFJson {
    degree: usize,
    basis: String,
    terms: Vec<TermJson>,
}

impl<C: Coeff> fmt::Display for SymF<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let b = self.basis.name();
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| {
                let idx: Vec<String> = l.parts().iter().map(|x| x.to_string()).collect();
                format!("({c})*{b}[{}]", idx.join(","))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Determinant `det(q_{λ_i - i + j})` for any family `q_r` with `q_0 = 1` and `q_r = 0` for `r < 0`.
pub fn s_det<C: Coeff>(lambda: &Partition, q: impl Fn(usize) -> SymF<C>) -> SymF<C> {
    let l = lambda.len();
    let entry = |i: usize, j: usize| -> Option<SymF<C>> {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        match k {
            k if k < 0 => None,
            0 => Some(SymF::one()),
            k => Some(q(k as usize)),
        }
    };
    let mut total = SymF::zero(lambda.size(), Basis::P);
    for perm in all_permutations(l) {
        let mut prod = Some(SymF::<C>::one());
        for (i, &j) in perm.iter().enumerate() {
            prod = match (prod, entry(i, j)) {
                (Some(p), Some(e)) => Some(p.mul(&e)),
                _ => None,
            };
        }
        if let Some(p) = prod {
            let signed = if perm_sign(&perm) < 0 { p.neg() } else { p };
            total = total.add(&signed).expect("same degree");
        }
    }
    total
}

/// Skew Schur function `s_{outer/inner}` in the monomial basis, by tableau enumeration.
pub fn skew_schur(outer: &Partition, inner: &Partition) -> SymQ {
    let n = outer.size() - inner.size();
    let mut f = SymQ::zero(n, Basis::M);
    for mu in enumerate(n, Kind::All) {
        let c = skew_ssyt(outer, inner, mu.parts()).len();
        if c > 0 {
            f.add_term(mu, crate::arith::rint(c as i64));
        }
    }
    f
}

/// Hook Schur function `hs_λ(x; y) = Σ_ρ s_ρ(x) s_{λ'/ρ'}(y)`.
#[derive(Clone, Debug)]
pub struct HookSchur {
    pub lambda: Partition,
    /// `(ρ, s_{λ'/ρ'})` with the skew factor in the monomial basis.
    pub terms: Vec<(Partition, SymQ)>,
}

pub fn hook_schur(lambda: &Partition) -> HookSchur {
    let lc = lambda.conjugate();
    let mut terms = Vec::new();
    for k in 0..=lambda.size() {
        for rho in enumerate(k, Kind::All) {
            let inside = rho.len() <= lambda.len() && (0..rho.len()).all(|i| rho.part(i) <= lambda.part(i));
            if inside {
                terms.push((rho.clone(), skew_schur(&lc, &rho.conjugate())));
            }
        }
    }
    HookSchur { lambda: lambda.clone(), terms }
}

impl HookSchur {
    /// Polynomial in `nx + ny` variables, the `x` variables first.
    pub fn expand(&self, nx: usize, ny: usize) -> MultiPoly<Rat> {
        let mut out = MultiPoly::zero(nx + ny);
        for (rho, skew) in &self.terms {
            let sx = SymQ::basis_elt(Basis::S, rho).expand(nx);
            out = out.add(&sx.tensor(&skew.expand(ny)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rint;
    use crate::partitions::parse_partition as pp;

    #[test]
    fn schur_to_monomial_example() {
        let s21 = SymQ::basis_elt(Basis::S, &pp("2,1").unwrap()).convert(Basis::M);
        assert_eq!(s21.coeff(&pp("2,1").unwrap()), rint(1));
        assert_eq!(s21.coeff(&pp("1,1,1").unwrap()), rint(2));
    }

    #[test]
    fn conversions_round_trip() {
        for b in [Basis::H, Basis::E, Basis::P, Basis::S] {
            for l in enumerate(4, Kind::All) {
                let f = SymQ::basis_elt(b, &l);
                for c in [Basis::M, Basis::H, Basis::E, Basis::P, Basis::S] {
                    assert_eq!(f.convert(c).convert(b), f);
                }
            }
        }
    }

    #[test]
    fn hall_inner_product_orthonormal_schur() {
        let ps = enumerate(4, Kind::All);
        for a in &ps {
            for b in &ps {
                let v = SymQ::basis_elt(Basis::M, a).inner_product(&SymQ::basis_elt(Basis::H, b));
                assert_eq!(v, rint(i64::from(a == b)));
                let w = SymQ::basis_elt(Basis::S, a).inner_product(&SymQ::basis_elt(Basis::S, b));
                assert_eq!(w, rint(i64::from(a == b)));
            }
        }
    }

    #[test]
    fn gamma_form_rejects_even_parts() {
        let p2 = SymQ::basis_elt(Basis::P, &pp("2").unwrap());
        assert!(p2.gamma_inner_product(&p2).is_err());
        let p1 = SymQ::basis_elt(Basis::P, &pp("1").unwrap());
        assert_eq!(p1.gamma_inner_product(&p1).unwrap(), crate::arith::rat(1, 2));
    }

    #[test]
    fn jacobi_trudi_via_s_det() {
        let lam = pp("3,1,1").unwrap();
        let d = s_det(&lam, |r| SymQ::basis_elt(Basis::H, &Partition::new(vec![r]).unwrap()));
        assert!(sym_eq(&d, &SymQ::basis_elt(Basis::S, &lam)));
    }

    #[test]
    fn hook_schur_with_empty_y_is_schur() {
        let lam = pp("2,1").unwrap();
        let hs = hook_schur(&lam).expand(3, 2);
        let s = SymQ::basis_elt(Basis::S, &lam).expand(3);
        let restricted: MultiPoly<Rat> = {
            let mut r = MultiPoly::zero(3);
            for (e, c) in hs.terms() {
                if e[3] == 0 && e[4] == 0 {
                    r.add_term(e[..3].to_vec(), c.clone());
                }
            }
            r
        };
        assert_eq!(restricted, s);
    }

    #[test]
    fn json_round_trip() {
        let f = SymQ::basis_elt(Basis::S, &pp("2,1").unwrap()).convert(Basis::P);
        let back = SymQ::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f);
    }
}
