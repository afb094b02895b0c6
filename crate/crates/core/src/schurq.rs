//! The ring Γ of Schur Q-functions: the generators `q_n`, the functions `Q_λ`,
//! their Schur expansion and the change of basis from `q_μ`.

use crate::arith::{pow2, rint, Rat};
use crate::cache::OnceMap;
use crate::partitions::{enumerate, enumerate_desc, Kind, Partition};
use crate::symfunc::{Basis, MultiPoly, SymQ};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Element of Γ ⊗ Q: a symmetric function whose power-sum support has only odd parts.
#[derive(Clone, PartialEq, Debug)]
pub struct GammaElt(SymQ);

impl GammaElt {
    pub fn new(f: SymQ) -> Result<Self> {
        let p = f.convert(Basis::P);
        if let Some((l, _)) = p.terms().find(|(l, _)| !l.all_odd()) {
            return Err(Error::NotInGamma(format!("coefficient on p_{l}")));
        }
        Ok(GammaElt(p))
    }

    pub fn one() -> Self {
        GammaElt(SymQ::one())
    }

    pub fn sym(&self) -> &SymQ {
        &self.0
    }

    pub fn into_sym(self) -> SymQ {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn mul(&self, o: &Self) -> Self {
        GammaElt(self.0.mul(&o.0))
    }

    pub fn add(&self, o: &Self) -> Self {
        GammaElt(self.0.add(&o.0).expect("homogeneous of the same degree"))
    }

    pub fn sub(&self, o: &Self) -> Self {
        GammaElt(self.0.sub(&o.0).expect("homogeneous of the same degree"))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GammaElt(self.0.scale(r))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn inner(&self, o: &Self) -> Rat {
        self.0.gamma_inner_product(&o.0).expect("both lie in Gamma")
    }
}

/// `q_n = Σ_{α ∈ OP_n} 2^{ℓ(α)} z_α^{-1} p_α`.
pub fn q(n: usize) -> GammaElt {
    let mut f = SymQ::zero(n, Basis::P);
    for a in enumerate(n, Kind::Odd) {
        f.add_term(a.clone(), pow2(a.len() as i64) / Rat::from_integer(a.z()));
    }
    GammaElt(f)
}

/// `q_μ = Π q_{μ_i}`.
pub fn q_product(mu: &Partition) -> GammaElt {
    mu.parts().iter().fold(GammaElt::one(), |acc, &r| acc.mul(&q(r)))
}

/// Two-row function `Q_{(r,s)}`, antisymmetric in `(r, s)` with `Q_{(r,0)} = q_r`.
pub fn q_rs(r: usize, s: usize) -> GammaElt {
    if r < s {
        let f = q_rs(s, r);
        return f.scale(&rint(-1));
    }
    if r == s {
        return GammaElt(SymQ::zero(r + s, Basis::P));
    }
    let mut acc = q(r).mul(&q(s));
    for i in 1..=s {
        let sign = if i % 2 == 1 { -2 } else { 2 };
        acc = acc.add(&q(r + i).mul(&q(s - i)).scale(&rint(sign)));
    }
    acc
}

static MEMO: OnceLock<OnceMap<Partition, GammaElt>> = OnceLock::new();

/// Schur Q-function `Q_λ` for a strict partition, by the row-expansion recursion.
pub fn schur_q(lambda: &Partition) -> Result<GammaElt> {
    lambda.require_strict()?;
    Ok(schur_q_unchecked(lambda))
}

fn schur_q_unchecked(lambda: &Partition) -> GammaElt {
    MEMO.get_or_init(OnceMap::new)
        .get_or_insert_with(lambda, || {
            let p = lambda.parts();
            let m = p.len();
            match m {
                0 => GammaElt::one(),
                1 => q(p[0]),
                2 => q_rs(p[0], p[1]),
                _ if m % 2 == 0 => {
                    let mut acc = GammaElt(SymQ::zero(lambda.size(), Basis::P));
                    for j in 1..m {
                        let rest: Vec<usize> =
                            p.iter().enumerate().filter(|&(k, _)| k != 0 && k != j).map(|(_, &x)| x).collect();
                        let term = q_rs(p[0], p[j]).mul(&schur_q_unchecked(&Partition::new(rest).expect("strict")));
                        // sign (-1)^{j+1} with 1-based j+1
                        acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
                    }
                    acc
                }
                _ => {
                    let mut acc = GammaElt(SymQ::zero(lambda.size(), Basis::P));
                    for j in 0..m {
                        let rest: Vec<usize> =
                            p.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect();
                        let term = q(p[j]).mul(&schur_q_unchecked(&Partition::new(rest).expect("strict")));
                        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                    }
                    acc
                }
            }
        })
        .as_ref()
        .clone()
}

/// Schur expansion `Q_ξ = Σ_λ b_{ξλ} s_λ`.
pub fn b_coeffs(xi: &Partition) -> Result<BTreeMap<Partition, Rat>> {
    let s = schur_q(xi)?.into_sym().convert(Basis::S);
    Ok(s.terms().map(|(l, c)| (l.clone(), c.clone())).collect())
}

/// `g_{ξλ} = 2^{-ℓ(ξ)} b_{ξλ}`, the Schur coefficients of `P_ξ`.
pub fn g_coeffs(xi: &Partition) -> Result<BTreeMap<Partition, Rat>> {
    let w = pow2(-(xi.len() as i64));
    Ok(b_coeffs(xi)?.into_iter().map(|(l, c)| (l, c * &w)).collect())
}

/// Coefficients `K̂_{λμ}` in `q_μ = Σ_{λ ∈ SP} K̂_{λμ} Q_λ`, by unitriangular elimination
/// in decreasing lexicographic order; the residual is checked to vanish.
pub fn khat(mu: &Partition) -> Result<BTreeMap<Partition, Rat>> {
    let n = mu.size();
    let mut f = q_product(mu).into_sym().convert(Basis::M);
    let mut out = BTreeMap::new();
    for lam in enumerate_desc(n, Kind::Strict) {
        let c = f.coeff(&lam);
        if c.is_zero() {
            continue;
        }
        let c = c * pow2(-(lam.len() as i64));
        let ql = schur_q(&lam)?.into_sym().convert(Basis::M);
        f = f.sub(&ql.scale(&c)).expect("same degree");
        out.insert(lam, c);
    }
    if !f.is_zero() {
        return Err(Error::Inconsistent(format!("nonzero residual expanding q_{mu}")));
    }
    Ok(out)
}

/// Generating-function construction of `Q_λ` in `nvars` variables: `q_r` from
/// `Π (1 + x_i t)/(1 - x_i t)`, `Q_{(r,s)}` from `(Q(t1)Q(t2) - 1)(t1 - t2)/(t1 + t2)`,
/// and `Q_λ` as the Pfaffian of the two-row functions.
pub fn schur_q_pfaffian_poly(lambda: &Partition, nvars: usize) -> Result<MultiPoly<Rat>> {
    lambda.require_strict()?;
    let n = lambda.size();
    // q_r for r <= n
    let mut qs: Vec<MultiPoly<Rat>> = vec![MultiPoly::zero(nvars); n + 2];
    qs[0] = MultiPoly::one(nvars);
    // coefficients of t^k in the product, built factor by factor
    let mut series: Vec<MultiPoly<Rat>> = vec![MultiPoly::zero(nvars); n + 1];
    series[0] = MultiPoly::one(nvars);
    for i in 0..nvars {
        let mut next = vec![MultiPoly::zero(nvars); n + 1];
        for a in 0..=n {
            if series[a].is_zero() {
                continue;
            }
            for k in 0..=(n - a) {
                let mut e = vec![0u32; nvars];
                e[i] = k as u32;
                let c = if k == 0 { Rat::one() } else { rint(2) };
                next[a + k] = next[a + k].add(&series[a].mul(&MultiPoly::monomial(e, c)));
            }
        }
        series = next;
    }
    for r in 0..=n {
        qs[r] = series[r].clone();
    }
    let qget = |r: usize| -> MultiPoly<Rat> { qs.get(r).cloned().unwrap_or_else(|| MultiPoly::zero(nvars)) };
    let memo: std::cell::RefCell<std::collections::HashMap<(usize, usize), MultiPoly<Rat>>> = Default::default();
    // two-row functions from the division by (t1 + t2)
    let two_row = |r: usize, s: usize| -> MultiPoly<Rat> {
        let d = r + s;
        let h = |a: usize, b: usize| -> MultiPoly<Rat> {
            let key = (a.min(b), a.max(b));
            if let Some(v) = memo.borrow().get(&key) {
                return v.clone();
            }
            let mut v = qget(a).mul(&qget(b));
            if a == 0 && b == 0 {
                v = v.sub(&MultiPoly::one(nvars));
            }
            memo.borrow_mut().insert(key, v.clone());
            v
        };
        // G_{a,b} = H_{a-1,b} - H_{a,b-1} on total degree d+1
        let g = |a: usize, b: usize| -> MultiPoly<Rat> {
            let mut v = MultiPoly::zero(nvars);
            if a >= 1 {
                v = v.add(&h(a - 1, b));
            }
            if b >= 1 {
                v = v.sub(&h(a, b - 1));
            }
            v
        };
        let mut f = g(0, d + 1);
        for a in 1..=r {
            f = g(a, d + 1 - a).sub(&f);
        }
        f
    };
    let mut parts = lambda.parts().to_vec();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    fn pf(idx: &[usize], parts: &[usize], two_row: &dyn Fn(usize, usize) -> MultiPoly<Rat>, nvars: usize) -> MultiPoly<Rat> {
        if idx.is_empty() {
            return MultiPoly::one(nvars);
        }
        let mut acc = MultiPoly::zero(nvars);
        for k in 1..idx.len() {
            let rest: Vec<usize> = idx.iter().enumerate().filter(|&(m, _)| m != 0 && m != k).map(|(_, &x)| x).collect();
            let term = two_row(parts[idx[0]], parts[idx[k]]).mul(&pf(&rest, parts, two_row, nvars));
            acc = if k % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }
    let idx: Vec<usize> = (0..parts.len()).collect();
    Ok(pf(&idx, &parts, &two_row, nvars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::partitions::parse_partition as pp;
    use crate::symfunc::sym_eq;

    #[test]
    fn q21_worked_values() {
        let q21 = schur_q(&pp("2,1").unwrap()).unwrap();
        let direct = q(2).mul(&q(1)).sub(&q(3).scale(&rint(2)));
        assert_eq!(q21, direct);
        let p = q21.sym();
        assert_eq!(p.coeff(&pp("1,1,1").unwrap()), rat(4, 3));
        assert_eq!(p.coeff(&pp("3").unwrap()), rat(-4, 3));
        let s = p.convert(Basis::S);
        assert_eq!(s.terms().count(), 1);
        assert_eq!(s.coeff(&pp("2,1").unwrap()), rint(4));
        let m = p.convert(Basis::M);
        assert_eq!(m.coeff(&pp("2,1").unwrap()), rint(4));
        assert_eq!(m.coeff(&pp("1,1,1").unwrap()), rint(8));
    }

    #[test]
    fn q1_squared() {
        assert_eq!(q(1).mul(&q(1)), q(2).scale(&rint(2)));
    }

    #[test]
    fn q_is_phi_of_h() {
        for n in 1..6 {
            let h = SymQ::basis_elt(Basis::H, &Partition::new(vec![n]).unwrap());
            assert!(sym_eq(&h.phi(), q(n).sym()));
        }
    }

    #[test]
    fn khat_integral() {
        for mu in enumerate(4, Kind::All) {
            for c in khat(&mu).unwrap().values() {
                assert!(c.is_integer());
            }
        }
    }

    #[test]
    fn pfaffian_route_agrees_small() {
        for lam in [pp("2,1").unwrap(), pp("3,1").unwrap(), pp("3,2,1").unwrap()] {
            let a = schur_q_pfaffian_poly(&lam, lam.size()).unwrap();
            let b = schur_q(&lam).unwrap().sym().expand(lam.size());
            assert_eq!(a, b, "{lam}");
        }
    }

    #[test]
    fn four_row_recursion_agrees_in_four_variables() {
        let lam = pp("4,3,2,1").unwrap();
        let a = schur_q_pfaffian_poly(&lam, 4).unwrap();
        let b = schur_q(&lam).unwrap().sym().expand(4);
        assert_eq!(a, b);
    }

    #[test]
    fn non_strict_rejected() {
        assert!(schur_q(&pp("2,2").unwrap()).is_err());
        let p2 = SymQ::basis_elt(Basis::P, &pp("2").unwrap());
        assert!(GammaElt::new(p2).is_err());
    }
}
