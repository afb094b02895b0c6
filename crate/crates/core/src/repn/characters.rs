use super::{seminormal_module, sn_seminormal, Algebra, Rep};
use crate::arith::{pow2, Rat};
use crate::kostka::delta;
use crate::partitions::{enumerate, Kind, Partition};
use crate::schurq::{khat, q_product, schur_q, GammaElt};
use crate::symfunc::{Basis, SymQ};
use crate::tableaux::g_closed_form;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use crate::cache::OnceMap;
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// `σ_α = (1..α_1)(α_1+1..α_1+α_2)...` as a word in simple reflections.
pub fn sigma_word(alpha: &Partition) -> Vec<usize> {
    let mut w = Vec::new();
    let mut start = 1;
    for &a in alpha.parts() {
        w.extend(start..start + a - 1);
        start += a;
    }
    w
}

/// Trace of `σ_α` on `r`; must be rational.
pub fn character(r: &Rep, alpha: &Partition) -> Result<Rat> {
    if alpha.size() != r.n {
        return Err(Error::DegreeMismatch(alpha.size(), r.n));
    }
    r.word(&sigma_word(alpha)).trace().to_rat().ok_or_else(|| Error::Inconsistent(format!("irrational trace at {alpha}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharKind {
    Symmetric,
    Spin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVector {
    pub label: Partition,
    pub values: BTreeMap<Partition, BigInt>,
}

impl CharVector {
    pub fn value(&self, alpha: &Partition) -> BigInt {
        self.values.get(alpha).cloned().unwrap_or_default()
    }
}

fn integral(r: Rat, what: &str) -> Result<BigInt> {
    if !r.is_integer() {
        return Err(Error::Inconsistent(format!("non-integer character value {r} for {what}")));
    }
    Ok(r.to_integer())
}

/// `ζ^ξ` at `σ_α`, `α ∈ OP_n`: the trace on `Û^ξ` divided by the multiplicity `2^{⌊ℓ/2⌋}`.
pub fn spin_character(xi: &Partition) -> Result<CharVector> {
    static CACHE: OnceLock<OnceMap<Partition, CharVector>> = OnceLock::new();
    let v = CACHE.get_or_init(OnceMap::new).get_or_try_insert_with(xi, || spin_character_uncached(xi))?;
    Ok((*v).clone())
}

fn spin_character_uncached(xi: &Partition) -> Result<CharVector> {
    let r = seminormal_module(xi, &Partition::empty(), Algebra::Finite)?;
    let mult = pow2((xi.len() / 2) as i64);
    let mut values = BTreeMap::new();
    for alpha in enumerate(xi.size(), Kind::Odd) {
        values.insert(alpha.clone(), integral(character(&r, &alpha)? / &mult, &format!("{xi} at {alpha}"))?);
    }
    Ok(CharVector { label: xi.clone(), values })
}

/// Character table from traces: `χ^λ` over all classes, or `ζ^ξ` over odd classes.
pub fn char_table(n: usize, kind: CharKind) -> Result<Vec<CharVector>> {
    match kind {
        CharKind::Symmetric => enumerate(n, Kind::All)
            .into_iter()
            .map(|l| {
                let r = sn_seminormal(&l)?;
                let mut values = BTreeMap::new();
                for mu in enumerate(n, Kind::All) {
                    values.insert(mu.clone(), integral(character(&r, &mu)?, &format!("{l} at {mu}"))?);
                }
                Ok(CharVector { label: l, values })
            })
            .collect(),
        CharKind::Spin => enumerate(n, Kind::Strict).iter().map(spin_character).collect(),
    }
}

/// `ch(χ) = Σ_μ z_μ^{-1} χ_μ p_μ`.
pub fn ch_map(chi: &CharVector) -> SymQ {
    let mut f = SymQ::zero(chi.label.size(), Basis::P);
    for (mu, v) in &chi.values {
        f.add_term(mu.clone(), Rat::new(v.clone(), mu.z()));
    }
    f
}

/// `ch⁻(ζ) = Σ_{α odd} z_α^{-1} ζ_α p_α`.
pub fn ch_minus(zeta: &CharVector) -> Result<GammaElt> {
    let mut f = SymQ::zero(zeta.label.size(), Basis::P);
    for (alpha, v) in &zeta.values {
        if !alpha.all_odd() {
            return Err(Error::NotInGamma(format!("class {alpha}")));
        }
        f.add_term(alpha.clone(), Rat::new(v.clone(), alpha.z()));
    }
    GammaElt::new(f)
}

/// `deg ζ^ξ = 2^{n - (ℓ - δ)/2} g_ξ`.
pub fn degree_formula(xi: &Partition) -> Result<BigInt> {
    let e = xi.size() as i64 - ((xi.len() - delta(xi)) / 2) as i64;
    integral(pow2(e) * g_closed_form(xi)?, &format!("degree of {xi}"))
}

/// `(2n)^d = Σ_{λ ∈ SP_d, ℓ(λ) <= n} 2^{-δ(λ)} dim V(λ) deg ζ^λ` with
/// `dim V(λ) = 2^{-(ℓ-δ)/2} Q_λ(1^n)`.
pub fn sergeev_dimension_check(n: usize, d: usize) -> Result<bool> {
    let lhs = Rat::from_integer(BigInt::from(2 * n).pow(d as u32));
    let mut rhs = Rat::zero();
    for lam in enumerate(d, Kind::Strict) {
        if lam.len() > n {
            continue;
        }
        let q1 = schur_q(&lam)?.into_sym().expand(n).eval_ones();
        let dim_v = q1 * pow2(-(((lam.len() - delta(&lam)) / 2) as i64));
        rhs += pow2(-(delta(&lam) as i64)) * dim_v * Rat::from_integer(degree_formula(&lam)?);
    }
    Ok(lhs == rhs)
}

/// `q_μ = Σ_λ 2^{(ℓ-δ)/2} K̂_{λμ} ch⁻(ζ^λ)` with `ζ^λ` from traces.
pub fn permutation_module_check(mu: &Partition) -> Result<bool> {
    let mut acc = GammaElt::new(SymQ::zero(mu.size(), Basis::P))?;
    for (lam, k) in khat(mu)? {
        if k.is_zero() {
            continue;
        }
        let z = ch_minus(&spin_character(&lam)?)?;
        let f = pow2(((lam.len() - delta(&lam)) / 2) as i64) * k;
        acc = acc.add(&z.scale(&f));
    }
    let diff = acc.sub(&q_product(mu));
    Ok(diff.is_zero())
}

