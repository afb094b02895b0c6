//! Explicit matrix modules: Clifford monomials, the basic spin module, seminormal
//! forms for the symmetric group and for the finite and affine Hecke–Clifford algebras,
//! relation checks, intertwiners, characters and dimension identities.

mod characters;
mod clifford;
mod matrix;
mod relations;

pub use characters::{
    ch_map, ch_minus, char_table, character, degree_formula, permutation_module_check, sergeev_dimension_check,
    sigma_word, spin_character, CharKind, CharVector,
};
pub use clifford::{cliff_mul, CliffMono};
pub use matrix::{Mat, SparseMat};
pub use relations::{commutant_dimension, intertwiner, verify_intertwiners, verify_relations};

use crate::arith::{rint, RadExt, Rat};
use crate::partitions::{check_shifted_skew, Partition};
use crate::tableaux::{standard_skew_shifted, standard_young, ShiftedStdTableau};
use crate::{Error, Result};
use serde_json::json;
use std::collections::{BTreeMap, HashMap};

pub const DEFAULT_MAX_DIM: usize = 4096;

/// Dimension guard, overridable through `SPINQ_MAX_DIM`.
pub fn max_dim() -> usize {
    std::env::var("SPINQ_MAX_DIM").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_DIM)
}

fn guard(dim: usize) -> Result<()> {
    let max = max_dim();
    if dim > max {
        return Err(Error::SizeGuard { dim, max });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    /// `Hc_n`, with `x_k` realized as Jucys–Murphy elements
    Finite,
    Affine,
}

/// Simple superalgebra type of the summand labelled by `ξ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperType {
    M,
    Q,
}

pub fn super_type(len: usize) -> SuperType {
    if len % 2 == 0 {
        SuperType::M
    } else {
        SuperType::Q
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rep {
    pub n: usize,
    pub dim: usize,
    pub label: String,
    pub gens: BTreeMap<String, Mat>,
    /// `Z_2`-degree of each basis vector
    pub parity: Vec<u8>,
}

impl Rep {
    pub fn gen(&self, name: &str) -> Option<&Mat> {
        self.gens.get(name)
    }

    pub fn s(&self, k: usize) -> &Mat {
        &self.gens[&format!("s{k}")]
    }

    pub fn c(&self, i: usize) -> &Mat {
        &self.gens[&format!("c{i}")]
    }

    pub fn x(&self, i: usize) -> &Mat {
        &self.gens[&format!("x{i}")]
    }

    pub fn has_clifford(&self) -> bool {
        self.gens.contains_key("c1")
    }

    pub fn has_x(&self) -> bool {
        self.gens.contains_key("x1")
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.dim)
    }

    /// Matrix of the permutation word `s_{w_1} s_{w_2} ...`.
    pub fn word(&self, w: &[usize]) -> Mat {
        w.iter().fold(self.identity(), |acc, &k| acc.mul(self.s(k)))
    }

    /// Matrix of the transposition `(j, k)`, `j < k`, 1-based.
    pub fn transposition(&self, j: usize, k: usize) -> Mat {
        let mut w: Vec<usize> = (j..k).rev().collect();
        w.extend(j + 1..k);
        self.word(&w)
    }

    /// `J_k = Σ_{j<k} (1 + c_j c_k)(j, k)`, or `L_k = Σ_{j<k} (j, k)` without Clifford generators.
    pub fn jucys_murphy(&self, k: usize) -> Mat {
        let mut acc = Mat::zero(self.dim);
        for j in 1..k {
            let t = self.transposition(j, k);
            let term = if self.has_clifford() { self.identity().add(&self.c(j).mul(self.c(k))).mul(&t) } else { t };
            acc = acc.add(&term);
        }
        acc
    }

    pub fn with_gen(&self, name: &str, m: Mat) -> Rep {
        let mut r = self.clone();
        r.gens.insert(name.to_string(), m);
        r
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: serde_json::Map<String, serde_json::Value> =
            self.gens.iter().map(|(k, m)| (k.clone(), serde_json::to_value(m.to_sparse()).unwrap())).collect();
        json!({ "n": self.n, "dim": self.dim, "label": self.label, "parity": self.parity, "generators": gens })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Rep> {
        let bad = |m: &str| Error::Parse(format!("rep json: {m}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let dim = v["dim"].as_u64().ok_or_else(|| bad("dim"))? as usize;
        let label = v["label"].as_str().unwrap_or_default().to_string();
        let parity: Vec<u8> = serde_json::from_value(v["parity"].clone()).map_err(|e| bad(&e.to_string()))?;
        let mut gens = BTreeMap::new();
        for (k, m) in v["generators"].as_object().ok_or_else(|| bad("generators"))? {
            let s: SparseMat = serde_json::from_value(m.clone()).map_err(|e| bad(&e.to_string()))?;
            gens.insert(k.clone(), Mat::from_sparse(&s));
        }
        Ok(Rep { n, dim, label, gens, parity })
    }
}

/// `q(i) = i(i + 1)`.
pub fn q_value(i: usize) -> Rat {
    rint((i * (i + 1)) as i64)
}

fn sqrt_q(i: usize) -> RadExt {
    RadExt::sqrt_rat(&q_value(i)).expect("q(i) is a nonnegative integer")
}

/// Left multiplication by `c_i` on Clifford monomials: `c_i c^β = ± c^{β + e_i}`.
fn clifford_left(i: usize, beta: u64) -> (bool, u64) {
    let bit = 1u64 << (i - 1);
    let below = (beta & (bit - 1)).count_ones();
    (below % 2 == 1, beta ^ bit)
}

/// `σ c^β = ± c^{s_k β} σ` for `σ = s_k`.
fn permute_monomial(k: usize, beta: u64) -> (bool, u64) {
    let (a, b) = (beta >> (k - 1) & 1, beta >> k & 1);
    let swapped = (beta & !(0b11 << (k - 1))) | (a << k) | (b << (k - 1));
    (a == 1 && b == 1, swapped)
}

fn signed(neg: bool, v: &RadExt) -> RadExt {
    if neg {
        v.neg()
    } else {
        v.clone()
    }
}

/// The basic spin module `Cl_n`: `c_i` by left multiplication, `σ` permuting generators.
pub fn basic_spin_module(n: usize) -> Result<Rep> {
    let dim = 1usize << n;
    guard(dim)?;
    let mut gens = BTreeMap::new();
    for i in 1..=n {
        let mut m = Mat::zero(dim);
        for beta in 0..dim as u64 {
            let (neg, b2) = clifford_left(i, beta);
            m.add_at(b2 as usize, beta as usize, &signed(neg, &RadExt::one()));
        }
        gens.insert(format!("c{i}"), m);
    }
    for k in 1..n {
        let mut m = Mat::zero(dim);
        for beta in 0..dim as u64 {
            let (neg, b2) = permute_monomial(k, beta);
            m.add_at(b2 as usize, beta as usize, &signed(neg, &RadExt::one()));
        }
        gens.insert(format!("s{k}"), m);
    }
    let parity = (0..dim as u64).map(|b| (b.count_ones() % 2) as u8).collect();
    Ok(Rep { n, dim, label: format!("Cl_{n}"), gens, parity })
}

/// The tableaux basis of `Û^{ξ/ν}` and their content vectors.
pub struct SeminormalBasis {
    pub tableaux: Vec<ShiftedStdTableau>,
    pub contents: Vec<Vec<usize>>,
}

/// `Û^{ξ/ν} = ⊕_T Cl_n v_T` with basis `c^β v_T` at index `T·2^n + β`.
///
/// `x_i v_T = √q(c(T_i)) v_T` and
/// `s_k v_T = (1/(√b - √a) - c_k c_{k+1}/(√b + √a)) v_T + √(1 - 2(a+b)/(a-b)²) v_{s_k T}`
/// with `a = q(c(T_k))`, `b = q(c(T_{k+1}))`; the sign on `c_k c_{k+1}` is the one forced by
/// `s_k x_k = x_{k+1} s_k - (1 + c_k c_{k+1})`.
pub fn seminormal_module(outer: &Partition, inner: &Partition, algebra: Algebra) -> Result<Rep> {
    check_shifted_skew(outer, inner)?;
    if algebra == Algebra::Finite && !inner.is_empty() {
        return Err(Error::InvalidShape("the finite algebra needs a straight shape".into()));
    }
    let n = outer.size() - inner.size();
    if n == 0 || n > 20 {
        return Err(Error::InvalidShape(format!("skew size {n} out of range")));
    }
    let g = crate::tableaux::standard_skew_shifted_count(outer, inner)? as usize;
    let dim = g << n;
    guard(dim)?;
    let basis = seminormal_basis(outer, inner)?;
    let index: HashMap<&ShiftedStdTableau, usize> = basis.tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let blk = 1usize << n;
    let mut gens = BTreeMap::new();
    for i in 1..=n {
        let mut m = Mat::zero(dim);
        for t in 0..g {
            for beta in 0..blk as u64 {
                let (neg, b2) = clifford_left(i, beta);
                m.add_at(t * blk + b2 as usize, t * blk + beta as usize, &signed(neg, &RadExt::one()));
            }
        }
        gens.insert(format!("c{i}"), m);
    }
    let xs: Vec<Mat> = (1..=n)
        .map(|i| {
            let mut m = Mat::zero(dim);
            for (t, cv) in basis.contents.iter().enumerate() {
                let r = sqrt_q(cv[i - 1]);
                for beta in 0..blk as u64 {
                    let v = signed(beta >> (i - 1) & 1 == 1, &r);
                    m.add_at(t * blk + beta as usize, t * blk + beta as usize, &v);
                }
            }
            m
        })
        .collect();
    for k in 1..n {
        let mut m = Mat::zero(dim);
        let kk = CliffMono { negative: false, support: 0b11 << (k - 1) };
        for (t, tab) in basis.tableaux.iter().enumerate() {
            let cv = &basis.contents[t];
            let (a, b) = (q_value(cv[k - 1]), q_value(cv[k]));
            let (ra, rb) = (sqrt_q(cv[k - 1]), sqrt_q(cv[k]));
            let coef_a = rb.sub(&ra).inv()?;
            let coef_b = rb.add(&ra).inv()?.neg();
            let other = tab.swap(k - 1).map(|t2| index[&t2]);
            let coef_c = match other {
                Some(_) => {
                    let d = &a - &b;
                    let inside = Rat::from_integer(1.into()) - rint(2) * (&a + &b) / (&d * &d);
                    Some(RadExt::sqrt_rat(&inside)?)
                }
                None => None,
            };
            for beta in 0..blk as u64 {
                let (eps, b1) = permute_monomial(k, beta);
                let col = t * blk + beta as usize;
                m.add_at(t * blk + b1 as usize, col, &signed(eps, &coef_a));
                let prod = cliff_mul(CliffMono { negative: eps, support: b1 }, kk);
                m.add_at(t * blk + prod.support as usize, col, &signed(prod.negative, &coef_b));
                if let (Some(t2), Some(cc)) = (other, &coef_c) {
                    m.add_at(t2 * blk + b1 as usize, col, &signed(eps, cc));
                }
            }
        }
        gens.insert(format!("s{k}"), m);
    }
    let parity = (0..dim).map(|i| ((i % blk).count_ones() % 2) as u8).collect();
    let label = if inner.is_empty() { format!("{outer}") } else { format!("{outer}/{inner}") };
    let mut rep = Rep { n, dim, label, gens, parity };
    match algebra {
        Algebra::Affine => {
            for (i, m) in xs.into_iter().enumerate() {
                rep.gens.insert(format!("x{}", i + 1), m);
            }
        }
        Algebra::Finite => {
            for k in 1..=n {
                let j = rep.jucys_murphy(k);
                rep.gens.insert(format!("x{k}"), j);
            }
        }
    }
    Ok(rep)
}

pub fn seminormal_basis(outer: &Partition, inner: &Partition) -> Result<SeminormalBasis> {
    let tableaux = standard_skew_shifted(outer, inner)?;
    let contents = tableaux.iter().map(|t| t.content_vector()).collect();
    Ok(SeminormalBasis { tableaux, contents })
}

/// Diagonal `x`-action of the seminormal form, for comparison with Jucys–Murphy images.
pub fn seminormal_x(outer: &Partition, inner: &Partition, i: usize) -> Result<Mat> {
    let basis = seminormal_basis(outer, inner)?;
    let n = outer.size() - inner.size();
    let blk = 1usize << n;
    let mut m = Mat::zero(basis.tableaux.len() * blk);
    for (t, cv) in basis.contents.iter().enumerate() {
        let r = sqrt_q(cv[i - 1]);
        for beta in 0..blk as u64 {
            m.add_at(t * blk + beta as usize, t * blk + beta as usize, &signed(beta >> (i - 1) & 1 == 1, &r));
        }
    }
    Ok(m)
}

/// `(dim U^{ξ/ν}, multiplicity of U^{ξ/ν} in Û^{ξ/ν})` from the closed formula.
pub fn irreducible_multiplicity(outer: &Partition, inner: &Partition) -> Result<(u64, u64)> {
    let g = crate::tableaux::standard_skew_shifted_count(outer, inner)?;
    let n = outer.size() - inner.size();
    let half = ((outer.len() - inner.len()) / 2) as u32;
    Ok(((g << n) >> half, 1 << half))
}

/// Young's orthogonal form of `S^λ` on standard tableaux.
pub fn sn_seminormal(lambda: &Partition) -> Result<Rep> {
    let tabs = standard_young(lambda);
    let dim = tabs.len();
    guard(dim)?;
    let n = lambda.size();
    let pos: Vec<Vec<(usize, usize)>> = tabs
        .iter()
        .map(|t| {
            let mut p = vec![(0, 0); n];
            for (i, r) in t.iter().enumerate() {
                for (j, &l) in r.iter().enumerate() {
                    p[l - 1] = (i, j);
                }
            }
            p
        })
        .collect();
    let index: HashMap<Vec<(usize, usize)>, usize> = pos.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let content = |p: (usize, usize)| p.1 as i64 - p.0 as i64;
    let mut gens = BTreeMap::new();
    for k in 1..n {
        let mut m = Mat::zero(dim);
        for (t, p) in pos.iter().enumerate() {
            let d = content(p[k]) - content(p[k - 1]);
            let diag = Rat::new(1.into(), d.into());
            m.add_at(t, t, &RadExt::from_rat(diag.clone()));
            let mut q = p.clone();
            q.swap(k - 1, k);
            if let Some(&t2) = index.get(&q) {
                let off = RadExt::sqrt_rat(&(Rat::from_integer(1.into()) - &diag * &diag))?;
                m.add_at(t2, t, &off);
            }
        }
        gens.insert(format!("s{k}"), m);
    }
    Ok(Rep { n, dim, label: format!("S^{lambda}"), gens, parity: vec![0; dim] })
}

/// Content vector of each standard tableau in the `sn_seminormal` basis order.
pub fn sn_contents(lambda: &Partition) -> Vec<Vec<i64>> {
    standard_young(lambda)
        .iter()
        .map(|t| {
            let mut c = vec![0; lambda.size()];
            for (i, r) in t.iter().enumerate() {
                for (j, &l) in r.iter().enumerate() {
                    c[l - 1] = j as i64 - i as i64;
                }
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_partition as pp;

    #[test]
    fn dimensions() {
        let r = seminormal_module(&pp("3,1").unwrap(), &Partition::empty(), Algebra::Affine).unwrap();
        assert_eq!(r.dim, 32);
        assert_eq!(irreducible_multiplicity(&pp("2,1").unwrap(), &Partition::empty()).unwrap(), (4, 2));
        assert_eq!(basic_spin_module(3).unwrap().dim, 8);
    }

    #[test]
    fn jucys_murphy_matches_seminormal_x() {
        for s in ["2", "2,1", "3,1", "3,2"] {
            let xi = pp(s).unwrap();
            let r = seminormal_module(&xi, &Partition::empty(), Algebra::Finite).unwrap();
            for k in 1..=r.n {
                assert_eq!(r.x(k), &seminormal_x(&xi, &Partition::empty(), k).unwrap(), "{s} k={k}");
            }
        }
    }

    #[test]
    fn symmetric_group_examples() {
        let r = sn_seminormal(&pp("2,1").unwrap()).unwrap();
        let contents = sn_contents(&pp("2,1").unwrap());
        let t = contents.iter().position(|c| c == &vec![0, 1, -1]).unwrap();
        assert_eq!(r.s(1).get(t, t), RadExt::one());
        assert_eq!(r.s(1).row(t).len(), 1);
        let sgn = sn_seminormal(&pp("1,1,1").unwrap()).unwrap();
        assert_eq!(sgn.s(2), &Mat::identity(1).neg());
    }

    #[test]
    fn relations_hold() {
        let e = Partition::empty();
        for s in ["2,1", "3,1"] {
            let r = seminormal_module(&pp(s).unwrap(), &e, Algebra::Finite).unwrap();
            let rep = verify_relations(&r, Algebra::Affine);
            assert!(rep.passed(), "{rep}");
        }
        let r = seminormal_module(&pp("5,3,1").unwrap(), &pp("3,1").unwrap(), Algebra::Affine).unwrap();
        let rep = verify_relations(&r, Algebra::Affine);
        assert!(rep.passed(), "{rep}");
        let b = basic_spin_module(3).unwrap();
        assert!(verify_relations(&b, Algebra::Finite).passed());
    }

    #[test]
    fn negative_control() {
        let r = seminormal_module(&pp("3,1").unwrap(), &Partition::empty(), Algebra::Affine).unwrap();
        let bad = r.with_gen("s1", r.s(1).neg());
        let rep = verify_relations(&bad, Algebra::Affine);
        let by: BTreeMap<&str, bool> = rep.checks.iter().map(|c| (c.name.as_str(), c.passed)).collect();
        assert!(!by["braid"]);
        assert!(by["pc"]);
        assert!(!by["px1"]);
    }

    #[test]
    fn intertwiners_hold() {
        let r = seminormal_module(&pp("4,2").unwrap(), &pp("1").unwrap(), Algebra::Affine).unwrap();
        let rep = verify_intertwiners(&r);
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn commutant() {
        let e = Partition::empty();
        for (s, want) in [("2", 2), ("2,1", 4), ("3,1", 4), ("3,2,1", 8)] {
            let r = seminormal_module(&pp(s).unwrap(), &e, Algebra::Finite).unwrap();
            assert_eq!(commutant_dimension(&r), Some(want), "{s}");
        }
        let r = seminormal_module(&pp("3,1").unwrap(), &pp("1").unwrap(), Algebra::Affine).unwrap();
        assert_eq!(commutant_dimension(&r), Some(2));
    }

    #[test]
    fn characters() {
        let b = basic_spin_module(4).unwrap();
        assert_eq!(character(&b, &pp("3,1").unwrap()).unwrap(), rint(4));
        assert_eq!(character(&b, &pp("2,1,1").unwrap()).unwrap(), rint(0));
        let z = spin_character(&pp("3").unwrap()).unwrap();
        assert_eq!(z.value(&pp("1,1,1").unwrap()), 8.into());
        assert_eq!(z.value(&pp("3").unwrap()), 2.into());
        assert_eq!(ch_minus(&z).unwrap(), crate::schurq::q(3));
        let chi = char_table(3, CharKind::Symmetric).unwrap();
        for c in &chi {
            assert!(crate::symfunc::sym_eq(&ch_map(c), &crate::symfunc::SymQ::basis_elt(crate::symfunc::Basis::S, &c.label)));
        }
        assert_eq!(degree_formula(&pp("2,1").unwrap()).unwrap(), 4.into());
        assert!(sergeev_dimension_check(1, 2).unwrap());
        assert!(sergeev_dimension_check(2, 3).unwrap());
        assert!(permutation_module_check(&pp("2,1").unwrap()).unwrap());
    }
}
