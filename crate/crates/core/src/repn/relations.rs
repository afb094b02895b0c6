use super::matrix::{Echelon, Mat};
use super::{Algebra, Rep};
use crate::arith::RadExt;
use crate::verify::SuiteReport;
use std::collections::{BTreeMap, HashMap};

struct Collector {
    failures: BTreeMap<&'static str, Vec<String>>,
    counts: BTreeMap<&'static str, usize>,
}

impl Collector {
    fn new(names: &[&'static str]) -> Self {
        Collector {
            failures: names.iter().map(|&n| (n, Vec::new())).collect(),
            counts: names.iter().map(|&n| (n, 0)).collect(),
        }
    }

    fn eq(&mut self, rel: &'static str, instance: String, lhs: &Mat, rhs: &Mat) {
        *self.counts.get_mut(rel).unwrap() += 1;
        if lhs != rhs {
            self.failures.get_mut(rel).unwrap().push(instance);
        }
    }

    fn ok(&mut self, rel: &'static str, instance: String, ok: bool) {
        *self.counts.get_mut(rel).unwrap() += 1;
        if !ok {
            self.failures.get_mut(rel).unwrap().push(instance);
        }
    }

    fn into_report(self, name: &str) -> SuiteReport {
        let mut rep = SuiteReport::new(name);
        for (rel, fails) in self.failures {
            let n = self.counts[rel];
            if fails.is_empty() {
                rep.record(rel, true, format!("{n} instances"));
            } else {
                rep.record(rel, false, format!("{} of {n} fail, first {}", fails.len(), fails[0]));
            }
        }
        rep
    }
}

/// Checks every defining relation available for the generators of `r`.
///
/// `Finite` covers braid, clifford, pc and parity; `Affine` adds poly, px1, px2 and xc.
/// Relations needing generators that `r` lacks are skipped.
pub fn verify_relations(r: &Rep, which: Algebra) -> SuiteReport {
    let n = r.n;
    let id = r.identity();
    let cl = r.has_clifford();
    let affine = which == Algebra::Affine && r.has_x();
    let mut names = vec!["braid", "parity"];
    if cl {
        names.extend(["clifford", "pc"]);
    }
    if affine {
        names.extend(["poly", "px1", "px2"]);
        if cl {
            names.push("xc");
        }
    }
    let mut col = Collector::new(&names);
    for i in 1..n {
        let s = r.s(i);
        col.eq("braid", format!("s{i}^2"), &s.mul(s), &id);
        for j in i + 1..n {
            let t = r.s(j);
            if j == i + 1 {
                col.eq("braid", format!("s{i}s{j}s{i}"), &s.mul(t).mul(s), &t.mul(s).mul(t));
            } else {
                col.eq("braid", format!("s{i}s{j}"), &s.mul(t), &t.mul(s));
            }
        }
    }
    let even = |m: &Mat| m.entries().all(|(i, j, _)| r.parity[i] == r.parity[j]);
    let odd = |m: &Mat| m.entries().all(|(i, j, _)| r.parity[i] != r.parity[j]);
    for (name, m) in &r.gens {
        let ok = if name.starts_with('c') { odd(m) } else { even(m) };
        col.ok("parity", name.clone(), ok);
    }
    if cl {
        for i in 1..=n {
            let c = r.c(i);
            col.eq("clifford", format!("c{i}^2"), &c.mul(c), &id);
            for j in i + 1..=n {
                col.eq("clifford", format!("c{i}c{j}"), &c.anticommutator(r.c(j)), &Mat::zero(r.dim));
            }
        }
        for i in 1..n {
            let s = r.s(i);
            for j in 1..=n {
                let target = if j == i { i + 1 } else if j == i + 1 { i } else { j };
                col.eq("pc", format!("s{i}c{j}"), &s.mul(r.c(j)), &r.c(target).mul(s));
            }
        }
    }
    if affine {
        for i in 1..=n {
            for j in i + 1..=n {
                col.eq("poly", format!("x{i}x{j}"), &r.x(i).mul(r.x(j)), &r.x(j).mul(r.x(i)));
            }
        }
        for i in 1..n {
            let s = r.s(i);
            let corr = if cl { id.add(&r.c(i).mul(r.c(i + 1))) } else { id.clone() };
            col.eq("px1", format!("s{i}x{i}"), &s.mul(r.x(i)), &r.x(i + 1).mul(s).sub(&corr));
            for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                col.eq("px2", format!("s{i}x{j}"), &s.mul(r.x(j)), &r.x(j).mul(s));
            }
        }
        if cl {
            for i in 1..=n {
                for j in 1..=n {
                    let lhs = r.x(i).mul(r.c(j));
                    let rhs = r.c(j).mul(r.x(i));
                    col.eq("xc", format!("x{i}c{j}"), &lhs, &if i == j { rhs.neg() } else { rhs });
                }
            }
        }
    }
    col.into_report(&format!("relations({})", r.label))
}

/// `φ_k = s_k(x_k² - x_{k+1}²) + (x_k + x_{k+1}) + c_k c_{k+1}(x_k - x_{k+1})`.
pub fn intertwiner(r: &Rep, k: usize) -> Mat {
    let (xk, xl) = (r.x(k), r.x(k + 1));
    let d2 = xk.mul(xk).sub(&xl.mul(xl));
    r.s(k).mul(&d2).add(&xk.add(xl)).add(&r.c(k).mul(r.c(k + 1)).mul(&xk.sub(xl)))
}

/// Exact checks of the intertwiner identities on an affine module.
pub fn verify_intertwiners(r: &Rep) -> SuiteReport {
    let n = r.n;
    let phis: Vec<Mat> = (1..n).map(|k| intertwiner(r, k)).collect();
    let mut col = Collector::new(&["sqinter", "xinter", "cinter", "braidinter"]);
    for k in 1..n {
        let p = &phis[k - 1];
        let (xk, xl) = (r.x(k), r.x(k + 1));
        let (a, b) = (xk.mul(xk), xl.mul(xl));
        let d = a.sub(&b);
        let rhs = a.add(&b).scale_rat(&crate::arith::rint(2)).sub(&d.mul(&d));
        col.eq("sqinter", format!("phi{k}^2"), &p.mul(p), &rhs);
        for l in 1..=n {
            let target = if l == k { k + 1 } else if l == k + 1 { k } else { l };
            col.eq("xinter", format!("phi{k}x{l}"), &p.mul(r.x(l)), &r.x(target).mul(p));
            col.eq("cinter", format!("phi{k}c{l}"), &p.mul(r.c(l)), &r.c(target).mul(p));
        }
        for j in k + 1..n {
            let q = &phis[j - 1];
            if j == k + 1 {
                col.eq("braidinter", format!("phi{k}phi{j}phi{k}"), &p.mul(q).mul(p), &q.mul(p).mul(q));
            } else {
                col.eq("braidinter", format!("phi{k}phi{j}"), &p.mul(q), &q.mul(p));
            }
        }
    }
    col.into_report(&format!("intertwiners({})", r.label))
}

/// Dimension of the space of matrices commuting with every `s_k` and `c_i` of `r`.
///
/// Such a matrix also commutes with the `x_k` (Jucys–Murphy images or the affine
/// generators), which are diagonal here, so it is block diagonal over the joint
/// `x`-eigenvalues; only those blocks enter the linear system.
pub fn commutant_dimension(r: &Rep) -> Option<usize> {
    let n = r.n;
    let xs: Vec<&Mat> = (1..=n).map(|i| r.x(i)).collect();
    if xs.iter().any(|m| !m.is_diagonal()) {
        return None;
    }
    let diag: Vec<Vec<RadExt>> = xs.iter().map(|m| m.diagonal()).collect();
    let mut blocks: HashMap<Vec<String>, Vec<usize>> = HashMap::new();
    for i in 0..r.dim {
        let key: Vec<String> = diag.iter().map(|d| d[i].to_string()).collect();
        blocks.entry(key).or_default().push(i);
    }
    let mut block_of = vec![0usize; r.dim];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (b, m) in blocks.into_values().enumerate() {
        for &i in &m {
            block_of[i] = b;
        }
        members.push(m);
    }
    // unknown X_{pq} for p, q in the same block
    let mut var: HashMap<(usize, usize), usize> = HashMap::new();
    for m in &members {
        for &p in m {
            for &q in m {
                let k = var.len();
                var.insert((p, q), k);
            }
        }
    }
    let mut ech = Echelon::default();
    let mut gens: Vec<&Mat> = (1..n).map(|k| r.s(k)).collect();
    if r.has_clifford() {
        gens.extend((1..=n).map(|i| r.c(i)));
    }
    for g in gens {
        // (XG - GX)_{pq} = Σ_r X_{pr} G_{rq} - Σ_r G_{pr} X_{rq}
        for p in 0..r.dim {
            let mut eqs: BTreeMap<usize, BTreeMap<usize, RadExt>> = BTreeMap::new();
            for &rr in &members[block_of[p]] {
                for (&q, v) in g.row(rr) {
                    let e = eqs.entry(q).or_default().entry(var[&(p, rr)]).or_insert_with(RadExt::zero);
                    e.add_assign(v);
                }
            }
            for (&rr, v) in g.row(p) {
                for &q in &members[block_of[rr]] {
                    let e = eqs.entry(q).or_default().entry(var[&(rr, q)]).or_insert_with(RadExt::zero);
                    *e = e.sub(v);
                }
            }
            for (_, row) in eqs {
                ech.insert(row);
            }
        }
    }
    Some(var.len() - ech.rank())
}
