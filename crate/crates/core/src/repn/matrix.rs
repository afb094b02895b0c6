use crate::arith::{RadExt, Rat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Square matrix over `RadExt`, stored by rows; zero entries are never kept.
/// Entry `(i, j)` is the coefficient of basis vector `i` in the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    dim: usize,
    rows: Vec<BTreeMap<usize, RadExt>>,
}

impl Mat {
    pub fn zero(dim: usize) -> Self {
        Mat { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.rows[i].insert(i, RadExt::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> RadExt {
        self.rows[i].get(&j).cloned().unwrap_or_else(RadExt::zero)
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &RadExt) {
        if v.is_zero() {
            return;
        }
        let e = self.rows[i].entry(j).or_insert_with(RadExt::zero);
        e.add_assign(v);
        if e.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, RadExt> {
        &self.rows[i]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RadExt)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(&j, v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn add(&self, o: &Mat) -> Mat {
        let mut m = self.clone();
        for (i, j, v) in o.entries() {
            m.add_at(i, j, v);
        }
        m
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Mat {
        self.map(|v| v.neg())
    }

    pub fn scale(&self, k: &RadExt) -> Mat {
        if k.is_zero() {
            return Mat::zero(self.dim);
        }
        self.map(|v| v.mul(k))
    }

    pub fn scale_rat(&self, k: &Rat) -> Mat {
        self.scale(&RadExt::from_rat(k.clone()))
    }

    fn map(&self, f: impl Fn(&RadExt) -> RadExt) -> Mat {
        Mat { dim: self.dim, rows: self.rows.iter().map(|r| r.iter().map(|(&j, v)| (j, f(v))).collect()).collect() }
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let mut m = Mat::zero(self.dim);
        for (i, r) in self.rows.iter().enumerate() {
            for (&j, a) in r {
                for (&k, b) in &o.rows[j] {
                    m.add_at(i, k, &a.mul(b));
                }
            }
        }
        m
    }

    pub fn pow(&self, e: u32) -> Mat {
        (0..e).fold(Mat::identity(self.dim), |acc, _| acc.mul(self))
    }

    pub fn commutator(&self, o: &Mat) -> Mat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn anticommutator(&self, o: &Mat) -> Mat {
        self.mul(o).add(&o.mul(self))
    }

    pub fn trace(&self) -> RadExt {
        let mut t = RadExt::zero();
        for i in 0..self.dim {
            if let Some(v) = self.rows[i].get(&i) {
                t.add_assign(v);
            }
        }
        t
    }

    pub fn transpose(&self) -> Mat {
        let mut m = Mat::zero(self.dim);
        for (i, j, v) in self.entries() {
            m.rows[j].insert(i, v.clone());
        }
        m
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }

    pub fn diagonal(&self) -> Vec<RadExt> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn to_sparse(&self) -> SparseMat {
        SparseMat { dim: self.dim, entries: self.entries().map(|(i, j, v)| (i, j, v.clone())).collect() }
    }

    pub fn from_sparse(s: &SparseMat) -> Mat {
        let mut m = Mat::zero(s.dim);
        for (i, j, v) in &s.entries {
            m.add_at(*i, *j, v);
        }
        m
    }
}

/// Serialized form: `[row, col, entry]` triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMat {
    pub dim: usize,
    pub entries: Vec<(usize, usize, RadExt)>,
}

/// Rank of a set of sparse linear equations over `RadExt`.
#[derive(Default)]
pub(crate) struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, RadExt>>,
}

impl Echelon {
    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn insert(&mut self, mut row: BTreeMap<usize, RadExt>) {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some(var) = row.keys().copied().find(|k| self.pivots.contains_key(k)) else { break };
            let f = row[&var].clone();
            for (&k, v) in &self.pivots[&var] {
                let e = row.entry(k).or_insert_with(RadExt::zero);
                *e = e.sub(&v.mul(&f));
                if e.is_zero() {
                    row.remove(&k);
                }
            }
        }
        let Some((&p, lead)) = row.iter().next() else { return };
        let inv = lead.inv().expect("nonzero pivot");
        let row: BTreeMap<usize, RadExt> = row.iter().map(|(&k, v)| (k, v.mul(&inv))).collect();
        self.pivots.insert(p, row);
    }
}
