use super::Basis;
use crate::arith::{Rat, rint};
use crate::cache::OnceMap;
use crate::partitions::{enumerate, Kind, Partition};
use crate::tableaux::kostka_number;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

/// Change of basis between `basis` and the monomial basis in one degree.
pub(crate) struct Transition {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `b_λ = Σ_μ to_m[λ][μ] m_μ`.
    pub to_m: Vec<Vec<Rat>>,
    /// `m_μ = Σ_ν from_m[μ][ν] b_ν`.
    pub from_m: Vec<Vec<Rat>>,
}

static CACHE: OnceLock<OnceMap<(usize, Basis), Transition>> = OnceLock::new();

pub(crate) fn transition(n: usize, b: Basis) -> Arc<Transition> {
    CACHE.get_or_init(OnceMap::new).get_or_insert_with(&(n, b), || build(n, b))
}

fn build(n: usize, b: Basis) -> Transition {
    let parts = enumerate(n, Kind::All);
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let k = parts.len();
    let mut to_m = vec![vec![Rat::zero(); k]; k];
    for (i, l) in parts.iter().enumerate() {
        for (j, m) in parts.iter().enumerate() {
            let v = match b {
                Basis::M => usize::from(i == j),
                Basis::S => kostka_number(l, m.parts()),
                Basis::H => count_matrices(l.parts(), m.parts(), false),
                Basis::E => count_matrices(l.parts(), m.parts(), true),
                Basis::P => count_assignments(l.parts(), m.parts()),
            };
            to_m[i][j] = rint(v as i64);
        }
    }
    let from_m = invert(&to_m).expect("transition matrices are invertible");
    Transition { parts, index, to_m, from_m }
}

/// Nonnegative (or 0-1) integer matrices with the given row and column sums.
fn count_matrices(rows: &[usize], cols: &[usize], binary: bool) -> usize {
    fn fill_row(
        r: usize,
        j: usize,
        left: usize,
        rows: &[usize],
        cols: &mut Vec<usize>,
        binary: bool,
    ) -> usize {
        if j == cols.len() {
            if left != 0 {
                return 0;
            }
            return go(r + 1, rows, cols, binary);
        }
        let cap = if binary { 1 } else { left };
        let mut total = 0;
        for v in 0..=cap.min(left).min(cols[j]) {
            cols[j] -= v;
            total += fill_row(r, j + 1, left - v, rows, cols, binary);
            cols[j] += v;
        }
        total
    }
    fn go(r: usize, rows: &[usize], cols: &mut Vec<usize>, binary: bool) -> usize {
        if r == rows.len() {
            return usize::from(cols.iter().all(|&c| c == 0));
        }
        fill_row(r, 0, rows[r], rows, cols, binary)
    }
    go(0, rows, &mut cols.to_vec(), binary)
}

/// Ways to place each part of `parts` in a bin so that the bins are filled to `bins`.
fn count_assignments(parts: &[usize], bins: &[usize]) -> usize {
    fn go(i: usize, parts: &[usize], bins: &mut Vec<usize>) -> usize {
        if i == parts.len() {
            return usize::from(bins.iter().all(|&b| b == 0));
        }
        let mut total = 0;
        for j in 0..bins.len() {
            if bins[j] >= parts[i] {
                bins[j] -= parts[i];
                total += go(i + 1, parts, bins);
                bins[j] += parts[i];
            }
        }
        total
    }
    go(0, parts, &mut bins.to_vec())
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
pub fn invert(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}
