//! Semistandard, marked shifted and standard skew shifted tableaux, the
//! charge statistic, and the bijection between standard skew shifted
//! tableaux and content vectors.

use crate::arith::Rat;
use crate::partitions::{check_shifted_skew, shifted_cells, shifted_skew_cells, Partition};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};

/// Semistandard tableau of an ordinary (possibly skew) shape; rows list the entries
/// to the right of the inner shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ssyt {
    pub shape: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<usize>>,
}

fn skew_ordinary_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    outer
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (inner.part(i)..r).map(move |j| (i, j)))
        .collect()
}

/// All SSYT of shape `outer/inner` with content `weight` (entry `k+1` appears `weight[k]` times).
pub fn skew_ssyt(outer: &Partition, inner: &Partition, weight: &[usize]) -> Vec<Ssyt> {
    let cells = skew_ordinary_cells(outer, inner);
    if cells.len() != weight.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut left = weight.to_vec();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut HashMap<(usize, usize), usize>,
        left: &mut [usize],
        outer: &Partition,
        inner: &Partition,
        out: &mut Vec<Ssyt>,
    ) {
        if k == cells.len() {
            let rows = (0..outer.len())
                .map(|i| (inner.part(i)..outer.part(i)).map(|j| grid[&(i, j)]).collect())
                .collect();
            out.push(Ssyt { shape: outer.clone(), inner: inner.clone(), rows });
            return;
        }
        let (i, j) = cells[k];
        let lo_left = if j > 0 { grid.get(&(i, j - 1)).copied().unwrap_or(1) } else { 1 };
        let lo_up = if i > 0 { grid.get(&(i - 1, j)).map(|v| v + 1).unwrap_or(1) } else { 1 };
        for v in lo_left.max(lo_up)..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            grid.insert((i, j), v);
            rec(k + 1, cells, grid, left, outer, inner, out);
            grid.remove(&(i, j));
            left[v - 1] += 1;
        }
    }
    rec(0, &cells, &mut grid, &mut left, outer, inner, &mut out);
    out
}

pub fn ssyt(shape: &Partition, weight: &[usize]) -> Vec<Ssyt> {
    skew_ssyt(shape, &Partition::empty(), weight)
}

pub fn kostka_number(shape: &Partition, weight: &[usize]) -> usize {
    ssyt(shape, weight).len()
}

impl Ssyt {
    /// Rows read bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flat_map(|r| r.iter().copied()).collect()
    }
}

/// Charge of a word whose content is a partition, through its standard subwords.
pub fn charge(word: &[usize]) -> usize {
    let n = word.len();
    let mut used = vec![false; n];
    let mut total = 0;
    let mut remaining = n;
    while remaining > 0 {
        let k = (1..)
            .take_while(|v| (0..n).any(|p| !used[p] && word[p] == *v))
            .last()
            .unwrap_or(0);
        assert!(k > 0, "word content must be a partition");
        let find = |start: usize, v: usize, used: &[bool]| -> (usize, bool) {
            // leftward from start-1, wrapping to the right end
            for p in (0..start).rev() {
                if !used[p] && word[p] == v {
                    return (p, false);
                }
            }
            for p in (start..n).rev() {
                if !used[p] && word[p] == v {
                    return (p, true);
                }
            }
            unreachable!("letter present")
        };
        let (mut pos, _) = find(n, 1, &used);
        used[pos] = true;
        let mut index = 0;
        for v in 2..=k {
            let (p, wrapped) = find(pos, v, &used);
            if wrapped {
                index += 1;
            }
            total += index;
            used[p] = true;
            pos = p;
        }
        remaining -= k;
    }
    total
}

/// Letter of the marked alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    code: usize,
}

impl Letter {
    pub fn new(value: usize, marked: bool) -> Self {
        Letter { code: 2 * value - usize::from(marked) }
    }
    pub fn value(self) -> usize {
        self.code.div_ceil(2)
    }
    pub fn marked(self) -> bool {
        self.code % 2 == 1
    }
    pub fn parse(s: &str) -> Result<Self> {
        let (body, marked) = match s.strip_suffix('\'') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let v: usize = body.parse().map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if v == 0 {
            return Err(Error::Parse("letters start at 1".into()));
        }
        Ok(Letter::new(v, marked))
    }
}

impl std::fmt::Display for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.value(), if self.marked() { "'" } else { "" })
    }
}

/// Marked shifted tableau; row `i` starts on the diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedShiftedTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<Letter>>,
}

/// Marked shifted tableaux of shape `ξ` and the given weight.
pub fn marked_shifted(xi: &Partition, weight: &[usize]) -> Result<Vec<MarkedShiftedTableau>> {
    xi.require_strict()?;
    let cells = shifted_cells(xi);
    if cells.len() != weight.iter().sum::<usize>() {
        return Ok(Vec::new());
    }
    let mut grid: HashMap<(usize, usize), Letter> = HashMap::new();
    let mut left = weight.to_vec();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut HashMap<(usize, usize), Letter>,
        left: &mut [usize],
        xi: &Partition,
        out: &mut Vec<MarkedShiftedTableau>,
    ) {
        if k == cells.len() {
            let rows = (0..xi.len()).map(|i| (i..i + xi.part(i)).map(|j| grid[&(i, j)]).collect()).collect();
            out.push(MarkedShiftedTableau { shape: xi.clone(), rows });
            return;
        }
        let (i, j) = cells[k];
        let l = if j > i { grid.get(&(i, j - 1)).copied() } else { None };
        let u = if i > 0 { grid.get(&(i - 1, j)).copied() } else { None };
        for v in 1..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            for marked in [true, false] {
                let x = Letter::new(v, marked);
                if l.is_some_and(|l| x < l || (marked && l == x)) {
                    continue;
                }
                if u.is_some_and(|u| x < u || (!marked && u == x)) {
                    continue;
                }
                left[v - 1] -= 1;
                grid.insert((i, j), x);
                rec(k + 1, cells, grid, left, xi, out);
                grid.remove(&(i, j));
                left[v - 1] += 1;
            }
        }
    }
    rec(0, &cells, &mut grid, &mut left, xi, &mut out);
    Ok(out)
}

pub fn marked_shifted_count(xi: &Partition, weight: &[usize]) -> Result<usize> {
    Ok(marked_shifted(xi, weight)?.len())
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    shape: Partition,
    inner: Partition,
    rows: Vec<Vec<String>>,
}

impl MarkedShiftedTableau {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson {
            shape: self.shape.clone(),
            inner: Partition::empty(),
            rows: self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: TableauJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = j
            .rows
            .iter()
            .map(|r| r.iter().map(|x| Letter::parse(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(MarkedShiftedTableau { shape: j.shape, rows })
    }
}

/// Standard filling of a skew shifted diagram `outer/inner`; row `i` lists the labels in
/// columns `i + inner_i .. i + outer_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShiftedStdTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl ShiftedStdTableau {
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Cells `(row, col, label)` in the shifted plane, 0-based.
    pub fn cells(&self) -> Vec<(usize, usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| {
                let start = i + self.inner.part(i);
                r.iter().enumerate().map(move |(k, &l)| (i, start + k, l))
            })
            .collect()
    }

    /// Position of each label `1..=n`.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.size()];
        for (i, j, l) in self.cells() {
            pos[l - 1] = (i, j);
        }
        pos
    }

    /// Content of the cell holding label `k+1`, for each `k`.
    pub fn content_vector(&self) -> Vec<usize> {
        self.positions().iter().map(|&(i, j)| j - i).collect()
    }

    /// The tableau with labels `k` and `k+1` exchanged, if it is still standard (0-based `k`).
    pub fn swap(&self, k: usize) -> Option<ShiftedStdTableau> {
        let pos = self.positions();
        let (a, b) = (pos[k], pos[k + 1]);
        if a.0 == b.0 && a.1 + 1 == b.1 || a.1 == b.1 && a.0 + 1 == b.0 {
            return None;
        }
        let mut t = self.clone();
        for (i, r) in t.rows.iter_mut().enumerate() {
            let start = i + self.inner.part(i);
            for (c, l) in r.iter_mut().enumerate() {
                if (i, start + c) == a {
                    *l = k + 2;
                } else if (i, start + c) == b {
                    *l = k + 1;
                }
            }
        }
        Some(t)
    }

    pub fn is_standard(&self) -> bool {
        let mut at: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, j, l) in self.cells() {
            at.insert((i, j), l);
        }
        let mut labels: Vec<usize> = at.values().copied().collect();
        labels.sort_unstable();
        if labels != (1..=labels.len()).collect::<Vec<_>>() {
            return false;
        }
        at.iter().all(|(&(i, j), &l)| {
            let okl = j == 0 || at.get(&(i, j - 1)).is_none_or(|&x| x < l);
            let oku = i == 0 || at.get(&(i - 1, j)).is_none_or(|&x| x < l);
            okl && oku
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson {
            shape: self.outer.clone(),
            inner: self.inner.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: TableauJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = j
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad label {x:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let t = ShiftedStdTableau { outer: j.shape, inner: j.inner, rows };
        check_shifted_skew(&t.outer, &t.inner)?;
        if !t.is_standard() {
            return Err(Error::InvalidShape("tableau is not standard".into()));
        }
        Ok(t)
    }

    /// Canonical placement of the same tableau: connected components stacked without gaps,
    /// highest contents on top.
    pub fn normalize(&self) -> Result<ShiftedStdTableau> {
        let cells: Vec<(i64, i64, usize)> =
            self.cells().into_iter().map(|(i, j, l)| (i as i64, j as i64, l)).collect();
        let set: HashMap<(i64, i64), usize> = cells.iter().map(|&(i, j, l)| ((i, j), l)).collect();
        let mut seen: HashSet<(i64, i64)> = HashSet::new();
        let mut comps = Vec::new();
        for &(i, j, _) in &cells {
            if !seen.insert((i, j)) {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![(i, j)];
            while let Some((a, b)) = stack.pop() {
                comp.push((a, b, set[&(a, b)]));
                for nb in [(a - 1, b), (a + 1, b), (a, b - 1), (a, b + 1)] {
                    if set.contains_key(&nb) && seen.insert(nb) {
                        stack.push(nb);
                    }
                }
            }
            comps.push(comp);
        }
        layout(comps)
    }
}

/// Stacks components along the diagonal direction and reads off `(outer, inner)`.
fn layout(mut comps: Vec<Vec<(i64, i64, usize)>>) -> Result<ShiftedStdTableau> {
    let content = |c: &(i64, i64, usize)| c.1 - c.0;
    comps.sort_by_key(|c| std::cmp::Reverse(c.iter().map(content).min().unwrap_or(0)));
    let mut placed: Vec<(i64, i64, usize)> = Vec::new();
    let mut next_row = 0i64;
    for comp in comps {
        let min_row = comp.iter().map(|c| c.0).min().unwrap_or(0);
        let d = next_row - min_row;
        let shifted: Vec<_> = comp.iter().map(|&(i, j, l)| (i + d, j + d, l)).collect();
        next_row = shifted.iter().map(|c| c.0).max().unwrap_or(next_row - 1) + 1;
        placed.extend(shifted);
    }
    let nrows = next_row.max(0) as usize;
    let mut rows: Vec<BTreeMap<i64, usize>> = vec![BTreeMap::new(); nrows];
    for &(i, j, l) in &placed {
        if j < i {
            return Err(Error::Inconsistent(format!("cell ({i},{j}) below the diagonal")));
        }
        if rows[i as usize].insert(j, l).is_some() {
            return Err(Error::Inconsistent(format!("cell ({i},{j}) filled twice")));
        }
    }
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    let mut labels = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let (first, last) = match (r.keys().next(), r.keys().next_back()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => return Err(Error::Inconsistent(format!("empty row {i} in layout"))),
        };
        if (last - first + 1) as usize != r.len() {
            return Err(Error::Inconsistent(format!("row {i} is not an interval")));
        }
        inner.push((first - i as i64) as usize);
        outer.push((last - i as i64 + 1) as usize);
        labels.push(r.values().copied().collect::<Vec<_>>());
    }
    let outer = Partition::new(outer).map_err(|e| Error::Inconsistent(e.to_string()))?;
    let inner = Partition::new(inner).map_err(|e| Error::Inconsistent(e.to_string()))?;
    check_shifted_skew(&outer, &inner).map_err(|e| Error::Inconsistent(e.to_string()))?;
    let t = ShiftedStdTableau { outer, inner, rows: labels };
    if !t.is_standard() {
        return Err(Error::Inconsistent("layout is not standard".into()));
    }
    Ok(t)
}

/// All standard fillings of the skew shifted diagram `ξ/ν`.
pub fn standard_skew_shifted(xi: &Partition, nu: &Partition) -> Result<Vec<ShiftedStdTableau>> {
    check_shifted_skew(xi, nu)?;
    let cells = shifted_skew_cells(xi, nu);
    let inside: HashSet<(usize, usize)> = cells.iter().copied().collect();
    let mut label: HashMap<(usize, usize), usize> = HashMap::new();
    let mut out = Vec::new();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        inside: &HashSet<(usize, usize)>,
        label: &mut HashMap<(usize, usize), usize>,
        xi: &Partition,
        nu: &Partition,
        out: &mut Vec<ShiftedStdTableau>,
    ) {
        if k == cells.len() {
            let rows = (0..xi.len())
                .map(|i| (i + nu.part(i)..i + xi.part(i)).map(|j| label[&(i, j)]).collect())
                .collect();
            out.push(ShiftedStdTableau { outer: xi.clone(), inner: nu.clone(), rows });
            return;
        }
        for &(i, j) in cells {
            if label.contains_key(&(i, j)) {
                continue;
            }
            let lf = j == 0 || !inside.contains(&(i, j - 1)) || label.contains_key(&(i, j - 1));
            let uf = i == 0 || !inside.contains(&(i - 1, j)) || label.contains_key(&(i - 1, j));
            if lf && uf {
                label.insert((i, j), k + 1);
                rec(k + 1, cells, inside, label, xi, nu, out);
                label.remove(&(i, j));
            }
        }
    }
    rec(0, &cells, &inside, &mut label, xi, nu, &mut out);
    Ok(out)
}

/// Number of standard fillings of `ξ/ν`, by dynamic programming over filled subsets.
pub fn standard_skew_shifted_count(xi: &Partition, nu: &Partition) -> Result<u64> {
    check_shifted_skew(xi, nu)?;
    let cells = shifted_skew_cells(xi, nu);
    if cells.len() > 63 {
        return Err(Error::InvalidShape("too many cells".into()));
    }
    let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let preds: Vec<u64> = cells
        .iter()
        .map(|&(i, j)| {
            let mut m = 0u64;
            if j > 0 {
                if let Some(&k) = index.get(&(i, j - 1)) {
                    m |= 1 << k;
                }
            }
            if i > 0 {
                if let Some(&k) = index.get(&(i - 1, j)) {
                    m |= 1 << k;
                }
            }
            m
        })
        .collect();
    let full = if cells.len() == 64 { u64::MAX } else { (1u64 << cells.len()) - 1 };
    let mut memo: HashMap<u64, u64> = HashMap::new();
    fn count(filled: u64, full: u64, preds: &[u64], memo: &mut HashMap<u64, u64>) -> u64 {
        if filled == full {
            return 1;
        }
        if let Some(&v) = memo.get(&filled) {
            return v;
        }
        let mut total = 0;
        for (k, &p) in preds.iter().enumerate() {
            if filled & (1 << k) == 0 && p & !filled == 0 {
                total += count(filled | (1 << k), full, preds, memo);
            }
        }
        memo.insert(filled, total);
        total
    }
    Ok(count(0, full, &preds, &mut memo))
}

/// `g_ξ = n!/Π ξ_i! · Π_{i<j} (ξ_i - ξ_j)/(ξ_i + ξ_j)`.
pub fn g_closed_form(xi: &Partition) -> Result<Rat> {
    xi.require_strict()?;
    let fact = |n: usize| (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k));
    let mut r = Rat::from_integer(fact(xi.size()));
    for &x in xi.parts() {
        r /= Rat::from_integer(fact(x));
    }
    let p = xi.parts();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            r *= Rat::new(BigInt::from(p[i] - p[j]), BigInt::from(p[i] + p[j]));
        }
    }
    Ok(r)
}

/// Standard Young tableaux of an ordinary shape, rows listing labels.
pub fn standard_young(lambda: &Partition) -> Vec<Vec<Vec<usize>>> {
    let n = lambda.size();
    let weight = vec![1; n];
    ssyt(lambda, &weight).into_iter().map(|t| t.rows).collect()
}

/// Whether `w` is the content vector of a standard skew shifted tableau.
///
/// For each pair of equal entries `a` at positions `k < l`: `a = 0` needs a `1` strictly
/// between; `a >= 1` needs both `a - 1` and `a + 1` strictly between.
pub fn is_valid_weight(w: &[usize]) -> bool {
    for k in 0..w.len() {
        for l in k + 1..w.len() {
            if w[k] != w[l] {
                continue;
            }
            let a = w[k];
            let between = &w[k + 1..l];
            let ok = if a == 0 {
                between.contains(&1)
            } else {
                between.contains(&(a - 1)) && between.contains(&(a + 1))
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Inverse of [`tableau_to_weight`], inserting cells one label at a time.
pub fn weight_to_tableau(w: &[usize]) -> Result<ShiftedStdTableau> {
    if !is_valid_weight(w) {
        return Err(Error::InvalidWeight(format!("{w:?}")));
    }
    // component index per cell; cells as (row, col, label)
    let mut comps: Vec<Vec<(i64, i64, usize)>> = Vec::new();
    let last_on = |comps: &Vec<Vec<(i64, i64, usize)>>, c: i64| -> Option<(usize, (i64, i64, usize))> {
        let mut best: Option<(usize, (i64, i64, usize))> = None;
        for (ci, comp) in comps.iter().enumerate() {
            for &cell in comp {
                if cell.1 - cell.0 == c && best.is_none_or(|(_, b)| cell.2 > b.2) {
                    best = Some((ci, cell));
                }
            }
        }
        best
    };
    for (k, &u) in w.iter().enumerate() {
        let label = k + 1;
        let u = u as i64;
        let below = last_on(&comps, u - 1);
        let above = last_on(&comps, u + 1);
        match (below, above) {
            (None, None) => comps.push(vec![(0, u, label)]),
            (Some((ci, a)), None) => comps[ci].push((a.0, a.1 + 1, label)),
            (None, Some((ci, b))) => comps[ci].push((b.0 + 1, b.1, label)),
            (Some((ca, x)), Some((cb, y))) => {
                let target = (x.0 - 1, x.1 + 1);
                if ca == cb {
                    if (y.0, y.1) != target {
                        return Err(Error::Inconsistent(format!("misaligned cells at label {label}")));
                    }
                    comps[ca].push((x.0, x.1 + 1, label));
                } else {
                    let d = target.0 - y.0;
                    let mut merged = comps[ca].clone();
                    merged.extend(comps[cb].iter().map(|&(i, j, l)| (i + d, j + d, l)));
                    merged.push((x.0, x.1 + 1, label));
                    let (hi, lo) = if ca > cb { (ca, cb) } else { (cb, ca) };
                    comps.remove(hi);
                    comps.remove(lo);
                    comps.push(merged);
                }
            }
        }
    }
    let t = layout(comps)?;
    if t.content_vector() != w {
        return Err(Error::Inconsistent("insertion changed contents".into()));
    }
    Ok(t)
}

/// Content vector of a standard skew shifted tableau.
pub fn tableau_to_weight(t: &ShiftedStdTableau) -> Vec<usize> {
    t.content_vector()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn kostka_and_charge() {
        let ts = ssyt(&p(&[2, 1]), &[1, 1, 1]);
        assert_eq!(ts.len(), 2);
        let mut charges: Vec<usize> = ts.iter().map(|t| charge(&t.reading_word())).collect();
        charges.sort();
        assert_eq!(charges, vec![1, 2]);
        assert_eq!(charge(&[1, 1, 2, 2]), 2);
        assert_eq!(kostka_number(&p(&[3, 2]), &[2, 2, 1]), 2);
    }

    #[test]
    fn marked_counts() {
        assert_eq!(marked_shifted_count(&p(&[2, 1]), &[2, 1]).unwrap(), 4);
        assert_eq!(marked_shifted_count(&p(&[2, 1]), &[1, 1, 1]).unwrap(), 8);
        assert_eq!(marked_shifted_count(&p(&[1]), &[1]).unwrap(), 2);
        assert!(marked_shifted(&p(&[2, 2]), &[2, 2]).is_err());
    }

    #[test]
    fn marked_json_round_trip() {
        for t in marked_shifted(&p(&[2, 1]), &[2, 1]).unwrap() {
            assert_eq!(MarkedShiftedTableau::from_json(&t.to_json()).unwrap(), t);
        }
    }

    #[test]
    fn shifted_standard_counts() {
        assert_eq!(standard_skew_shifted_count(&p(&[2, 1]), &Partition::empty()).unwrap(), 1);
        assert_eq!(standard_skew_shifted_count(&p(&[3, 1]), &Partition::empty()).unwrap(), 2);
        assert_eq!(g_closed_form(&p(&[3, 1])).unwrap(), crate::arith::rint(2));
        assert_eq!(standard_skew_shifted(&p(&[4, 2]), &p(&[1])).unwrap().len() as u64,
            standard_skew_shifted_count(&p(&[4, 2]), &p(&[1])).unwrap());
    }

    #[test]
    fn bijection_worked_example() {
        let t = weight_to_tableau(&[1, 2, 0, 1, 0]).unwrap();
        assert_eq!(t.outer, p(&[3, 2, 1]));
        assert_eq!(t.inner, p(&[1]));
        assert_eq!(t.rows, vec![vec![1, 2], vec![3, 4], vec![5]]);
        let r = weight_to_tableau(&[0, 1, 2]).unwrap();
        assert_eq!(r.outer, p(&[3]));
        assert_eq!(r.rows, vec![vec![1, 2, 3]]);
        assert!(weight_to_tableau(&[0, 0]).is_err());
        assert!(!is_valid_weight(&[1, 0, 1]));
        assert!(is_valid_weight(&[1, 0, 2, 1]));
    }

    #[test]
    fn separated_components_merge() {
        // contents 2 and 0 are separate until the content-1 cell arrives
        let t = weight_to_tableau(&[2, 0, 1]).unwrap();
        assert_eq!(t.content_vector(), vec![2, 0, 1]);
        assert!(t.is_standard());
    }

    #[test]
    fn standard_json_round_trip() {
        let t = weight_to_tableau(&[1, 2, 0, 1, 0]).unwrap();
        assert_eq!(ShiftedStdTableau::from_json(&t.to_json()).unwrap(), t);
    }
}
