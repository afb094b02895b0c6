//! Partitions, strict partitions, Frobenius data, shifted diagrams and
//! signed permutations.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    All,
    Strict,
    Odd,
    StrictEvenLength,
    StrictOddLength,
}

impl Partition {
    /// Validates a weakly decreasing list; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts an arbitrary composition into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|x| x % 2 == 1)
    }

    pub fn require_strict(&self) -> Result<()> {
        if self.is_strict() {
            Ok(())
        } else {
            Err(Error::InvalidPartition(format!("{self} is not strict")))
        }
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&x| x >= j).count()).collect())
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, x)| i * x).sum()
    }

    /// Multiplicity of each part value `1..=max`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &x in &self.0 {
            m[x] += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// Dominance: `self >= other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Cells `(i, j)`, 0-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &r)| (0..r).map(move |j| (i, j))).collect()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        j < self.part(i)
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        let c = self.conjugate();
        self.part(i) - j + c.part(j) - i - 1
    }

    pub fn hooks(&self) -> Vec<Vec<usize>> {
        let c = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &r)| (0..r).map(|j| r - j + c.part(j) - i - 1).collect())
            .collect()
    }

    pub fn contents(&self) -> Vec<Vec<i64>> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &r)| (0..r).map(|j| j as i64 - i as i64).collect())
            .collect()
    }

    /// Frobenius notation `(α | β)` with `α_i = λ_i - i`, `β_i = λ'_i - i`.
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let c = self.conjugate();
        let r = (0..self.len()).take_while(|&i| self.0[i] > i).count();
        let a = (0..r).map(|i| self.0[i] - i - 1).collect();
        let b = (0..r).map(|i| c.part(i) - i - 1).collect();
        (a, b)
    }

    pub fn from_frobenius(a: &[usize], b: &[usize]) -> Result<Partition> {
        let r = a.len();
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if b.len() != r || !strict(a) || !strict(b) {
            return Err(Error::InvalidPartition(format!("bad Frobenius data {a:?} | {b:?}")));
        }
        let mut parts: Vec<usize> = (0..r).map(|i| a[i] + i + 1).collect();
        let mut row = r + 1;
        loop {
            let len = (0..r).filter(|&j| b[j] + j + 1 >= row).count();
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` of the given kind, lexicographically increasing.
pub fn enumerate(n: usize, kind: Kind) -> Vec<Partition> {
    fn rec(n: usize, max: usize, strict: bool, odd: bool, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            if odd && p % 2 == 0 {
                continue;
            }
            cur.push(p);
            let next = if strict { p - 1 } else { p };
            rec(n - p, next, strict, odd, cur, out);
            cur.pop();
        }
    }
    let (strict, odd) = match kind {
        Kind::All => (false, false),
        Kind::Odd => (false, true),
        _ => (true, false),
    };
    let mut out = Vec::new();
    rec(n, n, strict, odd, &mut Vec::new(), &mut out);
    match kind {
        Kind::StrictEvenLength => out.retain(|p| p.len() % 2 == 0),
        Kind::StrictOddLength => out.retain(|p| p.len() % 2 == 1),
        _ => {}
    }
    out.sort();
    out
}

/// All partitions of `n` in decreasing lexicographic order, a linear extension of dominance.
pub fn enumerate_desc(n: usize, kind: Kind) -> Vec<Partition> {
    let mut v = enumerate(n, kind);
    v.reverse();
    v
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Partition::empty());
    }
    let parts: std::result::Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse::<usize>()).collect();
    Partition::new(parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?)
}

/// The doubled diagram `(ξ | ξ - 1)` of a strict partition.
pub fn double_partition(xi: &Partition) -> Result<Partition> {
    xi.require_strict()?;
    let a = xi.parts().to_vec();
    let b: Vec<usize> = xi.parts().iter().map(|x| x - 1).collect();
    Partition::from_frobenius(&a, &b)
}

/// Cells `(i, j)` (0-based) of the shifted diagram: `i <= j < ξ_i + i`.
pub fn shifted_cells(xi: &Partition) -> Vec<(usize, usize)> {
    xi.parts().iter().enumerate().flat_map(|(i, &r)| (i..i + r).map(move |j| (i, j))).collect()
}

/// Cells of the skew shifted diagram `ξ/ν`.
pub fn shifted_skew_cells(xi: &Partition, nu: &Partition) -> Vec<(usize, usize)> {
    xi.parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (i + nu.part(i)..i + r).map(move |j| (i, j)))
        .collect()
}

/// Checks that `ν ⊆ ξ` are strict partitions.
pub fn check_shifted_skew(xi: &Partition, nu: &Partition) -> Result<()> {
    xi.require_strict()?;
    nu.require_strict()?;
    if nu.len() > xi.len() || (0..nu.len()).any(|i| nu.part(i) > xi.part(i)) {
        return Err(Error::InvalidShape(format!("{nu} is not contained in {xi}")));
    }
    Ok(())
}

/// Shifted contents `j - i` row by row.
pub fn shifted_contents(xi: &Partition) -> Vec<Vec<usize>> {
    xi.parts().iter().map(|&r| (0..r).collect()).collect()
}

/// Shifted hook lengths: the hook of the doubled diagram at the cell one step to the right.
pub fn shifted_hooks(xi: &Partition) -> Result<Vec<Vec<usize>>> {
    let d = double_partition(xi)?;
    Ok(xi
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &r)| (i..i + r).map(|j| d.hook(i, j + 1)).collect())
        .collect())
}

/// Element of the hyperoctahedral group: a permutation together with a sign per index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPerm {
    /// 0-based images.
    pub perm: Vec<usize>,
    /// `true` for a minus sign.
    pub signs: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct SignedPermJson {
    perm: Vec<usize>,
    signs: String,
}

impl Serialize for SignedPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SignedPermJson {
            perm: self.perm.iter().map(|x| x + 1).collect(),
            signs: self.signs.iter().map(|&b| if b { '-' } else { '+' }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedPerm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SignedPermJson::deserialize(d)?;
        let perm: Vec<usize> = j
            .perm
            .iter()
            .map(|&x| x.checked_sub(1).ok_or_else(|| serde::de::Error::custom("perm is 1-based")))
            .collect::<std::result::Result<_, _>>()?;
        let signs = j
            .signs
            .chars()
            .map(|c| match c {
                '+' => Ok(false),
                '-' => Ok(true),
                _ => Err(serde::de::Error::custom("signs must be + or -")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SignedPerm::new(perm, signs).map_err(serde::de::Error::custom)
    }
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<bool>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse(format!("{perm:?} is not a permutation")));
            }
        }
        if signs.len() != n {
            return Err(Error::Parse("sign vector length differs from permutation".into()));
        }
        Ok(SignedPerm { perm, signs })
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Cycles of the underlying permutation, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.perm[x];
            }
            out.push(c);
        }
        out
    }

    /// Class type `(ρ⁺, ρ⁻)`: cycle lengths split by the product of signs along each cycle.
    pub fn class_type(&self) -> (Partition, Partition) {
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for c in self.cycles() {
            let minus = c.iter().filter(|&&i| self.signs[i]).count() % 2 == 1;
            if minus {
                neg.push(c.len());
            } else {
                pos.push(c.len());
            }
        }
        (Partition::from_unsorted(pos), Partition::from_unsorted(neg))
    }

    /// Parity of the number of minus signs.
    pub fn parity(&self) -> usize {
        self.signs.iter().filter(|&&b| b).count() % 2
    }
}

/// Whether the class of type `(ρ⁺, ρ⁻)` splits in the double cover.
///
/// Even classes split iff `ρ⁻ = ∅` and `ρ⁺` has only odd parts; odd classes split iff
/// `ρ⁺ = ∅` and `ρ⁻` is strict of odd length.
pub fn is_split(pos: &Partition, neg: &Partition) -> bool {
    if neg.len() % 2 == 0 {
        neg.is_empty() && pos.all_odd()
    } else {
        pos.is_empty() && neg.is_strict()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        let (a, b) = p(&[5, 4, 3, 1]).frobenius();
        assert_eq!((a, b), (vec![4, 2, 0], vec![3, 1, 0]));
        assert_eq!(Partition::from_frobenius(&[4, 2, 0], &[3, 1, 0]).unwrap(), p(&[5, 4, 3, 1]));
    }

    #[test]
    fn doubled_diagrams() {
        assert_eq!(double_partition(&p(&[4, 3, 1])).unwrap(), p(&[5, 5, 4, 2]));
        assert_eq!(double_partition(&p(&[1])).unwrap(), p(&[2]));
        assert_eq!(double_partition(&p(&[2])).unwrap(), p(&[3, 1]));
        assert_eq!(double_partition(&p(&[2, 1])).unwrap(), p(&[3, 3]));
        assert!(double_partition(&p(&[2, 2])).is_err());
    }

    #[test]
    fn shifted_hook_examples() {
        assert_eq!(
            shifted_hooks(&p(&[4, 3, 1])).unwrap(),
            vec![vec![7, 5, 4, 2], vec![4, 3, 1], vec![1]]
        );
        assert_eq!(shifted_hooks(&p(&[2, 1])).unwrap(), vec![vec![3, 2], vec![1]]);
        assert_eq!(shifted_hooks(&p(&[2])).unwrap(), vec![vec![2, 1]]);
    }

    #[test]
    fn enumeration_kinds() {
        assert_eq!(enumerate(4, Kind::Odd), vec![p(&[1, 1, 1, 1]), p(&[3, 1])]);
        assert_eq!(enumerate(4, Kind::Strict), vec![p(&[3, 1]), p(&[4])]);
        assert_eq!(enumerate(6, Kind::StrictOddLength), vec![p(&[3, 2, 1]), p(&[6])]);
        assert_eq!(enumerate(6, Kind::StrictEvenLength), vec![p(&[4, 2]), p(&[5, 1])]);
        assert_eq!(enumerate(0, Kind::All), vec![Partition::empty()]);
    }

    #[test]
    fn statistics() {
        let l = p(&[3, 1, 1]);
        assert_eq!(l.n_stat(), 3);
        assert_eq!(l.z(), BigInt::from(6));
        assert_eq!(l.conjugate(), p(&[3, 1, 1]));
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
        assert_eq!(p(&[3, 1]).hooks(), vec![vec![4, 2, 1], vec![1]]);
    }

    #[test]
    fn class_type_example() {
        // signs + + + - + + + - + -, cycles (1234)(567)(89)(10)
        let perm = vec![1, 2, 3, 0, 5, 6, 4, 8, 7, 9];
        let signs: Vec<bool> = "+++-+++-+-".chars().map(|c| c == '-').collect();
        let x = SignedPerm::new(perm, signs).unwrap();
        assert_eq!(x.class_type(), (p(&[3]), p(&[4, 2, 1])));
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, r#"{"perm":[2,3,4,1,6,7,5,9,8,10],"signs":"+++-+++-+-"}"#);
        assert_eq!(serde_json::from_str::<SignedPerm>(&j).unwrap(), x);
    }

    #[test]
    fn partition_json() {
        let l = p(&[3, 1]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
