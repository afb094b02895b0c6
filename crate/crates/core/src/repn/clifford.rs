use std::fmt;

/// Signed Clifford monomial `±c^β`; bit `i` of `support` stands for `c_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CliffMono {
    pub negative: bool,
    pub support: u64,
}

impl CliffMono {
    pub fn one() -> Self {
        CliffMono { negative: false, support: 0 }
    }

    /// The generator `c_i`, 1-based.
    pub fn gen(i: usize) -> Self {
        CliffMono { negative: false, support: 1 << (i - 1) }
    }

    pub fn from_indices(idx: &[usize]) -> Self {
        idx.iter().fold(Self::one(), |acc, &i| cliff_mul(acc, Self::gen(i)))
    }

    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn degree(&self) -> u32 {
        self.support.count_ones()
    }
}

/// Sign of `c^a c^b = ± c^{a xor b}` for sorted monomials.
pub fn reorder_negative(a: u64, b: u64) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        // elements of a above j must be passed
        swaps += (a >> (j + 1)).count_ones();
    }
    swaps % 2 == 1
}

pub fn cliff_mul(a: CliffMono, b: CliffMono) -> CliffMono {
    CliffMono { negative: a.negative ^ b.negative ^ reorder_negative(a.support, b.support), support: a.support ^ b.support }
}

impl fmt::Display for CliffMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        if self.support == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..64 {
            if self.support >> i & 1 == 1 {
                if !first {
                    write!(f, "·")?;
                }
                write!(f, "c{}", i + 1)?;
                first = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let c = CliffMono::gen;
        assert_eq!(cliff_mul(c(1), c(1)), CliffMono::one());
        let m = cliff_mul(c(2), c(1));
        assert!(m.negative && m.support == 0b11);
        let a = CliffMono::from_indices(&[1, 2]);
        let b = CliffMono::from_indices(&[2, 3]);
        assert_eq!(cliff_mul(a, b), CliffMono::from_indices(&[1, 3]));
        assert_eq!(cliff_mul(a, a).sign(), -1);
    }
}
