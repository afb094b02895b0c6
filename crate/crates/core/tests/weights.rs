use spinq::partitions::Partition;
use spinq::repn::{seminormal_module, Algebra};
use spinq::tableaux::is_valid_weight;
use std::collections::HashSet;

/// Joint spectra of `x_k²` on the affine modules `Û^{ξ/ν}` with `ξ ⊂ {1,..,4}`, read back as
/// weights through `q(i) = i(i+1)`, against `is_valid_weight` on `{0,1,2,3}^n`.
#[test]
fn valid_weights_are_x_squared_spectra() {
    let subsets: Vec<Partition> =
        (0u32..16).map(|m| Partition::from_unsorted((1..=4).filter(|p| m >> (p - 1) & 1 == 1).collect())).collect();
    for n in 1..=5 {
        let mut spectra = HashSet::new();
        for xi in &subsets {
            for nu in &subsets {
                if xi.size() != nu.size() + n || nu.len() > xi.len() || (0..nu.len()).any(|i| nu.part(i) > xi.part(i)) {
                    continue;
                }
                let r = seminormal_module(xi, nu, Algebra::Affine).unwrap();
                let diag: Vec<Vec<_>> = (1..=n).map(|k| r.x(k).mul(r.x(k)).diagonal()).collect();
                for b in 0..r.dim {
                    let w: Vec<usize> = diag
                        .iter()
                        .map(|d| {
                            let q = d[b].to_rat().expect("x² is rational");
                            (0..4usize).find(|&i| spinq::arith::rint((i * (i + 1)) as i64) == q).expect("q value")
                        })
                        .collect();
                    spectra.insert(w);
                }
            }
        }
        for code in 0..4usize.pow(n as u32) {
            let w: Vec<usize> = (0..n).map(|k| code / 4usize.pow(k as u32) % 4).collect();
            assert_eq!(is_valid_weight(&w), spectra.contains(&w), "{w:?}");
        }
    }
}
