//! The dimension count behind Sergeev duality, and `q_μ` recovered from spin characters.

use spinq::partitions::{enumerate, Kind};
use spinq::repn::{permutation_module_check, sergeev_dimension_check};

fn main() -> spinq::Result<()> {
    for n in 1..=4 {
        let row: Vec<String> = (1..=4).map(|d| sergeev_dimension_check(n, d).map(|ok| format!("d={d}:{ok}"))).collect::<spinq::Result<_>>()?;
        println!("n = {n}: {}", row.join(" "));
    }
    for mu in enumerate(4, Kind::All) {
        println!("q_{mu} from characters: {}", permutation_module_check(&mu)?);
    }
    Ok(())
}
