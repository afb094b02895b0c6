//! Spin Kostka polynomials `K⁻_ξμ(t)`, their normalized forms `C⁻`, and the
//! one-row and one-column closed forms.

use spinq::kostka::{c_minus_from_spin_k, spin_kostka, spin_kostka_column, spin_kostka_one_row};
use spinq::partitions::{enumerate_desc, Kind, Partition};

fn main() -> spinq::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for xi in enumerate_desc(n, Kind::Strict) {
        for mu in enumerate_desc(n, Kind::All) {
            let k = spin_kostka(&xi, &mu)?;
            if !k.is_zero() {
                println!("K⁻_{xi},{mu} = {k}    C⁻ = {}", c_minus_from_spin_k(&xi, &mu)?);
            }
        }
    }
    let col = Partition::new(vec![1; n])?;
    println!("K⁻_({n}),(1^{n}) from the one-row form: {}", spin_kostka_one_row(&col));
    for xi in enumerate_desc(n, Kind::Strict) {
        println!("K⁻_{xi},(1^{n}) from the column form: {}", spin_kostka_column(&xi)?);
    }
    Ok(())
}
