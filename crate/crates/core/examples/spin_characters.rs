//! Spin characters traced on seminormal modules, their inner products and the
//! characteristic map to `Γ`.

use spinq::arith::{pow2, Rat};
use spinq::partitions::{enumerate_desc, Kind};
use spinq::repn::{ch_minus, spin_character};

fn main() -> spinq::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let classes = enumerate_desc(n, Kind::Odd);
    println!("classes: {}", classes.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "));
    let chars: Vec<_> = enumerate_desc(n, Kind::Strict).iter().map(spin_character).collect::<spinq::Result<_>>()?;
    for z in &chars {
        let row: Vec<String> = classes.iter().map(|a| z.value(a).to_string()).collect();
        println!("ζ^{:<10} {}   ch⁻ = {}", z.label.to_string(), row.join(" "), ch_minus(z)?.sym());
    }
    for z in &chars {
        let norm: Rat = classes
            .iter()
            .map(|a| Rat::from_integer(z.value(a) * z.value(a)) * pow2(-(a.len() as i64)) / Rat::from_integer(a.z()))
            .sum();
        println!("<ζ^{0}, ζ^{0}> = {norm}", z.label);
    }
    Ok(())
}
