//! Kostka–Foulkes polynomials from the charge statistic, checked against the
//! Hall–Littlewood expansion of `s_λ` and against q-weight multiplicities.

use spinq::kostka::{kostka_matrix, kostka_poly, kostka_via_hall_littlewood, q_weight_multiplicity};
use spinq::partitions::{enumerate_desc, Kind};

fn main() -> spinq::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let km = kostka_matrix(n);
    let parts = enumerate_desc(n, Kind::All);
    for l in &parts {
        let row: Vec<String> = parts.iter().map(|m| km.get(l, m).to_string()).collect();
        println!("{l:<12} {}", row.join(" | "));
    }
    let mut agree = true;
    for l in &parts {
        let hl = kostka_via_hall_littlewood(l)?;
        for m in &parts {
            let k = kostka_poly(l, m.parts());
            agree &= hl.get(m).cloned().unwrap_or_default() == k;
            if n <= 4 {
                agree &= q_weight_multiplicity(l, m, n)? == k;
            }
        }
    }
    println!("charge agrees with the independent routes: {agree}");
    Ok(())
}
