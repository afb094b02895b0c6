//! Builds `Q_ξ` by the q-recursion, the Pfaffian of two-row generating functions and
//! marked shifted tableaux, and prints the monomial expansions.

use spinq::partitions::{enumerate, parse_partition, Kind};
use spinq::schurq::{schur_q, schur_q_pfaffian_poly};
use spinq::symfunc::Basis;
use spinq::tableaux::marked_shifted_count;
use std::time::Instant;

fn main() -> spinq::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for xi in enumerate(n, Kind::Strict) {
        let t0 = Instant::now();
        let rec = schur_q(&xi)?.into_sym().convert(Basis::M);
        let pf = schur_q_pfaffian_poly(&xi, n)?;
        let mut agree = true;
        for mu in enumerate(n, Kind::All) {
            let mut e: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
            e.resize(n, 0);
            let c = rec.coeff(&mu);
            let tab = marked_shifted_count(&xi, mu.parts())?;
            agree &= pf.coeff(&e) == c && c == spinq::arith::rint(tab as i64);
        }
        println!("Q_{xi} = {rec}   routes agree: {agree}   ({:.2?})", t0.elapsed());
    }
    let xi = parse_partition("2,1")?;
    println!("Q_(2,1) in power sums: {}", schur_q(&xi)?.sym());
    Ok(())
}
