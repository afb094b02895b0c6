//! Principal specializations and graded multiplicities: `s_λ(t^•)`, `Q_ξ(t^•)`, fake
//! degrees `f^λ(t)`, spin fake degrees `d^ξ(t)` and their bigraded versions.

use spinq::partitions::parse_partition;
use spinq::specialize::{fake_degree, kp_bigraded, principal_q, principal_schur, spin_graded};

fn main() -> spinq::Result<()> {
    let shape = std::env::args().nth(1).unwrap_or_else(|| "3,1".into());
    let l = parse_partition(&shape)?;
    println!("s_{l}(1, t, t^2, ...) = {}", principal_schur(&l));
    let (f, fu) = fake_degree(&l)?;
    println!("f_{l} = {f}\nf^{l} = {fu}");
    println!("bigraded: {}", kp_bigraded(&l));
    if l.is_strict() {
        println!("Q_{l}(1, t, t^2, ...) = {}", principal_q(&l)?);
        for g in spin_graded(&l, 6)?.labelled() {
            println!("{}", g);
        }
    }
    Ok(())
}
