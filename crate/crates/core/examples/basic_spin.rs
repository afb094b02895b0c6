//! The basic spin module on the Clifford algebra and its character.

use spinq::partitions::{enumerate_desc, Kind};
use spinq::repn::{basic_spin_module, character, verify_relations, Algebra};

fn main() -> spinq::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let r = basic_spin_module(n)?;
    println!("basic spin module of rank {n}: dimension {}", r.dim);
    print!("{}", verify_relations(&r, Algebra::Finite));
    for a in enumerate_desc(n, Kind::All) {
        println!("trace at {a}: {}", character(&r, &a)?);
    }
    Ok(())
}
