//! Builds seminormal modules over the finite and affine Hecke–Clifford algebras and
//! checks relations, intertwiners and the commutant.

use spinq::partitions::parse_partition;
use spinq::repn::{commutant_dimension, irreducible_multiplicity, seminormal_module, verify_intertwiners, verify_relations, Algebra};

fn main() -> spinq::Result<()> {
    let mut args = std::env::args().skip(1);
    let outer = parse_partition(&args.next().unwrap_or_else(|| "4,2".into()))?;
    let inner = parse_partition(&args.next().unwrap_or_else(|| "1".into()))?;
    let alg = if inner.is_empty() { Algebra::Finite } else { Algebra::Affine };
    let r = seminormal_module(&outer, &inner, alg)?;
    println!("{}: rank {}, dimension {}", r.label, r.n, r.dim);
    print!("{}", verify_relations(&r, Algebra::Affine));
    if r.n >= 2 {
        print!("{}", verify_intertwiners(&r));
    }
    let (dim_u, mult) = irreducible_multiplicity(&outer, &inner)?;
    println!("commutant dimension {:?}; irreducible of dimension {dim_u} with multiplicity {mult}", commutant_dimension(&r));
    println!("x_1 = {:?}", r.x(1).diagonal().iter().take(8).map(|v| v.to_string()).collect::<Vec<_>>());
    Ok(())
}
