//! Conjugacy classes of the double cover of the hyperoctahedral group, found by brute
//! force, against the split-class criterion; also `|SP_n| = |OP_n|`.

use spinq::partitions::{enumerate, Kind};
use spinq::verify::split_class_census;

fn main() -> spinq::Result<()> {
    for n in 1..=5 {
        let (classes, even, odd, witness) = split_class_census(n)?;
        println!("n = {n}: {classes} classes, {even} even split, {odd} odd split, mismatch {witness:?}");
    }
    for n in [10, 20, 30] {
        println!("n = {n}: {} strict, {} odd", enumerate(n, Kind::Strict).len(), enumerate(n, Kind::Odd).len());
    }
    Ok(())
}
