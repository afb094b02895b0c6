//! The bijection between valid weights and standard skew shifted tableaux.

use spinq::tableaux::{is_valid_weight, tableau_to_weight, weight_to_tableau};

fn main() -> spinq::Result<()> {
    let w: Vec<usize> = match std::env::args().nth(1) {
        Some(s) => s.split(',').map(|x| x.trim().parse().map_err(|_| spinq::Error::Parse(s.clone()))).collect::<spinq::Result<_>>()?,
        None => vec![1, 2, 0, 1, 0],
    };
    println!("weight {w:?} valid: {}", is_valid_weight(&w));
    let t = weight_to_tableau(&w)?;
    println!("tableau of shape {}/{}: rows {:?}", t.outer, t.inner, t.rows);
    println!("content vector {:?}, back to weight {:?}", t.content_vector(), tableau_to_weight(&t));
    let valid = (0..4usize.pow(4)).filter(|c| is_valid_weight(&[c % 4, c / 4 % 4, c / 16 % 4, c / 64])).count();
    println!("{valid} valid weights of length 4 over 0..=3");
    Ok(())
}
