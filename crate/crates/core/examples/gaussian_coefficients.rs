//! Gaussian coefficients and the shape checks on their coefficient lists.
//!
//! cargo run --example gaussian_coefficients -- 8 4

use semiinv::boxpartitions::count_partitions_in_box;
use semiinv::qpoly::gauss;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (8, 4),
    };
    let p = gauss(a, b)?;
    println!("[{a}, {b}] = {p}");
    println!(
        "degree {:?}, symmetric {}, unimodal {}",
        p.degree(),
        p.is_symmetric(),
        p.is_unimodal()?
    );

    // coefficient m counts partitions of m in a b x (a-b) box
    let agree = (0..=p.degree().unwrap_or(0))
        .all(|m| p.coeff(m) == count_partitions_in_box(b, a - b, m as i64));
    println!("coefficients equal box partition counts: {agree}");
    println!("json: {}", serde_json::to_string(&p)?);
    Ok(())
}
