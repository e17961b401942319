//! Kernel of the operator D: exact bases, dimension against partition counts,
//! and the shear check on each basis vector.
//!
//! cargo run --example semi_invariants -- 4 4 6

use num_rational::BigRational;
use semiinv::boxpartitions::delta;
use semiinv::cayley::{apply_d, kernel_basis, shear_check};
use semiinv::monomials::SIPoly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (n, k, m) = match args[..] {
        [n, k, m] => (n as u32, k as u32, m),
        _ => (4, 4, 6),
    };

    let kb = kernel_basis(n, k, m)?;
    println!(
        "S_{n}({k}, {m}): dimension {}, delta {}",
        kb.dim(),
        delta(k, n, m as i64)
    );
    for v in &kb.vectors {
        println!("  {v}");
        println!("    leading term {}", v.leading_term()?);
    }

    let h = BigRational::new(3.into(), 7.into());
    let a: Vec<BigRational> = (0..=n as i64)
        .map(|i| BigRational::new((i * i - 2).into(), (i + 1).into()))
        .collect();
    let all = kb.vectors.iter().all(|v| shear_check(v, &h, &a));
    println!("invariant under x -> x + (3/7) y at a sample point: {all}");

    let disc = SIPoly::parse(2, "a_0a_2 - a_1^2")?;
    println!("D({disc}) = {}", apply_d(&disc));
    Ok(())
}
