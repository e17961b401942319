//! Products of semi-invariants with distinct leading terms: triangulation,
//! the two-vector building block, and the strict-increase witnesses.

use semiinv::cache::KernelCache;
use semiinv::cayley::kernel_basis;
use semiinv::semiinv::{
    independence_check, lemma_combine, nr8_witnesses_with, strict_witnesses_with, triangulate,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cache = KernelCache::resolve(None);

    let (j1, j2) = nr8_witnesses_with(&cache, 8, 8)?;
    println!("degree 8, weight 32, n = 8:");
    println!(
        "  J_1 leads with {} ({} terms)",
        j1.leading_term()?,
        j1.len()
    );
    println!(
        "  J_2 leads with {} ({} terms)",
        j2.leading_term()?,
        j2.len()
    );

    let ws = strict_witnesses_with(&cache, 8, 10, 8, 40)?;
    println!("witnesses at (n, k, r, m) = (8, 10, 8, 40):");
    for w in &ws {
        println!("  leading term {}", w.leading_term()?);
    }
    println!("  independent: {}", independence_check(&ws));

    let b1 = triangulate(&kernel_basis(4, 4, 6)?.vectors)?;
    let b2 = triangulate(&kernel_basis(4, 4, 6)?.vectors)?;
    let products = lemma_combine(&b1, &b2)?;
    println!(
        "{} independent products of degree 8 and weight 12",
        products.len()
    );
    Ok(())
}
