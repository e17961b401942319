//! The on-disk kernel cache: first call computes and stores, later calls load
//! and re-validate.

use std::time::Instant;

use semiinv::cache::KernelCache;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let cache = KernelCache::new(dir.path());
    for _ in 0..2 {
        let start = Instant::now();
        let (kb, how) = cache.get(8, 8, 32)?;
        println!(
            "(8, 8, 32): dim {} via {how:?} in {:?}",
            kb.dim(),
            start.elapsed()
        );
    }
    let path = cache.path(8, 8, 32);
    println!(
        "{} ({} bytes)",
        path.display(),
        std::fs::metadata(&path)?.len()
    );
    Ok(())
}
