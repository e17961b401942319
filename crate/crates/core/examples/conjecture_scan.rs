//! Grid scans: asserted verifiers for proved statements and finding-only
//! scans for open ones, written as JSON lines and CSV.
//!
//! cargo run --example conjecture_scan -- /tmp/scan

use std::path::PathBuf;

use semiinv::differences::{
    scan_bergeron, scan_conjecture_f_strict, verify_theorem_g, write_csv, write_jsonl, Family,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&out)?;

    let g = verify_theorem_g(10, 12, 10)?;
    println!("G: {} cells verified", g.len());

    let f = scan_conjecture_f_strict(14, 9, true)?;
    let failing: Vec<_> = f
        .iter()
        .filter(|r| {
            !r.checks
                .get("strict_unimodal_except_ends")
                .copied()
                .unwrap_or(true)
        })
        .collect();
    println!(
        "F below the conjectured range: {} of {} cells not strict",
        failing.len(),
        f.len()
    );
    write_jsonl(&out.join("f_strict.jsonl"), &f)?;
    write_csv(&out.join("f_strict.csv"), Family::F, &f)?;

    let b = scan_bergeron(8)?;
    let negative = b.iter().filter(|r| !r.checks["nonnegative"]).count();
    println!(
        "bergeron: {} tuples, {negative} with a negative coefficient",
        b.len()
    );
    write_jsonl(&out.join("bergeron.jsonl"), &b)?;
    println!("reports in {}", out.display());
    Ok(())
}
