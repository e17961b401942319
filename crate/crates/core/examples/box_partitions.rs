//! Partitions inside a rectangle: counts, differences, and the ordered listing
//! that indexes the monomial basis.

use semiinv::boxpartitions::{count_partitions_in_box, delta, enumerate_partitions_in_box};

fn main() {
    let (k, n) = (4, 4);
    let counts: Vec<_> = (0..=(k * n) as i64)
        .map(|m| count_partitions_in_box(k, n, m))
        .collect();
    println!("p({k}, {n}, m) for m = 0..{}: {counts:?}", k * n);

    let deltas: Vec<_> = (0..=(k * n / 2) as i64).map(|m| delta(k, n, m)).collect();
    println!("delta({k}, {n}, m) up to the middle: {deltas:?}");

    println!("partitions of 6 with at most {k} parts of size at most {n}:");
    for p in enumerate_partitions_in_box(k, n, 6) {
        println!("  {:?}  ->  {}", p.parts(), p.to_monomial());
    }
}
