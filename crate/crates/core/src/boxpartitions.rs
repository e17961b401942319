//! Partitions contained in a `k x n` rectangle: counts `p(k, n, m)`,
//! enumeration, and the difference `delta(k, n, m) = p(k, n, m) - p(k, n, m-1)`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::monomials::Monomial;

/// A partition with at most `box_k` parts, each at most `box_n`, stored by
/// multiplicities: `nu[i]` is the number of parts equal to `i`, zero parts
/// included, so that `nu` sums to `box_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxPartition {
    pub nu: Vec<u32>,
    pub box_k: u32,
    pub box_n: u32,
}

impl BoxPartition {
    pub fn new(nu: Vec<u32>, box_k: u32) -> Result<Self> {
        if nu.is_empty() {
            return Err(domain("multiplicity vector must have at least one entry"));
        }
        let total: u64 = nu.iter().map(|&v| v as u64).sum();
        if total != box_k as u64 {
            return Err(domain(format!(
                "multiplicities sum to {total}, expected {box_k}"
            )));
        }
        let box_n = (nu.len() - 1) as u32;
        Ok(Self { nu, box_k, box_n })
    }

    /// Size of the partition, `sum i * nu[i]`.
    pub fn weight(&self) -> u64 {
        self.nu
            .iter()
            .enumerate()
            .map(|(i, &v)| i as u64 * v as u64)
            .sum()
    }

    /// Parts in weakly decreasing order, zero parts included.
    pub fn parts(&self) -> Vec<u32> {
        let mut parts = Vec::with_capacity(self.box_k as usize);
        for (i, &v) in self.nu.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i as u32, v as usize));
        }
        parts
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::new(self.nu.clone())
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        Self {
            nu: m.exponents().to_vec(),
            box_k: m.degree() as u32,
            box_n: m.n(),
        }
    }
}

/// All counts `p(k, n, 0..=nk)` for one rectangle.
///
/// Built by a knapsack over part sizes `1..=n` that tracks the number of
/// nonzero parts, independent of the q-Pascal recurrence used for Gaussian
/// coefficients.
#[derive(Clone, Debug)]
pub struct BoxCounts {
    k: u32,
    n: u32,
    counts: Vec<BigInt>,
}

impl BoxCounts {
    pub fn new(k: u32, n: u32) -> Self {
        let (ku, nu) = (k as usize, n as usize);
        let top = ku * nu;
        // by_parts[j][w]: partitions of w into exactly j parts from 1..=s
        let mut by_parts = vec![vec![BigInt::zero(); top + 1]; ku + 1];
        by_parts[0][0] = BigInt::one();
        for s in 1..=nu {
            for j in 1..=ku {
                let (lo, hi) = by_parts.split_at_mut(j);
                let prev = &lo[j - 1];
                let cur = &mut hi[0];
                for w in s..=top {
                    if !prev[w - s].is_zero() {
                        let add = prev[w - s].clone();
                        cur[w] += add;
                    }
                }
            }
        }
        let mut counts = vec![BigInt::zero(); top + 1];
        for row in &by_parts {
            for (c, x) in counts.iter_mut().zip(row) {
                *c += x;
            }
        }
        Self { k, n, counts }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, m: i64) -> BigInt {
        usize::try_from(m)
            .ok()
            .and_then(|m| self.counts.get(m))
            .cloned()
            .unwrap_or_default()
    }

    pub fn delta(&self, m: i64) -> BigInt {
        self.get(m) - self.get(m - 1)
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.counts
    }
}

thread_local! {
    static TABLES: RefCell<HashMap<(u32, u32), Rc<BoxCounts>>> = RefCell::new(HashMap::new());
}

/// Memoized (per thread) counts for the `k x n` rectangle.
pub fn box_counts(k: u32, n: u32) -> Rc<BoxCounts> {
    TABLES.with(|t| {
        t.borrow_mut()
            .entry((k, n))
            .or_insert_with(|| Rc::new(BoxCounts::new(k, n)))
            .clone()
    })
}

/// `p(k, n, m)`: partitions of `m` into at most `k` parts, each at most `n`.
/// Zero for `m < 0` and `m > nk`.
pub fn count_partitions_in_box(k: u32, n: u32, m: i64) -> BigInt {
    box_counts(k, n).get(m)
}

/// `p(k, n, m) - p(k, n, m - 1)`.
pub fn delta(k: u32, n: u32, m: i64) -> BigInt {
    box_counts(k, n).delta(m)
}

/// Every partition of `m` in the `k x n` box, in descending anti-lexicographic
/// order of the corresponding monomials.
pub fn enumerate_partitions_in_box(k: u32, n: u32, m: u64) -> Vec<BoxPartition> {
    if m > k as u64 * n as u64 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut nu = vec![0u32; n as usize + 1];
    fill(n as usize, k as u64, m, &mut nu, &mut out, k, n);
    out
}

// Assigns nu[i], nu[i-1], ..., nu[1] with nu[i] ascending at each level,
// which walks the reversed exponent tuple in lexicographic order.
fn fill(
    i: usize,
    parts_left: u64,
    weight_left: u64,
    nu: &mut Vec<u32>,
    out: &mut Vec<BoxPartition>,
    k: u32,
    n: u32,
) {
    if i == 0 {
        if weight_left == 0 {
            nu[0] = parts_left as u32;
            out.push(BoxPartition {
                nu: nu.clone(),
                box_k: k,
                box_n: n,
            });
            nu[0] = 0;
        }
        return;
    }
    let i64_ = i as u64;
    let max_here = parts_left.min(weight_left / i64_);
    for v in 0..=max_here {
        let rest_parts = parts_left - v;
        let rest_weight = weight_left - v * i64_;
        if rest_weight > rest_parts * (i64_ - 1) {
            continue;
        }
        nu[i] = v as u32;
        fill(i - 1, rest_parts, rest_weight, nu, out, k, n);
    }
    nu[i] = 0;
}
