//! The operator `D = a_0 d/da_1 + 2 a_1 d/da_2 + ... + n a_{n-1} d/da_n`,
//! its matrix on the monomial basis, and semi-invariant spaces as its kernel.
//!
//! A homogeneous polynomial of degree `k` and weight `m` is a semi-invariant
//! exactly when `D` annihilates it. For `m <= nk/2` the kernel dimension is
//! `p(k, n, m) - p(k, n, m - 1)`; [`kernel_basis`] checks that equality on
//! every call.

mod matrix;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use matrix::SparseIntMatrix;

use crate::boxpartitions::{delta, enumerate_partitions_in_box};
use crate::error::{domain, Error, Result};
use crate::monomials::{Monomial, SIPoly, TermJson};

/// Image of `p` under `D`. Degree is preserved and weight drops by one.
pub fn apply_d(p: &SIPoly) -> SIPoly {
    let n = p.n();
    let mut out = Vec::new();
    for (m, c) in p.terms() {
        for (target, factor) in d_image(m) {
            out.push((target, c * BigRational::from_integer(factor)));
        }
    }
    SIPoly::from_terms(n, out)
}

/// `D(a^nu) = sum_{i : nu_i > 0} i nu_i a^{nu + e_{i-1} - e_i}`.
fn d_image(m: &Monomial) -> impl Iterator<Item = (Monomial, BigInt)> + '_ {
    let e = m.exponents();
    (1..e.len()).filter(move |&i| e[i] > 0).map(move |i| {
        let mut nu = e.to_vec();
        nu[i] -= 1;
        nu[i - 1] += 1;
        (Monomial::new(nu), BigInt::from(i as u64 * e[i] as u64))
    })
}

/// Monomial basis of `Q_n(k, m)` in descending anti-lexicographic order.
pub fn monomial_basis(n: u32, k: u32, m: u64) -> Vec<Monomial> {
    enumerate_partitions_in_box(k, n, m)
        .into_iter()
        .map(|p| p.to_monomial())
        .collect()
}

/// Matrix of `D : Q_n(k, m) -> Q_n(k, m - 1)`. Rows and columns are both
/// indexed by [`monomial_basis`].
pub fn build_d_matrix(n: u32, k: u32, m: u64) -> Result<SparseIntMatrix> {
    if m < 1 || m > n as u64 * k as u64 {
        return Err(domain(format!(
            "D matrix needs 1 <= m <= nk, got (n, k, m) = ({n}, {k}, {m})"
        )));
    }
    let cols = monomial_basis(n, k, m);
    let rows = monomial_basis(n, k, m - 1);
    let row_index: HashMap<&Monomial, usize> =
        rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let columns = cols
        .iter()
        .map(|mono| {
            d_image(mono)
                .map(|(target, v)| (row_index[&target], v))
                .collect()
        })
        .collect();
    Ok(SparseIntMatrix::from_columns(rows.len(), columns))
}

/// A basis of the semi-invariants `S_n(k, m)`.
///
/// Vectors are primitive integer polynomials with positive leading
/// coefficients and strictly decreasing leading terms; each vector vanishes at
/// the leading terms of the others. That is the unique reduced echelon basis of
/// the space, so it does not depend on how it was computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    pub n: u32,
    pub k: u32,
    pub m: u64,
    pub vectors: Vec<SIPoly>,
}

impl KernelBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Leading terms, in order.
    pub fn leading_terms(&self) -> Vec<&Monomial> {
        self.vectors
            .iter()
            .map(|v| v.leading_term().expect("kernel vectors are nonzero"))
            .collect()
    }

    /// Re-checks every vector: homogeneous of the right degree and weight,
    /// annihilated by `D`, and with strictly decreasing leading terms.
    pub fn validate(&self) -> bool {
        let shape_ok = self.vectors.iter().all(|v| {
            v.n() == self.n
                && v.homogeneity() == Some((self.k as u64, self.m))
                && apply_d(v).is_zero()
        });
        shape_ok && self.leading_terms().windows(2).all(|w| w[0] > w[1])
    }

    pub fn cache_file_name(n: u32, k: u32, m: u64) -> String {
        format!("kernel_n{n}_k{k}_m{m}.json")
    }
}

#[derive(Serialize, Deserialize)]
struct KernelBasisJson {
    n: u32,
    k: u32,
    m: u64,
    dim: usize,
    vectors: Vec<Vec<TermJson>>,
}

impl Serialize for KernelBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KernelBasisJson {
            n: self.n,
            k: self.k,
            m: self.m,
            dim: self.dim(),
            vectors: self.vectors.iter().map(SIPoly::to_term_list).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KernelBasis {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = KernelBasisJson::deserialize(d)?;
        if raw.dim != raw.vectors.len() {
            return Err(serde::de::Error::custom("dim does not match vector count"));
        }
        let vectors = raw
            .vectors
            .iter()
            .map(|t| SIPoly::from_term_list(raw.n, t))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(KernelBasis {
            n: raw.n,
            k: raw.k,
            m: raw.m,
            vectors,
        })
    }
}

fn check_range(n: u32, k: u32, m: u64) -> Result<()> {
    if m > n as u64 * k as u64 {
        return Err(domain(format!(
            "weight {m} exceeds nk = {} for (n, k) = ({n}, {k})",
            n as u64 * k as u64
        )));
    }
    Ok(())
}

fn in_lower_half(n: u32, k: u32, m: u64) -> bool {
    2 * m <= n as u64 * k as u64
}

fn dimension_guard(n: u32, k: u32, m: u64, dim: usize) -> Result<()> {
    if in_lower_half(n, k, m) {
        let d = delta(k, n, m as i64);
        if d != BigInt::from(dim) {
            return Err(Error::DimensionMismatch {
                n,
                k,
                m,
                kernel: dim,
                delta: d.to_string(),
            });
        }
    }
    Ok(())
}

/// Exact basis of `S_n(k, m)` by fraction-free elimination of the `D`
/// matrix.
pub fn kernel_basis(n: u32, k: u32, m: u64) -> Result<KernelBasis> {
    check_range(n, k, m)?;
    let vectors = if m == 0 {
        // a_0^k spans Q_n(k, 0) and D kills it
        vec![SIPoly::from_monomial(Monomial::new({
            let mut e = vec![0; n as usize + 1];
            e[0] = k;
            e
        }))]
    } else {
        let basis = monomial_basis(n, k, m);
        let a = build_d_matrix(n, k, m)?;
        a.nullspace()
            .into_iter()
            .map(|x| {
                SIPoly::from_terms(
                    n,
                    basis
                        .iter()
                        .zip(x)
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(mono, v)| (mono.clone(), BigRational::from_integer(v))),
                )
            })
            .collect()
    };
    dimension_guard(n, k, m, vectors.len())?;
    Ok(KernelBasis { n, k, m, vectors })
}

/// `dim S_n(k, m)` as the nullity of the `D` matrix, without building a basis.
pub fn semiinvariant_dim(n: u32, k: u32, m: u64) -> Result<usize> {
    check_range(n, k, m)?;
    if m == 0 {
        return Ok(1);
    }
    let a = build_d_matrix(n, k, m)?;
    Ok(a.cols() - a.rank())
}

/// Coefficients after the shear `x = x' + h y'`:
/// `a'_i = sum_{j=0}^{i} C(i, j) a_{i-j} h^j`.
pub fn sheared_coefficients(h: &BigRational, a: &[BigRational]) -> Vec<BigRational> {
    (0..a.len())
        .map(|i| {
            let mut total = BigRational::zero();
            let mut binom = BigInt::one();
            let mut hp = BigRational::one();
            for j in 0..=i {
                total += &a[i - j] * &hp * BigRational::from_integer(binom.clone());
                binom = binom * (i - j) / (j + 1);
                hp *= h;
            }
            total
        })
        .collect()
}

/// Whether `p(a) = p(a')` for the shear with parameter `h`. An independent
/// witness that a polynomial is a semi-invariant, needing no linear algebra.
pub fn shear_check(p: &SIPoly, h: &BigRational, a: &[BigRational]) -> bool {
    let sheared = sheared_coefficients(h, a);
    p.evaluate(a) == p.evaluate(&sheared)
}

/// Source of semi-invariant bases, so that callers can put a cache in front
/// of the elimination.
pub trait KernelProvider {
    fn kernel(&self, n: u32, k: u32, m: u64) -> Result<KernelBasis>;
}

/// Computes every basis from scratch.
#[derive(Clone, Copy, Debug, Default)]
pub struct Direct;

impl KernelProvider for Direct {
    fn kernel(&self, n: u32, k: u32, m: u64) -> Result<KernelBasis> {
        kernel_basis(n, k, m)
    }
}
