//! Bases of semi-invariants with distinct leading terms, and products of
//! semi-invariants that stay independent.
//!
//! Products of semi-invariants are semi-invariants, and the leading term of a
//! product is the product of the leading terms. So if `I_1, ..., I_t` have
//! strictly decreasing leading terms and `alpha(J_1) > alpha(J_2)`, the
//! products `J_1 I_1, ..., J_1 I_t, J_2 I_t` have pairwise distinct leading
//! terms and are independent. [`strict_witnesses`] builds exactly that list.

use num_traits::ToPrimitive;

use crate::boxpartitions::delta;
use crate::cayley::{Direct, KernelProvider};
use crate::error::{domain, Error, Result};
use crate::monomials::SIPoly;

/// Reduced echelon form of the span of `vs`: leading terms strictly
/// decreasing, every vector zero at the other vectors' leading terms, primitive
/// integer coefficients with positive leading coefficient.
///
/// Fails with [`Error::Dependent`] naming the first input that reduces to
/// zero against its predecessors.
pub fn triangulate(vs: &[SIPoly]) -> Result<Vec<SIPoly>> {
    let Some(first) = vs.first() else {
        return Ok(Vec::new());
    };
    let n = first.n();
    let shape = first.homogeneity();
    for v in vs {
        if v.n() != n {
            return Err(domain("vectors over different n"));
        }
        if !v.is_zero() && v.homogeneity() != shape {
            return Err(domain(
                "vectors are not homogeneous of a common degree and weight",
            ));
        }
    }
    let mut basis: Vec<SIPoly> = Vec::with_capacity(vs.len());
    for (index, v) in vs.iter().enumerate() {
        let mut v = v.clone();
        for b in &basis {
            v = reduce_at_leading(&v, b);
        }
        if v.is_zero() {
            return Err(Error::Dependent { index });
        }
        for b in &mut basis {
            *b = reduce_at_leading(b, &v);
        }
        basis.push(v);
    }
    let mut out: Vec<SIPoly> = basis.iter().map(SIPoly::primitive).collect();
    out.sort_by(|a, b| b.leading_term().unwrap().cmp(a.leading_term().unwrap()));
    Ok(out)
}

/// Removes from `v` its component at the leading term of `b`.
fn reduce_at_leading(v: &SIPoly, b: &SIPoly) -> SIPoly {
    let lt = b.leading_term().expect("basis vectors are nonzero");
    match v.coeff(lt) {
        Some(c) => {
            let factor = c / b.leading_coeff().unwrap();
            v - &b.scale(&factor)
        }
        None => v.clone(),
    }
}

/// Exact rank of a list of polynomials.
pub fn rank(vs: &[SIPoly]) -> usize {
    let mut basis: Vec<SIPoly> = Vec::new();
    for v in vs {
        let mut v = v.clone();
        for b in &basis {
            v = reduce_at_leading(&v, b);
        }
        if !v.is_zero() {
            for b in &mut basis {
                *b = reduce_at_leading(b, &v);
            }
            basis.push(v);
        }
    }
    basis.len()
}

pub fn independence_check(vs: &[SIPoly]) -> bool {
    rank(vs) == vs.len()
}

fn check_nr(n: u32, r: u32) -> Result<()> {
    if n < 8 || r < 8 {
        return Err(domain(format!("need n, r >= 8, got n = {n}, r = {r}")));
    }
    if !(n as u64 * r as u64).is_multiple_of(2) {
        return Err(domain(format!("need nr even, got n = {n}, r = {r}")));
    }
    Ok(())
}

fn order_pair(a: SIPoly, b: SIPoly) -> (SIPoly, SIPoly) {
    if a.leading_term().unwrap() > b.leading_term().unwrap() {
        (a, b)
    } else {
        (b, a)
    }
}

/// Two independent semi-invariants of degree `r` and weight `nr/2`, ordered
/// so the first has the greater leading term. Uses [`Direct`] elimination.
pub fn nr8_witnesses(n: u32, r: u32) -> Result<(SIPoly, SIPoly)> {
    nr8_witnesses_with(&Direct, n, r)
}

/// As [`nr8_witnesses`], with bases taken from `provider`.
///
/// For `r < 16` the two vectors with the greatest leading terms of the
/// kernel at `(n, r, nr/2)` are returned. Otherwise `r = 8s + t` with
/// `8 <= t < 16`, and the result is `(I^s J_1, I^s J_2)` where `I` spans part
/// of the degree-8 weight-`4n` semi-invariants and `(J_1, J_2)` is the answer
/// for `(n, t)`.
pub fn nr8_witnesses_with(
    provider: &impl KernelProvider,
    n: u32,
    r: u32,
) -> Result<(SIPoly, SIPoly)> {
    check_nr(n, r)?;
    if r < 16 {
        let kb = provider.kernel(n, r, n as u64 * r as u64 / 2)?;
        let mut it = kb.vectors.into_iter();
        return match (it.next(), it.next()) {
            (Some(a), Some(b)) => Ok(order_pair(a, b)),
            _ => Err(Error::Verification {
                family: "nr8".into(),
                params: vec![n as u64, r as u64],
                check: "two independent semi-invariants".into(),
                witness: None,
            }),
        };
    }
    let t = 8 + r % 8;
    let s = (r - t) / 8;
    let base = provider.kernel(n, 8, 4 * n as u64)?;
    let i = base
        .vectors
        .into_iter()
        .next()
        .ok_or_else(|| Error::Verification {
            family: "nr8".into(),
            params: vec![n as u64, 8],
            check: "a degree-8 semi-invariant".into(),
            witness: None,
        })?;
    let (j1, j2) = nr8_witnesses_with(provider, n, t)?;
    let is = i.pow(s);
    Ok(order_pair(&is * &j1, &is * &j2))
}

/// `t + 1` independent semi-invariants of degree `k` and weight `m`, where
/// `t = delta(k - r, n, m - nr/2)`; one computed kernel vector when `t = 0`.
pub fn strict_witnesses(n: u32, k: u32, r: u32, m: u64) -> Result<Vec<SIPoly>> {
    strict_witnesses_with(&Direct, n, k, r, m)
}

pub fn strict_witnesses_with(
    provider: &impl KernelProvider,
    n: u32,
    k: u32,
    r: u32,
    m: u64,
) -> Result<Vec<SIPoly>> {
    check_nr(n, r)?;
    let half = n as u64 * r as u64 / 2;
    if k < r {
        return Err(domain(format!("need k >= r, got k = {k}, r = {r}")));
    }
    if m < half || 2 * m > n as u64 * k as u64 {
        return Err(domain(format!(
            "need nr/2 <= m <= nk/2, got m = {m} for (n, k, r) = ({n}, {k}, {r})"
        )));
    }
    let (k_rest, m_rest) = (k - r, m - half);
    let t = delta(k_rest, n, m_rest as i64);
    let t = t
        .to_usize()
        .ok_or_else(|| domain(format!("delta out of range: {t}")))?;
    if t == 0 {
        let kb = provider.kernel(n, k, m)?;
        return match kb.vectors.into_iter().next() {
            Some(v) => Ok(vec![v]),
            None => Err(Error::Verification {
                family: "strict".into(),
                params: vec![n as u64, k as u64, r as u64, m],
                check: "nonzero semi-invariant".into(),
                witness: None,
            }),
        };
    }
    let lower = triangulate(&provider.kernel(n, k_rest, m_rest)?.vectors)?;
    if lower.len() != t {
        return Err(Error::DimensionMismatch {
            n,
            k: k_rest,
            m: m_rest,
            kernel: lower.len(),
            delta: t.to_string(),
        });
    }
    let (j1, j2) = nr8_witnesses_with(provider, n, r)?;
    let mut out: Vec<SIPoly> = lower.iter().map(|i| &j1 * i).collect();
    out.push(&j2 * lower.last().unwrap());
    Ok(out)
}

/// `t1 + t2 - 1` independent products from two bases with strictly
/// decreasing leading terms: `b1[i] * b2[0]` for every `i`, then
/// `b1[last] * b2[j]` for `j >= 1`. The leading terms form one strictly
/// decreasing chain.
pub fn lemma_combine(b1: &[SIPoly], b2: &[SIPoly]) -> Result<Vec<SIPoly>> {
    if b1.is_empty() || b2.is_empty() {
        return Err(domain("lemma_combine needs two nonempty bases"));
    }
    for b in [b1, b2] {
        for v in b {
            if v.is_zero() {
                return Err(domain("basis contains the zero polynomial"));
            }
        }
        if !b
            .windows(2)
            .all(|w| w[0].leading_term().unwrap() > w[1].leading_term().unwrap())
        {
            return Err(domain("basis leading terms are not strictly decreasing"));
        }
    }
    let last = b1.last().unwrap();
    let mut out: Vec<SIPoly> = b1.iter().map(|v| v * &b2[0]).collect();
    out.extend(b2[1..].iter().map(|w| last * w));
    Ok(out)
}
