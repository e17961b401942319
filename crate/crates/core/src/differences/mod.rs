//! Symmetric differences of Gaussian coefficients and grid scanners over them.

mod scan;

pub use scan::{
    digest, scan_bergeron, scan_conjecture_f_strict, scan_stanley_zanello, scan_strange,
    verify_gaussian_strictness, verify_nr8_base, verify_sylvester, verify_theorem_f,
    verify_theorem_g, write_csv, write_jsonl, Family, ScanReport,
};

use crate::error::{domain, Result};
use crate::qpoly::{gauss, QPoly};

/// `[n+k, k] - q^n [n+k-2, k-2]`.
pub fn f_difference(n: u32, k: u32) -> Result<QPoly> {
    if k < 2 || n < 1 {
        return Err(domain(format!(
            "F needs n >= 1 and k >= 2, got n = {n}, k = {k}"
        )));
    }
    Ok(&gauss(n + k, k)? - &gauss(n + k - 2, k - 2)?.shift(n as usize))
}

/// `[n+k, k] - q^{nr/2} [n+k-r, k-r]`.
pub fn g_difference(n: u32, k: u32, r: u32) -> Result<QPoly> {
    if r < 1 || k < r {
        return Err(domain(format!("G needs k >= r >= 1, got k = {k}, r = {r}")));
    }
    if !(n as u64 * r as u64).is_multiple_of(2) {
        return Err(domain(format!("G needs nr even, got n = {n}, r = {r}")));
    }
    let shift = (n as u64 * r as u64 / 2) as usize;
    Ok(&gauss(n + k, k)? - &gauss(n + k - r, k - r)?.shift(shift))
}

/// `[n-1, k] - q^{n - 2rk + 1 + 4(r-1)} [n-1+4(r-1), k-2]` for odd `n`,
/// `k >= 2`, `r >= 1` and `n >= 2rk - 4r + 3`.
pub fn strange(n: u32, k: u32, r: u32) -> Result<QPoly> {
    if n.is_multiple_of(2) || k < 2 || r < 1 {
        return Err(domain(format!(
            "strange difference needs n odd, k >= 2, r >= 1; got ({n}, {k}, {r})"
        )));
    }
    let (n64, k64, r64) = (n as i64, k as i64, r as i64);
    if n64 < 2 * r64 * k64 - 4 * r64 + 3 {
        return Err(domain(format!(
            "strange difference needs n >= 2rk - 4r + 3; got ({n}, {k}, {r})"
        )));
    }
    let exponent = n64 - 2 * r64 * k64 + 1 + 4 * (r64 - 1);
    let top = n - 1 + 4 * (r - 1);
    Ok(&gauss(n - 1, k)? - &gauss(top, k - 2)?.shift(exponent as usize))
}

/// Exponent `k(m-b)/2 + b - 2k + 2` of the subtracted term, when it is a
/// nonnegative integer.
pub fn stanley_zanello_exponent(k: u32, m: u32, b: u32) -> Result<u64> {
    if b > m {
        return Err(domain(format!("need b <= m, got b = {b}, m = {m}")));
    }
    let twice = k as i64 * (m - b) as i64;
    if twice % 2 != 0 {
        return Err(domain(format!(
            "k(m-b)/2 is not an integer for ({k}, {m}, {b})"
        )));
    }
    let e = twice / 2 + b as i64 - 2 * k as i64 + 2;
    u64::try_from(e).map_err(|_| domain(format!("negative exponent {e} for ({k}, {m}, {b})")))
}

/// `[m, k] - q^{k(m-b)/2 + b - 2k + 2} [b, k-2]`. A Gaussian coefficient
/// whose bottom exceeds its top is taken as zero here.
pub fn stanley_zanello(k: u32, m: u32, b: u32) -> Result<QPoly> {
    if k < 2 {
        return Err(domain(format!("need k >= 2, got {k}")));
    }
    let e = stanley_zanello_exponent(k, m, b)?;
    Ok(&gauss_or_zero(m, k) - &gauss_or_zero(b, k - 2).shift(e as usize))
}

fn gauss_or_zero(a: u32, b: u32) -> QPoly {
    gauss(a, b).unwrap_or_else(|_| QPoly::zero())
}

/// Whether `(a, b, c, d)` is a valid tuple: positive, `a` the smallest, and
/// `ad = bc`.
pub fn bergeron_valid(a: u32, b: u32, c: u32, d: u32) -> bool {
    a >= 1 && a <= b && a <= c && a <= d && a as u64 * d as u64 == b as u64 * c as u64
}

/// `[b+c, b] - [a+d, d]`.
pub fn bergeron(a: u32, b: u32, c: u32, d: u32) -> Result<QPoly> {
    if !bergeron_valid(a, b, c, d) {
        return Err(domain(format!(
            "need positive a = min(a, b, c, d) and ad = bc, got ({a}, {b}, {c}, {d})"
        )));
    }
    Ok(&gauss(b + c, b)? - &gauss(a + d, d)?)
}
