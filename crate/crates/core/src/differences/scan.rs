use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{
    bergeron, bergeron_valid, f_difference, g_difference, stanley_zanello,
    stanley_zanello_exponent, strange,
};
use crate::boxpartitions::{box_counts, delta};
use crate::cayley::semiinvariant_dim;
use crate::error::{Error, Result};
use crate::qpoly::QPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    F,
    G,
    #[serde(rename = "strange")]
    Strange,
    #[serde(rename = "stanley_zanello")]
    StanleyZanello,
    #[serde(rename = "bergeron")]
    Bergeron,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::F => "F",
            Family::G => "G",
            Family::Strange => "strange",
            Family::StanleyZanello => "stanley_zanello",
            Family::Bergeron => "bergeron",
        }
    }

    /// Column names for the parameter tuple.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::F => &["n", "k"],
            Family::G | Family::Strange => &["n", "k", "r"],
            Family::StanleyZanello => &["k", "m", "b"],
            Family::Bergeron => &["a", "b", "c", "d"],
        }
    }
}

/// Outcome of the checks run on one member of a family.
///
/// `witness` is the offending coefficient index of the first failed check
/// (named by `witness_check`); both are absent exactly when every check passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub family: Family,
    pub params: Vec<u64>,
    pub checks: BTreeMap<String, bool>,
    pub witness: Option<usize>,
    pub witness_check: Option<String>,
    pub coefficients_digest: String,
}

impl ScanReport {
    fn build(
        family: Family,
        params: Vec<u64>,
        poly: &QPoly,
        outcomes: Vec<(&str, Option<usize>)>,
    ) -> Self {
        let mut checks = BTreeMap::new();
        let mut witness = None;
        let mut witness_check = None;
        for (name, violation) in outcomes {
            checks.insert(name.to_string(), violation.is_none());
            if witness.is_none() {
                if let Some(i) = violation {
                    witness = Some(i);
                    witness_check = Some(name.to_string());
                }
            }
        }
        Self {
            family,
            params,
            checks,
            witness,
            witness_check,
            coefficients_digest: digest(poly),
        }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    fn into_error(self) -> Error {
        Error::Verification {
            family: self.family.name().to_string(),
            params: self.params,
            check: self.witness_check.unwrap_or_default(),
            witness: self.witness,
        }
    }
}

/// Hex SHA-256 of the comma-separated decimal coefficients.
pub fn digest(p: &QPoly) -> String {
    let text = p
        .coeffs()
        .iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(",");
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn unimodal_check(p: &QPoly) -> Option<usize> {
    match p.unimodality_violation() {
        Ok(v) => v,
        Err(Error::NonnegativityViolation { index }) => Some(index),
        Err(_) => unreachable!("unimodality only fails on negative coefficients"),
    }
}

fn strict_check(p: &QPoly) -> Option<usize> {
    match p.strictness_violation() {
        Ok(v) => v,
        Err(Error::NonnegativityViolation { index }) => Some(index),
        Err(_) => unreachable!("degree is checked by the caller"),
    }
}

fn shape_checks(p: &QPoly, strict: bool) -> Vec<(&'static str, Option<usize>)> {
    let mut out = vec![
        ("nonnegative", p.first_negative()),
        ("symmetric", p.symmetry_violation()),
        ("unimodal", unimodal_check(p)),
    ];
    if strict && p.degree().is_some_and(|d| d >= 4) {
        out.push(("strict_unimodal_except_ends", strict_check(p)));
    }
    out
}

/// `c_m = p(k, n, m) - p(k - r, n, m - s)` for every `m`.
fn coefficient_identity(p: &QPoly, n: u32, k: u32, r: u32, s: u64) -> Option<usize> {
    let top = box_counts(k, n);
    let low = box_counts(k - r, n);
    let d = n as usize * k as usize;
    (0..=d).find(|&m| p.coeff(m) != top.get(m as i64) - low.get(m as i64 - s as i64))
}

/// `c_m - c_{m-1} = delta(k, n, m) - delta(k - r, n, m - s)` for `1 <= m <= nk/2`.
fn delta_bridge(p: &QPoly, n: u32, k: u32, r: u32, s: u64) -> Option<usize> {
    let top = box_counts(k, n);
    let low = box_counts(k - r, n);
    let half = n as usize * k as usize / 2;
    (1..=half).find(|&m| {
        p.coeff(m) - p.coeff(m - 1) != top.delta(m as i64) - low.delta(m as i64 - s as i64)
    })
}

fn first_failure(reports: Vec<ScanReport>) -> Result<Vec<ScanReport>> {
    match reports.iter().position(|r| !r.passed()) {
        Some(i) => Err(reports.into_iter().nth(i).unwrap().into_error()),
        None => Ok(reports),
    }
}

fn par_grid<P, F>(cells: Vec<P>, f: F) -> Result<Vec<ScanReport>>
where
    P: Sync,
    F: Fn(&P) -> Result<ScanReport> + Sync + Send,
{
    cells.par_iter().map(f).collect()
}

fn f_cells(n_max: u32, k_max: u32, keep: impl Fn(u32, u32) -> bool) -> Vec<(u32, u32)> {
    (1..=n_max)
        .flat_map(|n| (2..=k_max).map(move |k| (n, k)))
        .filter(|&(n, k)| keep(n, k))
        .collect()
}

/// Asserts that `F(n, k)` is symmetric and unimodal for every even
/// `n <= n_max` and `2 <= k <= k_max`, with coefficients and first differences
/// matching the partition counts.
pub fn verify_theorem_f(n_max: u32, k_max: u32) -> Result<Vec<ScanReport>> {
    let cells = f_cells(n_max, k_max, |n, _| n % 2 == 0);
    let reports = par_grid(cells, |&(n, k)| {
        let p = f_difference(n, k)?;
        let outcomes = vec![
            ("symmetric", p.symmetry_violation()),
            ("unimodal", unimodal_check(&p)),
            (
                "coefficient_identity",
                coefficient_identity(&p, n, k, 2, n as u64),
            ),
            ("delta_bridge", delta_bridge(&p, n, k, 2, n as u64)),
        ];
        Ok(ScanReport::build(
            Family::F,
            vec![n as u64, k as u64],
            &p,
            outcomes,
        ))
    })?;
    first_failure(reports)
}

/// Asserts that `G(n, k, r)` is symmetric and strictly unimodal away from
/// the end pairs for `8 <= n <= n_max`, `8 <= r <= min(k, r_max)`,
/// `k <= k_max` and `nr` even. Also checks that every coefficient up to the
/// middle exceeds its predecessor from `m = 2` on.
pub fn verify_theorem_g(n_max: u32, k_max: u32, r_max: u32) -> Result<Vec<ScanReport>> {
    let mut cells = Vec::new();
    for n in 8..=n_max {
        for k in 8..=k_max {
            for r in 8..=k.min(r_max) {
                if (n * r) % 2 == 0 {
                    cells.push((n, k, r));
                }
            }
        }
    }
    let reports = par_grid(cells, |&(n, k, r)| {
        let p = g_difference(n, k, r)?;
        let s = n as u64 * r as u64 / 2;
        let half = n as usize * k as usize / 2;
        let rise = (2..=half).find(|&m| p.coeff(m) - p.coeff(m - 1) < BigInt::one());
        let outcomes = vec![
            ("symmetric", p.symmetry_violation()),
            ("strict_unimodal_except_ends", strict_check(&p)),
            ("coefficient_identity", coefficient_identity(&p, n, k, r, s)),
            ("delta_bridge", delta_bridge(&p, n, k, r, s)),
            ("strict_rise", rise),
        ];
        Ok(ScanReport::build(
            Family::G,
            vec![n as u64, k as u64, r as u64],
            &p,
            outcomes,
        ))
    })?;
    first_failure(reports)
}

/// Asserts `dim S_n(k, m) = delta(k, n, m)` for `1 <= n <= n_max`,
/// `1 <= k <= k_max` and `0 <= m <= nk/2`. Returns the number of cells.
pub fn verify_sylvester(n_max: u32, k_max: u32) -> Result<usize> {
    let mut cells = Vec::new();
    for n in 1..=n_max {
        for k in 1..=k_max {
            for m in 0..=(n as u64 * k as u64 / 2) {
                cells.push((n, k, m));
            }
        }
    }
    cells
        .par_iter()
        .map(|&(n, k, m)| {
            let dim = semiinvariant_dim(n, k, m)?;
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
            Ok(())
        })
        .collect::<Result<Vec<()>>>()?;
    Ok(cells.len())
}

/// Asserts `delta(r, n, nr/2) >= 2` for `8 <= n, r < 16` with `nr` even.
/// Returns the number of cells.
pub fn verify_nr8_base() -> Result<usize> {
    let cells: Vec<(u32, u32)> = (8..16)
        .flat_map(|n| (8..16).map(move |r| (n, r)))
        .filter(|&(n, r)| (n * r) % 2 == 0)
        .collect();
    let two = BigInt::from(2);
    for &(n, r) in &cells {
        let m = (n * r / 2) as i64;
        if delta(r, n, m) < two {
            return Err(Error::Verification {
                family: "nr8".into(),
                params: vec![n as u64, r as u64],
                check: "delta_at_least_two".into(),
                witness: Some(m as usize),
            });
        }
    }
    Ok(cells.len())
}

/// Asserts `delta(k, n, m) >= 1` for `8 <= n <= n_max`, `8 <= k <= k_max`
/// and `2 <= m <= nk/2`. Returns the number of `(n, k, m)` cells.
pub fn verify_gaussian_strictness(n_max: u32, k_max: u32) -> Result<usize> {
    let mut count = 0;
    for n in 8..=n_max {
        for k in 8..=k_max {
            let counts = box_counts(k, n);
            for m in 2..=(n as i64 * k as i64 / 2) {
                if !counts.delta(m).is_positive() {
                    return Err(Error::Verification {
                        family: "gauss".into(),
                        params: vec![n as u64, k as u64],
                        check: "delta_positive".into(),
                        witness: Some(m as usize),
                    });
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Records the shape of `F(n, k)` for `n >= 8`, `k >= 15` within the bounds.
/// With `include_below_range`, every `n >= 1`, `k >= 2` is scanned instead.
pub fn scan_conjecture_f_strict(
    n_max: u32,
    k_max: u32,
    include_below_range: bool,
) -> Result<Vec<ScanReport>> {
    let cells = f_cells(n_max, k_max, |n, k| {
        include_below_range || (n >= 8 && k >= 15)
    });
    par_grid(cells, |&(n, k)| {
        let p = f_difference(n, k)?;
        Ok(ScanReport::build(
            Family::F,
            vec![n as u64, k as u64],
            &p,
            shape_checks(&p, true),
        ))
    })
}

/// Records the shape of every valid `strange(n, k, r)` within the bounds.
pub fn scan_strange(n_max: u32, k_max: u32, r_max: u32) -> Result<Vec<ScanReport>> {
    let mut cells = Vec::new();
    for n in (1..=n_max).step_by(2) {
        for k in 2..=k_max {
            for r in 1..=r_max {
                if n as i64 >= 2 * r as i64 * k as i64 - 4 * r as i64 + 3 {
                    cells.push((n, k, r));
                }
            }
        }
    }
    par_grid(cells, |&(n, k, r)| {
        let p = strange(n, k, r)?;
        Ok(ScanReport::build(
            Family::Strange,
            vec![n as u64, k as u64, r as u64],
            &p,
            shape_checks(&p, false),
        ))
    })
}

/// Records the shape of every valid `bergeron(a, b, c, d)` with all entries
/// at most `bound`.
pub fn scan_bergeron(bound: u32) -> Result<Vec<ScanReport>> {
    let mut cells = Vec::new();
    for a in 1..=bound {
        for b in 1..=bound {
            for c in 1..=bound {
                for d in 1..=bound {
                    if bergeron_valid(a, b, c, d) {
                        cells.push((a, b, c, d));
                    }
                }
            }
        }
    }
    par_grid(cells, |&(a, b, c, d)| {
        let p = bergeron(a, b, c, d)?;
        Ok(ScanReport::build(
            Family::Bergeron,
            vec![a as u64, b as u64, c as u64, d as u64],
            &p,
            shape_checks(&p, false),
        ))
    })
}

/// Records the shape of `stanley_zanello(k, m, b)` for `2 <= k <= k_max`,
/// `m <= m_max` and every `b <= m` with an admissible exponent.
pub fn scan_stanley_zanello(k_max: u32, m_max: u32) -> Result<Vec<ScanReport>> {
    let mut cells = Vec::new();
    for k in 2..=k_max {
        for m in 0..=m_max {
            for b in 0..=m {
                if stanley_zanello_exponent(k, m, b).is_ok() {
                    cells.push((k, m, b));
                }
            }
        }
    }
    par_grid(cells, |&(k, m, b)| {
        let p = stanley_zanello(k, m, b)?;
        Ok(ScanReport::build(
            Family::StanleyZanello,
            vec![k as u64, m as u64, b as u64],
            &p,
            shape_checks(&p, false),
        ))
    })
}

/// One JSON object per line, in the given order.
pub fn write_jsonl(path: &Path, reports: &[ScanReport]) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut w = BufWriter::new(File::create(path).map_err(io_err)?);
    for r in reports {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n").map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

/// One row per (report, check): `family, <params>, check, pass, witness_index`.
/// The witness index is filled on the row of the check that produced it.
pub fn write_csv(path: &Path, family: Family, reports: &[ScanReport]) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut w = csv::Writer::from_writer(file);
    let mut header = vec!["family"];
    header.extend_from_slice(family.param_names());
    header.extend_from_slice(&["check", "pass", "witness_index"]);
    w.write_record(&header)?;
    for r in reports {
        for (check, pass) in &r.checks {
            let mut row = vec![r.family.name().to_string()];
            row.extend(r.params.iter().map(u64::to_string));
            row.push(check.clone());
            row.push(pass.to_string());
            let witness = match (&r.witness_check, r.witness) {
                (Some(c), Some(i)) if c == check => i.to_string(),
                _ => String::new(),
            };
            row.push(witness);
            w.write_record(&row)?;
        }
    }
    w.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
