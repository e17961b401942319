//! On-disk cache of kernel bases, one JSON file per `(n, k, m)`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use crate::boxpartitions::delta;
use crate::cayley::{kernel_basis, KernelBasis, KernelProvider};
use crate::error::{Error, Result};

pub const DEFAULT_DIR: &str = ".semiinv-cache";
pub const ENV_VAR: &str = "SEMIINV_CACHE";

/// Where a basis came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Computed,
    /// A cached file existed but failed validation and was replaced.
    Replaced,
}

#[derive(Clone, Debug)]
pub struct KernelCache {
    dir: PathBuf,
}

impl KernelCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    /// `explicit`, else `$SEMIINV_CACHE`, else `./.semiinv-cache`.
    pub fn resolve(explicit: Option<PathBuf>) -> Self {
        let dir = explicit
            .or_else(|| {
                std::env::var_os(ENV_VAR)
                    .filter(|v| !v.is_empty())
                    .map(PathBuf::from)
            })
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR));
        Self::new(dir)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: u32, k: u32, m: u64) -> PathBuf {
        self.dir.join(KernelBasis::cache_file_name(n, k, m))
    }

    /// The cached basis, if the file exists and passes validation.
    pub fn load(&self, n: u32, k: u32, m: u64) -> Option<KernelBasis> {
        let bytes = fs::read(self.path(n, k, m)).ok()?;
        let kb: KernelBasis = serde_json::from_slice(&bytes).ok()?;
        let expected_len = (2 * m <= n as u64 * k as u64).then(|| delta(k, n, m as i64));
        let trusted = (kb.n, kb.k, kb.m) == (n, k, m)
            && kb.validate()
            && expected_len.is_none_or(|d| d == BigInt::from(kb.dim()))
            && bytes == encode(&kb).ok()?;
        trusted.then_some(kb)
    }

    /// Writes `kb` atomically: a temporary file in the cache directory is
    /// renamed over the target.
    pub fn store(&self, kb: &KernelBasis) -> Result<PathBuf> {
        let target = self.path(kb.n, kb.k, kb.m);
        write_atomic(&target, &encode(kb)?)?;
        Ok(target)
    }

    pub fn get(&self, n: u32, k: u32, m: u64) -> Result<(KernelBasis, Lookup)> {
        if let Some(kb) = self.load(n, k, m) {
            return Ok((kb, Lookup::Hit));
        }
        let existed = self.path(n, k, m).exists();
        let kb = kernel_basis(n, k, m)?;
        self.store(&kb)?;
        Ok((
            kb,
            if existed {
                Lookup::Replaced
            } else {
                Lookup::Computed
            },
        ))
    }
}

impl KernelProvider for KernelCache {
    fn kernel(&self, n: u32, k: u32, m: u64) -> Result<KernelBasis> {
        self.get(n, k, m).map(|(kb, _)| kb)
    }
}

/// Canonical bytes of a basis: compact JSON and a trailing newline.
pub fn encode(kb: &KernelBasis) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec(kb)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Writes `bytes` to `target` through a temporary sibling and a rename.
pub fn write_atomic(target: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match target.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io_err = |source| Error::Io {
        path: target.to_path_buf(),
        source,
    };
    fs::create_dir_all(dir).map_err(io_err)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(bytes).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(target).map_err(|e| io_err(e.error))?;
    Ok(())
}
