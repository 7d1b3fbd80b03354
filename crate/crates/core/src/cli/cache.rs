//! Content-addressed on-disk store of reduced Gröbner bases.
//!
//! Each entry is a JSON file named by the SHA-256 of the ring description
//! and the sorted monic generators. Files carry a checksum; unreadable or
//! mismatching entries are treated as misses, and accepted entries are
//! re-certified by the Gröbner layer before use. Writes go to a temporary
//! file that is renamed into place, so readers never see partial entries.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::groebner::GbCache;
use crate::poly::Polynomial;
use crate::ring::Ring;

const FORMAT: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    format: u32,
    key: String,
    basis: Vec<String>,
    checksum: String,
}

#[derive(Debug)]
pub struct DiskCache {
    dir: PathBuf,
    counter: AtomicU64,
    warnings: Mutex<Vec<String>>,
}

fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn checksum(key: &str, basis: &[String]) -> String {
    sha256_hex(&format!("{key}\n--\n{}", basis.join("\n")))
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> std::io::Result<DiskCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir, counter: AtomicU64::new(0), warnings: Mutex::new(Vec::new()) })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Canonical key text: ring description and the sorted, deduplicated
    /// monic generators.
    pub fn key_material(ring: &Ring, gens: &[Polynomial]) -> String {
        let mut g: Vec<String> = gens.iter().filter(|p| !p.is_zero()).map(|p| p.monic().to_string()).collect();
        g.sort();
        g.dedup();
        format!("{}\n{}", ring.describe(), g.join("\n"))
    }

    pub fn key(ring: &Ring, gens: &[Polynomial]) -> String {
        sha256_hex(&DiskCache::key_material(ring, gens))
    }

    pub fn path_for(&self, ring: &Ring, gens: &[Polynomial]) -> PathBuf {
        self.dir.join(format!("{}.json", DiskCache::key(ring, gens)))
    }

    /// Warnings collected since the last call (I/O failures and rejected
    /// entries).
    pub fn take_warnings(&self) -> Vec<String> {
        std::mem::take(&mut *self.warnings.lock().unwrap())
    }

    fn warn(&self, msg: String) {
        let mut w = self.warnings.lock().unwrap();
        if !w.contains(&msg) {
            w.push(msg);
        }
    }

    fn read(&self, path: &Path, key: &str) -> Option<Vec<String>> {
        let text = fs::read_to_string(path).ok()?;
        let Ok(entry) = serde_json::from_str::<Entry>(&text) else {
            self.warn(format!("ignored corrupted cache entry {}", path.display()));
            return None;
        };
        if entry.format != FORMAT || entry.key != key || entry.checksum != checksum(&entry.key, &entry.basis) {
            self.warn(format!("ignored mismatching cache entry {}", path.display()));
            return None;
        }
        Some(entry.basis)
    }
}

impl GbCache for DiskCache {
    fn lookup(&self, ring: &Ring, gens: &[Polynomial]) -> Option<Vec<Polynomial>> {
        let key = DiskCache::key_material(ring, gens);
        let path = self.path_for(ring, gens);
        let basis = self.read(&path, &key)?;
        let amb = ring.ambient();
        let parsed: Option<Vec<Polynomial>> = basis.iter().map(|s| amb.parse(s).ok()).collect();
        if parsed.is_none() {
            self.warn(format!("ignored unparsable cache entry {}", path.display()));
        }
        parsed
    }

    fn store(&self, ring: &Ring, gens: &[Polynomial], basis: &[Polynomial]) {
        let key = DiskCache::key_material(ring, gens);
        let basis: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
        let entry = Entry { format: FORMAT, checksum: checksum(&key, &basis), key, basis };
        let path = self.path_for(ring, gens);
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}-{}",
            std::process::id(),
            self.counter.fetch_add(1, Ordering::Relaxed),
            path.file_name().unwrap().to_string_lossy()
        ));
        let result = serde_json::to_string(&entry)
            .map_err(std::io::Error::other)
            .and_then(|text| fs::write(&tmp, text))
            .and_then(|_| fs::rename(&tmp, &path));
        if let Err(e) = result {
            let _ = fs::remove_file(&tmp);
            self.warn(format!("cache write failed ({e}); continuing without caching"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::ring::RingCtx;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path()).unwrap();
        let r = RingCtx::rational(&["x", "y"]);
        let gens = r.parse_list("x^2 - y, x*y - 1").unwrap();
        let gb = buchberger(&r, &gens).unwrap();
        cache.store(&r, &gens, gb.ambient_basis());
        let back = cache.lookup(&r, &gens).unwrap();
        assert_eq!(back, gb.ambient_basis());
        let swapped = r.parse_list("2*x*y - 2, x^2 - y").unwrap();
        assert_eq!(DiskCache::key(&r, &gens), DiskCache::key(&r, &swapped));
        let path = cache.path_for(&r, &gens);
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, &text[..text.len() / 2]).unwrap();
        assert!(cache.lookup(&r, &gens).is_none());
        assert!(!cache.take_warnings().is_empty());
    }
}
