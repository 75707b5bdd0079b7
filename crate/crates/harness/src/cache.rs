//! Persistent cache of chromatic values keyed by canonical form.
//!
//! The file holds a JSON document with a CRC32 over its entries. A missing
//! file is an empty cache; a damaged one is ignored (and reported) so values
//! get recomputed. Writes go to a temporary file renamed into place, so
//! readers never observe a partial file.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use sghom::sgcore::{canonical_key, IsoMode};
use sghom::SignedGraph;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedValues {
    pub chi_s: Option<usize>,
    pub chi_sp: Option<usize>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    checksum: u32,
    entries: BTreeMap<String, CachedValues>,
}

fn checksum(entries: &BTreeMap<String, CachedValues>) -> u32 {
    crc32fast::hash(serde_json::to_string(entries).expect("serialisable").as_bytes())
}

/// Hex form of the sp canonical key; both chromatic values are sp-isomorphism invariants.
pub fn cache_key(g: &SignedGraph) -> String {
    canonical_key(g, IsoMode::Sp).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    entries: BTreeMap<String, CachedValues>,
    corrupted: bool,
}

impl ResultCache {
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let (entries, corrupted) = match fs::read_to_string(&path) {
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(f) if f.version == 1 && checksum(&f.entries) == f.checksum => (f.entries, false),
                _ => (BTreeMap::new(), true),
            },
            Err(e) if e.kind() == io::ErrorKind::NotFound => (BTreeMap::new(), false),
            Err(e) => return Err(e),
        };
        Ok(ResultCache { path, entries, corrupted })
    }

    /// Whether the file on disk failed to parse or verify when opened.
    pub fn was_corrupted(&self) -> bool {
        self.corrupted
    }

    pub fn lookup(&self, key: &str) -> Option<&CachedValues> {
        self.entries.get(key)
    }

    /// Merges `values` into the entry for `key` (fields left `None` are kept).
    pub fn store(&mut self, key: &str, values: CachedValues) {
        let e = self.entries.entry(key.to_string()).or_default();
        if values.chi_s.is_some() {
            e.chi_s = values.chi_s;
        }
        if values.chi_sp.is_some() {
            e.chi_sp = values.chi_sp;
        }
        e.metadata.extend(values.metadata);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn save(&self) -> io::Result<()> {
        let file = CacheFile { version: 1, checksum: checksum(&self.entries), entries: self.entries.clone() };
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(&file).expect("serialisable"))?;
        fs::rename(tmp, &self.path)
    }
}

/// Whether a lookup should be audited by recomputation: a deterministic
/// 1-in-100 sample keyed by `key` and `seed`.
pub fn audit_sampled(key: &str, seed: u64) -> bool {
    (crc32fast::hash(key.as_bytes()) as u64 ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)) % 100 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use sghom::gen::paley;

    #[test]
    fn store_then_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let key = cache_key(&paley(5).unwrap());
        let mut c = ResultCache::open(&path).unwrap();
        assert!(c.lookup(&key).is_none());
        c.store(&key, CachedValues { chi_s: Some(5), ..Default::default() });
        c.store(&key, CachedValues { chi_sp: Some(5), ..Default::default() });
        c.save().unwrap();
        let d = ResultCache::open(&path).unwrap();
        assert!(!d.was_corrupted());
        assert_eq!(d.lookup(&key).unwrap().chi_s, Some(5));
        assert_eq!(d.lookup(&key).unwrap().chi_sp, Some(5));
        assert!(d.lookup("00").is_none());
    }

    #[test]
    fn corruption_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.json");
        let mut c = ResultCache::open(&path).unwrap();
        c.store("ab", CachedValues { chi_s: Some(3), ..Default::default() });
        c.save().unwrap();
        let text = fs::read_to_string(&path).unwrap().replace("\"chi_s\": 3", "\"chi_s\": 4");
        fs::write(&path, text).unwrap();
        let d = ResultCache::open(&path).unwrap();
        assert!(d.was_corrupted());
        assert!(d.is_empty());
        fs::write(&path, "not json").unwrap();
        assert!(ResultCache::open(&path).unwrap().was_corrupted());
    }

    #[test]
    fn audit_rate_is_about_one_percent() {
        let hits = (0..10_000).filter(|i| audit_sampled(&format!("{i:x}"), 0)).count();
        assert!((50..200).contains(&hits), "{hits}");
    }
}
