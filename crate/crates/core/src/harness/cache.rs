//! Persistent memo of `kappa3bar` values keyed by canonical graph6.
//!
//! File format: one `<canonical-graph6>\t<value>\n` line per entry, sorted
//! by key on flush.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::RwLock;

use crate::canon::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::steiner::kappa_bar_k;

#[derive(Debug, Default)]
pub struct Kappa3Cache {
    entries: RwLock<BTreeMap<String, u32>>,
}

impl Kappa3Cache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &CanonicalKey) -> Option<u32> {
        self.entries.read().unwrap().get(key.as_str()).copied()
    }

    /// Insert if absent. Re-inserting the same value is fine; a different
    /// value for a stored key means something is corrupt.
    pub fn put(&self, key: &CanonicalKey, value: u32) -> Result<()> {
        let mut map = self.entries.write().unwrap();
        match map.get(key.as_str()) {
            Some(&stored) if stored != value => Err(Error::CacheConflict {
                key: key.to_string(),
                stored,
                new: value,
            }),
            Some(_) => Ok(()),
            None => {
                map.insert(key.to_string(), value);
                Ok(())
            }
        }
    }

    /// Cached `kappa3bar(g)`, computing and storing it on a miss.
    pub fn kappa3bar(&self, g: &Graph) -> Result<u32> {
        let key = canonical_form(g);
        if let Some(v) = self.get(&key) {
            return Ok(v);
        }
        let v = if g.order() < 3 {
            0
        } else {
            kappa_bar_k(g, 3)? as u32
        };
        self.put(&key, v)?;
        Ok(v)
    }

    /// Read a cache file. A missing file gives an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        let cache = Self::new();
        let file = match fs::File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(e.into()),
        };
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::CacheFormat {
                line: i + 1,
                msg: msg.to_string(),
            };
            let (key, value) = line.split_once('\t').ok_or_else(|| bad("missing tab"))?;
            let value: u32 = value.parse().map_err(|_| bad("value is not a count"))?;
            graph6::decode(key).map_err(|e| bad(&e.to_string()))?;
            cache.put(&CanonicalKey::from_canonical_graph6(key), value)?;
        }
        Ok(cache)
    }

    pub fn flush(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut out = BufWriter::new(fs::File::create(&tmp)?);
            for (k, v) in self.entries.read().unwrap().iter() {
                writeln!(out, "{k}\t{v}")?;
            }
            out.flush()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn entries(&self) -> Vec<(String, u32)> {
        self.entries
            .read()
            .unwrap()
            .iter()
            .map(|(k, &v)| (k.clone(), v))
            .collect()
    }

    /// Recompute up to `limit` evenly spaced entries; returns the ones whose
    /// stored value disagrees, as `(key, stored, recomputed)`.
    pub fn audit(&self, limit: usize) -> Result<Vec<(String, u32, u32)>> {
        let all = self.entries();
        if all.is_empty() || limit == 0 {
            return Ok(Vec::new());
        }
        let step = all.len().div_ceil(limit).max(1);
        let mut bad = Vec::new();
        for (k, stored) in all.iter().step_by(step) {
            let g = graph6::decode(k)?;
            let fresh = if g.order() < 3 {
                0
            } else {
                kappa_bar_k(&g, 3)? as u32
            };
            if fresh != *stored {
                bad.push((k.clone(), *stored, fresh));
            }
        }
        Ok(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete_graph;

    #[test]
    fn put_get_conflict() {
        let c = Kappa3Cache::new();
        let k4 = canonical_form(&complete_graph(4).unwrap());
        assert_eq!(c.get(&k4), None);
        c.put(&k4, 2).unwrap();
        assert_eq!(c.get(&k4), Some(2));
        c.put(&k4, 2).unwrap();
        assert!(matches!(c.put(&k4, 3), Err(Error::CacheConflict { .. })));
    }

    #[test]
    fn flush_and_reload() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k3.tsv");
        let c = Kappa3Cache::new();
        for n in 3..=6 {
            c.kappa3bar(&complete_graph(n).unwrap()).unwrap();
        }
        c.flush(&path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        let mut sorted = lines.clone();
        sorted.sort();
        assert_eq!(lines, sorted);
        let back = Kappa3Cache::load(&path).unwrap();
        assert_eq!(back.entries(), c.entries());
        assert_eq!(
            back.get(&canonical_form(&complete_graph(6).unwrap())),
            Some(4)
        );
    }

    #[test]
    fn load_rejects_bad_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.tsv");
        std::fs::write(&path, "Bw\t1\nC~ 2\n").unwrap();
        assert!(matches!(
            Kappa3Cache::load(&path),
            Err(Error::CacheFormat { line: 2, .. })
        ));
        std::fs::write(&path, "Bw\t1\nBw\t2\n").unwrap();
        assert!(matches!(
            Kappa3Cache::load(&path),
            Err(Error::CacheConflict { .. })
        ));
        let missing = Kappa3Cache::load(&dir.path().join("none.tsv")).unwrap();
        assert!(missing.is_empty());
    }
}
