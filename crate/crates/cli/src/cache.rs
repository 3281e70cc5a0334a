//! On-disk result cache for `count`.
//!
//! Entries are content-addressed by (stat, method, k, max_n, library
//! version); the key doubles as the file name. The format is a versioned
//! binary record stream:
//!
//! ```text
//! "OKRK1" | u32 key length | key bytes | u64 entry count
//!         | entries: (u32 n, i64 m, u32 j, i64 count) little-endian
//! ```
//!
//! It is not an interchange format — JSON and TSV are. A corrupted or
//! mismatched file is treated as a miss and recomputed; an unusable cache
//! directory disables caching with a warning.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use okrank_core::{Method, RankTable, Stat};

const MAGIC: &[u8; 5] = b"OKRK1";

pub struct Cache {
    dir: PathBuf,
    verbose: bool,
}

#[derive(Clone, Debug)]
pub struct CacheKey {
    pub stat: Stat,
    pub method: Method,
    pub k: Option<u32>,
    pub max_n: u32,
    pub version: String,
}

impl CacheKey {
    pub fn address(&self) -> String {
        let k = match self.k {
            Some(k) => format!("k{k}"),
            None => "k-".to_string(),
        };
        format!(
            "{}-{}-{}-n{}-v{}",
            self.stat, self.method, k, self.max_n, self.version
        )
    }

    fn file_name(&self) -> String {
        format!("{}.okrk", self.address().replace(['/', '\\'], "_"))
    }
}

impl Cache {
    /// Open (creating if needed) the cache under `dir`; returns `None`
    /// with a warning when the directory cannot be used.
    pub fn open(dir: &Path, verbose: bool) -> Option<Cache> {
        if let Err(e) = fs::create_dir_all(dir) {
            eprintln!(
                "warning: cache directory {} unusable ({e}); caching disabled",
                dir.display()
            );
            return None;
        }
        // a directory that exists but cannot be written is just as dead
        let probe = dir.join(".okrk-probe");
        match fs::write(&probe, b"ok") {
            Ok(()) => {
                let _ = fs::remove_file(&probe);
                Some(Cache {
                    dir: dir.to_path_buf(),
                    verbose,
                })
            }
            Err(e) => {
                eprintln!(
                    "warning: cache directory {} not writable ({e}); caching disabled",
                    dir.display()
                );
                None
            }
        }
    }

    pub fn load(&self, key: &CacheKey) -> Option<RankTable> {
        let path = self.dir.join(key.file_name());
        let bytes = fs::read(&path).ok()?;
        match decode(&bytes, key) {
            Some(table) => {
                if self.verbose {
                    eprintln!("cache hit: {}", key.address());
                }
                Some(table)
            }
            None => {
                if bytes.is_empty() || self.verbose {
                    eprintln!("cache entry {} unreadable; recomputing", path.display());
                }
                None
            }
        }
    }

    pub fn store(&self, key: &CacheKey, table: &RankTable) {
        let path = self.dir.join(key.file_name());
        match fs::File::create(&path).and_then(|mut f| f.write_all(&encode(key, table))) {
            Ok(()) => {
                if self.verbose {
                    eprintln!("cache store: {}", key.address());
                }
            }
            Err(e) => eprintln!("warning: could not write cache entry {}: {e}", path.display()),
        }
    }
}

fn encode(key: &CacheKey, table: &RankTable) -> Vec<u8> {
    let key_bytes = key.address().into_bytes();
    let entries: Vec<_> = table.entries().collect();
    let mut out = Vec::with_capacity(5 + 4 + key_bytes.len() + 8 + entries.len() * 24);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(key_bytes.len() as u32).to_le_bytes());
    out.extend_from_slice(&key_bytes);
    out.extend_from_slice(&(entries.len() as u64).to_le_bytes());
    for (&(n, m, j), &count) in entries {
        out.extend_from_slice(&n.to_le_bytes());
        out.extend_from_slice(&m.to_le_bytes());
        out.extend_from_slice(&j.to_le_bytes());
        out.extend_from_slice(&count.to_le_bytes());
    }
    out
}

fn decode(bytes: &[u8], key: &CacheKey) -> Option<RankTable> {
    let rest = bytes.strip_prefix(MAGIC)?;
    let (len_bytes, rest) = rest.split_first_chunk::<4>()?;
    let key_len = u32::from_le_bytes(*len_bytes) as usize;
    if rest.len() < key_len {
        return None;
    }
    let (key_bytes, rest) = rest.split_at(key_len);
    if key_bytes != key.address().as_bytes() {
        return None;
    }
    let (count_bytes, mut rest) = rest.split_first_chunk::<8>()?;
    let count = u64::from_le_bytes(*count_bytes) as usize;
    if rest.len() != count * 24 {
        return None;
    }
    let mut entries = Vec::with_capacity(count);
    for _ in 0..count {
        let (n, r) = rest.split_first_chunk::<4>()?;
        let (m, r) = r.split_first_chunk::<8>()?;
        let (j, r) = r.split_first_chunk::<4>()?;
        let (c, r) = r.split_first_chunk::<8>()?;
        rest = r;
        entries.push((
            u32::from_le_bytes(*n),
            i64::from_le_bytes(*m),
            u32::from_le_bytes(*j),
            i64::from_le_bytes(*c),
        ));
    }
    Some(RankTable::from_entries(
        key.stat, key.method, key.k, key.max_n, entries,
    ))
}
