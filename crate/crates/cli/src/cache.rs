//! On-disk cache of oracle results, one JSON file per
//! `(prime, r, m, seed, trials)`.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Result;
use serde::{Deserialize, Serialize};

use conicgin::{ConfigRecord, GinStaircase};

use crate::output::write_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub prime: u32,
    pub r: u32,
    pub m: u32,
    pub seed: u64,
    pub trials: u32,
}

impl CacheKey {
    fn file_name(&self) -> String {
        format!("gin_p{}_r{}_m{}_s{}_t{}.json", self.prime, self.r, self.m, self.seed, self.trials)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub config: ConfigRecord,
    pub trials: u32,
    pub staircase: Option<GinStaircase>,
    pub h_vector: Option<Vec<u32>>,
}

#[derive(Debug, Clone)]
pub struct GinCache {
    dir: PathBuf,
}

impl GinCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        GinCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// Unreadable or mismatched entries count as misses.
    pub fn get(&self, key: &CacheKey) -> Option<CacheEntry> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        let c = &entry.config;
        let matches =
            c.prime == key.prime && c.r == key.r && c.m == key.m && c.seed == key.seed && entry.trials == key.trials;
        matches.then_some(entry)
    }

    pub fn put(&self, key: &CacheKey, entry: &CacheEntry) -> Result<()> {
        write_json(&self.path(key), entry)
    }
}
