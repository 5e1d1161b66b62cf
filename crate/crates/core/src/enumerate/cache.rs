//! On-disk shards of per-type search results.
//!
//! Layout: `manifest.json` holding the format version, and one file
//! `n{n}-mu{mu_max}-t{index}.jsonl` per type, one `[v_1, …, v_n, d]` array per
//! line. A manifest with a different version invalidates every shard.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::WeightSystem;

pub const CACHE_VERSION: &str = concat!("quasihom-", env!("CARGO_PKG_VERSION"), "-shards-1");

#[derive(Serialize, Deserialize)]
struct Manifest {
    version: String,
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Cache(format!("{}: {e}", path.display()))
}

/// Writes `contents` to a sibling temporary file and renames it into place.
fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp).map_err(|e| io_err(&tmp, e))?;
    f.write_all(contents).map_err(|e| io_err(&tmp, e))?;
    f.sync_all().map_err(|e| io_err(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| io_err(path, e))
}

pub struct ShardCache {
    dir: PathBuf,
}

impl ShardCache {
    /// Opens `dir`, creating it if needed and clearing shards of another version.
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
        let manifest = dir.join("manifest.json");
        let current = fs::read_to_string(&manifest)
            .ok()
            .and_then(|s| serde_json::from_str::<Manifest>(&s).ok())
            .is_some_and(|m| m.version == CACHE_VERSION);
        if !current {
            for entry in fs::read_dir(dir).map_err(|e| io_err(dir, e))? {
                let path = entry.map_err(|e| io_err(dir, e))?.path();
                if path.extension().is_some_and(|x| x == "jsonl") {
                    fs::remove_file(&path).map_err(|e| io_err(&path, e))?;
                }
            }
            let body = serde_json::to_vec_pretty(&Manifest { version: CACHE_VERSION.into() })
                .map_err(|e| io_err(&manifest, e))?;
            write_atomic(&manifest, &body)?;
        }
        Ok(Self { dir: dir.to_path_buf() })
    }

    fn shard_path(&self, n: usize, mu_max: u64, index: usize) -> PathBuf {
        self.dir.join(format!("n{n}-mu{mu_max}-t{index}.jsonl"))
    }

    pub fn load(&self, n: usize, mu_max: u64, index: usize) -> Result<Option<Vec<WeightSystem>>> {
        let path = self.shard_path(n, mu_max, index);
        let Ok(text) = fs::read_to_string(&path) else {
            return Ok(None);
        };
        text.lines()
            .map(|line| {
                let values: Vec<u64> = serde_json::from_str(line).map_err(|e| io_err(&path, e))?;
                WeightSystem::from_slice(&values)
            })
            .collect::<Result<Vec<_>>>()
            .map(Some)
    }

    pub fn store(&self, n: usize, mu_max: u64, index: usize, systems: &[WeightSystem]) -> Result<()> {
        let path = self.shard_path(n, mu_max, index);
        let mut body = String::new();
        for ws in systems {
            let mut values = ws.weights().to_vec();
            values.push(ws.degree());
            body.push_str(&serde_json::to_string(&values).map_err(|e| io_err(&path, e))?);
            body.push('\n');
        }
        write_atomic(&path, body.as_bytes())
    }
}
