//! On-disk result cache keyed by a SHA-256 of the computation.
//!
//! Entries are written to a temporary file in the cache directory and renamed
//! into place, so readers never see partial files and concurrent writers of
//! the same key leave one complete entry.

use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::manifest::Manifest;
use crate::report::SCHEMA_VERSION;
use crate::run::{Command, Outcome};

pub const CACHE_ENV: &str = "SYMCIRC_CACHE_DIR";

/// `$SYMCIRC_CACHE_DIR`, else `$XDG_CACHE_HOME/symcirc`, else `~/.cache/symcirc`.
pub fn default_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("symcirc"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("symcirc"))
}

/// Hash of the operation, its parameters and the resolved presentation.
pub fn key(command: Command, manifest: &Manifest, presentation: &str) -> String {
    let mut m = manifest.clone();
    m.output = None;
    let doc = json!({
        "schema_version": SCHEMA_VERSION,
        "crate_version": env!("CARGO_PKG_VERSION"),
        "command": command.name(),
        "manifest": m,
        "presentation": presentation,
    });
    hex::encode(Sha256::digest(doc.to_string().as_bytes()))
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A stored outcome; unreadable or malformed entries count as misses.
    pub fn get(&self, key: &str) -> Option<Outcome> {
        let text = std::fs::read_to_string(self.path(key)).ok()?;
        let v: Value = serde_json::from_str(&text).ok()?;
        Some(Outcome {
            exit_code: v.get("exit_code")?.as_i64()? as i32,
            report: v.get("report")?.clone(),
        })
    }

    pub fn put(&self, key: &str, outcome: &Outcome) -> std::io::Result<()> {
        std::fs::create_dir_all(&self.dir)?;
        let mut f = tempfile::NamedTempFile::new_in(&self.dir)?;
        let doc = json!({ "exit_code": outcome.exit_code, "report": outcome.report });
        f.write_all(doc.to_string().as_bytes())?;
        f.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}
