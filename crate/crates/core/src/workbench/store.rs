//! Append-only run store.
//!
//! Layout:
//!
//! ```text
//! <store>/.lock                      exclusive writer lock
//! <store>/runs/<run_id>/scenario.json
//! <store>/runs/<run_id>/report.json
//! <store>/runs/<run_id>/report.txt
//! <store>/runs/<run_id>/meta.json
//! ```
//!
//! A run is staged in a hidden directory and renamed into `runs/` once all of
//! its files are written, so readers listing `runs/` never see a partial run.
//! Existing run directories are never touched.

use std::fmt;
use std::fs::{self, File, OpenOptions, TryLockError};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::document::scenario_to_string;
use super::report::{render_report_structured, render_report_text, AssessmentReport};
use super::{Scenario, WorkbenchError};

pub const RUNS_DIR: &str = "runs";
const LOCK_FILE: &str = ".lock";
const STAGING_PREFIX: &str = ".staging-";

/// `<UTC timestamp>-<first 16 hex digits of the content digest>`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RunId(String);

impl RunId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for RunId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct RunMeta {
    run_id: RunId,
    created_at: String,
    digest: String,
    label: String,
    schema_version: u32,
}

#[derive(Debug, Clone)]
pub struct RunStore {
    root: PathBuf,
}

/// Held while writing; the lock is released on drop.
#[derive(Debug)]
pub struct StoreGuard {
    root: PathBuf,
    _lock: File,
}

impl RunStore {
    pub fn open(root: impl Into<PathBuf>) -> Result<RunStore, WorkbenchError> {
        let root = root.into();
        let runs = root.join(RUNS_DIR);
        fs::create_dir_all(&runs).map_err(|e| WorkbenchError::io(&runs, e))?;
        Ok(RunStore { root })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Takes the exclusive writer lock without blocking.
    pub fn lock(&self) -> Result<StoreGuard, WorkbenchError> {
        let path = self.root.join(LOCK_FILE);
        let file = OpenOptions::new()
            .create(true)
            .truncate(false)
            .write(true)
            .open(&path)
            .map_err(|e| WorkbenchError::io(&path, e))?;
        match file.try_lock() {
            Ok(()) => Ok(StoreGuard {
                root: self.root.clone(),
                _lock: file,
            }),
            Err(TryLockError::WouldBlock) => Err(WorkbenchError::StoreLocked(self.root.clone())),
            Err(TryLockError::Error(e)) => Err(WorkbenchError::io(&path, e)),
        }
    }

    pub fn list(&self) -> Result<Vec<RunId>, WorkbenchError> {
        list_runs(&self.root)
    }

    pub fn run_dir(&self, id: &RunId) -> PathBuf {
        self.root.join(RUNS_DIR).join(id.as_str())
    }
}

impl StoreGuard {
    pub fn store_run(&self, s: &Scenario, r: &AssessmentReport) -> Result<RunId, WorkbenchError> {
        let scenario_text = scenario_to_string(s);
        let report_json = render_report_structured(r);
        let report_text = render_report_text(r);

        let mut hasher = Sha256::new();
        hasher.update(scenario_text.as_bytes());
        hasher.update(report_json.as_bytes());
        let digest = hex::encode(hasher.finalize());

        let runs = self.root.join(RUNS_DIR);
        let (run_id, created_at) = loop {
            let now = chrono::Utc::now();
            let stamp = now.format("%Y%m%dT%H%M%S%.6fZ").to_string();
            let id = RunId(format!("{stamp}-{}", &digest[..16]));
            // timestamps are the only varying part for identical content
            if !runs.join(id.as_str()).exists() {
                break (id, now.to_rfc3339());
            }
            std::thread::sleep(std::time::Duration::from_micros(1));
        };

        let meta = RunMeta {
            run_id: run_id.clone(),
            created_at,
            digest,
            label: s.label.clone(),
            schema_version: s.schema_version,
        };
        let mut meta_text = serde_json::to_string_pretty(&meta).expect("run metadata serializes");
        meta_text.push('\n');

        let staging = self.root.join(format!("{STAGING_PREFIX}{run_id}"));
        fs::create_dir(&staging).map_err(|e| WorkbenchError::io(&staging, e))?;
        for (name, contents) in [
            ("scenario.json", &scenario_text),
            ("report.json", &report_json),
            ("report.txt", &report_text),
            ("meta.json", &meta_text),
        ] {
            let path = staging.join(name);
            fs::write(&path, contents).map_err(|e| WorkbenchError::io(&path, e))?;
        }
        let target = runs.join(run_id.as_str());
        fs::rename(&staging, &target).map_err(|e| WorkbenchError::io(&target, e))?;
        Ok(run_id)
    }
}

/// Opens the store, takes the writer lock, writes one run.
pub fn store_run(
    s: &Scenario,
    r: &AssessmentReport,
    store_dir: impl AsRef<Path>,
) -> Result<RunId, WorkbenchError> {
    let store = RunStore::open(store_dir.as_ref())?;
    let guard = store.lock()?;
    guard.store_run(s, r)
}

/// Completed runs, oldest first. A missing store lists as empty.
pub fn list_runs(store_dir: impl AsRef<Path>) -> Result<Vec<RunId>, WorkbenchError> {
    let runs = store_dir.as_ref().join(RUNS_DIR);
    let entries = match fs::read_dir(&runs) {
        Ok(entries) => entries,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(WorkbenchError::io(&runs, e)),
    };
    let mut ids = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| WorkbenchError::io(&runs, e))?;
        if entry.path().is_dir() {
            if let Some(name) = entry.file_name().to_str() {
                if !name.starts_with('.') {
                    ids.push(RunId(name.to_string()));
                }
            }
        }
    }
    ids.sort();
    Ok(ids)
}
