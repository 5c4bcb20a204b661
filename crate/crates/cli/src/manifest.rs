use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use serde::Serialize;
use serde_json::Value;

/// Provenance record written next to every output artifact.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub inputs: Vec<PathBuf>,
    /// Flags given explicitly on the command line.
    pub config_overrides: BTreeMap<String, Value>,
    pub outputs: Vec<PathBuf>,
    pub wall_time_seconds: f64,
    pub version: String,
    pub exit_status: i32,
    /// UTC, ISO-8601.
    pub started_at: String,
    pub seed: Option<u64>,
}

impl RunManifest {
    pub fn new(command: &str, seed: Option<u64>) -> Self {
        Self {
            command: command.to_string(),
            inputs: Vec::new(),
            config_overrides: BTreeMap::new(),
            outputs: Vec::new(),
            wall_time_seconds: 0.0,
            version: env!("CARGO_PKG_VERSION").to_string(),
            exit_status: 0,
            started_at: Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true),
            seed,
        }
    }

    pub fn set<V: Serialize>(&mut self, key: &str, value: Option<V>) {
        if let Some(v) = value {
            self.config_overrides.insert(key.to_string(), serde_json::to_value(v).expect("flag values serialize"));
        }
    }
}

/// `out.json` -> `out.json.manifest.json`.
pub fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}
