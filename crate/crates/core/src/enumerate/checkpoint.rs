//! Per-level search state, written after every completed order so an
//! interrupted search resumes from its last level.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6, Graph6Error};

use super::{LevelStats, Mode, PruneFlags, SearchConfig};

const FILE_NAME: &str = "checkpoint.json";
const FORMAT: u32 = 1;

#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed checkpoint: {0}")]
    Malformed(String),
    #[error("checkpoint graph {index}: {source}")]
    Graph6 { index: usize, source: Graph6Error },
    #[error("checkpoint was written by a different search ({0})")]
    Mismatch(String),
}

/// Everything that determines the search tree apart from the order bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fingerprint {
    pub mode: Mode,
    pub k: usize,
    pub forbidden: Vec<String>,
    pub connected_only: bool,
    pub prune: PruneFlags,
}

impl Fingerprint {
    pub fn of(cfg: &SearchConfig, mode: Mode) -> Self {
        Fingerprint {
            mode,
            k: cfg.k,
            forbidden: cfg.forbidden.iter().map(to_graph6).collect(),
            connected_only: cfg.connected_only,
            prune: cfg.prune,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Checkpoint {
    pub format: u32,
    pub search: Fingerprint,
    pub completed_order: usize,
    /// graph6 of the graphs to expand next, canonically labelled
    pub frontier: Vec<String>,
    /// graph6 of everything emitted so far, in output order
    pub emitted: Vec<String>,
    pub levels: Vec<LevelStats>,
}

pub(super) fn file_in(dir: &Path) -> PathBuf {
    dir.join(FILE_NAME)
}

impl Checkpoint {
    pub fn new(
        search: &Fingerprint,
        completed_order: usize,
        frontier: &[Graph],
        emitted: &[Graph],
        levels: &[LevelStats],
    ) -> Self {
        Checkpoint {
            format: FORMAT,
            search: search.clone(),
            completed_order,
            frontier: frontier.iter().map(to_graph6).collect(),
            emitted: emitted.iter().map(to_graph6).collect(),
            levels: levels.to_vec(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CheckpointError> {
        let cp: Checkpoint =
            serde_json::from_str(text).map_err(|e| CheckpointError::Malformed(e.to_string()))?;
        if cp.format != FORMAT {
            return Err(CheckpointError::Malformed(format!("unknown format {}", cp.format)));
        }
        if cp.levels.len() != cp.completed_order
            || cp.levels.iter().enumerate().any(|(i, l)| l.order != i + 1)
        {
            return Err(CheckpointError::Malformed("level list does not match order".into()));
        }
        Ok(cp)
    }

    /// The checkpoint in `dir`, if one exists. A checkpoint from a search
    /// with a different fingerprint is an error rather than ignored.
    pub fn latest(dir: &Path, expect: &Fingerprint) -> Result<Option<Self>, CheckpointError> {
        let path = file_in(dir);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(CheckpointError::Io { path, source }),
        };
        let cp = Self::parse(&text)?;
        if &cp.search != expect {
            return Err(CheckpointError::Mismatch(format!(
                "found {:?}, expected {:?}",
                cp.search, expect
            )));
        }
        Ok(Some(cp))
    }

    /// Writes via a temporary file and rename, so a crash mid-write leaves
    /// the previous level intact.
    pub fn save(&self, dir: &Path) -> Result<(), CheckpointError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CheckpointError::Io { path, source }
        };
        std::fs::create_dir_all(dir).map_err(io(dir))?;
        let tmp = dir.join(format!("{FILE_NAME}.tmp"));
        let text = serde_json::to_string(self).expect("checkpoint serializes");
        std::fs::write(&tmp, text).map_err(io(&tmp))?;
        let path = file_in(dir);
        std::fs::rename(&tmp, &path).map_err(io(&path))
    }

    fn decode(list: &[String]) -> Result<Vec<Graph>, CheckpointError> {
        list.iter()
            .enumerate()
            .map(|(index, s)| from_graph6(s).map_err(|source| CheckpointError::Graph6 { index, source }))
            .collect()
    }

    pub fn frontier_graphs(&self) -> Result<Vec<Graph>, CheckpointError> {
        Self::decode(&self.frontier)
    }

    pub fn emitted_graphs(&self) -> Result<Vec<Graph>, CheckpointError> {
        Self::decode(&self.emitted)
    }
}
