//! Magic state factory models.
//!
//! The per-state error, footprint and production rate of each factory are
//! table entries keyed by (kind, d1, d2), loaded from a versioned data file.
//! The CCZ column is anchored at (17, 27) where three billion states carry a
//! total distillation error of 6.4%; other distances scale that anchor (one
//! decade of suppression per +2 in d2, a factor 10^0.4 per +2 in d1). The T
//! entries are a declared low-fidelity fallback: a tenth of the CCZ error at
//! twice the cycles per delivered Toffoli-equivalent state.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactoryKind {
    Ccz,
    T,
}

impl FactoryKind {
    pub const ALL: [FactoryKind; 2] = [FactoryKind::Ccz, FactoryKind::T];
}

impl fmt::Display for FactoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactoryKind::Ccz => write!(f, "ccz"),
            FactoryKind::T => write!(f, "t"),
        }
    }
}

/// One factory configuration: error and production rate per magic state,
/// and the footprint in level-2 logical qubits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FactoryModel {
    pub kind: FactoryKind,
    pub d1: u32,
    pub d2: u32,
    pub error_per_state: f64,
    pub footprint_w: u32,
    pub footprint_h: u32,
    pub cycles_per_state: u32,
}

#[derive(Debug, Clone)]
pub struct FactoryTable {
    entries: HashMap<(FactoryKind, u32, u32), FactoryModel>,
}

const BUILTIN: &str = include_str!("../data/factories.csv");

impl FactoryTable {
    /// The table shipped with the crate.
    pub fn builtin() -> &'static FactoryTable {
        static TABLE: OnceLock<FactoryTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            FactoryTable::parse(BUILTIN).expect("builtin factory table parses")
        })
    }

    pub fn load(path: &Path) -> Result<FactoryTable> {
        FactoryTable::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<FactoryTable> {
        let mut entries = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') || line.starts_with("kind,") {
                continue;
            }
            let parse = |reason: &str| Error::FactoryTableParse {
                line: i + 1,
                reason: reason.to_string(),
            };
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 7 {
                return Err(parse("expected 7 comma-separated fields"));
            }
            let kind = match fields[0] {
                "ccz" => FactoryKind::Ccz,
                "t" => FactoryKind::T,
                other => return Err(parse(&format!("unknown factory kind {other:?}"))),
            };
            let model = FactoryModel {
                kind,
                d1: fields[1].parse().map_err(|_| parse("bad d1"))?,
                d2: fields[2].parse().map_err(|_| parse("bad d2"))?,
                error_per_state: fields[3].parse().map_err(|_| parse("bad error_per_state"))?,
                footprint_w: fields[4].parse().map_err(|_| parse("bad footprint_w"))?,
                footprint_h: fields[5].parse().map_err(|_| parse("bad footprint_h"))?,
                cycles_per_state: fields[6].parse().map_err(|_| parse("bad cycles_per_state"))?,
            };
            entries.insert((kind, model.d1, model.d2), model);
        }
        Ok(FactoryTable { entries })
    }

    pub fn get(&self, kind: FactoryKind, d1: u32, d2: u32) -> Result<&FactoryModel> {
        self.entries
            .get(&(kind, d1, d2))
            .ok_or(Error::UnsupportedDistance { kind, d1, d2 })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
