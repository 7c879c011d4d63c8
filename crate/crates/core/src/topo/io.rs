use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::local::LocalSystem;
use super::models::builtin_poset;
use super::pi1::{pi1_presentation, realize};
use super::poset::FinitePoset;
use crate::error::{Error, Result};
use crate::exactalg::{matrix_from_strings, matrix_to_strings, Field};
use crate::rep::io::MatrixText;

/// A poset by built-in name (`circle4`, `circle6`, `wedge7`, `cone<k>`) or
/// inline as points plus generating relations `x < y`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetRef {
    Builtin(String),
    Inline(PosetFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetFile {
    pub points: Vec<String>,
    pub relations: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverMatrix {
    pub lower: String,
    pub upper: String,
    /// `stalk(upper) → stalk(lower)`.
    pub matrix: MatrixText,
}

/// A local system either by its cover matrices (covers left out carry the
/// identity) or by loop matrices realized on the edge-path presentation at
/// point 0.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LocalSystemFile {
    pub poset: PosetRef,
    pub field: String,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<CoverMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loops: Option<Vec<MatrixText>>,
}

impl PosetFile {
    pub fn from_poset(p: &FinitePoset) -> Self {
        PosetFile {
            points: p.names().to_vec(),
            relations: p.covers().iter().map(|&(x, y)| (p.name(x).to_string(), p.name(y).to_string())).collect(),
        }
    }

    pub fn build(&self) -> Result<FinitePoset> {
        let names: Vec<&str> = self.points.iter().map(String::as_str).collect();
        let rel: Vec<(&str, &str)> = self.relations.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        FinitePoset::from_names(&names, &rel)
    }
}

impl PosetRef {
    pub fn build(&self) -> Result<FinitePoset> {
        match self {
            PosetRef::Builtin(name) => builtin_poset(name),
            PosetRef::Inline(f) => f.build(),
        }
    }
}

impl LocalSystemFile {
    pub fn from_local(l: &LocalSystem) -> Self {
        let p = l.poset();
        LocalSystemFile {
            poset: PosetRef::Inline(PosetFile::from_poset(p)),
            field: l.field().to_string(),
            rank: l.rank(),
            maps: p
                .covers()
                .iter()
                .zip(l.maps())
                .map(|(&(x, y), m)| CoverMatrix {
                    lower: p.name(x).to_string(),
                    upper: p.name(y).to_string(),
                    matrix: matrix_to_strings(m),
                })
                .collect(),
            loops: None,
        }
    }

    pub fn build(&self) -> Result<LocalSystem> {
        let field = Field::parse(&self.field)?;
        let poset = Arc::new(self.poset.build()?);
        if let Some(loops) = &self.loops {
            if !self.maps.is_empty() {
                return Err(Error::Parse("give either `maps` or `loops`".into()));
            }
            let gens = loops.iter().map(|m| matrix_from_strings(field, m)).collect::<Result<Vec<_>>>()?;
            let pres = pi1_presentation(&poset, 0)?;
            return realize(poset, field, self.rank, &pres, &gens);
        }
        let mut maps = LocalSystem::trivial(poset.clone(), field, self.rank).maps().to_vec();
        for c in &self.maps {
            let (x, y) = (poset.index_of(&c.lower)?, poset.index_of(&c.upper)?);
            let k = poset
                .cover_index(x, y)
                .ok_or_else(|| Error::InvalidLocalSystem(format!("{} ⋖ {} is not a covering pair", c.lower, c.upper)))?;
            maps[k] = matrix_from_strings(field, &c.matrix)?;
        }
        LocalSystem::new(poset, field, self.rank, maps)
    }
}

pub fn load_local_system(path: &Path) -> Result<LocalSystem> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let file: LocalSystemFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    file.build()
}
