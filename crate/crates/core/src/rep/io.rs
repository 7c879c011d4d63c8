use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::glue::{AmalgamRep, GluedTriple};
use super::representation::Representation;
use crate::error::{Error, Result};
use crate::exactalg::{matrix_from_strings, matrix_to_strings, Field};
use crate::groups::io::{resolve_group, PresentationFile};
use crate::groups::{Factor, FiniteGroup};
use crate::limits::Limits;

pub type MatrixText = Vec<Vec<String>>;

/// Matrices of a representation: either one per group element (in element
/// order) or images of some generators, extended multiplicatively.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RepData {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<MatrixText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorImage>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorImage {
    pub element: usize,
    pub matrix: MatrixText,
}

/// On-disk representation: group reference, field, and matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RepFile {
    pub group: String,
    pub field: String,
    #[serde(flatten)]
    pub data: RepData,
}

/// On-disk glued triple `(V1, V2, c)` over an inline presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleFile {
    pub presentation: PresentationFile,
    pub field: String,
    pub v1: RepData,
    pub v2: RepData,
    pub c: MatrixText,
}

impl RepData {
    pub fn from_rep(r: &Representation) -> Self {
        RepData {
            dim: r.dim(),
            matrices: Some(r.matrices().iter().map(matrix_to_strings).collect()),
            generators: None,
        }
    }

    pub fn build(&self, group: Arc<FiniteGroup>, field: Field) -> Result<Representation> {
        match (&self.matrices, &self.generators) {
            (Some(ms), None) => {
                let mats = ms.iter().map(|m| matrix_from_strings(field, m)).collect::<Result<Vec<_>>>()?;
                Representation::new(group, field, self.dim, mats)
            }
            (None, Some(gens)) => {
                let gens = gens
                    .iter()
                    .map(|g| {
                        if g.element >= group.order() {
                            return Err(Error::IndexOutOfRange(format!("generator element {}", g.element)));
                        }
                        Ok((g.element, matrix_from_strings(field, &g.matrix)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Representation::from_generators(group, field, self.dim, &gens)
            }
            _ => Err(Error::Parse("give exactly one of `matrices` and `generators`".into())),
        }
    }
}

impl RepFile {
    pub fn from_rep(r: &Representation) -> Self {
        RepFile { group: r.group().name().to_string(), field: r.field().to_string(), data: RepData::from_rep(r) }
    }

    pub fn build(&self, base: &Path, limits: &Limits) -> Result<Representation> {
        let field = Field::parse(&self.field)?;
        let group = Arc::new(resolve_group(&self.group, base, limits)?);
        self.data.build(group, field)
    }
}

impl TripleFile {
    pub fn from_triple(t: &GluedTriple) -> Self {
        TripleFile {
            presentation: PresentationFile::from_presentation(t.presentation()),
            field: t.field().to_string(),
            v1: RepData::from_rep(t.v1()),
            v2: RepData::from_rep(t.v2()),
            c: matrix_to_strings(t.c()),
        }
    }

    pub fn build(&self, base: &Path, limits: &Limits) -> Result<GluedTriple> {
        let field = Field::parse(&self.field)?;
        let p = Arc::new(self.presentation.build(base, limits)?);
        let v1 = self.v1.build(p.factor(Factor::One).clone(), field)?;
        let v2 = self.v2.build(p.factor(Factor::Two).clone(), field)?;
        let c = matrix_from_strings(field, &self.c)?;
        GluedTriple::new(p, v1, v2, c)
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn base(path: &Path) -> &Path {
    path.parent().unwrap_or_else(|| Path::new("."))
}

pub fn load_rep(path: &Path, limits: &Limits) -> Result<Representation> {
    let file: RepFile =
        serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    file.build(base(path), limits)
}

pub fn load_triple(path: &Path, limits: &Limits) -> Result<GluedTriple> {
    let file: TripleFile =
        serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    file.build(base(path), limits)
}

/// Serialized form of an amalgam representation, as the triple
/// `(ρ1, ρ2, I)`.
pub fn amalgam_rep_file(r: &AmalgamRep) -> TripleFile {
    TripleFile::from_triple(&super::glue::split(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;

    #[test]
    fn triple_roundtrip() {
        let t = super::super::examples::v_a_triple(&Scalar::from_i64(Field::Rational, 3)).unwrap();
        let text = serde_json::to_string(&TripleFile::from_triple(&t)).unwrap();
        let back: TripleFile = serde_json::from_str(&text).unwrap();
        let t2 = back.build(Path::new("."), &Limits::default()).unwrap();
        assert_eq!(t2.v2(), t.v2());
        assert_eq!(t2.c(), t.c());
    }

    #[test]
    fn generator_form() {
        let text = r#"{"group":"C3","field":"2^2","dim":1,"generators":[{"element":1,"matrix":[["2^2:[0,1]"]]}]}"#;
        let f: RepFile = serde_json::from_str(text).unwrap();
        let r = f.build(Path::new("."), &Limits::default()).unwrap();
        assert_eq!(r.dim(), 1);
        let bad = r#"{"group":"C3","field":"2^2","dim":1,"generators":[{"element":1,"matrix":[["2^2:[1,1]"]]}]}"#;
        let f: RepFile = serde_json::from_str(bad).unwrap();
        // t+1 has order 3 too, so this is also valid; t+1 squared is t.
        assert!(f.build(Path::new("."), &Limits::default()).is_ok());
        let wrong = r#"{"group":"C2","field":"2^2","dim":1,"generators":[{"element":1,"matrix":[["2^2:[0,1]"]]}]}"#;
        let f: RepFile = serde_json::from_str(wrong).unwrap();
        assert!(f.build(Path::new("."), &Limits::default()).is_err());
    }
}
