use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::group::FiniteGroup;
use super::hom::GroupHom;
use super::words::AmalgamPresentation;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// On-disk group description (JSON).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default)]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

/// On-disk homomorphism: paths of two group files (relative to the
/// homomorphism file) and the image array.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomFile {
    pub source: String,
    pub target: String,
    pub images: Vec<usize>,
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile { name: Some(g.name().to_string()), order: g.order(), table: g.table_rows() }
    }

    pub fn into_group(self, limits: &Limits) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::Parse(format!(
                "`order` is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        let name = self.name.unwrap_or_else(|| format!("G{}", self.order));
        FiniteGroup::from_table_with(name, self.table, limits)
    }
}

pub fn parse_group(text: &str, limits: &Limits) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text)?;
    file.into_group(limits)
}

pub fn load_group(path: &Path, limits: &Limits) -> Result<FiniteGroup> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_group(&text, limits).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn load_hom(path: &Path, limits: &Limits) -> Result<GroupHom> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let file: HomFile = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    let source = Arc::new(load_group(&base.join(&file.source), limits)?);
    let target = Arc::new(load_group(&base.join(&file.target), limits)?);
    GroupHom::new(source, target, file.images)
}

/// On-disk amalgam data `G1 <- H -> G2`. Group references are either
/// built-in names (`trivial`, `C<n>`, `S<k>` with `k <= 4`) or paths of
/// group files relative to the presentation file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationFile {
    #[serde(default)]
    pub name: Option<String>,
    pub h: String,
    pub g1: String,
    pub g2: String,
    pub phi1: Vec<usize>,
    pub phi2: Vec<usize>,
}

/// A built-in group for names like `C4` or `S3`, otherwise the group file
/// at `base/reference`.
pub fn resolve_group(reference: &str, base: &Path, limits: &Limits) -> Result<FiniteGroup> {
    if let Some(g) = builtin_group(reference, limits)? {
        return Ok(g);
    }
    load_group(&base.join(reference), limits)
}

pub fn builtin_group(name: &str, limits: &Limits) -> Result<Option<FiniteGroup>> {
    let cap = |n: usize| -> Result<()> {
        if n > limits.max_group_order {
            return Err(Error::SizeCap(format!("group order {n} exceeds cap {}", limits.max_group_order)));
        }
        Ok(())
    };
    if name == "trivial" {
        return Ok(Some(FiniteGroup::trivial()));
    }
    if let Some(n) = name.strip_prefix('C').and_then(|r| r.parse::<usize>().ok()) {
        if n == 0 {
            return Err(Error::Parse("C0 is not a group".into()));
        }
        cap(n)?;
        return Ok(Some(FiniteGroup::cyclic(n)));
    }
    if let Some(k) = name.strip_prefix('S').and_then(|r| r.parse::<usize>().ok()) {
        if !(1..=4).contains(&k) {
            return Err(Error::Parse(format!("built-in symmetric groups are S1..S4, got {name}")));
        }
        cap((1..=k).product())?;
        return Ok(Some(FiniteGroup::symmetric(k)));
    }
    Ok(None)
}

impl PresentationFile {
    pub fn build(&self, base: &Path, limits: &Limits) -> Result<AmalgamPresentation> {
        let h = Arc::new(resolve_group(&self.h, base, limits)?);
        let g1 = Arc::new(resolve_group(&self.g1, base, limits)?);
        let g2 = Arc::new(resolve_group(&self.g2, base, limits)?);
        let phi1 = GroupHom::new(h.clone(), g1, self.phi1.clone())?;
        let phi2 = GroupHom::new(h, g2, self.phi2.clone())?;
        let name = self.name.clone().unwrap_or_else(|| format!("{}*{}{}", self.g1, self.h, self.g2));
        AmalgamPresentation::new(name, phi1, phi2)
    }

    pub fn from_presentation(p: &AmalgamPresentation) -> Self {
        use super::words::Factor;
        PresentationFile {
            name: Some(p.name().to_string()),
            h: p.amalgamated().name().to_string(),
            g1: p.factor(Factor::One).name().to_string(),
            g2: p.factor(Factor::Two).name().to_string(),
            phi1: p.structure_map(Factor::One).images().to_vec(),
            phi2: p.structure_map(Factor::Two).images().to_vec(),
        }
    }
}

pub fn load_presentation(path: &Path, limits: &Limits) -> Result<AmalgamPresentation> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let file: PresentationFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    file.build(path.parent().unwrap_or_else(|| Path::new(".")), limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        let g = FiniteGroup::symmetric(3);
        let text = serde_json::to_string(&GroupFile::from_group(&g)).unwrap();
        assert_eq!(parse_group(&text, &Limits::default()).unwrap(), g);
    }

    #[test]
    fn order_mismatch() {
        let text = r#"{"order": 3, "table": [[0,1],[1,0]]}"#;
        assert!(matches!(parse_group(text, &Limits::default()), Err(Error::Parse(_))));
    }

    #[test]
    fn hom_files() {
        let dir = std::env::temp_dir().join(format!("tannaka-hom-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        fs::write(dir.join("c2.json"), r#"{"name":"C2","order":2,"table":[[0,1],[1,0]]}"#).unwrap();
        let c4 = GroupFile::from_group(&FiniteGroup::cyclic(4));
        fs::write(dir.join("c4.json"), serde_json::to_string(&c4).unwrap()).unwrap();
        fs::write(dir.join("phi.json"), r#"{"source":"c2.json","target":"c4.json","images":[0,2]}"#).unwrap();
        let phi = load_hom(&dir.join("phi.json"), &Limits::default()).unwrap();
        assert!(phi.is_injective());
        fs::write(dir.join("bad.json"), r#"{"source":"c2.json","target":"c4.json","images":[0,1]}"#).unwrap();
        assert!(load_hom(&dir.join("bad.json"), &Limits::default()).is_err());
        fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn builtin_presentation() {
        let text = r#"{"h":"C2","g1":"C4","g2":"C4","phi1":[0,2],"phi2":[0,2]}"#;
        let f: PresentationFile = serde_json::from_str(text).unwrap();
        let p = f.build(Path::new("."), &Limits::default()).unwrap();
        assert!(p.is_injective());
        assert_eq!(p.name(), "C4*C2C4");
        assert!(builtin_group("S5", &Limits::default()).is_err());
        assert!(builtin_group("foo.json", &Limits::default()).unwrap().is_none());
    }
}
