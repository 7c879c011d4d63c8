//! Named examples, so scenarios and the command line need no input files.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Scalar};
use crate::groups::{AmalgamPresentation, FiniteGroup, GroupHom};
use crate::rep::{sl2_rep, v_a, AmalgamRep};
use crate::topo::models::{builtin_poset, wedge_cover};
use crate::topo::{Cover, FinitePoset};

/// `(name, description)` of every amalgam preset.
pub const PRESENTATIONS: &[(&str, &str)] = &[
    ("c2-star-c2", "C2 * C2, the infinite dihedral group"),
    ("c2-amalg-c2", "C2 *_C2 C2, amalgamation over the whole group"),
    ("c4-amalg-c4", "C4 *_C2 C4, amalgamated along the squares"),
    ("c2-star-c3", "C2 * C3"),
    ("c4-star-c6", "C4 * C6, mapping onto SL2(Z)"),
];

/// `(name, description)` of every representation and space preset.
pub const OTHER_PRESETS: &[(&str, &str)] = &[
    ("v-a", "the 2-dimensional V_a family of C2 * C2 (parameter a != 0, 1)"),
    ("sl2", "C4 * C6 acting on Q^2 through SL2(Z)"),
    ("circle4", "4-point pseudo-circle"),
    ("circle6", "6-point circle model"),
    ("wedge7", "7-point wedge of two pseudo-circles, with its standard cover"),
];

fn cyclic(n: usize) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::cyclic(n))
}

pub fn presentation(name: &str) -> Result<Arc<AmalgamPresentation>> {
    let p = match name {
        "c2-star-c2" => AmalgamPresentation::free("C2*C2", cyclic(2), cyclic(2)),
        "c2-star-c3" => AmalgamPresentation::free("C2*C3", cyclic(2), cyclic(3)),
        "c4-star-c6" => AmalgamPresentation::free("C4*C6", cyclic(4), cyclic(6)),
        "c2-amalg-c2" => {
            AmalgamPresentation::new("C2*_C2 C2", GroupHom::identity(cyclic(2)), GroupHom::identity(cyclic(2)))?
        }
        "c4-amalg-c4" => {
            let sq = GroupHom::new(cyclic(2), cyclic(4), vec![0, 2])?;
            AmalgamPresentation::new("C4*_C2 C4", sq.clone(), sq)?
        }
        _ => return Err(Error::Parse(format!("unknown presentation preset `{name}`"))),
    };
    Ok(Arc::new(p))
}

/// `V_a` for an integer parameter over `field`.
pub fn v_a_preset(a: i64, field: Field) -> Result<AmalgamRep> {
    v_a(&Scalar::from_i64(field, a))
}

pub fn sl2_preset() -> AmalgamRep {
    sl2_rep()
}

pub fn poset(name: &str) -> Result<FinitePoset> {
    builtin_poset(name)
}

pub fn cover(name: &str) -> Result<Cover> {
    match name {
        "wedge7" => Ok(wedge_cover()),
        _ => Err(Error::Parse(format!("no standard cover for `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_preset_builds() {
        for (name, _) in PRESENTATIONS {
            assert!(presentation(name).is_ok(), "{name}");
        }
        assert!(presentation("nope").is_err());
        assert!(v_a_preset(2, Field::Rational).is_ok());
        assert!(cover("wedge7").is_ok());
        assert!(poset("circle6").is_ok());
    }
}
