//! Size caps shared by the bounded computations.

use std::env;

/// Caps on the sizes of exhaustive computations.
///
/// Every field can be overridden through an environment variable, see
/// [`Limits::from_env`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted group order (`TANNAKA_MAX_GROUP_ORDER`).
    pub max_group_order: usize,
    /// Largest word length for reduced-word enumeration (`TANNAKA_MAX_WORD_DEGREE`).
    pub max_word_degree: usize,
    /// Largest truncation degree for coherent elements (`TANNAKA_MAX_DEGREE`).
    pub max_degree: usize,
    /// Largest number of coordinates of a truncated element (`TANNAKA_MAX_COORDINATES`).
    pub max_coordinates: usize,
    /// Largest dimension of a tensor power `V^{⊗p}` (`TANNAKA_MAX_TENSOR_DIM`).
    pub max_tensor_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 24,
            max_word_degree: 6,
            max_degree: 4,
            max_coordinates: 200_000,
            max_tensor_dim: 256,
        }
    }
}

impl Limits {
    /// Defaults overridden by any `TANNAKA_MAX_*` variables that parse as
    /// integers.
    pub fn from_env() -> Self {
        let mut l = Limits::default();
        let read = |name: &str, slot: &mut usize| {
            if let Some(v) = env::var(name).ok().and_then(|s| s.trim().parse().ok()) {
                *slot = v;
            }
        };
        read("TANNAKA_MAX_GROUP_ORDER", &mut l.max_group_order);
        read("TANNAKA_MAX_WORD_DEGREE", &mut l.max_word_degree);
        read("TANNAKA_MAX_DEGREE", &mut l.max_degree);
        read("TANNAKA_MAX_COORDINATES", &mut l.max_coordinates);
        read("TANNAKA_MAX_TENSOR_DIM", &mut l.max_tensor_dim);
        l
    }
}
