//! The functor `Fr₊` on representations of finite groups over `F_{p^m}`:
//! `V ↦ image(H^0(S, V^{⊗p}) → H_0(S, V^{⊗p}))` with `S` permuting the
//! tensor factors, together with the semilinear identification
//! `t: V^{(p)} → Fr₊(V)` and probes for exactness and full faithfulness.

mod functor;
mod probes;
mod tensor;

pub use functor::{
    fr_plus, fr_plus_linear, fr_plus_morphism, fr_plus_with, t_map, FrPlusResult, FrPlusSummary, TMapReport,
    TwistedSpace,
};
pub use probes::{
    compare_choices, exactness_defect, exactness_probe, faithfulness_probe, fr_corpus, is_monomial,
    tensor_dimension_check, untwist_witness, ChoiceComparison, ExactnessReport, FaithfulnessReport,
    ShortExactSequence, UntwistReport,
};
pub use tensor::{SymmetryChoice, TensorPowerAction};
