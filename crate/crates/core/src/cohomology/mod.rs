//! Belavin–Drinfeld cohomology for the double g(K)⊕g(K): centralizers, the cocycle
//! condition in the quadratic Galois layer, and constructive normalization.

mod centralizer;
mod factor;
mod orthogonal;
mod report;
mod sl;

pub use centralizer::{
    centralizer_member, centralizer_pattern_o_d_example, centralizer_pattern_o_dj, centralizer_pattern_sl,
    sl_s_classes, CentralizerPattern, SlotConstraint,
};
pub use factor::{factor_qd, galois_transport, is_bd_cocycle};
pub use orthogonal::{
    build_x0_odd, classify_o_even_example, classify_o_odd, d_example_triple, d_example_x0, default_x0_vector,
    normalize_o_even,
};
pub use report::{CocycleClass, CocycleReport, GaloisCheck};
pub use sl::{default_rbd, normalize_sl};
