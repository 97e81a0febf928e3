//! Twisted Belavin–Drinfeld cohomology for the double g(K[j]): the real form L,
//! Lagrangian complements, twisted cocycles and their normalization on sl(n).

mod lagrangian;
mod normalize;
mod real_form;

pub use lagrangian::{base_subspace, default_w0, l_cartan, l_subspace, lagrangian_check, n_plus, LagrangianCheck, SubspaceSpec};
pub use normalize::{
    build_twisted_r, triple_obstruction, twisted_normalize_sl, twisted_residual, verify_twisted_cocycle, DiagonalMethod,
    TwistedClass, TwistedReport,
};
pub use real_form::{build_x0_twisted, check_l_member, find_x_conj, l_basis, lemma_s_twist, s_matrix};
