//! Lie algebra models, root systems, tensors and forms.

mod forms;
mod group;
mod model;
mod roots;
mod tensor;

pub use forms::{check_two_cocycle, form_q_eval, span_coordinates, TwoCocycleCheck};
pub use group::{group_member, split_form, GroupKind};
pub use model::{antidiagonal, BasisLabel, LieModel, ModelKind};
pub use roots::{Root, RootSystem, RootType};
pub use tensor::{wedge_terms, Tensor2, Tensor3};
