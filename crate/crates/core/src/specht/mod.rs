//! The module `S^(n,n,n)` over the integers: M-diagram expansion, the
//! symmetric group action, and transition matrices between the bases.

mod action;
mod basis;
mod check;
mod expand;
mod local;
mod matrix;

pub use action::{act_diagram, act_module, generator_matrix};
pub use basis::{layout_order, SpechtBasis, MAX_N};
pub use check::{check_representation, RepresentationReport};
pub use expand::{expand_in_m, expand_in_m_with, expand_sum_in_m, expand_via_webs, measure, ExpansionStats};
pub use local::{local_pattern, resolve_local, LocalPattern};
pub use matrix::{BasisTag, TransitionMatrix};

/// The transition matrix between two bases for `n`.
pub fn transition_matrix(from: BasisTag, to: BasisTag, n: usize) -> crate::Result<TransitionMatrix> {
    SpechtBasis::new(n)?.transition_matrix(from, to)
}
