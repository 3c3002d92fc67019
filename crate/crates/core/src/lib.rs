//! Exact computations in the Specht module `S^(n,n,n)` of the symmetric
//! group in three diagrammatic bases: polytabloid fork diagrams, M-diagrams
//! and non-elliptic sl3-webs.
//!
//! ```
//! use sl3_specht::{diagram::ForkDiagram, specht::expand_in_m};
//!
//! let v4 = ForkDiagram::from_triples(&[[1, 3, 5], [2, 4, 6]]).unwrap();
//! let x = expand_in_m(&v4);
//! assert_eq!(x.len(), 5);
//! ```

pub mod diagram;
pub mod error;
pub mod json;
pub mod lincomb;
pub mod order;
pub mod permutation;
pub mod specht;
pub mod suite;
pub mod tableau;
pub mod web;
pub mod word;

pub use diagram::{Arc, ForkDiagram};
pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use order::{OrderKind, Poset};
pub use permutation::Permutation;
pub use tableau::Tableau;
pub use web::{Web, WebKey, WebSum};
pub use word::{BoundaryWord, Letter};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/webs.md")]
    mod webs {}
    #[doc = include_str!("../../../book/src/specht.md")]
    mod specht {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
