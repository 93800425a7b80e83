//! Workbench for function-correcting codes over b-symbol read channels.
//!
//! The pipeline, end to end:
//!
//! 1. [`field`] — exact GF(p^m) arithmetic (q <= 256) and words over it,
//!    with a fixed global enumeration order.
//! 2. [`bsymbol`] — width-b cyclic read vectors, the read distance d_b and
//!    read weight w_b, and the aggregate weight-sum identity.
//! 3. [`linfunc`] — full-rank linear functions, coset partitions, and the
//!    kernel weight sum s.
//! 4. [`reqmatrix`] — pairwise distance-demand matrices for a message set
//!    under a classifier (thresholds 2t-b+2 and 2t+b) and their structural
//!    properties.
//! 5. [`codesearch`] — exact minimal-length codebooks meeting a demand
//!    matrix, by depth-first search bracketed by a greedy construction.
//! 6. [`bounds`] — the Plotkin-style redundancy lower bound and its special
//!    forms, evaluated in exact rational arithmetic, plus the sandwich
//!    report tying bound, searches and oracle together.
//! 7. [`oracle`] — brute-force ground truth at tiny scale: encoder validity,
//!    exact optimal redundancy, and exhaustive decode simulation.
//!
//! Everything is exact: integers and rationals only, no floating point.

pub mod bounds;
pub mod bsymbol;
pub mod codesearch;
pub mod error;
pub mod field;
pub mod linfunc;
pub mod oracle;
pub mod reqmatrix;

pub use error::{Error, Result};
