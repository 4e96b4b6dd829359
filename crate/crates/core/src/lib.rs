//! Exact arithmetic for deciding when a graph is determined by its
//! generalized `A_α`-spectrum.
//!
//! The crate is layered: [`graph`] holds simple graphs, their graph6 and
//! edge-list forms, canonical labeling and small-order enumeration;
//! [`linalg`] provides exact integer matrices (Bareiss determinants, Smith
//! normal form, ranks over `F_p`, rational inverses); [`ntheory`] factors
//! the resulting determinants; [`alpha`] builds walk matrices and evaluates
//! the arithmetic criterion; [`oracle`] checks the criterion against
//! exhaustive mate search.

pub mod alpha;
pub mod graph;
pub mod linalg;
pub mod ntheory;
pub mod oracle;
pub mod par;
mod serde_util;
