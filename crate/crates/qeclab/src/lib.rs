//! A laboratory for stabilizer and subsystem codes built by random Clifford
//! circuits, with erasure decoding, rank-based recovery statistics,
//! analytical predictions, code expurgation, and exact dense-vector
//! cross-checks.
//!
//! The crate is organized bottom-up:
//!
//! * [`gf2`]: bit-packed GF(2) vectors, matrices, and tracked row reduction.
//! * [`pauli`]: phase-exact Pauli operators.
//! * [`gate`]: two-qubit Cliffords as conjugation tables.
//! * [`code`]: subsystem-code tableaux with measurement and entropy tools.
//! * [`circuit`]: gate geometries and random-gate ensembles.
//! * [`erasure`]: erasure channels and the rank-based erasure decoder.
//! * [`analytics`]: closed-form recovery and failure predictions.
//! * [`expurgation`]: measurement-driven removal of fragile logical pairs.
//! * [`haar`]: dense-vector simulation against Haar-random encodings.
//! * [`stats`]: summaries, fits, and threshold interpolation.
//! * [`config`] / [`experiment`]: declarative experiment plans and the
//!   deterministic, seed-stable runners behind the `qeclab` binary.

pub mod analytics;
pub mod circuit;
pub mod code;
pub mod erasure;
pub mod error;
pub mod gate;
pub mod gf2;
pub mod pauli;

pub use error::{Error, Result};
