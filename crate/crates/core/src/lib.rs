//! Classical error-correcting codes and the combinatorial designs carried by
//! their codewords: finite fields, linear codes, weight enumerators, t-designs,
//! the Golay/QR/Pless/Hamming/Reed-Muller constructions, Assmus-Mattson
//! analysis, projective-plane codes, and association schemes.

pub mod acceptance;
pub mod bridge;
pub mod code;
pub mod combinatorics;
pub mod constructions;
pub mod design;
pub mod enumerators;
pub mod error;
pub mod field;
pub mod io;
pub mod matrix;
pub mod schemes;

pub use design::{Design, DesignParams};
pub use code::{LinearCode, WordSet, DEFAULT_BUDGET};
pub use enumerators::WeightDistribution;
pub use error::{Error, Result};
pub use field::{Elem, Field};
pub use matrix::Matrix;
