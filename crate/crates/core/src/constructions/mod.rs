//! Explicit codes and designs: Hamming, Reed-Muller, quadratic residue, Pless
//! symmetry, Golay (several routes), the hexacode, small catalog designs, and
//! projective/affine geometries.

mod catalog;
mod codes;
mod golay;

use std::fmt;

pub use catalog::{ag_design, catalog_design, pg_design, CATALOG_DESIGNS};
pub use codes::{
    extended_hamming8, hamming, hexacode, paley_matrix, pless_symmetry, qr_code, qr_code_checked, reed_muller,
    PaleyMatrix,
};
pub use golay::{golay, hexacode_table, icosahedron_adjacency, lexicode, mog_member, GolayVariant};

use crate::code::LinearCode;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]_{}", self.n, self.k, self.d, self.q)
    }
}

/// A built code with its claimed and measured parameters.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub code: LinearCode,
    pub claimed: CodeParams,
    pub verified: CodeParams,
    pub matches: bool,
}

pub fn verify_construction(code: LinearCode, claimed: CodeParams, budget: u128) -> Result<ConstructionReport> {
    let d = crate::enumerators::min_distance(&code, budget)?;
    let verified = CodeParams { q: code.q(), n: code.n(), k: code.k(), d };
    Ok(ConstructionReport { matches: verified == claimed, code, claimed, verified })
}
