//! Finite weakly dicomplemented lattices: construction, axioms, filters,
//! S-filters, spectral classification and congruences, each theorem
//! available as an exhaustive law check on finite instances.
#![no_std]

extern crate alloc;

pub mod congruence;
pub mod dicomplement;
pub mod filters;
pub mod identities;
pub mod instances;
pub mod lattice;
pub mod laws;
mod ortho;
pub mod set;
pub mod sfilters;
pub mod skeleton;
pub mod spectra;

pub use congruence::{Congruence, CongruenceError};
pub use dicomplement::{Axiom, ComplementSide, DicomplementError, Dicomplementation, DualWcl, Side, Unary, Wcl};
pub use filters::FilterError;
pub use identities::check_identities;
pub use lattice::{BoundedLattice, LatticeError, LatticeSpec, MAX_ELEMENTS};
pub use laws::{LawReport, LawResult, Status};
pub use set::ElementSet;
pub use skeleton::SkeletonAlgebra;
pub use spectra::{FilterClassification, Universe};

/// Size limits for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub lattice: usize,
    pub dicomplementations: usize,
    pub filters: usize,
    pub congruences: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { lattice: MAX_ELEMENTS, dicomplementations: 6, filters: 24, congruences: 12 }
    }
}

impl Caps {
    /// Every cap set to `n` (bounded by [`MAX_ELEMENTS`]).
    pub fn uniform(n: usize) -> Self {
        let n = n.min(MAX_ELEMENTS);
        Caps { lattice: n, dicomplementations: n, filters: n, congruences: n }
    }
}
