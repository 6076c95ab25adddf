//! Exact computational kernel for the coset Griess algebras of the
//! sqrt(2)E8 lattice vertex operator algebra.
//!
//! The crate rebuilds, from first principles, the finite data attached to
//! the nine nodes of the extended E8 diagram:
//!
//! * the E8 root system, the nine sublattices `L(i)` and their coset
//!   decompositions ([`lattice`], [`cases`]);
//! * the weight-2 Griess algebras `B = span{omega~^k, X^j}` with their
//!   structure constants derived from lattice vertex-operator rules and
//!   checked entry by entry against the published tables ([`weight2`],
//!   [`mod@derive`], [`algebra`]);
//! * conformal vectors of `B`: exact verification of the published solution
//!   lists and a total-degree homotopy enumeration certifying the counts and
//!   central-charge histograms ([`poly`], [`solver`]);
//! * exact truncated q-series: theta functions, twisted affine sl2 traces,
//!   parafermion and Virasoro minimal-model characters, and the character
//!   identities proving the module decompositions ([`chars`]).
//!
//! Exact scalars are [`rat::Rat`] and the cyclotomic numbers [`cyc::Cyc`];
//! kernels that also run in floating point (polynomial evaluation, series
//! convolution) are generic over [`scalar::Field`] with the concrete
//! instantiations aliased below.

pub mod acceptance;
pub mod algebra;
pub mod cases;
pub mod chars;
pub mod cyc;
pub mod derive;
pub mod lattice;
pub mod linalg;
pub mod refdata;
pub mod poly;
pub mod rat;
pub mod scalar;
pub mod solver;
pub mod weight2;

pub use cases::{all_cases, case, CaseDescriptor, CaseLabel};
pub use cyc::Cyc;
pub use rat::Rat;

/// Complex double-precision scalar used by the homotopy tracker.
pub type C64 = num_complex::Complex64;
/// q-series with exact rational coefficients.
pub type RatSeries = chars::QSeries<Rat>;
/// q-series with cyclotomic coefficients (DFT intermediates).
pub type CycSeries = chars::QSeries<Cyc>;
