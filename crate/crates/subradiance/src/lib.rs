//! Spectral analysis of collective spontaneous emission in 1D chains of
//! two-level emitters.
//!
//! The non-Hermitian effective Hamiltonian of an equidistant chain coupled to
//! a 1D waveguide (or to the 3D vacuum field) is built in the one- and
//! two-excitation sectors and diagonalized exactly. On top of the raw
//! spectra, the crate provides the closed-form one-excitation theory
//! (dispersion, superradiant tails, complex Bloch wavenumbers, decay-rate and
//! Lamb-shift asymptotics), the fermionic ansatz for doubly-excited
//! subradiant states, and the hard-core boson effective model obtained by
//! eliminating the superradiant manifold.
//!
//! Entry points:
//! - [`ChainConfig`] describes the chain and field model.
//! - [`waveguide`] / [`freespace`] build [`SectorMatrix`] Hamiltonians.
//! - [`spectrum::eigendecompose`] produces sorted, residual-checked
//!   eigenpairs; [`spectrum::classify_modes`] labels subradiant branches.
//! - [`bloch::BlochTheory`] holds the analytic one-excitation results.
//! - [`two_excitation`] and [`tails`] analyze the doubly-excited sector.
//! - [`fock`] and [`effective`] implement the bosonized effective model.
//! - [`run`] is the config-file/CSV/JSON layer used by the `subrad` binary.
//!
//! Rates are in units of the single-emitter decay rate and lengths in units
//! of the lattice spacing unless a config says otherwise; every formula
//! carries the explicit factors.

pub mod bloch;
pub mod config;
pub mod effective;
pub mod fock;
pub mod freespace;
pub mod green;
pub mod quadrature;
pub mod run;
pub mod scaling;
pub mod sector;
pub mod spectrum;
pub mod tails;
pub mod two_excitation;
pub mod universality;
pub mod waveguide;

mod cvec;
mod error;

pub use config::{ChainConfig, FieldModel, Polarization};
pub use error::{Error, Result};
pub use scaling::ScalingFit;
pub use sector::{MatrixPart, Sector, SectorBasis, SectorMatrix};
pub use spectrum::{Branch, ModeClass, ModeLabel, SpectralResult};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Imaginary unit.
pub(crate) const I: C64 = C64::new(0.0, 1.0);
