//! Simulation library for exceptional-point sensing in coupled
//! optomechanical resonators with a quartic (minimal-length) correction to
//! the mechanical oscillators.
//!
//! The pipeline, bottom to top:
//!
//! * [`model`] — system parameters in dimensionless (`ω_m = 1`) or SI units,
//!   with validation of the rate hierarchy `γ_m, g ≪ κ ≪ ω_m`.
//! * [`dynamics`] — time-domain integration of the classical mean-field
//!   equations (binary and ternary topologies) and limit-cycle extraction
//!   (locked frequency `ω_l`, amplitudes `B_j`, centers `β̄_j`).
//! * [`effective`] — Bessel-series optical spring `Ω_j` and optomechanical
//!   damping `Γ_j`, the amplitude-dependent frequency shift `Θ_j = μm ω_j² B_j²`,
//!   and assembly of the 4×4 / 6×6 effective non-Hermitian Hamiltonians.
//! * [`spectral`] — dense complex eigensolver for the small effective
//!   Hamiltonians, the binary closed-form spectrum as oracle, and
//!   continuity-based eigenvalue branch tracking across sweeps.
//! * [`ep_analysis`] — locating EP2/EP3 operating points, frequency-splitting
//!   power laws vs the gravity strength `μm`, the mass-deposition gap, and
//!   the thermomechanical noise floor.
//!
//! All internal quantities are expressed in units of the mechanical frequency
//! `ω_m` (`ħ = 1`); SI units appear only in [`model`] conversions and the
//! noise-limit estimate.

pub mod bessel;
pub mod dynamics;
pub mod effective;
pub mod ep_analysis;
pub mod model;
pub mod spectral;

pub use num_complex::Complex64;
