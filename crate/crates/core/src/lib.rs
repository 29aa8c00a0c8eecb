//! Discrete-variable entanglement tools for pairs of N-level systems.
//!
//! The crate builds Schwinger clock and shift operators, the Hermitian
//! observables `A = sin(2π(q₁−q₂)/N)` and `B = sin(2π(p₁−p₂)/N)`, Werner
//! states and their partial transposes, and evaluates the uncertainty
//! relation `(ΔA)²(ΔB)² ≥ ¼|⟨[A,B]⟩|²` on arbitrary density-like operators.
//! A violation of that relation by `ρ^{T₁}` certifies that `ρ` is entangled.
//! Discrete Wigner functions (odd prime N), momentum distributions and the
//! negativity are provided for comparison.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! Composite kets `|q₁ q₂⟩` are stored at index `q₁·N + q₂` throughout.

#![no_std]

extern crate alloc;

mod error;
pub mod qmat;
pub mod schwinger;
pub mod states;
pub mod transforms;
pub mod witness;

pub use error::{Error, Result};
pub use qmat::{Complex, ComplexMatrix, DEFAULT_TOL};
pub use schwinger::{LatticeDim, ObservablePair, Omega, Particles};
pub use states::{DensityLike, Subsystem, ValidationReport, WernerSpec};
pub use transforms::{MomentumJpd, WignerTable};
pub use witness::{AppendixD, PptVerdict, UrReport, UrVerdict, WernerVerdict};




