//! Density-like operators: bona fide states and the possibly illegitimate
//! objects (such as partial transposes) that the witness examines.

use alloc::vec::Vec;

use crate::qmat::{Complex, ComplexMatrix, ONE, ZERO};
use crate::schwinger::{momentum_ket, LatticeDim, Particles};
use crate::{Error, Result};

/// A one- or two-particle operator of dimension `N^particles`. Nothing about
/// Hermiticity, trace or positivity is assumed; see [`DensityLike::validate`].
#[derive(Clone, Debug, PartialEq)]
pub struct DensityLike {
    n: LatticeDim,
    particles: Particles,
    mat: ComplexMatrix,
}

/// Which factor of a two-particle system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ValidationReport {
    pub hermitian: bool,
    pub unit_trace: bool,
    pub psd: bool,
    pub trace: Complex,
    /// `None` when the operator is not Hermitian and has no real spectrum.
    pub min_eigenvalue: Option<f64>,
}

impl ValidationReport {
    pub fn is_state(&self) -> bool {
        self.hermitian && self.unit_trace && self.psd
    }
}

impl DensityLike {
    pub fn new(n: LatticeDim, particles: Particles, mat: ComplexMatrix) -> Result<Self> {
        let expected = particles.hilbert_dim(n);
        if mat.dim() != expected {
            return Err(Error::DimensionMismatch { left: mat.dim(), right: expected });
        }
        Ok(Self { n, particles, mat })
    }

    /// `I / N^particles`.
    pub fn maximally_mixed(n: LatticeDim, particles: Particles) -> Self {
        let d = particles.hilbert_dim(n);
        Self { n, particles, mat: ComplexMatrix::identity(d).scale_real(1.0 / d as f64) }
    }

    /// `|ψ⟩⟨ψ|` for the given amplitudes, normalised.
    pub fn from_pure(n: LatticeDim, particles: Particles, amplitudes: &[Complex]) -> Result<Self> {
        let d = particles.hilbert_dim(n);
        if amplitudes.len() != d {
            return Err(Error::DimensionMismatch { left: amplitudes.len(), right: d });
        }
        let norm = libm::sqrt(amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>());
        if !norm.is_finite() || norm <= 0.0 {
            return Err(Error::NonFinite);
        }
        let normalized: Vec<Complex> = amplitudes.iter().map(|a| a / norm).collect();
        Self::new(n, particles, ComplexMatrix::outer(&normalized))
    }

    /// `|q⟩⟨q|` for one particle.
    pub fn position_state(n: LatticeDim, q: usize) -> Result<Self> {
        n.check_label(q)?;
        let mut amps = alloc::vec![ZERO; n.get()];
        amps[q] = ONE;
        Self::from_pure(n, Particles::One, &amps)
    }

    /// `|p⟩⟨p|` for one particle.
    pub fn momentum_state(n: LatticeDim, p: usize) -> Result<Self> {
        Self::from_pure(n, Particles::One, &momentum_ket(n, p)?)
    }

    /// `ρ₁ ⊗ ρ₂` from two one-particle operators on the same lattice.
    pub fn product(first: &Self, second: &Self) -> Result<Self> {
        if first.particles != Particles::One || second.particles != Particles::One {
            return Err(Error::NotOneParticle);
        }
        if first.n != second.n {
            return Err(Error::DimensionMismatch { left: first.n.get(), right: second.n.get() });
        }
        Ok(Self { n: first.n, particles: Particles::Two, mat: first.mat.kron(&second.mat) })
    }

    pub fn n(&self) -> LatticeDim {
        self.n
    }

    pub fn particles(&self) -> Particles {
        self.particles
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn trace(&self) -> Complex {
        self.mat.trace()
    }

    /// `⟨q₁ q₂|π|q₁' q₂'⟩` with labels reduced mod N.
    pub fn entry2(&self, q1: i64, q2: i64, q1p: i64, q2p: i64) -> Complex {
        let n = self.n;
        let size = n.get();
        let row = n.wrap(q1) * size + n.wrap(q2);
        let col = n.wrap(q1p) * size + n.wrap(q2p);
        self.mat.get(row, col)
    }

    pub(crate) fn require_two(&self) -> Result<()> {
        if self.particles != Particles::Two {
            return Err(Error::NotTwoParticle);
        }
        Ok(())
    }

    pub(crate) fn with_matrix(&self, mat: ComplexMatrix) -> Self {
        debug_assert_eq!(mat.dim(), self.mat.dim());
        Self { n: self.n, particles: self.particles, mat }
    }

    /// Reduced operator of the remaining particle after tracing out `which`.
    pub fn partial_trace(&self, which: Subsystem) -> Result<Self> {
        self.require_two()?;
        let size = self.n.get();
        let mat = ComplexMatrix::from_fn(size, |r, c| {
            (0..size)
                .map(|k| match which {
                    Subsystem::Second => self.mat.get(r * size + k, c * size + k),
                    Subsystem::First => self.mat.get(k * size + r, k * size + c),
                })
                .sum()
        });
        Ok(Self { n: self.n, particles: Particles::One, mat })
    }

    /// Checks Hermiticity, unit trace and positivity.
    pub fn validate(&self, tol: f64) -> ValidationReport {
        let hermitian = self.mat.is_hermitian(tol);
        let trace = self.trace();
        let unit_trace = (trace - ONE).norm() <= tol;
        let min_eigenvalue = if hermitian { self.mat.min_eigenvalue(tol).ok() } else { None };
        let psd = min_eigenvalue.is_some_and(|v| v >= -tol);
        ValidationReport { hermitian, unit_trace, psd, trace, min_eigenvalue }
    }
}

/// Amplitudes of `|Φ⁺⟩ = N^{−1/2} Σ_q |q q⟩`.
pub fn phi_plus_ket(n: LatticeDim) -> Vec<Complex> {
    let size = n.get();
    let amp = Complex::new(1.0 / libm::sqrt(size as f64), 0.0);
    (0..size * size).map(|k| if k / size == k % size { amp } else { ZERO }).collect()
}

/// `|Φ⁺⟩⟨Φ⁺|`.
pub fn phi_plus(n: LatticeDim) -> DensityLike {
    werner(WernerSpec::new(n, 1.0))
}

/// The Werner family `ρ_r = r|Φ⁺⟩⟨Φ⁺| + (1−r) I/N²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WernerSpec {
    pub n: LatticeDim,
    pub r: f64,
}

impl WernerSpec {
    pub fn new(n: LatticeDim, r: f64) -> Self {
        Self { n, r }
    }

    /// `−1/(N²−1) ≤ r ≤ 1`, the range in which `ρ_r` is positive.
    pub fn is_valid_state(&self) -> bool {
        let n2 = (self.n.get() * self.n.get()) as f64;
        self.r >= -1.0 / (n2 - 1.0) && self.r <= 1.0
    }

    /// `⟨q₁q₂|ρ_r|q₁'q₂'⟩ = (r/N)δ_{q₁q₂}δ_{q₁'q₂'} + ((1−r)/N²)δ_{q₁q₁'}δ_{q₂q₂'}`.
    pub fn entry(&self, q1: usize, q2: usize, q1p: usize, q2p: usize) -> f64 {
        let size = self.n.get() as f64;
        let mut v = 0.0;
        if q1 == q2 && q1p == q2p {
            v += self.r / size;
        }
        if q1 == q1p && q2 == q2p {
            v += (1.0 - self.r) / (size * size);
        }
        v
    }

    /// `⟨q₁q₂|ρ_r^{T₁}|q₁'q₂'⟩ = (r/N)δ_{q₁q₂'}δ_{q₂q₁'} + ((1−r)/N²)δ_{q₁q₁'}δ_{q₂q₂'}`.
    pub fn pt_entry(&self, q1: usize, q2: usize, q1p: usize, q2p: usize) -> f64 {
        self.entry(q1p, q2, q1, q2p)
    }

    /// Eigenvalues of `ρ_r` with multiplicities, `[(value, count)]`.
    pub fn spectrum(&self) -> [(f64, usize); 2] {
        let size = self.n.get();
        let n2 = (size * size) as f64;
        let base = (1.0 - self.r) / n2;
        [(base + self.r, 1), (base, size * size - 1)]
    }

    /// Eigenvalues of `ρ_r^{T₁} = r·SWAP/N + (1−r) I/N²` with multiplicities:
    /// symmetric subspace `(1−r)/N² + r/N`, antisymmetric `(1−r)/N² − r/N`.
    pub fn pt_spectrum(&self) -> [(f64, usize); 2] {
        let size = self.n.get();
        let nf = size as f64;
        let base = (1.0 - self.r) / (nf * nf);
        [(base + self.r / nf, size * (size + 1) / 2), (base - self.r / nf, size * (size - 1) / 2)]
    }

    pub fn min_pt_eigenvalue(&self) -> f64 {
        let [(a, _), (b, _)] = self.pt_spectrum();
        a.min(b)
    }
}

pub fn werner(spec: WernerSpec) -> DensityLike {
    let size = spec.n.get();
    let mat = ComplexMatrix::from_fn(size * size, |r, c| {
        Complex::new(spec.entry(r / size, r % size, c / size, c % size), 0.0)
    });
    DensityLike { n: spec.n, particles: Particles::Two, mat }
}
