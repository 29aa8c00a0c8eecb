//! Schwinger clock/shift operators on the N-point periodic lattice and the
//! sine observables built from them.
//!
//! `Z|q⟩ = ωᵠ|q⟩`, `X|q⟩ = |q+1⟩` with `ω = e^{2πi/N}`, so that `ZX = ωXZ`,
//! `Z = ω^{q̂}` and `X = ω^{−p̂}`. Momentum kets use `⟨q|p⟩ = ω^{pq}/√N`.

use alloc::vec::Vec;
use core::f64::consts::PI;


use crate::qmat::{Complex, ComplexMatrix, ONE, ZERO};
use crate::{Error, Result};

/// Number of lattice points per particle, `N ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeDim(usize);

impl LatticeDim {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        Ok(Self(n))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    pub fn is_odd_prime(self) -> bool {
        let n = self.0;
        if n < 3 || n.is_multiple_of(2) {
            return false;
        }
        let mut k = 3;
        while k * k <= n {
            if n.is_multiple_of(k) {
                return false;
            }
            k += 2;
        }
        true
    }

    pub fn omega(self) -> Omega {
        Omega::new(self)
    }

    /// Reduce any integer label into `0..N`.
    #[inline]
    pub fn wrap(self, v: i64) -> usize {
        v.rem_euclid(self.0 as i64) as usize
    }

    /// `−v mod N`.
    #[inline]
    pub fn neg(self, v: usize) -> usize {
        (self.0 - v % self.0) % self.0
    }

    pub(crate) fn check_label(self, v: usize) -> Result<()> {
        if v >= self.0 {
            return Err(Error::LabelOutOfRange { label: v, n: self.0 });
        }
        Ok(())
    }
}

/// The primitive root of unity `ω = e^{2πi/N}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Omega {
    n: LatticeDim,
    value: Complex,
}

impl Omega {
    pub fn new(n: LatticeDim) -> Self {
        Self { n, value: root_of_unity(n.get(), 1) }
    }

    pub fn value(self) -> Complex {
        self.value
    }

    /// `ωᵏ`, evaluated from the reduced exponent so that every power is
    /// accurate to one rounding.
    pub fn pow(self, k: i64) -> Complex {
        root_of_unity(self.n.get(), self.n.wrap(k))
    }
}

fn root_of_unity(n: usize, k: usize) -> Complex {
    // Exact values on the axes keep diagonal operators free of 1e-16 noise.
    let k = k % n;
    if k == 0 {
        return ONE;
    }
    if 2 * k == n {
        return -ONE;
    }
    if 4 * k == n {
        return Complex::new(0.0, 1.0);
    }
    if 4 * k == 3 * n {
        return Complex::new(0.0, -1.0);
    }
    Complex::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Particles {
    One,
    Two,
}

impl Particles {
    pub fn count(self) -> u32 {
        match self {
            Particles::One => 1,
            Particles::Two => 2,
        }
    }

    /// Hilbert-space dimension `N^particles`.
    pub fn hilbert_dim(self, n: LatticeDim) -> usize {
        n.get().pow(self.count())
    }

    pub fn from_count(count: u32) -> Option<Self> {
        match count {
            1 => Some(Particles::One),
            2 => Some(Particles::Two),
            _ => None,
        }
    }
}

/// Clock operator `Z = diag(1, ω, …, ω^{N−1})`.
pub fn build_z(n: LatticeDim) -> ComplexMatrix {
    let w = n.omega();
    let diag: Vec<Complex> = (0..n.get()).map(|q| w.pow(q as i64)).collect();
    ComplexMatrix::from_diagonal(&diag)
}

/// Shift operator, `X|q⟩ = |q+1 mod N⟩`.
pub fn build_x(n: LatticeDim) -> ComplexMatrix {
    let size = n.get();
    ComplexMatrix::from_fn(size, |r, c| if r == (c + 1) % size { ONE } else { ZERO })
}

/// Momentum eigenket `|p⟩` in the position basis, `⟨q|p⟩ = ω^{pq}/√N`.
pub fn momentum_ket(n: LatticeDim, p: usize) -> Result<Vec<Complex>> {
    n.check_label(p)?;
    let w = n.omega();
    let norm = 1.0 / libm::sqrt(n.get() as f64);
    Ok((0..n.get()).map(|q| w.pow((p * q) as i64) * norm).collect())
}

/// `Σ_p f(p)|p⟩⟨p|` in the position basis.
pub fn momentum_spectral(n: LatticeDim, f: impl Fn(usize) -> Complex) -> ComplexMatrix {
    let size = n.get();
    let mut out = ComplexMatrix::zeros(size);
    for p in 0..size {
        let weight = f(p);
        if weight == ZERO {
            continue;
        }
        let ket = momentum_ket(n, p).expect("label in range");
        for r in 0..size {
            for c in 0..size {
                out[(r, c)] += weight * ket[r] * ket[c].conj();
            }
        }
    }
    out
}

/// Position operator `q̂ = Σ q|q⟩⟨q|`.
pub fn build_q_op(n: LatticeDim) -> ComplexMatrix {
    let diag: Vec<Complex> = (0..n.get()).map(|q| Complex::new(q as f64, 0.0)).collect();
    ComplexMatrix::from_diagonal(&diag)
}

/// Momentum operator `p̂ = Σ p|p⟩⟨p|`, built from its eigenkets.
pub fn build_p_op(n: LatticeDim) -> ComplexMatrix {
    momentum_spectral(n, |p| Complex::new(p as f64, 0.0))
}

/// The Hermitian pair `A = (U − U†)/2i`, `B = −(V − V†)/2i` together with the
/// unitaries they come from (`U = Z, V = X` for one particle, `U = z, V = x`
/// for two).
#[derive(Clone, Debug)]
pub struct ObservablePair {
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub clock: ComplexMatrix,
    pub shift: ComplexMatrix,
    pub particles: Particles,
    pub n: LatticeDim,
}

impl ObservablePair {
    fn from_unitaries(n: LatticeDim, particles: Particles, clock: ComplexMatrix, shift: ComplexMatrix) -> Self {
        let half_over_i = Complex::new(0.0, -0.5);
        let a = (&clock - &clock.adjoint()).scale(half_over_i);
        let b = (&shift - &shift.adjoint()).scale(-half_over_i);
        Self { a, b, clock, shift, particles, n }
    }

    /// Phase picked up when the clock passes the shift: `ω` for one
    /// particle, `ω²` for the two-particle pair.
    pub fn phase(&self) -> Complex {
        let w = self.n.omega();
        match self.particles {
            Particles::One => w.pow(1),
            Particles::Two => w.pow(2),
        }
    }
}

/// `A = sin(2πq̂/N)` and `B = sin(2πp̂/N)` for one particle.
pub fn build_observables_1p(n: LatticeDim) -> ObservablePair {
    ObservablePair::from_unitaries(n, Particles::One, build_z(n), build_x(n))
}

/// `z = Z⊗Z† = ω^{q̂₁−q̂₂}` and `x = X⊗X† = ω^{−(p̂₁−p̂₂)}`.
pub fn build_two_particle_zx(n: LatticeDim) -> (ComplexMatrix, ComplexMatrix) {
    let z = build_z(n);
    let x = build_x(n);
    (z.kron(&z.adjoint()), x.kron(&x.adjoint()))
}

/// `A = sin(2π(q̂₁−q̂₂)/N)` and `B = sin(2π(p̂₁−p̂₂)/N)`.
pub fn build_observables_2p(n: LatticeDim) -> ObservablePair {
    let (z, x) = build_two_particle_zx(n);
    ObservablePair::from_unitaries(n, Particles::Two, z, x)
}

pub fn build_observables(n: LatticeDim, particles: Particles) -> ObservablePair {
    match particles {
        Particles::One => build_observables_1p(n),
        Particles::Two => build_observables_2p(n),
    }
}

/// `[A, B] = AB − BA`.
pub fn commutator_ab(pair: &ObservablePair) -> ComplexMatrix {
    &(&pair.a * &pair.b) - &(&pair.b * &pair.a)
}

/// `¼[(φ−1)(VU + U†V) − (φ*−1)(U†V† + V†U)]` with `φ` from
/// [`ObservablePair::phase`]; equal to [`commutator_ab`].
pub fn commutator_closed_form(pair: &ObservablePair) -> ComplexMatrix {
    let (u, v) = (&pair.clock, &pair.shift);
    let (ud, vd) = (u.adjoint(), v.adjoint());
    let phi = pair.phase();
    let first = &(v * u) + &(&ud * v);
    let second = &(&ud * &vd) + &(&vd * u);
    (&first.scale(phi - ONE) - &second.scale(phi.conj() - ONE)).scale_real(0.25)
}
