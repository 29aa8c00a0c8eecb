//! Partial transposition, momentum distributions and the discrete Wigner
//! function, with checks of how transposition flips the sign of a momentum.

use alloc::vec;
use alloc::vec::Vec;

use crate::qmat::{Complex, ComplexMatrix, ZERO};
use crate::schwinger::{LatticeDim, Particles};
use crate::states::DensityLike;
use crate::{Error, Result};

/// `⟨q₁q₂|ρ^{T₁}|q₁'q₂'⟩ = ⟨q₁'q₂|ρ|q₁q₂'⟩`.
pub fn partial_transpose_1(rho: &DensityLike) -> Result<DensityLike> {
    rho.require_two()?;
    let size = rho.n().get();
    let m = rho.matrix();
    let mat = ComplexMatrix::from_fn(size * size, |r, c| {
        let (q1, q2) = (r / size, r % size);
        let (q1p, q2p) = (c / size, c % size);
        m.get(q1p * size + q2, q1 * size + q2p)
    });
    Ok(rho.with_matrix(mat))
}

/// Transpose in the position basis.
pub fn full_transpose(rho: &DensityLike) -> Result<DensityLike> {
    if rho.particles() != Particles::One {
        return Err(Error::NotOneParticle);
    }
    Ok(rho.with_matrix(rho.matrix().transpose()))
}

/// Transposition on particle 1: the full transpose for one particle, `T₁`
/// for two.
pub fn transpose_first(rho: &DensityLike) -> Result<DensityLike> {
    match rho.particles() {
        Particles::One => full_transpose(rho),
        Particles::Two => partial_transpose_1(rho),
    }
}

/// Momentum probabilities `P(p)` or `𝒫(p₁,p₂)` (index `p₁N + p₂`).
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumJpd {
    pub n: LatticeDim,
    pub particles: Particles,
    pub probs: Vec<f64>,
    /// Largest imaginary part discarded when the sums were taken.
    pub max_imag_residue: f64,
}

impl MomentumJpd {
    pub fn get(&self, p: usize) -> f64 {
        self.probs[p]
    }

    pub fn get2(&self, p1: usize, p2: usize) -> f64 {
        self.probs[p1 * self.n.get() + p2]
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

fn momentum_values(rho: &DensityLike) -> Vec<Complex> {
    let n = rho.n();
    let size = n.get();
    let w = n.omega();
    let dim = rho.matrix().dim();
    let m = rho.matrix();
    // For one particle the composite label is just p; for two, (p₁,p₂) acts on
    // (n₁,n₂) through ω^{p₁n₁ + p₂n₂}.
    let phase_exponent = |p: usize, k: usize| -> i64 {
        match rho.particles() {
            Particles::One => (p * k) as i64,
            Particles::Two => ((p / size) * (k / size) + (p % size) * (k % size)) as i64,
        }
    };
    let norm = 1.0 / dim as f64;
    (0..dim)
        .map(|p| {
            let phases: Vec<Complex> = (0..dim).map(|k| w.pow(phase_exponent(p, k))).collect();
            let mut acc = ZERO;
            for r in 0..dim {
                let mut row = ZERO;
                for c in 0..dim {
                    row += m.get(r, c) * phases[c];
                }
                acc += phases[r].conj() * row;
            }
            acc * norm
        })
        .collect()
}

/// `𝒫(p₁,p₂) = N⁻² Σ ⟨n₁n₂|ρ|n₁'n₂'⟩ ω^{p₁(n₁'−n₁)} ω^{p₂(n₂'−n₂)}`, or the
/// one-particle analogue.
pub fn momentum_distribution(rho: &DensityLike) -> MomentumJpd {
    let values = momentum_values(rho);
    let max_imag_residue = values.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    MomentumJpd {
        n: rho.n(),
        particles: rho.particles(),
        probs: values.iter().map(|z| z.re).collect(),
        max_imag_residue,
    }
}

fn flip_first_momentum(n: LatticeDim, particles: Particles, index: usize) -> usize {
    let size = n.get();
    match particles {
        Particles::One => n.neg(index),
        Particles::Two => n.neg(index / size) * size + index % size,
    }
}

/// Checks `𝒫_{ρ^{T₁}}(p₁,p₂) = 𝒫_ρ(−p₁,p₂)` (or `P_{ρ^T}(p) = P_ρ(−p)`).
/// Refused for N = 2, where `|p⟩ = |−p⟩` makes the statement empty.
pub fn check_momentum_flip(rho: &DensityLike, tol: f64) -> Result<bool> {
    if rho.n().get() < 3 {
        return Err(Error::DimensionTooSmall { n: rho.n().get(), min: 3 });
    }
    let before = momentum_values(rho);
    let after = momentum_values(&transpose_first(rho)?);
    let (n, particles) = (rho.n(), rho.particles());
    Ok(after
        .iter()
        .enumerate()
        .all(|(k, v)| (v - before[flip_first_momentum(n, particles, k)]).norm() <= tol))
}

/// Discrete Wigner function on the `(q, p)` lattice of an odd prime N.
///
/// One particle: index `q·N + p`. Two particles: index
/// `((q₁N + q₂)N + p₁)N + p₂`. The table is unnormalised and sums to
/// `N^particles · Tr ρ`.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerTable {
    pub n: LatticeDim,
    pub particles: Particles,
    pub values: Vec<f64>,
    pub max_imag_residue: f64,
}

impl WignerTable {
    pub fn get(&self, q: usize, p: usize) -> f64 {
        self.values[q * self.n.get() + p]
    }

    pub fn get2(&self, q1: usize, q2: usize, p1: usize, p2: usize) -> f64 {
        let size = self.n.get();
        self.values[((q1 * size + q2) * size + p1) * size + p2]
    }

    /// Number of position (equivalently momentum) labels, `N^particles`.
    fn block(&self) -> usize {
        self.particles.hilbert_dim(self.n)
    }

    /// `Σ_p W(q, p)` for every position label.
    pub fn sum_over_momenta(&self) -> Vec<f64> {
        let block = self.block();
        self.values.chunks_exact(block).map(|row| row.iter().sum()).collect()
    }

    /// `Σ_q W(q, p)` for every momentum label.
    pub fn sum_over_positions(&self) -> Vec<f64> {
        let block = self.block();
        let mut out = vec![0.0; block];
        for row in self.values.chunks_exact(block) {
            for (o, v) in out.iter_mut().zip(row) {
                *o += v;
            }
        }
        out
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }
}

/// Complex Wigner values, before the imaginary residue is checked.
///
/// `W(q₁,q₂,p₁,p₂) = Σ_{q₁'q₂'} ⟨q₁'q₂'|ρ|2q₁−q₁', 2q₂−q₂'⟩ ω^{2p₁(q₁−q₁')} ω^{2p₂(q₂−q₂')}`.
pub fn wigner_complex(rho: &DensityLike) -> Result<Vec<Complex>> {
    let n = rho.n();
    if !n.is_odd_prime() {
        return Err(Error::NotOddPrime(n.get()));
    }
    let size = n.get();
    let w = n.omega();
    let m = rho.matrix();
    let wrap = |v: i64| n.wrap(v);
    match rho.particles() {
        Particles::One => {
            let mut out = Vec::with_capacity(size * size);
            for q in 0..size {
                let kernel: Vec<Complex> =
                    (0..size).map(|qp| m.get(qp, wrap(2 * q as i64 - qp as i64))).collect();
                for p in 0..size {
                    let mut acc = ZERO;
                    for (qp, k) in kernel.iter().enumerate() {
                        acc += k * w.pow(2 * p as i64 * (q as i64 - qp as i64));
                    }
                    out.push(acc);
                }
            }
            Ok(out)
        }
        Particles::Two => {
            let mut out = Vec::with_capacity(size.pow(4));
            let mut kernel = vec![ZERO; size * size];
            // phase[p][d] = ω^{2p·d}
            let phase: Vec<Vec<Complex>> =
                (0..size).map(|p| (0..size).map(|d| w.pow(2 * (p * d) as i64)).collect()).collect();
            for q1 in 0..size {
                for q2 in 0..size {
                    for q1p in 0..size {
                        for q2p in 0..size {
                            let row = q1p * size + q2p;
                            let col = wrap(2 * q1 as i64 - q1p as i64) * size + wrap(2 * q2 as i64 - q2p as i64);
                            kernel[row] = m.get(row, col);
                        }
                    }
                    for p1 in 0..size {
                        for p2 in 0..size {
                            let mut acc = ZERO;
                            for q1p in 0..size {
                                let ph1 = phase[p1][wrap(q1 as i64 - q1p as i64)];
                                let mut inner = ZERO;
                                for q2p in 0..size {
                                    inner += kernel[q1p * size + q2p] * phase[p2][wrap(q2 as i64 - q2p as i64)];
                                }
                                acc += ph1 * inner;
                            }
                            out.push(acc);
                        }
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Real Wigner table; fails if any imaginary part exceeds `tol`.
pub fn wigner(rho: &DensityLike, tol: f64) -> Result<WignerTable> {
    let values = wigner_complex(rho)?;
    let max_imag_residue = values.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
    if max_imag_residue > tol {
        return Err(Error::NotHermitianSource { residue: max_imag_residue });
    }
    Ok(WignerTable {
        n: rho.n(),
        particles: rho.particles(),
        values: values.iter().map(|z| z.re).collect(),
        max_imag_residue,
    })
}

/// Maps a Wigner-table index to the index with `p₁` (or `p`) negated.
fn wigner_flip_index(n: LatticeDim, particles: Particles, index: usize) -> usize {
    let size = n.get();
    match particles {
        Particles::One => {
            let (q, p) = (index / size, index % size);
            q * size + n.neg(p)
        }
        Particles::Two => {
            let p2 = index % size;
            let p1 = (index / size) % size;
            let q = index / (size * size);
            (q * size + n.neg(p1)) * size + p2
        }
    }
}

/// Checks `W_{ρ^{T₁}}(q₁,q₂,p₁,p₂) = W_ρ(q₁,q₂,−p₁,p₂)` (or the one-particle
/// `W_{ρ^T}(q,p) = W_ρ(q,−p)`).
pub fn check_wigner_flip(rho: &DensityLike, tol: f64) -> Result<bool> {
    let before = wigner_complex(rho)?;
    let after = wigner_complex(&transpose_first(rho)?)?;
    let (n, particles) = (rho.n(), rho.particles());
    Ok(after
        .iter()
        .enumerate()
        .all(|(k, v)| (v - before[wigner_flip_index(n, particles, k)]).norm() <= tol))
}
