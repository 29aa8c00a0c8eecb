#![allow(dead_code)]

use qudit_pt::{Complex, ComplexMatrix, DensityLike, LatticeDim, Particles};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn dim(n: usize) -> LatticeDim {
    LatticeDim::new(n).unwrap()
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> Complex {
    Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, |_, _| gaussian(rng))
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, d: usize) -> ComplexMatrix {
    let g = random_matrix(rng, d);
    (&g + &g.adjoint()).scale_real(0.5)
}

/// Random Hermitian two-particle operator with unit trace (not positive).
pub fn random_hermitian_two(rng: &mut ChaCha8Rng, n: usize) -> DensityLike {
    let h = random_hermitian(rng, n * n);
    let tr = h.trace().re;
    let h = if tr.abs() > 1e-3 { h.scale_real(1.0 / tr) } else { h };
    DensityLike::new(dim(n), Particles::Two, h).unwrap()
}

/// Random non-Hermitian two-particle operator.
pub fn random_operator_two(rng: &mut ChaCha8Rng, n: usize) -> DensityLike {
    DensityLike::new(dim(n), Particles::Two, random_matrix(rng, n * n)).unwrap()
}

/// Convex mixture of `k` Haar-like random pure states: a bona fide state.
pub fn random_mixed_state(rng: &mut ChaCha8Rng, n: usize, particles: Particles, k: usize) -> DensityLike {
    let d = particles.hilbert_dim(dim(n));
    let weights: Vec<f64> = (0..k).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let mut acc = ComplexMatrix::zeros(d);
    for w in weights {
        let amps: Vec<Complex> = (0..d).map(|_| gaussian(rng)).collect();
        let pure = DensityLike::from_pure(dim(n), particles, &amps).unwrap();
        acc = &acc + &pure.matrix().scale_real(w / total);
    }
    DensityLike::new(dim(n), particles, acc).unwrap()
}
