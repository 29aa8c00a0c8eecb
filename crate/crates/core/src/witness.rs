//! Uncertainty-relation entanglement witness, negativity and the PPT test.
//!
//! For a density-like `π` the relation `(ΔA)²_π (ΔB)²_π ≥ ¼|⟨[A,B]⟩_π|²`
//! holds whenever `π` is a legitimate state. Evaluated on `ρ^{T₁}`, a
//! violation means `ρ^{T₁}` is not a state, hence `ρ` is entangled.

use core::f64::consts::PI;

use crate::qmat::{Complex, ComplexMatrix, ONE, ZERO};
use crate::schwinger::{build_observables, commutator_ab, LatticeDim, ObservablePair, Particles};
use crate::states::{DensityLike, WernerSpec};
use crate::transforms::partial_transpose_1;
use crate::{Error, Result};

/// Tolerance used for verdicts when callers do not supply one.
pub const VERDICT_TOL: f64 = 1e-9;

/// `⟨O⟩_π = Tr(π O)`; `π` need not be Hermitian or positive.
pub fn expect(pi: &DensityLike, op: &ComplexMatrix) -> Result<Complex> {
    trace_of_product(pi.matrix(), op)
}

fn trace_of_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    let n = a.dim();
    let mut acc = ZERO;
    for r in 0..n {
        for c in 0..n {
            acc += a.get(r, c) * b.get(c, r);
        }
    }
    Ok(acc)
}

/// The expectation values entering the two-particle relation, for a general
/// (non-Hermitian, non-positive) `π`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AppendixD {
    pub trace: Complex,
    pub a: Complex,
    pub a2: Complex,
    pub b: Complex,
    pub b2: Complex,
    pub xz: Complex,
    pub zdag_x: Complex,
    pub xdag_z: Complex,
    pub zdag_xdag: Complex,
}

impl AppendixD {
    /// Explicit index sums over `⟨q₁q₂|π|q₁'q₂'⟩`, touching only the O(N²)
    /// elements that enter. `entry(q₁, q₂, q₁', q₂')` receives unreduced
    /// labels and must reduce them mod N.
    pub fn from_entries(n: LatticeDim, entry: impl Fn(i64, i64, i64, i64) -> Complex) -> Self {
        let size = n.get() as i64;
        let w = n.omega();
        let mut out = AppendixD {
            trace: ZERO,
            a: ZERO,
            a2: ZERO,
            b: ZERO,
            b2: ZERO,
            xz: ZERO,
            zdag_x: ZERO,
            xdag_z: ZERO,
            zdag_xdag: ZERO,
        };
        let mut up1 = ZERO;
        let mut down1 = ZERO;
        let mut up2 = ZERO;
        let mut down2 = ZERO;
        for q1 in 0..size {
            for q2 in 0..size {
                let diag = entry(q1, q2, q1, q2);
                let s = libm::sin(2.0 * PI * n.wrap(q1 - q2) as f64 / size as f64);
                out.trace += diag;
                out.a += diag * s;
                out.a2 += diag * (s * s);

                let plus = entry(q1, q2, q1 + 1, q2 - 1);
                let minus = entry(q1, q2, q1 - 1, q2 + 1);
                up1 += plus;
                down1 += minus;
                up2 += entry(q1, q2, q1 + 2, q2 - 2);
                down2 += entry(q1, q2, q1 - 2, q2 + 2);

                out.xz += plus * w.pow(q1 - q2);
                out.zdag_x += plus * w.pow(q2 - q1 - 2);
                out.xdag_z += minus * w.pow(q1 - q2);
                out.zdag_xdag += minus * w.pow(q2 - q1 + 2);
            }
        }
        out.b = Complex::new(0.0, 0.5) * (up1 - down1);
        out.b2 = out.trace * 0.5 - (up2 + down2) * 0.25;
        out
    }

    /// Generic `Tr(π O)` on the operator products; the reference route.
    pub fn via_operators(pi: &DensityLike) -> Result<Self> {
        pi.require_two()?;
        let pair = build_observables(pi.n(), Particles::Two);
        let ev = OperatorExpectations::new(pi, &pair)?;
        Ok(AppendixD {
            trace: pi.trace(),
            a: ev.a,
            a2: ev.a2,
            b: ev.b,
            b2: ev.b2,
            xz: ev.vu,
            zdag_x: ev.udag_v,
            xdag_z: ev.vdag_u,
            zdag_xdag: ev.udag_vdag,
        })
    }

    /// `¼[(ω²−1)(⟨xz⟩+⟨z†x⟩) − (ω*²−1)(⟨x†z⟩+⟨z†x†⟩)] = ⟨[A,B]⟩`.
    pub fn commutator(&self, n: LatticeDim) -> Complex {
        commutator_from_products(n.omega().pow(2), self.xz, self.zdag_x, self.xdag_z, self.zdag_xdag)
    }
}

fn commutator_from_products(phase: Complex, vu: Complex, udag_v: Complex, vdag_u: Complex, udag_vdag: Complex) -> Complex {
    ((phase - ONE) * (vu + udag_v) - (phase.conj() - ONE) * (vdag_u + udag_vdag)) * 0.25
}

/// The eight expectation values entering the two-particle relation, as closed
/// index sums over the entries of a two-particle operator.
pub fn appendix_d_expectations(pi: &DensityLike) -> Result<AppendixD> {
    pi.require_two()?;
    Ok(AppendixD::from_entries(pi.n(), |a, b, c, d| pi.entry2(a, b, c, d)))
}

struct OperatorExpectations {
    a: Complex,
    a2: Complex,
    b: Complex,
    b2: Complex,
    commutator: Complex,
    vu: Complex,
    udag_v: Complex,
    vdag_u: Complex,
    udag_vdag: Complex,
}

impl OperatorExpectations {
    fn new(pi: &DensityLike, pair: &ObservablePair) -> Result<Self> {
        let (u, v) = (&pair.clock, &pair.shift);
        let (ud, vd) = (u.adjoint(), v.adjoint());
        Ok(Self {
            a: expect(pi, &pair.a)?,
            a2: expect(pi, &(&pair.a * &pair.a))?,
            b: expect(pi, &pair.b)?,
            b2: expect(pi, &(&pair.b * &pair.b))?,
            commutator: expect(pi, &commutator_ab(pair))?,
            vu: expect(pi, &(v * u))?,
            udag_v: expect(pi, &(&ud * v))?,
            vdag_u: expect(pi, &(&vd * u))?,
            udag_vdag: expect(pi, &(&ud * &vd))?,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UrVerdict {
    Satisfied,
    Violated,
    Inconclusive,
}

impl UrVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            UrVerdict::Satisfied => "satisfied",
            UrVerdict::Violated => "violated",
            UrVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UrReport {
    pub var_a: f64,
    pub var_b: f64,
    /// `(ΔA)²(ΔB)²`.
    pub lhs: f64,
    pub commutator_expectation: Complex,
    /// `|⟨[A,B]⟩|²/4`.
    pub rhs: f64,
    /// The same bound from the unitary products, `|…|²/64`.
    pub rhs_closed_form: f64,
    pub margin: f64,
    pub verdict: UrVerdict,
}

fn real_variance(square: Complex, mean: Complex, tol: f64) -> Result<f64> {
    let var = square - mean * mean;
    if var.im.abs() > tol {
        return Err(Error::NonRealVariance { residue: var.im.abs() });
    }
    Ok(var.re)
}

fn verdict(lhs: f64, rhs: f64, tol: f64) -> UrVerdict {
    if lhs.abs() < tol && rhs.abs() < tol {
        UrVerdict::Inconclusive
    } else if lhs - rhs < -tol {
        UrVerdict::Violated
    } else {
        UrVerdict::Satisfied
    }
}

#[allow(clippy::too_many_arguments)]
fn assemble_report(
    a: Complex,
    a2: Complex,
    b: Complex,
    b2: Complex,
    commutator: Complex,
    rhs_closed_form: f64,
    tol: f64,
) -> Result<UrReport> {
    let var_a = real_variance(a2, a, tol)?;
    let var_b = real_variance(b2, b, tol)?;
    let lhs = var_a * var_b;
    let rhs = commutator.norm_sqr() / 4.0;
    Ok(UrReport {
        var_a,
        var_b,
        lhs,
        commutator_expectation: commutator,
        rhs,
        rhs_closed_form,
        margin: lhs - rhs,
        verdict: verdict(lhs, rhs, tol),
    })
}

/// Evaluates the uncertainty relation for the one- or two-particle sine
/// observables, whichever matches `pi`.
///
/// Fails with [`Error::NonRealVariance`] when a variance has an imaginary
/// part above `tol`, which already shows that `pi` is not Hermitian.
pub fn ur_check(pi: &DensityLike, tol: f64) -> Result<UrReport> {
    let pair = build_observables(pi.n(), pi.particles());
    let ev = OperatorExpectations::new(pi, &pair)?;
    let closed = commutator_from_products(pair.phase(), ev.vu, ev.udag_v, ev.vdag_u, ev.udag_vdag);
    assemble_report(ev.a, ev.a2, ev.b, ev.b2, ev.commutator, closed.norm_sqr() / 4.0, tol)
}

/// The two-particle relation evaluated from the closed index sums alone.
pub fn ur_check_from_appendix_d(n: LatticeDim, d: &AppendixD, tol: f64) -> Result<UrReport> {
    let commutator = d.commutator(n);
    let rhs = commutator.norm_sqr() / 4.0;
    assemble_report(d.a, d.a2, d.b, d.b2, commutator, rhs, tol)
}

/// `f(r, N) = (1−r)² − 4r² sin²(2π/N)`; negative exactly where the relation
/// fails on the partially transposed Werner state.
pub fn f_werner(n: LatticeDim, r: f64) -> Result<f64> {
    if n.get() < 3 {
        return Err(Error::DimensionTooSmall { n: n.get(), min: 3 });
    }
    let s = libm::sin(2.0 * PI / n.get() as f64);
    Ok((1.0 - r) * (1.0 - r) - 4.0 * r * r * s * s)
}

/// `r₀ = 1/(2 sin(2π/N) + 1)`, the root of `f(·, N)` in `(0, 1)`.
pub fn r0_threshold(n: LatticeDim) -> Result<f64> {
    if n.get() < 3 {
        return Err(Error::DimensionTooSmall { n: n.get(), min: 3 });
    }
    Ok(1.0 / (2.0 * libm::sin(2.0 * PI / n.get() as f64) + 1.0))
}

/// Large-N approximation `r₀ ≈ 1 − 4π/N`.
pub fn r0_large_n(n: LatticeDim) -> f64 {
    1.0 - 4.0 * PI / n.get() as f64
}

/// Negativity of the Werner state,
/// `½[(N−1)/(2N)·|1−(N+1)r| + (N+1)/(2N)·|1+(N−1)r| − 1]`.
pub fn negativity_closed(n: LatticeDim, r: f64) -> f64 {
    let nf = n.get() as f64;
    let lower = (nf - 1.0) / (2.0 * nf) * (1.0 - (nf + 1.0) * r).abs();
    let upper = (nf + 1.0) / (2.0 * nf) * (1.0 + (nf - 1.0) * r).abs();
    0.5 * (lower + upper - 1.0)
}

/// `Σ |λ|` over the negative eigenvalues of `ρ^{T₁}`.
pub fn negativity_oracle(rho: &DensityLike, tol: f64) -> Result<f64> {
    let pt = partial_transpose_1(rho)?;
    let ev = pt.matrix().hermitian_eigenvalues(tol)?;
    Ok(ev.iter().filter(|&&v| v < 0.0).map(|v| -v).sum())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PptVerdict {
    pub min_pt_eigenvalue: f64,
    pub entangled: bool,
}

/// Flags `rho` as entangled when `ρ^{T₁}` has an eigenvalue below `−tol`.
pub fn ppt_verdict(rho: &DensityLike, tol: f64) -> Result<PptVerdict> {
    if !rho.matrix().is_hermitian(tol) {
        return Err(Error::NotHermitian { deviation: rho.matrix().hermiticity_deviation() });
    }
    let pt = partial_transpose_1(rho)?;
    let min_pt_eigenvalue = pt.matrix().min_eigenvalue(tol)?;
    Ok(PptVerdict { min_pt_eigenvalue, entangled: min_pt_eigenvalue < -tol })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WernerVerdict {
    pub n: LatticeDim,
    pub r: f64,
    /// `None` for N = 2, where `f` and `r₀` are undefined.
    pub f: Option<f64>,
    pub r0: Option<f64>,
    pub ur: UrReport,
    pub ur_violated: bool,
    pub negativity: f64,
    pub min_pt_eigenvalue: f64,
    pub ppt_entangled: bool,
}

/// Full analysis of `ρ_r` on an N-point lattice.
///
/// The relation is evaluated from the matrix elements of `ρ_r^{T₁}` through
/// the closed index sums, so cost is O(N²) and large N is cheap. The PPT
/// verdict uses the known spectrum of `ρ_r^{T₁}`. Fails with
/// [`Error::Inconsistent`] if the witness and the closed forms disagree.
pub fn werner_verdict(n: LatticeDim, r: f64, tol: f64) -> Result<WernerVerdict> {
    let spec = WernerSpec::new(n, r);
    let d = AppendixD::from_entries(n, |q1, q2, q1p, q2p| {
        Complex::new(spec.pt_entry(n.wrap(q1), n.wrap(q2), n.wrap(q1p), n.wrap(q2p)), 0.0)
    });
    let ur = ur_check_from_appendix_d(n, &d, tol)?;
    let ur_violated = ur.verdict == UrVerdict::Violated;
    let (f, r0) = if n.get() >= 3 { (Some(f_werner(n, r)?), Some(r0_threshold(n)?)) } else { (None, None) };
    let min_pt_eigenvalue = spec.min_pt_eigenvalue();
    let ppt_entangled = min_pt_eigenvalue < -tol;

    // On ρ_r^{T₁} the margin equals f/4; they must agree away from the root.
    if let Some(f) = f {
        if (f / 4.0 - ur.margin).abs() > tol {
            return Err(Error::Inconsistent("uncertainty margin differs from f(r, N)/4"));
        }
    }
    if ur_violated && !ppt_entangled {
        return Err(Error::Inconsistent("relation violated but partial transpose is positive"));
    }
    Ok(WernerVerdict {
        n,
        r,
        f,
        r0,
        ur,
        ur_violated,
        negativity: negativity_closed(n, r),
        min_pt_eigenvalue,
        ppt_entangled,
    })
}
