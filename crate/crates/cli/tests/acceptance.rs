//! Acceptance criteria, one line each. Runs as a plain binary under
//! `cargo test` and exits non-zero if any criterion fails.

use std::f64::consts::PI;
use std::path::Path;
use std::process::Command;

use qudit_pt::schwinger::{build_observables_2p, commutator_ab};
use qudit_pt::states::{phi_plus, werner, WernerSpec};
use qudit_pt::transforms::{
    check_momentum_flip, check_wigner_flip, momentum_distribution, partial_transpose_1, wigner, wigner_complex,
};
use qudit_pt::witness::{
    appendix_d_expectations, expect, negativity_closed, negativity_oracle, r0_threshold, ur_check, werner_verdict,
    AppendixD, VERDICT_TOL,
};
use qudit_pt::{Complex, ComplexMatrix, DensityLike, LatticeDim, Particles, UrVerdict, DEFAULT_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn dim(n: usize) -> LatticeDim {
    LatticeDim::new(n).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gaussian(rng: &mut ChaCha8Rng) -> Complex {
    Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn random_mixed_state(rng: &mut ChaCha8Rng, n: usize, particles: Particles) -> DensityLike {
    let d = particles.hilbert_dim(dim(n));
    let k = rng.random_range(1..=4);
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

fn random_hermitian(rng: &mut ChaCha8Rng, n: usize, particles: Particles) -> DensityLike {
    let d = particles.hilbert_dim(dim(n));
    let g = ComplexMatrix::from_fn(d, |_, _| gaussian(rng));
    let h = (&g + &g.adjoint()).scale_real(0.5 / d as f64);
    DensityLike::new(dim(n), particles, h).unwrap()
}

fn random_operator(rng: &mut ChaCha8Rng, n: usize) -> DensityLike {
    let d = n * n;
    let m = ComplexMatrix::from_fn(d, |_, _| gaussian(rng) / d as f64);
    DensityLike::new(dim(n), Particles::Two, m).unwrap()
}

fn werner_pt(n: usize, r: f64) -> DensityLike {
    partial_transpose_1(&werner(WernerSpec::new(dim(n), r))).unwrap()
}

/// 1. Threshold table.
fn threshold_table() -> Outcome {
    let printed = [(3, 0.366), (4, 1.0 / 3.0), (6, 0.366), (12, 0.5), (20, 0.62)];
    let mut worst = 0.0f64;
    for (n, value) in printed {
        let r0 = r0_threshold(dim(n)).map_err(|e| e.to_string())?;
        let closed = 1.0 / (2.0 * (2.0 * PI / n as f64).sin() + 1.0);
        ensure((r0 - value).abs() <= 5e-3, || format!("N={n}: r0={r0} vs printed {value}"))?;
        ensure((r0 - closed).abs() <= 1e-12, || format!("N={n}: r0={r0} vs closed form {closed}"))?;
        worst = worst.max((r0 - value).abs());
    }
    // The largest case on the full 400×400 matrix: the dense witness flips
    // sign across r0(20).
    let r0 = r0_threshold(dim(20)).unwrap();
    let below = ur_check(&werner_pt(20, r0 - 1e-3), VERDICT_TOL).map_err(|e| e.to_string())?;
    let above = ur_check(&werner_pt(20, r0 + 1e-3), VERDICT_TOL).map_err(|e| e.to_string())?;
    ensure(below.verdict == UrVerdict::Satisfied && above.verdict == UrVerdict::Violated, || {
        format!("dense N=20 verdicts around r0: {:?} / {:?}", below.verdict, above.verdict)
    })?;
    Ok(format!("max deviation from printed values {worst:.2e}; dense N=20 flips at r0"))
}

/// 2. Large-N asymptote.
fn large_n_asymptote() -> Outcome {
    let r0 = r0_threshold(dim(1000)).unwrap();
    let approx = 1.0 - 4.0 * PI / 1000.0;
    let gap = (r0 - approx).abs();
    ensure(gap <= 2e-4, || format!("|r0 - (1 - 4π/N)| = {gap:e}"))?;
    Ok(format!("|r0(1000) - (1 - 4π/1000)| = {gap:.3e}"))
}

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_qudit-pt")
}

fn run_bin(args: &[&str]) -> std::process::Output {
    Command::new(bin()).args(args).env_remove("QW_TOL").output().expect("binary runs")
}

struct ScanRow {
    n: usize,
    r: f64,
    f: Option<f64>,
}

fn parse_scan(path: &Path) -> Result<Vec<ScanRow>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    ensure(lines.next() == Some("N,r,f,r0,ur_verdict,negativity,ppt_entangled"), || "bad header".into())?;
    lines
        .map(|line| {
            let cols: Vec<&str> = line.split(',').collect();
            ensure(cols.len() == 7, || format!("bad row {line}"))?;
            Ok(ScanRow {
                n: cols[0].parse().map_err(|_| format!("bad N in {line}"))?,
                r: cols[1].parse().map_err(|_| format!("bad r in {line}"))?,
                f: if cols[2].is_empty() { None } else { Some(cols[2].parse().map_err(|_| format!("bad f in {line}"))?) },
            })
        })
        .collect()
}

/// 3. f(r,N) curves from the CLI scan.
fn figure_one(dir: &Path) -> Outcome {
    let out = dir.join("fig1.csv");
    let status = run_bin(&["werner-scan", "--N", "3,4,5,6,10,100", "--steps", "201", "--out", out.to_str().unwrap()]);
    ensure(status.status.success(), || format!("werner-scan failed: {}", String::from_utf8_lossy(&status.stderr)))?;
    let rows = parse_scan(&out)?;
    ensure(rows.len() == 1206, || format!("expected 1206 rows, got {}", rows.len()))?;
    let tol = 1e-9;
    let curve = |n: usize| -> Vec<(f64, f64)> {
        rows.iter().filter(|row| row.n == n).map(|row| (row.r, row.f.unwrap())).collect()
    };
    let (f3, f4, f5, f6) = (curve(3), curve(4), curve(5), curve(6));
    for i in 0..201 {
        let r = f3[i].0;
        ensure((f3[i].1 - f6[i].1).abs() <= tol, || format!("f(r,3) != f(r,6) at r={r}"))?;
        ensure(f4[i].1 <= f5[i].1 + tol, || format!("f(r,4) > f(r,5) at r={r}"))?;
        ensure(f5[i].1 <= f3[i].1 + tol, || format!("f(r,5) > f(r,3) at r={r}"))?;
    }
    for n in [3, 4, 5, 6, 10, 100] {
        let c = curve(n);
        let r0 = r0_threshold(dim(n)).unwrap();
        let changes: Vec<usize> = (0..c.len() - 1).filter(|&i| c[i].1 >= -tol && c[i + 1].1 < -tol).collect();
        ensure(changes.len() == 1, || format!("N={n}: {} sign changes", changes.len()))?;
        let i = changes[0];
        ensure(c[i].0 - tol <= r0 && r0 <= c[i + 1].0 + tol, || {
            format!("N={n}: sign change in [{}, {}] but r0={r0}", c[i].0, c[i + 1].0)
        })?;
        ensure(c.iter().all(|&(r, f)| (f < -tol) == (r > r0 + tol) || f.abs() <= tol), || {
            format!("N={n}: f sign disagrees with r0 somewhere")
        })?;
    }
    Ok("1206 rows; f3=f6, f4≤f5≤f3, single sign change at r0 for each N".into())
}

/// 4. Negativity closed form vs PT spectrum.
fn negativity_curves() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=7 {
        let threshold = 1.0 / (n as f64 + 1.0);
        for k in 0..=100 {
            let r = k as f64 / 100.0;
            let oracle = negativity_oracle(&werner(WernerSpec::new(dim(n), r)), DEFAULT_TOL).map_err(|e| e.to_string())?;
            let closed = negativity_closed(dim(n), r);
            worst = worst.max((oracle - closed).abs());
            ensure((oracle - closed).abs() <= 1e-10, || format!("N={n} r={r}: {closed} vs oracle {oracle}"))?;
            let positive = closed > 1e-9;
            ensure(positive == (r > threshold + 1e-9), || format!("N={n} r={r}: negativity {closed}"))?;
            if n < 7 && r > threshold {
                let next = negativity_closed(dim(n + 1), r);
                ensure(next >= closed - 1e-12, || format!("negativity decreases from N={n} to {} at r={r}", n + 1))?;
            }
        }
    }
    Ok(format!("606 points, max |closed - oracle| = {worst:.2e}"))
}

/// 5. Werner-PT expectation values.
fn werner_pt_expectations() -> Outcome {
    let mut worst = 0.0f64;
    for n in [3, 5, 7] {
        let w = dim(n).omega().value();
        let pair = build_observables_2p(dim(n));
        let comm = commutator_ab(&pair);
        for r in [0.0, 0.3, 0.7, 1.0] {
            let pi = werner_pt(n, r);
            let ops = AppendixD::via_operators(&pi).map_err(|e| e.to_string())?;
            let sums = appendix_d_expectations(&pi).map_err(|e| e.to_string())?;
            let half = Complex::new((1.0 - r) / 2.0, 0.0);
            let zero = Complex::new(0.0, 0.0);
            let c = expect(&pi, &comm).map_err(|e| e.to_string())?;
            for d in [&ops, &sums] {
                let checks = [
                    ("<A>", d.a, zero),
                    ("<A^2>", d.a2, half),
                    ("<B>", d.b, zero),
                    ("<B^2>", d.b2, half),
                    ("<xz>", d.xz, w.conj() * r),
                    ("<z+x>", d.zdag_x, w.conj() * r),
                    ("<x+z>", d.xdag_z, w * r),
                    ("<z+x+>", d.zdag_xdag, w * r),
                ];
                for (name, got, expected) in checks {
                    worst = worst.max((got - expected).norm());
                    ensure((got - expected).norm() <= 1e-10, || format!("N={n} r={r} {name}: {got} vs {expected}"))?;
                }
            }
            let expected = Complex::new(0.0, 2.0 * r * (2.0 * PI / n as f64).sin());
            worst = worst.max((c - expected).norm());
            ensure((c - expected).norm() <= 1e-10, || format!("N={n} r={r} <[A,B]>: {c} vs {expected}"))?;
        }
    }
    Ok(format!("all nine quantities on 12 (N, r) cases, max error {worst:.2e}"))
}

/// 6. Soundness on legitimate states.
fn witness_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut min_margin = f64::INFINITY;
    for n in 2..=6 {
        for _ in 0..500 {
            let rho = random_mixed_state(&mut rng, n, Particles::Two);
            let report = ur_check(&rho, VERDICT_TOL).map_err(|e| e.to_string())?;
            ensure(report.verdict != UrVerdict::Violated, || format!("N={n}: violated by a state: {report:?}"))?;
            min_margin = min_margin.min(report.margin);
        }
    }
    Ok(format!("2500 random states, no violation (smallest margin {min_margin:.3e})"))
}

/// 7. Sign-flip theorems.
fn sign_flips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for n in [3, 5, 7] {
        for _ in 0..100 {
            let rho = random_hermitian(&mut rng, n, Particles::Two);
            ensure(check_momentum_flip(&rho, 1e-12).map_err(|e| e.to_string())?, || format!("momentum flip fails, N={n}"))?;
            ensure(check_wigner_flip(&rho, 1e-12).map_err(|e| e.to_string())?, || format!("Wigner flip fails, N={n}"))?;
        }
        let mut named = vec![phi_plus(dim(n))];
        named.extend([0.2, 0.5, 0.9].map(|r| werner(WernerSpec::new(dim(n), r))));
        for rho in &named {
            ensure(check_wigner_flip(rho, 1e-12).map_err(|e| e.to_string())?, || format!("Wigner flip fails on named state, N={n}"))?;
        }
    }
    Ok("300 random Hermitian operators plus Φ⁺ and Werner states".into())
}

/// 8. Closed index sums vs traces.
fn index_sum_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut worst = 0.0f64;
    for n in 3..=7 {
        for _ in 0..100 {
            let pi = random_operator(&mut rng, n);
            let sums = appendix_d_expectations(&pi).map_err(|e| e.to_string())?;
            let ops = AppendixD::via_operators(&pi).map_err(|e| e.to_string())?;
            for (got, reference) in [
                (sums.a, ops.a),
                (sums.a2, ops.a2),
                (sums.b, ops.b),
                (sums.b2, ops.b2),
                (sums.xz, ops.xz),
                (sums.zdag_x, ops.zdag_x),
                (sums.xdag_z, ops.xdag_z),
                (sums.zdag_xdag, ops.zdag_xdag),
            ] {
                worst = worst.max((got - reference).norm());
            }
        }
    }
    ensure(worst <= 1e-12, || format!("max deviation {worst:e}"))?;
    Ok(format!("500 random non-Hermitian operators, max deviation {worst:.2e}"))
}

/// 9. Wigner reality, normalisation and marginals.
fn wigner_structure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut worst_imag = 0.0f64;
    for n in [3, 5, 7] {
        for particles in [Particles::One, Particles::Two] {
            let block = particles.hilbert_dim(dim(n));
            let scale = block as f64;
            for _ in 0..10 {
                let rho = random_hermitian(&mut rng, n, particles);
                let raw = wigner_complex(&rho).map_err(|e| e.to_string())?;
                let imag = raw.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
                worst_imag = worst_imag.max(imag);
                ensure(imag <= 1e-10, || format!("N={n}: imaginary residue {imag:e}"))?;
                let table = wigner(&rho, 1e-10).map_err(|e| e.to_string())?;
                let trace = rho.trace().re;
                ensure((table.total() - scale * trace).abs() <= 1e-8, || format!("N={n}: total {} vs {}", table.total(), scale * trace))?;
                for (k, m) in table.sum_over_momenta().iter().enumerate() {
                    let expected = scale * rho.matrix().get(k, k).re;
                    ensure((m - expected).abs() <= 1e-8, || format!("N={n}: position marginal {m} vs {expected}"))?;
                }
                let jpd = momentum_distribution(&rho);
                for (m, p) in table.sum_over_positions().iter().zip(&jpd.probs) {
                    ensure((m - scale * p).abs() <= 1e-8, || format!("N={n}: momentum marginal {m} vs {}", scale * p))?;
                }
            }
        }
    }
    Ok(format!("60 random Hermitian operators, max imaginary residue {worst_imag:.2e}"))
}

/// 10. N = 2 is inconclusive.
fn two_level_inconclusive() -> Outcome {
    for k in 0..=20 {
        let r = k as f64 / 20.0;
        let report = ur_check(&werner_pt(2, r), VERDICT_TOL).map_err(|e| e.to_string())?;
        ensure(report.verdict == UrVerdict::Inconclusive, || format!("r={r}: {:?}", report.verdict))?;
    }
    Ok("21 grid points, all inconclusive".into())
}

/// 11. Gap between the witness and the PPT test.
fn gap_region() -> Outcome {
    let cases = [(0.3, false, true), (0.5, true, true), (0.2, false, false)];
    for (r, ur, ppt) in cases {
        let v = werner_verdict(dim(3), r, VERDICT_TOL).map_err(|e| e.to_string())?;
        ensure(v.ur_violated == ur && v.ppt_entangled == ppt, || {
            format!("r={r}: ur_violated={} ppt_entangled={}", v.ur_violated, v.ppt_entangled)
        })?;
    }
    Ok("r=0.2 neither, r=0.3 PPT only, r=0.5 both".into())
}

/// 12. CLI contract.
fn cli_contract(dir: &Path) -> Outcome {
    let p = |name: &str| dir.join(name).to_str().unwrap().to_owned();
    let ok = |out: &std::process::Output| out.status.code();

    // Round trip through the file format and through ptranspose twice.
    let made = run_bin(&["state", "make", "--kind", "werner", "--N", "3", "--r", "0.5", "--out", &p("w.json")]);
    ensure(ok(&made) == Some(0), || "state make failed".into())?;
    let original = std::fs::read(p("w.json")).unwrap();
    let file = qudit_pt_cli::StateFile::read(&dir.join("w.json")).map_err(|e| e.to_string())?;
    ensure(file.to_json().as_bytes() == original.as_slice(), || "read → write changed bytes".into())?;
    run_bin(&["ptranspose", &p("w.json"), "--out", &p("wpt.json")]);
    run_bin(&["ptranspose", &p("wpt.json"), "--out", &p("back.json")]);
    ensure(std::fs::read(p("back.json")).unwrap() == original, || "double ptranspose not byte-identical".into())?;

    // Determinism across runs and thread counts.
    let scan = |threads: &str, name: &str| {
        run_bin(&["werner-scan", "--N", "2,3,4,5,6,10,100", "--steps", "101", "--threads", threads, "--out", &p(name)]);
        std::fs::read(p(name)).unwrap()
    };
    let a = scan("1", "s1.csv");
    let b = scan("4", "s4.csv");
    let c = scan("4", "s4b.csv");
    let d = scan("0", "s0.csv");
    ensure(a == b && b == c && c == d, || "werner-scan output differs between runs".into())?;

    // Exit codes.
    let code_violated = ok(&run_bin(&["ur-check", &p("wpt.json")]));
    let code_satisfied = ok(&run_bin(&["ur-check", &p("w.json")]));
    run_bin(&["state", "make", "--kind", "werner", "--N", "2", "--r", "0.9", "--out", &p("w2.json")]);
    run_bin(&["ptranspose", &p("w2.json"), "--out", &p("w2pt.json")]);
    let code_inconclusive = ok(&run_bin(&["ur-check", &p("w2pt.json")]));
    ensure(
        code_violated == Some(3) && code_satisfied == Some(0) && code_inconclusive == Some(4),
        || format!("exit codes {code_violated:?} {code_satisfied:?} {code_inconclusive:?}"),
    )?;
    Ok("byte-identical round trips, deterministic scans (1/4/auto threads), exit codes 3/0/4".into())
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let criteria: Vec<Criterion> = vec![
        ("C1 threshold table", Box::new(threshold_table)),
        ("C2 large-N asymptote", Box::new(large_n_asymptote)),
        ("C3 f(r,N) curves", Box::new(|| figure_one(dir.path()))),
        ("C4 negativity", Box::new(negativity_curves)),
        ("C5 Werner-PT expectations", Box::new(werner_pt_expectations)),
        ("C6 witness soundness", Box::new(witness_soundness)),
        ("C7 sign-flip theorems", Box::new(sign_flips)),
        ("C8 index sums vs traces", Box::new(index_sum_equivalence)),
        ("C9 Wigner structure", Box::new(wigner_structure)),
        ("C10 N=2 inconclusive", Box::new(two_level_inconclusive)),
        ("C11 gap region", Box::new(gap_region)),
        ("C12 CLI contract", Box::new(|| cli_contract(dir.path()))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
