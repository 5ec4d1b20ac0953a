//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured margin (run with `--nocapture` to see them).
//!
//! Criteria cover pinned special cases, the multisection filter, closed-vs-
//! series equivalence for every family, partition identities, the shifted-
//! Gaussian route, operator identities, the squeezed-sum ties, and the CLI
//! contract (exit codes, byte determinism, default-suite runtime).

use num_complex::Complex64;
use std::time::Instant;

use hermite_multisect::exp_sums::{s_closed, MultisectIndex};
use hermite_multisect::genfun::{g_closed, g_rodrigues_check, GenFunPoint};
use hermite_multisect::numerics::{filter_weight, SeriesControl};
use hermite_multisect::operators::{
    i2_quadrature, ij_quadrature, ij_series, OperatorQuery, TestFunction,
};
use hermite_multisect::squeezed::{
    k2010_closed, k2110_closed, k_combined_closed, k_series, KPoint, KVariant,
};
use hermite_multisect::sweep::{default_grid, run_sweep, Family};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn single_thread_pool() -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool")
}

/// Deterministic splitmix64 stream for the random-point criteria.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    fn below(&mut self, n: u32) -> u32 {
        (self.next_u64() % n as u64) as u32
    }
}

#[test]
fn criterion_1_special_case_pins() {
    let started = Instant::now();
    let grid: Vec<f64> = vec![-2.0, -1.0, 0.0, 1.0, 2.0];
    let tol = 1e-13;
    let mut worst = 0.0f64;
    let mut check = |got: Complex64, want: f64, what: &str| {
        let rel = (got - c(want, 0.0)).norm() / (1.0 + want.abs());
        worst = worst.max(rel);
        assert!(rel <= tol, "{what}: got {got}, want {want}, rel {rel:e}");
    };
    for &zr in &grid {
        let z = c(zr, 0.0);
        for &x in &grid {
            check(
                g_closed(&GenFunPoint::new(1, 0, z, x)).unwrap(),
                (-zr * zr + 2.0 * x * zr).exp(),
                "full generating function",
            );
            check(
                g_closed(&GenFunPoint::new(2, 0, z, x)).unwrap(),
                (-zr * zr).exp() * (2.0 * x * zr).cosh(),
                "even generating function",
            );
            check(
                g_closed(&GenFunPoint::new(2, 1, z, x)).unwrap(),
                (-zr * zr).exp() * (2.0 * x * zr).sinh(),
                "odd generating function",
            );
        }
        check(s_closed(MultisectIndex::new(1, 0), z).unwrap(), zr.exp(), "S(1,0)");
        check(s_closed(MultisectIndex::new(2, 0), z).unwrap(), zr.cosh(), "S(2,0)");
        // classic closed form of the stride-3 exponential sum at real z
        let want = (zr.exp() + 2.0 * (-zr / 2.0).exp() * (3f64.sqrt() * zr / 2.0).cos()) / 3.0;
        check(s_closed(MultisectIndex::new(3, 0), z).unwrap(), want, "S(3,0)");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "ACCEPTANCE criterion 1 (special-case pins, rel <= 1e-13): PASS \
         (max rel err {worst:.2e}, {elapsed:?})"
    );
}

#[test]
fn criterion_2_multisection_filter() {
    let started = Instant::now();
    for j in 1..=24u32 {
        for m in 0..=(10 * j as u64) {
            let w = filter_weight(j, m).unwrap();
            if m % j as u64 == 0 {
                assert_eq!(w, 1.0, "j={j} m={m}");
            } else {
                assert!(w.abs() <= 1e-13, "j={j} m={m}: {w}");
            }
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("ACCEPTANCE criterion 2 (multisection filter, j <= 24): PASS ({elapsed:?})");
}

#[test]
fn criterion_3_closed_vs_series_equivalence() {
    let started = Instant::now();
    let control = SeriesControl::default();
    let pool = single_thread_pool();
    let cases = [
        (Family::S, 1e-11),
        (Family::G, 1e-9),
        (Family::KEven, 1e-9),
        (Family::KOdd, 1e-9),
        (Family::KCombined, 1e-9),
    ];
    let mut summary = String::new();
    for (family, tol) in cases {
        let report = pool
            .install(|| run_sweep(family, &default_grid(family), &control, 40))
            .unwrap_or_else(|e| panic!("{family:?}: {e}"));
        assert!(
            report.max_rel_err <= tol,
            "{}: max_rel_err {:e} > {tol:e}",
            report.family,
            report.max_rel_err
        );
        summary.push_str(&format!(" {}={:.2e}", report.family, report.max_rel_err));
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "ACCEPTANCE criterion 3 (oracle equivalence S/G/K): PASS \
         (max rel errs{summary}, {elapsed:?})"
    );
}

#[test]
fn criterion_4_partition_identities() {
    let zs = [c(0.8, 0.0), c(-1.7, 0.9), c(2.0, -1.5), c(0.0, 2.0)];
    let xs = [-2.5, 0.0, 1.3];
    let mut worst = 0.0f64;
    for j in 1..=6u32 {
        for &z in &zs {
            let mut total = c(0.0, 0.0);
            for k in 0..j {
                total += s_closed(MultisectIndex::new(j, k), z).unwrap();
            }
            let want = z.exp();
            let rel = (total - want).norm() / (1.0 + want.norm());
            worst = worst.max(rel);
            assert!(rel <= 1e-11, "S partition j={j} z={z}: rel {rel:e}");

            for &x in &xs {
                let mut total = c(0.0, 0.0);
                for k in 0..j {
                    total += g_closed(&GenFunPoint::new(j, k, z, x)).unwrap();
                }
                let want = g_closed(&GenFunPoint::new(1, 0, z, x)).unwrap();
                let rel = (total - want).norm() / (1.0 + want.norm());
                worst = worst.max(rel);
                assert!(rel <= 1e-11, "G partition j={j} z={z} x={x}: rel {rel:e}");
            }
        }
    }
    println!(
        "ACCEPTANCE criterion 4 (partition identities, rel <= 1e-11): PASS \
         (max rel err {worst:.2e})"
    );
}

#[test]
fn criterion_5_shifted_gaussian_route() {
    let mut rng = SplitMix64(0x5EED_0001);
    let mut worst = 0.0f64;
    for sample in 0..50 {
        let j = 1 + rng.below(5);
        let k = rng.below(j);
        let z = c(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7));
        let x = rng.uniform(-2.0, 2.0);
        let point = GenFunPoint::new(j, k, z, x);
        let residual = g_rodrigues_check(&point).unwrap();
        let scale = 1.0 + g_closed(&point).unwrap().norm();
        worst = worst.max(residual / scale);
        assert!(
            residual <= 1e-12 * scale,
            "sample {sample}: j={j} k={k} z={z} x={x} residual {residual:e}"
        );
    }
    println!(
        "ACCEPTANCE criterion 5 (shifted-Gaussian route, 50 random points): PASS \
         (max scaled residual {worst:.2e})"
    );
}

#[test]
fn criterion_6_operator_identities() {
    let started = Instant::now();
    let control = SeriesControl::default();
    let polys = [
        TestFunction::polynomial(vec![1.0, 0.0, 2.0, 0.0, 0.0, -3.0, 0.0, 0.0, 1.0]).unwrap(),
        TestFunction::polynomial(vec![-3.0, 2.0, 0.0, 0.0, -1.0, 0.5]).unwrap(),
        TestFunction::polynomial(vec![0.5, -1.0, 0.0, 2.0]).unwrap(),
    ];

    // smoothing route vs terminating series on polynomials
    let mut worst2 = 0.0f64;
    for func in &polys {
        for &a in &[0.1, 0.4, 0.8] {
            for &x in &[-2.0, 0.0, 1.5] {
                let q = OperatorQuery::new(func.clone(), a, x, 2);
                let series = ij_series(&q, &control).unwrap();
                let quad = i2_quadrature(&q, 40).unwrap();
                let rel = (quad - series).norm() / (1.0 + series.norm());
                worst2 = worst2.max(rel);
                assert!(rel <= 1e-8, "I2 poly a={a} x={x}: rel {rel:e}");
            }
        }
    }

    // smoothing route vs the Gaussian closed form
    let mut worst_gauss = 0.0f64;
    for &beta in &[0.5, 1.0, 2.0] {
        for &a in &[0.1, 0.2, 0.3] {
            let spread = 4.0 * a * a * beta;
            if spread > 0.8 {
                continue;
            }
            for &x in &[-1.5, 0.0, 1.0] {
                let func = TestFunction::gaussian(beta).unwrap();
                let q = OperatorQuery::new(func, a, x, 2);
                let got = i2_quadrature(&q, 40).unwrap();
                let denom = 1.0 + spread;
                let want = (1.0 / denom).sqrt() * (-beta * x * x / denom).exp();
                let rel = (got - c(want, 0.0)).norm() / (1.0 + want);
                worst_gauss = worst_gauss.max(rel);
                assert!(rel <= 1e-8, "I2 gauss beta={beta} a={a} x={x}: rel {rel:e}");
            }
        }
    }

    // tensor route vs terminating series at j = 3 and 4
    let mut worst34 = 0.0f64;
    for func in &polys {
        for j in 3..=4u32 {
            for &a in &[0.1, 0.4, 0.8] {
                for &x in &[-2.0, 0.0, 1.5] {
                    let q = OperatorQuery::new(func.clone(), a, x, j);
                    let series = ij_series(&q, &control).unwrap();
                    let quad = ij_quadrature(&q, 40).unwrap();
                    let rel = (quad - series).norm() / (1.0 + series.norm());
                    worst34 = worst34.max(rel);
                    assert!(rel <= 1e-7, "I{j} poly a={a} x={x}: rel {rel:e}");
                }
            }
        }
    }

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 20.0, "took {elapsed:?}");
    println!(
        "ACCEPTANCE criterion 6 (operator identities): PASS \
         (I2 poly {worst2:.2e}, I2 gauss {worst_gauss:.2e}, I3/I4 {worst34:.2e}, {elapsed:?})"
    );
}

#[test]
fn criterion_7_squeezed_sum_ties_to_operator() {
    let control = SeriesControl::default();
    let gauss = TestFunction::gaussian(1.0).unwrap();
    let mut worst = 0.0f64;
    for &z in &[0.05, 0.15, 0.25, 0.35, 0.4] {
        for &x in &[-2.0, -0.5, 0.0, 1.0, 2.5] {
            let lhs = k2010_closed(&KPoint::new(c(z, 0.0), x)).unwrap() * (-x * x).exp();
            let q = OperatorQuery::new(gauss.clone(), z, x, 2);
            for rhs in [ij_series(&q, &control).unwrap(), i2_quadrature(&q, 60).unwrap()] {
                let rel = (lhs - rhs).norm() / (1.0 + rhs.norm());
                worst = worst.max(rel);
                assert!(rel <= 1e-9, "z={z} x={x}: rel {rel:e}");
            }
        }
    }
    println!(
        "ACCEPTANCE criterion 7 (even squeezed sum = Gaussian smoothing operator): PASS \
         (max rel err {worst:.2e})"
    );
}

#[test]
fn criterion_8_combined_half_factorial_identity() {
    let control = SeriesControl::default();
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let phases = [c(1.0, 0.0), c(0.0, 1.0), c(inv_sqrt2, inv_sqrt2)];
    let mut worst_series = 0.0f64;
    let mut worst_add = 0.0f64;
    for &r in &[0.05, 0.15, 0.25, 0.35] {
        for &phase in &phases {
            for &x in &[-2.0, -0.5, 0.0, 1.0, 2.5] {
                let p = KPoint::new(r * phase, x);
                let closed = k_combined_closed(&p).unwrap();
                let series = k_series(KVariant::Combined, &p, &control).unwrap().value;
                let rel = (closed - series).norm() / (1.0 + closed.norm());
                worst_series = worst_series.max(rel);
                assert!(rel <= 1e-9, "series z={} x={x}: rel {rel:e}", p.z);

                let sum = k2010_closed(&p).unwrap() + k2110_closed(&p).unwrap();
                let rel = (closed - sum).norm() / (1.0 + closed.norm());
                worst_add = worst_add.max(rel);
                assert!(rel <= 1e-13, "additivity z={} x={x}: rel {rel:e}", p.z);
            }
        }
    }
    println!(
        "ACCEPTANCE criterion 8 (floor(n/2)! identity): PASS \
         (series {worst_series:.2e}, additivity {worst_add:.2e})"
    );
}

#[test]
fn criterion_9_cli_contract() {
    use std::process::Command;

    let bin = env!("CARGO_BIN_EXE_hermite-multisect");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env("HERMITE_MULTISECT_THREADS", "1")
            .output()
            .expect("spawn CLI")
    };

    // exit 0: clean evaluation
    let out = run(&["eval", "--family", "S", "--j", "2", "--k", "0", "--z", "1+0i"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");

    // exit 1: verification against an unreachable tolerance, report still printed
    let out = run(&["verify", "--family", "S", "--tol", "1e-16"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stdout.is_empty(), "report must still be printed");

    // exit 2: domain violation
    let out = run(&["eval", "--family", "K-even", "--z", "0.5"]);
    assert_eq!(out.status.code(), Some(2));

    // exit 3: truncation failure
    let out = run(&["eval", "--family", "S", "--z", "3+0i", "--max-terms", "5"]);
    assert_eq!(out.status.code(), Some(3));

    // byte determinism of table output, timing columns excluded
    let dir = std::env::temp_dir().join(format!("hm-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for format in ["csv", "jsonl"] {
        let paths = [dir.join(format!("a.{format}")), dir.join(format!("b.{format}"))];
        for path in &paths {
            let out = run(&[
                "table",
                "--family",
                "G",
                "--j",
                "2",
                "--k",
                "0,1,2",
                "--z",
                "0.3,0.6,0.9",
                "--x",
                "-1,0,1",
                "--format",
                format,
                "--out",
                path.to_str().unwrap(),
            ]);
            assert_eq!(out.status.code(), Some(0), "{out:?}");
        }
        let strip = |text: String| -> Vec<String> {
            text.lines()
                .map(|line| {
                    if format == "csv" {
                        line.rsplitn(3, ',').nth(2).unwrap_or(line).to_string()
                    } else {
                        let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
                        let obj = v.as_object_mut().unwrap();
                        obj.remove("t_closed_ns");
                        obj.remove("t_series_ns");
                        v.to_string()
                    }
                })
                .collect()
        };
        let a = strip(std::fs::read_to_string(&paths[0]).unwrap());
        let b = strip(std::fs::read_to_string(&paths[1]).unwrap());
        let expected_lines = if format == "csv" { 28 } else { 27 }; // header + 27 rows
        assert_eq!(a.len(), expected_lines);
        assert_eq!(a, b, "{format} output must be deterministic");
    }
    std::fs::remove_dir_all(&dir).ok();

    // full default verify suite, single-threaded, under a minute
    let started = Instant::now();
    let out = run(&["verify"]);
    let elapsed = started.elapsed();
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 6);
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}");

    println!(
        "ACCEPTANCE criterion 9 (CLI exit codes, determinism, default suite): PASS \
         (verify suite {elapsed:?})"
    );
}
