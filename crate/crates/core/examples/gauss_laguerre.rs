//! Generalized Gauss–Laguerre rules: nodes and weights for
//! `∫_0^∞ s^α e^{-s} f(s) ds`, built by Golub–Welsch.
//!
//! The fractional-power weights (`α = -k/j`) are exactly what the operator
//! quadratures need; here they recover Gamma-function values and demonstrate
//! polynomial exactness to degree 2·order - 1.
//!
//! Run with: `cargo run --example gauss_laguerre`

use hermite_multisect::numerics::{gauss_hermite, gauss_laguerre};

fn main() {
    let rule = gauss_laguerre(-0.5, 8).unwrap();
    println!("Gauss–Laguerre, alpha = -1/2, order 8:");
    println!("  node              weight");
    for (x, w) in rule.nodes().iter().zip(rule.weights()) {
        println!("  {x:<16.12}  {w:.12e}");
    }

    // the zeroth moment is Gamma(alpha + 1)
    let total: f64 = rule.weights().iter().sum();
    println!("  weight sum = {total:.15}  (Γ(1/2) = √π = {:.15})", std::f64::consts::PI.sqrt());

    println!("\nGamma values by quadrature:");
    let gamma_3_2 = gauss_laguerre(-0.5, 20).unwrap().integrate(|s| s);
    println!("  Γ(3/2) = {gamma_3_2:.15}  (√π/2 = {:.15})", std::f64::consts::PI.sqrt() / 2.0);
    let gamma_1_3 = gauss_laguerre(-2.0 / 3.0, 30).unwrap().integrate(|_| 1.0);
    println!("  Γ(1/3) = {gamma_1_3:.15}");

    println!("\npolynomial exactness at alpha = -1/3, order 12 (exact through degree 23):");
    let alpha = -1.0 / 3.0;
    let rule = gauss_laguerre(alpha, 12).unwrap();
    let mut exact = 1.0; // Γ(alpha + 1) running product: Γ(p+alpha+1)
    let gamma_base = rule.weights().iter().sum::<f64>();
    for p in 0..=23 {
        // Γ(p + α + 1) = (p - 1 + α + 1) Γ(p - 1 + α + 1)
        exact = if p == 0 { gamma_base } else { exact * (p as f64 + alpha) };
        let got = rule.integrate(|s| s.powi(p));
        let rel = ((got - exact) / exact).abs();
        if p % 5 == 0 || p == 23 {
            println!("  ∫ s^{p:<2} s^α e^-s ds: rel err {rel:.1e}");
        }
        assert!(rel <= 1e-12);
    }

    println!("\nGauss–Hermite companion rule (order 15), even moments:");
    let rule = gauss_hermite(15).unwrap();
    for m in [0, 2, 6] {
        let got = rule.integrate(|t| t.powi(m));
        println!("  ∫ t^{m} e^(-t²) dt = {got:.12}");
    }
}
