//! Hermite polynomial evaluation and the scaled term sequence
//! `p_m = H_m(x) z^m / m!` that the series oracles consume.
//!
//! Computing `H_m`, `z^m`, and `m!` separately overflows long before the term
//! itself does; the joint recurrence keeps every intermediate at term scale.
//!
//! Run with: `cargo run --example hermite_terms`

use hermite_multisect::hermite::{hermite_eval, scaled_term_sequence};
use num_complex::Complex64;

fn main() {
    println!("H_n(x) by upward recurrence:");
    println!("  n    H_n(0.75)");
    for n in 0..=10u32 {
        println!("  {n:>2}  {:+.10e}", hermite_eval(n, 0.75).unwrap());
    }

    // past m ≈ 170 the factorial alone exceeds double range, yet the scaled
    // terms sail through because they never form it
    let x = 1.5;
    let z = Complex64::new(0.0, 0.7);
    let terms = scaled_term_sequence(x, z, 400).unwrap();
    println!("\nscaled terms H_m(1.5) (0.7i)^m / m!:");
    for m in [0usize, 5, 25, 100, 171, 250, 400] {
        println!("  m={m:>3}  |p_m| = {:.3e}", terms[m].norm());
    }

    // the naive product is fine while it stays representable
    let mut factorial = 1.0f64;
    let mut max_rel = 0.0f64;
    for (m, &term) in terms.iter().enumerate().take(26) {
        if m > 0 {
            factorial *= m as f64;
        }
        let direct = hermite_eval(m as u32, x).unwrap() * z.powu(m as u32) / factorial;
        let rel = (term - direct).norm() / direct.norm().max(1e-30);
        max_rel = max_rel.max(rel);
    }
    println!("\nagreement with the direct product for m <= 25: max rel err {max_rel:.1e}");

    // degree guard and overflow reporting
    println!("\nguard rails:");
    println!("  hermite_eval(401, 1.0) -> {:?}", hermite_eval(401, 1.0).unwrap_err());
    println!("  hermite_eval(400, 10.) -> {:?}", hermite_eval(400, 10.0).unwrap_err());
}
