//! Series multisection in action: the roots-of-unity filter weight
//! `(1/j) Σ_l e^{i2πlm/j}` is exactly 1 when `j | m` and cancels to rounding
//! noise otherwise. That indicator is what turns an infinite stride-j series
//! into a finite phase average.
//!
//! Run with: `cargo run --example multisection_filter`

use hermite_multisect::numerics::{filter_weight, roots_of_unity};

fn main() {
    let j = 5;
    println!("5th roots of unity (l = 1..5):");
    for (l, w) in roots_of_unity(j).unwrap().iter().enumerate() {
        println!("  l={}  {:+.6}{:+.6}i  |w|-1 = {:+.1e}", l + 1, w.re, w.im, w.norm() - 1.0);
    }

    println!("\nfilter weight for j = {j}:");
    println!("  m   weight            selects m ≡ 0 (mod {j})");
    for m in 0..=15u64 {
        let w = filter_weight(j, m).unwrap();
        let mark = if m % j as u64 == 0 { "<-- kept" } else { "" };
        println!("  {m:>2}  {w:+.3e}    {mark}");
    }

    // the classification holds across every stride the library verifies
    let mut checked = 0;
    for j in 1..=24 {
        for m in 0..=(10 * j as u64) {
            let w = filter_weight(j, m).unwrap();
            assert_eq!(w == 1.0, m % j as u64 == 0);
            assert!(w == 1.0 || w.abs() <= 1e-13);
            checked += 1;
        }
    }
    println!("\nclassified {checked} (j, m) pairs with no misfires");
}
