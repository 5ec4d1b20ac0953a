//! Why closed forms matter: compare the cost of the finite phase average
//! against the truncated defining series across argument magnitudes. The
//! closed form does j exponentials regardless of |z|; the series needs more
//! terms the farther out it goes.
//!
//! Run with: `cargo run --release --example closed_vs_series_cost`

use hermite_multisect::exp_sums::{s_closed, s_series, MultisectIndex};
use hermite_multisect::numerics::SeriesControl;
use num_complex::Complex64;
use std::time::Instant;

fn median_ns(mut samples: Vec<u128>) -> u128 {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

fn main() {
    let control = SeriesControl::default();
    let idx = MultisectIndex::new(4, 1);
    let reps = 2000;

    println!("S(4,1) closed vs series, {reps} reps each:");
    println!("  |z|   closed ns  series ns  series terms");
    for magnitude in [0.5, 2.0, 5.0, 9.0] {
        let z = Complex64::new(magnitude / 2f64.sqrt(), magnitude / 2f64.sqrt());
        let mut closed_ns = Vec::with_capacity(reps);
        for _ in 0..reps {
            let t = Instant::now();
            let _ = s_closed(idx, z).unwrap();
            closed_ns.push(t.elapsed().as_nanos());
        }
        let mut series_ns = Vec::with_capacity(reps);
        let mut terms = 0;
        for _ in 0..reps {
            let t = Instant::now();
            let sum = s_series(idx, z, &control).unwrap();
            series_ns.push(t.elapsed().as_nanos());
            terms = sum.terms_used;
        }
        println!(
            "  {magnitude:>4.1}  {:>9}  {:>9}  {terms:>8}",
            median_ns(closed_ns),
            median_ns(series_ns)
        );
    }
    println!("\n(timings are medians; run with --release for representative numbers)");
}
