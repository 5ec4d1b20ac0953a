//! Run the full closed-vs-series verification sweep from library code — the
//! same grids and thresholds the `verify` CLI subcommand uses — and print one
//! summary line per family.
//!
//! Run with: `cargo run --example verify_families`

use hermite_multisect::numerics::SeriesControl;
use hermite_multisect::sweep::{default_grid, run_sweep, Family};
use std::time::Instant;

fn main() {
    let control = SeriesControl::default();
    let started = Instant::now();
    let mut all_ok = true;
    println!("family       points  max_abs_err  max_rel_err  tolerance  worst point");
    for family in Family::ALL {
        let grid = default_grid(family);
        let report = match run_sweep(family, &grid, &control, 40) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("{}: evaluation failed {e}", family.name());
                std::process::exit(2);
            }
        };
        let tol = family.default_tolerance();
        let ok = report.max_rel_err <= tol;
        all_ok &= ok;
        let worst = report.argmax_params;
        println!(
            "{:<12} {:>6}  {:>11.2e}  {:>11.2e}  {:>9.0e}  j={} k={} z={:+.2}{:+.2}i x={:+.2} [{}]",
            report.family,
            report.grid_size,
            report.max_abs_err,
            report.max_rel_err,
            tol,
            worst.j,
            worst.k,
            worst.z_re,
            worst.z_im,
            worst.x,
            if ok { "ok" } else { "FAIL" },
        );
    }
    println!("\nswept every family in {:?}", started.elapsed());
    std::process::exit(if all_ok { 0 } else { 1 });
}
