//! Multisected Hermite series with built-in self-verification.
//!
//! Power series can be cut into residue classes `n ≡ k (mod j)` by averaging
//! over the j-th roots of unity. Applied to the exponential and to the
//! Hermite generating function, that turns several families of infinite sums
//! into finite phase averages. This crate computes those closed forms and,
//! for each one, an independent truncated-series oracle, so every value can
//! be cross-checked at run time:
//!
//! - [`exp_sums`] — stride-offset exponential sums `Σ z^{jn+k}/(jn+k)!`
//!   (`j = 1` is `e^z`, `j = 2` gives cosh/sinh) with closed form, series,
//!   and the derivative relation between neighbouring offsets.
//! - [`genfun`] — the Hermite analogues `Σ z^{jn+k} H_{jn+k}(x)/(jn+k)!`,
//!   plus a shifted-Gaussian evaluation route for consistency checks.
//! - [`operators`] — the operator exponentials `exp[(a d/dx)^j]` applied to
//!   polynomials, exponentials, and Gaussians, by derivative series and by
//!   phase-summed Gauss–Laguerre quadrature (`j = 2` is Gaussian smoothing).
//! - [`squeezed`] — Hermite sums with a `floor(n/2)!` denominator and their
//!   closed forms in `1 + 4z^2`.
//! - [`hermite`] — stable Hermite evaluation and the jointly scaled term
//!   recurrences everything above is built on.
//! - [`numerics`] — roots-of-unity tables, the multisection filter weight,
//!   adaptive series summation, and Gauss–Laguerre/Gauss–Hermite rules.
//! - [`cli`] and [`sweep`] — grid verification sweeps, machine-readable
//!   records, and the command-line front end (`eval`, `verify`, `table`,
//!   `bench`).
//!
//! # Quick start
//!
//! ```
//! use hermite_multisect::exp_sums::{s_closed, s_series, MultisectIndex};
//! use hermite_multisect::numerics::SeriesControl;
//! use num_complex::Complex64;
//!
//! let idx = MultisectIndex::new(3, 1);
//! let z = Complex64::new(1.2, 0.4);
//! let closed = s_closed(idx, z).unwrap();
//! let series = s_series(idx, z, &SeriesControl::default()).unwrap();
//! assert!((closed - series.value).norm() <= 1e-12 * (1.0 + closed.norm()));
//! ```
//!
//! Runnable programs for each capability live in `examples/`; the `verify`
//! subcommand of the bundled binary runs the full default sweep.
//!
//! Everything is a pure function of its inputs. Relative errors throughout
//! are measured as `|a - b| / (1 + |a|)` so they stay meaningful near zeros.

pub mod cli;
mod error;
pub mod exp_sums;
pub mod genfun;
pub mod hermite;
pub mod numerics;
pub mod operators;
pub mod squeezed;
pub mod sweep;

pub use error::{Error, Result};

/// Double-precision complex scalar used for every public numeric result,
/// even when a value is analytically real.
pub type Complex = num_complex::Complex64;
