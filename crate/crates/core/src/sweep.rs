//! Family definitions, default verification grids, and the closed-vs-series
//! sweep runner shared by the CLI and the acceptance suite.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exp_sums::{s_closed, s_series, MultisectIndex};
use crate::genfun::{g_closed, g_series, GenFunPoint};
use crate::numerics::{PointParams, SeriesControl, SeriesSum, VerifyReport};
use crate::operators::{
    i2_quadrature, ij_quadrature, ij_series_counted, shift_apply, OperatorQuery, TestFunction,
};
use crate::squeezed::{k2010_closed, k2110_closed, k_combined_closed, k_series, KPoint, KVariant};

/// The sum families exposed by sweeps and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Multisected exponential sums.
    S,
    /// Multisected Hermite generating functions.
    G,
    /// Even half-index-factorial Hermite sum.
    KEven,
    /// Odd half-index-factorial Hermite sum.
    KOdd,
    /// Interleaved `floor(n/2)!` Hermite sum.
    KCombined,
    /// Operator exponentials `exp[(a d/dx)^j]`; the `z` slot carries the
    /// real scale `a`.
    I,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::S,
        Family::G,
        Family::KEven,
        Family::KOdd,
        Family::KCombined,
        Family::I,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::S => "S",
            Family::G => "G",
            Family::KEven => "K-even",
            Family::KOdd => "K-odd",
            Family::KCombined => "K-combined",
            Family::I => "I",
        }
    }

    /// Closed-vs-series agreement threshold the default sweep must meet.
    pub fn default_tolerance(&self) -> f64 {
        match self {
            Family::S => 1e-11,
            Family::G => 1e-9,
            Family::KEven | Family::KOdd | Family::KCombined => 1e-9,
            Family::I => 1e-8,
        }
    }

    /// `(j, k)` carried in records for the fixed-index families.
    pub fn fixed_index(&self) -> Option<(u32, u32)> {
        match self {
            Family::KEven => Some((2, 0)),
            Family::KOdd => Some((2, 1)),
            Family::KCombined => Some((1, 0)),
            _ => None,
        }
    }
}

/// One point of a sweep.
#[derive(Debug, Clone)]
pub struct GridPoint {
    pub family: Family,
    pub j: u32,
    pub k: u32,
    pub z: Complex64,
    pub x: f64,
    /// Test function for the operator family; ignored elsewhere.
    pub func: Option<TestFunction>,
}

impl GridPoint {
    pub fn params(&self) -> PointParams {
        PointParams {
            j: self.j,
            k: self.k,
            z_re: self.z.re,
            z_im: self.z.im,
            x: self.x,
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "family={} j={} k={} z={}{}{}i x={}",
            self.family.name(),
            self.j,
            self.k,
            self.z.re,
            if self.z.im < 0.0 { "-" } else { "+" },
            self.z.im.abs(),
            self.x
        )
    }

    fn operator_query(&self) -> Result<OperatorQuery> {
        if self.z.im != 0.0 {
            return Err(Error::Domain(
                "operator family takes a real scale; give z with zero imaginary part".into(),
            ));
        }
        let func = self.func.clone().ok_or_else(|| {
            Error::Domain("operator family needs a test function (--fn)".into())
        })?;
        Ok(OperatorQuery::new(func, self.z.re, self.x, self.j))
    }
}

/// Closed-form path of a grid point. For the operator family this is the
/// shift (`j = 1`), the Gaussian-smoothing rule (`j = 2`), or the tensor
/// quadrature (`j = 3, 4`).
pub fn closed_value(point: &GridPoint, rule_order: usize) -> Result<Complex64> {
    match point.family {
        Family::S => s_closed(MultisectIndex::new(point.j, point.k), point.z),
        Family::G => g_closed(&GenFunPoint::new(point.j, point.k, point.z, point.x)),
        Family::KEven => k2010_closed(&KPoint::new(point.z, point.x)),
        Family::KOdd => k2110_closed(&KPoint::new(point.z, point.x)),
        Family::KCombined => k_combined_closed(&KPoint::new(point.z, point.x)),
        Family::I => {
            let q = point.operator_query()?;
            match point.j {
                1 => Ok(shift_apply(&q.func, Complex64::new(q.scale, 0.0), q.x)),
                2 => i2_quadrature(&q, rule_order),
                _ => ij_quadrature(&q, rule_order),
            }
        }
    }
}

/// Series path of a grid point.
pub fn series_value(point: &GridPoint, control: &SeriesControl) -> Result<SeriesSum> {
    match point.family {
        Family::S => s_series(MultisectIndex::new(point.j, point.k), point.z, control),
        Family::G => g_series(&GenFunPoint::new(point.j, point.k, point.z, point.x), control),
        Family::KEven => k_series(KVariant::Even, &KPoint::new(point.z, point.x), control),
        Family::KOdd => k_series(KVariant::Odd, &KPoint::new(point.z, point.x), control),
        Family::KCombined => k_series(KVariant::Combined, &KPoint::new(point.z, point.x), control),
        Family::I => ij_series_counted(&point.operator_query()?, control),
    }
}

fn real_points(values: &[f64]) -> Vec<Complex64> {
    values.iter().map(|&v| Complex64::new(v, 0.0)).collect()
}

/// The default grid each family is verified on.
pub fn default_grid(family: Family) -> Vec<GridPoint> {
    let mut grid = Vec::new();
    match family {
        Family::S => {
            let axis = [-3.0, -1.0, 0.0, 1.0, 3.0];
            for j in 1..=6u32 {
                for k in 0..=(j + 2) {
                    for &re in &axis {
                        for &im in &axis {
                            grid.push(GridPoint {
                                family,
                                j,
                                k,
                                z: Complex64::new(re, im),
                                x: 0.0,
                                func: None,
                            });
                        }
                    }
                }
            }
        }
        Family::G => {
            let mut zs = real_points(&[-1.5, -0.9, -0.3, 0.0, 0.3, 0.9, 1.5]);
            zs.push(Complex64::new(0.0, 0.5));
            zs.push(Complex64::new(1.0, 0.5));
            let xs = [-3.0, -1.0, 0.0, 0.7, 2.5];
            for j in 1..=5u32 {
                for k in 0..=(j + 1) {
                    for &z in &zs {
                        for &x in &xs {
                            grid.push(GridPoint {
                                family,
                                j,
                                k,
                                z,
                                x,
                                func: None,
                            });
                        }
                    }
                }
            }
        }
        Family::KEven | Family::KOdd | Family::KCombined => {
            let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
            let phases = [
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(inv_sqrt2, inv_sqrt2),
            ];
            let (j, k) = family.fixed_index().unwrap();
            for &r in &[0.05, 0.15, 0.25, 0.35] {
                for &phase in &phases {
                    for &x in &[-2.0, -0.5, 0.0, 1.0, 2.5] {
                        grid.push(GridPoint {
                            family,
                            j,
                            k,
                            z: r * phase,
                            x,
                            func: None,
                        });
                    }
                }
            }
        }
        Family::I => {
            let polys = [
                TestFunction::polynomial(vec![1.0, 0.0, 2.0, 0.0, 0.0, -3.0, 0.0, 0.0, 1.0])
                    .expect("static coefficients"),
                TestFunction::polynomial(vec![-3.0, 2.0, 0.0, 0.0, -1.0, 0.5])
                    .expect("static coefficients"),
            ];
            for func in &polys {
                for j in 2..=3u32 {
                    for &a in &[0.1, 0.4, 0.8] {
                        for &x in &[-2.0, 0.0, 1.5] {
                            grid.push(GridPoint {
                                family,
                                j,
                                k: 0,
                                z: Complex64::new(a, 0.0),
                                x,
                                func: Some(func.clone()),
                            });
                        }
                    }
                }
            }
            // Gaussian smoothing within the convergent region 4a^2 < 0.8
            let gauss = TestFunction::gaussian(1.0).expect("static width");
            for &a in &[0.1, 0.3, 0.44] {
                for &x in &[-2.0, 0.0, 1.5] {
                    grid.push(GridPoint {
                        family,
                        j: 2,
                        k: 0,
                        z: Complex64::new(a, 0.0),
                        x,
                        func: Some(gauss.clone()),
                    });
                }
            }
        }
    }
    grid
}

/// An evaluation failure at one grid point.
#[derive(Debug, Clone)]
pub struct SweepError {
    pub point: String,
    pub source: Error,
}

impl std::fmt::Display for SweepError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at {}: {}", self.point, self.source)
    }
}

/// Run closed-vs-series over a grid and aggregate the maxima.
///
/// Points are evaluated in parallel on the ambient rayon pool but reduced in
/// grid order, so the report is deterministic; the first failing point (in
/// grid order) aborts the sweep.
pub fn run_sweep(
    family: Family,
    grid: &[GridPoint],
    control: &SeriesControl,
    rule_order: usize,
) -> std::result::Result<VerifyReport, SweepError> {
    let evals: Vec<Result<(Complex64, SeriesSum)>> = grid
        .par_iter()
        .map(|point| {
            let closed = closed_value(point, rule_order)?;
            let series = series_value(point, control)?;
            Ok((closed, series))
        })
        .collect();

    let mut report = VerifyReport {
        family: family.name().to_string(),
        grid_size: grid.len(),
        max_abs_err: 0.0,
        max_rel_err: 0.0,
        argmax_params: PointParams::default(),
        terms_used_max: 0,
    };
    for (point, eval) in grid.iter().zip(evals) {
        let (closed, series) = eval.map_err(|source| SweepError {
            point: point.describe(),
            source,
        })?;
        let abs_err = (closed - series.value).norm();
        let rel_err = abs_err / (1.0 + closed.norm());
        if rel_err > report.max_rel_err {
            report.max_rel_err = rel_err;
            report.argmax_params = point.params();
        }
        report.max_abs_err = report.max_abs_err.max(abs_err);
        report.terms_used_max = report.terms_used_max.max(series.terms_used);
    }
    Ok(report)
}

/// Default sweep for one family, judged against `tolerance`.
pub fn verify_family(
    family: Family,
    control: &SeriesControl,
    rule_order: usize,
) -> std::result::Result<VerifyReport, SweepError> {
    run_sweep(family, &default_grid(family), control, rule_order)
}
