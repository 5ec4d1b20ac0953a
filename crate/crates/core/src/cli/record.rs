//! Per-point output records, the timed dual-path evaluation behind them, and
//! parsers for the command-line value syntaxes.

use num_complex::Complex64;
use serde::Serialize;
use std::time::Instant;

use crate::error::Result;
use crate::numerics::SeriesControl;
use crate::operators::TestFunction;
use crate::sweep::{closed_value, series_value, GridPoint};

/// One closed-vs-series comparison, flat so it prints identically as a JSON
/// object and as a CSV row. `rel_err = abs_err / (1 + |closed|)`; for the
/// operator family `z_re` carries the real scale `a`.
#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub family: String,
    pub j: u32,
    pub k: u32,
    pub z_re: f64,
    pub z_im: f64,
    pub x: f64,
    pub closed_re: f64,
    pub closed_im: f64,
    pub series_re: f64,
    pub series_im: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub terms_used: usize,
    pub t_closed_ns: u128,
    pub t_series_ns: u128,
}

/// Evaluate both paths at one point, timing each.
pub fn measure_point(
    point: &GridPoint,
    control: &SeriesControl,
    rule_order: usize,
) -> Result<OutputRecord> {
    let started = Instant::now();
    let closed = closed_value(point, rule_order)?;
    let t_closed_ns = started.elapsed().as_nanos();

    let started = Instant::now();
    let series = series_value(point, control)?;
    let t_series_ns = started.elapsed().as_nanos();

    let abs_err = (closed - series.value).norm();
    Ok(OutputRecord {
        family: point.family.name().to_string(),
        j: point.j,
        k: point.k,
        z_re: point.z.re,
        z_im: point.z.im,
        x: point.x,
        closed_re: closed.re,
        closed_im: closed.im,
        series_re: series.value.re,
        series_im: series.value.im,
        abs_err,
        rel_err: abs_err / (1.0 + closed.norm()),
        terms_used: series.terms_used,
        t_closed_ns,
        t_series_ns,
    })
}

/// Parse `a`, `bi`, `a+bi`, or `a-bi` (also bare `i` / `-i`).
pub fn parse_complex(input: &str) -> std::result::Result<Complex64, String> {
    let s = input.trim();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    let parse_real = |t: &str| -> std::result::Result<f64, String> {
        t.parse::<f64>()
            .map_err(|_| format!("cannot parse '{t}' as a number in '{input}'"))
    };
    let Some(body) = s.strip_suffix(['i', 'I']) else {
        return Ok(Complex64::new(parse_real(s)?, 0.0));
    };
    // split at the sign that separates real and imaginary parts, skipping a
    // leading sign and exponent signs like 1e-3
    let bytes = body.as_bytes();
    let mut split = None;
    for pos in (1..bytes.len()).rev() {
        if (bytes[pos] == b'+' || bytes[pos] == b'-')
            && bytes[pos - 1] != b'e'
            && bytes[pos - 1] != b'E'
        {
            split = Some(pos);
            break;
        }
    }
    let imag_coeff = |t: &str| -> std::result::Result<f64, String> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => parse_real(other),
        }
    };
    match split {
        Some(pos) => {
            let re = parse_real(&body[..pos])?;
            let im = imag_coeff(&body[pos..])?;
            Ok(Complex64::new(re, im))
        }
        None => Ok(Complex64::new(0.0, imag_coeff(body)?)),
    }
}

/// Parse a test-function spec: `poly:c0,c1,...` (ascending coefficients),
/// `exp:lambda`, or `gauss:beta`.
pub fn parse_test_function(input: &str) -> std::result::Result<TestFunction, String> {
    let (kind, args) = input
        .split_once(':')
        .ok_or_else(|| format!("expected kind:args, e.g. poly:0,0,1 — got '{input}'"))?;
    let scalar = |t: &str| -> std::result::Result<f64, String> {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("cannot parse '{t}' as a number in '{input}'"))
    };
    match kind.trim() {
        "poly" => {
            let coeffs = args
                .split(',')
                .map(scalar)
                .collect::<std::result::Result<Vec<f64>, String>>()?;
            TestFunction::polynomial(coeffs).map_err(|e| e.to_string())
        }
        "exp" => TestFunction::exponential(scalar(args)?).map_err(|e| e.to_string()),
        "gauss" => TestFunction::gaussian(scalar(args)?).map_err(|e| e.to_string()),
        other => Err(format!("unknown test function kind '{other}' (use poly, exp, or gauss)")),
    }
}
