//! The operator exponentials `exp[(a d/dx)^j]`: pure shift at j = 1,
//! Gaussian smoothing at j = 2, and the phase-summed tensor quadrature for
//! j = 3, 4 — each checked against the terminating/derivative series.
//!
//! Run with: `cargo run --example translation_operators`

use hermite_multisect::numerics::SeriesControl;
use hermite_multisect::operators::{
    i2_quadrature, ij_quadrature, ij_series, shift_apply, OperatorQuery, TestFunction,
};
use num_complex::Complex64;

fn main() {
    let control = SeriesControl::default();

    // j = 1 is the shift g(x) -> g(x + a), complex shifts included
    let cube = TestFunction::polynomial(vec![0.0, 0.0, 0.0, 1.0]).unwrap();
    let shifted = shift_apply(&cube, Complex64::new(0.0, 1.0), 1.0);
    println!("shift: (x³ at x = 1 shifted by i) = {:+.1}{:+.1}i  ((1+i)³ = -2+2i)", shifted.re, shifted.im);

    // j = 2 on a polynomial: the series terminates, the quadrature is exact
    let square = TestFunction::polynomial(vec![0.0, 0.0, 1.0]).unwrap();
    let q = OperatorQuery::new(square, 0.4, 1.0, 2);
    println!(
        "\nsmoothing a square (a = 0.4, x = 1): series = {:.12}, quadrature = {:.12} (x² + 2a² = 1.32)",
        ij_series(&q, &control).unwrap().re,
        i2_quadrature(&q, 40).unwrap().re
    );

    // j = 2 on a Gaussian reproduces the smoothed-Gaussian closed form as
    // long as 4a²β < 1; at the boundary the derivative series diverges
    let gauss = TestFunction::gaussian(1.0).unwrap();
    println!("\nGaussian smoothing, closed form vs both routes:");
    for a in [0.1, 0.3, 0.45] {
        let q = OperatorQuery::new(gauss.clone(), a, 0.8, 2);
        let denom = 1.0 + 4.0 * a * a;
        let want = (1.0 / denom).sqrt() * (-0.64 / denom).exp();
        let series = ij_series(&q, &control).unwrap().re;
        let quad = i2_quadrature(&q, 60).unwrap().re;
        println!("  a={a}: closed {want:.12}  series {series:.12}  quadrature {quad:.12}");
    }
    let refused = ij_series(&OperatorQuery::new(gauss, 0.5, 0.0, 2), &control).unwrap_err();
    println!("  a=0.5 is refused: {refused}");

    // the exponential is an eigenfunction: a factor e^{(aλ)^j}
    println!("\nexponential eigenproperty at λ = 0.9, x = 0.5:");
    let exp_fn = TestFunction::exponential(0.9).unwrap();
    for j in 1..=4u32 {
        let q = OperatorQuery::new(exp_fn.clone(), 0.6, 0.5, j);
        let got = ij_series(&q, &control).unwrap().re;
        let want = ((0.6f64 * 0.9).powi(j as i32) + 0.9 * 0.5).exp();
        println!("  j={j}: {got:.12}  (e^((aλ)^j) e^(λx) = {want:.12})");
    }

    // higher orders by the (j-1)-fold tensor quadrature
    println!("\ntensor quadrature vs terminating series on x⁶ (a = 0.4, x = 0):");
    let sixth = TestFunction::polynomial(vec![0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
    for j in [2u32, 3, 4] {
        let q = OperatorQuery::new(sixth.clone(), 0.4, 0.0, j);
        let series = ij_series(&q, &control).unwrap().re;
        let quad = ij_quadrature(&q, 40).unwrap();
        println!(
            "  j={j}: series {series:.12}  quadrature {:.12}  (im {:+.1e})",
            quad.re, quad.im
        );
    }

    // constants validate the normalization prefactor end to end
    let one = TestFunction::polynomial(vec![1.0]).unwrap();
    let q = OperatorQuery::new(one, 0.7, 2.0, 4);
    println!("\nconstants are preserved: I₄[1] = {:.15}", ij_quadrature(&q, 40).unwrap().re);
}
