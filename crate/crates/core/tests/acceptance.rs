//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ratbez::baselines::LuNodes;
use ratbez::chebyshev::QuadratureConfig;
use ratbez::metrics::{residual_orthogonality, DEFAULT_SAMPLES};
use ratbez::{
    approximate, approximate_composite, build_ctable, huang_approximation, jacobi_integral, l2_error, lu_iterate,
    max_error, rational_moments, ApproximationRequest, BezierCurve, ChebyshevSeries, CompositeCurve, ConstraintSpec,
    JacobiWeight, RationalBezierCurve, Subdivision,
};
use ratbez::approx::SegmentSettings;
use ratbez_oracles::{beta_fn, binom, chebyshev_t, constrained_least_squares, exact_gram_inverse, GaussJacobi};

fn curve(points: &[(f64, f64)], weights: &[f64]) -> RationalBezierCurve<f64> {
    let coords = points.iter().flat_map(|&(x, y)| [x, y]).collect();
    RationalBezierCurve::new(2, coords, weights.to_vec()).unwrap()
}

fn starling_first() -> RationalBezierCurve<f64> {
    curve(
        &[(23., 57.), (-13., 43.), (29., 58.), (44., 48.), (30., 42.), (13., 44.), (-2., 77.), (42., 83.), (80., 1.)],
        &[1., 4., 3., 1., 5., 4., 7., 6., 1.],
    )
}

fn starling_second() -> RationalBezierCurve<f64> {
    curve(
        &[(80., 1.), (14., 4.), (3., 54.), (42., 54.), (51., 42.), (36., 49.), (66., 12.), (36., 2.), (47., 3.)],
        &[1., 1., 4., 4., 2., 3., 3., 7., 8.],
    )
}

fn closed_loop() -> RationalBezierCurve<f64> {
    curve(
        &[(14., 1.), (34., 25.), (40., 38.), (-12., 24.), (5., 21.), (26., 7.), (18., 41.), (-13., 34.), (14., 1.)],
        &[1., 3., 3., 4., 1., 7., 5., 3., 1.],
    )
}

fn ninth_degree() -> RationalBezierCurve<f64> {
    curve(
        &[(17., 12.), (32., 34.), (-23., 24.), (33., 62.), (-23., 15.), (25., 3.), (30., -2.), (-5., -8.), (-5., 15.), (11., 8.)],
        &[1., 2., 3., 6., 4., 5., 3., 4., 2., 1.],
    )
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String) {
        if !ok {
            self.failures += 1;
        }
        println!("criterion {id}: {} | {detail}", if ok { "PASS" } else { "FAIL" });
    }
}

fn legendre() -> JacobiWeight<f64> {
    JacobiWeight::legendre()
}

/// Runs the dual method and returns `(e_inf, e_2, elapsed)`.
fn dual_errors(r: &RationalBezierCurve<f64>, m: usize, k: usize, l: usize, w: JacobiWeight<f64>) -> (f64, f64, Duration) {
    let start = Instant::now();
    let req = ApproximationRequest::new(r.clone(), m, ConstraintSpec::new(k, l), w).unwrap();
    let p = approximate(&req).unwrap().approximant;
    let elapsed = start.elapsed();
    let (e_inf, _) = max_error(r, &p, DEFAULT_SAMPLES).unwrap();
    let e_2 = l2_error(r, &p, w, QuadratureConfig::default()).unwrap();
    (e_inf, e_2, elapsed)
}

fn table_row(report: &mut Report, id: &str, name: &str, r: &RationalBezierCurve<f64>, want: (f64, f64)) {
    let (e_inf, e_2, elapsed) = dual_errors(r, 10, 1, 1, legendre());
    let ok = rel(e_inf, want.0) <= 0.01 && rel(e_2, want.1) <= 0.01 && elapsed < Duration::from_secs(1);
    report.line(
        id,
        ok,
        format!("{name} dual m=10: e_inf={e_inf:.4} (want {}), e_2={e_2:.4} (want {}), {elapsed:.2?}", want.0, want.1),
    );
}

fn huang_rows(report: &mut Report) {
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, r, want) in [("closed loop", closed_loop(), (9.41, 3.98)), ("degree 9", ninth_degree(), (5.78, 3.03))] {
        let u = huang_approximation(&r, 10 - r.degree());
        let (e_inf, _) = max_error(&r, &u, DEFAULT_SAMPLES).unwrap();
        let e_2 = l2_error(&r, &u, legendre(), QuadratureConfig::default()).unwrap();
        ok &= rel(e_inf, want.0) <= 0.01 && rel(e_2, want.1) <= 0.01;
        detail.push(format!("{name}: e_inf={e_inf:.3} (want {}), e_2={e_2:.3} (want {})", want.0, want.1));
    }
    report.line("3", ok, detail.join("; "));
}

fn composite_errors(
    subdivision: Subdivision<f64>,
    degrees: &[usize],
    k: usize,
) -> Vec<(f64, f64)> {
    let w = JacobiWeight::new(0.5, 0.5).unwrap();
    let composite = CompositeCurve::new(vec![starling_first(), starling_second()], 0).unwrap();
    let settings: Vec<SegmentSettings<f64>> =
        degrees.iter().map(|&m| SegmentSettings::new(m, ConstraintSpec::new(k, k), w)).collect();
    let out = approximate_composite(&composite, &settings, &subdivision).unwrap();
    out.pieces
        .iter()
        .zip(out.curve.segments())
        .map(|(r, p)| {
            let (e_inf, _) = max_error(r, p, DEFAULT_SAMPLES).unwrap();
            (e_inf, l2_error(r, p, w, QuadratureConfig::default()).unwrap())
        })
        .collect()
}

fn starling(report: &mut Report) {
    let left = composite_errors(Subdivision::None, &[13, 8], 1);
    let want_inf = [3.152, 2.814];
    let want_2 = [0.166, 0.284];
    let ok = left.iter().zip(want_inf.iter().zip(&want_2)).all(|(&(a, b), (&x, &y))| rel(a, x) <= 0.02 && rel(b, y) <= 0.02);
    report.line("4a", ok, format!("composite (13,8), k=l=1: {:?} vs e_inf {want_inf:?}, e_2 {want_2:?}", fmt_pairs(&left)));

    let right = composite_errors(Subdivision::halves(), &[12, 11, 7, 6], 2);
    let want_2 = [0.063, 0.104, 0.045, 0.081];
    let ok = right.iter().zip(&want_2).all(|(&(_, b), &y)| rel(b, y) <= 0.10);
    report.line(
        "4b",
        ok,
        format!("split at 0.5, (12,11,7,6), k=l=2: (e_inf, e_2) {:?} vs e_2 {want_2:?}", fmt_pairs(&right)),
    );
}

fn fmt_pairs(v: &[(f64, f64)]) -> Vec<(String, String)> {
    v.iter().map(|(a, b)| (format!("{a:.3}"), format!("{b:.3}"))).collect()
}

fn lu(report: &mut Report) {
    const LAMBDA: f64 = 1.0;
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, r) in [("closed loop", closed_loop()), ("degree 9", ninth_degree())] {
        let out = lu_iterate(&r, LuNodes::Uniform.nodes(10), LAMBDA, 100).unwrap();
        let hist = &out.residuals;
        let monotone = hist[5..].windows(2).all(|w| w[1] <= w[0]) && hist.iter().all(|&v| v > 0.0);
        let ends = [(0.0, r.eval(0.0)), (1.0, r.eval(1.0))]
            .iter()
            .all(|(t, want)| out.curve.eval(*t).iter().zip(want).all(|(a, b)| (a - b).abs() <= 1e-13));
        let (lu_inf, _) = max_error(&r, &out.curve, DEFAULT_SAMPLES).unwrap();
        let (dual_inf, _, _) = dual_errors(&r, 10, 1, 1, legendre());
        let lu_2 = l2_error(&r, &out.curve, legendre(), QuadratureConfig::default()).unwrap();
        ok &= monotone && ends && lu_inf > dual_inf;
        detail.push(format!(
            "{name}: monotone after 5 = {monotone}, endpoints = {ends}, e_inf@100 = {lu_inf:.3} (e_2 {lu_2:.3}) > dual {dual_inf:.3}"
        ));
    }
    report.line("5", ok, format!("uniform nodes, lambda = {LAMBDA}; {}", detail.join("; ")));
}

fn quadrature_suite(report: &mut Report) {
    let halves = [0.0, 0.5, 1.0];
    let mut worst_moment = 0.0f64;
    for &a in &halves {
        for &b in &halves {
            let w = JacobiWeight::new(a, b).unwrap();
            for total in 1..=30usize {
                let n = total / 2;
                let m = total - n;
                let poly = RationalBezierCurve::new(1, vec![0.0; n + 1], vec![1.0; n + 1]).unwrap();
                let mv = rational_moments(&poly, m, ConstraintSpec::new(0, 0), w, QuadratureConfig::default()).unwrap();
                for h in 0..=total {
                    let exact = binom(total, h) * beta_fn(h as f64 + b + 1.0, (total - h) as f64 + a + 1.0);
                    worst_moment = worst_moment.max(rel(mv.get(h), exact));
                }
            }
        }
    }
    let mut worst_jacobi = 0.0f64;
    for &a in &halves {
        for &b in &halves {
            let quad = GaussJacobi::new(200, a, b);
            let mass = 2f64.powf(a + b + 1.0) * beta_fn(a + 1.0, b + 1.0);
            for j in 0..=40 {
                let exact = quad.integrate(|x| chebyshev_t(j, x));
                let got = jacobi_integral(a, b, &ChebyshevSeries::unit(j)).unwrap();
                // moments that vanish by symmetry are compared against the weight mass
                worst_jacobi = worst_jacobi.max((got - exact).abs() / exact.abs().max(mass));
            }
        }
    }
    report.line(
        "6",
        worst_moment <= 1e-12 && worst_jacobi <= 1e-11,
        format!("unit-weight moments max rel err {worst_moment:.2e} (<= 1e-12); Chebyshev moments T_0..T_40 {worst_jacobi:.2e} (<= 1e-11)"),
    );
}

fn duality_suite(report: &mut Report) {
    let mut worst_delta = 0.0f64;
    let mut worst_gram = 0.0f64;
    for (a, b) in [(0.0, 0.0), (0.5, 0.5), (1.0, 0.0)] {
        let w = JacobiWeight::new(a, b).unwrap();
        let quad = GaussJacobi::new(40, a, b);
        for m in 0..=12usize {
            for k in 0..=2 {
                for l in 0..=2 {
                    if k + l > m {
                        continue;
                    }
                    let table = build_ctable(m, ConstraintSpec::new(k, l), w).unwrap();
                    for i in table.range() {
                        for j in table.range() {
                            let ip = quad.integrate_unit(|t| {
                                table.dual_eval(i, t).unwrap() * ratbez_oracles::bernstein(m, j, t)
                            });
                            let delta = if i == j { 1.0 } else { 0.0 };
                            worst_delta = worst_delta.max((ip - delta).abs());
                        }
                    }
                    // exact rational inverse: a floating-point inverse is itself only good to ~1e-9 at m = 12
                    let inv = exact_gram_inverse(m, k, l, (2.0 * a) as usize, (2.0 * b) as usize);
                    for i in table.range() {
                        for j in table.range() {
                            let want = inv[(i - k, j - k)];
                            worst_gram = worst_gram.max((table.get(i, j) - want).abs() / want.abs());
                        }
                    }
                }
            }
        }
    }
    report.line(
        "7",
        worst_delta <= 1e-8 && worst_gram <= 1e-8,
        format!("max |<D_i,B_j> - delta_ij| = {worst_delta:.2e}; c-table vs Gram inverse max rel err {worst_gram:.2e} (both <= 1e-8)"),
    );
}

fn optimality_suite(report: &mut Report) {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut worst_point = 0.0f64;
    let mut worst_orth = 0.0f64;
    let mut worst_poly = 0.0f64;
    let mut worst_poly_case = String::new();
    for _ in 0..50 {
        let n = rng.random_range(1..=8usize);
        let k = rng.random_range(0..=2usize).min(n + 1);
        let l = rng.random_range(0..=2usize).min(n + 1);
        let m = rng.random_range((k + l).max(1)..=12usize);
        let (a, b) = (rng.random_range(0.0..1.5), rng.random_range(0.0..1.5));
        let w = JacobiWeight::new(a, b).unwrap();
        let weights: Vec<f64> = (0..=n).map(|_| rng.random_range(0.5..4.0)).collect();
        let coords: Vec<f64> = (0..2 * (n + 1)).map(|_| rng.random_range(-50.0..50.0)).collect();
        let r = RationalBezierCurve::new(2, coords, weights.clone()).unwrap();
        let cons = ConstraintSpec::new(k, l);
        let p = approximate(&ApproximationRequest::new(r.clone(), m, cons, w).unwrap()).unwrap().approximant;

        let quad = GaussJacobi::new(120, a, b);
        for c in 0..2 {
            let oracle = constrained_least_squares(&r.component(c), &weights, m, k, l, &quad);
            let scale = oracle.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
            for (got, want) in p.component(c).iter().zip(&oracle) {
                worst_point = worst_point.max((got - want).abs() / scale);
            }
        }
        let magnitude = r.coords().iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
        let orth = residual_orthogonality(&r, &p, cons, w, QuadratureConfig::default()).unwrap();
        worst_orth = worst_orth.max(orth / magnitude);

        // the polynomial with the same control points must be reproduced
        let m_poly = rng.random_range(n.max(k + l)..=12usize);
        let poly = BezierCurve::new(2, r.coords().to_vec()).unwrap();
        let as_rational = RationalBezierCurve::from_polynomial(&poly);
        let q = approximate(&ApproximationRequest::new(as_rational.clone(), m_poly, cons, w).unwrap()).unwrap().approximant;
        let (e, _) = max_error(&as_rational, &q, DEFAULT_SAMPLES).unwrap();
        if e > worst_poly {
            worst_poly = e;
            worst_poly_case = format!("n={n} m={m_poly} k={k} l={l} alpha={a:.2} beta={b:.2}");
        }
    }
    report.line(
        "8",
        worst_point <= 1e-8 && worst_orth <= 1e-8 && worst_poly < 1e-10,
        format!(
            "50 random cases: control points vs normal equations {worst_point:.2e}, residual orthogonality {worst_orth:.2e} (<= 1e-8), polynomial reproduction e_inf {worst_poly:.2e} (< 1e-10) worst at {worst_poly_case}"
        ),
    );
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut report = Report { failures: 0 };
    table_row(&mut report, "1", "closed loop", &closed_loop(), (0.664, 0.167));
    table_row(&mut report, "2", "degree 9", &ninth_degree(), (0.398, 0.106));
    huang_rows(&mut report);
    starling(&mut report);
    lu(&mut report);
    quadrature_suite(&mut report);
    duality_suite(&mut report);
    optimality_suite(&mut report);
    let elapsed = start.elapsed();
    report.line("9", elapsed < Duration::from_secs(60), format!("acceptance wall time {elapsed:.2?} (< 60 s)"));
    if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{} criterion line(s) failed", report.failures);
        ExitCode::FAILURE
    }
}
