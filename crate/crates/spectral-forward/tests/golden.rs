use fixture_support::*;
use kasteleyn::{coboundary, weight_cocycle, Kasteleyn, WeightClass};
use laurent_algebra::{restrict_to_ray, Complex64, LaurentPoly, Scalar};
use spectral_forward::{forward, ForwardError, SpectralData, SpectralJson};
use torus_graph::TorusGraph;

const TOL: f64 = 1e-9;

fn forward_class(g: &TorusGraph, wc: &WeightClass<Q>) -> SpectralData<Q> {
    forward(g, &weight_cocycle(g, wc).unwrap(), TOL).unwrap()
}

fn casimir(g: &TorusGraph, s: &SpectralData<Q>, label: &str) -> Q {
    s.infinity[g.zigzag_index(label).unwrap()].casimir.clone()
}

fn f(x: &Q) -> f64 {
    x.to_complex().re
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm()
}

#[test]
fn square_fixture() {
    let g = graph("square");
    let s = forward_class(&g, &fixture_class(&g, "square"));
    assert_eq!(s.genus, 1);
    assert_eq!(s.divisor.len(), 1);
    assert!(close(s.divisor[0].z, c(1.0 / 42.0), 1e-10), "{:?}", s.divisor[0].z);
    assert!(close(s.divisor[0].w, c(1.0 / 11.0), 1e-10), "{:?}", s.divisor[0].w);
    for (label, value) in [("alpha", "-11/14"), ("beta", "-1/231"), ("gamma", "-210/11"), ("delta", "-77/5")] {
        assert_eq!(casimir(&g, &s, label), q(value), "{label}");
    }
    // Exact mode: every 1/C is an exact root.
    assert!(s.infinity.iter().all(|pt| pt.residual == 0.0));
}

#[test]
fn square_leading_polynomial_on_alpha_ray() {
    // -B - A X1 / x1, with root x1 = -A X1 / B = 1/C_alpha.
    let g = graph("square");
    let s = forward_class(&g, &fixture_class(&g, "square"));
    let pt = &s.infinity[g.zigzag_index("alpha").unwrap()];
    let lead = restrict_to_ray(&s.polynomial, &pt.basis).unwrap();
    let leading: Vec<(i64, Q)> = lead.leading.into_iter().collect();
    assert_eq!(leading, vec![(-1, q("-14")), (0, q("-11"))]);
    assert_eq!(pt.coordinate(), q("-14/11"));
}

#[test]
fn square_divisor_matches_closed_form_on_random_draws() {
    let g = graph("square");
    let mut r = rng(11);
    for _ in 0..10 {
        let wc = random_class(&g, &mut r);
        let sym = symbols_of(&g, &wc);
        let s = forward_class(&g, &wc);
        let p = 1.0 / (f(&sym["A"]) * f(&sym["X1"]) * f(&sym["X2"]));
        let qq = 1.0 / f(&sym["B"]);
        assert!(
            close(s.divisor[0].z, c(p), 1e-10) && close(s.divisor[0].w, c(qq), 1e-10),
            "{:?} vs {p} {qq}",
            s.divisor
        );
    }
}

fn hexagon_closed_form(sym: &Symbols) -> Vec<(Complex64, Complex64)> {
    let v = |k: &str| c(f(&sym[k]));
    let (a, b, x1, x2, x3, x4) = (v("A"), v("B"), v("X1"), v("X2"), v("X3"), v("X4"));
    let t = -b * x1 * x2 * x3 * x4 - b * x1 * x2 * x4 - b;
    let s = (t * t - c(4.0) * b * b * x1 * x2 * x4).sqrt();
    let m = b * x1 * x2 * x3 * x4;
    let n = b * x1 * x2 * x4;
    let p1 = -(s + m - n + b) / (c(2.0) * a * b * x1);
    let q1 = (-s + m + n + b) / (c(2.0) * b * b * x1 * x2 * x4);
    let p2 = -(-s + m - n + b) / (c(2.0) * a * b * x1);
    let q2 = (s + m + n + b) / (c(2.0) * b * b * x1 * x2 * x4);
    vec![(p1, q1), (p2, q2)]
}

fn assert_same_points(s: &SpectralData<Q>, want: &[(Complex64, Complex64)], tol: f64) {
    assert_eq!(s.divisor.len(), want.len());
    for (p, q) in want {
        assert!(
            s.divisor.iter().any(|pt| close(pt.z, *p, tol) && close(pt.w, *q, tol)),
            "missing ({p}, {q}) in {:?}",
            s.divisor
        );
    }
}

#[test]
fn hexagon_divisor_matches_closed_form() {
    let g = graph("hexagon");
    let mut r = rng(5);
    let mut draws = vec![symbols_of(&g, &fixture_class(&g, "hexagon"))];
    draws.extend((0..5).map(|_| random_symbols(&g, &mut r)));
    for sym in draws {
        let wt = figure_weights(&g, "hexagon", &sym);
        let s = forward(&g, &wt, TOL).unwrap();
        assert_eq!(s.genus, 2);
        assert_same_points(&s, &hexagon_closed_form(&sym), 1e-8);
    }
}

fn square_octagon_closed_form(sym: &Symbols) -> (f64, f64) {
    let v = |k: &str| f(&sym[k]);
    let (a, b) = (v("A"), v("B"));
    let (x1, x2, x3, x4, x5, x6, x7) = (v("X1"), v("X2"), v("X3"), v("X4"), v("X5"), v("X6"), v("X7"));
    let p = -x2
        * x4
        * x6
        * (x3 * x5 * x6 * x7 * (x1 * x1 * (x4 + 1.0) + x2 * x4)
            + x1 * x2 * x3 * x3 * x4 * x6 * x6 * x7 * x7
            + x1 * x5 * x5)
        / (a * (x1 * x5 + x2 * x3 * x4 * x6 * x7))
        / (x3 * x4 * x6 * x7 * (x1 * x1 * x5 + x2 * (x5 + 1.0) * (x6 + 1.0))
            + x1 * x5 * (x6 * (x4 + x5 + 1.0) + x5 + 1.0));
    let q = x5 * (-x3 * x4 * x6 * x7 * (x1 * x1 + x2 * x6 + x2) - x1 * x5 * (x6 + 1.0))
        / (b * x1 * x3 * x7 * (x1 * x5 * (x4 * x6 + x6 + 1.0) + x2 * x3 * x4 * x6 * (x6 + 1.0) * x7));
    (p, q)
}

#[test]
fn square_octagon_divisor_matches_closed_form() {
    let g = graph("square_octagon");
    let mut r = rng(8);
    let mut draws = vec![symbols_of(&g, &fixture_class(&g, "square_octagon"))];
    draws.extend((0..3).map(|_| random_symbols(&g, &mut r)));
    for sym in draws {
        let s = forward(&g, &figure_weights(&g, "square_octagon", &sym), TOL).unwrap();
        let (p, qq) = square_octagon_closed_form(&sym);
        assert_same_points(&s, &[(c(p), c(qq))], 1e-8);
    }
}

#[test]
fn square_octagon_beta_ray_has_two_roots() {
    let g = graph("square_octagon");
    let s = forward_class(&g, &fixture_class(&g, "square_octagon"));
    let b1 = &s.infinity[g.zigzag_index("beta1").unwrap()];
    let b2 = &s.infinity[g.zigzag_index("beta2").unwrap()];
    assert_eq!(b1.ray, b2.ray);
    assert_ne!(b1.casimir, b2.casimir);
    let lead = restrict_to_ray(&s.polynomial.to_complex(), &b1.basis).unwrap();
    for pt in [b1, b2] {
        let x = pt.coordinate().to_complex();
        let (value, scale) = lead.leading.iter().fold((c(0.0), 0.0), |(v, sc), (&k, a)| {
            let t = a * x.powi(k as i32);
            (v + t, sc + t.norm())
        });
        assert!(value.norm() / scale <= 1e-9);
    }
}

#[test]
fn divisor_degree_is_the_genus() {
    let mut r = rng(1);
    for name in NAMES {
        let g = graph(name);
        for _ in 0..10 {
            let s = forward_class(&g, &random_class(&g, &mut r));
            assert_eq!(s.divisor.len(), s.genus, "{name}");
            assert_eq!(s.polygon.interior_count() as usize, s.genus);
            for pt in &s.divisor {
                assert!(pt.max_residual() <= 1e-8);
                assert_eq!(pt.column_residuals.len(), g.num_black());
            }
        }
    }
}

#[test]
fn numeric_and_exact_modes_agree() {
    for name in NAMES {
        let g = graph(name);
        let wc = fixture_class(&g, name);
        let exact = forward_class(&g, &wc);
        let wt: Vec<Complex64> = weight_cocycle(&g, &wc).unwrap().iter().map(|x| x.to_complex()).collect();
        let numeric = forward(&g, &wt, TOL).unwrap();
        for (a, b) in exact.divisor.iter().zip(&numeric.divisor) {
            assert!(close(b.z, a.z, 1e-9) && close(b.w, a.w, 1e-9));
        }
        for (a, b) in exact.infinity.iter().zip(&numeric.infinity) {
            assert!(close(b.casimir, a.casimir.to_complex(), 1e-12));
        }
    }
}

#[test]
fn gauge_changes_leave_spectral_data_fixed() {
    let mut r = rng(3);
    for name in NAMES {
        let g = graph(name);
        let wc = fixture_class(&g, name);
        let wt = weight_cocycle(&g, &wc).unwrap();
        let base = forward(&g, &wt, TOL).unwrap();
        for _ in 0..5 {
            let black: Vec<Q> = (0..g.num_black()).map(|_| random_weight(&mut r)).collect();
            let white: Vec<Q> = (0..g.num_white()).map(|_| random_weight(&mut r)).collect();
            let moved = forward(&g, &coboundary(&g, &wt, &black, &white), TOL).unwrap();
            assert_eq!(moved.polynomial, base.polynomial);
            assert_eq!(moved.casimirs(), base.casimirs());
            for (a, b) in base.divisor.iter().zip(&moved.divisor) {
                assert!(close(b.z, a.z, 1e-9) && close(b.w, a.w, 1e-9));
            }
        }
    }
}

#[test]
fn json_round_trip() {
    for name in NAMES {
        let g = graph(name);
        let s = forward_class(&g, &fixture_class(&g, name));
        let text = serde_json::to_string(&s.to_json(&g)).unwrap();
        let parsed: SpectralJson = serde_json::from_str(&text).unwrap();
        let back = SpectralData::<Q>::from_json(&g, &parsed).unwrap();
        assert_eq!(back.polynomial, s.polynomial);
        assert_eq!(back.casimirs(), s.casimirs());
        assert_eq!(
            back.infinity.iter().map(|p| p.basis).collect::<Vec<_>>(),
            s.infinity.iter().map(|p| p.basis).collect::<Vec<_>>()
        );
        for (a, b) in s.divisor.iter().zip(&back.divisor) {
            assert_eq!((a.z, a.w), (b.z, b.w));
        }
        assert_eq!(back.to_json(&g).polynomial, parsed.polynomial);
    }
}

#[test]
fn json_errors() {
    let g = graph("square");
    let mut j = forward_class(&g, &fixture_class(&g, "square")).to_json(&g);
    let entry = j.infinity.remove("alpha").unwrap();
    assert_eq!(SpectralData::<Q>::from_json(&g, &j), Err(ForwardError::MissingZigZag("alpha".into())));
    j.infinity.insert("omega".into(), entry);
    assert_eq!(SpectralData::<Q>::from_json(&g, &j), Err(ForwardError::UnknownZigZag("omega".into())));
    j.schema = "other/2".into();
    assert_eq!(SpectralData::<Q>::from_json(&g, &j), Err(ForwardError::Schema("other/2".into())));
}

#[test]
fn equal_casimirs_on_a_ray_are_rejected() {
    // At unit symbols both zig-zags on each square-octagon ray have C = 1.
    let g = graph("square_octagon");
    let ones: Symbols = symbols_of(&g, &fixture_class(&g, "square_octagon")).into_keys().map(|k| (k, q("1"))).collect();
    let err = forward(&g, &figure_weights(&g, "square_octagon", &ones), TOL).unwrap_err();
    assert!(matches!(err, ForwardError::CasimirCollision { .. }), "{err:?}");
}

#[test]
fn adjugate_column_vanishes_on_the_divisor() {
    let g = graph("hexagon");
    let wc = fixture_class(&g, "hexagon");
    let k = Kasteleyn::new(&g, weight_cocycle(&g, &wc).unwrap()).unwrap();
    let s = forward_class(&g, &wc);
    let col: Vec<LaurentPoly<Complex64>> = k.adjugate_column(g.root_white()).iter().map(|p| p.to_complex()).collect();
    for pt in &s.divisor {
        for qb in &col {
            assert!(spectral_forward::relative_residual(qb, pt.z, pt.w) <= 1e-8);
        }
    }
}
