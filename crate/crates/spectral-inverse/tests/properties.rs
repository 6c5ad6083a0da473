use fixture_support::*;
use kasteleyn::{coboundary, kasteleyn_signs, weight_cocycle, Kasteleyn, WeightClass};
use laurent_algebra::{Complex64, LaurentPoly};
use proptest::prelude::*;
use spectral_forward::{forward, ForwardError, SpectralData};
use spectral_inverse::*;
use torus_graph::TorusGraph;

const TOL: f64 = 1e-9;

/// The fixture class followed by `n` random classes, skipping draws whose
/// Casimirs coincide on a ray (at most two per call).
fn draws(g: &TorusGraph, name: &str, seed: u64, n: usize) -> Vec<(WeightClass<Q>, Vec<Q>, SpectralData<Q>)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    let mut rejected = 0;
    let mut wc = fixture_class(g, name);
    loop {
        let wt = weight_cocycle(g, &wc).unwrap();
        match forward(g, &wt, TOL) {
            Ok(s) => out.push((wc, wt, s)),
            Err(ForwardError::CasimirCollision { .. }) => {
                rejected += 1;
                assert!(rejected <= 2, "{name}: too many non-generic draws");
            }
            Err(e) => panic!("{name}: {e}"),
        }
        if out.len() == n + 1 {
            return out;
        }
        wc = random_class(g, &mut r);
    }
}

fn reconstruct(g: &TorusGraph, s: &SpectralData<Q>) -> Reconstruction<Complex64> {
    reconstruct_weights(g, &InverseInput::from_forward(s), InverseOptions::default()).unwrap()
}

/// Largest `|c_m / c_0 - 1|` over the coefficientwise ratios `V_m / Q_m`,
/// with coefficients of `V` outside the support of `Q` counted relative to
/// the largest one.
fn spread(v: &LaurentPoly<Complex64>, q: &LaurentPoly<Complex64>) -> f64 {
    let (m0, q0) = q.terms().next().unwrap();
    let c0 = v.coeff(m0.0, m0.1) / q0;
    let mut worst: f64 = 0.0;
    for (m, qm) in q.terms() {
        worst = worst.max(((v.coeff(m.0, m.1) / qm) / c0 - 1.0).norm());
    }
    for (m, vm) in v.terms() {
        if q.coeff(m.0, m.1).norm() == 0.0 {
            worst = worst.max(vm.norm() / v.max_magnitude());
        }
    }
    worst
}

#[test]
fn v_is_proportional_to_the_adjugate_entry() {
    for (i, name) in NAMES.into_iter().enumerate() {
        let g = graph(name);
        for (k, (_, wt, s)) in draws(&g, name, 40 + i as u64, 10).into_iter().enumerate() {
            let q = Kasteleyn::new(&g, wt).unwrap().adjugate_column(g.root_white());
            let rec = reconstruct(&g, &s);
            for b in 0..g.num_black() {
                let x = spread(&rec.v[b], &q[b].to_complex());
                assert!(x <= 1e-7, "{name} draw {k} b{b}: spread {x:e}");
            }
        }
    }
}

#[test]
fn adjugate_newton_polygons_lie_in_the_small_polygons() {
    for (i, name) in NAMES.into_iter().enumerate() {
        let g = graph(name);
        let fan = g.zigzag_fan().unwrap();
        let abel = abel_data(&g, &fan).unwrap();
        for (k, (_, wt, s)) in draws(&g, name, 50 + i as u64, 10).into_iter().enumerate() {
            let kas = Kasteleyn::new(&g, wt).unwrap();
            let offsets = placed_offsets(&g, &fan, &s.polynomial).unwrap();
            for w in 0..g.num_white() {
                let column = kas.adjugate_column(w);
                for (b, q) in column.iter().enumerate() {
                    let small = small_polygon(&g, &fan, &offsets, &abel, b, w).unwrap();
                    for m in q.support() {
                        assert!(small.polygon.contains(m), "{name} draw {k} (b{b}, w{w}): {m:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn every_system_has_a_one_dimensional_nullspace() {
    for (i, name) in NAMES.into_iter().enumerate() {
        let g = graph(name);
        for (_, _, s) in draws(&g, name, 60 + i as u64, 10) {
            let rec = reconstruct(&g, &s);
            for (b, sys) in rec.systems.iter().enumerate() {
                assert_eq!(Complex64::null_vector(&sys.rows, sys.columns.len()).map(|_| 1), Ok(1), "{name} b{b}");
                assert!(sys.rows.len() + 1 >= sys.columns.len(), "{name} b{b}: too few rows");
            }
        }
    }
}

#[test]
fn round_trip_recovers_the_class() {
    for (i, name) in NAMES.into_iter().enumerate() {
        let g = graph(name);
        for (k, (wc, _, s)) in draws(&g, name, 70 + i as u64, 10).into_iter().enumerate() {
            let err = reconstruct(&g, &s).class.max_relative_error(&wc.to_complex());
            assert!(err <= 1e-6, "{name} draw {k}: {err:e}");
        }
    }
}

#[test]
fn gauge_changes_leave_the_reconstruction_fixed() {
    for (i, name) in NAMES.into_iter().enumerate() {
        let g = graph(name);
        let (_, wt, s) = draws(&g, name, 80 + i as u64, 1).pop().unwrap();
        let base = reconstruct(&g, &s).class;
        let mut r = rng(90 + i as u64);
        for k in 0..50 {
            let black: Vec<Q> = (0..g.num_black()).map(|_| random_weight(&mut r)).collect();
            let white: Vec<Q> = (0..g.num_white()).map(|_| random_weight(&mut r)).collect();
            let moved = forward(&g, &coboundary(&g, &wt, &black, &white), TOL).unwrap();
            let err = reconstruct(&g, &moved).class.max_relative_error(&base);
            assert!(err <= 1e-9, "{name} gauge {k}: {err:e}");
        }
    }
}

#[test]
fn exact_and_numeric_reconstruction_agree_on_the_square() {
    // The square's divisor is rational, so exact input is available.
    let g = graph("square");
    for (wc, _, s) in draws(&g, "square", 100, 10) {
        let sym = symbols_of(&g, &wc);
        let p = Q::from_integer(1.into()) / (sym["A"].clone() * sym["X1"].clone() * sym["X2"].clone());
        let qq = Q::from_integer(1.into()) / sym["B"].clone();
        let input =
            InverseInput { polynomial: s.polynomial.clone(), divisor: vec![(p, qq)], infinity: s.infinity.clone() };
        let exact = reconstruct_weights(&g, &input, InverseOptions::default()).unwrap();
        assert_eq!(exact.class, wc);
        assert!(reconstruct(&g, &s).class.max_relative_error(&wc.to_complex()) <= 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn loop_weights_ignore_the_scale_of_each_v(scales in prop::collection::vec((0.1f64..10.0, -3.0f64..3.0), 8)) {
        let g = graph("square_octagon");
        let s = forward(&g, &weight_cocycle(&g, &fixture_class(&g, "square_octagon")).unwrap(), TOL).unwrap();
        let input = InverseInput::from_forward(&s);
        let rec = reconstruct_weights(&g, &input, InverseOptions::default()).unwrap();
        let signs = kasteleyn_signs(&g).unwrap();
        let v: Vec<_> = rec.v.iter().zip(&scales).map(|(v, &(r, t))| v.scale(&Complex64::from_polar(r, t))).collect();
        for walk in g.faces().iter().map(|f| f.boundary.clone()).chain(g.cycles().iter().cloned()) {
            let x = loop_weight(&g, &signs, &walk, &rec.v, &input.infinity).unwrap();
            let y = loop_weight(&g, &signs, &walk, &v, &input.infinity).unwrap();
            prop_assert!((x - y).norm() <= 1e-10 * x.norm());
        }
    }
}
