use lattice_toric::{divisor_to_polygon, primitive, NewtonPolygon, RayBasis};
use proptest::prelude::*;

fn point_set() -> impl Strategy<Value = Vec<[i64; 2]>> {
    prop::collection::vec((-4i64..=4, -4i64..=4).prop_map(|(x, y)| [x, y]), 3..9)
}

proptest! {
    #[test]
    fn polygon_divisor_round_trip(pts in point_set()) {
        let n = NewtonPolygon::hull(&pts).unwrap();
        prop_assume!(n.area2() > 0);
        let p = divisor_to_polygon(&n.divisor(), &n.fan()).unwrap();
        prop_assert_eq!(p.lattice_points(), n.lattice_points());
        for v in n.vertices() {
            prop_assert!(p.vertices().contains(&[v[0].into(), v[1].into()]));
        }
    }

    #[test]
    fn pick_and_area_relations(pts in point_set()) {
        let n = NewtonPolygon::hull(&pts).unwrap();
        prop_assume!(n.area2() > 0);
        let interior = n.interior_points().len() as i64;
        prop_assert_eq!(interior, n.interior_count());
        prop_assert_eq!(n.area2(), 2 * interior + n.boundary_count() - 2);
        let edge_sum: i64 = n.edges().iter().map(|e| e.length).sum();
        prop_assert_eq!(edge_sum, n.boundary_count());
        let all = n.lattice_points().len() as i64;
        prop_assert_eq!(all, interior + n.boundary_count());
        // Rebuilding from edge vectors reproduces the polygon up to translation.
        let vecs: Vec<[i64; 2]> = n
            .edges()
            .iter()
            .flat_map(|e| std::iter::repeat(e.direction).take(e.length as usize))
            .collect();
        let rebuilt = NewtonPolygon::from_edge_vectors(&vecs).unwrap();
        prop_assert!(rebuilt.congruent(&n));
        let shoelace: i64 = {
            let d: Vec<[i64; 2]> = n.edges().iter().map(|e| [e.direction[0] * e.length, e.direction[1] * e.length]).collect();
            let mut acc = 0;
            let mut partial = [0i64, 0];
            for v in &d {
                acc += partial[0] * v[1] - partial[1] * v[0];
                partial = [partial[0] + v[0], partial[1] + v[1]];
            }
            acc
        };
        prop_assert_eq!(shoelace, n.area2());
    }

    #[test]
    fn ray_basis_change_is_invertible(x in -6i64..=6, y in -6i64..=6, m0 in -9i64..=9, m1 in -9i64..=9) {
        prop_assume!((x, y) != (0, 0));
        let x1 = primitive([x, y]);
        let u = [-x1[1], x1[0]];
        let r = RayBasis::new(x1, u).unwrap();
        prop_assert_eq!(r.det().abs(), 1);
        prop_assert_eq!(r.x2[0] * u[0] + r.x2[1] * u[1], 1);
        let (b, c) = r.to_ray([m0, m1]);
        prop_assert_eq!(c, m0 * u[0] + m1 * u[1]);
        prop_assert_eq!(r.from_ray(b, c), [m0, m1]);
    }

    #[test]
    fn minimizers_share_one_level(pts in point_set(), shift in prop::collection::vec(-2i64..=2, 8)) {
        let n = NewtonPolygon::hull(&pts).unwrap();
        prop_assume!(n.area2() > 0);
        let mut d = n.divisor();
        let coeffs: Vec<_> = d.coeffs().iter().zip(&shift).map(|(c, s)| c + lattice_toric::Q::new(*s, 2)).collect();
        d = lattice_toric::RationalDivisor::new(coeffs);
        let p = divisor_to_polygon(&d, &n.fan()).unwrap();
        let pts = p.lattice_points();
        for rho in 0..n.fan().len() {
            match p.edge_minimizers(rho) {
                Ok(min) => {
                    prop_assert!(!pts.is_empty());
                    let u = n.fan().rays[rho];
                    let level = min[0][0] * u[0] + min[0][1] * u[1];
                    prop_assert!(min.iter().all(|m| m[0] * u[0] + m[1] * u[1] == level));
                    prop_assert!(pts.iter().all(|m| m[0] * u[0] + m[1] * u[1] >= level));
                }
                Err(_) => prop_assert!(pts.is_empty()),
            }
        }
    }
}
