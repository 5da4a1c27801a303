//! Randomized invariants of the intersection ring over all built-in geometries.

use cy3_core::catalog::builtin_base;
use cy3_core::rational::{int, ints};
use cy3_core::{
    builtin, builtin_names, check_negativity, extension_chern, solve_orthogonal, BundleData,
    DivisorClass, ExtensionSpec, Geometry,
};
use proptest::prelude::*;

fn geometries() -> Vec<Geometry> {
    builtin_names().iter().map(|n| builtin(n).unwrap()).collect()
}

fn coords(len: usize, seed: &[i64]) -> Vec<i64> {
    (0..len).map(|i| seed[i % seed.len()] + i as i64 % 3 - 1).collect()
}

/// An ample class from a seed: `t H0 + e` with a known ample `H0`, retried
/// with larger `t` until ample.
fn ample_from(g: &Geometry, seed: &[i64]) -> DivisorClass {
    let base = match builtin_base(g.name()) {
        None => vec![1, 3],
        Some(b) => {
            // sigma + pi*(a + c1) with a ample on the base
            let a = if b.is_ample(&b.c1) { b.c1.clone() } else { vec![1, 4] };
            assert!(b.is_ample(&a));
            let mut h = vec![1];
            h.extend(a.iter().zip(&b.c1).map(|(x, c)| x + c));
            h
        }
    };
    for t in 1i64.. {
        let h: Vec<i64> = base
            .iter()
            .enumerate()
            .map(|(i, x)| 3 * t * x + seed[i % seed.len()].rem_euclid(3) - 1)
            .collect();
        let h = g.divisor_int(&h).unwrap();
        if g.is_ample(&h).unwrap() {
            return h;
        }
    }
    unreachable!()
}

fn seed() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-6i64..=6, 10)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triple_product_is_symmetric(idx in 0usize..12, a in seed(), b in seed(), c in seed()) {
        let g = &geometries()[idx];
        let r = g.picard_rank();
        let (a, b, c) = (
            g.divisor_int(&coords(r, &a)).unwrap(),
            g.divisor_int(&coords(r, &b)).unwrap(),
            g.divisor_int(&coords(r, &c)).unwrap(),
        );
        let v = g.triple_product(&a, &b, &c).unwrap();
        for (x, y, z) in [(&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)] {
            prop_assert_eq!(&g.triple_product(x, y, z).unwrap(), &v);
        }
    }

    #[test]
    fn curve_product_is_compatible(idx in 0usize..12, a in seed(), b in seed(), c in seed()) {
        let g = &geometries()[idx];
        let r = g.picard_rank();
        let (a, b, c) = (
            g.divisor_int(&coords(r, &a)).unwrap(),
            g.divisor_int(&coords(r, &b)).unwrap(),
            g.divisor_int(&coords(r, &c)).unwrap(),
        );
        let via_curve = g.pair(&c, &g.product_curve(&a, &b).unwrap()).unwrap();
        prop_assert_eq!(via_curve, g.triple_product(&a, &b, &c).unwrap());
    }

    #[test]
    fn triple_product_is_multilinear(
        idx in 0usize..12, a in seed(), a2 in seed(), b in seed(), c in seed(), k in -5i64..=5,
    ) {
        let g = &geometries()[idx];
        let r = g.picard_rank();
        let d = |s: &[i64]| g.divisor_int(&coords(r, s)).unwrap();
        let (a, a2, b, c) = (d(&a), d(&a2), d(&b), d(&c));
        let lhs = g.triple_product(&(&a.scale_int(k) + &a2), &b, &c).unwrap();
        let rhs = g.triple_product(&a, &b, &c).unwrap() * int(k) + g.triple_product(&a2, &b, &c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn orthogonal_solutions_have_negative_square(idx in 0usize..12, s in seed()) {
        let g = &geometries()[idx];
        let h = ample_from(g, &s);
        let bound = if g.picard_rank() > 6 { 1 } else { 2 };
        for d in solve_orthogonal(g, &h, bound).unwrap() {
            prop_assert_eq!(g.triple_product(&d, &h, &h).unwrap(), int(0));
            prop_assert!(check_negativity(g, &d, &h).unwrap() < int(0));
        }
    }

    #[test]
    fn subbundle_degree_drop_is_negative(idx in 0usize..12, s in seed()) {
        let g = &geometries()[idx];
        let h = ample_from(g, &s);
        let bound = if g.picard_rank() > 6 { 1 } else { 2 };
        let (o, t) = (BundleData::trivial_line(g), BundleData::tangent(g));
        for d in solve_orthogonal(g, &h, bound).unwrap().into_iter().take(8) {
            for (e1, e2) in [(o.clone(), o.clone()), (t.clone(), o.clone())] {
                let spec = ExtensionSpec::new(e1.clone(), e2.clone(), d.clone()).unwrap();
                let e = extension_chern(g, &spec).unwrap();
                let drop = &(&e1.c2 + &e2.c2) - &e.c2;
                prop_assert!(g.pair(&h, &drop).unwrap() < int(0));
            }
        }
    }
}

#[test]
fn elliptic_cube_identity() {
    // (x sigma + alpha)^3 = x^3 c1^2 - 3 x^2 alpha.c1 + 3 x alpha^2
    for name in builtin_names().iter().filter(|n| n.starts_with("elliptic-")) {
        let g = builtin(name).unwrap();
        let b = builtin_base(name).unwrap();
        for x in -2i64..=2 {
            for shift in 0..b.dim() {
                let alpha: Vec<i64> = (0..b.dim()).map(|i| ((i + shift) % 3) as i64 - 1).collect();
                let mut d = vec![x];
                d.extend(&alpha);
                let d = g.divisor_int(&d).unwrap();
                let expected = x.pow(3) * b.c1_squared() - 3 * x * x * b.dot(&alpha, &b.c1)
                    + 3 * x * b.dot(&alpha, &alpha);
                assert_eq!(g.cube(&d).unwrap(), int(expected), "{name}");
            }
        }
        assert_eq!(g.c2_class().coords()[0], int(b.c2 + 11 * b.c1_squared()));
        assert_eq!(g.c2_class().coords()[1..], ints(&b.c1.iter().map(|c| 12 * c).collect::<Vec<_>>())[..]);
    }
}
