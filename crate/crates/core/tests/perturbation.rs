use std::path::PathBuf;

use cy3_core::rational::{int, ints, ratio};
use cy3_core::{load_geometry, perturb_polarization, search, Origin, RankCase, SearchConfig};

fn toy() -> cy3_core::Geometry {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/toy.toml");
    load_geometry(path).unwrap()
}

fn config(perturb: bool) -> SearchConfig {
    SearchConfig {
        perturbation_enabled: perturb,
        perturbation_deltas: vec![int(1), ratio(1, 2)],
        ..SearchConfig::default()
    }
}

#[test]
fn flat_ray_has_no_certificate_without_perturbation() {
    let g = toy();
    let h = g.divisor_int(&[1, 1]).unwrap();
    let b = g.divisor_int(&[0, 1]).unwrap();
    assert_eq!(g.cube(&b).unwrap(), int(0));
    assert_eq!(g.c2_dot(&b).unwrap(), int(0));
    assert!(search(&g, &h, &config(false)).unwrap().is_empty());
}

#[test]
fn perturbed_polarization_finds_a_curved_class() {
    let g = toy();
    let h = g.divisor_int(&[1, 1]).unwrap();
    let b = g.divisor_int(&[0, 1]).unwrap();
    let (h2, d2) = perturb_polarization(&g, &h, &b, &config(true)).unwrap().unwrap();
    assert_eq!(h2.coords(), ints(&[1, 2]).as_slice());
    assert_eq!(d2.coords(), ints(&[-1, -3]).as_slice());
    assert_eq!(g.cube(&d2).unwrap(), int(7));

    let certs = search(&g, &h, &config(true)).unwrap();
    assert_eq!(certs.len(), 1);
    let c = &certs[0];
    assert!(c.is_valid());
    assert_eq!(c.d.coords(), ints(&[1, 3]).as_slice());
    assert_eq!(c.h, h2);
    assert_eq!(c.origin, Origin::Perturbed { delta: int(1), m: -1 });
    // 6 chi = c2.D + 8 D^3 = 2 - 56
    assert_eq!(c.chi, int(-9));
    assert!(c.negativity < int(0));
}

#[test]
fn rank_four_origins_match_polarization() {
    let g = toy();
    let h = g.divisor_int(&[1, 1]).unwrap();
    let cfg = SearchConfig {
        rank_case: RankCase::R4,
        include_failures: true,
        ..config(true)
    };
    for c in search(&g, &h, &cfg).unwrap() {
        match c.origin {
            Origin::Lattice | Origin::Multiple { .. } => assert_eq!(c.h, h),
            Origin::Perturbed { .. } => assert_ne!(c.h, h),
        }
    }
}
