//! Heterotic anomaly class `[W] = c2(X) - c2(E)` and its effectivity.

use crate::chern::{extension_chern, BundleData, ExtensionSpec, RankCase};
use crate::cone::cone_membership;
use crate::error::{Error, Result};
use crate::intersection::{CurveClass, Geometry};
use crate::rational::Q;
use crate::search::StabilityCertificate;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnomalyVerdict {
    pub w: CurveClass,
    pub effective: bool,
    /// `(generator index, coefficient)` with nonzero, nonnegative
    /// coefficients; present exactly when `effective`.
    pub decomposition: Option<Vec<(usize, Q)>>,
}

pub fn anomaly_class(g: &Geometry, e: &BundleData) -> Result<CurveClass> {
    if e.c2.geometry() != g.id() {
        return Err(Error::GeometryMismatch {
            left: g.id().to_string(),
            right: e.c2.geometry().to_string(),
        });
    }
    Ok(&g.c2_class() - &e.c2)
}

/// Membership of `w` in the cone spanned by the geometry's configured
/// effective curve generators. `w = 0` is effective.
pub fn is_effective(g: &Geometry, w: &CurveClass) -> Result<AnomalyVerdict> {
    if w.geometry() != g.id() {
        return Err(Error::GeometryMismatch {
            left: g.id().to_string(),
            right: w.geometry().to_string(),
        });
    }
    let generators = &g.data().effective_curves;
    let decomposition = cone_membership(generators, w.coords()).map(|lambda| {
        lambda
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != Q::from_integer(0.into()))
            .collect::<Vec<_>>()
    });
    Ok(AnomalyVerdict {
        w: w.clone(),
        effective: decomposition.is_some(),
        decomposition,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnomalyEntry {
    pub certificate: StabilityCertificate,
    pub bundle: BundleData,
    pub verdict: AnomalyVerdict,
}

/// Builds `E` for each certificate and attaches its anomaly verdict.
/// Effective solutions come first; the input order is kept otherwise.
pub fn anomaly_scan(
    g: &Geometry,
    certificates: &[StabilityCertificate],
    rank_case: &RankCase,
) -> Result<Vec<AnomalyEntry>> {
    let (e1, e2) = rank_case.bundles(g);
    let mut entries = certificates
        .iter()
        .map(|cert| {
            let spec = ExtensionSpec::new(e1.clone(), e2.clone(), cert.d.clone())?;
            let bundle = extension_chern(g, &spec)?;
            let w = anomaly_class(g, &bundle)?;
            let verdict = is_effective(g, &w)?;
            Ok(AnomalyEntry {
                certificate: cert.clone(),
                bundle,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    entries.sort_by_key(|e| !e.verdict.effective);
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_octic_k3, builtin};
    use crate::rational::{int, ratio};
    use crate::search::{search, SearchConfig};

    fn rank2_w(g: &Geometry, d: &[i64]) -> CurveClass {
        let o = BundleData::trivial_line(g);
        let spec = ExtensionSpec::new(o.clone(), o, g.divisor_int(d).unwrap()).unwrap();
        anomaly_class(g, &extension_chern(g, &spec).unwrap()).unwrap()
    }

    #[test]
    fn octic_rank2_family() {
        let g = build_octic_k3();
        for x in -4i64..=4 {
            let w = rank2_w(&g, &[x, -x]);
            assert_eq!(w, g.curve_int(&[56 - 16 * x * x, 24 + 4 * x * x]).unwrap());
        }
        let v = is_effective(&g, &rank2_w(&g, &[1, -1])).unwrap();
        assert!(v.effective);
        assert_eq!(v.w, g.curve_int(&[40, 28]).unwrap());
        assert_eq!(v.decomposition, Some(vec![(0, int(40)), (1, int(28))]));
        let v = is_effective(&g, &rank2_w(&g, &[2, -2])).unwrap();
        assert_eq!(v.w, g.curve_int(&[-8, 40]).unwrap());
        assert!(!v.effective);
        assert!(v.decomposition.is_none());
    }

    #[test]
    fn zero_class_is_effective() {
        let g = build_octic_k3();
        let e = BundleData::tangent(&g);
        let w = anomaly_class(&g, &e).unwrap();
        assert!(w.is_zero());
        assert!(is_effective(&g, &w).unwrap().effective);
    }

    #[test]
    fn octic_rank4_is_six_d_squared() {
        let g = build_octic_k3();
        let (t, o) = (BundleData::tangent(&g), BundleData::trivial_line(&g));
        let d = g.divisor_int(&[1, -1]).unwrap();
        let spec = ExtensionSpec::new(t, o, d.clone()).unwrap();
        let w = anomaly_class(&g, &extension_chern(&g, &spec).unwrap()).unwrap();
        assert_eq!(w, g.product_curve(&d, &d).unwrap().scale_int(6));
        assert_eq!(w, g.curve_int(&[-96, 24]).unwrap());
        assert!(!is_effective(&g, &w).unwrap().effective);
    }

    #[test]
    fn scan_orders_effective_first() {
        let g = build_octic_k3();
        let h = g.divisor(vec![int(1), ratio(5, 2)]).unwrap();
        let certs = search(&g, &h, &SearchConfig::default()).unwrap();
        let entries = anomaly_scan(&g, &certs, &RankCase::R2).unwrap();
        assert_eq!(entries.len(), 3);
        assert!(entries[0].verdict.effective);
        assert_eq!(entries[0].certificate.d.to_i64s().unwrap(), vec![1, -1]);
        assert!(entries[1..].iter().all(|e| !e.verdict.effective));

        let r4 = SearchConfig {
            rank_case: RankCase::R4,
            ..SearchConfig::default()
        };
        let certs = search(&g, &h, &r4).unwrap();
        assert!(!certs.is_empty());
        let entries = anomaly_scan(&g, &certs, &RankCase::R4).unwrap();
        assert!(entries.iter().all(|e| !e.verdict.effective));
    }

    #[test]
    fn elliptic_f0_handcrafted_candidate() {
        let g = builtin("elliptic-f0").unwrap();
        // x = -1, alpha = c1 = 2s + 2f
        let w = rank2_w(&g, &[-1, 2, 2]);
        // fiber: c2 + 11 c1^2 + alpha^2 = 4 + 88 + 8; sigma part 9 c1
        assert_eq!(w, g.curve_int(&[100, 18, 18]).unwrap());
        let v = is_effective(&g, &w).unwrap();
        assert!(v.effective);
    }
}
