//! Search for divisor classes `D` certifying stable extensions.
//!
//! For an ample `H`, a lattice class `D` certifies a stable extension of
//! `E2(-r1' D)` by `E1(r2' D)` with respect to `H + eps D` when
//!
//! 1. `D.H^2 = 0`,
//! 2. `D.H` is numerically nontrivial (then `D^2.H < 0` by the Hodge index
//!    theorem, which is re-verified), and
//! 3. `chi_D(E2, E1) < 0`, which forces a nonsplit extension.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::chern::{euler_characteristic, twist_cubic, BundleData, ExtensionSpec, RankCase};
use crate::error::{Error, Result};
use crate::intersection::{DivisorClass, Geometry};
use crate::rational::{self, ratio, Q};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Checks {
    pub orthogonal: bool,
    pub nontrivial: bool,
    pub negative: bool,
    pub nonsplit: bool,
}

impl Checks {
    pub fn valid(&self) -> bool {
        self.orthogonal && self.nontrivial && self.negative && self.nonsplit
    }
}

/// How a certified class was reached.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    /// A lattice point of the search box.
    Lattice,
    /// `m` times a primitive solution, found by scanning multiples.
    Multiple { m: i64 },
    /// Solution for the perturbed polarization `H + delta D0`, then scaled by `m`.
    Perturbed { delta: Q, m: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCertificate {
    pub d: DivisorClass,
    pub h: DivisorClass,
    pub checks: Checks,
    /// `D.H^2`
    pub orthogonality: Q,
    /// `B_i.D.H` for each divisor basis element
    pub degree_row: Vec<Q>,
    /// `D^2.H`
    pub negativity: Q,
    pub chi: Q,
    pub origin: Origin,
}

impl StabilityCertificate {
    pub fn is_valid(&self) -> bool {
        self.checks.valid()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum absolute value of each coordinate of `D`.
    pub coord_bound: u32,
    /// Multiples `m` in `[-M, M] \ {0}` are scanned when a ray has no
    /// certified point in the box.
    pub multiple_range: u32,
    pub rank_case: RankCase,
    pub perturbation_enabled: bool,
    /// Decreasing sequence of `delta` values for `H' = H + delta D`.
    pub perturbation_deltas: Vec<Q>,
    pub include_failures: bool,
    /// Worker count; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            coord_bound: 3,
            multiple_range: 3,
            rank_case: RankCase::R2,
            perturbation_enabled: false,
            perturbation_deltas: (1..=5).map(|k| ratio(1, 1 << k)).collect(),
            include_failures: false,
            threads: None,
        }
    }
}

/// `D.H^2`.
pub fn check_orthogonal(g: &Geometry, d: &DivisorClass, h: &DivisorClass) -> Result<Q> {
    g.triple_product(d, h, h)
}

/// `B_i.(D.H)` for every divisor basis element `B_i`.
pub fn degree_row(g: &Geometry, d: &DivisorClass, h: &DivisorClass) -> Result<Vec<Q>> {
    let dh = g.product_curve(d, h)?;
    (0..g.picard_rank())
        .map(|i| g.pair(&g.basis_divisor(i), &dh))
        .collect()
}

/// Whether the curve class `D.H` pairs nontrivially with some divisor.
/// Relies on the pairing being nondegenerate.
pub fn check_numerically_nontrivial(g: &Geometry, d: &DivisorClass, h: &DivisorClass) -> Result<bool> {
    Ok(degree_row(g, d, h)?.iter().any(|x| !x.is_zero()))
}

/// `D^2.H`. When `D.H^2 = 0` and `D.H` is nontrivial the value must be
/// negative; otherwise the intersection data contradicts the Hodge index
/// theorem and an error is returned.
pub fn check_negativity(g: &Geometry, d: &DivisorClass, h: &DivisorClass) -> Result<Q> {
    let value = g.triple_product(d, d, h)?;
    if !value.is_negative()
        && check_orthogonal(g, d, h)?.is_zero()
        && check_numerically_nontrivial(g, d, h)?
    {
        return Err(Error::HodgeIndex {
            d: d.to_string(),
            h: h.to_string(),
            value: rational::format(&value),
        });
    }
    Ok(value)
}

/// Evaluates every certificate condition for one `(D, H)` pair.
pub fn evaluate_candidate(
    g: &Geometry,
    e1: &BundleData,
    e2: &BundleData,
    d: &DivisorClass,
    h: &DivisorClass,
) -> Result<StabilityCertificate> {
    let orthogonality = check_orthogonal(g, d, h)?;
    let degree_row = degree_row(g, d, h)?;
    let negativity = check_negativity(g, d, h)?;
    let spec = ExtensionSpec::new(e1.clone(), e2.clone(), d.clone())?;
    let chi = euler_characteristic(g, &spec)?;
    let checks = Checks {
        orthogonal: orthogonality.is_zero(),
        nontrivial: degree_row.iter().any(|x| !x.is_zero()),
        negative: negativity.is_negative(),
        nonsplit: chi.is_negative(),
    };
    Ok(StabilityCertificate {
        d: d.clone(),
        h: h.clone(),
        checks,
        orthogonality,
        degree_row,
        negativity,
        chi,
        origin: Origin::Lattice,
    })
}

/// Integer weights `w` with `D.H^2 = 0 <=> w.D = 0`.
fn orthogonality_weights(g: &Geometry, h: &DivisorClass) -> Result<Vec<i64>> {
    let raw = (0..g.picard_rank())
        .map(|i| check_orthogonal(g, &g.basis_divisor(i), h))
        .collect::<Result<Vec<_>>>()?;
    let den = Q::from_integer(rational::common_denominator(&raw));
    let ints: Vec<BigInt> = raw.iter().map(|w| (w * &den).to_integer()).collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    ints.iter()
        .map(|x| {
            let x = if gcd.is_zero() { x.clone() } else { x / &gcd };
            x.to_i64().ok_or(Error::Overflow)
        })
        .collect()
}

/// All nonzero integer points of the box `|x_i| <= bound` with `w.x = 0`,
/// in no particular order.
fn kernel_points(weights: &[i64], bound: i64) -> Vec<Vec<i64>> {
    let rho = weights.len();
    let pivot = (0..rho).max_by_key(|&i| (weights[i].unsigned_abs(), std::cmp::Reverse(i)));
    let pivot = pivot.filter(|&p| weights[p] != 0);
    let free: Vec<usize> = (0..rho).filter(|&i| Some(i) != pivot).collect();
    let side = (2 * bound + 1) as usize;

    // Partition on the first (up to) two free coordinates.
    let split = free.len().min(2);
    let chunks = side.pow(split as u32);

    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|chunk| {
            let mut out = Vec::new();
            let mut x = vec![0i64; rho];
            let mut c = chunk;
            for &i in &free[..split] {
                x[i] = (c % side) as i64 - bound;
                c /= side;
            }
            let rest = &free[split..];
            for &i in rest {
                x[i] = -bound;
            }
            loop {
                match pivot {
                    Some(p) => {
                        let partial: i128 = (0..rho)
                            .filter(|&i| i != p)
                            .map(|i| i128::from(weights[i]) * i128::from(x[i]))
                            .sum();
                        let wp = i128::from(weights[p]);
                        if partial % wp == 0 {
                            let v = -partial / wp;
                            if v.abs() <= i128::from(bound) {
                                x[p] = v as i64;
                                if x.iter().any(|&c| c != 0) {
                                    out.push(x.clone());
                                }
                            }
                        }
                    }
                    None => {
                        if x.iter().any(|&c| c != 0) {
                            out.push(x.clone());
                        }
                    }
                }
                // odometer over the remaining free coordinates
                let mut advanced = false;
                for &i in rest {
                    if x[i] < bound {
                        x[i] += 1;
                        advanced = true;
                        break;
                    }
                    x[i] = -bound;
                }
                if !advanced {
                    break;
                }
            }
            out
        })
        .collect()
}

/// Primitive integer classes `D` with `|coords| <= bound`, `D.H^2 = 0` and
/// `D.H` numerically nontrivial, in lexicographic order. Both `D` and `-D`
/// are returned.
pub fn solve_orthogonal(g: &Geometry, h: &DivisorClass, bound: u32) -> Result<Vec<DivisorClass>> {
    if g.picard_rank() < 2 {
        return Err(Error::PicardRankOne);
    }
    let weights = orthogonality_weights(g, h)?;
    let mut points: Vec<Vec<i64>> = kernel_points(&weights, i64::from(bound))
        .into_iter()
        .filter(|x| rational::gcd_all(x) == 1)
        .collect();
    points.sort_unstable();
    let classes = points
        .into_par_iter()
        .map(|x| {
            let d = g.divisor_int(&x)?;
            Ok(check_numerically_nontrivial(g, &d, h)?.then_some(d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(classes.into_iter().flatten().collect())
}

/// Smallest `|m|` in `[-M, M] \ {0}` (positive first on ties) with
/// `chi_{mD}(E2, E1) < 0`.
pub fn scan_multiples(
    g: &Geometry,
    e1: &BundleData,
    e2: &BundleData,
    d: &DivisorClass,
    max_multiple: u32,
) -> Result<Option<(i64, Q)>> {
    if d.is_zero() {
        return Ok(None);
    }
    let spec = ExtensionSpec::new(e1.clone(), e2.clone(), d.clone())?;
    let cubic = twist_cubic(g, &spec)?;
    for k in 1..=i64::from(max_multiple) {
        for m in [k, -k] {
            let chi = cubic.eval(m);
            if chi.is_negative() {
                return Ok(Some((m, chi)));
            }
        }
    }
    Ok(None)
}

/// Fallback for `D^3 = 0`: walk `delta` down the configured sequence and,
/// for the first ample `H' = H + delta D`, return the first orthogonal
/// lattice class `D'` for `H'` with `D'^3 != 0`.
pub fn perturb_polarization(
    g: &Geometry,
    h: &DivisorClass,
    d: &DivisorClass,
    config: &SearchConfig,
) -> Result<Option<(DivisorClass, DivisorClass)>> {
    if !config.perturbation_enabled {
        return Ok(None);
    }
    for delta in &config.perturbation_deltas {
        let perturbed = h + &d.scale(delta);
        if !g.is_ample(&perturbed)? {
            continue;
        }
        for candidate in solve_orthogonal(g, &perturbed, config.coord_bound)? {
            if !g.cube(&candidate)?.is_zero() {
                return Ok(Some((perturbed, candidate)));
            }
        }
    }
    Ok(None)
}

fn in_box(d: &DivisorClass, bound: u32) -> bool {
    let b = rational::int(i64::from(bound));
    d.coords().iter().all(|c| c.abs() <= b)
}

type CandidateKey = (Vec<Q>, Vec<Q>);

/// Runs the full search for an ample `H`.
///
/// Every lattice point of the box is examined. A primitive ray with no
/// certified point inside the box is extended by [`scan_multiples`], and, if
/// its class has `D^3 = 0` and perturbation is enabled, by
/// [`perturb_polarization`]. Output is sorted by `D` then `H`; only valid
/// certificates are kept unless `include_failures` is set.
pub fn search(g: &Geometry, h: &DivisorClass, config: &SearchConfig) -> Result<Vec<StabilityCertificate>> {
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Pool(e.to_string()))?
            .install(|| search_inner(g, h, config)),
        None => search_inner(g, h, config),
    }
}

fn search_inner(g: &Geometry, h: &DivisorClass, config: &SearchConfig) -> Result<Vec<StabilityCertificate>> {
    let violated = g.ample_violations(h)?;
    if !violated.is_empty() {
        return Err(Error::NotAmple {
            violated: violated.iter().map(|f| f.label.clone()).collect(),
        });
    }
    let (e1, e2) = config.rank_case.bundles(g);
    let primitives = solve_orthogonal(g, h, config.coord_bound)?;

    let mut lattice = Vec::new();
    for d0 in &primitives {
        let mut k = 1;
        loop {
            let d = d0.scale_int(k);
            if !in_box(&d, config.coord_bound) {
                break;
            }
            lattice.push(d);
            k += 1;
        }
    }
    let evaluated = lattice
        .par_iter()
        .map(|d| evaluate_candidate(g, &e1, &e2, d, h))
        .collect::<Result<Vec<_>>>()?;

    let mut found: BTreeMap<CandidateKey, StabilityCertificate> = evaluated
        .into_iter()
        .map(|c| ((c.d.coords().to_vec(), c.h.coords().to_vec()), c))
        .collect();

    let ray_certified = |found: &BTreeMap<CandidateKey, StabilityCertificate>, d0: &DivisorClass| {
        (1..)
            .map(|k| d0.scale_int(k))
            .take_while(|d| in_box(d, config.coord_bound))
            .any(|d| {
                found
                    .get(&(d.coords().to_vec(), h.coords().to_vec()))
                    .is_some_and(StabilityCertificate::is_valid)
            })
    };

    let mut extras: Vec<(DivisorClass, DivisorClass, Origin)> = Vec::new();
    for d0 in &primitives {
        if ray_certified(&found, d0) {
            continue;
        }
        if let Some((m, _)) = scan_multiples(g, &e1, &e2, d0, config.multiple_range)? {
            extras.push((d0.scale_int(m), h.clone(), Origin::Multiple { m }));
            continue;
        }
        if config.perturbation_enabled && g.cube(d0)?.is_zero() {
            if let Some((h2, d2)) = perturb_polarization(g, h, d0, config)? {
                if let Some((m, _)) = scan_multiples(g, &e1, &e2, &d2, config.multiple_range)? {
                    let delta = (&h2 - h)
                        .coords()
                        .iter()
                        .zip(d0.coords())
                        .find(|(_, c)| !c.is_zero())
                        .map(|(x, c)| x / c)
                        .unwrap_or_else(Q::zero);
                    extras.push((d2.scale_int(m), h2, Origin::Perturbed { delta, m }));
                }
            }
        }
    }
    for (d, h2, origin) in extras {
        let key = (d.coords().to_vec(), h2.coords().to_vec());
        if found.contains_key(&key) {
            continue;
        }
        let mut cert = evaluate_candidate(g, &e1, &e2, &d, &h2)?;
        cert.origin = origin;
        found.insert(key, cert);
    }

    Ok(found
        .into_values()
        .filter(|c| config.include_failures || c.is_valid())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_octic_k3, builtin};
    use crate::rational::{int, ints};

    fn octic_h() -> (Geometry, DivisorClass) {
        let g = build_octic_k3();
        let h = g.divisor(vec![int(1), ratio(5, 2)]).unwrap();
        (g, h)
    }

    #[test]
    fn orthogonality_values() {
        let (g, h) = octic_h();
        assert_eq!(check_orthogonal(&g, &g.divisor_int(&[1, -1]).unwrap(), &h).unwrap(), int(0));
        assert_eq!(check_orthogonal(&g, &g.divisor_int(&[1, 0]).unwrap(), &h).unwrap(), int(4));
        assert_eq!(check_orthogonal(&g, &g.divisor_int(&[0, 1]).unwrap(), &h).unwrap(), int(4));
    }

    #[test]
    fn nontriviality() {
        let (g, h) = octic_h();
        let d = g.divisor_int(&[1, -1]).unwrap();
        let row = degree_row(&g, &d, &h).unwrap();
        // D.H.L = 4xs
        assert_eq!(row[1], int(4));
        assert!(check_numerically_nontrivial(&g, &d, &h).unwrap());
        assert!(!check_numerically_nontrivial(&g, &g.zero_divisor(), &h).unwrap());
        let h2 = g.divisor_int(&[1, 2]).unwrap();
        assert!(check_numerically_nontrivial(&g, &h2, &h2).unwrap());
    }

    #[test]
    fn negativity_values() {
        let (g, h) = octic_h();
        assert_eq!(check_negativity(&g, &g.divisor_int(&[1, -1]).unwrap(), &h).unwrap(), int(-14));
        assert_eq!(check_negativity(&g, &g.divisor_int(&[2, -2]).unwrap(), &h).unwrap(), int(-56));
        // not orthogonal: raw value, no assertion (E^2.H = -16 + 10)
        assert_eq!(check_negativity(&g, &g.divisor_int(&[1, 0]).unwrap(), &h).unwrap(), int(-6));
        assert_eq!(check_negativity(&g, &g.divisor_int(&[0, 1]).unwrap(), &h).unwrap(), int(0));
    }

    #[test]
    fn hodge_violation_is_reported() {
        // A fake ring where D = B is H-orthogonal with B^2.H > 0.
        use crate::intersection::{GeometryData, LinearForm};
        let mut triple = vec![vec![vec![int(0); 2]; 2]; 2];
        triple[0][0][0] = int(1);
        triple[1][1][1] = int(1);
        let data = GeometryData {
            name: "indefinite".into(),
            divisor_basis: vec!["A".into(), "B".into()],
            curve_basis: vec!["a".into(), "b".into()],
            triple,
            pair_to_curve: vec![
                vec![ints(&[1, 0]), ints(&[0, 0])],
                vec![ints(&[0, 0]), ints(&[0, 1])],
            ],
            pairing: vec![ints(&[1, 0]), ints(&[0, 1])],
            c2: ints(&[0, 0]),
            c3: int(0),
            ample: vec![LinearForm::new("x > 0", ints(&[1, 0]))],
            effective_curves: vec![],
        };
        let g = Geometry::new(data).unwrap();
        let h = g.divisor_int(&[1, 0]).unwrap();
        // B.H^2 = 0, B.H = 0 as a curve: trivial, so no assertion
        let b = g.divisor_int(&[0, 1]).unwrap();
        assert!(check_negativity(&g, &b, &h).is_ok());
        let h = g.divisor_int(&[1, 1]).unwrap();
        let d = g.divisor_int(&[1, -1]).unwrap();
        // D.H^2 = 1 - 1 = 0, D^2.H = 1 + 1 = 2 > 0
        assert!(matches!(check_negativity(&g, &d, &h), Err(Error::HodgeIndex { .. })));
    }

    #[test]
    fn solve_orthogonal_octic() {
        let (g, h) = octic_h();
        let sols = solve_orthogonal(&g, &h, 3).unwrap();
        let coords: Vec<_> = sols.iter().map(|d| d.to_i64s().unwrap()).collect();
        assert_eq!(coords, vec![vec![-1, 1], vec![1, -1]]);

        let h3 = g.divisor_int(&[1, 3]).unwrap();
        let coords: Vec<_> = solve_orthogonal(&g, &h3, 4)
            .unwrap()
            .iter()
            .map(|d| d.to_i64s().unwrap())
            .collect();
        assert_eq!(coords, vec![vec![-1, 2], vec![1, -2]]);
    }

    #[test]
    fn picard_rank_one_is_rejected() {
        use crate::intersection::{GeometryData, LinearForm};
        let data = GeometryData {
            name: "quintic".into(),
            divisor_basis: vec!["H".into()],
            curve_basis: vec!["l".into()],
            triple: vec![vec![vec![int(5)]]],
            pair_to_curve: vec![vec![ints(&[5])]],
            pairing: vec![ints(&[1])],
            c2: ints(&[50]),
            c3: int(-200),
            ample: vec![LinearForm::new("x > 0", ints(&[1]))],
            effective_curves: vec![ints(&[1])],
        };
        let g = Geometry::new(data).unwrap();
        let h = g.divisor_int(&[1]).unwrap();
        assert!(matches!(solve_orthogonal(&g, &h, 3), Err(Error::PicardRankOne)));
    }

    #[test]
    fn multiples() {
        let g = build_octic_k3();
        let o = BundleData::trivial_line(&g);
        let d = g.divisor_int(&[1, -1]).unwrap();
        assert_eq!(scan_multiples(&g, &o, &o, &d, 3).unwrap(), Some((1, int(-40))));
        let l = g.divisor_int(&[0, 1]).unwrap();
        assert_eq!(scan_multiples(&g, &o, &o, &l, 5).unwrap(), Some((-1, int(-4))));
        assert_eq!(scan_multiples(&g, &o, &o, &g.zero_divisor(), 5).unwrap(), None);
        let minus = g.divisor_int(&[-1, 1]).unwrap();
        assert_eq!(scan_multiples(&g, &o, &o, &minus, 3).unwrap(), Some((-1, int(-40))));
    }

    #[test]
    fn perturbation_gates() {
        let (g, h) = octic_h();
        let l = g.divisor_int(&[0, 1]).unwrap();
        let mut config = SearchConfig::default();
        assert_eq!(perturb_polarization(&g, &h, &l, &config).unwrap(), None);

        config.perturbation_enabled = true;
        let (h2, d2) = perturb_polarization(&g, &h, &l, &config).unwrap().unwrap();
        assert_eq!(h2, g.divisor(vec![int(1), int(3)]).unwrap());
        assert!(!g.cube(&d2).unwrap().is_zero());
        assert!(check_orthogonal(&g, &d2, &h2).unwrap().is_zero());

        // pushing along -L by at least 1/2 leaves the ample cone
        let minus_l = -&l;
        config.perturbation_deltas = vec![int(4), int(2), int(1), ratio(1, 2)];
        assert_eq!(perturb_polarization(&g, &h, &minus_l, &config).unwrap(), None);
    }

    #[test]
    fn octic_search_rank2() {
        let (g, h) = octic_h();
        let certs = search(&g, &h, &SearchConfig::default()).unwrap();
        let ds: Vec<_> = certs.iter().map(|c| c.d.to_i64s().unwrap()).collect();
        assert_eq!(ds, vec![vec![1, -1], vec![2, -2], vec![3, -3]]);
        assert_eq!(certs[0].chi, int(-40));
        assert!(certs.iter().all(|c| c.origin == Origin::Lattice && c.is_valid()));

        let config = SearchConfig {
            include_failures: true,
            ..SearchConfig::default()
        };
        let all = search(&g, &h, &config).unwrap();
        assert_eq!(all.len(), 6);
        let minus = all.iter().find(|c| c.d.to_i64s().unwrap() == vec![-1, 1]).unwrap();
        assert_eq!(minus.chi, int(40));
        assert!(!minus.checks.nonsplit);
    }

    #[test]
    fn octic_search_rank4() {
        let (g, h) = octic_h();
        let config = SearchConfig {
            rank_case: RankCase::R4,
            ..SearchConfig::default()
        };
        let certs = search(&g, &h, &config).unwrap();
        assert_eq!(certs[0].d.to_i64s().unwrap(), vec![1, -1]);
        assert_eq!(certs[0].chi, int(-932));
    }

    #[test]
    fn non_ample_polarization_is_rejected() {
        let g = build_octic_k3();
        let h = g.divisor_int(&[1, 1]).unwrap();
        match search(&g, &h, &SearchConfig::default()) {
            Err(Error::NotAmple { violated }) => assert_eq!(violated, vec!["t - 2s > 0"]),
            other => panic!("expected NotAmple, got {other:?}"),
        }
    }

    #[test]
    fn elliptic_f0_box_without_solutions() {
        let g = builtin("elliptic-f0").unwrap();
        // H = sigma + pi*(3s + 5f); D.H^2 = 6x + 8p + 4q has no nonzero
        // solution with all |coords| <= 1
        let h = g.divisor_int(&[1, 3, 5]).unwrap();
        assert!(g.is_ample(&h).unwrap());
        let config = SearchConfig {
            coord_bound: 1,
            include_failures: true,
            ..SearchConfig::default()
        };
        assert!(search(&g, &h, &config).unwrap().is_empty());
        // no orthogonal point at all in the 3x3x3 box, by enumeration
        let mut hits = 0;
        for x in -1..=1 {
            for p in -1..=1 {
                for q in -1..=1 {
                    if (x, p, q) != (0, 0, 0) && 6 * x + 8 * p + 4 * q == 0 {
                        hits += 1;
                    }
                }
            }
        }
        assert_eq!(hits, 0);
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let g = builtin("elliptic-dp2").unwrap();
        let h = g.divisor_int(&[1, 6, -2, -2]).unwrap();
        assert!(g.is_ample(&h).unwrap());
        let base = SearchConfig {
            coord_bound: 2,
            include_failures: true,
            ..SearchConfig::default()
        };
        let one = search(&g, &h, &SearchConfig { threads: Some(1), ..base.clone() }).unwrap();
        let four = search(&g, &h, &SearchConfig { threads: Some(4), ..base }).unwrap();
        assert!(!one.is_empty());
        assert_eq!(one, four);
    }
}
