//! Chern data of extension bundles `0 -> E1(r2' D) -> E -> E2(-r1' D) -> 0`
//! and the Euler characteristic `chi_D(E2, E1)`.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intersection::{CurveClass, DivisorClass, Geometry};
use crate::rational::{self, ratio, Q};

/// Rank, `c2` and `c3` of a bundle with `c1 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleData {
    pub rank: u32,
    pub c2: CurveClass,
    pub c3: Q,
    pub label: String,
}

impl BundleData {
    pub fn new(rank: u32, c2: CurveClass, c3: Q, label: impl Into<String>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Bundle("rank must be at least 1".into()));
        }
        Ok(BundleData {
            rank,
            c2,
            c3,
            label: label.into(),
        })
    }

    /// `O_X`.
    pub fn trivial_line(g: &Geometry) -> Self {
        BundleData {
            rank: 1,
            c2: g.zero_curve(),
            c3: Q::zero(),
            label: "O_X".into(),
        }
    }

    /// The tangent bundle `TX`.
    pub fn tangent(g: &Geometry) -> Self {
        BundleData {
            rank: 3,
            c2: g.c2_class(),
            c3: g.c3().clone(),
            label: "TX".into(),
        }
    }

    /// Integral Chern data, i.e. plausibly an actual bundle.
    pub fn is_integral(&self) -> bool {
        self.c2.is_integral() && self.c3.is_integer()
    }
}

/// Which pair `(E1, E2)` the extension is built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RankCase {
    /// `E1 = E2 = O_X`, giving rank 2.
    R2,
    /// `E1 = TX`, `E2 = O_X`, giving rank 4.
    R4,
    Custom(BundleData, BundleData),
}

impl RankCase {
    pub fn bundles(&self, g: &Geometry) -> (BundleData, BundleData) {
        match self {
            RankCase::R2 => (BundleData::trivial_line(g), BundleData::trivial_line(g)),
            RankCase::R4 => (BundleData::tangent(g), BundleData::trivial_line(g)),
            RankCase::Custom(e1, e2) => (e1.clone(), e2.clone()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            RankCase::R2 => "r2".into(),
            RankCase::R4 => "r4".into(),
            RankCase::Custom(e1, e2) => format!("custom({},{})", e1.label, e2.label),
        }
    }
}

/// Extension of `E2(-r1' D)` by `E1(r2' D)`, with the reduced ranks
/// `r_i' = r_i / gcd(r1, r2)` computed once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub e1: BundleData,
    pub e2: BundleData,
    pub d: DivisorClass,
    r1p: u32,
    r2p: u32,
}

impl ExtensionSpec {
    pub fn new(e1: BundleData, e2: BundleData, d: DivisorClass) -> Result<Self> {
        if e1.rank == 0 || e2.rank == 0 {
            return Err(Error::Bundle("rank must be at least 1".into()));
        }
        let g = e1.rank.gcd(&e2.rank);
        Ok(ExtensionSpec {
            r1p: e1.rank / g,
            r2p: e2.rank / g,
            e1,
            e2,
            d,
        })
    }

    pub fn with_divisor(&self, d: DivisorClass) -> Self {
        ExtensionSpec { d, ..self.clone() }
    }

    pub fn r1(&self) -> i64 {
        i64::from(self.e1.rank)
    }

    pub fn r2(&self) -> i64 {
        i64::from(self.e2.rank)
    }

    pub fn r1_reduced(&self) -> i64 {
        i64::from(self.r1p)
    }

    pub fn r2_reduced(&self) -> i64 {
        i64::from(self.r2p)
    }

    /// `r' = r1' + r2'`.
    pub fn r_reduced(&self) -> i64 {
        self.r1_reduced() + self.r2_reduced()
    }

    pub fn rank(&self) -> i64 {
        self.r1() + self.r2()
    }

    /// Coefficient `(r1 r2'^2 + r2 r1'^2) / 2` with `c2(E) = -coef D^2 + ...`.
    pub fn c2_coefficient(&self) -> Q {
        let (r1, r2, a, b) = (self.r1(), self.r2(), self.r1_reduced(), self.r2_reduced());
        ratio(r1 * b * b + r2 * a * a, 2)
    }
}

fn same_geometry(g: &Geometry, spec: &ExtensionSpec) -> Result<()> {
    for id in [spec.e1.c2.geometry(), spec.e2.c2.geometry(), spec.d.geometry()] {
        if id != g.id() {
            return Err(Error::GeometryMismatch {
                left: g.id().to_string(),
                right: id.to_string(),
            });
        }
    }
    Ok(())
}

/// Rank and Chern classes of the extension bundle `E`.
pub fn extension_chern(g: &Geometry, spec: &ExtensionSpec) -> Result<BundleData> {
    same_geometry(g, spec)?;
    let (r1, r2, r1p, r2p) = (spec.r1(), spec.r2(), spec.r1_reduced(), spec.r2_reduced());
    let d = &spec.d;
    let d2 = g.product_curve(d, d)?;
    let d3 = g.pair(d, &d2)?;

    let c2 = &(&spec.e1.c2 + &spec.e2.c2) - &d2.scale(&spec.c2_coefficient());

    let cross = &spec.e2.c2.scale_int(r1p) - &spec.e1.c2.scale_int(r2p);
    let c3 = ratio(r1 * r2p.pow(3) - r2 * r1p.pow(3), 3) * d3
        + rational::int(2) * g.pair(d, &cross)?
        + &spec.e1.c3
        + &spec.e2.c3;

    Ok(BundleData {
        rank: (r1 + r2) as u32,
        c2,
        c3,
        label: format!("Ext({}, {})", spec.e2.label, spec.e1.label),
    })
}

/// The three coefficients of `chi_{mD} = cubic * m^3 + linear * m + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistCubic {
    pub cubic: Q,
    pub linear: Q,
    pub constant: Q,
}

impl TwistCubic {
    pub fn eval(&self, m: i64) -> Q {
        let m = rational::int(m);
        &self.cubic * &m * &m * &m + &self.linear * &m + &self.constant
    }
}

/// Splits `chi_D(E2, E1)` into its `D^3`, `D`-linear and constant parts.
pub fn twist_cubic(g: &Geometry, spec: &ExtensionSpec) -> Result<TwistCubic> {
    same_geometry(g, spec)?;
    let (r1, r2) = (spec.r1(), spec.r2());
    let rp = spec.r_reduced();
    let d = &spec.d;

    let cubic = ratio(r1 * r2 * rp.pow(3), 6) * g.cube(d)?;
    let curve = &(&g.c2_class().scale(&ratio(r1 * r2, 12)) - &spec.e1.c2.scale_int(r2))
        - &spec.e2.c2.scale_int(r1);
    let linear = rational::int(rp) * g.pair(d, &curve)?;
    let constant = ratio(r2, 2) * &spec.e1.c3 - ratio(r1, 2) * &spec.e2.c3;
    Ok(TwistCubic {
        cubic,
        linear,
        constant,
    })
}

/// `chi_D(E2, E1) = sum (-1)^i dim Ext^i(E2(-r1' D), E1(r2' D))` by
/// Hirzebruch-Riemann-Roch.
///
/// For integral inputs the value must be an integer; anything else means the
/// intersection or bundle data is inconsistent and is reported as an error.
pub fn euler_characteristic(g: &Geometry, spec: &ExtensionSpec) -> Result<Q> {
    let chi = twist_cubic(g, spec)?.eval(1);
    let integral_input = spec.d.is_integral() && spec.e1.is_integral() && spec.e2.is_integral();
    if integral_input && !chi.is_integer() {
        return Err(Error::NonIntegralEuler {
            chi: rational::format(&chi),
            context: format!(
                "{} / {} on {} with D = {}",
                spec.e1.label,
                spec.e2.label,
                g.name(),
                spec.d
            ),
        });
    }
    Ok(chi)
}

/// `c2(X).D + 8 D^3`, six times `chi_D(O, O)`.
pub fn rank2_value(g: &Geometry, d: &DivisorClass) -> Result<Q> {
    Ok(g.c2_dot(d)? + rational::int(8) * g.cube(d)?)
}

/// `-3 c2(X).D + 32 D^3 + c3(X)/2`, equal to `chi_D(O, TX)`.
pub fn rank4_value(g: &Geometry, d: &DivisorClass) -> Result<Q> {
    Ok(rational::int(-3) * g.c2_dot(d)? + rational::int(32) * g.cube(d)? + g.c3() / rational::int(2))
}

pub fn nonsplit_r2(g: &Geometry, d: &DivisorClass) -> Result<bool> {
    Ok(rational::is_negative(&rank2_value(g, d)?))
}

pub fn nonsplit_r4(g: &Geometry, d: &DivisorClass) -> Result<bool> {
    Ok(rational::is_negative(&rank4_value(g, d)?))
}

/// `chi_D < 0`; the boundary `chi_D = 0` does not certify a nonsplit extension.
pub fn nonsplit_general(g: &Geometry, spec: &ExtensionSpec) -> Result<bool> {
    Ok(rational::is_negative(&euler_characteristic(g, spec)?))
}
