//! Intersection ring of a threefold: divisor and curve classes, the triple
//! product, the divisor-pair-to-curve product and the divisor/curve pairing.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{determinant, dot};
use crate::rational::{self, Q};

/// Fingerprint of a geometry's data; classes carry it so that mixing classes
/// from different geometries is caught.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeometryId(u64);

impl fmt::Display for GeometryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Divisor {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {}

/// A class with exact rational coordinates in one of the geometry's bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Class<K> {
    coords: Vec<Q>,
    geometry: GeometryId,
    kind: PhantomData<K>,
}

pub type DivisorClass = Class<Divisor>;
pub type CurveClass = Class<Curve>;

impl<K> Class<K> {
    fn from_parts(coords: Vec<Q>, geometry: GeometryId) -> Self {
        Class {
            coords,
            geometry,
            kind: PhantomData,
        }
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn geometry(&self) -> GeometryId {
        self.geometry
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if all coordinates are integers fitting in `i64`.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coords.iter().map(rational::to_i64).collect()
    }

    pub fn scale(&self, factor: &Q) -> Self {
        Self::from_parts(
            self.coords.iter().map(|c| c * factor).collect(),
            self.geometry,
        )
    }

    pub fn scale_int(&self, factor: i64) -> Self {
        self.scale(&rational::int(factor))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Q, &Q) -> Q) -> Self {
        assert_eq!(
            self.geometry, other.geometry,
            "arithmetic on classes from different geometries"
        );
        Self::from_parts(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| op(a, b))
                .collect(),
            self.geometry,
        )
    }
}

impl<K> fmt::Display for Class<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", rational::format_list(&self.coords).join(", "))
    }
}

impl<K> Add<&Class<K>> for &Class<K> {
    type Output = Class<K>;
    fn add(self, rhs: &Class<K>) -> Class<K> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<K> Add for Class<K> {
    type Output = Class<K>;
    fn add(self, rhs: Class<K>) -> Class<K> {
        &self + &rhs
    }
}

impl<K> Sub<&Class<K>> for &Class<K> {
    type Output = Class<K>;
    fn sub(self, rhs: &Class<K>) -> Class<K> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<K> Sub for Class<K> {
    type Output = Class<K>;
    fn sub(self, rhs: Class<K>) -> Class<K> {
        &self - &rhs
    }
}

impl<K> Neg for &Class<K> {
    type Output = Class<K>;
    fn neg(self) -> Class<K> {
        self.scale(&-Q::one())
    }
}

impl<K> Neg for Class<K> {
    type Output = Class<K>;
    fn neg(self) -> Class<K> {
        -&self
    }
}

impl<K> Mul<&Class<K>> for &Q {
    type Output = Class<K>;
    fn mul(self, rhs: &Class<K>) -> Class<K> {
        rhs.scale(self)
    }
}

impl<K> Mul<Class<K>> for i64 {
    type Output = Class<K>;
    fn mul(self, rhs: Class<K>) -> Class<K> {
        rhs.scale_int(self)
    }
}

/// Strict linear inequality `coeffs . x > 0` on divisor coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub label: String,
    pub coeffs: Vec<Q>,
}

impl LinearForm {
    pub fn new(label: impl Into<String>, coeffs: Vec<Q>) -> Self {
        LinearForm {
            label: label.into(),
            coeffs,
        }
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        dot(&self.coeffs, x)
    }
}

/// Raw, unvalidated intersection data. [`Geometry::new`] validates it.
///
/// `triple[i][j][k] = B_i.B_j.B_k`, `pair_to_curve[i][j]` holds the curve
/// coordinates of `B_i.B_j`, and `pairing[i][a] = B_i.C_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryData {
    pub name: String,
    pub divisor_basis: Vec<String>,
    pub curve_basis: Vec<String>,
    pub triple: Vec<Vec<Vec<Q>>>,
    pub pair_to_curve: Vec<Vec<Vec<Q>>>,
    pub pairing: Vec<Vec<Q>>,
    pub c2: Vec<Q>,
    pub c3: Q,
    pub ample: Vec<LinearForm>,
    pub effective_curves: Vec<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyBasis,
    BasisSize { divisor: usize, curve: usize },
    Shape { field: String, expected: usize, found: usize },
    NonIntegral { field: String },
    TripleAsymmetric { index: [usize; 3], permuted: [usize; 3], value: Q, permuted_value: Q },
    PairToCurveAsymmetric { i: usize, j: usize },
    Inconsistent { index: [usize; 3], triple: Q, via_curve: Q },
    DegeneratePairing,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use rational::format as q;
        match self {
            Violation::EmptyBasis => write!(f, "divisor basis is empty"),
            Violation::BasisSize { divisor, curve } => write!(
                f,
                "curve basis has {curve} entries but the divisor basis has {divisor}"
            ),
            Violation::Shape { field, expected, found } => {
                write!(f, "{field}: expected length {expected}, found {found}")
            }
            Violation::NonIntegral { field } => write!(f, "{field}: entry is not an integer"),
            Violation::TripleAsymmetric { index, permuted, value, permuted_value } => write!(
                f,
                "triple not symmetric: d{:?} = {} but d{:?} = {}",
                index,
                q(value),
                permuted,
                q(permuted_value)
            ),
            Violation::PairToCurveAsymmetric { i, j } => {
                write!(f, "pair_to_curve not symmetric at ({i}, {j})")
            }
            Violation::Inconsistent { index, triple, via_curve } => write!(
                f,
                "inconsistent at (i,j,k) = {:?}: triple gives {} but pairing(B_k, T(B_i,B_j)) gives {}",
                index,
                q(triple),
                q(via_curve)
            ),
            Violation::DegeneratePairing => write!(f, "divisor/curve pairing matrix is singular"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        Ok(())
    }
}

fn shape_check(report: &mut Vec<Violation>, field: impl Into<String>, expected: usize, found: usize) -> bool {
    if expected != found {
        report.push(Violation::Shape {
            field: field.into(),
            expected,
            found,
        });
        false
    } else {
        true
    }
}

/// Checks shapes, integrality, tensor symmetry, the identity
/// `d_ijk = pairing(B_k, T(B_i, B_j))` and nondegeneracy of the pairing.
pub fn validate_geometry(g: &GeometryData) -> ValidationReport {
    let mut v = Vec::new();
    let rho = g.divisor_basis.len();
    if rho == 0 {
        v.push(Violation::EmptyBasis);
        return ValidationReport { violations: v };
    }
    if g.curve_basis.len() != rho {
        v.push(Violation::BasisSize {
            divisor: rho,
            curve: g.curve_basis.len(),
        });
    }
    let nc = g.curve_basis.len();

    let mut shapes_ok = shape_check(&mut v, "triple", rho, g.triple.len());
    for (i, plane) in g.triple.iter().enumerate() {
        shapes_ok &= shape_check(&mut v, format!("triple[{i}]"), rho, plane.len());
        for (j, row) in plane.iter().enumerate() {
            shapes_ok &= shape_check(&mut v, format!("triple[{i}][{j}]"), rho, row.len());
        }
    }
    shapes_ok &= shape_check(&mut v, "pair_to_curve", rho, g.pair_to_curve.len());
    for (i, plane) in g.pair_to_curve.iter().enumerate() {
        shapes_ok &= shape_check(&mut v, format!("pair_to_curve[{i}]"), rho, plane.len());
        for (j, row) in plane.iter().enumerate() {
            shapes_ok &= shape_check(&mut v, format!("pair_to_curve[{i}][{j}]"), nc, row.len());
        }
    }
    shapes_ok &= shape_check(&mut v, "pairing", rho, g.pairing.len());
    for (i, row) in g.pairing.iter().enumerate() {
        shapes_ok &= shape_check(&mut v, format!("pairing[{i}]"), nc, row.len());
    }
    shape_check(&mut v, "c2X", nc, g.c2.len());
    for (n, form) in g.ample.iter().enumerate() {
        shape_check(&mut v, format!("ample[{n}]"), rho, form.coeffs.len());
    }
    for (n, c) in g.effective_curves.iter().enumerate() {
        shape_check(&mut v, format!("effective_curves[{n}]"), nc, c.len());
    }
    if !shapes_ok || nc != rho {
        return ValidationReport { violations: v };
    }

    if !g.triple.iter().flatten().flatten().all(Q::is_integer) {
        v.push(Violation::NonIntegral { field: "triple".into() });
    }
    if !g.pair_to_curve.iter().flatten().flatten().all(Q::is_integer) {
        v.push(Violation::NonIntegral { field: "pair_to_curve".into() });
    }
    if !g.pairing.iter().flatten().all(Q::is_integer) {
        v.push(Violation::NonIntegral { field: "pairing".into() });
    }
    if !g.c3.is_integer() {
        v.push(Violation::NonIntegral { field: "c3X".into() });
    }

    for i in 0..rho {
        for j in 0..rho {
            for k in 0..rho {
                let mut canon = [i, j, k];
                canon.sort_unstable();
                let [a, b, c] = canon;
                if canon != [i, j, k] && g.triple[i][j][k] != g.triple[a][b][c] {
                    v.push(Violation::TripleAsymmetric {
                        index: canon,
                        permuted: [i, j, k],
                        value: g.triple[a][b][c].clone(),
                        permuted_value: g.triple[i][j][k].clone(),
                    });
                }
            }
        }
    }
    for i in 0..rho {
        for j in i + 1..rho {
            if g.pair_to_curve[i][j] != g.pair_to_curve[j][i] {
                v.push(Violation::PairToCurveAsymmetric { i, j });
            }
        }
    }
    for i in 0..rho {
        for j in 0..rho {
            for k in 0..rho {
                let via_curve = dot(&g.pairing[k], &g.pair_to_curve[i][j]);
                if via_curve != g.triple[i][j][k] {
                    v.push(Violation::Inconsistent {
                        index: [i, j, k],
                        triple: g.triple[i][j][k].clone(),
                        via_curve,
                    });
                }
            }
        }
    }
    if determinant(&g.pairing).is_zero() {
        v.push(Violation::DegeneratePairing);
    }
    ValidationReport { violations: v }
}

/// A validated, immutable threefold intersection ring.
#[derive(Clone, Debug)]
pub struct Geometry {
    data: GeometryData,
    id: GeometryId,
    // nonzero entries of the triple tensor over all ordered index triples
    terms: Vec<(usize, usize, usize, Q)>,
}

impl PartialEq for Geometry {
    fn eq(&self, other: &Self) -> bool {
        self.data == other.data
    }
}

impl Eq for Geometry {}

impl Geometry {
    pub fn new(data: GeometryData) -> Result<Self> {
        let report = validate_geometry(&data);
        if !report.is_ok() {
            return Err(Error::Validation(report));
        }
        let mut hasher = DefaultHasher::new();
        data.name.hash(&mut hasher);
        data.divisor_basis.hash(&mut hasher);
        data.curve_basis.hash(&mut hasher);
        data.triple.hash(&mut hasher);
        data.pair_to_curve.hash(&mut hasher);
        data.pairing.hash(&mut hasher);
        data.c2.hash(&mut hasher);
        data.c3.hash(&mut hasher);
        let id = GeometryId(hasher.finish());

        let rho = data.divisor_basis.len();
        let mut terms = Vec::new();
        for i in 0..rho {
            for j in 0..rho {
                for k in 0..rho {
                    let d = &data.triple[i][j][k];
                    if !d.is_zero() {
                        terms.push((i, j, k, d.clone()));
                    }
                }
            }
        }
        Ok(Geometry { data, id, terms })
    }

    pub fn data(&self) -> &GeometryData {
        &self.data
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn id(&self) -> GeometryId {
        self.id
    }

    pub fn picard_rank(&self) -> usize {
        self.data.divisor_basis.len()
    }

    pub fn divisor_labels(&self) -> &[String] {
        &self.data.divisor_basis
    }

    pub fn curve_labels(&self) -> &[String] {
        &self.data.curve_basis
    }

    pub fn divisor(&self, coords: Vec<Q>) -> Result<DivisorClass> {
        if coords.len() != self.picard_rank() {
            return Err(Error::Dimension {
                what: "divisor class",
                expected: self.picard_rank(),
                found: coords.len(),
            });
        }
        Ok(Class::from_parts(coords, self.id))
    }

    pub fn divisor_int(&self, coords: &[i64]) -> Result<DivisorClass> {
        self.divisor(rational::ints(coords))
    }

    pub fn curve(&self, coords: Vec<Q>) -> Result<CurveClass> {
        if coords.len() != self.data.curve_basis.len() {
            return Err(Error::Dimension {
                what: "curve class",
                expected: self.data.curve_basis.len(),
                found: coords.len(),
            });
        }
        Ok(Class::from_parts(coords, self.id))
    }

    pub fn curve_int(&self, coords: &[i64]) -> Result<CurveClass> {
        self.curve(rational::ints(coords))
    }

    pub fn zero_divisor(&self) -> DivisorClass {
        Class::from_parts(vec![Q::zero(); self.picard_rank()], self.id)
    }

    pub fn zero_curve(&self) -> CurveClass {
        Class::from_parts(vec![Q::zero(); self.data.curve_basis.len()], self.id)
    }

    pub fn basis_divisor(&self, i: usize) -> DivisorClass {
        let mut c = vec![Q::zero(); self.picard_rank()];
        c[i] = Q::one();
        Class::from_parts(c, self.id)
    }

    pub fn basis_curve(&self, a: usize) -> CurveClass {
        let mut c = vec![Q::zero(); self.data.curve_basis.len()];
        c[a] = Q::one();
        Class::from_parts(c, self.id)
    }

    pub fn divisor_by_label(&self, label: &str) -> Option<DivisorClass> {
        let i = self.data.divisor_basis.iter().position(|l| l == label)?;
        Some(self.basis_divisor(i))
    }

    pub fn curve_by_label(&self, label: &str) -> Option<CurveClass> {
        let a = self.data.curve_basis.iter().position(|l| l == label)?;
        Some(self.basis_curve(a))
    }

    pub fn c2_class(&self) -> CurveClass {
        Class::from_parts(self.data.c2.clone(), self.id)
    }

    pub fn c3(&self) -> &Q {
        &self.data.c3
    }

    pub fn effective_generators(&self) -> Vec<CurveClass> {
        self.data
            .effective_curves
            .iter()
            .map(|c| Class::from_parts(c.clone(), self.id))
            .collect()
    }

    fn owns<K>(&self, c: &Class<K>) -> Result<()> {
        if c.geometry != self.id {
            return Err(Error::GeometryMismatch {
                left: self.id.to_string(),
                right: c.geometry.to_string(),
            });
        }
        Ok(())
    }

    /// `D1.D2.D3 = sum d_ijk x_i y_j z_k`.
    pub fn triple_product(&self, a: &DivisorClass, b: &DivisorClass, c: &DivisorClass) -> Result<Q> {
        self.owns(a)?;
        self.owns(b)?;
        self.owns(c)?;
        let (x, y, z) = (&a.coords, &b.coords, &c.coords);
        let mut acc = Q::zero();
        for (i, j, k, d) in &self.terms {
            if x[*i].is_zero() || y[*j].is_zero() || z[*k].is_zero() {
                continue;
            }
            acc += d * &x[*i] * &y[*j] * &z[*k];
        }
        Ok(acc)
    }

    pub fn cube(&self, d: &DivisorClass) -> Result<Q> {
        self.triple_product(d, d, d)
    }

    /// The curve class `D1.D2`, bilinear extension of `T(B_i, B_j)`.
    pub fn product_curve(&self, a: &DivisorClass, b: &DivisorClass) -> Result<CurveClass> {
        self.owns(a)?;
        self.owns(b)?;
        let nc = self.data.curve_basis.len();
        let mut out = vec![Q::zero(); nc];
        for (i, xi) in a.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in b.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (slot, t) in out.iter_mut().zip(&self.data.pair_to_curve[i][j]) {
                    if !t.is_zero() {
                        *slot += &w * t;
                    }
                }
            }
        }
        Ok(Class::from_parts(out, self.id))
    }

    pub fn pair(&self, d: &DivisorClass, c: &CurveClass) -> Result<Q> {
        self.owns(d)?;
        self.owns(c)?;
        let mut acc = Q::zero();
        for (xi, row) in d.coords.iter().zip(&self.data.pairing) {
            if !xi.is_zero() {
                acc += xi * dot(row, &c.coords);
            }
        }
        Ok(acc)
    }

    pub fn c2_dot(&self, d: &DivisorClass) -> Result<Q> {
        self.pair(d, &self.c2_class())
    }

    /// Configured inequalities that `h` fails (value `<= 0`).
    pub fn ample_violations(&self, h: &DivisorClass) -> Result<Vec<&LinearForm>> {
        self.owns(h)?;
        Ok(self
            .data
            .ample
            .iter()
            .filter(|form| !form.eval(&h.coords).is_positive())
            .collect())
    }

    pub fn is_ample(&self, h: &DivisorClass) -> Result<bool> {
        Ok(self.ample_violations(h)?.is_empty())
    }

    pub fn format_divisor(&self, d: &DivisorClass) -> String {
        format_combination(&d.coords, &self.data.divisor_basis)
    }

    pub fn format_curve(&self, c: &CurveClass) -> String {
        format_combination(&c.coords, &self.data.curve_basis)
    }
}

/// Renders `sum c_i label_i`, e.g. `56h + 24l` or `E - L`.
pub fn format_combination(coeffs: &[Q], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&rational::format(&mag));
            if label.chars().count() > 1 {
                out.push(' ');
            }
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
