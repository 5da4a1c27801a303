//! Built-in geometries: the K3-fibred blow-up of the degree-8 hypersurface in
//! `P^4(1,1,2,2,2)` and elliptic fibrations over `F_n` and `dP_k`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intersection::{Geometry, GeometryData, LinearForm};
use crate::rational::{int, ints, Q};

/// Intersection data of the K3-fibred octic blow-up.
///
/// Divisor basis `(E, L)` (exceptional divisor, K3 fibre), curve basis `(h, l)`.
pub fn build_octic_k3() -> Geometry {
    // E^3 = -16, E^2 L = 4, E L^2 = 0, L^3 = 0
    let mut triple = vec![vec![vec![Q::zero(); 2]; 2]; 2];
    triple[0][0][0] = int(-16);
    for (i, j, k) in [(0, 0, 1), (0, 1, 0), (1, 0, 0)] {
        triple[i][j][k] = int(4);
    }
    // E.E = 4l - 8h, E.L = 4h, L.L = 0
    let pair_to_curve = vec![
        vec![ints(&[-8, 4]), ints(&[4, 0])],
        vec![ints(&[4, 0]), ints(&[0, 0])],
    ];
    let data = GeometryData {
        name: "octic-k3".into(),
        divisor_basis: vec!["E".into(), "L".into()],
        curve_basis: vec!["h".into(), "l".into()],
        triple,
        pair_to_curve,
        pairing: vec![ints(&[1, -2]), ints(&[0, 1])],
        c2: ints(&[56, 24]),
        c3: int(-168),
        ample: vec![
            LinearForm::new("s > 0", ints(&[1, 0])),
            LinearForm::new("t > 0", ints(&[0, 1])),
            LinearForm::new("t - 2s > 0", ints(&[-2, 1])),
        ],
        effective_curves: vec![ints(&[1, 0]), ints(&[0, 1])],
    };
    Geometry::new(data).expect("octic K3 data is consistent")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseKind {
    Hirzebruch(u8),
    DelPezzo(u8),
}

impl BaseKind {
    pub fn is_admitted(self) -> bool {
        match self {
            BaseKind::Hirzebruch(n) => n <= 2,
            BaseKind::DelPezzo(k) => (1..=8).contains(&k),
        }
    }

    pub fn slug(self) -> String {
        match self {
            BaseKind::Hirzebruch(n) => format!("f{n}"),
            BaseKind::DelPezzo(k) => format!("dp{k}"),
        }
    }
}

/// A rational base surface for the elliptic fibration, in integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSurface {
    pub kind: BaseKind,
    pub basis: Vec<String>,
    pub intersection_form: Vec<Vec<i64>>,
    pub c1: Vec<i64>,
    pub c2: i64,
    /// Generators of the configured effective (Mori) cone.
    pub effective: Vec<Vec<i64>>,
}

impl BaseSurface {
    /// `F_n`, basis `(s, f)` with `s^2 = -n`, `s.f = 1`, `f^2 = 0`.
    pub fn hirzebruch(n: u8) -> Result<Self> {
        let kind = BaseKind::Hirzebruch(n);
        if !kind.is_admitted() {
            return Err(Error::UnsupportedBase(format!("F_{n} (admitted: n = 0, 1, 2)")));
        }
        let n = i64::from(n);
        Ok(BaseSurface {
            kind,
            basis: vec!["s".into(), "f".into()],
            intersection_form: vec![vec![-n, 1], vec![1, 0]],
            c1: vec![2, n + 2],
            c2: 4,
            effective: vec![vec![1, 0], vec![0, 1]],
        })
    }

    /// `dP_k`, basis `(h, e_1, ..., e_k)`. The effective cone is generated by
    /// `e_1, h - e_1` for `k = 1` and by the `(-1)`-curves for `k >= 2`.
    pub fn del_pezzo(k: u8) -> Result<Self> {
        let kind = BaseKind::DelPezzo(k);
        if !kind.is_admitted() {
            return Err(Error::UnsupportedBase(format!("dP_{k} (admitted: k = 1..8)")));
        }
        let k = usize::from(k);
        let dim = k + 1;
        let mut form = vec![vec![0i64; dim]; dim];
        form[0][0] = 1;
        for (i, row) in form.iter_mut().enumerate().skip(1) {
            row[i] = -1;
        }
        let mut c1 = vec![-1i64; dim];
        c1[0] = 3;
        let mut basis = vec!["h".to_string()];
        basis.extend((1..=k).map(|i| format!("e{i}")));
        let effective = if k == 1 {
            vec![vec![0, 1], vec![1, -1]]
        } else {
            exceptional_curves(k)
        };
        Ok(BaseSurface {
            kind,
            basis,
            intersection_form: form,
            c1,
            c2: 3 + k as i64,
            effective,
        })
    }

    pub fn new(kind: BaseKind) -> Result<Self> {
        match kind {
            BaseKind::Hirzebruch(n) => Self::hirzebruch(n),
            BaseKind::DelPezzo(k) => Self::del_pezzo(k),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dot(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                acc += ai * self.intersection_form[i][j] * bj;
            }
        }
        acc
    }

    pub fn c1_squared(&self) -> i64 {
        self.dot(&self.c1, &self.c1)
    }

    /// Ampleness on the base: strictly positive against every effective generator.
    pub fn is_ample(&self, rho: &[i64]) -> bool {
        self.effective.iter().all(|c| self.dot(rho, c) > 0)
    }
}

/// All `(-1)`-curves on `dP_k` in coordinates `(d, -a_1, ..., -a_k)` for the
/// class `d h - sum a_i e_i`, i.e. solutions of `d^2 - sum a_i^2 = -1`,
/// `3d - sum a_i = 1`.
fn exceptional_curves(k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..k {
        let mut c = vec![0i64; k + 1];
        c[i + 1] = 1;
        out.push(c);
    }
    fn rec(d: i64, a: &mut Vec<i64>, k: usize, out: &mut Vec<Vec<i64>>) {
        if a.len() == k {
            let sum: i64 = a.iter().sum();
            let sq: i64 = a.iter().map(|x| x * x).sum();
            if 3 * d - sum == 1 && d * d - sq == -1 {
                let mut c = vec![d];
                c.extend(a.iter().map(|x| -x));
                out.push(c);
            }
            return;
        }
        for v in 0..=d.min(3) {
            a.push(v);
            rec(d, a, k, out);
            a.pop();
        }
    }
    for d in 1..=6 {
        rec(d, &mut Vec::with_capacity(k), k, &mut out);
    }
    out
}

/// Elliptic fibration `X -> B` with section `sigma`.
///
/// Divisor basis `(sigma, pi*B_1, ...)`, curve basis
/// `(fiber, sigma.pi*B_1, ...)`.
pub fn build_elliptic(base: &BaseSurface) -> Result<Geometry> {
    if !base.kind.is_admitted() {
        return Err(Error::UnsupportedBase(format!("{:?}", base.kind)));
    }
    let nb = base.dim();
    let rho = nb + 1;
    let c1 = &base.c1;
    let c1sq = base.c1_squared();
    let unit = |i: usize| {
        let mut v = vec![0i64; nb];
        v[i] = 1;
        v
    };
    let c1_dot = |i: usize| base.dot(c1, &unit(i));
    let form = |i: usize, j: usize| base.intersection_form[i][j];

    let mut triple = vec![vec![vec![Q::zero(); rho]; rho]; rho];
    for i in 0..rho {
        for j in 0..rho {
            for k in 0..rho {
                let mut idx = [i, j, k];
                idx.sort_unstable();
                let sigmas = idx.iter().filter(|&&x| x == 0).count();
                let value = match sigmas {
                    3 => c1sq,
                    2 => -c1_dot(idx[2] - 1),
                    1 => form(idx[1] - 1, idx[2] - 1),
                    _ => 0,
                };
                triple[i][j][k] = int(value);
            }
        }
    }

    // sigma^2 = -sigma.pi*c1, sigma.pi*a = section curve, pi*a.pi*b = (a.b) fiber
    let mut pair_to_curve = vec![vec![vec![Q::zero(); rho]; rho]; rho];
    for i in 0..rho {
        for j in 0..rho {
            let mut curve = vec![0i64; rho];
            match (i, j) {
                (0, 0) => {
                    for (b, c) in c1.iter().enumerate() {
                        curve[b + 1] = -c;
                    }
                }
                (0, b) | (b, 0) => curve[b] = 1,
                (a, b) => curve[0] = form(a - 1, b - 1),
            }
            pair_to_curve[i][j] = ints(&curve);
        }
    }

    let mut pairing = vec![vec![0i64; rho]; rho];
    pairing[0][0] = 1;
    for b in 1..rho {
        pairing[0][b] = -c1_dot(b - 1);
        for a in 1..rho {
            pairing[a][b] = form(a - 1, b - 1);
        }
    }

    let mut c2 = vec![base.c2 + 11 * c1sq];
    c2.extend(c1.iter().map(|c| 12 * c));

    let mut divisor_basis = vec!["sigma".to_string()];
    divisor_basis.extend(base.basis.iter().map(|b| format!("pi*{b}")));
    let mut curve_basis = vec!["fiber".to_string()];
    curve_basis.extend(base.basis.iter().map(|b| format!("sigma.pi*{b}")));

    // H = z sigma + pi*rho ample iff z > 0 and (rho - z c1).C > 0 for each base generator C
    let mut ample = vec![LinearForm::new("z > 0", {
        let mut v = vec![int(0); rho];
        v[0] = int(1);
        v
    })];
    for gen in &base.effective {
        let mut coeffs = vec![int(-base.dot(c1, gen))];
        coeffs.extend((0..nb).map(|i| int(base.dot(&unit(i), gen))));
        let label = format!(
            "(rho - z c1).({}) > 0",
            crate::intersection::format_combination(&ints(gen), &base.basis)
        );
        ample.push(LinearForm::new(label, coeffs));
    }

    let mut effective_curves = vec![{
        let mut v = vec![int(0); rho];
        v[0] = int(1);
        v
    }];
    for gen in &base.effective {
        let mut v = vec![int(0)];
        v.extend(gen.iter().map(|&x| int(x)));
        effective_curves.push(v);
    }

    Geometry::new(GeometryData {
        name: format!("elliptic-{}", base.kind.slug()),
        divisor_basis,
        curve_basis,
        triple,
        pair_to_curve,
        pairing: pairing.iter().map(|r| ints(r)).collect(),
        c2: ints(&c2),
        c3: int(-60 * c1sq),
        ample,
        effective_curves,
    })
}

/// Names of the built-in geometries.
pub fn builtin_names() -> Vec<String> {
    let mut names = vec!["octic-k3".to_string()];
    names.extend((0..=2).map(|n| format!("elliptic-f{n}")));
    names.extend((1..=8).map(|k| format!("elliptic-dp{k}")));
    names
}

pub fn builtin(name: &str) -> Option<Geometry> {
    if name == "octic-k3" {
        return Some(build_octic_k3());
    }
    build_elliptic(&builtin_base(name)?).ok()
}

/// Base surface behind an `elliptic-*` built-in name.
pub fn builtin_base(name: &str) -> Option<BaseSurface> {
    let slug = name.strip_prefix("elliptic-")?;
    let kind = if let Some(n) = slug.strip_prefix("dp") {
        BaseKind::DelPezzo(n.parse().ok()?)
    } else {
        BaseKind::Hirzebruch(slug.strip_prefix('f')?.parse().ok()?)
    };
    BaseSurface::new(kind).ok()
}
