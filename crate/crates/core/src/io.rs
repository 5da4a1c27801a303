//! Geometry definition files (TOML or JSON).
//!
//! ```toml
//! name = "octic-k3"
//! divisor_basis = ["E", "L"]
//! curve_basis = ["h", "l"]
//! triple = [[0, 0, 0, -16], [0, 0, 1, 4]]        # [i, j, k, value], symmetrized on load
//! pair_to_curve = [[0, 0, -8, 4], [0, 1, 4, 0]]  # [i, j, coords...]
//! pairing = [[1, -2], [0, 1]]
//! c2X = [56, 24]
//! c3X = -168
//! ample = [{ label = "t - 2s > 0", coeffs = [-2, 1] }]  # or bare coefficient lists
//! effective_curves = [[1, 0], [0, 1]]
//! ```
//!
//! Scalars are bare integers or `"p/q"` strings. Tensor entries that are not
//! listed are zero.

use std::fs;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intersection::{Geometry, GeometryData, LinearForm};
use crate::rational::{self, Q};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn from_q(q: &Q) -> Self {
        match rational::to_i64(q) {
            Some(n) => Scalar::Int(n),
            None => Scalar::Text(rational::format(q)),
        }
    }

    fn to_q(&self, key: &str) -> Result<Q> {
        match self {
            Scalar::Int(n) => Ok(rational::int(*n)),
            Scalar::Text(s) => rational::parse(s).ok_or_else(|| Error::Parse {
                key: key.to_string(),
                message: format!("`{s}` is not an integer or p/q rational"),
            }),
        }
    }

    fn to_index(&self, key: &str, bound: usize) -> Result<usize> {
        let q = self.to_q(key)?;
        rational::to_i64(&q)
            .and_then(|n| usize::try_from(n).ok())
            .filter(|&n| n < bound)
            .ok_or_else(|| Error::Parse {
                key: key.to_string(),
                message: format!("index {} out of range 0..{bound}", rational::format(&q)),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
enum AmpleEntry {
    Labeled { label: String, coeffs: Vec<Scalar> },
    Bare(Vec<Scalar>),
}

// Field order is alphabetical so that serialized files have sorted keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometryFile {
    ample: Vec<AmpleEntry>,
    #[serde(rename = "c2X")]
    c2x: Vec<Scalar>,
    #[serde(rename = "c3X")]
    c3x: Scalar,
    curve_basis: Vec<String>,
    divisor_basis: Vec<String>,
    effective_curves: Vec<Vec<Scalar>>,
    name: String,
    pair_to_curve: Vec<Vec<Scalar>>,
    pairing: Vec<Vec<Scalar>>,
    triple: Vec<Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileFormat {
    Toml,
    Json,
}

impl FileFormat {
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => FileFormat::Json,
            _ => FileFormat::Toml,
        }
    }
}

fn scalars(values: &[Scalar], key: &str) -> Result<Vec<Q>> {
    values
        .iter()
        .enumerate()
        .map(|(n, s)| s.to_q(&format!("{key}[{n}]")))
        .collect()
}

fn integer(q: Q, key: &str) -> Result<Q> {
    if q.is_integer() {
        Ok(q)
    } else {
        Err(Error::Parse {
            key: key.to_string(),
            message: format!("expected an integer, found {}", rational::format(&q)),
        })
    }
}

fn to_data(file: GeometryFile) -> Result<GeometryData> {
    let rho = file.divisor_basis.len();
    let nc = file.curve_basis.len();

    // Explicit entries go to their own index; missing permutations are then
    // filled from any explicit permutation. Conflicting explicit entries are
    // left in place and reported by validation as asymmetry.
    let mut triple: Vec<Vec<Vec<Option<Q>>>> = vec![vec![vec![None; rho]; rho]; rho];
    for (n, entry) in file.triple.iter().enumerate() {
        let key = format!("triple[{n}]");
        if entry.len() != 4 {
            return Err(Error::Parse {
                key,
                message: format!("expected [i, j, k, value], found {} items", entry.len()),
            });
        }
        let i = entry[0].to_index(&key, rho)?;
        let j = entry[1].to_index(&key, rho)?;
        let k = entry[2].to_index(&key, rho)?;
        let value = integer(entry[3].to_q(&key)?, &key)?;
        if let Some(prev) = &triple[i][j][k] {
            if *prev != value {
                return Err(Error::Parse {
                    key,
                    message: format!("duplicate entry for ({i}, {j}, {k})"),
                });
            }
        }
        triple[i][j][k] = Some(value);
    }
    let mut dense = vec![vec![vec![Q::zero(); rho]; rho]; rho];
    for i in 0..rho {
        for j in 0..rho {
            for k in 0..rho {
                let perms = [[i, j, k], [i, k, j], [j, i, k], [j, k, i], [k, i, j], [k, j, i]];
                dense[i][j][k] = perms
                    .iter()
                    .find_map(|&[a, b, c]| triple[a][b][c].clone())
                    .unwrap_or_else(Q::zero);
            }
        }
    }

    let mut ptc: Vec<Vec<Option<Vec<Q>>>> = vec![vec![None; rho]; rho];
    for (n, entry) in file.pair_to_curve.iter().enumerate() {
        let key = format!("pair_to_curve[{n}]");
        if entry.len() != 2 + nc {
            return Err(Error::Parse {
                key,
                message: format!("expected [i, j] plus {nc} coordinates, found {} items", entry.len()),
            });
        }
        let i = entry[0].to_index(&key, rho)?;
        let j = entry[1].to_index(&key, rho)?;
        let coords = scalars(&entry[2..], &key)?
            .into_iter()
            .map(|q| integer(q, &key))
            .collect::<Result<Vec<_>>>()?;
        ptc[i][j] = Some(coords);
    }
    let pair_to_curve = (0..rho)
        .map(|i| {
            (0..rho)
                .map(|j| {
                    ptc[i][j]
                        .clone()
                        .or_else(|| ptc[j][i].clone())
                        .unwrap_or_else(|| vec![Q::zero(); nc])
                })
                .collect()
        })
        .collect();

    let pairing = file
        .pairing
        .iter()
        .enumerate()
        .map(|(n, row)| {
            let key = format!("pairing[{n}]");
            scalars(row, &key)?
                .into_iter()
                .map(|q| integer(q, &key))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let ample = file
        .ample
        .iter()
        .enumerate()
        .map(|(n, entry)| {
            let key = format!("ample[{n}]");
            Ok(match entry {
                AmpleEntry::Labeled { label, coeffs } => {
                    LinearForm::new(label.clone(), scalars(coeffs, &key)?)
                }
                AmpleEntry::Bare(coeffs) => LinearForm::new(key.clone(), scalars(coeffs, &key)?),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let effective_curves = file
        .effective_curves
        .iter()
        .enumerate()
        .map(|(n, c)| scalars(c, &format!("effective_curves[{n}]")))
        .collect::<Result<Vec<_>>>()?;

    Ok(GeometryData {
        name: file.name,
        divisor_basis: file.divisor_basis,
        curve_basis: file.curve_basis,
        triple: dense,
        pair_to_curve,
        pairing,
        c2: scalars(&file.c2x, "c2X")?,
        c3: integer(file.c3x.to_q("c3X")?, "c3X")?,
        ample,
        effective_curves,
    })
}

fn to_file(data: &GeometryData) -> GeometryFile {
    let rho = data.divisor_basis.len();
    let mut triple = Vec::new();
    for i in 0..rho {
        for j in i..rho {
            for k in j..rho {
                let v = &data.triple[i][j][k];
                if !v.is_zero() {
                    triple.push(vec![
                        Scalar::Int(i as i64),
                        Scalar::Int(j as i64),
                        Scalar::Int(k as i64),
                        Scalar::from_q(v),
                    ]);
                }
            }
        }
    }
    let mut pair_to_curve = Vec::new();
    for i in 0..rho {
        for j in i..rho {
            let c = &data.pair_to_curve[i][j];
            if c.iter().any(|x| !x.is_zero()) {
                let mut row = vec![Scalar::Int(i as i64), Scalar::Int(j as i64)];
                row.extend(c.iter().map(Scalar::from_q));
                pair_to_curve.push(row);
            }
        }
    }
    let list = |v: &[Q]| v.iter().map(Scalar::from_q).collect::<Vec<_>>();
    GeometryFile {
        ample: data
            .ample
            .iter()
            .map(|f| AmpleEntry::Labeled {
                label: f.label.clone(),
                coeffs: list(&f.coeffs),
            })
            .collect(),
        c2x: list(&data.c2),
        c3x: Scalar::from_q(&data.c3),
        curve_basis: data.curve_basis.clone(),
        divisor_basis: data.divisor_basis.clone(),
        effective_curves: data.effective_curves.iter().map(|c| list(c)).collect(),
        name: data.name.clone(),
        pair_to_curve,
        pairing: data.pairing.iter().map(|r| list(r)).collect(),
        triple,
    }
}

/// Parses and validates a geometry from text.
pub fn parse_geometry(text: &str, format: FileFormat) -> Result<Geometry> {
    let file: GeometryFile = match format {
        FileFormat::Toml => toml::from_str(text).map_err(|e| Error::Parse {
            key: toml_key(&e),
            message: e.message().to_string(),
        })?,
        FileFormat::Json => serde_json::from_str(text).map_err(|e| Error::Parse {
            key: "<document>".into(),
            message: e.to_string(),
        })?,
    };
    Geometry::new(to_data(file)?)
}

fn toml_key(e: &toml::de::Error) -> String {
    // serde reports missing keys as "missing field `x`"
    let msg = e.message();
    msg.split('`').nth(1).unwrap_or("<document>").to_string()
}

pub fn load_geometry(path: impl AsRef<Path>) -> Result<Geometry> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_geometry(&text, FileFormat::from_path(path))
}

/// Canonical serialization (sorted keys, upper-triangular tensor entries).
pub fn to_file_string(g: &Geometry, format: FileFormat) -> String {
    let file = to_file(g.data());
    match format {
        FileFormat::Toml => toml::to_string(&file).expect("geometry serializes to TOML"),
        FileFormat::Json => {
            let mut s = serde_json::to_string_pretty(&file).expect("geometry serializes to JSON");
            s.push('\n');
            s
        }
    }
}

pub fn save_geometry(g: &Geometry, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_file_string(g, FileFormat::from_path(path)))?;
    Ok(())
}
