//! Machine-readable run reports. Every rational is a `"p/q"` string.

use std::fmt::Write as _;

use cy3_core::rational::{format as q, format_list};
use cy3_core::{AnomalyEntry, Geometry, Origin, SearchConfig};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool_version: String,
    pub command: String,
    pub geometry: String,
    pub h: Vec<String>,
    pub config: ConfigEcho,
    pub certificates: Vec<CertificateReport>,
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub rank_case: String,
    pub e1: String,
    pub e2: String,
    pub coord_bound: u32,
    pub multiple_range: u32,
    pub perturbation: bool,
    pub perturbation_deltas: Vec<String>,
    pub include_failures: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub candidates: usize,
    pub valid: usize,
    pub effective: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub d: Vec<String>,
    pub d_class: String,
    pub h: Vec<String>,
    pub origin: OriginReport,
    pub checks: ChecksReport,
    /// `D.H^2`
    pub d_h2: String,
    /// `B_i.D.H`
    pub dh_row: Vec<String>,
    /// `D^2.H`
    pub d2_h: String,
    pub chi: String,
    pub bundle: BundleReport,
    pub anomaly: AnomalyReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OriginReport {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksReport {
    pub orthogonal: bool,
    pub nontrivial: bool,
    pub negative: bool,
    pub nonsplit: bool,
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleReport {
    pub label: String,
    pub rank: u32,
    pub c2: Vec<String>,
    pub c3: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnomalyReport {
    pub w: Vec<String>,
    pub w_class: String,
    pub effective: bool,
    /// `[generator index, coefficient]` pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<(usize, String)>>,
}

impl OriginReport {
    fn new(origin: &Origin) -> Self {
        match origin {
            Origin::Lattice => OriginReport {
                kind: "lattice".into(),
                m: None,
                delta: None,
            },
            Origin::Multiple { m } => OriginReport {
                kind: "multiple".into(),
                m: Some(*m),
                delta: None,
            },
            Origin::Perturbed { delta, m } => OriginReport {
                kind: "perturbed".into(),
                m: Some(*m),
                delta: Some(q(delta)),
            },
        }
    }

    fn short(&self) -> String {
        match (&self.delta, self.m) {
            (Some(delta), Some(m)) => format!("perturbed(d={delta},m={m})"),
            (None, Some(m)) => format!("multiple(m={m})"),
            _ => self.kind.clone(),
        }
    }
}

impl CertificateReport {
    pub fn new(g: &Geometry, entry: &AnomalyEntry) -> Self {
        let c = &entry.certificate;
        let v = &entry.verdict;
        CertificateReport {
            d: format_list(c.d.coords()),
            d_class: g.format_divisor(&c.d),
            h: format_list(c.h.coords()),
            origin: OriginReport::new(&c.origin),
            checks: ChecksReport {
                orthogonal: c.checks.orthogonal,
                nontrivial: c.checks.nontrivial,
                negative: c.checks.negative,
                nonsplit: c.checks.nonsplit,
                valid: c.is_valid(),
            },
            d_h2: q(&c.orthogonality),
            dh_row: format_list(&c.degree_row),
            d2_h: q(&c.negativity),
            chi: q(&c.chi),
            bundle: BundleReport {
                label: entry.bundle.label.clone(),
                rank: entry.bundle.rank,
                c2: format_list(entry.bundle.c2.coords()),
                c3: q(&entry.bundle.c3),
            },
            anomaly: AnomalyReport {
                w: format_list(v.w.coords()),
                w_class: g.format_curve(&v.w),
                effective: v.effective,
                decomposition: v
                    .decomposition
                    .as_ref()
                    .map(|d| d.iter().map(|(i, c)| (*i, q(c))).collect()),
            },
        }
    }
}

impl ConfigEcho {
    pub fn new(config: &SearchConfig, e1: &str, e2: &str) -> Self {
        ConfigEcho {
            rank_case: config.rank_case.label(),
            e1: e1.to_string(),
            e2: e2.to_string(),
            coord_bound: config.coord_bound,
            multiple_range: config.multiple_range,
            perturbation: config.perturbation_enabled,
            perturbation_deltas: format_list(&config.perturbation_deltas),
            include_failures: config.include_failures,
        }
    }
}

impl RunReport {
    /// Entries are ordered by `D`, then `H`.
    pub fn new(
        command: &str,
        g: &Geometry,
        h: &[String],
        config: ConfigEcho,
        entries: &[AnomalyEntry],
    ) -> Self {
        let mut entries: Vec<&AnomalyEntry> = entries.iter().collect();
        entries.sort_by(|a, b| {
            (a.certificate.d.coords(), a.certificate.h.coords())
                .cmp(&(b.certificate.d.coords(), b.certificate.h.coords()))
        });
        let certificates: Vec<CertificateReport> =
            entries.iter().map(|e| CertificateReport::new(g, e)).collect();
        let summary = Summary {
            candidates: certificates.len(),
            valid: certificates.iter().filter(|c| c.checks.valid).count(),
            effective: certificates
                .iter()
                .filter(|c| c.checks.valid && c.anomaly.effective)
                .count(),
        };
        RunReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            geometry: g.name().to_string(),
            h: h.to_vec(),
            config,
            certificates,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Fixed-width table, one row per certificate.
    pub fn to_table(&self) -> String {
        let header = ["D", "origin", "D.H^2", "D^2.H", "chi", "valid", "W", "effective"];
        let rows: Vec<[String; 8]> = self
            .certificates
            .iter()
            .map(|c| {
                [
                    format!("({})", c.d.join(", ")),
                    c.origin.short(),
                    c.d_h2.clone(),
                    c.d2_h.clone(),
                    c.chi.clone(),
                    yes_no(c.checks.valid),
                    format!("({})", c.anomaly.w.join(", ")),
                    yes_no(c.anomaly.effective),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let _ = writeln!(
            out,
            "geometry {}  H = ({})  case {}",
            self.geometry,
            self.h.join(", "),
            self.config.rank_case
        );
        let line = |out: &mut String, cells: &[&str]| {
            let text: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", text.join("  ").trim_end());
        };
        line(&mut out, &header);
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        line(&mut out, &rule.iter().map(String::as_str).collect::<Vec<_>>());
        for row in &rows {
            line(&mut out, &row.iter().map(String::as_str).collect::<Vec<_>>());
        }
        let _ = writeln!(
            out,
            "{} candidates, {} valid, {} with effective anomaly",
            self.summary.candidates, self.summary.valid, self.summary.effective
        );
        out
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}
