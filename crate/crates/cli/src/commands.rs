use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use cy3_core::rational::{self, format as q};
use cy3_core::{
    anomaly_scan, builtin, builtin_names, evaluate_candidate, load_geometry, save_geometry,
    search, BundleData, DivisorClass, Error, Geometry, RankCase, SearchConfig,
};

use crate::report::{ConfigEcho, RunReport};

/// Success with solutions / passed check.
pub const EXIT_OK: i32 = 0;
/// Clean run without solutions, or a failed check.
pub const EXIT_NONE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVALID_GEOMETRY: i32 = 3;

/// An error carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Validation(_) | Error::HodgeIndex { .. } => EXIT_INVALID_GEOMETRY,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<Error>() {
            Ok(core) => core.into(),
            Err(e) => Failure::input(format!("{e:#}")),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

pub type Outcome = Result<i32, Failure>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleChoice {
    O,
    TX,
}

impl BundleChoice {
    fn build(self, g: &Geometry) -> BundleData {
        match self {
            BundleChoice::O => BundleData::trivial_line(g),
            BundleChoice::TX => BundleData::tangent(g),
        }
    }
}

/// Where the geometry comes from: a built-in name or a file.
pub fn resolve_geometry(name: Option<&str>, file: Option<&Path>) -> Result<Geometry, Failure> {
    match (name, file) {
        (_, Some(path)) => load_geometry(path)
            .with_context(|| format!("loading {}", path.display()))
            .map_err(Failure::from),
        (Some(name), None) => builtin(name).ok_or_else(|| {
            Failure::input(format!(
                "unknown geometry `{name}` (built-ins: {})",
                builtin_names().join(", ")
            ))
        }),
        (None, None) => Err(Failure::input("a geometry name or --geometry-file is required")),
    }
}

fn parse_class(g: &Geometry, text: &str, what: &str) -> Result<DivisorClass, Failure> {
    let coords = rational::parse_list(text)
        .ok_or_else(|| Failure::input(format!("{what}: cannot parse `{text}` as a coordinate list")))?;
    Ok(g.divisor(coords)?)
}

/// `--rank` picks the default pair; `--e1`/`--e2` override either side.
pub fn rank_case(
    rank: u32,
    e1: Option<BundleChoice>,
    e2: Option<BundleChoice>,
    g: &Geometry,
) -> Result<(RankCase, String, String), Failure> {
    let (d1, d2) = match rank {
        2 => (BundleChoice::O, BundleChoice::O),
        4 => (BundleChoice::TX, BundleChoice::O),
        r => return Err(Failure::input(format!("--rank must be 2 or 4, found {r}"))),
    };
    let (e1, e2) = (e1.unwrap_or(d1), e2.unwrap_or(d2));
    let case = match (e1, e2) {
        (BundleChoice::O, BundleChoice::O) => RankCase::R2,
        (BundleChoice::TX, BundleChoice::O) => RankCase::R4,
        _ => RankCase::Custom(e1.build(g), e2.build(g)),
    };
    let (b1, b2) = case.bundles(g);
    Ok((case, b1.label, b2.label))
}

pub fn geometry_list(out: &mut dyn Write) -> Outcome {
    for name in builtin_names() {
        let g = builtin(&name).expect("built-in geometry");
        writeln!(out, "{name:<16} rho = {:>2}  basis: {}", g.picard_rank(), g.divisor_labels().join(", "))?;
    }
    Ok(EXIT_OK)
}

fn monomial(labels: &[String], index: [usize; 3]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < 3 {
        let mut j = i;
        while j < 3 && index[j] == index[i] {
            j += 1;
        }
        let label = &labels[index[i]];
        parts.push(match j - i {
            1 => label.clone(),
            n => format!("{label}^{n}"),
        });
        i = j;
    }
    parts.join(" ")
}

pub fn geometry_show(out: &mut dyn Write, g: &Geometry) -> Outcome {
    let data = g.data();
    let divs = &data.divisor_basis;
    let curves = &data.curve_basis;
    let rho = g.picard_rank();
    writeln!(out, "name: {}", g.name())?;
    writeln!(out, "divisor basis: {}", divs.join(", "))?;
    writeln!(out, "curve basis: {}", curves.join(", "))?;
    writeln!(out, "triple intersections:")?;
    for i in 0..rho {
        for j in i..rho {
            for k in j..rho {
                let v = &data.triple[i][j][k];
                if *v != rational::int(0) {
                    writeln!(out, "  {} = {}", monomial(divs, [i, j, k]), q(v))?;
                }
            }
        }
    }
    writeln!(out, "divisor products:")?;
    for i in 0..rho {
        for j in i..rho {
            let c = cy3_core::intersection::format_combination(&data.pair_to_curve[i][j], curves);
            if c != "0" {
                writeln!(out, "  {}.{} = {c}", divs[i], divs[j])?;
            }
        }
    }
    writeln!(out, "pairing:")?;
    for (i, row) in data.pairing.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .zip(curves)
            .map(|(v, c)| format!("{}.{c} = {}", divs[i], q(v)))
            .collect();
        writeln!(out, "  {}", cells.join(", "))?;
    }
    writeln!(out, "c2 = {}", g.format_curve(&g.c2_class()))?;
    let c2_row: Vec<String> = (0..rho)
        .map(|i| Ok(format!("c2.{} = {}", divs[i], q(&g.c2_dot(&g.basis_divisor(i))?))))
        .collect::<Result<_, Error>>()?;
    writeln!(out, "  {}", c2_row.join(", "))?;
    writeln!(out, "c3 = {}", q(g.c3()))?;
    writeln!(out, "ample cone:")?;
    for form in &data.ample {
        writeln!(out, "  {}", form.label)?;
    }
    writeln!(out, "effective curve generators: {}", data.effective_curves.len())?;
    for c in g.effective_generators() {
        writeln!(out, "  {}", g.format_curve(&c))?;
    }
    Ok(EXIT_OK)
}

pub fn geometry_validate(out: &mut dyn Write, path: &Path) -> Outcome {
    let g = resolve_geometry(None, Some(path))?;
    writeln!(out, "ok: {} (rho = {})", g.name(), g.picard_rank())?;
    Ok(EXIT_OK)
}

pub fn geometry_save(out: &mut dyn Write, name: &str, path: &Path) -> Outcome {
    let g = resolve_geometry(Some(name), None)?;
    save_geometry(&g, path)?;
    writeln!(out, "wrote {}", path.display())?;
    Ok(EXIT_OK)
}

pub struct SearchArgs {
    pub geometry: Option<String>,
    pub geometry_file: Option<PathBuf>,
    pub h: String,
    pub rank: u32,
    pub e1: Option<BundleChoice>,
    pub e2: Option<BundleChoice>,
    pub bound: u32,
    pub multiples: u32,
    pub perturb: bool,
    pub deltas: Option<String>,
    pub include_failures: bool,
    pub format: Format,
    pub threads: Option<usize>,
}

pub fn run_search(args: &SearchArgs) -> Result<(RunReport, i32), Failure> {
    let g = resolve_geometry(args.geometry.as_deref(), args.geometry_file.as_deref())?;
    let h = parse_class(&g, &args.h, "--H")?;
    let (case, l1, l2) = rank_case(args.rank, args.e1, args.e2, &g)?;
    let mut config = SearchConfig {
        coord_bound: args.bound,
        multiple_range: args.multiples,
        rank_case: case.clone(),
        perturbation_enabled: args.perturb,
        include_failures: args.include_failures,
        threads: args.threads,
        ..SearchConfig::default()
    };
    if let Some(text) = &args.deltas {
        config.perturbation_deltas = rational::parse_list(text)
            .filter(|d| !d.is_empty() && d.iter().all(|x| *x > rational::int(0)))
            .ok_or_else(|| Failure::input(format!("--deltas: expected positive rationals, found `{text}`")))?;
    }
    let certificates = search(&g, &h, &config)?;
    let entries = anomaly_scan(&g, &certificates, &case)?;
    let report = RunReport::new(
        "search",
        &g,
        &rational::format_list(h.coords()),
        ConfigEcho::new(&config, &l1, &l2),
        &entries,
    );
    let code = if report.summary.valid > 0 { EXIT_OK } else { EXIT_NONE };
    Ok((report, code))
}

pub fn search_command(out: &mut dyn Write, args: &SearchArgs) -> Outcome {
    let (report, code) = run_search(args)?;
    match args.format {
        Format::Json => out.write_all(report.to_json().as_bytes())?,
        Format::Table => out.write_all(report.to_table().as_bytes())?,
    }
    Ok(code)
}

pub struct CheckArgs {
    pub geometry: Option<String>,
    pub geometry_file: Option<PathBuf>,
    pub d: String,
    pub h: String,
    pub rank: u32,
    pub e1: Option<BundleChoice>,
    pub e2: Option<BundleChoice>,
    pub format: Format,
}

pub fn run_check(args: &CheckArgs) -> Result<(RunReport, i32), Failure> {
    let g = resolve_geometry(args.geometry.as_deref(), args.geometry_file.as_deref())?;
    let d = parse_class(&g, &args.d, "--D")?;
    let h = parse_class(&g, &args.h, "--H")?;
    let (case, l1, l2) = rank_case(args.rank, args.e1, args.e2, &g)?;
    let (e1, e2) = case.bundles(&g);
    let cert = evaluate_candidate(&g, &e1, &e2, &d, &h)?;
    let valid = cert.is_valid();
    let entries = anomaly_scan(&g, &[cert], &case)?;
    let config = SearchConfig {
        rank_case: case,
        include_failures: true,
        ..SearchConfig::default()
    };
    let report = RunReport::new(
        "check",
        &g,
        &rational::format_list(h.coords()),
        ConfigEcho::new(&config, &l1, &l2),
        &entries,
    );
    Ok((report, if valid { EXIT_OK } else { EXIT_NONE }))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn check_command(out: &mut dyn Write, args: &CheckArgs) -> Outcome {
    let (report, code) = run_check(args)?;
    if args.format == Format::Json {
        out.write_all(report.to_json().as_bytes())?;
        return Ok(code);
    }
    let c = &report.certificates[0];
    writeln!(out, "geometry {}  case {}", report.geometry, report.config.rank_case)?;
    writeln!(out, "D = ({})  [{}]", c.d.join(", "), c.d_class)?;
    writeln!(out, "H = ({})", c.h.join(", "))?;
    writeln!(out, "[{}] orthogonal   D.H^2 = {}", mark(c.checks.orthogonal), c.d_h2)?;
    writeln!(out, "[{}] nontrivial   D.H pairing row = [{}]", mark(c.checks.nontrivial), c.dh_row.join(", "))?;
    writeln!(out, "[{}] negative     D^2.H = {}", mark(c.checks.negative), c.d2_h)?;
    writeln!(out, "[{}] nonsplit     chi = {}", mark(c.checks.nonsplit), c.chi)?;
    writeln!(
        out,
        "bundle {}: rank {}, c2 = ({}), c3 = {}",
        c.bundle.label,
        c.bundle.rank,
        c.bundle.c2.join(", "),
        c.bundle.c3
    )?;
    writeln!(
        out,
        "anomaly W = ({}) = {}  effective: {}",
        c.anomaly.w.join(", "),
        c.anomaly.w_class,
        if c.anomaly.effective { "yes" } else { "no" }
    )?;
    writeln!(out, "certificate: {}", if c.checks.valid { "valid" } else { "invalid" })?;
    Ok(code)
}
