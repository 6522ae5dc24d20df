//! Job files, verb dispatch and the two output forms used by the binary.
//!
//! A job is a flat TOML document. Scalars are TOML integers or strings holding
//! an integer or a fraction "p/q"; floats are refused so exactness survives
//! the trip through the file.

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, ErrorKind};
use crate::fundseries::{
    infinitesimal_character, ktype_table, verify_minimal_ktype, InducingModule, MultiplicityTable,
};
use crate::genericity::{is_generic, norm2_shifted, sl2_threshold, GenericityReport};
use crate::linalg::Matrix;
use crate::pair::ReductivePair;
use crate::parabolic::{compatible_parabolic, singular_root, CompatibleParabolic};
use crate::rational::{fmt_q, parse_q, q, Q};
use crate::rootsys::{RootSystem, WeylCap};
use crate::weight::{GWeight, TWeight, WeightVector};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("config error: {0}")]
    Config(String),
    #[error(transparent)]
    Engine(#[from] Error),
}

impl CliError {
    /// 1 I/O, 2 parse/config, 3 validation, 4 resource cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Config(_) => 2,
            CliError::Engine(e) => match e.kind() {
                ErrorKind::Parse => 2,
                ErrorKind::Validation => 3,
                ErrorKind::ResourceCap => 4,
            },
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Verb {
    PairInfo,
    Parabolic,
    GenericCheck,
    Sl2Threshold,
    Fundseries,
    Verify,
}

impl Verb {
    pub fn name(self) -> &'static str {
        match self {
            Verb::PairInfo => "pair-info",
            Verb::Parabolic => "parabolic",
            Verb::GenericCheck => "generic-check",
            Verb::Sl2Threshold => "sl2-threshold",
            Verb::Fundseries => "fundseries",
            Verb::Verify => "verify",
        }
    }
}

impl FromStr for Verb {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        [
            Verb::PairInfo,
            Verb::Parabolic,
            Verb::GenericCheck,
            Verb::Sl2Threshold,
            Verb::Fundseries,
            Verb::Verify,
        ]
        .into_iter()
        .find(|v| v.name() == s)
        .ok_or_else(|| CliError::Config(format!("unknown command `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Emit {
    #[default]
    Human,
    Machine,
    Both,
}

/// An exact scalar read from TOML: an integer, or a string "p" / "p/q".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(pub Q);

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a string \"p/q\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
                Ok(Scalar(q(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
                i64::try_from(v)
                    .map(|v| Scalar(q(v)))
                    .map_err(|_| E::custom("integer too large"))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Scalar, E> {
                Err(E::custom(format!(
                    "floating-point value {v} is not exact; write an integer or a string \"p/q\""
                )))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
                parse_q(v).map(Scalar).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[default]
    Simple,
    Fundamental,
}

/// Which subalgebra k of g the job refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KKind {
    Sl2,
    Cartan,
    Levi,
    Explicit,
}

/// The contents of a job file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub lie_type: String,
    pub k: KKind,
    pub command: Option<String>,
    /// Dynkin characteristic, for `k = "sl2"`.
    pub labels: Option<Vec<i64>>,
    /// 1-based simple-root indices, for `k = "levi"`.
    pub levi: Option<Vec<usize>>,
    /// Rows of the restriction matrix h* → t*, for `k = "explicit"`.
    pub restriction: Option<Vec<Vec<Scalar>>>,
    pub k_simple_roots: Option<Vec<Vec<Scalar>>>,
    pub k_coroots: Option<Vec<Vec<Scalar>>>,
    /// Highest weight μ of the k-type, in t* coordinates.
    pub mu: Option<Vec<Scalar>>,
    /// Shorthand μ = m for sl2 pairs.
    pub m: Option<Scalar>,
    pub nu: Option<Vec<Scalar>>,
    #[serde(default)]
    pub nu_basis: Basis,
    pub lambda: Option<Vec<Scalar>>,
    pub cutoff: Option<Scalar>,
    pub max_weyl: Option<usize>,
}

impl JobSpec {
    pub fn parse(text: &str) -> CliResult<Self> {
        toml::from_str(text).map_err(|e| CliError::Config(e.message().to_string()))
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn build_pair(&self) -> CliResult<ReductivePair> {
        let g = RootSystem::build(&self.lie_type.parse()?)?;
        let missing =
            |key: &str| CliError::Config(format!("k = \"{}\" needs `{key}`", self.k_name()));
        let pair = match self.k {
            KKind::Sl2 => {
                ReductivePair::sl2(&g, self.labels.as_deref().ok_or_else(|| missing("labels"))?)?
            }
            KKind::Cartan => ReductivePair::cartan(&g)?,
            KKind::Levi => {
                let levi = self.levi.as_ref().ok_or_else(|| missing("levi"))?;
                let mut zero_based = Vec::with_capacity(levi.len());
                for &i in levi {
                    if i == 0 || i > g.rank() {
                        return Err(CliError::Config(format!(
                            "levi index {i} outside 1..={}",
                            g.rank()
                        )));
                    }
                    zero_based.push(i - 1);
                }
                ReductivePair::levi(&g, &zero_based)?
            }
            KKind::Explicit => {
                let rows = self
                    .restriction
                    .as_ref()
                    .ok_or_else(|| missing("restriction"))?;
                let restriction =
                    Matrix::from_rows(rows.iter().map(|r| scalars(r)).collect(), g.rank())?;
                let simple = self.k_simple_roots.as_deref().unwrap_or_default();
                let coroots = self.k_coroots.as_deref().unwrap_or_default();
                let t_weights = |rows: &[Vec<Scalar>]| -> Vec<TWeight> {
                    rows.iter().map(|r| TWeight::new(scalars(r))).collect()
                };
                ReductivePair::explicit(&g, restriction, t_weights(simple), t_weights(coroots))?
            }
        };
        Ok(pair)
    }

    fn k_name(&self) -> &'static str {
        match self.k {
            KKind::Sl2 => "sl2",
            KKind::Cartan => "cartan",
            KKind::Levi => "levi",
            KKind::Explicit => "explicit",
        }
    }

    /// μ from `mu`, or from `m` for sl2 pairs.
    pub fn mu(&self, pair: &ReductivePair) -> CliResult<TWeight> {
        match (&self.mu, &self.m) {
            (Some(_), Some(_)) => Err(CliError::Config("give either `mu` or `m`, not both".into())),
            (Some(mu), None) => {
                let w = TWeight::new(scalars(mu));
                w.check_dim(pair.rank_t(), "mu")?;
                Ok(w)
            }
            (None, Some(m)) => {
                if pair.sl2_labels().is_none() {
                    return Err(CliError::Config(
                        "`m` is only meaningful for k = \"sl2\"".into(),
                    ));
                }
                Ok(TWeight::new(vec![m.0.clone()]))
            }
            (None, None) => Err(CliError::Config("this command needs `mu` or `m`".into())),
        }
    }

    pub fn nu(&self, g: &RootSystem) -> CliResult<Option<GWeight>> {
        let Some(nu) = &self.nu else { return Ok(None) };
        let coords = scalars(nu);
        let w = match self.nu_basis {
            Basis::Simple => GWeight::new(coords),
            Basis::Fundamental => g.from_fundamental(&coords)?,
        };
        w.check_dim(g.rank(), "nu")?;
        Ok(Some(w))
    }
}

fn scalars(v: &[Scalar]) -> Vec<Q> {
    v.iter().map(|s| s.0.clone()).collect()
}

/// Command-line settings that override the job file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub cutoff: Option<Q>,
    pub max_weyl: Option<usize>,
}

/// Both renderings of a finished job.
#[derive(Clone, Debug)]
pub struct Output {
    pub human: String,
    pub machine: Value,
}

impl Output {
    pub fn render(&self, emit: Emit) -> String {
        let machine = || {
            let mut s =
                serde_json::to_string_pretty(&self.machine).expect("JSON values always serialize");
            s.push('\n');
            s
        };
        match emit {
            Emit::Human => self.human.clone(),
            Emit::Machine => machine(),
            Emit::Both => format!("{}\n{}", self.human, machine()),
        }
    }
}

/// Resolves the verb from the command line and the job's `command` key.
pub fn resolve_verb(cli: Option<Verb>, job: &JobSpec) -> CliResult<Verb> {
    let from_job = job.command.as_deref().map(Verb::from_str).transpose()?;
    match (cli, from_job) {
        (Some(a), Some(b)) if a != b => Err(CliError::Config(format!(
            "command line asks for `{}` but the job file says `{}`",
            a.name(),
            b.name()
        ))),
        (Some(a), _) => Ok(a),
        (None, Some(b)) => Ok(b),
        (None, None) => Err(CliError::Config("no command given".into())),
    }
}

pub fn run(verb: Verb, job: &JobSpec, overrides: &Overrides) -> CliResult<Output> {
    let pair = job.build_pair()?;
    let mut cap = WeylCap::default();
    if let Some(n) = overrides.max_weyl.or(job.max_weyl) {
        cap.max_order = n;
    }
    let mut human = String::new();
    let header = pair_header(job, &pair);
    let mut doc = serde_json::Map::new();
    doc.insert("command".into(), json!(verb.name()));
    doc.insert("pair".into(), pair_json(&pair));
    let _ = writeln!(human, "{header}");

    match verb {
        Verb::PairInfo => write_pair_info(&mut human, &pair),
        Verb::Parabolic => {
            let lambda = match &job.lambda {
                Some(l) => TWeight::new(scalars(l)),
                None => &job.mu(&pair)? + &pair.rho().scaled(&q(2)),
            };
            lambda.check_dim(pair.rank_t(), "lambda")?;
            let singular = singular_root(&pair, &lambda)?;
            let par = compatible_parabolic(&pair, &lambda)?;
            write_parabolic(&mut human, &par, singular.as_ref());
            doc.insert("parabolic".into(), to_value(&par));
            doc.insert("singular_root".into(), to_value(&singular));
        }
        Verb::GenericCheck => {
            let mu = job.mu(&pair)?;
            let report = is_generic(&pair, &mu)?;
            write_genericity(&mut human, &report);
            doc.insert("genericity".into(), to_value(&report));
        }
        Verb::Sl2Threshold => {
            let threshold = sl2_threshold(&pair)?;
            let first = threshold.saturating_sub(1);
            let _ = writeln!(human, "rho(h) = {threshold}");
            let _ = writeln!(
                human,
                "V(m) is generic iff m + 1 >= {threshold}, i.e. m >= {first}"
            );
            doc.insert(
                "threshold".into(),
                json!({ "rho_h": threshold, "min_generic_m": first }),
            );
        }
        Verb::Fundseries | Verb::Verify => {
            let mu = job.mu(&pair)?;
            let nu = job.nu(pair.g())?;
            let (par, module) = InducingModule::from_ktype(&pair, &mu, nu)?;
            let generic = is_generic(&pair, &mu)?;
            let cutoff = match overrides
                .cutoff
                .clone()
                .or_else(|| job.cutoff.as_ref().map(|c| c.0.clone()))
            {
                Some(c) => c,
                None => default_cutoff(&pair, &mu)?,
            };
            let table = ktype_table(&pair, &par, &module, &cutoff, cap)?;
            let character = infinitesimal_character(pair.g(), &module);
            let label = if generic.holds {
                "multiplicity"
            } else {
                "Euler characteristic"
            };

            write_module(&mut human, &module, &par, pair.g());
            let _ = writeln!(
                human,
                "infinitesimal character: {}",
                character.representative
            );
            write_genericity(&mut human, &generic);
            write_table(&mut human, &table, label);

            doc.insert("module".into(), to_value(&module));
            doc.insert(
                "borel_positive_roots".into(),
                to_value(&par.borel_positive_roots(&pair)),
            );
            doc.insert("parabolic".into(), to_value(&par));
            doc.insert("character".into(), to_value(&character));
            doc.insert("genericity".into(), to_value(&generic));
            doc.insert("interpretation".into(), json!(label));
            doc.insert("table".into(), to_value(&table));
            if verb == Verb::Verify {
                let report = verify_minimal_ktype(&table, &module, &pair)?;
                let _ = writeln!(
                    human,
                    "minimal k-type check: {}",
                    if report.passed { "PASS" } else { "FAIL" }
                );
                let _ = writeln!(
                    human,
                    "  entry at mu = {} (dim E = {}), others strictly above: {}, nonnegative: {}",
                    report.entry_at_mu,
                    report.dim_e,
                    report.not_above_mu.is_empty(),
                    report.negative_entries.is_empty()
                );
                if !report.generic {
                    let _ = writeln!(
                        human,
                        "  note: V(mu) is not generic, so the checks are not predicted to hold"
                    );
                }
                doc.insert("verification".into(), to_value(&report));
            }
        }
    }
    Ok(Output {
        human,
        machine: Value::Object(doc),
    })
}

/// ‖μ+2ρ‖² + 100⟨ρ,ρ⟩, or 4‖μ+2ρ‖² when ρ = 0 (then the first term is ‖μ‖²).
pub fn default_cutoff(pair: &ReductivePair, mu: &TWeight) -> CliResult<Q> {
    let base = norm2_shifted(pair, mu)?;
    let rho2 = pair.t_pair(pair.rho(), pair.rho())?;
    Ok(if rho2 == q(0) {
        base * q(4)
    } else {
        base + rho2 * q(100)
    })
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result types serialize to JSON")
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| json!(fmt_q(x))).collect()))
            .collect(),
    )
}

fn pair_header(job: &JobSpec, pair: &ReductivePair) -> String {
    let k = match pair.sl2_labels() {
        Some(labels) => format!("sl2 {labels:?}"),
        None => job.k_name().to_string(),
    };
    format!("pair: g = {}, k = {k}", pair.g().lie_type())
}

fn pair_json(pair: &ReductivePair) -> Value {
    json!({
        "lie_type": pair.g().lie_type().to_string(),
        "embedding": to_value(pair.kind()),
        "rank_t": pair.rank_t(),
        "restriction": matrix_json(pair.restriction()),
        "t_form": matrix_json(pair.t_form()),
        "k_positive_roots": to_value(&pair.k_positive_roots()),
        "rho": to_value(pair.rho()),
        "delta_t": to_value(&pair.delta_t()),
    })
}

fn write_pair_info(out: &mut String, pair: &ReductivePair) {
    let rows: Vec<String> = pair
        .restriction()
        .to_rows()
        .iter()
        .map(|r| crate::rational::fmt_coords(r))
        .collect();
    let form: Vec<String> = pair
        .t_form()
        .to_rows()
        .iter()
        .map(|r| crate::rational::fmt_coords(r))
        .collect();
    let _ = writeln!(out, "rank t = {}", pair.rank_t());
    let _ = writeln!(out, "restriction rows: {}", rows.join(" "));
    let _ = writeln!(out, "form on t*: {}", form.join(" "));
    let _ = writeln!(out, "k-positive roots: {}", join(pair.k_positive_roots()));
    let _ = writeln!(out, "rho = {}", pair.rho());
    let _ = writeln!(
        out,
        "Delta_t ({}): {}",
        pair.delta_t().len(),
        join(pair.delta_t())
    );
}

fn write_parabolic(out: &mut String, par: &CompatibleParabolic, singular: Option<&TWeight>) {
    let _ = writeln!(out, "lambda = {}", par.lambda);
    match singular {
        Some(root) => {
            let _ = writeln!(out, "regular: no (pairs to zero with {root})");
        }
        None => {
            let _ = writeln!(out, "regular: yes");
        }
    }
    let _ = writeln!(out, "minimal: {}", if par.minimal { "yes" } else { "no" });
    let _ = writeln!(out, "ch_t n = {}", par.ch_t_n);
    let _ = writeln!(out, "ch_t (n ∩ k) = {}", par.ch_t_n_cap_k);
    let _ = writeln!(out, "ch_t (n ∩ k⊥) = {}", par.ch_t_n_cap_kperp);
    let _ = writeln!(
        out,
        "rho_n = {}, rho_n_perp = {}",
        par.rho_n, par.rho_n_perp
    );
    let _ = writeln!(out, "s = {}, r = {}", par.s, par.r);
    let _ = writeln!(out, "m roots: {}", join(&par.m_roots));
}

fn write_genericity(out: &mut String, r: &GenericityReport) {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(out, "mu = {}, lambda = mu + 2 rho = {}", r.mu, r.lambda);
    let _ = writeln!(out, "generic: {}", yes_no(r.holds));
    let _ = write!(out, "  condition 1: {}", yes_no(r.condition1_ok));
    if let Some(alpha) = &r.condition1_witness {
        let _ = write!(out, " (fails at k-root {alpha})");
    }
    let _ = writeln!(out);
    let _ = write!(out, "  condition 2: {}", yes_no(r.condition2_ok));
    if let Some(w) = &r.condition2_witness {
        let _ = write!(
            out,
            " (fails at S = {}, rho_S = {}, value {})",
            w.subset,
            w.rho_s,
            fmt_q(&w.value)
        );
    }
    let _ = writeln!(out);
}

fn write_module(out: &mut String, e: &InducingModule, par: &CompatibleParabolic, g: &RootSystem) {
    let _ = writeln!(
        out,
        "nu = {} (fundamental: {})",
        e.nu,
        crate::rational::fmt_coords(&g.to_fundamental(&e.nu))
    );
    let _ = writeln!(
        out,
        "omega = {}, dim E = {}, mu = {}",
        e.omega, e.dim_e, e.mu
    );
    let _ = writeln!(out, "rho_b = {}", e.rho_b);
    let _ = writeln!(out, "s = {}, r = {}", par.s, par.r);
}

/// One row per entry: `delta`, `‖δ+2ρ‖²`, value, whitespace separated.
fn write_table(out: &mut String, table: &MultiplicityTable, label: &str) {
    let _ = writeln!(
        out,
        "k-types with |delta + 2 rho|^2 <= {} ({label}):",
        fmt_q(&table.cutoff)
    );
    let _ = writeln!(out, "  {:<24} {:>14} {:>8}", "delta", "norm2", "value");
    for e in &table.entries {
        let _ = writeln!(
            out,
            "  {:<24} {:>14} {:>8}",
            e.delta.to_string(),
            fmt_q(&e.norm2_shifted),
            e.value
        );
    }
}

fn join<W: fmt::Display>(items: &[W]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(text: &str) -> JobSpec {
        JobSpec::parse(text).unwrap()
    }

    #[test]
    fn scalars_accept_ints_and_fractions() {
        let j = job(
            "lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nmu = [\"3/1\"]\ncutoff = \"7/2\"\n",
        );
        assert_eq!(j.cutoff.unwrap().0, crate::rational::frac(7, 2));
        assert_eq!(j.mu.unwrap()[0].0, q(3));
    }

    #[test]
    fn floats_are_rejected() {
        let err = JobSpec::parse("lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nm = 3.0\n")
            .unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("not exact"));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(JobSpec::parse("lie_type = \"A2\"\nk = \"cartan\"\ncolour = 1\n").is_err());
    }

    #[test]
    fn generic_check_sl2() {
        let j = job("lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nm = 3\n");
        let out = run(Verb::GenericCheck, &j, &Overrides::default()).unwrap();
        assert_eq!(out.machine["genericity"]["holds"], json!(true));
        assert!(out.human.contains("generic: yes"));
    }

    #[test]
    fn threshold_b2() {
        let j = job("lie_type = \"B2\"\nk = \"sl2\"\nlabels = [2, 2]\n");
        let out = run(Verb::Sl2Threshold, &j, &Overrides::default()).unwrap();
        assert_eq!(out.machine["threshold"]["rho_h"], json!(7));
        assert!(out.human.contains("m >= 6"));
    }

    #[test]
    fn fundseries_a2_table() {
        let j = job(
            "lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nm = 3\nnu = [\"-3/4\", \"-3/4\"]\n",
        );
        let pair = j.build_pair().unwrap();
        let cutoff = norm2_shifted(&pair, &TWeight::from_ints(&[11])).unwrap();
        let out = run(
            Verb::Fundseries,
            &j,
            &Overrides {
                cutoff: Some(cutoff),
                max_weyl: None,
            },
        )
        .unwrap();
        let entries = out.machine["table"]["entries"].as_array().unwrap();
        let got: Vec<(String, i64)> = entries
            .iter()
            .map(|e| {
                (
                    e["delta"][0].as_str().unwrap().to_string(),
                    e["value"].as_i64().unwrap(),
                )
            })
            .collect();
        let want: Vec<(String, i64)> = [(3, 1), (5, 1), (7, 2), (9, 2), (11, 3)]
            .iter()
            .map(|&(d, v)| (d.to_string(), v))
            .collect();
        assert_eq!(got, want);
        assert_eq!(out.machine["table"]["s"], json!(1));
        assert_eq!(out.machine["table"]["r"], json!(2));
        assert_eq!(out.machine["interpretation"], json!("multiplicity"));
    }

    #[test]
    fn non_generic_is_labelled_euler() {
        let j = job("lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nm = 2\n");
        let out = run(Verb::Fundseries, &j, &Overrides::default()).unwrap();
        assert_eq!(out.machine["interpretation"], json!("Euler characteristic"));
    }

    #[test]
    fn exit_codes() {
        let j = job("lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nm = -1\n");
        assert_eq!(
            run(Verb::GenericCheck, &j, &Overrides::default())
                .unwrap_err()
                .exit_code(),
            3
        );
        let j = job("lie_type = \"Q7\"\nk = \"cartan\"\n");
        assert_eq!(
            run(Verb::PairInfo, &j, &Overrides::default())
                .unwrap_err()
                .exit_code(),
            2
        );
        let j =
            job("lie_type = \"A3\"\nk = \"levi\"\nlevi = [1, 2, 3]\nmu = [\"0\", \"0\", \"0\"]\n");
        let capped = Overrides {
            cutoff: None,
            max_weyl: Some(5),
        };
        assert_eq!(
            run(Verb::Fundseries, &j, &capped).unwrap_err().exit_code(),
            4
        );
    }

    #[test]
    fn verb_resolution() {
        let j = job("lie_type = \"A2\"\nk = \"cartan\"\ncommand = \"pair-info\"\n");
        assert_eq!(resolve_verb(None, &j).unwrap(), Verb::PairInfo);
        assert_eq!(
            resolve_verb(Some(Verb::PairInfo), &j).unwrap(),
            Verb::PairInfo
        );
        assert!(resolve_verb(Some(Verb::Verify), &j).is_err());
    }

    #[test]
    fn levi_indices_are_one_based() {
        let j = job("lie_type = \"B2\"\nk = \"levi\"\nlevi = [2]\n");
        let pair = j.build_pair().unwrap();
        assert_eq!(pair.k_positive_roots(), [TWeight::from_ints(&[0, 1])]);
        let bad = job("lie_type = \"B2\"\nk = \"levi\"\nlevi = [0]\n");
        assert_eq!(bad.build_pair().unwrap_err().exit_code(), 2);
    }

    #[test]
    fn explicit_pair_reproduces_sl2() {
        let j = job(
            "lie_type = \"A2\"\nk = \"explicit\"\nrestriction = [[2, 2]]\n\
             k_simple_roots = [[2]]\nk_coroots = [[1]]\nmu = [3]\n",
        );
        let out = run(Verb::GenericCheck, &j, &Overrides::default()).unwrap();
        assert_eq!(out.machine["genericity"]["holds"], json!(true));
    }
}
