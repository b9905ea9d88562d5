//! Job configuration: a JSON file and/or command-line flags, validated into
//! a [`Job`] before anything is computed.

use std::fmt;

use dcrystal::rootdata::RawRootDatum;
use dcrystal::{RootDatum, Weight, WeylElement, Q};
use serde::Deserialize;

/// A configuration problem, reported with the path of the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub field: String,
    pub message: String,
}

impl ConfigError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError { field: field.into(), message: message.into() }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

impl std::error::Error for ConfigError {}

/// A number given either as a JSON integer or as a `"p/q"` string.
#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

/// A weight given as text (`"ω1+ω2"`, `"1,0,1"`) or as a coordinate list.
#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum WeightSpec {
    Text(String),
    Coords(Vec<Num>),
}

/// A word given as text (`"2,1,3,2"`, `"s2s1"`, `""`) or as a list of
/// 1-based indices.
#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum WordSpec {
    Text(String),
    Letters(Vec<usize>),
}

/// An inline root datum. Without `roots`, fundamental weight coordinates are
/// used: `α_j` is column `j` of the Cartan matrix and the pairing is the
/// identity.
#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DatumSpec {
    pub name: Option<String>,
    pub cartan: Vec<Vec<i64>>,
    pub roots: Option<Vec<Vec<Num>>>,
    pub pairing: Option<Vec<Vec<Num>>>,
    pub symmetrizer: Option<Vec<Num>>,
    pub fundamental_weights: Option<Vec<Vec<Num>>>,
}

/// Unvalidated job settings. Every field is optional so that a file and the
/// command line can be merged.
#[derive(Debug, Clone, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub preset: Option<String>,
    pub datum: Option<DatumSpec>,
    pub lambda: Option<WeightSpec>,
    pub mu: Option<WeightSpec>,
    pub v: Option<WordSpec>,
    pub w: Option<WordSpec>,
    pub mode: Option<String>,
    pub depth: Option<u64>,
    pub format: Option<String>,
    pub seed: Option<u64>,
    pub all_vw: Option<bool>,
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError::new("config", e.to_string()))
    }

    /// Fields set in `other` win.
    pub fn merge(self, other: JobConfig) -> JobConfig {
        JobConfig {
            preset: other.preset.or(self.preset),
            datum: other.datum.or(self.datum),
            lambda: other.lambda.or(self.lambda),
            mu: other.mu.or(self.mu),
            v: other.v.or(self.v),
            w: other.w.or(self.w),
            mode: other.mode.or(self.mode),
            depth: other.depth.or(self.depth),
            format: other.format.or(self.format),
            seed: other.seed.or(self.seed),
            all_vw: other.all_vw.or(self.all_vw),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Finite,
    Infinity,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Finite => "finite",
            Mode::Infinity => "infinity",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Table,
}

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_DEPTH: u64 = 4;

/// A validated job.
#[derive(Debug, Clone)]
pub struct Job {
    pub datum: RootDatum,
    pub lambda: Option<Weight>,
    pub mu: Option<Weight>,
    pub v: WeylElement,
    /// `--v` was given explicitly.
    pub v_given: bool,
    pub w: WeylElement,
    pub mode: Mode,
    pub depth: u64,
    pub format: Option<Format>,
    pub seed: u64,
    pub all_vw: bool,
}

impl Job {
    pub fn lambda(&self) -> Result<&Weight, ConfigError> {
        self.lambda.as_ref().ok_or_else(|| ConfigError::new("lambda", "required"))
    }

    pub fn mu(&self) -> Result<&Weight, ConfigError> {
        self.mu.as_ref().ok_or_else(|| ConfigError::new("mu", "required in finite mode"))
    }

    pub fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

impl TryFrom<JobConfig> for Job {
    type Error = ConfigError;

    fn try_from(cfg: JobConfig) -> Result<Self, ConfigError> {
        let datum = match (&cfg.preset, &cfg.datum) {
            (Some(_), Some(_)) => return Err(ConfigError::new("datum", "give either a preset or an inline datum, not both")),
            (Some(name), None) => RootDatum::preset(name).map_err(|e| {
                ConfigError::new("preset", format!("{e} (known presets: {})", RootDatum::preset_names()))
            })?,
            (None, Some(spec)) => build_datum(spec)?,
            (None, None) => return Err(ConfigError::new("preset", "a root datum is required (--preset or --datum)")),
        };
        let lambda = cfg.lambda.as_ref().map(|s| parse_weight(&datum, s, "lambda")).transpose()?;
        let mu = cfg.mu.as_ref().map(|s| parse_weight(&datum, s, "mu")).transpose()?;
        let v = match &cfg.v {
            Some(s) => parse_word(&datum, s, "v")?,
            None => WeylElement::identity(&datum),
        };
        let w = match &cfg.w {
            Some(s) => parse_word(&datum, s, "w")?,
            None => WeylElement::identity(&datum),
        };
        let mode = match cfg.mode.as_deref().map(str::trim) {
            None | Some("finite") => Mode::Finite,
            Some("infinity" | "inf" | "∞") => Mode::Infinity,
            Some(other) => return Err(ConfigError::new("mode", format!("expected finite or infinity, got {other:?}"))),
        };
        let format = match cfg.format.as_deref().map(str::trim) {
            None => None,
            Some("json") => Some(Format::Json),
            Some("dot") => Some(Format::Dot),
            Some("table") => Some(Format::Table),
            Some(other) => return Err(ConfigError::new("format", format!("expected json, dot or table, got {other:?}"))),
        };
        Ok(Job {
            datum,
            lambda,
            mu,
            v_given: cfg.v.is_some(),
            v,
            w,
            mode,
            depth: cfg.depth.unwrap_or(DEFAULT_DEPTH),
            format,
            seed: cfg.seed.unwrap_or(DEFAULT_SEED),
            all_vw: cfg.all_vw.unwrap_or(false),
        })
    }
}

pub fn parse_num(s: &str, field: &str) -> Result<Q, ConfigError> {
    let s = s.trim();
    let bad = || ConfigError::new(field, format!("{s:?} is not a number"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(ConfigError::new(field, "zero denominator"));
            }
            Ok(Q::new(p, q))
        }
        None => s.parse::<i64>().map(Q::from).map_err(|_| bad()),
    }
}

fn num(n: &Num, field: &str) -> Result<Q, ConfigError> {
    match n {
        Num::Int(k) => Ok(Q::from(*k)),
        Num::Text(s) => parse_num(s, field),
    }
}

fn matrix(rows: &[Vec<Num>], field: &str) -> Result<Vec<Vec<Q>>, ConfigError> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, x)| num(x, &format!("{field}[{i}][{j}]"))).collect())
        .collect()
}

fn identity(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| (0..n).map(|j| Q::from(i64::from(i == j))).collect()).collect()
}

pub fn build_datum(spec: &DatumSpec) -> Result<RootDatum, ConfigError> {
    let n = spec.cartan.len();
    let (roots, pairing, fundamental) = match (&spec.roots, &spec.pairing) {
        (None, None) => {
            let r = spec.cartan.iter().map(|row| row.iter().map(|&a| Q::from(a)).collect()).collect();
            let fw = (0..n).map(|i| Weight(identity(n)[i].clone())).collect();
            (r, identity(n), Some(fw))
        }
        (Some(r), Some(c)) => (matrix(r, "datum.roots")?, matrix(c, "datum.pairing")?, None),
        (Some(_), None) => return Err(ConfigError::new("datum.pairing", "required when datum.roots is given")),
        (None, Some(_)) => return Err(ConfigError::new("datum.roots", "required when datum.pairing is given")),
    };
    let fundamental = match &spec.fundamental_weights {
        Some(rows) => Some(matrix(rows, "datum.fundamental_weights")?.into_iter().map(Weight).collect()),
        None => fundamental,
    };
    let symmetrizer = spec
        .symmetrizer
        .as_ref()
        .map(|s| s.iter().enumerate().map(|(i, x)| num(x, &format!("datum.symmetrizer[{i}]"))).collect())
        .transpose()?;
    RawRootDatum {
        name: spec.name.clone().unwrap_or_else(|| "custom".into()),
        cartan: spec.cartan.clone(),
        roots,
        pairing,
        symmetrizer,
        fundamental_weights: fundamental,
    }
    .validate()
    .map_err(|e| ConfigError::new("datum", e.to_string()))
}

/// Accepts `ω2`, `ω1+ω2`, `2ω1 − ω3`, ASCII `w2`, `ω` in rank one, `0`, or
/// coordinates such as `1,0,1`, `[1, 0, 1]` or `(1/2, 1)`.
pub fn parse_weight(d: &RootDatum, spec: &WeightSpec, field: &str) -> Result<Weight, ConfigError> {
    let text = match spec {
        WeightSpec::Coords(xs) => {
            let coords: Vec<Q> = xs.iter().enumerate().map(|(i, x)| num(x, &format!("{field}[{i}]"))).collect::<Result<_, _>>()?;
            return check_dim(d, coords, field);
        }
        WeightSpec::Text(s) => s.trim(),
    };
    if text.is_empty() {
        return Err(ConfigError::new(field, "empty weight"));
    }
    if text == "0" {
        return Ok(Weight::zero(d.dim()));
    }
    if text.contains(['ω', 'w']) {
        return parse_symbolic(d, text, field);
    }
    let inner = text.trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    let coords: Vec<Q> = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| parse_num(p, field))
        .collect::<Result<_, _>>()?;
    check_dim(d, coords, field)
}

fn check_dim(d: &RootDatum, coords: Vec<Q>, field: &str) -> Result<Weight, ConfigError> {
    if coords.len() != d.dim() {
        return Err(ConfigError::new(
            field,
            format!("expected {} coordinates for {}, got {}", d.dim(), d.name(), coords.len()),
        ));
    }
    Ok(Weight(coords))
}

fn parse_symbolic(d: &RootDatum, text: &str, field: &str) -> Result<Weight, ConfigError> {
    let fw = d
        .fundamental_weights()
        .ok_or_else(|| ConfigError::new(field, format!("{} has no fundamental weights; give coordinates", d.name())))?;
    let normalized = text.replace('−', "-").replace(' ', "");
    let mut terms = Vec::new();
    let mut cur = String::new();
    for c in normalized.chars() {
        if (c == '+' || c == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    terms.push(cur);
    let mut out = Weight::zero(d.dim());
    for term in terms {
        let bad = || ConfigError::new(field, format!("cannot read {term:?} as a multiple of a fundamental weight"));
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        let pos = body.find(['ω', 'w']).ok_or_else(bad)?;
        let coeff = &body[..pos];
        let index = &body[pos + body[pos..].chars().next().unwrap().len_utf8()..];
        let c = if coeff.is_empty() { Q::from(1) } else { parse_num(coeff, field)? };
        let i = if index.is_empty() {
            if d.rank() != 1 {
                return Err(ConfigError::new(field, format!("{term:?} needs an index in rank {}", d.rank())));
            }
            1
        } else {
            index.parse::<usize>().map_err(|_| bad())?
        };
        if i == 0 || i > fw.len() {
            return Err(ConfigError::new(field, format!("ω{i} out of range 1..={}", fw.len())));
        }
        out += &fw[i - 1].scale(c * Q::from(sign));
    }
    Ok(out)
}

/// Accepts `2,1,3,2`, `2 1 3 2`, `s2s1s3s2`, `e` or an empty string.
/// Letters are 1-based.
pub fn parse_word(d: &RootDatum, spec: &WordSpec, field: &str) -> Result<WeylElement, ConfigError> {
    let letters: Vec<usize> = match spec {
        WordSpec::Letters(v) => v.clone(),
        WordSpec::Text(s) => {
            let s = s.trim();
            if s.is_empty() || s == "e" {
                Vec::new()
            } else if s.starts_with('s') {
                s.split('s')
                    .filter(|p| !p.is_empty())
                    .map(|p| p.trim().parse::<usize>().map_err(|_| ConfigError::new(field, format!("cannot read {s:?} as a word"))))
                    .collect::<Result<_, _>>()?
            } else {
                s.trim_start_matches('[')
                    .trim_end_matches(']')
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|p| !p.is_empty())
                    .map(|p| p.parse::<usize>().map_err(|_| ConfigError::new(field, format!("cannot read {p:?} as an index"))))
                    .collect::<Result<_, _>>()?
            }
        }
    };
    let mut zero_based = Vec::with_capacity(letters.len());
    for (k, &i) in letters.iter().enumerate() {
        if i == 0 || i > d.rank() {
            return Err(ConfigError::new(format!("{field}[{k}]"), format!("index {i} out of range 1..={}", d.rank())));
        }
        zero_based.push(i - 1);
    }
    WeylElement::from_word(d, &zero_based).map_err(|e| ConfigError::new(field, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> RootDatum {
        RootDatum::preset("A3").unwrap()
    }

    fn text(s: &str) -> WeightSpec {
        WeightSpec::Text(s.into())
    }

    #[test]
    fn weights() {
        let d = a3();
        assert_eq!(parse_weight(&d, &text("ω2"), "lambda").unwrap(), Weight::from_ints(&[0, 1, 0]));
        assert_eq!(parse_weight(&d, &text("w1+w3"), "lambda").unwrap(), Weight::from_ints(&[1, 0, 1]));
        assert_eq!(parse_weight(&d, &text("2ω1 − ω3"), "lambda").unwrap(), Weight::from_ints(&[2, 0, -1]));
        assert_eq!(parse_weight(&d, &text("[1, 0, 1]"), "lambda").unwrap(), Weight::from_ints(&[1, 0, 1]));
        assert_eq!(parse_weight(&d, &text("0"), "lambda").unwrap(), Weight::zero(3));
        let e = parse_weight(&d, &text("1,0"), "lambda").unwrap_err();
        assert_eq!(e.field, "lambda");
        assert!(parse_weight(&d, &text("ω"), "mu").is_err());
        assert!(parse_weight(&d, &text("ω7"), "mu").is_err());
        let a1 = RootDatum::preset("A1").unwrap();
        assert_eq!(parse_weight(&a1, &text("ω"), "mu").unwrap(), Weight::from_ints(&[1]));
        let gl = RootDatum::preset("GL3").unwrap();
        assert_eq!(parse_weight(&gl, &text("ω2"), "mu").unwrap(), Weight::from_ints(&[1, 1, 0]));
        let coords = WeightSpec::Coords(vec![Num::Int(1), Num::Text("1/2".into()), Num::Int(0)]);
        assert_eq!(parse_weight(&d, &coords, "lambda").unwrap().coords()[1], Q::new(1, 2));
    }

    #[test]
    fn words() {
        let d = a3();
        let w = parse_word(&d, &WordSpec::Text("2,1,3,2".into()), "w").unwrap();
        assert_eq!(w.length(), 4);
        assert_eq!(parse_word(&d, &WordSpec::Text("s2s1s3s2".into()), "w").unwrap(), w);
        assert_eq!(parse_word(&d, &WordSpec::Letters(vec![2, 1, 3, 2]), "w").unwrap(), w);
        assert!(parse_word(&d, &WordSpec::Text("".into()), "w").unwrap().is_identity());
        let e = parse_word(&d, &WordSpec::Text("1,4".into()), "w").unwrap_err();
        assert_eq!(e.field, "w[1]");
    }

    #[test]
    fn inline_datum() {
        let cfg = JobConfig::from_json(r#"{"datum": {"name": "B2", "cartan": [[2, -1], [-2, 2]]}, "lambda": [1, 1]}"#).unwrap();
        let job = Job::try_from(cfg).unwrap();
        assert_eq!(job.datum.rank(), 2);
        assert_eq!(job.lambda, Some(Weight::from_ints(&[1, 1])));
        let bad = JobConfig::from_json(r#"{"datum": {"cartan": [[2, 1], [-1, 2]]}}"#).unwrap();
        assert_eq!(Job::try_from(bad).unwrap_err().field, "datum");
        assert_eq!(JobConfig::from_json(r#"{"lamda": "ω1"}"#).unwrap_err().field, "config");
    }

    #[test]
    fn merge_prefers_flags() {
        let file = JobConfig { preset: Some("A2".into()), depth: Some(3), ..Default::default() };
        let flags = JobConfig { depth: Some(5), ..Default::default() };
        let m = file.merge(flags);
        assert_eq!((m.preset.as_deref(), m.depth), (Some("A2"), Some(5)));
    }
}
