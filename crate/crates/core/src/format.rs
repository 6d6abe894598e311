//! The line-oriented model file format and numeric output formatting.
//!
//! ```text
//! atoms A B C
//! world ~A  B  C  pi=1.0 p=0.5
//! world  A  B  C  pi=0.6 p=0.08
//! # unlisted worlds have pi=0 (impossible)
//! ```
//!
//! A file with no `p=` fields describes a possibility model only. Otherwise
//! every world with `pi > 0` needs a positive `p`, and worlds with `pi = 0`
//! must not carry one.

use std::fmt::Write as _;

use crate::cpm::CpmModel;
use crate::error::{Error, Result};
use crate::logic::{Vocabulary, World};
use crate::possibility::PossibilityModel;

#[derive(Debug, Clone, PartialEq)]
pub enum LoadedModel {
    Cpm(CpmModel),
    Possibility(PossibilityModel),
}

impl LoadedModel {
    pub fn base(&self) -> &PossibilityModel {
        match self {
            LoadedModel::Cpm(m) => m.base(),
            LoadedModel::Possibility(m) => m,
        }
    }

    pub fn vocab(&self) -> &Vocabulary {
        self.base().vocab()
    }

    pub fn as_cpm(&self) -> Option<&CpmModel> {
        match self {
            LoadedModel::Cpm(m) => Some(m),
            LoadedModel::Possibility(_) => None,
        }
    }
}

struct WorldRecord {
    line: usize,
    world: World,
    pi: f64,
    p: Option<f64>,
}

/// Parses model-file text with the default atom limit.
pub fn parse_model(text: &str) -> Result<LoadedModel> {
    parse_model_with_limit(text, Vocabulary::DEFAULT_LIMIT)
}

pub fn parse_model_with_limit(text: &str, atom_limit: usize) -> Result<LoadedModel> {
    let mut vocab: Option<Vocabulary> = None;
    let mut records: Vec<WorldRecord> = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let parse_err = |reason: String| Error::Parse { line, reason };
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("atoms") => {
                if vocab.is_some() {
                    return Err(parse_err("`atoms` declared twice".into()));
                }
                let v = Vocabulary::with_limit(tokens, atom_limit).map_err(|e| parse_err(e.to_string()))?;
                vocab = Some(v);
            }
            Some("world") => {
                let v = vocab
                    .as_ref()
                    .ok_or_else(|| parse_err("`world` before `atoms`".into()))?;
                let mut literals = Vec::new();
                let mut pi = None;
                let mut p = None;
                for tok in tokens {
                    if let Some(val) = tok.strip_prefix("pi=") {
                        if pi.is_some() {
                            return Err(parse_err("`pi` given twice".into()));
                        }
                        pi = Some(parse_decimal(val).ok_or_else(|| parse_err(format!("invalid number `{val}`")))?);
                    } else if let Some(val) = tok.strip_prefix("p=") {
                        if p.is_some() {
                            return Err(parse_err("`p` given twice".into()));
                        }
                        p = Some(parse_decimal(val).ok_or_else(|| parse_err(format!("invalid number `{val}`")))?);
                    } else if pi.is_some() || p.is_some() {
                        return Err(parse_err(format!("unexpected `{tok}` after the world's fields")));
                    } else {
                        literals.push(tok);
                    }
                }
                let world = v
                    .parse_world(&literals.join(" "))
                    .map_err(|e| parse_err(e.to_string()))?;
                let pi = pi.ok_or_else(|| parse_err("missing `pi=`".into()))?;
                records.push(WorldRecord { line, world, pi, p });
            }
            Some(other) => return Err(parse_err(format!("unknown directive `{other}`"))),
            None => {}
        }
    }

    let vocab = vocab.ok_or(Error::Parse {
        line: last_line.max(1),
        reason: "missing `atoms` declaration".into(),
    })?;
    validate(vocab, records, last_line)
}

fn parse_decimal(text: &str) -> Option<f64> {
    let ok = !text.is_empty()
        && text.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '-' | '+'));
    if !ok {
        return None;
    }
    text.parse::<f64>().ok().filter(|v| v.is_finite())
}

fn validate(vocab: Vocabulary, records: Vec<WorldRecord>, last_line: usize) -> Result<LoadedModel> {
    let verr = |line: usize, reason: String| Error::Validation { line, reason };
    let mut seen = vocab.no_worlds();
    for r in &records {
        if seen.contains(r.world) {
            return Err(verr(r.line, format!("duplicate world `{}`", vocab.world_label(r.world))));
        }
        seen.insert(r.world);
        if !(0.0..=1.0).contains(&r.pi) {
            return Err(verr(r.line, format!("pi={} is outside [0, 1]", r.pi)));
        }
        match r.p {
            Some(p) if r.pi == 0.0 => {
                return Err(verr(r.line, format!("p={p} given for a world with pi=0")));
            }
            Some(p) if !(p > 0.0) => {
                return Err(verr(r.line, format!("p={p} is not positive")));
            }
            _ => {}
        }
    }
    if !records.iter().any(|r| r.pi == 1.0) {
        return Err(verr(last_line, "no world with pi=1".into()));
    }

    let has_weights = records.iter().any(|r| r.p.is_some());
    let base = PossibilityModel::from_entries(vocab.clone(), records.iter().map(|r| (r.world, r.pi)))
        .map_err(|e| verr(last_line, e.to_string()))?;
    if !has_weights {
        return Ok(LoadedModel::Possibility(base));
    }
    let mut weights = vec![0.0; vocab.world_count()];
    for r in &records {
        match r.p {
            Some(p) => weights[r.world.index()] = p,
            None if r.pi > 0.0 => {
                return Err(verr(r.line, format!("world `{}` has pi>0 but no p", vocab.world_label(r.world))));
            }
            None => {}
        }
    }
    let model = CpmModel::new(base, weights).map_err(|e| verr(last_line, e.to_string()))?;
    Ok(LoadedModel::Cpm(model))
}

fn world_columns(vocab: &Vocabulary, w: World) -> String {
    vocab
        .atoms()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let lit = if w.value(i) { a.clone() } else { format!("~{a}") };
            format!("{lit:>width$}", width = a.len() + 1)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn dump(base: &PossibilityModel, weights: Option<&[f64]>) -> String {
    let vocab = base.vocab();
    let mut out = format!("atoms {}\n", vocab.atoms().join(" "));
    for w in base.possible_worlds() {
        let _ = write!(out, "world {}  pi={}", world_columns(vocab, w), base.degree(w));
        if let Some(ws) = weights {
            let _ = write!(out, " p={}", ws[w.index()]);
        }
        out.push('\n');
    }
    out
}

/// Canonical model file: possible worlds in index order, shortest round-trip
/// decimal for every number.
pub fn dump_cpm(model: &CpmModel) -> String {
    dump(model.base(), Some(model.weights()))
}

pub fn dump_possibility(model: &PossibilityModel) -> String {
    dump(model, None)
}

pub fn dump_model(model: &LoadedModel) -> String {
    match model {
        LoadedModel::Cpm(m) => dump_cpm(m),
        LoadedModel::Possibility(m) => dump_possibility(m),
    }
}

/// Formats `x` with at most 10 significant digits, trailing zeros trimmed.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fig1, FIG1_MODEL};

    #[test]
    fn loads_reference_model() {
        let loaded = parse_model(FIG1_MODEL).unwrap();
        assert_eq!(loaded, LoadedModel::Cpm(fig1()));
    }

    #[test]
    fn round_trip() {
        let loaded = parse_model(FIG1_MODEL).unwrap();
        let text = dump_model(&loaded);
        assert_eq!(parse_model(&text).unwrap(), loaded);
        assert!(text.starts_with("atoms A B C\nworld ~A  B ~C  pi=1 p=0.3\nworld  A  B ~C  pi=0.6 p=0.04\n"), "{text}");
    }

    #[test]
    fn possibility_only_file() {
        let loaded = parse_model("atoms A B\nworld A B pi=1\nworld ~A B pi=0.3\n").unwrap();
        match loaded {
            LoadedModel::Possibility(m) => assert_eq!(m.possible_worlds().count(), 2),
            other => panic!("expected possibility model, got {other:?}"),
        }
    }

    #[test]
    fn validation_errors() {
        let no_top = "atoms A\nworld A pi=0.9 p=1\n";
        assert_eq!(
            parse_model(no_top),
            Err(Error::Validation {
                line: 2,
                reason: "no world with pi=1".into()
            })
        );
        let dup = "atoms A B C\nworld A B C pi=1 p=1\nworld A B C pi=0.5 p=1\n";
        assert!(matches!(parse_model(dup), Err(Error::Validation { line: 3, ref reason }) if reason.contains("duplicate")));
        let mixed = "atoms A\nworld A pi=1 p=0.5\nworld ~A pi=0.5\n";
        assert!(matches!(parse_model(mixed), Err(Error::Validation { line: 3, .. })));
        let nonpos = "atoms A\nworld A pi=1 p=0\n";
        assert!(matches!(parse_model(nonpos), Err(Error::Validation { line: 2, .. })));
        let range = "atoms A\nworld A pi=1.5 p=1\n";
        assert!(matches!(parse_model(range), Err(Error::Validation { line: 2, .. })));
        let p_on_zero = "atoms A\nworld A pi=1 p=1\nworld ~A pi=0 p=1\n";
        assert!(matches!(parse_model(p_on_zero), Err(Error::Validation { line: 3, .. })));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_model("world A pi=1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_model("atoms A\nworld A pi=x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_model("atoms A\nworld A"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_model("atoms A\nworld A B pi=1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_model("atoms A\nfoo"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_model("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_model("atoms A\nworld A pi=nan"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.6), "0.6");
        assert_eq!(format_number(2.0 / 3.0), "0.6666666667");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(0.625), "0.625");
        assert_eq!(format_number(1.0 - 0.6), "0.4");
        assert_eq!(format_number(123.456), "123.456");
        assert_eq!(format_number(1e-12), "0.000000000001");
    }
}
