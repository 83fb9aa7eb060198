//! Resolving `builtin:` names and JSON files into library values.

use operad_forge::rota_baxter::{samples, Algebra, Matrix, Module, SearchSpace};
use operad_forge::{catalog, json, rational, Configuration, Error, Presentation, Rational, Result};
use std::path::Path;

fn read(path: &str) -> Result<String> {
    let meta = std::fs::metadata(path)?;
    if meta.len() > json::MAX_INPUT_BYTES as u64 {
        return Err(Error::TooLarge(format!("{path} is larger than {} bytes", json::MAX_INPUT_BYTES)));
    }
    Ok(std::fs::read_to_string(path)?)
}

pub fn presentation(arg: &str) -> Result<Presentation> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return catalog::builtin(name);
    }
    if !Path::new(arg).exists() && catalog::builtin(arg).is_ok() {
        return Err(Error::Precondition(format!("no file `{arg}`; use builtin:{arg} for the catalog entry")));
    }
    json::presentation_from_str(&read(arg)?)
}

/// A selector such as `arity` or `capped:3`, or a JSON file.
pub fn config(arg: &str) -> Result<Configuration> {
    if !arg.starts_with("builtin:") && Path::new(arg).is_file() {
        return json::config_from_str(&read(arg)?);
    }
    json::parse_config_selector(arg)
}

/// `builtin:upper-triangular`, `builtin:complement-bracket[:s1,s2,s3,s4]`
/// or a JSON file.
pub fn algebra(arg: &str) -> Result<Algebra> {
    match arg.strip_prefix("builtin:") {
        Some("upper-triangular") => Ok(samples::upper_triangular()),
        Some(rest) if rest == "complement-bracket" || rest.starts_with("complement-bracket:") => {
            let mut signs = [1i64; 4];
            if let Some(list) = rest.strip_prefix("complement-bracket:") {
                let parsed: Vec<i64> = list
                    .split(',')
                    .map(|s| s.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad sign `{s}`"))))
                    .collect::<Result<_>>()?;
                if parsed.len() != 4 || parsed.iter().any(|s| s.abs() > 1) {
                    return Err(Error::Parse("complement-bracket takes four signs in {-1,0,1}".into()));
                }
                signs.copy_from_slice(&parsed);
            }
            Ok(samples::ternary_complement_bracket(signs))
        }
        Some(other) => Err(Error::Precondition(format!(
            "unknown builtin algebra `{other}` (upper-triangular, complement-bracket)"
        ))),
        None => json::algebra_from_str(&read(arg)?),
    }
}

pub fn operator(arg: &str) -> Result<Matrix> {
    match arg.strip_prefix("builtin:") {
        Some("upper-triangular-rb") => Ok(samples::upper_triangular_rb_operator()),
        Some(other) => Err(Error::Precondition(format!("unknown builtin operator `{other}` (upper-triangular-rb)"))),
        None => json::operator_from_str(&read(arg)?),
    }
}

pub fn module(arg: &str) -> Result<Module> {
    json::module_from_str(&read(arg)?)
}

pub fn weight(arg: &str) -> Result<Rational> {
    rational::parse(arg)
}

pub fn entries(arg: &str) -> Result<Vec<Rational>> {
    let v: Vec<Rational> = arg.split(',').map(|s| rational::parse(s.trim())).collect::<Result<_>>()?;
    let mut dedup = v.clone();
    dedup.sort();
    dedup.dedup();
    if dedup.len() != v.len() {
        return Err(Error::Parse(format!("repeated value in entries `{arg}`")));
    }
    Ok(v)
}

/// `all`, `off-diagonal`, or `i,j;i,j;...` with zero-based indices.
pub fn positions(arg: &str, dim: usize) -> Result<Option<Vec<(usize, usize)>>> {
    match arg {
        "all" => Ok(None),
        "off-diagonal" => Ok(Some(SearchSpace::off_diagonal(dim))),
        _ => arg
            .split(';')
            .map(|pair| {
                let (i, j) = pair.split_once(',').ok_or_else(|| Error::Parse(format!("bad position `{pair}`")))?;
                let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index `{s}`")));
                Ok((parse(i)?, parse(j)?))
            })
            .collect::<Result<Vec<_>>>()
            .map(Some),
    }
}
