//! Effective run settings: flags override a `key=value` config file, which
//! overrides the defaults.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use qsp_core::algebra::CalculusType;
use qsp_core::coeffs::Mode;
use qsp_core::exprio::ReportFormat;
use qsp_core::Rational;

pub const DEFAULT_BOUND: i32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub mode: Mode,
    pub assignment: BTreeMap<String, Rational>,
    /// Always `>= 1`.
    pub bound: i32,
    pub format: ReportFormat,
}

/// Values given on the command line, each optional.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub mode: Option<Mode>,
    pub params: Vec<String>,
    pub bound: Option<i32>,
    pub format: Option<ReportFormat>,
}

pub fn parse_mode(s: &str) -> Result<Mode, String> {
    match s {
        "I" => Ok(Mode::TypeI),
        "II" => Ok(Mode::TypeII),
        "III" => Ok(Mode::TypeIII),
        _ => Err(format!("unknown calculus type `{s}` (expected I, II or III)")),
    }
}

pub fn parse_format(s: &str) -> Result<ReportFormat, String> {
    match s {
        "text" => Ok(ReportFormat::Text),
        "json" => Ok(ReportFormat::Json),
        _ => Err(format!("unknown format `{s}` (expected text or json)")),
    }
}

fn parse_bound(s: &str) -> Result<i32, String> {
    s.parse().map_err(|_| format!("bound `{s}` is not an integer"))
}

/// `NAME=RAT`, e.g. `r=1` or `q=3/2`.
fn parse_param(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("parameter `{s}` is not of the form NAME=RAT"))?;
    let value = Rational::from_str(value.trim())
        .map_err(|_| format!("parameter value `{value}` is not an exact rational"))?;
    Ok((name.trim().to_owned(), value))
}

/// Lines `key=value`; `#` starts a comment. `param` may repeat.
fn read_config(path: &Path) -> Result<Overrides, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut out = Overrides::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), i + 1))?;
        let value = value.trim();
        match key.trim() {
            "type" => out.mode = Some(parse_mode(value)?),
            "param" => out.params.push(value.to_owned()),
            "bound" => out.bound = Some(parse_bound(value)?),
            "format" => out.format = Some(parse_format(value)?),
            other => return Err(format!("{}:{}: unknown key `{other}`", path.display(), i + 1)),
        }
    }
    Ok(out)
}

pub fn resolve(flags: Overrides, config: Option<&Path>) -> Result<Settings, String> {
    let file = match config {
        Some(p) => read_config(p)?,
        None => Overrides::default(),
    };
    let mode = flags.mode.or(file.mode).unwrap_or(Mode::TypeII);
    let bound = flags.bound.or(file.bound).unwrap_or(DEFAULT_BOUND);
    if bound < 1 {
        return Err(format!("bound must be at least 1, got {bound}"));
    }
    let format = flags.format.or(file.format).unwrap_or(ReportFormat::Text);
    let names = CalculusType::for_mode(mode).names().to_vec();
    let mut assignment = BTreeMap::new();
    for p in file.params.iter().chain(&flags.params) {
        let (name, value) = parse_param(p)?;
        if !names.contains(&name) {
            return Err(format!(
                "type {} has no parameter `{name}` (available: {})",
                mode.label(),
                names.join(", ")
            ));
        }
        assignment.insert(name, value);
    }
    Ok(Settings {
        mode,
        assignment,
        bound,
        format,
    })
}
