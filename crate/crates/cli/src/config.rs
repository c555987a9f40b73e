//! Flat `key = value` run configuration.
//!
//! One pair per line, `#` starts a comment, blank lines are skipped.
//! Unknown and duplicate keys are errors; missing keys take the documented
//! defaults. Every numeric constraint of the domain types is re-checked
//! here so a bad file fails with the offending key and line instead of
//! deep inside the solver.

use std::collections::HashMap;
use std::fmt;

use aquiflow_core::{AquiferParams, FractionalOrder, Grid, InitialProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub alpha: f64,
    pub transmissivity: f64,
    pub storativity: f64,
    pub r_min: f64,
    pub r_max: f64,
    pub n_cells: usize,
    pub n_steps: usize,
    pub t_max: f64,
    pub initial_profile: InitialProfile,
    pub output_path: String,
    pub output_format: OutputFormat,
}

/// Shipped defaults: a confined aquifer on [1 m, 100 m] with a centered
/// Gaussian drawdown, 50 cells, 100 steps over 0.05 s.
impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            alpha: 0.5,
            transmissivity: 1.0,
            storativity: 0.01,
            r_min: 1.0,
            r_max: 100.0,
            n_cells: 50,
            n_steps: 100,
            t_max: 0.05,
            initial_profile: InitialProfile::Gaussian {
                center: 50.5,
                width: 19.8,
                amplitude: 1.0,
            },
            output_path: "aquiflow_out.csv".into(),
            output_format: OutputFormat::Csv,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub key: String,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(n) => write!(f, "config error at line {n}, key `{}`: {}", self.key, self.message),
            None => write!(f, "config error, key `{}`: {}", self.key, self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

const KNOWN_KEYS: &[&str] = &[
    "alpha",
    "transmissivity",
    "storativity",
    "r_min",
    "r_max",
    "n_cells",
    "n_steps",
    "t_max",
    "initial_profile",
    "output_path",
    "output_format",
];

struct Raw {
    entries: HashMap<&'static str, (usize, String)>,
}

impl Raw {
    fn line_of(&self, key: &str) -> Option<usize> {
        self.entries.get(key).map(|(n, _)| *n)
    }

    fn err(&self, key: &str, message: impl Into<String>) -> ConfigError {
        ConfigError {
            line: self.line_of(key),
            key: key.into(),
            message: message.into(),
        }
    }

    fn f64_or(&self, key: &str, default: f64) -> Result<f64, ConfigError> {
        match self.entries.get(key) {
            None => Ok(default),
            Some((_, v)) => v
                .parse::<f64>()
                .map_err(|_| self.err(key, format!("`{v}` is not a number"))),
        }
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize, ConfigError> {
        match self.entries.get(key) {
            None => Ok(default),
            Some((_, v)) => v
                .parse::<usize>()
                .map_err(|_| self.err(key, format!("`{v}` is not a non-negative integer"))),
        }
    }
}

fn parse_profile(raw: &Raw, text: &str) -> Result<InitialProfile, ConfigError> {
    let key = "initial_profile";
    let bad = |msg: String| raw.err(key, msg);
    let text = text.trim();
    if text == "zero" {
        return Ok(InitialProfile::Zero);
    }
    let (name, rest) = text
        .split_once('(')
        .ok_or_else(|| bad(format!("`{text}` is not gaussian(..), step(..) or zero")))?;
    let args = rest
        .strip_suffix(')')
        .ok_or_else(|| bad(format!("`{text}` is missing the closing parenthesis")))?;
    let nums: Vec<f64> = args
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad(format!("`{args}` has a non-numeric argument")))?;
    if nums.iter().any(|x| !x.is_finite()) {
        return Err(bad("profile arguments must be finite".into()));
    }
    match (name.trim(), nums.as_slice()) {
        ("gaussian", &[center, width, amplitude]) => {
            if width <= 0.0 {
                return Err(bad(format!("gaussian width must be > 0, got {width}")));
            }
            Ok(InitialProfile::Gaussian {
                center,
                width,
                amplitude,
            })
        }
        ("step", &[edge, amplitude]) => Ok(InitialProfile::Step { edge, amplitude }),
        ("gaussian", _) => Err(bad("gaussian takes exactly (center, width, amplitude)".into())),
        ("step", _) => Err(bad("step takes exactly (edge, amplitude)".into())),
        (other, _) => Err(bad(format!("unknown profile `{other}`"))),
    }
}

/// Parse a configuration text. Missing keys take the defaults of
/// [`RunConfig::default`]; the empty string yields exactly those defaults.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut entries: HashMap<&'static str, (usize, String)> = HashMap::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(ConfigError {
                line: Some(line_no),
                key: line.split_whitespace().next().unwrap_or("").into(),
                message: "expected `key = value`".into(),
            });
        };
        let (key, value) = (k.trim(), v.trim());
        let Some(&known) = KNOWN_KEYS.iter().find(|&&kk| kk == key) else {
            return Err(ConfigError {
                line: Some(line_no),
                key: key.into(),
                message: format!(
                    "unknown key (known keys: {})",
                    KNOWN_KEYS.join(", ")
                ),
            });
        };
        if value.is_empty() {
            return Err(ConfigError {
                line: Some(line_no),
                key: key.into(),
                message: "empty value".into(),
            });
        }
        if entries.insert(known, (line_no, value.to_string())).is_some() {
            return Err(ConfigError {
                line: Some(line_no),
                key: key.into(),
                message: "duplicate key".into(),
            });
        }
    }
    let raw = Raw { entries };
    let d = RunConfig::default();

    let alpha = raw.f64_or("alpha", d.alpha)?;
    FractionalOrder::new(alpha)
        .map_err(|e| raw.err("alpha", format!("{e} (alpha must lie in the open interval (0, 1))")))?;

    let transmissivity = raw.f64_or("transmissivity", d.transmissivity)?;
    let storativity = raw.f64_or("storativity", d.storativity)?;
    if !(transmissivity.is_finite() && transmissivity > 0.0) {
        return Err(raw.err("transmissivity", format!("must be finite and > 0, got {transmissivity}")));
    }
    if !(storativity.is_finite() && storativity > 0.0) {
        return Err(raw.err("storativity", format!("must be finite and > 0, got {storativity}")));
    }
    AquiferParams::new(transmissivity, storativity)
        .map_err(|e| raw.err("transmissivity", e.to_string()))?;

    let r_min = raw.f64_or("r_min", d.r_min)?;
    let r_max = raw.f64_or("r_max", d.r_max)?;
    let t_max = raw.f64_or("t_max", d.t_max)?;
    let n_cells = raw.usize_or("n_cells", d.n_cells)?;
    let n_steps = raw.usize_or("n_steps", d.n_steps)?;
    if !(r_min.is_finite() && r_min > 0.0) {
        return Err(raw.err("r_min", format!("must be finite and > 0, got {r_min}")));
    }
    if !(r_max.is_finite() && r_max > r_min) {
        return Err(raw.err("r_max", format!("must be finite and > r_min = {r_min}, got {r_max}")));
    }
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(raw.err("t_max", format!("must be finite and > 0, got {t_max}")));
    }
    if n_cells < 3 {
        return Err(raw.err("n_cells", format!("needs at least 3 cells, got {n_cells}")));
    }
    if n_steps < 1 {
        return Err(raw.err("n_steps", format!("needs at least 1 step, got {n_steps}")));
    }
    Grid::new(r_min, r_max, n_cells, t_max, n_steps).map_err(|e| raw.err("r_min", e.to_string()))?;

    let initial_profile = match raw.entries.get("initial_profile") {
        None => d.initial_profile,
        Some((_, v)) => parse_profile(&raw, v)?,
    };

    let output_path = raw
        .entries
        .get("output_path")
        .map(|(_, v)| v.clone())
        .unwrap_or(d.output_path);
    let output_format = match raw.entries.get("output_format") {
        None => d.output_format,
        Some((_, v)) => match v.as_str() {
            "csv" => OutputFormat::Csv,
            "json" => OutputFormat::Json,
            other => {
                return Err(raw.err("output_format", format!("`{other}` is neither csv nor json")))
            }
        },
    };

    Ok(RunConfig {
        alpha,
        transmissivity,
        storativity,
        r_min,
        r_max,
        n_cells,
        n_steps,
        t_max,
        initial_profile,
        output_path,
        output_format,
    })
}

impl RunConfig {
    pub fn order(&self) -> FractionalOrder {
        FractionalOrder::new(self.alpha).expect("validated at parse time")
    }

    pub fn params(&self) -> AquiferParams {
        AquiferParams::new(self.transmissivity, self.storativity).expect("validated at parse time")
    }

    pub fn grid(&self) -> Grid {
        Grid::new(self.r_min, self.r_max, self.n_cells, self.t_max, self.n_steps)
            .expect("validated at parse time")
    }
}
