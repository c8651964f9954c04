use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{Map, Value};
use symred_core::lie::CartanType;
use symred_core::scalar::parse_fraction;
use symred_core::Rational;
use thiserror::Error;

use crate::registry::{self, ScenarioSpec};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl ConfigError {
    pub(crate) fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError::Field {
            field: field.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    scenarios: Vec<RawEntry>,
    #[serde(default)]
    seed: u64,
    #[serde(default = "default_sample_count")]
    sample_count: usize,
    #[serde(default)]
    parallel: bool,
    #[serde(default)]
    output_path: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    name: String,
    #[serde(default)]
    params: Map<String, Value>,
}

fn default_sample_count() -> usize {
    3
}

/// A validated scenario request.
#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioEntry {
    pub spec: ScenarioSpec,
    pub expect: BTreeMap<String, i64>,
}

impl ScenarioEntry {
    pub fn name(&self) -> &'static str {
        self.spec.name()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub scenarios: Vec<ScenarioEntry>,
    pub seed: u64,
    pub sample_count: usize,
    pub parallel: bool,
    pub output_path: Option<String>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let raw: RawConfig = serde_json::from_str(text).map_err(|e| ConfigError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if raw.sample_count == 0 {
            return Err(ConfigError::field("sample_count", "must be at least 1"));
        }
        let scenarios = raw
            .scenarios
            .into_iter()
            .enumerate()
            .map(|(i, e)| parse_entry(i, e))
            .collect::<Result<_, _>>()?;
        Ok(RunConfig {
            scenarios,
            seed: raw.seed,
            sample_count: raw.sample_count,
            parallel: raw.parallel,
            output_path: raw.output_path,
        })
    }

    pub fn from_path(path: &str) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::from_json(&text)
    }
}

fn parse_entry(index: usize, entry: RawEntry) -> Result<ScenarioEntry, ConfigError> {
    let prefix = format!("scenarios[{index}]");
    let mut params = Params {
        prefix: format!("{prefix}.params"),
        map: entry.params,
    };
    if registry::info(&entry.name).is_none() {
        return Err(ConfigError::field(
            format!("{prefix}.name"),
            format!("unknown scenario \"{}\"", entry.name),
        ));
    }
    let expect = params.expect()?;
    let spec = registry::parse_spec(&entry.name, &mut params)?;
    params.finish()?;
    Ok(ScenarioEntry { spec, expect })
}

/// Scenario parameters being consumed; leftovers are reported as unknown.
pub struct Params {
    prefix: String,
    map: Map<String, Value>,
}

impl Params {
    fn path(&self, key: &str) -> String {
        format!("{}.{key}", self.prefix)
    }

    fn expect(&mut self) -> Result<BTreeMap<String, i64>, ConfigError> {
        let Some(v) = self.map.remove("expect") else {
            return Ok(BTreeMap::new());
        };
        let field = self.path("expect");
        let obj = v
            .as_object()
            .ok_or_else(|| ConfigError::field(&field, "expected an object of integers"))?;
        obj.iter()
            .map(|(k, v)| {
                v.as_i64()
                    .map(|n| (k.clone(), n))
                    .ok_or_else(|| ConfigError::field(format!("{field}.{k}"), "expected an integer"))
            })
            .collect()
    }

    pub fn usize_in(
        &mut self,
        key: &str,
        default: usize,
        range: std::ops::RangeInclusive<usize>,
    ) -> Result<usize, ConfigError> {
        let Some(v) = self.map.remove(key) else {
            return Ok(default);
        };
        let n = v
            .as_u64()
            .ok_or_else(|| ConfigError::field(self.path(key), "expected a non-negative integer"))?
            as usize;
        if !range.contains(&n) {
            return Err(ConfigError::field(
                self.path(key),
                format!("must lie in {}..={}", range.start(), range.end()),
            ));
        }
        Ok(n)
    }

    pub fn cartan_type(&mut self, key: &str, default: CartanType) -> Result<CartanType, ConfigError> {
        let Some(v) = self.map.remove(key) else {
            return Ok(default);
        };
        v.as_str()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| ConfigError::field(self.path(key), "expected one of A, B, C, D, G2"))
    }

    pub fn rational(&mut self, key: &str) -> Result<Option<Rational>, ConfigError> {
        let Some(v) = self.map.remove(key) else {
            return Ok(None);
        };
        parse_rational(&v)
            .map(Some)
            .ok_or_else(|| ConfigError::field(self.path(key), "expected an integer or \"p/q\""))
    }

    pub fn rational_rows(&mut self, key: &str) -> Result<Option<Vec<Vec<Rational>>>, ConfigError> {
        let Some(v) = self.map.remove(key) else {
            return Ok(None);
        };
        let field = self.path(key);
        let rows = v
            .as_array()
            .ok_or_else(|| ConfigError::field(&field, "expected an array of vectors"))?;
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                row.as_array()
                    .and_then(|xs| xs.iter().map(parse_rational).collect::<Option<Vec<_>>>())
                    .ok_or_else(|| {
                        ConfigError::field(format!("{field}[{i}]"), "expected an array of rationals")
                    })
            })
            .collect::<Result<_, _>>()
            .map(Some)
    }

    pub fn field_error(&self, key: &str, message: impl Into<String>) -> ConfigError {
        ConfigError::field(self.path(key), message)
    }

    fn finish(self) -> Result<(), ConfigError> {
        match self.map.keys().next() {
            Some(k) => Err(ConfigError::field(self.path(k), "unknown parameter")),
            None => Ok(()),
        }
    }
}

fn parse_rational(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(i.into())),
        Value::String(s) => parse_fraction(s),
        _ => None,
    }
}
