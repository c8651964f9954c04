//! Serializable scenario reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::Subspace;
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Passed at every sample point; the underlying claim is not pointwise.
    SampledPass,
}

/// A datum attached to a check. Rationals are stored as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CheckValue {
    Bool(bool),
    Int(i64),
    Text(String),
    List(Vec<CheckValue>),
}

impl From<bool> for CheckValue {
    fn from(b: bool) -> Self {
        CheckValue::Bool(b)
    }
}

impl From<usize> for CheckValue {
    fn from(n: usize) -> Self {
        CheckValue::Int(n as i64)
    }
}

impl From<i64> for CheckValue {
    fn from(n: i64) -> Self {
        CheckValue::Int(n)
    }
}

impl From<&str> for CheckValue {
    fn from(s: &str) -> Self {
        CheckValue::Text(s.to_string())
    }
}

impl From<String> for CheckValue {
    fn from(s: String) -> Self {
        CheckValue::Text(s)
    }
}

impl<T: Into<CheckValue>> From<Vec<T>> for CheckValue {
    fn from(v: Vec<T>) -> Self {
        CheckValue::List(v.into_iter().map(Into::into).collect())
    }
}

impl CheckValue {
    pub fn scalar<F: Scalar>(x: &F) -> Self {
        CheckValue::Text(scalar::to_fraction_string(x))
    }

    pub fn vector<F: Scalar>(v: &[F]) -> Self {
        CheckValue::List(v.iter().map(Self::scalar).collect())
    }

    /// A subspace as the list of its reduced basis vectors.
    pub fn basis<F: Scalar>(s: &Subspace<F>) -> Self {
        CheckValue::List(s.basis().iter().map(|v| Self::vector(v)).collect())
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            CheckValue::Int(n) => Some(*n),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The identity or formula the check certifies.
    pub anchor: String,
    pub status: CheckStatus,
    pub data: BTreeMap<String, CheckValue>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }

    pub fn with(mut self, key: &str, value: impl Into<CheckValue>) -> Self {
        self.data.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub params: BTreeMap<String, CheckValue>,
    pub checks: Vec<Check>,
    pub all_passed: bool,
}

impl ScenarioReport {
    pub fn new(scenario: impl Into<String>) -> Self {
        ScenarioReport {
            scenario: scenario.into(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            all_passed: true,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<CheckValue>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Appends a check; `all_passed` is kept in sync.
    pub fn push(&mut self, check: Check) {
        self.all_passed &= check.passed();
        self.checks.push(check);
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn checks_named<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.name == name)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

/// Starts a check with status `Pass` or `Fail`.
pub fn check(name: &str, anchor: &str, ok: bool) -> Check {
    Check {
        name: name.to_string(),
        anchor: anchor.to_string(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        data: BTreeMap::new(),
    }
}

/// Starts a check whose success is evidence at sample points only.
pub fn sampled_check(name: &str, anchor: &str, ok: bool) -> Check {
    Check {
        status: if ok {
            CheckStatus::SampledPass
        } else {
            CheckStatus::Fail
        },
        ..check(name, anchor, ok)
    }
}
