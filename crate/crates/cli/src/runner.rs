use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use symred_core::report::{check, CheckStatus, ScenarioReport};
use symred_core::scenarios::ScenarioOptions;

use crate::config::{RunConfig, ScenarioEntry};

/// Check counts across all scenarios.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub sampled: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub seed: u64,
    pub scenarios: Vec<ScenarioReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.scenarios.iter().all(|s| s.all_passed)
    }

    /// `0` when every scenario passed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per scenario, plus one per failed check.
    pub fn human_summary(&self) -> String {
        let mut out = String::new();
        for s in &self.scenarios {
            let verdict = if s.all_passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{verdict} {} ({} checks)\n",
                s.scenario,
                s.checks.len()
            ));
            for c in s.checks.iter().filter(|c| c.status == CheckStatus::Fail) {
                out.push_str(&format!("  failed: {} [{}]\n", c.name, c.anchor));
            }
        }
        out.push_str(&format!(
            "passed {}, sampled {}, failed {}\n",
            self.summary.passed, self.summary.sampled, self.summary.failed
        ));
        out
    }
}

fn run_entry(entry: &ScenarioEntry, config: &RunConfig) -> ScenarioReport {
    let opts = ScenarioOptions {
        seed: config.seed,
        sample_count: config.sample_count,
        expect: entry.expect.clone(),
    };
    entry.spec.run(&opts).unwrap_or_else(|e| {
        let mut report = ScenarioReport::new(entry.name());
        report.push(check("execution", "scenario ran to completion", false).with("error", e.to_string()));
        report
    })
}

/// Runs every configured scenario. Reports are ordered by scenario name and
/// then by position in the config, whether or not execution was parallel.
pub fn run(config: &RunConfig) -> RunReport {
    let indexed: Vec<(usize, &ScenarioEntry)> = config.scenarios.iter().enumerate().collect();
    let mut reports: Vec<(usize, ScenarioReport)> = if config.parallel {
        indexed
            .par_iter()
            .map(|(i, e)| (*i, run_entry(e, config)))
            .collect()
    } else {
        indexed.iter().map(|(i, e)| (*i, run_entry(e, config))).collect()
    };
    reports.sort_by(|a, b| a.1.scenario.cmp(&b.1.scenario).then(a.0.cmp(&b.0)));
    let scenarios: Vec<ScenarioReport> = reports.into_iter().map(|(_, r)| r).collect();
    let summary = scenarios.iter().fold(Summary::default(), |acc, s| Summary {
        passed: acc.passed + s.count(CheckStatus::Pass),
        failed: acc.failed + s.count(CheckStatus::Fail),
        sampled: acc.sampled + s.count(CheckStatus::SampledPass),
    });
    RunReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: config.seed,
        scenarios,
        summary,
    }
}
