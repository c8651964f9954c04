use std::fmt::Write;

use symred_core::lie::{CartanType, SUPPORTED_TYPES};
use symred_core::report::ScenarioReport;
use symred_core::scenarios::{self, ScenarioOptions};
use symred_core::{Rational, Result};

use crate::config::{ConfigError, Params};

pub struct ScenarioInfo {
    pub name: &'static str,
    pub anchor: &'static str,
    /// `(parameter, description)` pairs.
    pub params: &'static [(&'static str, &'static str)],
}

const EXPECT: (&str, &str) = ("expect", "object: overrides for expected integer values");

/// Registered scenarios, sorted by name.
pub const REGISTRY: [ScenarioInfo; 6] = [
    ScenarioInfo {
        name: "c4_prepoisson_remark",
        anchor: "pre-Poisson parabola x² = u ≠ 0, y = 0 in C⁴",
        params: &[EXPECT],
    },
    ScenarioInfo {
        name: "casimir_sphere",
        anchor: "Lie-Poisson sphere, (T_ξS)° = span ξ^♯",
        params: &[
            ("cartan_type", "string: A | B | C | D | G2 (default A)"),
            ("rank", "integer 1..=4 (default 1)"),
            ("level", "rational, nonzero (default ⟨h₁, h₁⟩)"),
            EXPECT,
        ],
    },
    ScenarioInfo {
        name: "decomposition_class_sl3",
        anchor: "decomposition class g°_irr of sl(3), dim 2 dim G − 6",
        params: &[EXPECT],
    },
    ScenarioInfo {
        name: "implosion_faces_A2",
        anchor: "symplectic implosion, [K_S, K_S] × S over chamber faces",
        params: &[EXPECT],
    },
    ScenarioInfo {
        name: "polyhedral_face_torus",
        anchor: "symplectic cutting, Lie(T_F) = (T_ξF)°",
        params: &[
            ("dim_t", "integer 1..=8 (default 2)"),
            ("directions", "array of rational vectors spanning the face (default [[1,-1]])"),
            EXPECT,
        ],
    },
    ScenarioInfo {
        name: "slodowy_moore_tachikawa",
        anchor: "open Moore-Tachikawa varieties from Δ_nS",
        params: &[
            ("cartan_type", "string: A (default A)"),
            ("rank", "integer 1..=3 (default 1)"),
            ("n", "integer 1..=4 (default 2)"),
            EXPECT,
        ],
    },
];

pub fn info(name: &str) -> Option<&'static ScenarioInfo> {
    REGISTRY.iter().find(|i| i.name == name)
}

/// Deterministic listing of the registry with parameter schemas.
pub fn list_scenarios() -> String {
    let mut out = String::new();
    for info in &REGISTRY {
        let _ = writeln!(out, "{}", info.name);
        let _ = writeln!(out, "  anchor: {}", info.anchor);
        for (p, d) in info.params {
            let _ = writeln!(out, "  {p}: {d}");
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScenarioSpec {
    C4PrePoisson,
    CasimirSphere {
        cartan_type: CartanType,
        rank: usize,
        level: Option<Rational>,
    },
    DecompositionClass,
    ImplosionFaces,
    PolyhedralFace {
        dim_t: usize,
        directions: Vec<Vec<Rational>>,
    },
    MooreTachikawa {
        cartan_type: CartanType,
        rank: usize,
        n: usize,
    },
}

impl ScenarioSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ScenarioSpec::C4PrePoisson => "c4_prepoisson_remark",
            ScenarioSpec::CasimirSphere { .. } => "casimir_sphere",
            ScenarioSpec::DecompositionClass => "decomposition_class_sl3",
            ScenarioSpec::ImplosionFaces => "implosion_faces_A2",
            ScenarioSpec::PolyhedralFace { .. } => "polyhedral_face_torus",
            ScenarioSpec::MooreTachikawa { .. } => "slodowy_moore_tachikawa",
        }
    }

    pub fn run(&self, opts: &ScenarioOptions) -> Result<ScenarioReport> {
        match self {
            ScenarioSpec::C4PrePoisson => scenarios::c4_prepoisson_remark(opts),
            ScenarioSpec::CasimirSphere {
                cartan_type,
                rank,
                level,
            } => scenarios::casimir_sphere(*cartan_type, *rank, level.clone(), opts),
            ScenarioSpec::DecompositionClass => scenarios::decomposition_class_sl3(opts),
            ScenarioSpec::ImplosionFaces => scenarios::implosion_faces_a2(opts),
            ScenarioSpec::PolyhedralFace { dim_t, directions } => {
                scenarios::polyhedral_face_torus(*dim_t, directions, opts)
            }
            ScenarioSpec::MooreTachikawa {
                cartan_type,
                rank,
                n,
            } => scenarios::slodowy_moore_tachikawa(*cartan_type, *rank, *n, opts),
        }
    }
}

pub(crate) fn parse_spec(name: &str, params: &mut Params) -> std::result::Result<ScenarioSpec, ConfigError> {
    Ok(match name {
        "c4_prepoisson_remark" => ScenarioSpec::C4PrePoisson,
        "decomposition_class_sl3" => ScenarioSpec::DecompositionClass,
        "implosion_faces_A2" => ScenarioSpec::ImplosionFaces,
        "casimir_sphere" => {
            let cartan_type = params.cartan_type("cartan_type", CartanType::A)?;
            let rank = params.usize_in("rank", 1, 1..=4)?;
            if !SUPPORTED_TYPES.contains(&(cartan_type, rank)) {
                return Err(params.field_error("rank", format!("{cartan_type}{rank} is not supported")));
            }
            let level = params.rational("level")?;
            if level.as_ref().is_some_and(|c| *c == Rational::from_integer(0.into())) {
                return Err(params.field_error("level", "must be nonzero"));
            }
            ScenarioSpec::CasimirSphere {
                cartan_type,
                rank,
                level,
            }
        }
        "polyhedral_face_torus" => {
            let dim_t = params.usize_in("dim_t", 2, 1..=8)?;
            let directions = match params.rational_rows("directions")? {
                Some(rows) => rows,
                None if dim_t >= 2 => {
                    let mut v = vec![Rational::from_integer(0.into()); dim_t];
                    v[0] = Rational::from_integer(1.into());
                    v[1] = Rational::from_integer((-1).into());
                    vec![v]
                }
                None => Vec::new(),
            };
            if let Some(i) = directions.iter().position(|v| v.len() != dim_t) {
                return Err(params.field_error(
                    &format!("directions[{i}]"),
                    format!("expected {dim_t} entries"),
                ));
            }
            ScenarioSpec::PolyhedralFace { dim_t, directions }
        }
        "slodowy_moore_tachikawa" => {
            let cartan_type = params.cartan_type("cartan_type", CartanType::A)?;
            if cartan_type != CartanType::A {
                return Err(params.field_error("cartan_type", "only type A is supported"));
            }
            let rank = params.usize_in("rank", 1, 1..=3)?;
            let n = params.usize_in("n", 2, 1..=4)?;
            ScenarioSpec::MooreTachikawa {
                cartan_type,
                rank,
                n,
            }
        }
        other => return Err(ConfigError::field("name", format!("unknown scenario \"{other}\""))),
    })
}
