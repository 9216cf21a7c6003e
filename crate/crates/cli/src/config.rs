//! Tower configuration files: a closed JSON schema, rejected strictly so
//! that certificates are auditable against their exact input.
//!
//! ```json
//! {
//!   "base": { "type": "projective_space", "dim": 2 },
//!   "levels": [
//!     { "centers": [ { "kind": "point" }, { "kind": "linear_codim2" } ] }
//!   ]
//! }
//! ```
//!
//! Center kinds: `point`, `linear_codim2`, `strict_transform_line`, and
//! `linear` (which requires `dim`; codimensions other than 2 or n are
//! rejected by the engine as unsupported geometry).

use serde::{Deserialize, Serialize};

use rouquier_core::{Center, TowerSpec};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerConfig {
    pub base: BaseConfig,
    pub levels: Vec<LevelConfig>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseConfig {
    #[serde(rename = "type")]
    pub kind: String,
    pub dim: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelConfig {
    pub centers: Vec<CenterConfig>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CenterConfig {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<u32>,
}

/// Parse a config document; any schema violation is a malformed-config
/// error (exit code 2), distinct from rule violations (exit code 3).
pub fn parse(text: &str) -> Result<TowerConfig, String> {
    let config: TowerConfig =
        serde_json::from_str(text).map_err(|e| format!("invalid config document: {e}"))?;
    if config.base.kind != "projective_space" {
        return Err(format!(
            "base.type must be \"projective_space\", got {:?}",
            config.base.kind
        ));
    }
    for (i, level) in config.levels.iter().enumerate() {
        for center in &level.centers {
            match center.kind.as_str() {
                "point" | "linear_codim2" | "strict_transform_line" => {
                    if center.dim.is_some() {
                        return Err(format!(
                            "level {}: center kind {:?} does not take a \"dim\" field",
                            i + 1,
                            center.kind
                        ));
                    }
                }
                "linear" => {
                    if center.dim.is_none() {
                        return Err(format!(
                            "level {}: center kind \"linear\" requires a \"dim\" field",
                            i + 1
                        ));
                    }
                }
                other => {
                    return Err(format!(
                        "level {}: unknown center kind {other:?} (expected point, linear_codim2, strict_transform_line, or linear)",
                        i + 1
                    ));
                }
            }
        }
    }
    Ok(config)
}

pub fn to_tower_spec(config: &TowerConfig) -> TowerSpec {
    TowerSpec {
        base_dim: config.base.dim,
        levels: config
            .levels
            .iter()
            .map(|level| {
                level
                    .centers
                    .iter()
                    .map(|c| match c.kind.as_str() {
                        "point" => Center::Point,
                        "linear_codim2" => Center::LinearCodim2,
                        "strict_transform_line" => Center::StrictTransformLine,
                        "linear" => Center::Linear {
                            dim: c.dim.expect("validated by parse"),
                        },
                        _ => unreachable!("validated by parse"),
                    })
                    .collect()
            })
            .collect(),
    }
}
