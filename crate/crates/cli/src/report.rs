//! Report assembly and rendering. Reports are byte-deterministic for a
//! fixed input and tool version: no timestamps, ordered containers only,
//! and the version string isolated in its own field.

use serde::Serialize;

use rouquier_core::{Certificate, CertifyError, GradedGram, LevelTrace};

use crate::config::TowerConfig;

#[derive(Serialize)]
pub struct Report {
    pub tool_version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_echo: Option<TowerConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grams: Option<Vec<GramReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorObject>,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
pub struct GramReport {
    pub level: usize,
    pub gram: GradedGram,
}

#[derive(Serialize)]
pub struct Check {
    pub id: String,
    pub status: &'static str,
    pub detail: String,
}

impl Check {
    fn pass(id: &str, detail: String) -> Self {
        Check {
            id: id.to_string(),
            status: "pass",
            detail,
        }
    }

    fn fail(id: &str, detail: String) -> Self {
        Check {
            id: id.to_string(),
            status: "fail",
            detail,
        }
    }
}

#[derive(Serialize)]
pub struct ErrorObject {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<String>,
    pub message: String,
}

fn tool_version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

/// Re-run the structural verifications on a finished certificate so the
/// report's check list reflects the emitted artifact, not internal state.
fn certificate_checks(
    config: &TowerConfig,
    certificate: &Certificate,
    traces: &[LevelTrace],
) -> Vec<Check> {
    let n = config.base.dim;
    let mut checks = vec![Check::pass("config-schema", "document matches the closed schema".into())];
    for trace in traces {
        let id = format!("gram-invariants-level-{}", trace.level);
        match trace.gram.validate() {
            Ok(()) => checks.push(Check::pass(
                &id,
                format!(
                    "{} labels: unit diagonal, zero below the diagonal",
                    trace.gram.size()
                ),
            )),
            Err(e) => checks.push(Check::fail(&id, e.to_string())),
        }
        let id = format!("grouping-level-{}", trace.level);
        let expected = (n - 1) as usize;
        if trace.blocks.len() == expected {
            checks.push(Check::pass(
                &id,
                format!("{expected} star-quiver block(s) of {} object(s)", 1 + trace.center_count),
            ));
        } else {
            checks.push(Check::fail(
                &id,
                format!("expected {expected} blocks, found {}", trace.blocks.len()),
            ));
        }
    }
    let count = certificate.components.len() as u32;
    let rdim_sum: u32 = certificate.components.iter().map(|c| c.rdim).sum();
    if count == n + 1 {
        checks.push(Check::pass(
            "component-census",
            format!("{count} components for a P^{n} tower"),
        ));
    } else {
        checks.push(Check::fail(
            "component-census",
            format!("expected {} components, found {count}", n + 1),
        ));
    }
    if certificate.upper_bound == rdim_sum + count - 1 {
        checks.push(Check::pass(
            "glueing-arithmetic",
            format!("{rdim_sum} + {} = {}", count - 1, certificate.upper_bound),
        ));
    } else {
        checks.push(Check::fail(
            "glueing-arithmetic",
            "upper bound does not match the glueing formula".into(),
        ));
    }
    if certificate.verified == (certificate.upper_bound == certificate.lower_bound) {
        checks.push(Check::pass(
            "bounds",
            format!(
                "{} <= rdim <= {}",
                certificate.lower_bound, certificate.upper_bound
            ),
        ));
    } else {
        checks.push(Check::fail("bounds", "verified flag is inconsistent".into()));
    }
    checks
}

pub fn success(config: &TowerConfig, certificate: Certificate, traces: Vec<LevelTrace>) -> Report {
    let checks = certificate_checks(config, &certificate, &traces);
    Report {
        tool_version: tool_version(),
        input_echo: Some(config.clone()),
        certificate: Some(certificate),
        grams: Some(
            traces
                .into_iter()
                .map(|t| GramReport {
                    level: t.level,
                    gram: t.gram,
                })
                .collect(),
        ),
        error: None,
        checks,
    }
}

pub fn rejection(config: &TowerConfig, error: &CertifyError) -> Report {
    let object = match error {
        CertifyError::RuleViolation {
            hypothesis,
            message,
        } => ErrorObject {
            kind: "rule_violation",
            hypothesis: Some(hypothesis.clone()),
            message: message.clone(),
        },
        CertifyError::UnsupportedGeometry { message, .. } => ErrorObject {
            kind: "unsupported_geometry",
            hypothesis: Some("centers are points or have codimension two".to_string()),
            message: message.clone(),
        },
        other => ErrorObject {
            kind: "error",
            hypothesis: None,
            message: other.to_string(),
        },
    };
    let checks = vec![Check::fail(
        "hypotheses",
        object
            .hypothesis
            .clone()
            .unwrap_or_else(|| object.message.clone()),
    )];
    Report {
        tool_version: tool_version(),
        input_echo: Some(config.clone()),
        certificate: None,
        grams: None,
        error: Some(object),
        checks,
    }
}

pub fn malformed(message: String) -> Report {
    Report {
        tool_version: tool_version(),
        input_echo: None,
        certificate: None,
        grams: None,
        error: Some(ErrorObject {
            kind: "malformed_config",
            hypothesis: None,
            message,
        }),
        checks: vec![],
    }
}

pub fn to_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("rouquier {}\n", report.tool_version));
    if let Some(echo) = &report.input_echo {
        out.push_str(&format!(
            "input: P^{} with {} blow-up level(s)\n",
            echo.base.dim,
            echo.levels.len()
        ));
        for (i, level) in echo.levels.iter().enumerate() {
            let kinds: Vec<String> = level
                .centers
                .iter()
                .map(|c| match c.dim {
                    Some(d) => format!("{}(dim {d})", c.kind),
                    None => c.kind.clone(),
                })
                .collect();
            out.push_str(&format!("  level {}: {}\n", i + 1, kinds.join(", ")));
        }
    }
    if let Some(error) = &report.error {
        out.push_str(&format!("result: REJECTED ({})\n", error.kind));
        if let Some(h) = &error.hypothesis {
            out.push_str(&format!("violated hypothesis: {h}\n"));
        }
        out.push_str(&format!("reason: {}\n", error.message));
        return out;
    }
    let certificate = report.certificate.as_ref().expect("success reports carry a certificate");
    out.push_str(&format!(
        "result: {}  {} <= rdim <= {}\n",
        if certificate.verified {
            "VERIFIED"
        } else {
            "UNDECIDED"
        },
        certificate.lower_bound,
        certificate.upper_bound
    ));
    out.push_str("components:\n");
    for c in &certificate.components {
        out.push_str(&format!("  - (rdim {}) {}\n", c.rdim, c.label));
    }
    out.push_str("steps:\n");
    for s in &certificate.steps {
        out.push_str(&format!("  [{}] {}\n", s.tag, s.detail));
    }
    if let Some(grams) = &report.grams {
        for g in grams {
            out.push_str(&format!(
                "level {} Hom table (0* = asserted zero, ? = not determined):\n",
                g.level
            ));
            for line in g.gram.render_table().lines() {
                out.push_str(&format!("  {line}\n"));
            }
        }
    }
    let passed = report.checks.iter().filter(|c| c.status == "pass").count();
    out.push_str(&format!("checks: {passed}/{} passed\n", report.checks.len()));
    for c in &report.checks {
        out.push_str(&format!("  [{}] {}: {}\n", c.status, c.id, c.detail));
    }
    out
}
