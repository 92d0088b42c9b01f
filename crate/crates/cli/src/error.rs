//! Errors and their machine-readable form.
//!
//! Usage problems exit with status 2, everything else with status 1. On
//! failure the binary writes `{"error": code, "message": ..., "context": {...}}`
//! to standard error.

use chamberwalk_core::arrangement::ArrangementError;
use chamberwalk_core::movcone::MovError;
use chamberwalk_core::parabolic::ParabolicError;
use chamberwalk_core::rootsys::RootSystemError;
use chamberwalk_core::slice::SliceError;
use serde_json::{json, Value};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("format {format} is not available for {command}")]
    FormatUnavailable { format: String, command: String },
    #[error("cannot access {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("svg output needs a 2-dimensional ambient space, this one has dimension {0}")]
    NotPlanar(usize),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Mov(#[from] MovError),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
    #[error(transparent)]
    Slice(#[from] SliceError),
}

fn root_system(e: &RootSystemError) -> (&'static str, Value) {
    match e {
        RootSystemError::InvalidType { letter, rank } => (
            "invalid_type",
            json!({ "letter": letter.to_string(), "rank": rank }),
        ),
        RootSystemError::Unparsable(s) => ("invalid_type", json!({ "input": s })),
        RootSystemError::NotARoot => ("not_a_root", json!({})),
        RootSystemError::OrderCapExceeded { cap } => ("order_cap_exceeded", json!({ "cap": cap })),
        RootSystemError::DimensionMismatch { expected, found } => (
            "dimension_mismatch",
            json!({ "expected": expected, "found": found }),
        ),
        RootSystemError::RealizationTooSmall(n) => ("too_small", json!({ "n": n })),
    }
}

fn arrangement(e: &ArrangementError) -> (&'static str, Value) {
    match e {
        ArrangementError::DegenerateHyperplane { index } => {
            ("degenerate_hyperplane", json!({ "index": index }))
        }
        ArrangementError::DimensionMismatch { expected, found } => (
            "dimension_mismatch",
            json!({ "expected": expected, "found": found }),
        ),
        ArrangementError::OffAmbient => ("off_ambient", json!({})),
        ArrangementError::InconsistentInput(m) => ("inconsistent_input", json!({ "detail": m })),
        ArrangementError::MalformedFan(m) => ("malformed_fan", json!({ "detail": m })),
        ArrangementError::Cone(c) => ("malformed_cone", json!({ "detail": c.to_string() })),
        ArrangementError::LinAlg(l) => ("linear_algebra", json!({ "detail": l.to_string() })),
    }
}

fn mov(e: &MovError) -> (&'static str, Value) {
    match e {
        MovError::NotInvariant { element } => ("not_invariant", json!({ "element": element })),
        MovError::OnWall(h) => ("on_wall", json!({ "hyperplanes": h })),
        MovError::FixedChamber { element, chamber } => (
            "fixed_chamber",
            json!({ "element": element, "chamber": chamber }),
        ),
        MovError::NotAFacet {
            chamber,
            hyperplane,
        } => (
            "not_a_facet",
            json!({ "chamber": chamber, "hyperplane": hyperplane }),
        ),
        MovError::BoundaryWall {
            chamber,
            hyperplane,
        } => (
            "boundary_wall",
            json!({ "chamber": chamber, "hyperplane": hyperplane }),
        ),
        MovError::NotInMov(c) => ("not_in_mov", json!({ "chamber": c })),
        MovError::InvalidGroup(m) => ("invalid_group", json!({ "detail": m })),
        MovError::Arrangement(a) => arrangement(a),
        MovError::RootSystem(r) => root_system(r),
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::FormatUnavailable { .. } => 2,
            _ => 1,
        }
    }

    fn code_and_context(&self) -> (&'static str, Value) {
        match self {
            CliError::Usage(_) => ("usage", json!({})),
            CliError::FormatUnavailable { format, command } => (
                "format_unavailable",
                json!({ "format": format, "command": command }),
            ),
            CliError::Io { path, .. } => ("io", json!({ "path": path })),
            CliError::InvalidInput(_) => ("invalid_input", json!({})),
            CliError::NotPlanar(d) => ("not_planar", json!({ "dimension": d })),
            CliError::UnknownFixture(n) => ("unknown_fixture", json!({ "name": n })),
            CliError::RootSystem(e) => root_system(e),
            CliError::Arrangement(e) => arrangement(e),
            CliError::Mov(e) => mov(e),
            CliError::Parabolic(e) => match e {
                ParabolicError::ImproperLevi { rank } => ("improper_levi", json!({ "rank": rank })),
                ParabolicError::NotAWall { vertex } => {
                    ("not_a_wall", json!({ "vertex": vertex + 1 }))
                }
                ParabolicError::NoChamber => ("no_chamber", json!({})),
                ParabolicError::RootSystem(r) => root_system(r),
                ParabolicError::Mov(m) => mov(m),
            },
            CliError::Slice(e) => match e {
                SliceError::TooSmall(n) => ("too_small", json!({ "n": n })),
                SliceError::NotInV => ("not_in_v", json!({})),
                SliceError::UnknownTag { ambient, tag } => (
                    "unknown_tag",
                    json!({ "ambient": ambient.to_string(), "tag": tag.to_string() }),
                ),
                SliceError::LinAlg(l) => ("linear_algebra", json!({ "detail": l.to_string() })),
                SliceError::RootSystem(r) => root_system(r),
                SliceError::Arrangement(a) => arrangement(a),
                SliceError::Cone(c) => ("malformed_cone", json!({ "detail": c.to_string() })),
                SliceError::Mov(m) => mov(m),
            },
        }
    }

    /// Stable identifier of the error kind.
    pub fn code(&self) -> &'static str {
        self.code_and_context().0
    }

    pub fn to_json(&self) -> Value {
        let (code, context) = self.code_and_context();
        json!({ "error": code, "message": self.to_string(), "context": context })
    }
}
