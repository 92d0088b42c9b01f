//! Input documents: arrangements (optionally with a group and an ample
//! class) and fans.
//!
//! Numbers are JSON integers or strings such as `"-3/4"`.

use std::path::Path;

use chamberwalk_core::arrangement::{build_arrangement, Arrangement, Fan};
use chamberwalk_core::exactlin::{RatMat, RatVec, Rational};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    pub fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Num::Int(i) => Ok(Rational::from_integer((*i).into())),
            Num::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let s = s.trim();
    let bad = || CliError::InvalidInput(format!("not a rational number: {s:?}"));
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Rational::new(n.into(), d.into())
        }
        None => Rational::from_integer(s.parse::<i64>().map_err(|_| bad())?.into()),
    };
    Ok(r)
}

/// `"1,-1/2,3"` as a vector.
pub fn parse_vector(s: &str) -> Result<RatVec, CliError> {
    if s.trim().is_empty() {
        return Err(CliError::InvalidInput("empty coordinate list".into()));
    }
    Ok(RatVec::new(
        s.split(',').map(parse_rational).collect::<Result<_, _>>()?,
    ))
}

fn vector(nums: &[Num], dim: usize, what: &str) -> Result<RatVec, CliError> {
    if nums.len() != dim {
        return Err(CliError::InvalidInput(format!(
            "{what} has {} coordinates, expected {dim}",
            nums.len()
        )));
    }
    Ok(RatVec::new(
        nums.iter()
            .map(Num::to_rational)
            .collect::<Result<_, _>>()?,
    ))
}

pub fn ints(v: &[i64]) -> Vec<Num> {
    v.iter().map(|&x| Num::Int(x)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub dim: usize,
    #[serde(default)]
    pub equalities: Vec<Vec<Num>>,
    pub hyperplanes: Vec<Vec<Num>>,
    /// Generators of a finite group acting by `x ↦ M·x` (row-major).
    #[serde(default)]
    pub group: Vec<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ample: Option<Vec<Num>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub dim: usize,
    #[serde(default)]
    pub equalities: Vec<Vec<Num>>,
    /// Each cone as a list of generating rays.
    pub cones: Vec<Vec<Vec<Num>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Arrangement(ArrangementDoc),
    Fan(FanDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Arrangement(_) => "arrangement",
            Document::Fan(_) => "fan",
        }
    }

    pub fn description(&self) -> &str {
        match self {
            Document::Arrangement(a) => a.description.as_deref().unwrap_or(""),
            Document::Fan(f) => f.description.as_deref().unwrap_or(""),
        }
    }
}

pub fn load_document(path: &Path) -> Result<Document, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::InvalidInput(format!("{}: {e}", path.display())))
}

impl ArrangementDoc {
    pub fn arrangement(&self) -> Result<Arrangement, CliError> {
        let rows = self
            .hyperplanes
            .iter()
            .map(|h| vector(h, self.dim, "hyperplane"))
            .collect::<Result<Vec<_>, _>>()?;
        let eqs = self
            .equalities
            .iter()
            .map(|e| vector(e, self.dim, "equality"))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(build_arrangement(&rows, &eqs, self.dim)?)
    }

    pub fn generators(&self) -> Result<Vec<RatMat>, CliError> {
        self.group
            .iter()
            .map(|m| {
                if m.len() != self.dim {
                    return Err(CliError::InvalidInput(format!(
                        "group generator has {} rows, expected {}",
                        m.len(),
                        self.dim
                    )));
                }
                let rows = m
                    .iter()
                    .map(|r| vector(r, self.dim, "group generator row"))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RatMat::from_vecs(&rows, self.dim).expect("checked shape"))
            })
            .collect()
    }

    pub fn ample(&self) -> Result<Option<RatVec>, CliError> {
        self.ample
            .as_ref()
            .map(|a| vector(a, self.dim, "ample class"))
            .transpose()
    }
}

impl FanDoc {
    pub fn fan(&self) -> Result<Fan, CliError> {
        let eqs = self
            .equalities
            .iter()
            .map(|e| vector(e, self.dim, "equality"))
            .collect::<Result<Vec<_>, _>>()?;
        let cones = self
            .cones
            .iter()
            .map(|c| c.iter().map(|r| vector(r, self.dim, "ray")).collect())
            .collect::<Result<Vec<Vec<RatVec>>, _>>()?;
        Ok(Fan::from_rays(self.dim, &eqs, &cones)?)
    }
}
