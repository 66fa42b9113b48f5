//! JSON file schemas and their conversions to core types.
//!
//! Bodies:
//! ```json
//! {"body": {"type": "vpolytope", "vertices": [[0.0, 2.0], ...]}}
//! {"body": {"type": "hpolytope", "normals": [[...], ...]}}   // offsets are 1
//! {"body": {"type": "ellipsoid", "radii": [1.0, 2.0]}}
//! {"body": {"type": "quadratic", "Q": [[...], ...]}}
//! ```
//!
//! Forms: `{"form": {"standard": 2}}` or `{"form": {"matrix": [[...], ...]}}`.
//! Maps: `{"linear": [[...], ...], "translation": [...]}` (translation optional).

use anyhow::{anyhow, Context};
use serde::{Deserialize, Serialize};

use gaugekit_core::body::{Body, HPolytope, SmoothBody, VPolytope};
use gaugekit_core::isometry::AffineMap;
use gaugekit_core::linalg::Mat;
use gaugekit_core::symplectic::SymplecticForm;

use crate::{CliError, CliResult2};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BodyFile {
    pub body: BodySchema,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BodySchema {
    VPolytope { vertices: Vec<Vec<f64>> },
    HPolytope { normals: Vec<Vec<f64>> },
    Ellipsoid { radii: Vec<f64> },
    Quadratic {
        #[serde(rename = "Q")]
        q: Vec<Vec<f64>>,
    },
}

/// Where a derived body came from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Provenance {
    pub operation: String,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<String>,
}

impl BodySchema {
    pub fn to_body(&self) -> anyhow::Result<Body> {
        Ok(match self {
            BodySchema::VPolytope { vertices } => {
                Body::Vertices(VPolytope::new(vertices.clone())?)
            }
            BodySchema::HPolytope { normals } => {
                Body::Halfspaces(HPolytope::new(normals.clone())?)
            }
            BodySchema::Ellipsoid { radii } => Body::Smooth(SmoothBody::ellipsoid(radii)?),
            BodySchema::Quadratic { q } => {
                Body::Smooth(SmoothBody::from_quadratic(Mat::from_rows(q)?)?)
            }
        })
    }

    pub fn from_body(body: &Body) -> Self {
        match body {
            Body::Vertices(p) => BodySchema::VPolytope { vertices: p.vertices().to_vec() },
            Body::Halfspaces(p) => BodySchema::HPolytope { normals: p.normals().to_vec() },
            Body::Smooth(s) => BodySchema::Quadratic { q: s.matrix().to_rows() },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormFile {
    pub form: FormSchema,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormSchema {
    Standard { standard: usize },
    Matrix { matrix: Vec<Vec<f64>> },
}

impl FormSchema {
    pub fn to_form(&self) -> anyhow::Result<SymplecticForm> {
        Ok(match self {
            FormSchema::Standard { standard } => {
                if *standard == 0 {
                    return Err(anyhow!("standard form needs n ≥ 1"));
                }
                SymplecticForm::standard(*standard)
            }
            FormSchema::Matrix { matrix } => {
                SymplecticForm::from_matrix(Mat::from_rows(matrix)?)?
            }
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapFile {
    pub linear: Vec<Vec<f64>>,
    #[serde(default)]
    pub translation: Option<Vec<f64>>,
}

impl MapFile {
    pub fn to_map(&self) -> anyhow::Result<AffineMap> {
        let linear = Mat::from_rows(&self.linear)?;
        let translation =
            self.translation.clone().unwrap_or_else(|| vec![0.0; linear.rows()]);
        Ok(AffineMap::new(linear, translation)?)
    }
}

// ---------------------------------------------------------------------------
// Loading helpers (all failures here are input errors: exit code 2)
// ---------------------------------------------------------------------------

pub fn load_body(path: &str) -> CliResult2<Body> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading body file {path}"))
        .map_err(CliError::Input)?;
    let file: BodyFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing body file {path}"))
        .map_err(|e| CliError::Input(e))?;
    file.body
        .to_body()
        .with_context(|| format!("validating body from {path}"))
        .map_err(CliError::Input)
}

/// Accepts `det`, `std:N`, or a path to a form JSON file.
pub fn load_form(spec: &str) -> CliResult2<SymplecticForm> {
    if spec == "det" {
        return Ok(SymplecticForm::determinant());
    }
    if let Some(n) = spec.strip_prefix("std:") {
        let n: usize = n
            .parse()
            .map_err(|_| CliError::Input(anyhow!("bad block count in --form {spec}")))?;
        if n == 0 {
            return Err(CliError::Input(anyhow!("standard form needs n ≥ 1")));
        }
        return Ok(SymplecticForm::standard(n));
    }
    let text = std::fs::read_to_string(spec)
        .with_context(|| format!("reading form file {spec}"))
        .map_err(CliError::Input)?;
    let file: FormFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing form file {spec}"))
        .map_err(CliError::Input)?;
    file.form.to_form().map_err(CliError::Input)
}

pub fn load_map(path: &str) -> CliResult2<AffineMap> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading map file {path}"))
        .map_err(CliError::Input)?;
    let file: MapFile = serde_json::from_str(&text)
        .with_context(|| format!("parsing map file {path}"))
        .map_err(CliError::Input)?;
    file.to_map().map_err(CliError::Input)
}

/// Comma-separated coordinates: `"1,0,-2.5"`.
pub fn parse_vector(text: &str) -> CliResult2<Vec<f64>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Input(anyhow!("bad coordinate {part:?}")))
        })
        .collect()
}

/// Two spanning vectors separated by a semicolon: `"1,0,0,0;0,1,0,0"`.
pub fn parse_plane(text: &str) -> CliResult2<gaugekit_core::symplectic::PlaneSubspace> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 2 {
        return Err(CliError::Input(anyhow!("--plane needs two vectors separated by ';'")));
    }
    let u = parse_vector(parts[0])?;
    let v = parse_vector(parts[1])?;
    gaugekit_core::symplectic::PlaneSubspace::new(u, v)
        .context("plane basis is rank deficient")
        .map_err(CliError::Input)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn body_schema_roundtrip() {
        let text = r#"{"body":{"type":"ellipsoid","radii":[1.0,2.0]}}"#;
        let file: BodyFile = serde_json::from_str(text).unwrap();
        let body = file.body.to_body().unwrap();
        assert_eq!(body.dim(), 4);
        let back = BodySchema::from_body(&body);
        assert!(matches!(back, BodySchema::Quadratic { .. }));
    }

    #[test]
    fn form_shorthands() {
        assert_eq!(load_form("det").unwrap().dim(), 2);
        assert_eq!(load_form("std:3").unwrap().dim(), 6);
        assert!(load_form("std:0").is_err());
    }

    #[test]
    fn vector_parsing() {
        assert_eq!(parse_vector("1, 0,-2.5").unwrap(), vec![1.0, 0.0, -2.5]);
        assert!(parse_vector("1,x").is_err());
    }
}
