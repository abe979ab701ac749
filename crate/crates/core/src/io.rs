//! JSON documents shared with the command-line tool.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::rational::{rational_to_json, vector_to_json};
use crate::polytope::{hull_from_vertices, polytope_from_halfspaces, Facet, Polytope};
use crate::toricrr::ToricData;
use crate::{LatticePoint, Polynomial, Rational, RationalFunction};

/// A polytope given by vertices, by half-spaces, or by both.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<LatticePoint>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normals: Option<Vec<LatticePoint>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offsets: Option<Vec<i64>>,
}

impl PolytopeDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text).map_err(|e| {
            Error::InvalidInput(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column()))
        })?;
        if doc.vertices.is_none() && doc.normals.is_none() {
            return Err(Error::InvalidInput("document needs \"vertices\" or \"normals\"/\"offsets\"".into()));
        }
        if doc.normals.is_some() != doc.offsets.is_some() {
            return Err(Error::InvalidInput("\"normals\" and \"offsets\" must be given together".into()));
        }
        Ok(doc)
    }

    pub fn from_halfspaces(normals: Vec<LatticePoint>, offsets: Vec<i64>) -> Self {
        Self { name: None, vertices: None, normals: Some(normals), offsets: Some(offsets) }
    }

    pub fn from_vertices(vertices: Vec<LatticePoint>) -> Self {
        Self { name: None, vertices: Some(vertices), normals: None, offsets: None }
    }

    /// Builds the polytope, checking that both representations agree when
    /// both are present.
    pub fn polytope(&self) -> Result<Polytope> {
        let from_h = match (&self.normals, &self.offsets) {
            (Some(n), Some(o)) => Some(polytope_from_halfspaces(n, o)?),
            _ => None,
        };
        let from_v = self.vertices.as_ref().map(|v| hull_from_vertices(v)).transpose()?;
        match (from_v, from_h) {
            (Some(v), Some(h)) => {
                let fv: BTreeSet<&Facet> = v.facets().iter().collect();
                let fh: BTreeSet<&Facet> = h.facets().iter().collect();
                if v.vertices() != h.vertices() || fv != fh {
                    return Err(Error::InvalidInput("vertices and half-spaces describe different polytopes".into()));
                }
                Ok(h)
            }
            (Some(p), None) | (None, Some(p)) => Ok(p),
            (None, None) => Err(Error::InvalidInput("no polytope representation".into())),
        }
    }

    /// Fan data. Half-space input keeps its ray order; vertex input uses the
    /// computed facets.
    pub fn toric_data(&self) -> Result<ToricData> {
        let p = self.polytope()?;
        match (&self.normals, &self.offsets) {
            (Some(n), Some(o)) => ToricData::new(n.clone(), o.clone()),
            _ => Ok(ToricData::from_polytope(&p)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub check: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Output of one command: exact values as canonical strings, plus the
/// validation checks that ran.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub command: String,
    pub input: Option<String>,
    pub outputs: Map<String, Value>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ResultDocument {
    pub fn new(command: &str, input: Option<String>) -> Self {
        Self { command: command.into(), input, outputs: Map::new(), diagnostics: Vec::new() }
    }

    pub fn put(&mut self, key: &str, value: Value) {
        self.outputs.insert(key.into(), value);
    }

    pub fn check(&mut self, check: &str, passed: bool, detail: Option<String>) {
        self.diagnostics.push(Diagnostic { check: check.into(), passed, detail });
    }

    pub fn all_passed(&self) -> bool {
        self.diagnostics.iter().all(|d| d.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

pub fn rational_json(r: &Rational) -> Value {
    rational_to_json(r)
}

pub fn vector_json(v: &[Rational]) -> Value {
    vector_to_json(v)
}

pub fn matrix_json(rows: &[Vec<Rational>]) -> Value {
    Value::Array(rows.iter().map(|r| vector_to_json(r)).collect())
}

/// Coefficients, lowest degree first.
pub fn polynomial_json(p: &Polynomial) -> Value {
    vector_to_json(p.coeffs())
}

pub fn rational_function_json(f: &RationalFunction) -> Value {
    let mut m = Map::new();
    m.insert("num".into(), polynomial_json(f.num()));
    m.insert("den".into(), polynomial_json(f.den()));
    Value::Object(m)
}

pub fn lattice_json(v: &[LatticePoint]) -> Value {
    serde_json::to_value(v).expect("integer vectors serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn parses_both_forms() {
        let d = PolytopeDocument::from_json(r#"{"vertices": [[0,0],[1,0],[0,1]]}"#).unwrap();
        assert_eq!(d.polytope().unwrap().vertices().len(), 3);
        let d = PolytopeDocument::from_json(r#"{"normals": [[1,0],[0,1],[-1,-1]], "offsets": [1,1,1], "name": "p2"}"#)
            .unwrap();
        assert_eq!(d.name.as_deref(), Some("p2"));
        assert_eq!(d.toric_data().unwrap().rays().len(), 3);
    }

    #[test]
    fn consistency_between_representations() {
        let ok = r#"{"vertices": [[-1,-1],[2,-1],[-1,2]], "normals": [[1,0],[0,1],[-1,-1]], "offsets": [1,1,1]}"#;
        assert!(PolytopeDocument::from_json(ok).unwrap().polytope().is_ok());
        let bad = r#"{"vertices": [[-1,-1],[2,-1],[-1,3]], "normals": [[1,0],[0,1],[-1,-1]], "offsets": [1,1,1]}"#;
        let err = PolytopeDocument::from_json(bad).unwrap().polytope().unwrap_err();
        assert_eq!(err.name(), "InvalidInput");
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = PolytopeDocument::from_json("{\n  \"vertices\": [[0,0],\n}").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        assert!(PolytopeDocument::from_json("{}").is_err());
        assert!(PolytopeDocument::from_json(r#"{"normals": [[1]]}"#).is_err());
    }

    #[test]
    fn result_round_trip() {
        let mut r = ResultDocument::new("bck", Some("f1".into()));
        r.put("Bc_k", vector_json(&[q(1, 9), q(1, 9)]));
        r.check("closed form", true, None);
        let text = r.to_json();
        assert_eq!(ResultDocument::from_json(&text).unwrap(), r);
        assert!(text.contains("\"1/9\""));
    }
}
