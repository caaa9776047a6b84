//! Certificate files: an embedding plus its verification report, in a
//! stable JSON layout.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::distance_graph::{verify_embedding, Embedding, EmbeddingJson, VerificationReport};
use crate::error::{Error, Result};
use crate::regularizer::{PlaneEmbedding, PlaneReport};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub schema: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Payload {
    Exact {
        embedding: EmbeddingJson,
        report: VerificationReport,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        construction: Option<serde_json::Value>,
    },
    Plane {
        embedding: PlaneEmbedding,
        report: PlaneReport,
        placement: Placement,
    },
}

/// How generic choices were made for a plane construction. Collisions are
/// avoided by retrying with fresh random choices, up to a fixed bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Placement {
    pub r: usize,
    pub seed: u64,
    pub attempts: usize,
    pub max_attempts: usize,
    pub policy: String,
}

/// Outcome of re-checking a stored certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Recheck {
    pub kind: &'static str,
    /// The recomputed report equals the stored one.
    pub reproduces: bool,
    pub passed: bool,
    pub report: serde_json::Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<String>,
}

impl CertificateFile {
    pub fn exact(
        command: &str,
        params: BTreeMap<String, String>,
        e: &Embedding,
        construction: Option<serde_json::Value>,
    ) -> Result<Self> {
        let report = verify_embedding(e, false)?;
        Ok(CertificateFile {
            schema: SCHEMA_VERSION.into(),
            command: command.into(),
            params,
            payload: Payload::Exact { embedding: EmbeddingJson::from(e), report, construction },
        })
    }

    pub fn plane(command: &str, params: BTreeMap<String, String>, e: PlaneEmbedding, placement: Placement) -> Self {
        let report = e.report();
        CertificateFile {
            schema: SCHEMA_VERSION.into(),
            command: command.into(),
            params,
            payload: Payload::Plane { embedding: e, report, placement },
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cert: CertificateFile = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
        if cert.schema != SCHEMA_VERSION {
            return Err(Error::parse(format!("unsupported schema version {:?}", cert.schema)));
        }
        Ok(cert)
    }

    /// Recomputes the report from the stored coordinates. With `faithful`,
    /// exact certificates must also keep every non-edge off the edge
    /// distance.
    pub fn recheck(&self, faithful: bool) -> Result<Recheck> {
        match &self.payload {
            Payload::Exact { embedding, report, .. } => {
                let e = Embedding::try_from(embedding.clone())?;
                let again = verify_embedding(&e, report.faithful_requested)?;
                let reproduces = &again == report;
                let mut problems: Vec<String> = again
                    .failing_edges()
                    .map(|c| format!("edge {}-{} has squared length {}, expected {}", c.u, c.v, c.squared_dist, again.r))
                    .collect();
                let checked = if faithful { verify_embedding(&e, true)? } else { again };
                if faithful {
                    problems.extend(checked.non_edges_at_r.iter().map(|[u, v]| {
                        format!("non-edge {u}-{v} is at squared distance {}", checked.r)
                    }));
                }
                if !reproduces {
                    problems.push("stored report differs from the recomputed one".into());
                }
                Ok(Recheck {
                    kind: "exact",
                    reproduces,
                    passed: reproduces && checked.passed,
                    report: serde_json::to_value(&checked)?,
                    problems,
                })
            }
            Payload::Plane { embedding, report, placement } => {
                let again = embedding.report();
                let reproduces = &again == report;
                let mut problems = Vec::new();
                if !again.passed {
                    problems.push(format!(
                        "worst edge deviation {:e} or minimum separation {:e} outside tolerance {:e}",
                        again.max_edge_deviation, again.min_separation, again.tolerance
                    ));
                }
                if again.min_degree != placement.r || again.max_degree != placement.r {
                    problems.push(format!(
                        "degrees range over {}..={}, expected {}",
                        again.min_degree, again.max_degree, placement.r
                    ));
                }
                if !reproduces {
                    problems.push("stored report differs from the recomputed one".into());
                }
                Ok(Recheck {
                    kind: "plane",
                    reproduces,
                    passed: problems.is_empty(),
                    report: serde_json::to_value(&again)?,
                    problems,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::embed_k23_q3;
    use crate::Rational;

    #[test]
    fn exact_round_trip() {
        let e = embed_k23_q3(&Rational::one()).unwrap();
        let cert = CertificateFile::exact("embed", BTreeMap::new(), &e, None).unwrap();
        let text = cert.to_json().unwrap();
        let back = CertificateFile::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json().unwrap(), text);
        let check = back.recheck(false).unwrap();
        assert!(check.passed && check.reproduces);
    }

    #[test]
    fn tampered_coordinate_is_caught() {
        let e = embed_k23_q3(&Rational::one()).unwrap();
        let cert = CertificateFile::exact("embed", BTreeMap::new(), &e, None).unwrap();
        let text = cert.to_json().unwrap().replacen("\"2/3\"", "\"5/7\"", 1);
        let check = CertificateFile::from_json(&text).unwrap().recheck(false).unwrap();
        assert!(!check.passed);
        assert!(check.problems.iter().any(|p| p.contains("a2-b")));
    }

    #[test]
    fn wrong_schema_rejected() {
        let e = embed_k23_q3(&Rational::one()).unwrap();
        let cert = CertificateFile::exact("embed", BTreeMap::new(), &e, None).unwrap();
        let text = cert.to_json().unwrap().replace("\"schema\": \"1\"", "\"schema\": \"9\"");
        assert!(CertificateFile::from_json(&text).is_err());
    }
}
