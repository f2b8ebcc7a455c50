use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::recipe::{validate, Recipe, Value};
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/claims.json");

/// Claims whose status is fixed rather than decided by recomputation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum StatusOverride {
    /// Source data with no recomputation path; echoed as-is.
    Stored,
    /// Source statements disagree; recomputed but never counted as a failure.
    Disputed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Claim {
    pub id: String,
    pub paper_ref: String,
    #[serde(default)]
    pub description: String,
    pub expected: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status_override: Option<StatusOverride>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub claims: Vec<Claim>,
}

impl Manifest {
    /// Parses and validates a manifest: ids unique, every claim either has a
    /// recipe over known operations or is marked stored.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let manifest: Manifest = serde_json::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        let mut seen = BTreeSet::new();
        for claim in &manifest.claims {
            if claim.id.is_empty() || claim.id.chars().any(char::is_whitespace) {
                return Err(Error::Manifest(format!("claim id {:?} is empty or contains whitespace", claim.id)));
            }
            if !seen.insert(claim.id.as_str()) {
                return Err(Error::Manifest(format!("duplicate claim id {:?}", claim.id)));
            }
            match (&claim.recipe, claim.status_override) {
                (Some(recipe), _) => {
                    validate(recipe, 0).map_err(|e| Error::Manifest(format!("claim {:?}: {e}", claim.id)))?
                }
                (None, Some(StatusOverride::Stored)) => {}
                (None, _) => {
                    return Err(Error::Manifest(format!("claim {:?} has no recipe and is not stored", claim.id)))
                }
            }
        }
        Ok(manifest)
    }

    /// The manifest shipped with the crate.
    pub fn builtin() -> Self {
        Self::from_json_str(BUILTIN).expect("built-in manifest is valid")
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.claims.iter().map(|c| c.id.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses() {
        let m = Manifest::builtin();
        assert!(m.claims.len() >= 40);
    }

    #[test]
    fn rejects_duplicates_unknown_ops_and_bare_claims() {
        let dup = r#"{"claims":[
            {"id":"a","paper_ref":"x","expected":1,"recipe":{"op":"add","args":[1]}},
            {"id":"a","paper_ref":"x","expected":1,"recipe":{"op":"add","args":[1]}}]}"#;
        assert!(matches!(Manifest::from_json_str(dup), Err(Error::Manifest(_))));
        let unknown = r#"{"claims":[{"id":"a","paper_ref":"x","expected":1,"recipe":{"op":"nope"}}]}"#;
        assert!(Manifest::from_json_str(unknown).is_err());
        let bare = r#"{"claims":[{"id":"a","paper_ref":"x","expected":1}]}"#;
        assert!(Manifest::from_json_str(bare).is_err());
        let stored = r#"{"claims":[{"id":"a","paper_ref":"x","expected":1,"status_override":"STORED"}]}"#;
        assert!(Manifest::from_json_str(stored).is_ok());
        assert!(Manifest::from_json_str("{").is_err());
        assert!(Manifest::from_json_str(r#"{"claims":[],"extra":1}"#).is_err());
    }
}
