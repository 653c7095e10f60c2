//! JSON complex files: `{"n": .., "facets": [[..], ..], "name": .., "embed_dim": ..}`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// On-disk form of a complex. Vertices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embed_dim: Option<usize>,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for ComplexFile {
    fn from(c: &SimplicialComplex) -> Self {
        ComplexFile {
            name: c.name.clone(),
            n: c.n,
            embed_dim: c.embed_dim,
            facets: c.facets.iter().map(|f| f.to_vec()).collect(),
        }
    }
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = Error;

    fn try_from(file: ComplexFile) -> Result<Self> {
        let c = if file.facets.is_empty() {
            SimplicialComplex::void(file.n)?
        } else {
            SimplicialComplex::from_facets(file.n, &file.facets)?
        };
        Ok(SimplicialComplex { name: file.name, embed_dim: file.embed_dim, ..c })
    }
}

impl SimplicialComplex {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        SimplicialComplex::try_from(file)
    }

    /// Canonical JSON text: facets in canonical order, one per line.
    pub fn to_json_string(&self) -> String {
        let file = ComplexFile::from(self);
        let mut out = String::from("{\n");
        if let Some(name) = &file.name {
            out.push_str(&format!("  \"name\": {},\n", serde_json::to_string(name).expect("string")));
        }
        out.push_str(&format!("  \"n\": {},\n", file.n));
        if let Some(e) = file.embed_dim {
            out.push_str(&format!("  \"embed_dim\": {e},\n"));
        }
        out.push_str("  \"facets\": [");
        for (i, f) in file.facets.iter().enumerate() {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            out.push_str(&serde_json::to_string(f).expect("vertex list"));
        }
        if !file.facets.is_empty() {
            out.push_str("\n  ");
        }
        out.push_str("]\n}\n");
        out
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&fs::read_to_string(path)?)
    }

    pub fn store(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_json_string())?;
        Ok(())
    }

    /// Facet vertex lists in canonical order.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f: &Face| f.to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_file() {
        let c = SimplicialComplex::simplex_skeleton(5, 1).unwrap().with_embed_dim(Some(4));
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k5.json");
        c.store(&path).unwrap();
        let back = SimplicialComplex::load(&path).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.name(), c.name());
        assert_eq!(back.embed_dim(), Some(4));
        assert_eq!(back.to_json_string(), c.to_json_string());
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = SimplicialComplex::from_json_str("{\n  \"n\": 3,\n  \"facets\": [[0, 1],\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 4, .. }), "{err}");
        let err = SimplicialComplex::from_json_str(r#"{"n": 3, "facets": [[0, 1]], "bogus": 1}"#).unwrap_err();
        assert!(err.to_string().contains("bogus"), "{err}");
    }

    #[test]
    fn out_of_range_vertex_is_reported_with_facet_index() {
        let err = SimplicialComplex::from_json_str(r#"{"n": 3, "facets": [[0, 1], [1, 3]]}"#).unwrap_err();
        assert_eq!(err.to_string(), "facets[1]: vertex 3 is out of range for n = 3");
    }

    #[test]
    fn empty_facet_list_is_the_void_complex() {
        let c = SimplicialComplex::from_json_str(r#"{"n": 2, "facets": []}"#).unwrap();
        assert!(c.is_void());
        assert_eq!(SimplicialComplex::from_json_str(&c.to_json_string()).unwrap(), c);
    }
}
