//! JSON forms of maps and patches.

use serde::{Deserialize, Serialize};

use super::{PatchSet, PlaneCubicMap, PlaneMap};
use crate::error::{Error, Result};

/// `{"rotations": [[dart, ...], ...], "theta": [[d1, d2], ...], "outer": face}`.
///
/// `cycles` (vertex lists) and `tags` are optional extras used by altan input
/// and output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapDocument {
    pub rotations: Vec<Vec<usize>>,
    pub theta: Vec<[usize; 2]>,
    #[serde(default)]
    pub outer: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<serde_json::Value>,
}

/// `{"map": {...}, "faces": [face, ...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PatchDocument {
    pub map: MapDocument,
    pub faces: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MapParseError {
    #[error("malformed map document: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(Error),
}

impl MapDocument {
    pub fn from_map(map: &PlaneMap, outer: usize) -> Self {
        let (rotations, theta) = map.to_rotations();
        MapDocument {
            rotations,
            theta: theta.into_iter().map(|(a, b)| [a, b]).collect(),
            outer,
            cycles: None,
            tags: None,
        }
    }

    pub fn from_cubic(map: &PlaneCubicMap) -> Self {
        MapDocument::from_map(map.map(), map.outer_face())
    }

    pub fn to_map(&self) -> Result<PlaneMap> {
        let theta: Vec<(usize, usize)> = self.theta.iter().map(|p| (p[0], p[1])).collect();
        PlaneMap::from_rotations(&self.rotations, &theta)
    }

    pub fn to_cubic(&self) -> Result<PlaneCubicMap> {
        PlaneCubicMap::new(self.to_map()?, self.outer)
    }

    pub fn parse(text: &str) -> std::result::Result<Self, MapParseError> {
        serde_json::from_str(text).map_err(|e| MapParseError::Syntax(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("map documents serialise")
    }
}

impl PatchDocument {
    pub fn from_patch(p: &PatchSet) -> Self {
        PatchDocument { map: MapDocument::from_cubic(p.map()), faces: p.faces().iter().copied().collect() }
    }

    pub fn to_patch(&self) -> Result<PatchSet> {
        PatchSet::new(self.map.to_cubic()?, self.faces.iter().copied())
    }

    pub fn parse(text: &str) -> std::result::Result<Self, MapParseError> {
        serde_json::from_str(text).map_err(|e| MapParseError::Syntax(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("patch documents serialise")
    }
}
