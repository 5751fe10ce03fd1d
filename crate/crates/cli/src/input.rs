//! Reading input files, with the format taken from the file name.

use std::fs;
use std::path::Path;

use coronoid::altan::AdmissibleStructure;
use coronoid::graph::{AbstractGraph, EdgeListError};
use coronoid::hexsystem::{HexParseError, HexSystem};
use coronoid::planemap::{MapDocument, MapParseError, PatchDocument, PatchSet};
use coronoid::skeleton::skeleton;

use crate::CliError;

pub enum Input {
    Hex(HexSystem),
    Map(MapDocument),
    Patch(PatchDocument),
    Edges(AbstractGraph),
}

pub fn load(path: &Path) -> Result<Input, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let name = path.file_name().and_then(|s| s.to_str()).unwrap_or_default();
    if name.ends_with(".hex.json") {
        HexSystem::from_json(&text).map(Input::Hex).map_err(|e| match e {
            HexParseError::Syntax(s) => CliError::Input(s),
            HexParseError::Invalid(e) => CliError::Domain(e),
        })
    } else if name.ends_with(".map.json") {
        let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| CliError::Input(e.to_string()))?;
        if value.get("map").is_some() {
            PatchDocument::parse(&text).map(Input::Patch).map_err(map_error)
        } else {
            MapDocument::parse(&text).map(Input::Map).map_err(map_error)
        }
    } else if name.ends_with(".edges") {
        AbstractGraph::parse_edge_list(&text).map(Input::Edges).map_err(|e| match e {
            EdgeListError::Invalid(e) => CliError::Domain(e),
            other => CliError::Input(other.to_string()),
        })
    } else {
        Err(CliError::Input(format!("{name}: expected a .hex.json, .map.json or .edges file")))
    }
}

fn map_error(e: MapParseError) -> CliError {
    match e {
        MapParseError::Syntax(s) => CliError::Input(s),
        MapParseError::Invalid(e) => CliError::Domain(e),
    }
}

impl Input {
    pub fn hex(&self) -> Result<&HexSystem, CliError> {
        match self {
            Input::Hex(k) => Ok(k),
            _ => Err(wrong_kind("a hexagonal system (.hex.json)")),
        }
    }

    pub fn graph(&self) -> Result<AbstractGraph, CliError> {
        Ok(match self {
            Input::Hex(k) => skeleton(k)?.to_graph(),
            Input::Map(m) => m.to_map()?.to_graph()?,
            Input::Patch(p) => p.to_patch()?.skeleton_graph(),
            Input::Edges(g) => g.clone(),
        })
    }

    pub fn patch(&self) -> Result<Option<PatchSet>, CliError> {
        match self {
            Input::Patch(p) => Ok(Some(p.to_patch()?)),
            _ => Ok(None),
        }
    }

    pub fn structure(&self) -> Result<AdmissibleStructure, CliError> {
        match self {
            Input::Hex(k) => Ok(AdmissibleStructure::from_coronoid(k)?),
            Input::Map(m) => {
                let cycles = m
                    .cycles
                    .as_ref()
                    .ok_or_else(|| coronoid::Error::InvalidInput("map document lists no cycles".into()))?;
                Ok(AdmissibleStructure::from_vertex_cycles(m.to_map()?, cycles)?)
            }
            Input::Patch(p) => Ok(AdmissibleStructure::from_patch(&p.to_patch()?)?),
            Input::Edges(_) => Err(wrong_kind("a map with cycles, a patch or a hexagonal system")),
        }
    }
}

fn wrong_kind(expected: &str) -> CliError {
    CliError::Domain(coronoid::Error::InvalidInput(format!("this command needs {expected}")))
}
