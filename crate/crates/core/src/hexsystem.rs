//! Finite hexagonal systems: connectivity, holes, closures and classification.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hexgrid::{canonical_form, GridVertex, HexCoord, Isometry};

/// A finite set of hexagons.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HexSystem {
    cells: BTreeSet<HexCoord>,
}

impl HexSystem {
    pub fn new() -> Self {
        HexSystem::default()
    }

    pub fn single(h: HexCoord) -> Self {
        [h].into_iter().collect()
    }

    /// Builds a system from `(q, r)` pairs, rejecting repeated cells.
    pub fn from_pairs(pairs: &[(i32, i32)]) -> Result<Self> {
        let mut cells = BTreeSet::new();
        for &(q, r) in pairs {
            if !cells.insert(HexCoord::new(q, r)) {
                return Err(Error::DuplicateHexagon(q, r));
            }
        }
        Ok(HexSystem { cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, h: HexCoord) -> bool {
        self.cells.contains(&h)
    }

    pub fn insert(&mut self, h: HexCoord) -> bool {
        self.cells.insert(h)
    }

    pub fn remove(&mut self, h: HexCoord) -> bool {
        self.cells.remove(&h)
    }

    /// Cells in ascending `(q, r)` order.
    pub fn iter(&self) -> impl Iterator<Item = HexCoord> + '_ {
        self.cells.iter().copied()
    }

    pub fn cells(&self) -> &BTreeSet<HexCoord> {
        &self.cells
    }

    pub fn min_cell(&self) -> Option<HexCoord> {
        self.cells.first().copied()
    }

    pub fn union(&self, other: &HexSystem) -> HexSystem {
        self.cells.union(&other.cells).copied().collect()
    }

    pub fn intersection(&self, other: &HexSystem) -> HexSystem {
        self.cells.intersection(&other.cells).copied().collect()
    }

    pub fn difference(&self, other: &HexSystem) -> HexSystem {
        self.cells.difference(&other.cells).copied().collect()
    }

    pub fn is_subset(&self, other: &HexSystem) -> bool {
        self.cells.is_subset(&other.cells)
    }

    /// Neighbours of `h` inside the system.
    pub fn neighbors_in(&self, h: HexCoord) -> impl Iterator<Item = HexCoord> + '_ {
        h.neighbors().into_iter().filter(move |n| self.contains(*n))
    }

    pub fn apply(&self, iso: Isometry) -> HexSystem {
        self.iter().map(|h| iso.apply(h)).collect()
    }

    pub fn translate(&self, dq: i32, dr: i32) -> HexSystem {
        self.iter().map(|h| h.offset(dq, dr)).collect()
    }

    /// Inclusive axial bounding box `(qmin, qmax, rmin, rmax)`.
    pub fn bounding_box(&self) -> Option<(i32, i32, i32, i32)> {
        let first = self.min_cell()?;
        let mut b = (first.q, first.q, first.r, first.r);
        for h in self.iter() {
            b.0 = b.0.min(h.q);
            b.1 = b.1.max(h.q);
            b.2 = b.2.min(h.r);
            b.3 = b.3.max(h.r);
        }
        Some(b)
    }

    /// Partition into connected components, ordered by smallest cell.
    pub fn connected_components(&self) -> Vec<HexSystem> {
        components_of(&self.cells, |h| self.contains(h))
    }

    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.connected_components().len() == 1
    }

    /// A non-empty connected system.
    pub fn is_coronoid(&self) -> bool {
        self.is_connected()
    }

    pub fn is_benzenoid(&self) -> bool {
        self.is_connected() && self.complement_decomposition().d() == 0
    }

    /// Finite components of the complement and a witness of the infinite one.
    pub fn complement_decomposition(&self) -> ComplementDecomposition {
        let Some((q0, q1, r0, r1)) = self.bounding_box() else {
            return ComplementDecomposition { holes: Vec::new(), exterior_witness: HexCoord::ORIGIN };
        };
        let (q0, q1, r0, r1) = (q0 - 1, q1 + 1, r0 - 1, r1 + 1);
        let in_box = |h: HexCoord| h.q >= q0 && h.q <= q1 && h.r >= r0 && h.r <= r1;
        let free: BTreeSet<HexCoord> = (q0..=q1)
            .flat_map(|q| (r0..=r1).map(move |r| HexCoord::new(q, r)))
            .filter(|h| !self.contains(*h))
            .collect();
        let comps = components_of(&free, |h| in_box(h) && !self.contains(h));
        let on_padding = |h: HexCoord| h.q == q0 || h.q == q1 || h.r == r0 || h.r == r1;
        let holes = comps.into_iter().filter(|c| !c.iter().any(on_padding)).collect();
        ComplementDecomposition { holes, exterior_witness: HexCoord::new(q0, r0) }
    }

    /// The system together with all of its holes.
    pub fn benzenoid_closure(&self) -> Result<HexSystem> {
        self.require_coronoid()?;
        let mut out = self.clone();
        for hole in self.complement_decomposition().holes {
            out.cells.extend(hole.cells);
        }
        Ok(out)
    }

    /// The system together with its single-hexagon holes.
    pub fn nondeg_closure(&self) -> Result<HexSystem> {
        self.require_coronoid()?;
        let mut out = self.clone();
        for hole in self.complement_decomposition().holes {
            if hole.len() == 1 {
                out.cells.extend(hole.cells);
            }
        }
        Ok(out)
    }

    pub fn is_degenerate(&self) -> bool {
        self.complement_decomposition().holes.iter().any(|h| h.len() == 1)
    }

    /// Cells whose six neighbours all belong to the system.
    pub fn internal_hexagons(&self) -> Vec<HexCoord> {
        self.iter().filter(|&h| self.neighbors_in(h).count() == 6).collect()
    }

    /// Grid vertices all three of whose hexagons belong to the system.
    pub fn internal_vertices(&self) -> Vec<GridVertex> {
        let mut seen = BTreeSet::new();
        for h in self.iter() {
            for v in h.boundary_cycle() {
                if v.hexagons().iter().all(|x| self.contains(*x)) {
                    seen.insert(v);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn classify(&self) -> Result<SystemClass> {
        if self.is_empty() {
            return Err(Error::EmptySystem);
        }
        let degeneracy = if self.is_degenerate() { Degeneracy::Degenerate } else { Degeneracy::NonDegenerate };
        if !self.is_connected() {
            return Ok(SystemClass { kind: SystemKind::Disconnected, degeneracy, condensation: None });
        }
        if self.complement_decomposition().d() > 0 {
            return Ok(SystemClass { kind: SystemKind::ProperCoronoid, degeneracy, condensation: None });
        }
        let condensation = if self.internal_vertices().is_empty() {
            Condensation::Catacondensed
        } else if !self.internal_hexagons().is_empty() {
            Condensation::Corpulent
        } else {
            Condensation::Gaunt
        };
        Ok(SystemClass { kind: SystemKind::Benzenoid, degeneracy, condensation: Some(condensation) })
    }

    /// Connected components of `A ∩ B` for benzenoids `A` and `B`.
    pub fn intersect_benzenoids(a: &HexSystem, b: &HexSystem) -> Result<Vec<HexSystem>> {
        if !a.is_benzenoid() || !b.is_benzenoid() {
            return Err(Error::NotBenzenoid);
        }
        let parts = a.intersection(b).connected_components();
        if let Some(bad) = parts.iter().find(|p| !p.is_benzenoid()) {
            return Err(Error::Internal(format!(
                "component at {} of a benzenoid intersection has a hole",
                bad.min_cell().unwrap()
            )));
        }
        Ok(parts)
    }

    pub fn canonical_form(&self) -> Result<Vec<HexCoord>> {
        canonical_form(&self.cells)
    }

    pub fn is_equivalent(&self, other: &HexSystem) -> bool {
        match (self.canonical_form(), other.canonical_form()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    fn require_coronoid(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptySystem)
        } else if !self.is_connected() {
            Err(Error::NotConnected)
        } else {
            Ok(())
        }
    }

    pub fn to_document(&self) -> HexDocument {
        HexDocument { hexes: self.iter().map(|h| [h.q, h.r]).collect() }
    }

    pub fn from_document(doc: &HexDocument) -> Result<Self> {
        let pairs: Vec<(i32, i32)> = doc.hexes.iter().map(|p| (p[0], p[1])).collect();
        HexSystem::from_pairs(&pairs)
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, HexParseError> {
        let doc: HexDocument = serde_json::from_str(text).map_err(|e| HexParseError::Syntax(e.to_string()))?;
        HexSystem::from_document(&doc).map_err(HexParseError::Invalid)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("serialising integers cannot fail")
    }
}

impl FromIterator<HexCoord> for HexSystem {
    fn from_iter<T: IntoIterator<Item = HexCoord>>(iter: T) -> Self {
        HexSystem { cells: iter.into_iter().collect() }
    }
}

impl Extend<HexCoord> for HexSystem {
    fn extend<T: IntoIterator<Item = HexCoord>>(&mut self, iter: T) {
        self.cells.extend(iter)
    }
}

impl fmt::Display for HexSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, h) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, "}}")
    }
}

/// JSON form `{"hexes": [[q, r], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HexDocument {
    pub hexes: Vec<[i32; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HexParseError {
    #[error("malformed hexagon document: {0}")]
    Syntax(String),
    #[error(transparent)]
    Invalid(Error),
}

fn components_of(cells: &BTreeSet<HexCoord>, member: impl Fn(HexCoord) -> bool) -> Vec<HexSystem> {
    let mut seen: HashSet<HexCoord> = HashSet::with_capacity(cells.len());
    let mut out = Vec::new();
    for &start in cells {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(h) = queue.pop_front() {
            for n in h.neighbors() {
                if member(n) && seen.insert(n) {
                    comp.insert(n);
                    queue.push_back(n);
                }
            }
        }
        out.push(HexSystem { cells: comp });
    }
    out
}

/// Finite components of a complement, ordered by smallest cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementDecomposition {
    pub holes: Vec<HexSystem>,
    pub exterior_witness: HexCoord,
}

impl ComplementDecomposition {
    /// Number of finite components.
    pub fn d(&self) -> usize {
        self.holes.len()
    }

    /// Index of the hole containing `h`, if any.
    pub fn hole_of(&self, h: HexCoord) -> Option<usize> {
        self.holes.iter().position(|hole| hole.contains(h))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SystemKind {
    Benzenoid,
    ProperCoronoid,
    Disconnected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Degeneracy {
    NonDegenerate,
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Condensation {
    Catacondensed,
    Gaunt,
    Corpulent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SystemClass {
    pub kind: SystemKind,
    pub degeneracy: Degeneracy,
    pub condensation: Option<Condensation>,
}
