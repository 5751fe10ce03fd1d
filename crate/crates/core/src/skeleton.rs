//! The graph of a coronoid: vertices and edges of its hexagons, perimeters,
//! binary boundary codes and hole statistics.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::AbstractGraph;
use crate::hexgrid::{GridVertex, HexCoord};
use crate::hexsystem::HexSystem;
use crate::planemap::{Dart, PlaneMap};

/// Whether a vertex or edge is surrounded by hexagons of the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Label {
    Internal,
    Boundary,
}

/// Vertices and edges of all hexagons of a coronoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonGraph {
    system: HexSystem,
    vertices: Vec<GridVertex>,
    index: HashMap<GridVertex, usize>,
    vertex_labels: Vec<Label>,
    edges: Vec<(usize, usize)>,
    edge_labels: Vec<Label>,
    edge_set: HashSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// The skeleton of a coronoid.
pub fn skeleton(k: &HexSystem) -> Result<SkeletonGraph> {
    if k.is_empty() {
        return Err(Error::EmptySystem);
    }
    if !k.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(SkeletonGraph::build(k))
}

impl SkeletonGraph {
    fn build(k: &HexSystem) -> Self {
        let vset: BTreeSet<GridVertex> = k.iter().flat_map(|h| h.boundary_cycle()).collect();
        let vertices: Vec<GridVertex> = vset.into_iter().collect();
        let index: HashMap<GridVertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut eset = BTreeSet::new();
        for h in k.iter() {
            for e in h.boundary_edges() {
                let (a, b) = e.endpoints();
                let (i, j) = (index[&a], index[&b]);
                eset.insert((i.min(j), i.max(j)));
            }
        }
        let edges: Vec<(usize, usize)> = eset.into_iter().collect();
        let edge_labels: Vec<Label> = edges
            .iter()
            .map(|&(i, j)| {
                let e = crate::hexgrid::GridEdge::new(vertices[i], vertices[j]).expect("grid edge");
                if e.hexagons().iter().all(|h| k.contains(*h)) {
                    Label::Internal
                } else {
                    Label::Boundary
                }
            })
            .collect();
        let vertex_labels = vertices
            .iter()
            .map(|v| if v.hexagons().iter().all(|h| k.contains(*h)) { Label::Internal } else { Label::Boundary })
            .collect();
        let mut adj = vec![Vec::new(); vertices.len()];
        for &(i, j) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let edge_set = edges.iter().copied().collect();
        SkeletonGraph { system: k.clone(), vertices, index, vertex_labels, edges, edge_labels, edge_set, adj }
    }

    pub fn system(&self) -> &HexSystem {
        &self.system
    }

    /// Hexagons of the system, ascending.
    pub fn faces(&self) -> Vec<HexCoord> {
        self.system.iter().collect()
    }

    /// Grid vertices, ascending; vertex `i` of every derived graph is `vertices()[i]`.
    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, v: GridVertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn vertex_label(&self, i: usize) -> Label {
        self.vertex_labels[i]
    }

    /// Edges as sorted index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_label(&self, e: usize) -> Label {
        self.edge_labels[e]
    }

    pub fn has_edge(&self, u: GridVertex, v: GridVertex) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.edge_set.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }

    pub fn internal_vertex_count(&self) -> usize {
        self.vertex_labels.iter().filter(|&&l| l == Label::Internal).count()
    }

    pub fn to_graph(&self) -> AbstractGraph {
        AbstractGraph::new(self.vertices.len(), &self.edges).expect("skeleton is simple")
    }

    /// The natural plane embedding; vertex `i` is `vertices()[i]`.
    pub fn to_plane_map(&self) -> PlaneMap {
        let lists: Vec<Vec<usize>> = self
            .vertices
            .iter()
            .map(|&v| v.neighbors().into_iter().filter(|&w| self.has_edge(v, w)).map(|w| self.index[&w]).collect())
            .collect();
        PlaneMap::from_neighbor_lists(&lists).expect("skeleton rotation system")
    }

    /// Dart of `map` (from [`SkeletonGraph::to_plane_map`]) running along
    /// `p` backwards, so that the face bounded by `p` away from the system
    /// lies on its left.
    pub fn face_dart(&self, map: &PlaneMap, p: &Perimeter) -> Dart {
        let a = self.index[&p.cycle[1]];
        let b = self.index[&p.cycle[0]];
        map.dart_between(a, b).expect("perimeter edge is a skeleton edge")
    }

    /// Boundary cycles: the outer perimeter, then inner perimeters in hole order.
    ///
    /// Each cycle is oriented with the system on its left (outer
    /// counterclockwise, inner clockwise) and starts at its leftmost, then
    /// lowest, vertex.
    pub fn perimeters(&self) -> Vec<Perimeter> {
        let k = &self.system;
        let mut succ: HashMap<GridVertex, GridVertex> = HashMap::new();
        for h in k.iter() {
            let c = h.boundary_cycle();
            for i in 0..6 {
                let (a, b) = (c[i], c[(i + 1) % 6]);
                let e = crate::hexgrid::GridEdge::new(a, b).expect("hexagon edge");
                if !e.hexagons().iter().all(|x| k.contains(*x)) {
                    succ.insert(a, b);
                }
            }
        }
        let decomposition = k.complement_decomposition();
        let mut starts: Vec<GridVertex> = succ.keys().copied().collect();
        starts.sort_by(|a, b| a.cmp_leftmost(*b));
        let mut seen = HashSet::new();
        let mut cycles = Vec::new();
        for s in starts {
            if seen.contains(&s) {
                continue;
            }
            let mut cycle = vec![s];
            seen.insert(s);
            let mut v = succ[&s];
            while v != s {
                seen.insert(v);
                cycle.push(v);
                v = succ[&v];
            }
            cycles.push(cycle);
        }
        // the first cycle contains the leftmost boundary vertex
        let mut out: Vec<Perimeter> = Vec::with_capacity(cycles.len());
        for (i, cycle) in cycles.into_iter().enumerate() {
            let e = crate::hexgrid::GridEdge::new(cycle[0], cycle[1]).expect("perimeter edge");
            let outside = e.hexagons().into_iter().find(|h| !k.contains(*h)).expect("boundary edge");
            let (kind, hole) = if i == 0 {
                (PerimeterKind::Outer, None)
            } else {
                (PerimeterKind::Inner, decomposition.hole_of(outside))
            };
            out.push(Perimeter { cycle, kind, hole });
        }
        out.sort_by_key(|p| match p.kind {
            PerimeterKind::Outer => (0, 0),
            PerimeterKind::Inner => (1, p.hole.unwrap_or(usize::MAX)),
        });
        out
    }

    /// Binary boundary code of a perimeter.
    pub fn bbc(&self, p: &Perimeter) -> BBCode {
        BBCode { symbols: p.cycle.iter().map(|v| self.degree(self.index[v]) as u8).collect() }
    }

    pub fn to_export(&self) -> SkeletonExport {
        SkeletonExport {
            vertices: self
                .vertices
                .iter()
                .zip(&self.vertex_labels)
                .map(|(v, &label)| ExportVertex { q: v.q, r: v.r, t: v.t(), label })
                .collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            faces: self.system.iter().map(|h| [h.q, h.r]).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PerimeterKind {
    Outer,
    Inner,
}

/// A boundary cycle of a coronoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perimeter {
    /// Vertices in order, the system on the left.
    pub cycle: Vec<GridVertex>,
    pub kind: PerimeterKind,
    /// Index into the holes of the complement decomposition (inner perimeters).
    pub hole: Option<usize>,
}

impl Perimeter {
    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

/// JSON export of a skeleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonExport {
    pub vertices: Vec<ExportVertex>,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<[i32; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportVertex {
    pub q: i32,
    pub r: i32,
    pub t: u8,
    pub label: Label,
}

/// A cyclic word over `{2, 3}`: vertex degrees along a perimeter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BBCode {
    symbols: Vec<u8>,
}

impl BBCode {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if symbols.iter().any(|&s| s != 2 && s != 3) {
            return Err(Error::InvalidInput("binary boundary codes use only the symbols 2 and 3".into()));
        }
        Ok(BBCode { symbols })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn count_twos(&self) -> usize {
        self.symbols.iter().filter(|&&s| s == 2).count()
    }

    /// Lexicographically smallest word over all rotations of the word and its reversal.
    pub fn canonical(&self) -> BBCode {
        let n = self.symbols.len();
        let mut best = self.symbols.clone();
        let reversed: Vec<u8> = self.symbols.iter().rev().copied().collect();
        for word in [&self.symbols, &reversed] {
            for i in 0..n {
                let rotated: Vec<u8> = word[i..].iter().chain(&word[..i]).copied().collect();
                if rotated < best {
                    best = rotated;
                }
            }
        }
        BBCode { symbols: best }
    }

    /// Same cyclic word up to rotation and reversal.
    pub fn equivalent(&self, other: &BBCode) -> bool {
        self.canonical() == other.canonical()
    }

    /// Rotation of the word starting at its first `2`.
    pub fn from_first_two(&self) -> Result<BBCode> {
        let i = self.symbols.iter().position(|&s| s == 2).ok_or_else(|| self.too_few_twos())?;
        let mut symbols = self.symbols.clone();
        symbols.rotate_left(i);
        Ok(BBCode { symbols })
    }

    /// Run lengths `ℓ1, ..., ℓd` of `3`s in the word `2 3^ℓ1 2 3^ℓ2 ... 2 3^ℓd`,
    /// reading from the first `2`. Requires at least two `2`s.
    pub fn segments(&self) -> Result<Vec<usize>> {
        if self.count_twos() < 2 {
            return Err(self.too_few_twos());
        }
        let word = self.from_first_two()?;
        let mut out = Vec::new();
        for &s in &word.symbols {
            if s == 2 {
                out.push(0);
            } else {
                *out.last_mut().unwrap() += 1;
            }
        }
        Ok(out)
    }

    fn too_few_twos(&self) -> Error {
        Error::InvalidInput(format!("code {self} has fewer than two vertices of degree 2"))
    }
}

impl fmt::Display for BBCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for BBCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| match c {
                '2' => Ok(2),
                '3' => Ok(3),
                _ => Err(Error::InvalidInput(format!("unexpected symbol {c:?} in boundary code"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        BBCode::new(symbols)
    }
}

/// Vertex and hexagon counts of a benzenoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HoleStats {
    /// Hexagons.
    pub h: usize,
    /// Vertices.
    pub n: usize,
    /// Edges.
    pub m: usize,
    /// Internal vertices.
    pub n_internal: usize,
    /// Degree-3 vertices on the perimeter.
    pub nu: usize,
}

impl HoleStats {
    /// `ν = 2h − 2 − n_i`.
    pub fn internal_identity_holds(&self) -> bool {
        self.nu as i64 == 2 * self.h as i64 - 2 - self.n_internal as i64
    }

    /// `ν = n − 2h − 4`.
    pub fn vertex_identity_holds(&self) -> bool {
        self.nu as i64 == self.n as i64 - 2 * self.h as i64 - 4
    }

    /// `ν ≥ √(12h − 3) − 3`, checked as `(ν + 3)² ≥ 12h − 3`.
    pub fn bound_holds(&self) -> bool {
        let lhs = (self.nu as i64 + 3).pow(2);
        lhs >= 12 * self.h as i64 - 3
    }
}

/// Counts for a benzenoid, asserting the perimeter identities.
pub fn hole_stats(hole: &HexSystem) -> Result<HoleStats> {
    if !hole.is_benzenoid() {
        return Err(Error::NotBenzenoid);
    }
    let g = skeleton(hole)?;
    let n_internal = g.internal_vertex_count();
    let nu = (0..g.vertex_count()).filter(|&i| g.degree(i) == 3 && g.vertex_label(i) == Label::Boundary).count();
    let stats = HoleStats { h: hole.len(), n: g.vertex_count(), m: g.edge_count(), n_internal, nu };
    if !(stats.internal_identity_holds() && stats.vertex_identity_holds() && stats.bound_holds()) {
        return Err(Error::Internal(format!("perimeter identities fail for {stats:?}")));
    }
    Ok(stats)
}
