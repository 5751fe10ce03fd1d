//! Plane graphs as rotation systems.
//!
//! A map stores darts (directed half-edges). Each dart has an origin vertex,
//! a twin pointing the other way, and a counterclockwise successor and
//! predecessor in the rotation around its origin. Faces are traced with the
//! face on the left: the dart following `d` along its face is
//! `prev(twin(d))`, so bounded faces are walked counterclockwise.

mod completion;
mod document;
mod patch;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

pub use completion::{bipartite_cubic_completion, cubic_completion, CompletionStep};
pub use document::{MapDocument, MapParseError, PatchDocument};
pub use patch::{complement_components, patch_components, PatchPerimeter, PatchSet, PreGraph};

use crate::error::{Error, Result};
use crate::graph::AbstractGraph;

pub type Dart = usize;

const NONE: usize = usize::MAX;

/// A plane graph given by a rotation system.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneMap {
    origin: Vec<usize>,
    twin: Vec<Dart>,
    next: Vec<Dart>,
    prev: Vec<Dart>,
    first: Vec<Dart>,
}

impl PlaneMap {
    pub fn new() -> Self {
        PlaneMap::default()
    }

    pub fn with_vertices(n: usize) -> Self {
        PlaneMap { first: vec![NONE; n], ..PlaneMap::default() }
    }

    /// Builds a map from per-vertex neighbour lists in counterclockwise order.
    pub fn from_neighbor_lists(lists: &[Vec<usize>]) -> Result<Self> {
        let n = lists.len();
        let mut map = PlaneMap::with_vertices(n);
        let mut dart_of: HashMap<(usize, usize), Dart> = HashMap::new();
        for (u, list) in lists.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(Error::MalformedMap(format!("neighbour {v} of {u} out of range")));
                }
                if v == u {
                    return Err(Error::NotSimple(format!("loop at {u}")));
                }
                let d = map.origin.len();
                map.origin.push(u);
                map.twin.push(NONE);
                map.next.push(NONE);
                map.prev.push(NONE);
                if dart_of.insert((u, v), d).is_some() {
                    return Err(Error::NotSimple(format!("repeated edge ({u}, {v})")));
                }
            }
        }
        for (&(u, v), &d) in &dart_of {
            let t = *dart_of
                .get(&(v, u))
                .ok_or_else(|| Error::MalformedMap(format!("{v} is not listed as a neighbour of {u}'s neighbour")))?;
            map.twin[d] = t;
        }
        for (u, list) in lists.iter().enumerate() {
            let darts: Vec<Dart> = list.iter().map(|&v| dart_of[&(u, v)]).collect();
            map.link_rotation(u, &darts);
        }
        Ok(map)
    }

    /// Builds a map from explicit rotations (dart ids per vertex) and twin pairs.
    pub fn from_rotations(rotations: &[Vec<Dart>], theta: &[(Dart, Dart)]) -> Result<Self> {
        let dart_count: usize = rotations.iter().map(Vec::len).sum();
        let mut origin = vec![NONE; dart_count];
        for (v, rot) in rotations.iter().enumerate() {
            for &d in rot {
                if d >= dart_count {
                    return Err(Error::MalformedMap(format!("dart {d} out of range 0..{dart_count}")));
                }
                if origin[d] != NONE {
                    return Err(Error::MalformedMap(format!("dart {d} appears in two rotations")));
                }
                origin[d] = v;
            }
        }
        let mut twin = vec![NONE; dart_count];
        for &(a, b) in theta {
            if a >= dart_count || b >= dart_count || a == b {
                return Err(Error::MalformedMap(format!("invalid dart pair ({a}, {b})")));
            }
            if twin[a] != NONE || twin[b] != NONE {
                return Err(Error::MalformedMap(format!("dart pair ({a}, {b}) reuses a dart")));
            }
            twin[a] = b;
            twin[b] = a;
        }
        if let Some(d) = twin.iter().position(|&t| t == NONE) {
            return Err(Error::MalformedMap(format!("dart {d} has no partner")));
        }
        let mut map = PlaneMap {
            origin,
            twin,
            next: vec![NONE; dart_count],
            prev: vec![NONE; dart_count],
            first: vec![NONE; rotations.len()],
        };
        for (v, rot) in rotations.iter().enumerate() {
            map.link_rotation(v, rot);
        }
        Ok(map)
    }

    /// Rotations and twin pairs, the inverse of [`PlaneMap::from_rotations`].
    pub fn to_rotations(&self) -> (Vec<Vec<Dart>>, Vec<(Dart, Dart)>) {
        let rotations = (0..self.vertex_count()).map(|v| self.darts_at(v)).collect();
        let theta = (0..self.dart_count()).filter(|&d| d < self.twin[d]).map(|d| (d, self.twin[d])).collect();
        (rotations, theta)
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn origin(&self, d: Dart) -> usize {
        self.origin[d]
    }

    pub fn head(&self, d: Dart) -> usize {
        self.origin[self.twin[d]]
    }

    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d]
    }

    /// Counterclockwise successor around the origin.
    pub fn next_ccw(&self, d: Dart) -> Dart {
        self.next[d]
    }

    /// Counterclockwise predecessor around the origin.
    pub fn prev_ccw(&self, d: Dart) -> Dart {
        self.prev[d]
    }

    /// Next dart along the face on the left of `d`.
    pub fn face_next(&self, d: Dart) -> Dart {
        self.prev[self.twin[d]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.darts_at(v).len()
    }

    /// Darts leaving `v` in counterclockwise order.
    pub fn darts_at(&self, v: usize) -> Vec<Dart> {
        let mut out = Vec::new();
        let start = self.first[v];
        if start == NONE {
            return out;
        }
        let mut d = start;
        loop {
            out.push(d);
            d = self.next[d];
            if d == start {
                break;
            }
        }
        out
    }

    /// Dart from `u` to `v`, if the edge exists.
    pub fn dart_between(&self, u: usize, v: usize) -> Option<Dart> {
        self.darts_at(u).into_iter().find(|&d| self.head(d) == v)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.first.push(NONE);
        self.first.len() - 1
    }

    /// Creates the two darts of a new edge without placing them in rotations.
    fn new_edge_raw(&mut self, u: usize, v: usize) -> (Dart, Dart) {
        let d = self.origin.len();
        self.origin.extend([u, v]);
        self.twin.extend([d + 1, d]);
        self.next.extend([NONE, NONE]);
        self.prev.extend([NONE, NONE]);
        (d, d + 1)
    }

    /// Sets the rotation at `v` to exactly `darts` (counterclockwise).
    fn link_rotation(&mut self, v: usize, darts: &[Dart]) {
        let k = darts.len();
        for i in 0..k {
            let d = darts[i];
            self.origin[d] = v;
            self.next[d] = darts[(i + 1) % k];
            self.prev[d] = darts[(i + k - 1) % k];
        }
        self.first[v] = darts.first().copied().unwrap_or(NONE);
    }

    /// Places the detached dart `d` at `v`, counterclockwise right after `anchor`
    /// (or as the only dart when `anchor` is `None`).
    fn place(&mut self, d: Dart, v: usize, anchor: Option<Dart>) -> Result<()> {
        self.origin[d] = v;
        match anchor {
            None => {
                if self.first[v] != NONE {
                    return Err(Error::MalformedMap(format!("vertex {v} is not isolated")));
                }
                self.next[d] = d;
                self.prev[d] = d;
                self.first[v] = d;
            }
            Some(a) => {
                if self.origin[a] != v {
                    return Err(Error::MalformedMap(format!("anchor dart {a} does not leave {v}")));
                }
                let b = self.next[a];
                self.next[a] = d;
                self.prev[d] = a;
                self.next[d] = b;
                self.prev[b] = d;
            }
        }
        Ok(())
    }

    /// Removes `d` from the rotation at its origin.
    fn detach(&mut self, d: Dart) {
        let v = self.origin[d];
        let (p, n) = (self.prev[d], self.next[d]);
        if n == d {
            self.first[v] = NONE;
        } else {
            self.next[p] = n;
            self.prev[n] = p;
            if self.first[v] == d {
                self.first[v] = n;
            }
        }
        self.next[d] = NONE;
        self.prev[d] = NONE;
    }

    /// Adds an edge `u -> v`. Each new dart goes counterclockwise right after
    /// the given anchor dart at its endpoint; `None` requires an isolated vertex.
    /// Returns the dart leaving `u`.
    pub fn add_edge(&mut self, u: usize, anchor_u: Option<Dart>, v: usize, anchor_v: Option<Dart>) -> Result<Dart> {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return Err(Error::MalformedMap("edge endpoint out of range".into()));
        }
        let (du, dv) = self.new_edge_raw(u, v);
        self.place(du, u, anchor_u)?;
        self.place(dv, v, anchor_v)?;
        Ok(du)
    }

    /// Moves dart `d` (keeping its twin) to vertex `v`, right after `anchor`.
    pub fn move_dart(&mut self, d: Dart, v: usize, anchor: Option<Dart>) -> Result<()> {
        self.detach(d);
        self.place(d, v, anchor)
    }

    /// Splits the edge of `d` with a new vertex and returns that vertex.
    /// Afterwards `d` ends at the new vertex.
    pub fn subdivide(&mut self, d: Dart) -> usize {
        let t = self.twin[d];
        let w = self.add_vertex();
        let (a, b) = self.new_edge_raw(w, w);
        // a: w -> origin(d), twin of d; b: w -> origin(t), twin of t
        self.twin[d] = a;
        self.twin[a] = d;
        self.twin[t] = b;
        self.twin[b] = t;
        self.link_rotation(w, &[a, b]);
        w
    }

    /// Corner of the face on the left of `d_in` at its head: a dart inserted
    /// right after the returned anchor lies inside that face.
    pub fn corner_anchor(&self, d_in: Dart) -> Dart {
        self.face_next(d_in)
    }

    /// Face structure by face tracing.
    pub fn faces(&self) -> Faces {
        let mut face_of = vec![NONE; self.dart_count()];
        let mut walks = Vec::new();
        for s in 0..self.dart_count() {
            if face_of[s] != NONE {
                continue;
            }
            let f = walks.len();
            let mut walk = Vec::new();
            let mut d = s;
            while face_of[d] == NONE {
                face_of[d] = f;
                walk.push(d);
                d = self.face_next(d);
            }
            walks.push(walk);
        }
        Faces { face_of, walks, twin: self.twin.clone() }
    }

    /// `V - E + F`, which equals 2 for a connected plane map.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces().count() as i64
    }

    /// Underlying simple graph.
    pub fn to_graph(&self) -> Result<AbstractGraph> {
        let edges: Vec<(usize, usize)> =
            (0..self.dart_count()).filter(|&d| d < self.twin[d]).map(|d| (self.origin[d], self.head(d))).collect();
        AbstractGraph::new(self.vertex_count(), &edges)
    }

    /// Checks that the map is a connected simple plane graph.
    pub fn validate_plane(&self) -> Result<AbstractGraph> {
        let g = self.to_graph()?;
        if !g.is_connected() {
            return Err(Error::GraphNotConnected);
        }
        let chi = self.euler_characteristic();
        if chi != 2 {
            return Err(Error::NotPlanar(chi));
        }
        Ok(g)
    }

    /// Orientation-preserving canonical code: equal codes mean the maps are
    /// isomorphic by a map isomorphism that preserves rotations.
    pub fn canonical_code(&self) -> Vec<usize> {
        (0..self.dart_count()).map(|r| self.code_from(r).0).min().unwrap_or_default()
    }

    /// Edge list of the map relabelled by its canonical numbering.
    pub fn canonical_edge_list(&self) -> Vec<(usize, usize)> {
        let Some((_, labels)) = (0..self.dart_count()).map(|r| self.code_from(r)).min_by(|a, b| a.0.cmp(&b.0)) else {
            return Vec::new();
        };
        let mut edges: Vec<(usize, usize)> = (0..self.dart_count())
            .filter(|&d| d < self.twin[d])
            .map(|d| {
                let (a, b) = (labels[self.origin[d]], labels[self.head(d)]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    fn code_from(&self, root: Dart) -> (Vec<usize>, Vec<usize>) {
        let mut label = vec![NONE; self.vertex_count()];
        let mut entry = vec![NONE; self.vertex_count()];
        let mut order = Vec::new();
        let v0 = self.origin[root];
        label[v0] = 0;
        entry[v0] = root;
        order.push(v0);
        let mut code = Vec::with_capacity(self.dart_count() + self.vertex_count());
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            let start = entry[v];
            let mut d = start;
            let mut deg = 0;
            let mut row = Vec::new();
            loop {
                let w = self.head(d);
                if label[w] == NONE {
                    label[w] = order.len();
                    entry[w] = self.twin[d];
                    order.push(w);
                }
                row.push(label[w]);
                deg += 1;
                d = self.next[d];
                if d == start {
                    break;
                }
            }
            code.push(deg);
            code.extend(row);
        }
        // unreachable vertices make the map disconnected; mark them so codes differ
        code.push(self.vertex_count() - order.len());
        (code, label)
    }
}

/// Faces of a map and the dart-to-face assignment.
///
/// Face ids follow the order of each face's smallest dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Faces {
    face_of: Vec<usize>,
    walks: Vec<Vec<Dart>>,
    twin: Vec<Dart>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.walks.len()
    }

    /// Face on the left of `d`.
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// Boundary walk of face `f`, starting at its smallest dart.
    pub fn walk(&self, f: usize) -> &[Dart] {
        &self.walks[f]
    }

    pub fn walks(&self) -> &[Vec<Dart>] {
        &self.walks
    }

    pub fn degree(&self, f: usize) -> usize {
        self.walks[f].len()
    }

    /// Shared-edge counts between distinct faces, keyed by `(f, g)` with `f < g`.
    pub fn adjacency(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for d in 0..self.face_of.len() {
            let t = self.twin[d];
            let (f, g) = (self.face_of[d], self.face_of[t]);
            if d < t && f != g {
                *out.entry((f.min(g), f.max(g))).or_insert(0) += 1;
            }
        }
        out
    }

    /// Faces sharing at least one edge with `f`, excluding `f` itself.
    pub fn neighbors(&self, f: usize) -> BTreeSet<usize> {
        self.walks[f].iter().map(|&d| self.face_of[self.twin[d]]).filter(|&g| g != f).collect()
    }

    /// A face whose boundary walk traverses some edge in both directions.
    pub fn is_ill_behaved(&self, f: usize) -> bool {
        self.walks[f].iter().any(|&d| self.face_of[self.twin[d]] == f)
    }

    /// Connected components of the face set `set` under face adjacency,
    /// each sorted, ordered by smallest face id.
    pub fn components(&self, set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in set {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = BTreeSet::from([s]);
            let mut queue = VecDeque::from([s]);
            while let Some(f) = queue.pop_front() {
                for g in self.neighbors(f) {
                    if set.contains(&g) && seen.insert(g) {
                        comp.insert(g);
                        queue.push_back(g);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

/// A connected simple plane cubic graph with a designated outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCubicMap {
    map: PlaneMap,
    outer: Dart,
}

impl PlaneCubicMap {
    /// Validates the map and records `outer_face` (a face id of `map.faces()`).
    pub fn new(map: PlaneMap, outer_face: usize) -> Result<Self> {
        if (0..map.vertex_count()).any(|v| map.degree(v) != 3) {
            return Err(Error::NotCubic);
        }
        map.validate_plane()?;
        let faces = map.faces();
        if outer_face >= faces.count() {
            return Err(Error::InvalidFace(outer_face));
        }
        let outer = faces.walk(outer_face)[0];
        Ok(PlaneCubicMap { map, outer })
    }

    /// Uses the face on the left of `dart` as the outer face.
    pub fn with_outer_dart(map: PlaneMap, dart: Dart) -> Result<Self> {
        if dart >= map.dart_count() {
            return Err(Error::MalformedMap(format!("dart {dart} out of range")));
        }
        let f = map.faces().face_of(dart);
        PlaneCubicMap::new(map, f)
    }

    pub fn map(&self) -> &PlaneMap {
        &self.map
    }

    pub fn into_map(self) -> PlaneMap {
        self.map
    }

    pub fn outer_dart(&self) -> Dart {
        self.outer
    }

    pub fn outer_face(&self) -> usize {
        self.map.faces().face_of(self.outer)
    }

    /// Same map with another face designated as outer.
    pub fn with_outer_face(&self, f: usize) -> Result<Self> {
        PlaneCubicMap::new(self.map.clone(), f)
    }
}

/// One vertex of a new ring: the existing vertex `v`, the dart after which the
/// spoke is inserted at `v`, and optionally a dart at `v` to move onto the new
/// degree-2 ring vertex that follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingAttachment {
    pub vertex: usize,
    pub anchor: Dart,
    pub displaced: Option<Dart>,
}

/// Vertices and darts created by [`PlaneMap::attach_ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    /// Ring vertex joined to the i-th attachment.
    pub spoke_ends: Vec<usize>,
    /// Degree-2 ring vertex between the i-th and (i+1)-th spoke ends, if any.
    pub between: Vec<Option<usize>>,
    /// Spoke darts leaving the attachment vertices.
    pub spokes: Vec<Dart>,
    /// Ring darts in ring order, starting at the first spoke end.
    pub ring_darts: Vec<Dart>,
}

impl Ring {
    /// All new degree-2 ring vertices in ring order.
    pub fn between_vertices(&self) -> Vec<usize> {
        self.between.iter().flatten().copied().collect()
    }
}

impl PlaneMap {
    /// Attaches a new cycle (or path) by spokes to the given vertices.
    ///
    /// The attachments must be listed in the order of a face walk, each anchor
    /// being the dart leaving the vertex along that walk; spokes then all lie
    /// in that face. Segment `i` joins the spoke ends `i` and `i + 1`; it gets a
    /// new degree-2 vertex when `subdivided[i]` holds. With `closed` the last
    /// segment wraps around to the first spoke end, so `subdivided` has one
    /// entry per attachment, otherwise one fewer. Each displaced dart moves
    /// onto the degree-2 vertex of the segment following its attachment.
    pub fn attach_ring(&mut self, attachments: &[RingAttachment], subdivided: &[bool], closed: bool) -> Result<Ring> {
        let k = attachments.len();
        let segments = if closed { k } else { k.saturating_sub(1) };
        if k < 2 || subdivided.len() != segments {
            return Err(Error::InvalidInput("ring attachments and segments do not match".into()));
        }
        let spoke_ends: Vec<usize> = (0..k).map(|_| self.add_vertex()).collect();
        let between: Vec<Option<usize>> =
            subdivided.iter().map(|&s| if s { Some(self.add_vertex()) } else { None }).collect();
        let mut spokes = Vec::with_capacity(k);
        let mut spoke_back = Vec::with_capacity(k);
        for (i, att) in attachments.iter().enumerate() {
            let (s, s_back) = self.new_edge_raw(att.vertex, spoke_ends[i]);
            self.place(s, att.vertex, Some(att.anchor))?;
            spokes.push(s);
            spoke_back.push(s_back);
        }
        let mut to_prev = vec![None; k];
        let mut to_next = vec![None; k];
        let mut ring_darts = Vec::new();
        for i in 0..segments {
            let j = (i + 1) % k;
            match between[i] {
                None => {
                    let (x, y) = self.new_edge_raw(spoke_ends[i], spoke_ends[j]);
                    to_next[i] = Some(x);
                    to_prev[j] = Some(y);
                    ring_darts.push(x);
                }
                Some(b) => {
                    let (x, xb) = self.new_edge_raw(spoke_ends[i], b);
                    let (y, yb) = self.new_edge_raw(spoke_ends[j], b);
                    to_next[i] = Some(x);
                    to_prev[j] = Some(y);
                    self.link_rotation(b, &[xb, yb]);
                    ring_darts.push(x);
                    ring_darts.push(yb);
                }
            }
        }
        for i in 0..k {
            let mut rot = Vec::with_capacity(3);
            rot.extend(to_prev[i]);
            rot.push(spoke_back[i]);
            rot.extend(to_next[i]);
            self.link_rotation(spoke_ends[i], &rot);
        }
        for (i, att) in attachments.iter().enumerate() {
            if let Some(h) = att.displaced {
                let target = between
                    .get(i)
                    .copied()
                    .flatten()
                    .ok_or_else(|| Error::InvalidInput("no ring vertex to receive a displaced dart".into()))?;
                // rotation at the target becomes (towards spoke end i, towards spoke end i+1, h)
                let anchor = self.next[self.first[target]];
                self.move_dart(h, target, Some(anchor))?;
            }
        }
        Ok(Ring { spoke_ends, between, spokes, ring_darts })
    }

    /// Copies `other` into this map; returns the vertex and dart offsets.
    pub fn append(&mut self, other: &PlaneMap) -> (usize, usize) {
        let (vo, d_off) = (self.vertex_count(), self.dart_count());
        self.origin.extend(other.origin.iter().map(|&v| v + vo));
        self.twin.extend(other.twin.iter().map(|&d| d + d_off));
        self.next.extend(other.next.iter().map(|&d| d + d_off));
        self.prev.extend(other.prev.iter().map(|&d| d + d_off));
        self.first.extend(other.first.iter().map(|&d| if d == NONE { NONE } else { d + d_off }));
        (vo, d_off)
    }

    /// Darts of the face on the left of `d`, starting at `d`.
    pub fn face_walk(&self, d: Dart) -> Vec<Dart> {
        let mut walk = vec![d];
        let mut e = self.face_next(d);
        while e != d {
            walk.push(e);
            e = self.face_next(e);
        }
        walk
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// K4 drawn as a triangle 0,1,2 (counterclockwise) around centre 3.
    pub fn k4() -> PlaneMap {
        PlaneMap::from_neighbor_lists(&[vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]]).unwrap()
    }

    /// Cube: outer square 0..4 counterclockwise, inner square 4..8.
    pub fn cube() -> PlaneMap {
        PlaneMap::from_neighbor_lists(&[
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![0, 7, 2],
            vec![5, 7, 0],
            vec![6, 4, 1],
            vec![7, 5, 2],
            vec![4, 6, 3],
        ])
        .unwrap()
    }
}
