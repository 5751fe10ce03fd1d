//! Patches and perforated patches: face subsets of a plane cubic graph.

use std::collections::BTreeSet;

use super::{Dart, Faces, PlaneCubicMap, PlaneMap};
use crate::error::{Error, Result};
use crate::graph::AbstractGraph;

/// Components of the face set `set` under face adjacency.
pub fn patch_components(map: &PlaneCubicMap, set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    map.map().faces().components(set)
}

/// Components of the faces not in `set`.
pub fn complement_components(map: &PlaneCubicMap, set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let faces = map.map().faces();
    let rest: BTreeSet<usize> = (0..faces.count()).filter(|f| !set.contains(f)).collect();
    faces.components(&rest)
}

/// A non-empty proper subset of the faces of a plane cubic graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchSet {
    map: PlaneCubicMap,
    faces: BTreeSet<usize>,
    structure: Faces,
}

impl PatchSet {
    pub fn new(map: PlaneCubicMap, faces: impl IntoIterator<Item = usize>) -> Result<Self> {
        let structure = map.map().faces();
        let faces: BTreeSet<usize> = faces.into_iter().collect();
        if let Some(&f) = faces.iter().find(|&&f| f >= structure.count()) {
            return Err(Error::InvalidFace(f));
        }
        if faces.is_empty() {
            return Err(Error::NotPerforatedPatch("no faces selected".into()));
        }
        if faces.len() == structure.count() {
            return Err(Error::NotPerforatedPatch("every face selected".into()));
        }
        Ok(PatchSet { map, faces, structure })
    }

    /// Like [`PatchSet::new`] but also requires face-connectivity.
    pub fn perforated(map: PlaneCubicMap, faces: impl IntoIterator<Item = usize>) -> Result<Self> {
        let p = PatchSet::new(map, faces)?;
        if !p.is_perforated_patch() {
            return Err(Error::NotPerforatedPatch("faces are not connected".into()));
        }
        Ok(p)
    }

    pub fn map(&self) -> &PlaneCubicMap {
        &self.map
    }

    pub fn faces(&self) -> &BTreeSet<usize> {
        &self.faces
    }

    pub fn face_structure(&self) -> &Faces {
        &self.structure
    }

    pub fn contains(&self, f: usize) -> bool {
        self.faces.contains(&f)
    }

    pub fn complement(&self) -> BTreeSet<usize> {
        (0..self.structure.count()).filter(|f| !self.faces.contains(f)).collect()
    }

    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        self.structure.components(&self.faces)
    }

    pub fn complement_components(&self) -> Vec<BTreeSet<usize>> {
        self.structure.components(&self.complement())
    }

    pub fn is_perforated_patch(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_patch(&self) -> bool {
        self.is_perforated_patch() && self.complement_components().len() == 1
    }

    /// The faces together with every complement component except the one containing `p`.
    pub fn closure(&self, p: usize) -> Result<PatchSet> {
        if p >= self.structure.count() {
            return Err(Error::InvalidFace(p));
        }
        if self.contains(p) {
            return Err(Error::FaceInPatch(p));
        }
        let mut faces = self.faces.clone();
        for comp in self.complement_components() {
            if !comp.contains(&p) {
                faces.extend(comp);
            }
        }
        Ok(PatchSet { map: self.map.clone(), faces, structure: self.structure.clone() })
    }

    /// Faces of the patch whose boundary walk uses some edge twice.
    pub fn ill_behaved_faces(&self) -> Vec<usize> {
        self.faces.iter().copied().filter(|&f| self.structure.is_ill_behaved(f)).collect()
    }

    /// Whether the skeleton is 2-connected, decided by the absence of ill-behaved faces.
    pub fn is_2connected(&self) -> bool {
        self.ill_behaved_faces().is_empty()
    }

    /// Whether dart `d` belongs to the skeleton (some side of its edge is in the patch).
    pub fn in_skeleton(&self, d: Dart) -> bool {
        let m = self.map.map();
        self.contains(self.structure.face_of(d)) || self.contains(self.structure.face_of(m.twin(d)))
    }

    /// Vertices of the map incident to a face of the patch, ascending.
    pub fn skeleton_vertices(&self) -> Vec<usize> {
        let m = self.map.map();
        let mut set = BTreeSet::new();
        for &f in &self.faces {
            for &d in self.structure.walk(f) {
                set.insert(m.origin(d));
            }
        }
        set.into_iter().collect()
    }

    /// The skeleton as a plane map with vertices renumbered in the order of
    /// [`PatchSet::skeleton_vertices`], rotations restricted from the map.
    pub fn skeleton_map(&self) -> PlaneMap {
        let m = self.map.map();
        let verts = self.skeleton_vertices();
        let mut index = vec![usize::MAX; m.vertex_count()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let lists: Vec<Vec<usize>> = verts
            .iter()
            .map(|&v| m.darts_at(v).into_iter().filter(|&d| self.in_skeleton(d)).map(|d| index[m.head(d)]).collect())
            .collect();
        PlaneMap::from_neighbor_lists(&lists).expect("restriction of a simple plane map")
    }

    pub fn skeleton_graph(&self) -> AbstractGraph {
        self.skeleton_map().to_graph().expect("restriction of a simple graph")
    }

    /// Degree of `v` in the skeleton.
    pub fn skeleton_degree(&self, v: usize) -> usize {
        self.map.map().darts_at(v).into_iter().filter(|&d| self.in_skeleton(d)).count()
    }

    /// Boundary walks of the skeleton around each complement component, with
    /// the complement on the left, ordered by complement component.
    pub fn perimeters(&self) -> Vec<PatchPerimeter> {
        let m = self.map.map();
        let comps = self.complement_components();
        let comp_of = |f: usize| comps.iter().position(|c| c.contains(&f)).expect("face in some component");
        let mut visited = vec![false; m.dart_count()];
        let mut out = Vec::new();
        for s in 0..m.dart_count() {
            if visited[s] || !self.in_skeleton(s) || self.contains(self.structure.face_of(s)) {
                continue;
            }
            let mut darts = Vec::new();
            let mut half_edges = Vec::new();
            let mut d = s;
            loop {
                visited[d] = true;
                darts.push(d);
                let mut c = m.prev_ccw(m.twin(d));
                let mut skipped = Vec::new();
                while !self.in_skeleton(c) {
                    skipped.push(c);
                    c = m.prev_ccw(c);
                }
                // `skipped` sits at the head of `d`, i.e. the origin of `c`
                half_edges.push(skipped);
                d = c;
                if d == s {
                    break;
                }
            }
            // align half-edge lists with the origin of each walk dart
            half_edges.rotate_right(1);
            out.push(PatchPerimeter { darts, half_edges, hole: comp_of(self.structure.face_of(s)) });
        }
        out.sort_by_key(|p| (p.hole, p.darts[0]));
        out
    }

    /// Perimeters checked for use as altan cycles: one simple walk per
    /// complement component, each with at least two degree-2 vertices.
    pub fn admissible_perimeters(&self) -> Result<Vec<PatchPerimeter>> {
        let perims = self.perimeters();
        for (i, p) in perims.iter().enumerate() {
            if i > 0 && perims[i - 1].hole == p.hole {
                return Err(Error::NotAdmissible(i, "complement component with several boundary walks".into()));
            }
            let verts = p.vertices(self.map.map());
            let distinct: BTreeSet<usize> = verts.iter().copied().collect();
            if distinct.len() != verts.len() {
                return Err(Error::NotAdmissible(i, "boundary walk is not a simple cycle".into()));
            }
            if p.degree_two_count() < 2 {
                return Err(Error::NotAdmissible(i, "fewer than two degree-2 vertices".into()));
            }
        }
        Ok(perims)
    }

    pub fn pregraph(&self) -> PreGraph {
        let m = self.map.map();
        let vertices = self.skeleton_vertices();
        let mut kept = vec![false; m.vertex_count()];
        for &v in &vertices {
            kept[v] = true;
        }
        let mut edges = Vec::new();
        let mut half_edges = Vec::new();
        for d in 0..m.dart_count() {
            let t = m.twin(d);
            if self.in_skeleton(d) {
                if d < t {
                    let (u, v) = (m.origin(d), m.head(d));
                    edges.push((u.min(v), u.max(v)));
                }
            } else if kept[m.origin(d)] {
                half_edges.push(d);
            }
        }
        edges.sort_unstable();
        PreGraph { vertices, edges, half_edges }
    }

    /// Same faces, same map, another face designated as outer.
    pub fn with_outer_face(&self, f: usize) -> Result<PatchSet> {
        PatchSet::new(self.map.with_outer_face(f)?, self.faces.iter().copied())
    }
}

/// A boundary walk of a patch skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchPerimeter {
    /// Map darts of the walk, complement on the left.
    pub darts: Vec<Dart>,
    /// For each walk dart, the map darts at its origin that are not in the
    /// skeleton (they point into the complement).
    pub half_edges: Vec<Vec<Dart>>,
    /// Index of the complement component bounded by the walk.
    pub hole: usize,
}

impl PatchPerimeter {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn vertices(&self, map: &PlaneMap) -> Vec<usize> {
        self.darts.iter().map(|&d| map.origin(d)).collect()
    }

    /// Vertices of skeleton degree 2: exactly one map dart points into the complement.
    pub fn degree_two_count(&self) -> usize {
        self.half_edges.iter().filter(|h| h.len() == 1).count()
    }

    /// Skeleton degrees along the walk.
    pub fn degree_word(&self) -> Vec<u8> {
        self.half_edges.iter().map(|h| 3 - h.len() as u8).collect()
    }
}

/// The skeleton with cut edges kept as dangling half edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreGraph {
    /// Map vertices incident to a face of the patch.
    pub vertices: Vec<usize>,
    /// Map edges with at least one side in the patch.
    pub edges: Vec<(usize, usize)>,
    /// Map darts leaving a kept vertex along an edge with no side in the patch.
    pub half_edges: Vec<Dart>,
}
