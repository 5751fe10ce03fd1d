//! Generalised and iterated altans of plane graphs, coronoids and perforated patches.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::AbstractGraph;
use crate::hexsystem::HexSystem;
use crate::planemap::{Dart, PatchPerimeter, PatchSet, PlaneCubicMap, PlaneMap, RingAttachment};
use crate::skeleton::{skeleton, BBCode};

/// A plane graph with selected faces whose boundaries are the altan cycles.
///
/// Cycle `j` is the face walk of `cycles[j]`; its altan grows into that face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleStructure {
    map: PlaneMap,
    cycles: Vec<Dart>,
}

impl AdmissibleStructure {
    /// Checks that each face walk is a simple cycle with at least two
    /// degree-2 vertices and that no degree-2 vertex lies on two cycles.
    pub fn new(map: PlaneMap, cycles: Vec<Dart>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (j, &d) in cycles.iter().enumerate() {
            if d >= map.dart_count() {
                return Err(Error::NotAdmissible(j, format!("dart {d} out of range")));
            }
            let verts: Vec<usize> = map.face_walk(d).into_iter().map(|e| map.origin(e)).collect();
            let distinct: BTreeSet<usize> = verts.iter().copied().collect();
            if distinct.len() != verts.len() {
                return Err(Error::NotAdmissible(j, "face boundary is not a simple cycle".into()));
            }
            let twos: Vec<usize> = verts.iter().copied().filter(|&v| map.degree(v) == 2).collect();
            if twos.len() < 2 {
                return Err(Error::NotAdmissible(j, "fewer than two degree-2 vertices".into()));
            }
            for v in twos {
                if !seen.insert(v) {
                    return Err(Error::NotAdmissible(j, format!("degree-2 vertex {v} lies on two cycles")));
                }
            }
        }
        Ok(AdmissibleStructure { map, cycles })
    }

    /// Cycles given as vertex lists. The altan grows into the face on the
    /// left of the listed orientation when that face is bounded by exactly
    /// the cycle, otherwise into the face on the right.
    pub fn from_vertex_cycles(map: PlaneMap, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut darts = Vec::with_capacity(cycles.len());
        for (j, c) in cycles.iter().enumerate() {
            let d = face_dart_of_cycle(&map, c)
                .ok_or_else(|| Error::NotAdmissible(j, "cycle does not bound a face".into()))?;
            darts.push(d);
        }
        AdmissibleStructure::new(map, darts)
    }

    /// The skeleton of a non-degenerate coronoid with its perimeters, in
    /// perimeter order; each altan grows away from the coronoid.
    pub fn from_coronoid(k: &HexSystem) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::EmptySystem);
        }
        if !k.is_connected() {
            return Err(Error::NotConnected);
        }
        if k.is_degenerate() {
            return Err(Error::DegenerateCoronoid);
        }
        let g = skeleton(k)?;
        let map = g.to_plane_map();
        let cycles = g.perimeters().iter().map(|p| g.face_dart(&map, p)).collect();
        AdmissibleStructure::new(map, cycles)
    }

    /// The skeleton of a perforated patch with its perimeters, one per
    /// complement component.
    pub fn from_patch(p: &PatchSet) -> Result<Self> {
        let perims = p.admissible_perimeters()?;
        let full = p.map().map();
        let verts = p.skeleton_vertices();
        let map = p.skeleton_map();
        let index = |v: usize| verts.binary_search(&v).expect("skeleton vertex");
        let cycles = perims
            .iter()
            .map(|q| {
                let d = q.darts[0];
                map.dart_between(index(full.origin(d)), index(full.head(d))).expect("skeleton edge")
            })
            .collect();
        AdmissibleStructure::new(map, cycles)
    }

    pub fn map(&self) -> &PlaneMap {
        &self.map
    }

    pub fn graph(&self) -> AbstractGraph {
        self.map.to_graph().expect("admissible structures are simple")
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Dart whose left face is bounded by cycle `j`.
    pub fn cycle_dart(&self, j: usize) -> Dart {
        self.cycles[j]
    }

    /// Vertices of cycle `j` along its face walk.
    pub fn cycle_vertices(&self, j: usize) -> Vec<usize> {
        self.map.face_walk(self.cycles[j]).into_iter().map(|d| self.map.origin(d)).collect()
    }

    /// Degrees along cycle `j`, from the start of its face walk.
    pub fn cycle_code(&self, j: usize) -> BBCode {
        let word = self.cycle_vertices(j).into_iter().map(|v| self.map.degree(v) as u8).collect();
        BBCode::new(word).expect("subcubic cycle")
    }

    pub fn degree_two_count(&self, j: usize) -> usize {
        self.cycle_vertices(j).into_iter().filter(|&v| self.map.degree(v) == 2).count()
    }

    /// Replaces cycle `j` by a new `2d`-cycle joined by `d` spokes to its
    /// degree-2 vertices.
    fn expand(&mut self, j: usize) -> Result<Expansion> {
        let walk = self.map.face_walk(self.cycles[j]);
        let first = walk
            .iter()
            .position(|&d| self.map.degree(self.map.origin(d)) == 2)
            .ok_or_else(|| Error::NotAdmissible(j, "no degree-2 vertex".into()))?;
        let attachments: Vec<RingAttachment> = walk[first..]
            .iter()
            .chain(&walk[..first])
            .filter(|&&d| self.map.degree(self.map.origin(d)) == 2)
            .map(|&d| RingAttachment { vertex: self.map.origin(d), anchor: d, displaced: None })
            .collect();
        if attachments.len() < 2 {
            return Err(Error::NotAdmissible(j, "fewer than two degree-2 vertices".into()));
        }
        let d = attachments.len();
        let ring = self.map.attach_ring(&attachments, &vec![true; d], true)?;
        let spokes = attachments.iter().zip(&ring.spoke_ends).map(|(a, &e)| (a.vertex, e)).collect();
        let ring_vertices: Vec<usize> = ring.ring_darts.iter().map(|&e| self.map.origin(e)).collect();
        let ring_edges = ring.ring_darts.iter().map(|&e| (self.map.origin(e), self.map.head(e))).collect();
        let face_darts = ring.spokes.iter().map(|&s| self.map.twin(s)).collect();
        self.cycles[j] = ring.ring_darts[0];
        Ok(Expansion { spokes, ring: ring_vertices, ring_edges, face_darts })
    }
}

struct Expansion {
    spokes: Vec<(usize, usize)>,
    ring: Vec<usize>,
    ring_edges: Vec<(usize, usize)>,
    face_darts: Vec<Dart>,
}

fn face_dart_of_cycle(map: &PlaneMap, cycle: &[usize]) -> Option<Dart> {
    if cycle.len() < 3 {
        return None;
    }
    let bounds = |d: Dart, expected: &[usize]| {
        let verts: Vec<usize> = map.face_walk(d).into_iter().map(|e| map.origin(e)).collect();
        verts == expected
    };
    let forward = map.dart_between(cycle[0], cycle[1])?;
    if bounds(forward, cycle) {
        return Some(forward);
    }
    let backward = map.dart_between(cycle[1], cycle[0])?;
    let mut expected: Vec<usize> = cycle.iter().rev().copied().collect();
    expected.rotate_left(cycle.len() - 2);
    bounds(backward, &expected).then_some(backward)
}

/// How many times to expand each cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IterationVector(pub Vec<usize>);

impl IterationVector {
    pub fn zeros(k: usize) -> Self {
        IterationVector(vec![0; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// `|n| = n₁ + … + n_k`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Indices with a positive entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// Every positive entry decreased by one.
    pub fn dagger(&self) -> IterationVector {
        IterationVector(self.0.iter().map(|&x| x.saturating_sub(1)).collect())
    }
}

impl FromStr for IterationVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IterationVector(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad iteration count {t:?}"))))
            .collect::<Result<Vec<usize>>>()
            .map(IterationVector)
    }
}

impl fmt::Display for IterationVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// One expansion of one cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltanStep {
    pub cycle: usize,
    /// Iteration that performed the expansion, from 1.
    pub generation: usize,
    /// Degree-2 vertices of the cycle before expansion.
    pub d: usize,
    /// Degree word of the expanded cycle, starting at its first spoke vertex.
    pub code: BBCode,
    /// `(old vertex, new vertex)` pairs.
    pub spokes: Vec<(usize, usize)>,
    /// New cycle in order, starting at the end of the first spoke.
    pub ring: Vec<usize>,
    pub ring_edges: Vec<(usize, usize)>,
    /// For each spoke, a dart on the new face that follows it along the old cycle.
    pub face_darts: Vec<Dart>,
}

/// An admissible structure after altan expansions, with provenance of new parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltanResult {
    pub structure: AdmissibleStructure,
    /// Number of vertices before any expansion; they keep their indices.
    pub original_vertices: usize,
    /// Iteration in which each vertex was created, 0 for original vertices.
    pub vertex_generation: Vec<usize>,
    pub steps: Vec<AltanStep>,
}

impl AltanResult {
    fn start(s: &AdmissibleStructure) -> Self {
        let n = s.map.vertex_count();
        AltanResult { structure: s.clone(), original_vertices: n, vertex_generation: vec![0; n], steps: Vec::new() }
    }

    pub fn graph(&self) -> AbstractGraph {
        self.structure.graph()
    }

    /// Iteration in which the edge `u v` was created, 0 for original edges.
    pub fn edge_generation(&self, u: usize, v: usize) -> usize {
        self.vertex_generation[u].max(self.vertex_generation[v])
    }

    pub fn spokes(&self) -> Vec<(usize, usize)> {
        self.steps.iter().flat_map(|s| s.spokes.iter().copied()).collect()
    }

    pub fn ring_edges(&self) -> Vec<(usize, usize)> {
        self.steps.iter().flat_map(|s| s.ring_edges.iter().copied()).collect()
    }

    /// Edges of the current boundary of cycle `j` if it was expanded.
    pub fn new_perimeter_edges(&self, j: usize) -> Vec<(usize, usize)> {
        self.steps.iter().rev().find(|s| s.cycle == j).map(|s| s.ring_edges.clone()).unwrap_or_default()
    }

    fn apply(&mut self, j: usize, generation: usize) -> Result<()> {
        if j >= self.structure.cycle_count() {
            return Err(Error::InvalidPerimeter { index: j, count: self.structure.cycle_count() });
        }
        let d = self.structure.degree_two_count(j);
        let code = {
            let word = self.structure.cycle_code(j);
            word.from_first_two().unwrap_or(word)
        };
        let e = self.structure.expand(j)?;
        self.vertex_generation.resize(self.structure.map.vertex_count(), generation);
        self.steps.push(AltanStep {
            cycle: j,
            generation,
            d,
            code,
            spokes: e.spokes,
            ring: e.ring,
            ring_edges: e.ring_edges,
            face_darts: e.face_darts,
        });
        Ok(())
    }
}

/// Altan of a plane graph at the cycle bounding the face left of `cycle`.
pub fn altan(map: &PlaneMap, cycle: Dart) -> Result<AltanResult> {
    let s = AdmissibleStructure::new(map.clone(), vec![cycle])?;
    generalised_altan(&s, &[0])
}

/// Expands every cycle in `j`, in increasing index order.
pub fn generalised_altan(s: &AdmissibleStructure, j: &[usize]) -> Result<AltanResult> {
    let set: BTreeSet<usize> = j.iter().copied().collect();
    let order: Vec<usize> = set.into_iter().collect();
    generalised_altan_ordered(s, &order)
}

/// Expands the cycles in the given order.
pub fn generalised_altan_ordered(s: &AdmissibleStructure, order: &[usize]) -> Result<AltanResult> {
    let mut r = AltanResult::start(s);
    for &j in order {
        r.apply(j, 1)?;
    }
    Ok(r)
}

/// `Aⁿ`: expands every cycle with a positive entry, then recurses on `n†`.
pub fn iterated_altan(s: &AdmissibleStructure, n: &IterationVector) -> Result<AltanResult> {
    if n.len() != s.cycle_count() {
        return Err(Error::IterationLength { expected: s.cycle_count(), got: n.len() });
    }
    let mut r = AltanResult::start(s);
    let mut n = n.clone();
    let mut generation = 1;
    while !n.is_zero() {
        for j in n.support() {
            r.apply(j, generation)?;
        }
        n = n.dagger();
        generation += 1;
    }
    Ok(r)
}

/// `Aⁿ(K)` for a non-degenerate coronoid, cycles in perimeter order.
pub fn coronoid_altan(k: &HexSystem, n: &IterationVector) -> Result<AltanResult> {
    iterated_altan(&AdmissibleStructure::from_coronoid(k)?, n)
}

/// Degrees of the new faces and the new boundary code predicted for an
/// altan at a cycle with degree word `code`.
pub fn new_face_degrees(code: &BBCode) -> Result<(Vec<usize>, BBCode)> {
    let segments = code.segments()?;
    let boundary = BBCode::new([3u8, 2].repeat(segments.len())).expect("symbols 2 and 3");
    Ok((segments.into_iter().map(|l| l + 5).collect(), boundary))
}

/// Traced degrees of the faces created by a step, in spoke order.
pub fn traced_face_degrees(r: &AltanResult, step: usize) -> Vec<usize> {
    let m = &r.structure.map;
    r.steps[step].face_darts.iter().map(|&d| m.face_walk(d).len()).collect()
}

/// A new face of degree other than 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NonHexagonalFace {
    pub step: usize,
    pub dart: Dart,
    pub degree: usize,
}

/// A face created by a proper altan that is not a hexagon.
pub fn assert_not_coronoid(r: &AltanResult) -> Result<NonHexagonalFace> {
    let m = &r.structure.map;
    for (i, s) in r.steps.iter().enumerate() {
        for &d in &s.face_darts {
            let degree = m.face_walk(d).len();
            if degree != 6 {
                return Ok(NonHexagonalFace { step: i, dart: d, degree });
            }
        }
    }
    Err(Error::Internal("every new face is a hexagon".into()))
}

/// A perforated patch after altan expansions of its perimeters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatchAltan {
    pub patch: PatchSet,
    /// Ring darts of the final boundary of each perimeter (complement on the left).
    pub perimeters: Vec<PatchPerimeter>,
}

/// `Aⁿ(P)` for a perforated patch: each expansion draws the new cycle inside
/// the hole, moves the hole's half edges onto it, and adds the annulus of new
/// faces to the patch.
pub fn patch_altan(p: &PatchSet, n: &IterationVector) -> Result<PatchAltan> {
    let mut perims = p.admissible_perimeters()?;
    if n.len() != perims.len() {
        return Err(Error::IterationLength { expected: perims.len(), got: n.len() });
    }
    let mut map = p.map().map().clone();
    let faces = p.face_structure();
    let mut in_patch: Vec<bool> = (0..map.dart_count()).map(|d| p.contains(faces.face_of(d))).collect();
    let mut outer = p.map().outer_dart();
    let mut n = n.clone();
    while !n.is_zero() {
        for j in n.support() {
            let q = &perims[j];
            let first = q
                .half_edges
                .iter()
                .position(|h| h.len() == 1)
                .ok_or_else(|| Error::NotAdmissible(j, "no degree-2 vertex".into()))?;
            let order: Vec<usize> = (first..q.len()).chain(0..first).collect();
            let attachments: Vec<RingAttachment> = order
                .iter()
                .filter(|&&i| q.half_edges[i].len() == 1)
                .map(|&i| RingAttachment {
                    vertex: map.origin(q.darts[i]),
                    anchor: q.darts[i],
                    displaced: Some(q.half_edges[i][0]),
                })
                .collect();
            let d = attachments.len();
            if d < 2 {
                return Err(Error::NotAdmissible(j, "fewer than two degree-2 vertices".into()));
            }
            let ring = map.attach_ring(&attachments, &vec![true; d], true)?;
            in_patch.resize(map.dart_count(), false);
            for &e in &q.darts {
                in_patch[e] = true;
            }
            for &s in &ring.spokes {
                in_patch[s] = true;
                in_patch[map.twin(s)] = true;
            }
            for &e in &ring.ring_darts {
                in_patch[map.twin(e)] = true;
            }
            if in_patch[outer] {
                outer = ring.ring_darts[0];
            }
            let half_edges: Vec<Vec<Dart>> = ring
                .ring_darts
                .iter()
                .enumerate()
                .map(|(i, _)| if i % 2 == 1 { vec![attachments[i / 2].displaced.unwrap()] } else { Vec::new() })
                .collect();
            perims[j] = PatchPerimeter { darts: ring.ring_darts.clone(), half_edges, hole: q.hole };
        }
        n = n.dagger();
    }
    let cubic = PlaneCubicMap::with_outer_dart(map, outer)?;
    let faces = cubic.map().faces();
    let selected: BTreeSet<usize> = (0..in_patch.len()).filter(|&d| in_patch[d]).map(|d| faces.face_of(d)).collect();
    let patch = PatchSet::new(cubic, selected)?;
    Ok(PatchAltan { patch, perimeters: perims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexgrid::HexCoord;

    fn cycle_map(n: usize) -> PlaneMap {
        let lists: Vec<Vec<usize>> = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        PlaneMap::from_neighbor_lists(&lists).unwrap()
    }

    fn benzene() -> HexSystem {
        HexSystem::single(HexCoord::ORIGIN)
    }

    #[test]
    fn altan_of_benzene() {
        let r = coronoid_altan(&benzene(), &IterationVector(vec![1])).unwrap();
        let g = r.graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (18, 24));
        assert_eq!(traced_face_degrees(&r, 0), vec![5; 6]);
        assert_eq!(r.spokes().len(), 6);
        assert_eq!(r.ring_edges().len(), 12);
        assert_eq!(r.structure.cycle_code(0).canonical().to_string(), "232323232323");
        assert_eq!(assert_not_coronoid(&r).unwrap().degree, 5);
    }

    #[test]
    fn two_degree_two_vertices_give_a_square() {
        // a square with the chord 1-3
        let lists = vec![vec![1, 3], vec![2, 3, 0], vec![3, 1], vec![1, 2, 0]];
        let m = PlaneMap::from_neighbor_lists(&lists).unwrap();
        assert_eq!(m.euler_characteristic(), 2);
        let s = AdmissibleStructure::from_vertex_cycles(m, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(s.cycle_vertices(0).len(), 4);
        assert_eq!(s.degree_two_count(0), 2);
        let r = iterated_altan(&s, &IterationVector(vec![1])).unwrap();
        assert_eq!(r.steps[0].ring.len(), 4);
    }

    #[test]
    fn empty_index_set_is_identity() {
        let s = AdmissibleStructure::new(cycle_map(6), vec![0]).unwrap();
        let r = generalised_altan(&s, &[]).unwrap();
        assert_eq!(r.structure, s);
        let r = iterated_altan(&s, &IterationVector(vec![0])).unwrap();
        assert_eq!(r.structure, s);
    }

    #[test]
    fn iteration_vector_parsing() {
        let n: IterationVector = "1, 0,2".parse().unwrap();
        assert_eq!(n, IterationVector(vec![1, 0, 2]));
        assert_eq!(n.total(), 3);
        assert_eq!(n.dagger(), IterationVector(vec![0, 0, 1]));
        assert_eq!(n.support(), vec![0, 2]);
        assert_eq!(n.to_string(), "1,0,2");
        assert!("1,x".parse::<IterationVector>().is_err());
    }

    #[test]
    fn wrong_vector_length() {
        assert_eq!(
            coronoid_altan(&benzene(), &IterationVector(vec![1, 1])),
            Err(Error::IterationLength { expected: 1, got: 2 })
        );
    }

    #[test]
    fn predicted_degrees() {
        let (faces, boundary) = new_face_degrees(&"222222".parse().unwrap()).unwrap();
        assert_eq!(faces, vec![5; 6]);
        assert_eq!(boundary.to_string(), "323232323232");
        let (faces, _) = new_face_degrees(&"2333323333".parse().unwrap()).unwrap();
        assert_eq!(faces, vec![9, 9]);
        assert!(new_face_degrees(&"2333".parse().unwrap()).is_err());
    }

    #[test]
    fn second_iteration_grows_a_tube() {
        let r = coronoid_altan(&benzene(), &IterationVector(vec![2])).unwrap();
        assert_eq!(r.graph().vertex_count(), 30);
        assert_eq!(traced_face_degrees(&r, 1), vec![6; 6]);
        assert_eq!(r.vertex_generation.iter().filter(|&&g| g == 2).count(), 12);
    }

    #[test]
    fn degenerate_coronoid_rejected() {
        let ring: HexSystem = HexCoord::ORIGIN.neighbors().into_iter().collect();
        assert_eq!(coronoid_altan(&ring, &IterationVector(vec![1, 1])), Err(Error::DegenerateCoronoid));
    }

    #[test]
    fn patch_altan_keeps_a_perforated_patch() {
        let hole = HexSystem::from_pairs(&[(0, 0), (1, 0)]).unwrap();
        let k: HexSystem = hole.iter().flat_map(|h| h.neighbors()).filter(|h| !hole.contains(*h)).collect();
        let p = crate::gen::coronoid_patch(&k).unwrap();
        assert!(p.is_2connected());
        let before = p.faces().len();
        let perims = p.admissible_perimeters().unwrap();
        let d: usize = perims.iter().map(|q| q.degree_two_count()).sum();
        let r = patch_altan(&p, &IterationVector(vec![1, 1])).unwrap();
        assert!(r.patch.is_perforated_patch());
        assert!(r.patch.is_2connected());
        assert_eq!(r.patch.faces().len(), before + d);
        let r = patch_altan(&p, &IterationVector(vec![2, 0])).unwrap();
        assert!(r.patch.admissible_perimeters().is_ok());
    }
}
