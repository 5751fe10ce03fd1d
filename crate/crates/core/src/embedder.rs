//! Recognition of coronoid graphs and recovery of their lattice embedding.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::AbstractGraph;
use crate::hexgrid::{GridEdge, GridVertex, HexCoord};
use crate::hexsystem::HexSystem;
use crate::skeleton::skeleton;

/// A graph placed in the hexagonal lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// The non-degenerate coronoid whose skeleton is the graph.
    pub system: HexSystem,
    /// Lattice vertex of every graph vertex.
    pub positions: Vec<GridVertex>,
}

/// Coronoid whose skeleton is `g`, seeded from the first 6-cycle.
pub fn embed(g: &AbstractGraph) -> Result<HexSystem> {
    embed_seeded(g, 0, false).map(|e| e.system)
}

/// Embeds `g` starting from its `seed`-th 6-cycle (modulo the number of
/// 6-cycles), placed on the boundary of the origin hexagon counterclockwise,
/// or clockwise when `reversed`.
pub fn embed_seeded(g: &AbstractGraph, seed: usize, reversed: bool) -> Result<Embedding> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::GraphNotConnected);
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| !(2..=3).contains(&g.degree(v))) {
        return Err(Error::InvalidDegree(v));
    }
    let cycles = g.six_cycles();
    if cycles.is_empty() {
        return Err(Error::NoHexagonFound);
    }
    let mut cycles_of_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (ci, c) in cycles.iter().enumerate() {
        for i in 0..6 {
            cycles_of_edge.entry(key(c[i], c[(i + 1) % 6])).or_default().push(ci);
        }
    }

    let mut state =
        Placement { position: vec![None; g.vertex_count()], owner: HashMap::new(), hexagon: vec![None; cycles.len()] };
    let seed = seed % cycles.len();
    let ring = HexCoord::ORIGIN.boundary_cycle();
    let image: Vec<GridVertex> = (0..6).map(|i| if reversed { ring[(6 - i) % 6] } else { ring[i] }).collect();
    state.place(seed, &cycles[seed], &image, HexCoord::ORIGIN)?;

    let mut queue = VecDeque::from([seed]);
    while let Some(ci) = queue.pop_front() {
        let c = cycles[ci];
        let here = state.hexagon[ci].expect("queued cycles are placed");
        for i in 0..6 {
            let (u, v) = (c[i], c[(i + 1) % 6]);
            for &cj in &cycles_of_edge[&key(u, v)] {
                if state.hexagon[cj].is_some() {
                    continue;
                }
                let (pu, pv) = (state.position[u].unwrap(), state.position[v].unwrap());
                let edge = GridEdge::new(pu, pv).ok_or(Error::EmbeddingConflict)?;
                let there = edge.hexagons().into_iter().find(|&h| h != here).expect("two hexagons per edge");
                let bc = there.boundary_cycle();
                let other = cycles[cj];
                let ju = other.iter().position(|&x| x == u).unwrap();
                let jv = other.iter().position(|&x| x == v).unwrap();
                let ku = bc.iter().position(|&x| x == pu).unwrap();
                let kv = bc.iter().position(|&x| x == pv).unwrap();
                let same = (jv + 6 - ju) % 6 == (kv + 6 - ku) % 6;
                let image: Vec<GridVertex> = (0..6)
                    .map(|j| {
                        let step = (j + 6 - ju) % 6;
                        if same {
                            bc[(ku + step) % 6]
                        } else {
                            bc[(ku + 6 - step) % 6]
                        }
                    })
                    .collect();
                state.place(cj, &other, &image, there)?;
                queue.push_back(cj);
            }
        }
    }

    let positions: Vec<GridVertex> =
        state.position.iter().map(|p| p.ok_or(Error::VerificationFailed)).collect::<Result<_>>()?;
    for &(u, v) in g.edges() {
        if !positions[u].is_adjacent(positions[v]) {
            return Err(Error::EmbeddingConflict);
        }
    }
    let image_edges: HashSet<(GridVertex, GridVertex)> =
        g.edges().iter().map(|&(u, v)| ordered(positions[u], positions[v])).collect();
    let candidates: BTreeSet<HexCoord> = positions.iter().flat_map(|p| p.hexagons()).collect();
    let system: HexSystem = candidates
        .into_iter()
        .filter(|h| {
            h.boundary_edges().iter().all(|e| {
                let (a, b) = e.endpoints();
                image_edges.contains(&ordered(a, b))
            })
        })
        .collect();
    verify(&system, &positions, &image_edges)?;
    Ok(Embedding { system, positions })
}

/// Whether embedding the skeleton of `k` gives back `k` up to lattice symmetry.
pub fn roundtrip_check(k: &HexSystem) -> Result<bool> {
    let g = skeleton(k)?.to_graph();
    Ok(embed(&g)?.is_equivalent(k))
}

fn verify(system: &HexSystem, positions: &[GridVertex], image_edges: &HashSet<(GridVertex, GridVertex)>) -> Result<()> {
    if system.is_empty() || !system.is_connected() {
        return Err(Error::VerificationFailed);
    }
    let s = skeleton(system)?;
    let vertices: BTreeSet<GridVertex> = positions.iter().copied().collect();
    let skeleton_vertices: BTreeSet<GridVertex> = s.vertices().iter().copied().collect();
    if vertices != skeleton_vertices || s.edge_count() != image_edges.len() {
        return Err(Error::VerificationFailed);
    }
    let all_present = s.edges().iter().all(|&(a, b)| image_edges.contains(&ordered(s.vertices()[a], s.vertices()[b])));
    if !all_present {
        return Err(Error::VerificationFailed);
    }
    Ok(())
}

struct Placement {
    position: Vec<Option<GridVertex>>,
    owner: HashMap<GridVertex, usize>,
    hexagon: Vec<Option<HexCoord>>,
}

impl Placement {
    fn place(&mut self, ci: usize, cycle: &[usize; 6], image: &[GridVertex], h: HexCoord) -> Result<()> {
        for (&v, &p) in cycle.iter().zip(image) {
            match self.position[v] {
                Some(q) if q != p => return Err(Error::EmbeddingConflict),
                _ => {}
            }
            match self.owner.get(&p) {
                Some(&w) if w != v => return Err(Error::EmbeddingConflict),
                _ => {}
            }
        }
        for (&v, &p) in cycle.iter().zip(image) {
            self.position[v] = Some(p);
            self.owner.insert(p, v);
        }
        self.hexagon[ci] = Some(h);
        Ok(())
    }
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

fn ordered(a: GridVertex, b: GridVertex) -> (GridVertex, GridVertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(p: &[(i32, i32)]) -> HexSystem {
        HexSystem::from_pairs(p).unwrap()
    }

    fn cycle(n: usize) -> AbstractGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        AbstractGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn hexagon_embeds_as_single_cell() {
        assert_eq!(embed(&cycle(6)).unwrap(), hs(&[(0, 0)]));
    }

    #[test]
    fn anthracene_is_linear() {
        let k = hs(&[(0, 0), (1, 0), (2, 0)]);
        let g = skeleton(&k).unwrap().to_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 16));
        for seed in 0..3 {
            for rev in [false, true] {
                let e = embed_seeded(&g, seed, rev).unwrap();
                assert!(e.system.is_equivalent(&k));
            }
        }
    }

    #[test]
    fn coronoid_round_trip() {
        let hole = hs(&[(0, 0), (1, 0)]);
        let k: HexSystem = hole.iter().flat_map(|h| h.neighbors()).filter(|h| !hole.contains(*h)).collect();
        assert_eq!(k.len(), 8);
        let n = embed(&skeleton(&k).unwrap().to_graph()).unwrap();
        assert!(n.is_equivalent(&k), "{:?}", n);
    }

    #[test]
    fn single_cell_hole_is_filled() {
        let ring: HexSystem = HexCoord::ORIGIN.neighbors().into_iter().collect();
        let g = skeleton(&ring).unwrap().to_graph();
        let n = embed(&g).unwrap();
        assert_eq!(n.len(), 7);
    }

    #[test]
    fn rejections() {
        assert_eq!(embed(&cycle(10)), Err(Error::NoHexagonFound));
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend((0..6).map(|i| (6 + i, 6 + (i + 1) % 6)));
        edges.extend([(0, 12), (12, 13), (13, 6)]);
        let g = AbstractGraph::new(14, &edges).unwrap();
        assert_eq!(embed(&g), Err(Error::VerificationFailed));
        let k4 = AbstractGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(embed(&k4), Err(Error::NoHexagonFound));
    }
}
