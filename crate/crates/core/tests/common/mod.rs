#![allow(dead_code)]

use coronoid::graph::AbstractGraph;
use coronoid::hexgrid::HexCoord;
use coronoid::hexsystem::HexSystem;
use coronoid::planemap::PlaneMap;
use coronoid::skeleton::skeleton;

pub fn system(cells: &[(i32, i32)]) -> HexSystem {
    HexSystem::from_pairs(cells).unwrap()
}

pub fn benzene() -> HexSystem {
    system(&[(0, 0)])
}

pub fn naphthalene() -> HexSystem {
    system(&[(0, 0), (1, 0)])
}

pub fn anthracene() -> HexSystem {
    system(&[(0, 0), (1, 0), (2, 0)])
}

pub fn coronene() -> HexSystem {
    let mut k: HexSystem = HexCoord::ORIGIN.neighbors().into_iter().collect();
    k.insert(HexCoord::ORIGIN);
    k
}

/// The eight cells around a two-cell hole: the smallest non-degenerate
/// coronoid whose hole is not a single hexagon.
pub fn naphthalene_hole_coronoid() -> HexSystem {
    let hole = naphthalene();
    hole.iter().flat_map(|h| h.neighbors()).filter(|h| !hole.contains(*h)).collect()
}

/// Coronoid with two holes: a 2-cell hole and a 3-cell hole.
pub fn two_hole_coronoid() -> HexSystem {
    system(&[
        (-6, 1),
        (-6, 2),
        (-6, 3),
        (-5, 1),
        (-5, 3),
        (-4, 0),
        (-4, 2),
        (-4, 3),
        (-3, 0),
        (-3, 1),
        (-3, 3),
        (-2, 0),
        (-2, 2),
        (-1, -1),
        (-1, 0),
        (-1, 1),
        (-1, 2),
    ])
}

/// Single coronoid of 29 cells with a long winding hole.
pub fn winding_coronoid() -> HexSystem {
    system(&[
        (0, 4),
        (0, 5),
        (0, 6),
        (0, 7),
        (0, 8),
        (1, 3),
        (1, 7),
        (1, 8),
        (2, 2),
        (2, 4),
        (2, 5),
        (2, 8),
        (3, 1),
        (3, 2),
        (3, 3),
        (3, 6),
        (3, 8),
        (4, 0),
        (4, 4),
        (4, 6),
        (4, 8),
        (5, 0),
        (5, 1),
        (5, 2),
        (5, 3),
        (5, 4),
        (5, 5),
        (5, 6),
        (5, 7),
    ])
}

/// A U-shaped benzenoid and a straight chain through both of its arms.
pub fn u_and_chain() -> (HexSystem, HexSystem) {
    let mut a: Vec<(i32, i32)> = (0..=4).map(|q| (q, 0)).collect();
    a.extend([(0, 1), (0, 2), (4, 1), (4, 2)]);
    let b: Vec<(i32, i32)> = (-1..=6).map(|q| (q, 2)).collect();
    (system(&a), system(&b))
}

/// Two 6-cycles joined by a path with three edges.
pub fn hexagons_joined_by_path() -> AbstractGraph {
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.extend((0..6).map(|i| (6 + i, 6 + (i + 1) % 6)));
    edges.extend([(0, 12), (12, 13), (13, 6)]);
    AbstractGraph::new(14, &edges).unwrap()
}

/// Skeleton of three mutually adjacent hexagons with the edge shared by two
/// of them removed: 2-connected, a single 6-cycle, not a coronoid graph.
pub fn phenalene_missing_edge() -> AbstractGraph {
    let k = system(&[(0, 0), (1, 0), (1, -1)]);
    let g = skeleton(&k).unwrap();
    let shared = HexCoord::new(1, 0).boundary_edges();
    let other = HexCoord::new(1, -1).boundary_edges();
    let e = shared.iter().find(|e| other.contains(e)).unwrap();
    let (u, v) = e.endpoints();
    let (iu, iv) = (g.index_of(u).unwrap(), g.index_of(v).unwrap());
    let edges: Vec<(usize, usize)> =
        g.edges().iter().copied().filter(|&(a, b)| (a, b) != (iu.min(iv), iu.max(iv))).collect();
    AbstractGraph::new(g.vertex_count(), &edges).unwrap()
}

/// Plane map from straight-line coordinates; rotations sorted by angle.
pub fn map_from_points(points: &[(f64, f64)], edges: &[(usize, usize)]) -> PlaneMap {
    let mut lists = vec![Vec::new(); points.len()];
    for &(u, v) in edges {
        lists[u].push(v);
        lists[v].push(u);
    }
    for (v, list) in lists.iter_mut().enumerate() {
        let (x, y) = points[v];
        list.sort_by(|&a, &b| {
            let ta = (points[a].1 - y).atan2(points[a].0 - x);
            let tb = (points[b].1 - y).atan2(points[b].0 - x);
            ta.partial_cmp(&tb).unwrap()
        });
    }
    PlaneMap::from_neighbor_lists(&lists).unwrap()
}

/// A 10-cycle `1 a 2 b 3 c 4 d 5 e` whose letter vertices are joined to an
/// inner pentagon; the numbered vertices have degree 2.
pub fn decagon_with_pentagon() -> (PlaneMap, Vec<usize>) {
    let mut points = Vec::new();
    for i in 0..10 {
        let t = std::f64::consts::TAU * i as f64 / 10.0;
        points.push((2.0 * t.cos(), 2.0 * t.sin()));
    }
    for i in 0..5 {
        let t = std::f64::consts::TAU * (2 * i + 1) as f64 / 10.0;
        points.push((t.cos(), t.sin()));
    }
    let mut edges: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    edges.extend((0..5).map(|i| (10 + i, 10 + (i + 1) % 5)));
    edges.extend((0..5).map(|i| (2 * i + 1, 10 + i)));
    (map_from_points(&points, &edges), (0..10).collect())
}

/// A cube with eight of its twelve edges subdivided, with three of its faces
/// as cycles. Vertices are numbered from 1 as in the usual drawing and
/// stored at index `label - 1`.
pub fn subdivided_cube() -> (PlaneMap, Vec<Vec<usize>>) {
    let labelled: [(usize, (f64, f64)); 16] = [
        (1, (0.0, 0.0)),
        (2, (2.0, 0.0)),
        (3, (4.0, 0.0)),
        (4, (3.5, 0.5)),
        (5, (1.0, 1.0)),
        (6, (2.0, 1.0)),
        (7, (3.0, 1.0)),
        (8, (0.0, 2.0)),
        (9, (1.0, 2.0)),
        (10, (1.0, 3.0)),
        (11, (2.0, 3.0)),
        (12, (3.0, 3.0)),
        (13, (3.5, 3.5)),
        (14, (0.0, 4.0)),
        (15, (2.0, 4.0)),
        (16, (4.0, 4.0)),
    ];
    let points: Vec<(f64, f64)> = labelled.iter().map(|&(_, p)| p).collect();
    let pairs = [
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 7),
        (7, 6),
        (6, 5),
        (5, 1),
        (5, 9),
        (9, 10),
        (10, 14),
        (14, 8),
        (8, 1),
        (10, 11),
        (11, 12),
        (12, 13),
        (13, 16),
        (16, 15),
        (15, 14),
        (3, 16),
        (7, 12),
    ];
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    let cycles = [vec![1, 2, 3, 4, 7, 6, 5], vec![1, 5, 9, 10, 14, 8], vec![10, 11, 12, 13, 16, 15, 14]];
    let cycles = cycles.iter().map(|c| c.iter().map(|v| v - 1).collect()).collect();
    (map_from_points(&points, &edges), cycles)
}
