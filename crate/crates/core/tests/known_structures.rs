mod common;

use coronoid::altan::{
    generalised_altan, generalised_altan_ordered, iterated_altan, AdmissibleStructure, IterationVector,
};
use coronoid::embedder::embed;
use coronoid::hexsystem::HexSystem;
use coronoid::kekule::verify_altan_theorem;
use coronoid::skeleton::{skeleton, BBCode, PerimeterKind};
use coronoid::Error;

fn code(s: &str) -> BBCode {
    s.parse().unwrap()
}

/// Walks the code on the lattice: a 2 turns left, a 3 turns right.
fn closes_on_lattice(c: &BBCode) -> bool {
    let steps: [(i32, i32); 6] = [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)];
    let (mut x, mut y, mut dir) = (0, 0, 0usize);
    for &s in c.symbols() {
        x += steps[dir].0;
        y += steps[dir].1;
        dir = if s == 2 { (dir + 1) % 6 } else { (dir + 5) % 6 };
    }
    (x, y, dir) == (0, 0, 0)
}

#[test]
fn two_hole_coronoid_codes() {
    let k = common::two_hole_coronoid();
    assert_eq!(k.complement_decomposition().d(), 2);
    let g = skeleton(&k).unwrap();
    let perims = g.perimeters();
    assert_eq!(perims.len(), 3);
    assert_eq!(perims[0].kind, PerimeterKind::Outer);
    assert_eq!(perims[0].len(), 36);
    for p in &perims[1..] {
        assert_eq!(p.kind, PerimeterKind::Inner);
        assert!(g.bbc(p).equivalent(&code("3333233332")));
    }
    let outer = g.bbc(&perims[0]);
    assert!(closes_on_lattice(&outer));
    assert_eq!(outer.canonical(), code("222323223232322332223232322233232233"));
}

#[test]
fn boundary_codes_close_on_the_lattice() {
    for k in [common::coronene(), common::two_hole_coronoid(), common::winding_coronoid()] {
        let g = skeleton(&k).unwrap();
        for p in g.perimeters() {
            let c = g.bbc(&p);
            let oriented = match p.kind {
                PerimeterKind::Outer => c,
                PerimeterKind::Inner => BBCode::new(c.symbols().iter().map(|&s| 5 - s).collect()).unwrap(),
            };
            assert!(closes_on_lattice(&oriented));
        }
    }
}

#[test]
fn winding_coronoid_perimeter_lengths() {
    let g = skeleton(&common::winding_coronoid()).unwrap();
    let lengths: Vec<usize> = g.perimeters().iter().map(|p| p.len()).collect();
    assert_eq!(lengths, vec![48, 58]);
}

#[test]
fn intersection_of_benzenoids_splits() {
    let (a, b) = common::u_and_chain();
    assert!(a.is_benzenoid() && b.is_benzenoid());
    let raw = a.intersection(&b);
    assert!(!raw.is_benzenoid());
    let parts = HexSystem::intersect_benzenoids(&a, &b).unwrap();
    assert_eq!(parts.len(), 2);
    assert!(parts.iter().all(|p| p.is_benzenoid()));
    let union = parts.iter().fold(HexSystem::new(), |acc, p| acc.union(p));
    assert_eq!(union, raw);
}

#[test]
fn non_coronoid_graphs_are_rejected() {
    assert_eq!(embed(&common::hexagons_joined_by_path()), Err(Error::VerificationFailed));
    assert_eq!(embed(&common::phenalene_missing_edge()), Err(Error::VerificationFailed));
}

#[test]
fn decagon_altan() {
    let (map, cycle) = common::decagon_with_pentagon();
    let s = AdmissibleStructure::from_vertex_cycles(map, &[cycle]).unwrap();
    assert_eq!(s.degree_two_count(0), 5);
    let r = generalised_altan(&s, &[0]).unwrap();
    let g = r.graph();
    assert_eq!(g.vertex_count(), 15 + 10);
    assert_eq!(g.edge_count(), 20 + 10 + 5);
    assert_eq!(r.spokes().len(), 5);
    assert!(r.structure.cycle_code(0).equivalent(&code("3232323232")));
    assert!(g.edges().iter().all(|&(u, v)| g.degree(u) >= 2 && g.degree(v) >= 2));
}

#[test]
fn subdivided_cube_generalised_altan() {
    let (map, cycles) = common::subdivided_cube();
    let s = AdmissibleStructure::from_vertex_cycles(map, &cycles).unwrap();
    let d: Vec<usize> = (0..3).map(|j| s.degree_two_count(j)).collect();
    assert_eq!(d, vec![3, 2, 3]);
    let r = generalised_altan(&s, &[0, 1, 2]).unwrap();
    let total: usize = d.iter().sum();
    assert_eq!(r.graph().vertex_count(), 16 + 2 * total);
    assert_eq!(r.graph().edge_count(), 20 + 3 * total);
    let code = r.structure.map().canonical_code();
    for order in [[1, 0, 2], [2, 1, 0], [2, 0, 1]] {
        let other = generalised_altan_ordered(&s, &order).unwrap();
        assert_eq!(other.structure.map().canonical_code(), code);
    }
}

#[test]
fn subdivided_cube_iterated_altan() {
    let (map, cycles) = common::subdivided_cube();
    let s = AdmissibleStructure::from_vertex_cycles(map, &cycles).unwrap();
    let n: IterationVector = "1,0,2".parse().unwrap();
    let r = iterated_altan(&s, &n).unwrap();
    assert_eq!(r.graph().vertex_count(), 16 + 2 * 3 + 2 * 3 * 2);
    let generations: Vec<usize> = r.steps.iter().map(|st| st.generation).collect();
    assert_eq!(generations, vec![1, 1, 2]);
    assert!(verify_altan_theorem(&s, &n).unwrap().all_ok());
}

#[test]
fn two_hole_coronoid_iterated_altan() {
    let k = common::two_hole_coronoid();
    let s = AdmissibleStructure::from_coronoid(&k).unwrap();
    let d: Vec<usize> = (0..3).map(|j| s.degree_two_count(j)).collect();
    let n = IterationVector(vec![0, 2, 3]);
    let r = iterated_altan(&s, &n).unwrap();
    let added: usize = (0..3).map(|j| 2 * n.0[j] * d[j]).sum();
    assert_eq!(r.graph().vertex_count(), skeleton(&k).unwrap().vertex_count() + added);
    assert_eq!(r.steps.len(), 5);
    assert!(r.steps.iter().all(|st| st.cycle != 0));
}
