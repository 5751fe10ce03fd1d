//! Extending plane subcubic graphs to plane cubic graphs.

use super::{Dart, PlaneCubicMap, PlaneMap, RingAttachment};
use crate::error::{Error, Result};

/// Degree-2 vertices met along the face left of `outer`, in walk order,
/// each with the walk dart leaving it (first visit only).
fn degree_two_on_face(map: &PlaneMap, outer: Dart) -> Result<Vec<(usize, Dart)>> {
    let mut seen = vec![false; map.vertex_count()];
    let mut out = Vec::new();
    for d in map.face_walk(outer) {
        let v = map.origin(d);
        if map.degree(v) == 2 && !seen[v] {
            seen[v] = true;
            out.push((v, d));
        }
    }
    if let Some(v) = (0..map.vertex_count()).find(|&v| map.degree(v) == 2 && !seen[v]) {
        return Err(Error::InteriorDegreeTwo(v));
    }
    Ok(out)
}

fn check_subcubic(map: &PlaneMap) -> Result<()> {
    if let Some(v) = (0..map.vertex_count()).find(|&v| !(2..=3).contains(&map.degree(v))) {
        return Err(Error::InvalidDegree(map.degree(v)));
    }
    map.validate_plane()?;
    Ok(())
}

/// A cubic plane graph containing `map`, whose bounded faces are kept.
///
/// `outer` is a dart with the outer face on its left; every degree-2 vertex
/// must lie on that face. With three or more degree-2 vertices a cycle is
/// attached around the outside with one spoke per degree-2 vertex. With two,
/// a 4-cycle is attached first and one of its edges subdivided, giving three
/// degree-2 vertices. A single degree-2 vertex receives a pendant copy of
/// `K4` with one subdivided edge.
pub fn cubic_completion(map: &PlaneMap, outer: Dart) -> Result<PlaneCubicMap> {
    check_subcubic(map)?;
    let mut map = map.clone();
    let twos = degree_two_on_face(&map, outer)?;
    let attachments: Vec<RingAttachment> =
        twos.iter().map(|&(v, d)| RingAttachment { vertex: v, anchor: d, displaced: None }).collect();
    match twos.len() {
        0 => PlaneCubicMap::with_outer_dart(map, outer),
        1 => {
            let (v, d) = twos[0];
            let (vo, d_off) = map.append(&subdivided_k4());
            let x = vo + 4;
            // gadget dart 1 -> x lies on the gadget's outer face
            let gadget_outer = d_off + subdivided_k4_outer_dart();
            let anchor_x = map.corner_anchor(gadget_outer);
            debug_assert_eq!(map.origin(anchor_x), x);
            map.add_edge(v, Some(d), x, Some(anchor_x))?;
            PlaneCubicMap::with_outer_dart(map, gadget_outer)
        }
        2 => {
            let ring = map.attach_ring(&attachments, &[true, true], true)?;
            let start = ring.ring_darts[0];
            map.subdivide(start);
            cubic_completion(&map, start)
        }
        k => {
            let ring = map.attach_ring(&attachments, &vec![false; k], true)?;
            PlaneCubicMap::with_outer_dart(map, ring.ring_darts[0])
        }
    }
}

/// `K4` with the edge between its vertices 0 and 1 subdivided by vertex 4.
fn subdivided_k4() -> PlaneMap {
    let mut m = PlaneMap::from_neighbor_lists(&[vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]])
        .expect("K4 rotation system");
    let d = m.dart_between(0, 1).expect("edge 0-1");
    m.subdivide(d);
    m
}

/// Dart `1 -> 4` of [`subdivided_k4`], which has the unbounded face on its left.
fn subdivided_k4_outer_dart() -> Dart {
    let m = subdivided_k4();
    m.dart_between(1, 4).expect("edge 1-4")
}

/// `Q3` minus the edge between its vertices 0 and 1, drawn with the merged
/// face outside.
fn cube_minus_edge() -> PlaneMap {
    PlaneMap::from_neighbor_lists(&[
        vec![4, 3],
        vec![2, 5],
        vec![3, 6, 1],
        vec![0, 7, 2],
        vec![5, 7, 0],
        vec![6, 4, 1],
        vec![7, 5, 2],
        vec![4, 6, 3],
    ])
    .expect("cube rotation system")
}

/// What one step of [`bipartite_cubic_completion`] did.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionAction {
    /// Path attached along `u, w1..wl, v` for `l` vertices of the other colour.
    Path { between: usize },
    /// New vertex joined to two consecutive degree-2 vertices of one colour.
    Apex,
    /// The two remaining degree-2 vertices joined by an edge.
    Join,
    /// The two remaining, adjacent, degree-2 vertices joined to a cube minus an edge.
    Gadget,
}

/// Audit record of one completion step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionStep {
    pub action: CompletionAction,
    /// Degree-2 vertices of each colour before the step.
    pub before: (usize, usize),
    /// Degree-2 vertices of each colour after the step.
    pub after: (usize, usize),
}

impl CompletionStep {
    /// Degree-2 counts of the two colours agree modulo 3 before and after.
    pub fn balanced(&self) -> bool {
        self.before.0 % 3 == self.before.1 % 3 && self.after.0 % 3 == self.after.1 % 3
    }
}

fn colour_counts(map: &PlaneMap, colour: &[bool]) -> (usize, usize) {
    let mut c = (0, 0);
    for (v, &black) in colour.iter().enumerate().take(map.vertex_count()) {
        if map.degree(v) == 2 {
            if black {
                c.1 += 1;
            } else {
                c.0 += 1;
            }
        }
    }
    c
}

fn bipartition(map: &PlaneMap) -> Result<Vec<bool>> {
    map.to_graph()?.bipartition().ok_or_else(|| Error::InvalidInput("graph is not bipartite".into()))
}

/// A cubic bipartite plane graph containing the bipartite `map`, whose
/// bounded faces are kept, together with an audit of every step.
///
/// Each step removes two degree-2 vertices of one colour that are
/// consecutive among the degree-2 vertices of that colour on the outer face,
/// together with the `l` degree-2 vertices of the other colour between them,
/// and creates `l + 1` new degree-2 vertices.
pub fn bipartite_cubic_completion(map: &PlaneMap, outer: Dart) -> Result<(PlaneCubicMap, Vec<CompletionStep>)> {
    check_subcubic(map)?;
    let mut map = map.clone();
    let mut outer = outer;
    let mut steps = Vec::new();
    loop {
        let colour = bipartition(&map)?;
        let before = colour_counts(&map, &colour);
        let twos = degree_two_on_face(&map, outer)?;
        let k = twos.len();
        let action = match k {
            0 => break,
            1 => {
                return Err(Error::Internal("a single degree-2 vertex remains".into()));
            }
            2 if colour[twos[0].0] != colour[twos[1].0] => {
                let ((u, du), (v, dv)) = (twos[0], twos[1]);
                if map.dart_between(u, v).is_none() {
                    map.add_edge(u, Some(du), v, Some(dv))?;
                    outer = du;
                    CompletionAction::Join
                } else {
                    let (vo, _) = map.append(&cube_minus_edge());
                    let (x, y) = (vo, vo + 1);
                    let faces = map.faces();
                    let merged = faces
                        .walks()
                        .iter()
                        .find(|w| w.iter().any(|&d| map.origin(d) == x) && w.iter().any(|&d| map.origin(d) == y))
                        .ok_or_else(|| Error::Internal("cube gadget has no face through both ends".into()))?
                        .clone();
                    let leaving = |z: usize| merged.iter().copied().find(|&d| map.origin(d) == z).unwrap();
                    let (ax, ay) = (leaving(x), leaving(y));
                    map.add_edge(u, Some(du), x, Some(ax))?;
                    map.add_edge(v, Some(dv), y, Some(ay))?;
                    outer = du;
                    CompletionAction::Gadget
                }
            }
            _ => {
                let (i, j) = (0..k)
                    .find_map(|i| {
                        let c = colour[twos[i].0];
                        let j = (1..k).map(|s| (i + s) % k).find(|&j| colour[twos[j].0] == c)?;
                        Some((i, j))
                    })
                    .ok_or_else(|| Error::Internal("no two degree-2 vertices share a colour".into()))?;
                let run: Vec<(usize, Dart)> = (0..=((j + k - i) % k)).map(|s| twos[(i + s) % k]).collect();
                let (v, dv) = *run.last().unwrap();
                let between = run.len() - 2;
                if between == 0 {
                    let (u, du) = run[0];
                    let x = map.add_vertex();
                    let e = map.add_edge(u, Some(du), x, None)?;
                    map.add_edge(v, Some(dv), x, Some(map.twin(e)))?;
                    outer = dv;
                    CompletionAction::Apex
                } else {
                    let attachments: Vec<RingAttachment> =
                        run.iter().map(|&(w, d)| RingAttachment { vertex: w, anchor: d, displaced: None }).collect();
                    let mut subdivided = vec![true; run.len() - 1];
                    subdivided[0] = false;
                    *subdivided.last_mut().unwrap() = false;
                    map.attach_ring(&attachments, &subdivided, false)?;
                    outer = dv;
                    CompletionAction::Path { between }
                }
            }
        };
        let colour = bipartition(&map)?;
        steps.push(CompletionStep { action, before, after: colour_counts(&map, &colour) });
    }
    let cubic = PlaneCubicMap::with_outer_dart(map, outer)?;
    Ok((cubic, steps))
}
