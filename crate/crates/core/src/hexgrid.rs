//! Coordinates, incidence and symmetries of the infinite hexagonal grid.
//!
//! Hexagons are pointy-top with unit side. The hexagon `(q, r)` is centred at
//! `(√3·q + √3/2·r, 3/2·r)`, so the two unit axial translations are the
//! lattice translations by `(√3, 0)` and `(√3/2, 3/2)`.
//!
//! Every grid vertex is the top corner of exactly one hexagon or the bottom
//! corner of exactly one hexagon, which gives the integer encoding
//! `(q, r, t)` with `t = 0` for a top corner and `t = 1` for a bottom corner.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Axial offsets of the six neighbours, counterclockwise starting east.
pub const DIRECTIONS: [(i32, i32); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// A hexagon of the grid in axial coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HexCoord {
    pub q: i32,
    pub r: i32,
}

impl HexCoord {
    pub const fn new(q: i32, r: i32) -> Self {
        HexCoord { q, r }
    }

    pub const ORIGIN: HexCoord = HexCoord { q: 0, r: 0 };

    pub fn offset(self, dq: i32, dr: i32) -> Self {
        HexCoord::new(self.q + dq, self.r + dr)
    }

    /// The six neighbouring hexagons, counterclockwise starting east.
    pub fn neighbors(self) -> [HexCoord; 6] {
        DIRECTIONS.map(|(dq, dr)| self.offset(dq, dr))
    }

    pub fn is_adjacent(self, other: HexCoord) -> bool {
        let (dq, dr) = (other.q - self.q, other.r - self.r);
        DIRECTIONS.contains(&(dq, dr))
    }

    /// Corners of the hexagon, counterclockwise starting at the top corner.
    pub fn boundary_cycle(self) -> [GridVertex; 6] {
        let HexCoord { q, r } = self;
        [
            GridVertex::top(q, r),
            GridVertex::bottom(q - 1, r + 1),
            GridVertex::top(q, r - 1),
            GridVertex::bottom(q, r),
            GridVertex::top(q + 1, r - 1),
            GridVertex::bottom(q, r + 1),
        ]
    }

    /// Edges of the hexagon in the order of [`HexCoord::boundary_cycle`].
    pub fn boundary_edges(self) -> [GridEdge; 6] {
        let c = self.boundary_cycle();
        std::array::from_fn(|i| GridEdge::from_adjacent(c[i], c[(i + 1) % 6]))
    }

    /// Centre in the plane.
    pub fn center(self) -> (f64, f64) {
        let s = 3f64.sqrt();
        (s * self.q as f64 + s / 2.0 * self.r as f64, 1.5 * self.r as f64)
    }
}

impl fmt::Display for HexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.r)
    }
}

impl From<(i32, i32)> for HexCoord {
    fn from((q, r): (i32, i32)) -> Self {
        HexCoord::new(q, r)
    }
}

/// The two vertex classes of the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    Top,
    Bottom,
}

/// A vertex of the hexagonal grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridVertex {
    pub q: i32,
    pub r: i32,
    pub corner: Corner,
}

impl GridVertex {
    pub const fn top(q: i32, r: i32) -> Self {
        GridVertex { q, r, corner: Corner::Top }
    }

    pub const fn bottom(q: i32, r: i32) -> Self {
        GridVertex { q, r, corner: Corner::Bottom }
    }

    /// Vertex class as the integer `t` (0 for top, 1 for bottom).
    pub fn t(self) -> u8 {
        match self.corner {
            Corner::Top => 0,
            Corner::Bottom => 1,
        }
    }

    pub fn from_qrt(q: i32, r: i32, t: u8) -> Option<Self> {
        match t {
            0 => Some(GridVertex::top(q, r)),
            1 => Some(GridVertex::bottom(q, r)),
            _ => None,
        }
    }

    /// The three adjacent grid vertices, counterclockwise by direction.
    pub fn neighbors(self) -> [GridVertex; 3] {
        let GridVertex { q, r, corner } = self;
        match corner {
            // up, lower left, lower right
            Corner::Top => {
                [GridVertex::bottom(q - 1, r + 2), GridVertex::bottom(q - 1, r + 1), GridVertex::bottom(q, r + 1)]
            }
            // upper right, upper left, down
            Corner::Bottom => [GridVertex::top(q + 1, r - 1), GridVertex::top(q, r - 1), GridVertex::top(q + 1, r - 2)],
        }
    }

    /// The three hexagons meeting at this vertex.
    pub fn hexagons(self) -> [HexCoord; 3] {
        let GridVertex { q, r, corner } = self;
        match corner {
            Corner::Top => [HexCoord::new(q, r), HexCoord::new(q - 1, r + 1), HexCoord::new(q, r + 1)],
            Corner::Bottom => [HexCoord::new(q, r), HexCoord::new(q, r - 1), HexCoord::new(q + 1, r - 1)],
        }
    }

    pub fn is_adjacent(self, other: GridVertex) -> bool {
        self.neighbors().contains(&other)
    }

    /// Exact position as `(x, y)` with `x` in units of `√3/2` and `y` in units of `1/2`.
    pub fn lattice_position(self) -> (i32, i32) {
        let x = 2 * self.q + self.r;
        let y = match self.corner {
            Corner::Top => 3 * self.r + 2,
            Corner::Bottom => 3 * self.r - 2,
        };
        (x, y)
    }

    /// Position in the plane.
    pub fn position(self) -> (f64, f64) {
        let (x, y) = self.lattice_position();
        (x as f64 * 3f64.sqrt() / 2.0, y as f64 / 2.0)
    }

    /// Orders vertices by `x`, then by `y`; "leftmost, then lowest".
    pub fn cmp_leftmost(self, other: GridVertex) -> Ordering {
        self.lattice_position().cmp(&other.lattice_position())
    }
}

impl fmt::Display for GridVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.q, self.r, self.t())
    }
}

/// An edge of the hexagonal grid, stored with ordered endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    a: GridVertex,
    b: GridVertex,
}

impl GridEdge {
    /// Returns `None` when the vertices are not adjacent in the grid.
    pub fn new(u: GridVertex, v: GridVertex) -> Option<Self> {
        u.is_adjacent(v).then(|| GridEdge::from_adjacent(u, v))
    }

    fn from_adjacent(u: GridVertex, v: GridVertex) -> Self {
        if u <= v {
            GridEdge { a: u, b: v }
        } else {
            GridEdge { a: v, b: u }
        }
    }

    pub fn endpoints(self) -> (GridVertex, GridVertex) {
        (self.a, self.b)
    }

    /// The two hexagons sharing this edge.
    pub fn hexagons(self) -> [HexCoord; 2] {
        let ha = self.a.hexagons();
        let hb = self.b.hexagons();
        let mut out = [HexCoord::ORIGIN; 2];
        let mut k = 0;
        for h in ha {
            if hb.contains(&h) {
                out[k] = h;
                k += 1;
            }
        }
        debug_assert_eq!(k, 2);
        out
    }
}

type Matrix = [[i32; 2]; 2];

const IDENTITY: Matrix = [[1, 0], [0, 1]];
// (q, r) -> (-r, q + r): rotation by 60 degrees counterclockwise.
const ROTATION: Matrix = [[0, -1], [1, 1]];
// (q, r) -> (-q - r, r): reflection in the vertical axis.
const REFLECTION: Matrix = [[-1, -1], [0, 1]];

fn mul(a: Matrix, b: Matrix) -> Matrix {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn point_matrix(index: u8) -> Matrix {
    let mut m = if index >= 6 { REFLECTION } else { IDENTITY };
    for _ in 0..index % 6 {
        m = mul(ROTATION, m);
    }
    m
}

fn point_index(m: Matrix) -> u8 {
    (0..12).find(|&k| point_matrix(k) == m).expect("matrix outside the point group")
}

/// An isometry of the plane mapping hexagons to hexagons.
///
/// The point part `point` in `0..12` encodes `R^(point mod 6) ∘ F^(point div 6)`
/// where `R` is the counterclockwise rotation by 60 degrees about the origin
/// hexagon's centre and `F` is the reflection `x ↦ -x`. The translation is
/// applied last.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    point: u8,
    dq: i32,
    dr: i32,
}

impl Isometry {
    pub fn new(point: u8, dq: i32, dr: i32) -> Result<Self> {
        if point >= 12 {
            return Err(Error::InvalidIsometry(point));
        }
        Ok(Isometry { point, dq, dr })
    }

    pub const fn identity() -> Self {
        Isometry { point: 0, dq: 0, dr: 0 }
    }

    pub const fn translation(dq: i32, dr: i32) -> Self {
        Isometry { point: 0, dq, dr }
    }

    /// Translation by `(√3, 0)`.
    pub const fn shift_x() -> Self {
        Isometry::translation(1, 0)
    }

    /// Translation by `(√3/2, 3/2)`.
    pub const fn shift_diagonal() -> Self {
        Isometry::translation(0, 1)
    }

    /// Reflection `(x, y) ↦ (-x, y)`.
    pub const fn reflection() -> Self {
        Isometry { point: 6, dq: 0, dr: 0 }
    }

    /// Counterclockwise rotation by 60 degrees about the origin.
    pub const fn rotation() -> Self {
        Isometry { point: 1, dq: 0, dr: 0 }
    }

    pub fn point_index(self) -> u8 {
        self.point
    }

    pub fn translation_part(self) -> (i32, i32) {
        (self.dq, self.dr)
    }

    pub fn apply(self, h: HexCoord) -> HexCoord {
        let m = point_matrix(self.point);
        HexCoord::new(m[0][0] * h.q + m[0][1] * h.r + self.dq, m[1][0] * h.q + m[1][1] * h.r + self.dr)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Isometry) -> Isometry {
        let a = point_matrix(self.point);
        let b = point_matrix(other.point);
        let t = (a[0][0] * other.dq + a[0][1] * other.dr + self.dq, a[1][0] * other.dq + a[1][1] * other.dr + self.dr);
        Isometry { point: point_index(mul(a, b)), dq: t.0, dr: t.1 }
    }

    pub fn inverse(self) -> Isometry {
        let inv = (0..12)
            .find(|&k| mul(point_matrix(k), point_matrix(self.point)) == IDENTITY)
            .expect("point group is closed under inverses");
        let m = point_matrix(inv);
        Isometry {
            point: inv,
            dq: -(m[0][0] * self.dq + m[0][1] * self.dr),
            dr: -(m[1][0] * self.dq + m[1][1] * self.dr),
        }
    }

    /// All twelve point-group elements with zero translation.
    pub fn point_group() -> impl Iterator<Item = Isometry> {
        (0..12).map(|k| Isometry { point: k, dq: 0, dr: 0 })
    }
}

/// Canonical representative of a hexagon set up to isometry.
///
/// Among the twelve point-group images, each translated so that its
/// lexicographically smallest cell is the origin, returns the
/// lexicographically smallest sorted cell list.
pub fn canonical_form<'a, I>(cells: I) -> Result<Vec<HexCoord>>
where
    I: IntoIterator<Item = &'a HexCoord>,
{
    let cells: Vec<HexCoord> = cells.into_iter().copied().collect();
    if cells.is_empty() {
        return Err(Error::EmptySystem);
    }
    let mut best: Option<Vec<HexCoord>> = None;
    for iso in Isometry::point_group() {
        let mut image: Vec<HexCoord> = cells.iter().map(|&h| iso.apply(h)).collect();
        image.sort_unstable();
        image.dedup();
        let min = image[0];
        for h in image.iter_mut() {
            *h = h.offset(-min.q, -min.r);
        }
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    Ok(best.unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn patch() -> Vec<HexCoord> {
        let mut v = Vec::new();
        for q in -2..=2 {
            for r in -2..=2 {
                v.push(HexCoord::new(q, r));
            }
        }
        v
    }

    #[test]
    fn origin_neighbors() {
        let n: HashSet<_> = HexCoord::ORIGIN.neighbors().into_iter().collect();
        let expected: HashSet<_> =
            [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)].into_iter().map(HexCoord::from).collect();
        assert_eq!(n, expected);
    }

    #[test]
    fn neighbor_centres_at_distance_sqrt3() {
        let (x0, y0) = HexCoord::new(2, -1).center();
        for n in HexCoord::new(2, -1).neighbors() {
            let (x, y) = n.center();
            assert!(((x - x0).hypot(y - y0) - 3f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn adjacent_hexagons_share_two_neighbors() {
        for a in patch() {
            for b in patch() {
                let na: HashSet<_> = a.neighbors().into_iter().collect();
                let common = b.neighbors().iter().filter(|h| na.contains(h)).count();
                if a.is_adjacent(b) {
                    assert_eq!(common, 2);
                }
            }
        }
    }

    #[test]
    fn boundary_cycle_is_counterclockwise_unit_hexagon() {
        for h in patch() {
            let c = h.boundary_cycle();
            let set: HashSet<_> = c.iter().collect();
            assert_eq!(set.len(), 6);
            let (cx, cy) = h.center();
            let mut area = 0.0;
            for i in 0..6 {
                let (x1, y1) = c[i].position();
                let (x2, y2) = c[(i + 1) % 6].position();
                assert!(((x1 - cx).hypot(y1 - cy) - 1.0).abs() < 1e-12);
                assert!(((x2 - x1).hypot(y2 - y1) - 1.0).abs() < 1e-12);
                assert!(c[i].is_adjacent(c[(i + 1) % 6]));
                area += x1 * y2 - x2 * y1;
            }
            assert!(area > 0.0);
            for v in c {
                assert!(v.hexagons().contains(&h));
            }
        }
    }

    #[test]
    fn boundary_sharing_matches_adjacency() {
        for a in patch() {
            for b in patch() {
                if a == b {
                    continue;
                }
                let ca: HashSet<_> = a.boundary_cycle().into_iter().collect();
                let shared = b.boundary_cycle().iter().filter(|v| ca.contains(v)).count();
                if a.is_adjacent(b) {
                    assert_eq!(shared, 2);
                } else {
                    assert!(shared <= 1);
                }
            }
        }
    }

    #[test]
    fn vertex_incidence() {
        for h in patch() {
            for v in h.boundary_cycle() {
                let hs: HashSet<_> = v.hexagons().into_iter().collect();
                assert_eq!(hs.len(), 3);
                for n in v.neighbors() {
                    assert!(n.neighbors().contains(&v));
                    let e = GridEdge::new(v, n).unwrap();
                    let [h1, h2] = e.hexagons();
                    assert_ne!(h1, h2);
                    assert!(h1.is_adjacent(h2));
                }
            }
        }
    }

    #[test]
    fn rotation_has_order_six_and_reflection_two() {
        let mut r = Isometry::identity();
        for _ in 0..6 {
            r = Isometry::rotation().compose(r);
        }
        assert_eq!(r, Isometry::identity());
        let f = Isometry::reflection();
        assert_eq!(f.compose(f), Isometry::identity());
        for h in patch() {
            assert_eq!(Isometry::identity().apply(h), h);
        }
    }

    #[test]
    fn rotation_and_reflection_act_geometrically() {
        for h in patch() {
            let (x, y) = h.center();
            let (xr, yr) = Isometry::rotation().apply(h).center();
            let (c, s) = (0.5, 3f64.sqrt() / 2.0);
            assert!((xr - (c * x - s * y)).abs() < 1e-9 && (yr - (s * x + c * y)).abs() < 1e-9);
            let (xf, yf) = Isometry::reflection().apply(h).center();
            assert!((xf + x).abs() < 1e-9 && (yf - y).abs() < 1e-9);
            let (xt, yt) = Isometry::shift_x().apply(h).center();
            assert!((xt - x - 3f64.sqrt()).abs() < 1e-9 && (yt - y).abs() < 1e-9);
            let (xd, yd) = Isometry::shift_diagonal().apply(h).center();
            assert!((xd - x - 3f64.sqrt() / 2.0).abs() < 1e-9 && (yd - y - 1.5).abs() < 1e-9);
        }
    }

    #[test]
    fn single_cell_canonical_form() {
        assert_eq!(canonical_form(&[HexCoord::new(5, 7)]).unwrap(), vec![HexCoord::ORIGIN]);
        assert_eq!(canonical_form(&[]), Err(Error::EmptySystem));
    }
}
