//! Generators of hexagonal systems and perforated patches for tests and the CLI.

use std::collections::{BTreeSet, HashSet};

use rand::seq::IteratorRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hexgrid::{canonical_form, HexCoord};
use crate::hexsystem::HexSystem;
use crate::planemap::{cubic_completion, PatchSet};
use crate::skeleton::skeleton;

/// Connected system of `size` cells grown from the origin by random neighbours.
pub fn random_polyhex<R: Rng>(rng: &mut R, size: usize) -> HexSystem {
    let mut k = HexSystem::new();
    if size == 0 {
        return k;
    }
    k.insert(HexCoord::ORIGIN);
    while k.len() < size {
        let frontier: BTreeSet<HexCoord> = k.iter().flat_map(|h| h.neighbors()).filter(|h| !k.contains(*h)).collect();
        let next = *frontier.iter().choose(rng).expect("finite systems have neighbours");
        k.insert(next);
    }
    k
}

/// Random benzenoid: a random polyhex of `size` cells with its holes filled.
pub fn random_benzenoid<R: Rng>(rng: &mut R, size: usize) -> HexSystem {
    random_polyhex(rng, size.max(1)).benzenoid_closure().expect("polyhexes are connected")
}

/// Random non-degenerate coronoid with at least one hole and at most
/// `max_cells` cells: the ring around a random benzenoid hole of 2 to 4
/// cells, grown by random cells that open no new hole.
pub fn random_coronoid<R: Rng>(rng: &mut R, max_cells: usize) -> Result<HexSystem> {
    for _ in 0..1000 {
        let size = rng.gen_range(2..=4);
        let hole = random_benzenoid(rng, size);
        let mut k: HexSystem = hole.iter().flat_map(|h| h.neighbors()).filter(|h| !hole.contains(*h)).collect();
        if k.len() > max_cells {
            continue;
        }
        let target = rng.gen_range(k.len()..=max_cells);
        let mut stalled = 0;
        while k.len() < target && stalled < 50 {
            let frontier: BTreeSet<HexCoord> =
                k.iter().flat_map(|h| h.neighbors()).filter(|h| !k.contains(*h) && !hole.contains(*h)).collect();
            let Some(&next) = frontier.iter().choose(rng) else { break };
            let mut grown = k.clone();
            grown.insert(next);
            if grown.complement_decomposition().d() == 1 && !grown.is_degenerate() {
                k = grown;
                stalled = 0;
            } else {
                stalled += 1;
            }
        }
        if k.complement_decomposition().d() >= 1 && !k.is_degenerate() && k.len() <= max_cells {
            return Ok(k);
        }
    }
    Err(Error::Internal(format!("no coronoid found within {max_cells} cells")))
}

/// Every benzenoid with exactly `h` cells, one per lattice-symmetry class,
/// in canonical form and sorted.
pub fn all_benzenoids(h: usize) -> Vec<HexSystem> {
    all_polyhexes(h).into_iter().filter(|k| k.is_benzenoid()).collect()
}

/// Every connected system of `h` cells up to lattice symmetry, in canonical form.
pub fn all_polyhexes(h: usize) -> Vec<HexSystem> {
    if h == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Vec<HexCoord>> = BTreeSet::from([vec![HexCoord::ORIGIN]]);
    for _ in 1..h {
        let mut next = BTreeSet::new();
        for cells in &level {
            let k: HashSet<HexCoord> = cells.iter().copied().collect();
            let frontier: BTreeSet<HexCoord> =
                cells.iter().flat_map(|c| c.neighbors()).filter(|c| !k.contains(c)).collect();
            for f in frontier {
                let grown: Vec<HexCoord> = cells.iter().copied().chain([f]).collect();
                next.insert(canonical_form(&grown).expect("non-empty"));
            }
        }
        level = next;
    }
    level.into_iter().map(|cells| cells.into_iter().collect()).collect()
}

/// The hexagons of a non-degenerate coronoid as a perforated patch: the
/// skeleton of its benzenoid closure is completed to a plane cubic graph
/// and the faces of the coronoid's own cells are selected.
pub fn coronoid_patch(k: &HexSystem) -> Result<PatchSet> {
    if k.is_degenerate() {
        return Err(Error::DegenerateCoronoid);
    }
    let closure = k.benzenoid_closure()?;
    let g = skeleton(&closure)?;
    let map = g.to_plane_map();
    let outer = g.face_dart(&map, &g.perimeters()[0]);
    let cubic = cubic_completion(&map, outer)?;
    let faces = cubic.map().faces();
    let selected: Vec<usize> = k
        .iter()
        .map(|h| {
            let c = h.boundary_cycle();
            let d = map.dart_between(g.index_of(c[0]).unwrap(), g.index_of(c[1]).unwrap()).expect("hexagon edge");
            faces.face_of(d)
        })
        .collect();
    PatchSet::perforated(cubic, selected)
}

/// Random perforated patch with admissible perimeters: either the cells of a
/// random benzenoid or coronoid, or a random connected set of bounded faces
/// of its cubic completion.
pub fn random_perforated_patch<R: Rng>(rng: &mut R, max_cells: usize) -> Result<PatchSet> {
    for _ in 0..1000 {
        let k = if rng.gen_bool(0.5) {
            let size = rng.gen_range(1..=max_cells.max(1));
            random_benzenoid(rng, size)
        } else {
            random_coronoid(rng, max_cells.max(8))?
        };
        let base = coronoid_patch(&k)?;
        let p = if rng.gen_bool(0.5) {
            base
        } else {
            let outer = base.map().outer_face();
            let count = base.face_structure().count();
            let bounded: Vec<usize> = (0..count).filter(|&f| f != outer).collect();
            let target = rng.gen_range(1..=bounded.len());
            let mut chosen = BTreeSet::from([*base.faces().iter().choose(rng).unwrap()]);
            while chosen.len() < target {
                let candidates: BTreeSet<usize> = chosen
                    .iter()
                    .flat_map(|&f| base.face_structure().neighbors(f))
                    .filter(|f| *f != outer && !chosen.contains(f))
                    .collect();
                let Some(&f) = candidates.iter().choose(rng) else { break };
                chosen.insert(f);
            }
            match PatchSet::perforated(base.map().clone(), chosen) {
                Ok(p) => p,
                Err(_) => continue,
            }
        };
        if p.admissible_perimeters().is_ok() {
            return Ok(p);
        }
    }
    Err(Error::Internal("no admissible perforated patch found".into()))
}
