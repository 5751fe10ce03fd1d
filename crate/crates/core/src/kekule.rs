//! Kekulé structures (perfect matchings), Pauling bond orders and the
//! altan counting theorem.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::altan::{iterated_altan, AdmissibleStructure, AltanResult, IterationVector};
use crate::error::{Error, Result};
use crate::graph::AbstractGraph;

/// Largest vertex count accepted by [`enumerate_kekule`].
pub const ENUMERATION_LIMIT: usize = 40;

/// Perfect-matching counter with a memo shared across queries on one graph.
///
/// Forced choices at degree-1 vertices are made first, components are
/// counted separately, and otherwise the recursion branches on the edges of
/// a vertex of least degree.
pub struct KekuleCounter<'a> {
    g: &'a AbstractGraph,
    memo: HashMap<FixedBitSet, BigUint>,
}

impl<'a> KekuleCounter<'a> {
    pub fn new(g: &'a AbstractGraph) -> Self {
        KekuleCounter { g, memo: HashMap::new() }
    }

    /// Perfect matchings of the whole graph.
    pub fn count(&mut self) -> BigUint {
        self.count_without(&[])
    }

    /// Perfect matchings of the graph with `removed` deleted.
    pub fn count_without(&mut self, removed: &[usize]) -> BigUint {
        let mut alive = FixedBitSet::with_capacity(self.g.vertex_count());
        alive.insert_range(..);
        for &v in removed {
            alive.set(v, false);
        }
        self.count_set(alive)
    }

    /// Matchings containing the edge `u v`.
    pub fn count_with_edge(&mut self, u: usize, v: usize) -> BigUint {
        self.count_without(&[u, v])
    }

    fn alive_degree(&self, alive: &FixedBitSet, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| alive.contains(w)).count()
    }

    fn count_set(&mut self, mut alive: FixedBitSet) -> BigUint {
        let mut stack: Vec<usize> = alive.ones().collect();
        while let Some(v) = stack.pop() {
            if !alive.contains(v) {
                continue;
            }
            match self.alive_degree(&alive, v) {
                0 => return BigUint::zero(),
                1 => {
                    let u = *self.g.neighbors(v).iter().find(|&&w| alive.contains(w)).unwrap();
                    alive.set(v, false);
                    alive.set(u, false);
                    stack.extend(self.g.neighbors(u).iter().filter(|&&w| alive.contains(w)));
                }
                _ => {}
            }
        }
        if alive.is_clear() {
            return BigUint::one();
        }
        if alive.count_ones(..) % 2 == 1 {
            return BigUint::zero();
        }
        if let Some(c) = self.memo.get(&alive) {
            return c.clone();
        }
        let components = self.components(&alive);
        let result = if components.len() > 1 {
            let mut product = BigUint::one();
            for comp in components {
                let c = self.count_set(comp);
                if c.is_zero() {
                    product = c;
                    break;
                }
                product *= c;
            }
            product
        } else {
            let v = alive.ones().min_by_key(|&v| self.alive_degree(&alive, v)).expect("non-empty vertex set");
            let mut sum = BigUint::zero();
            for &u in self.g.neighbors(v) {
                if alive.contains(u) {
                    let mut rest = alive.clone();
                    rest.set(v, false);
                    rest.set(u, false);
                    sum += self.count_set(rest);
                }
            }
            sum
        };
        self.memo.insert(alive, result.clone());
        result
    }

    fn components(&self, alive: &FixedBitSet) -> Vec<FixedBitSet> {
        let mut seen = FixedBitSet::with_capacity(alive.len());
        let mut out = Vec::new();
        for s in alive.ones() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = FixedBitSet::with_capacity(alive.len());
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in self.g.neighbors(v) {
                    if alive.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

/// Number of Kekulé structures of `g`.
pub fn count_kekule(g: &AbstractGraph) -> BigUint {
    KekuleCounter::new(g).count()
}

/// All Kekulé structures as sorted lists of edge indices into `g.edges()`.
pub fn enumerate_kekule(g: &AbstractGraph, cap: usize) -> Result<Vec<Vec<usize>>> {
    if g.vertex_count() > ENUMERATION_LIMIT {
        return Err(Error::TooLargeForEnumeration(g.vertex_count()));
    }
    let mut out = Vec::new();
    let mut matched = vec![false; g.vertex_count()];
    let mut current = Vec::new();
    enumerate_from(g, 0, &mut matched, &mut current, &mut out, cap)?;
    Ok(out)
}

fn enumerate_from(
    g: &AbstractGraph,
    start: usize,
    matched: &mut [bool],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    let Some(v) = (start..g.vertex_count()).find(|&v| !matched[v]) else {
        if out.len() == cap {
            return Err(Error::CapExceeded(cap));
        }
        let mut m = current.clone();
        m.sort_unstable();
        out.push(m);
        return Ok(());
    };
    matched[v] = true;
    for &u in g.neighbors(v) {
        if matched[u] {
            continue;
        }
        matched[u] = true;
        current.push(g.edge_index(v, u).expect("neighbour edge"));
        enumerate_from(g, v + 1, matched, current, out, cap)?;
        current.pop();
        matched[u] = false;
    }
    matched[v] = false;
    Ok(())
}

/// Per-edge fraction of Kekulé structures containing the edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BondOrders {
    pub kekule_count: BigUint,
    /// Structures containing each edge, aligned with `edges`.
    pub edge_counts: Vec<BigUint>,
    pub edges: Vec<(usize, usize)>,
}

impl BondOrders {
    pub fn order(&self, e: usize) -> BigRational {
        BigRational::new(self.edge_counts[e].clone().into(), self.kekule_count.clone().into())
    }

    pub fn orders(&self) -> Vec<BigRational> {
        (0..self.edges.len()).map(|e| self.order(e)).collect()
    }

    pub fn order_of(&self, u: usize, v: usize) -> Option<BigRational> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key).map(|e| self.order(e))
    }
}

/// Pauling bond orders of every edge of a Kekuléan graph.
pub fn pauling_bond_orders(g: &AbstractGraph) -> Result<BondOrders> {
    let mut counter = KekuleCounter::new(g);
    let k = counter.count();
    if k.is_zero() {
        return Err(Error::NoKekuleStructure);
    }
    let edge_counts = g.edges().iter().map(|&(u, v)| counter.count_with_edge(u, v)).collect();
    Ok(BondOrders { kekule_count: k, edge_counts, edges: g.edges().to_vec() })
}

/// Outcome of checking the altan counting theorem on one structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AltanReport {
    #[serde(rename = "K")]
    pub k: String,
    #[serde(rename = "Kprime")]
    pub k_prime: String,
    pub exponent_ok: bool,
    pub spokes_zero: bool,
    pub perimeter_half: bool,
    pub original_orders_preserved: bool,
}

impl AltanReport {
    pub fn all_ok(&self) -> bool {
        self.exponent_ok && self.spokes_zero && self.perimeter_half && self.original_orders_preserved
    }
}

/// Counts Kekulé structures before and after `Aⁿ` and checks
/// `K' = 2^|n| K`, that spokes lie in no structure, that new cycle edges lie
/// in exactly `K'/2` structures and that original edges keep their bond order.
pub fn verify_altan_theorem(s: &AdmissibleStructure, n: &IterationVector) -> Result<AltanReport> {
    let r = iterated_altan(s, n)?;
    Ok(check_altan(s, &r, n))
}

/// The checks of [`verify_altan_theorem`] on an already computed altan.
pub fn check_altan(s: &AdmissibleStructure, r: &AltanResult, n: &IterationVector) -> AltanReport {
    let g = s.graph();
    let h = r.graph();
    let mut before = KekuleCounter::new(&g);
    let mut after = KekuleCounter::new(&h);
    let k = before.count();
    let k2 = after.count();
    let exponent_ok = k2 == &k << n.total();
    let spokes_zero = r.spokes().iter().all(|&(u, v)| after.count_with_edge(u, v).is_zero());
    let perimeter_half = r.ring_edges().iter().all(|&(u, v)| after.count_with_edge(u, v) * 2u32 == k2);
    let original_orders_preserved = g.edges().iter().all(|&(u, v)| {
        // c/k == c'/k', cross-multiplied so that k = 0 is handled
        before.count_with_edge(u, v) * &k2 == after.count_with_edge(u, v) * &k
    });
    AltanReport {
        k: k.to_string(),
        k_prime: k2.to_string(),
        exponent_ok,
        spokes_zero,
        perimeter_half,
        original_orders_preserved,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexsystem::HexSystem;
    use crate::skeleton::skeleton;

    fn graph_of(p: &[(i32, i32)]) -> AbstractGraph {
        skeleton(&HexSystem::from_pairs(p).unwrap()).unwrap().to_graph()
    }

    fn cycle(n: usize) -> AbstractGraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        AbstractGraph::new(n, &edges).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_kekule(&cycle(6)), BigUint::from(2u32));
        assert_eq!(count_kekule(&cycle(5)), BigUint::zero());
        assert_eq!(count_kekule(&graph_of(&[(0, 0), (1, 0)])), BigUint::from(3u32));
        assert_eq!(count_kekule(&graph_of(&[(0, 0), (1, 0), (2, 0)])), BigUint::from(4u32));
        assert_eq!(count_kekule(&AbstractGraph::new(0, &[]).unwrap()), BigUint::one());
    }

    #[test]
    fn enumeration_matches() {
        let g = graph_of(&[(0, 0), (1, 0)]);
        let all = enumerate_kekule(&g, 100).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(enumerate_kekule(&g, 2), Err(Error::CapExceeded(2)));
        let empty = AbstractGraph::new(2, &[]).unwrap();
        assert!(enumerate_kekule(&empty, 10).unwrap().is_empty());
        assert_eq!(enumerate_kekule(&cycle(42), 10), Err(Error::TooLargeForEnumeration(42)));
    }

    #[test]
    fn benzene_bond_orders() {
        let b = pauling_bond_orders(&cycle(6)).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert!(b.orders().iter().all(|o| *o == half));
        assert_eq!(pauling_bond_orders(&cycle(3)), Err(Error::NoKekuleStructure));
    }

    #[test]
    fn altan_of_benzene_theorem() {
        let s = AdmissibleStructure::from_coronoid(&HexSystem::from_pairs(&[(0, 0)]).unwrap()).unwrap();
        let rep = verify_altan_theorem(&s, &IterationVector(vec![1])).unwrap();
        assert_eq!((rep.k.as_str(), rep.k_prime.as_str()), ("2", "4"));
        assert!(rep.all_ok());
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["Kprime"], "4");
        assert_eq!(json["exponentOk"], true);
    }
}
