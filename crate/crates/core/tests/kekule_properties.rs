use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coronoid::graph::AbstractGraph;
use coronoid::kekule::{count_kekule, enumerate_kekule, pauling_bond_orders};
use coronoid::Error;

/// Random simple graph on `n` vertices, each pair an edge with probability `p`.
fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> AbstractGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    AbstractGraph::new(n, &edges).unwrap()
}

/// Perfect matchings by adjacency matrix, matching the lowest free vertex first.
fn oracle_count(n: usize, adj: &[Vec<bool>], free: u64) -> u64 {
    if free == 0 {
        return 1;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    (0..n).filter(|&u| rest & (1 << u) != 0 && adj[v][u]).map(|u| oracle_count(n, adj, rest & !(1 << u))).sum()
}

fn oracle(g: &AbstractGraph) -> u64 {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    oracle_count(n, &adj, if n == 0 { 0 } else { (1u64 << n) - 1 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn counting_agrees_with_enumeration(seed in any::<u64>(), n in 0usize..=20, p in 0.05f64..0.35) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        let expected = oracle(&g);
        prop_assert_eq!(count_kekule(&g), BigUint::from(expected));
        if expected <= 10_000 {
            let all = enumerate_kekule(&g, 10_000).unwrap();
            prop_assert_eq!(all.len() as u64, expected);
            for m in &all {
                let mut covered = vec![0; n];
                for &e in m {
                    let (u, v) = g.edges()[e];
                    covered[u] += 1;
                    covered[v] += 1;
                }
                prop_assert!(covered.iter().all(|&c| c == 1));
            }
        }
    }

    #[test]
    fn bond_orders_sum_to_one_at_each_vertex(seed in any::<u64>(), half in 1usize..=10, p in 0.15f64..0.4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 2 * half, p);
        match pauling_bond_orders(&g) {
            Ok(b) => {
                prop_assert!(!b.kekule_count.is_zero());
                for v in 0..g.vertex_count() {
                    let sum = g.neighbors(v).iter().fold(BigRational::zero(), |acc, &u| acc + b.order_of(v, u).unwrap());
                    prop_assert_eq!(sum, BigRational::one());
                }
            }
            Err(e) => {
                prop_assert_eq!(e, Error::NoKekuleStructure);
                prop_assert_eq!(oracle(&g), 0);
            }
        }
    }

    #[test]
    fn count_is_invariant_under_relabelling(seed in any::<u64>(), n in 0usize..=20, p in 0.05f64..0.35) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(count_kekule(&g), count_kekule(&h));
    }

    #[test]
    fn odd_graphs_have_no_structure(seed in any::<u64>(), half in 0usize..10, p in 0.1f64..0.9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 2 * half + 1, p);
        prop_assert!(count_kekule(&g).is_zero());
        prop_assert_eq!(pauling_bond_orders(&g).unwrap_err(), Error::NoKekuleStructure);
    }
}

#[test]
fn enumeration_limits() {
    let edges: Vec<(usize, usize)> = (0..42).map(|i| (i, (i + 1) % 42)).collect();
    let g = AbstractGraph::new(42, &edges).unwrap();
    assert_eq!(enumerate_kekule(&g, 10), Err(Error::TooLargeForEnumeration(42)));
    assert_eq!(count_kekule(&g), BigUint::from(2u32));
    let edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    let g = AbstractGraph::new(6, &edges).unwrap();
    assert_eq!(enumerate_kekule(&g, 1), Err(Error::CapExceeded(1)));
}
