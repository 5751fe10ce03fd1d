use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coronoid::altan::{
    generalised_altan, generalised_altan_ordered, iterated_altan, new_face_degrees, patch_altan, traced_face_degrees,
    AdmissibleStructure, IterationVector,
};
use coronoid::gen::{random_benzenoid, random_coronoid, random_perforated_patch};
use coronoid::hexsystem::HexSystem;
use coronoid::kekule::verify_altan_theorem;
use coronoid::skeleton::{hole_stats, skeleton, BBCode, PerimeterKind};

fn random_system(rng: &mut ChaCha8Rng) -> HexSystem {
    if rng.gen_bool(0.5) {
        let size = rng.gen_range(1..=12);
        random_benzenoid(rng, size)
    } else {
        random_coronoid(rng, 16).unwrap()
    }
}

fn random_vector(rng: &mut ChaCha8Rng, k: usize, max: usize) -> IterationVector {
    IterationVector((0..k).map(|_| rng.gen_range(0..=max)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expansion_order_is_irrelevant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = AdmissibleStructure::from_coronoid(&random_system(&mut rng)).unwrap();
        let mut order: Vec<usize> = (0..s.cycle_count()).collect();
        let sorted = generalised_altan(&s, &order).unwrap();
        order.shuffle(&mut rng);
        let shuffled = generalised_altan_ordered(&s, &order).unwrap();
        prop_assert_eq!(sorted.structure.map().canonical_code(), shuffled.structure.map().canonical_code());
    }

    #[test]
    fn sizes_grow_by_the_degree_two_counts(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = AdmissibleStructure::from_coronoid(&random_system(&mut rng)).unwrap();
        let n = random_vector(&mut rng, s.cycle_count(), 3);
        let r = iterated_altan(&s, &n).unwrap();
        let added: usize = (0..s.cycle_count()).map(|j| n.0[j] * s.degree_two_count(j)).sum();
        let g = s.graph();
        prop_assert_eq!(r.graph().vertex_count(), g.vertex_count() + 2 * added);
        prop_assert_eq!(r.graph().edge_count(), g.edge_count() + 3 * added);
        prop_assert_eq!(r.spokes().len(), added);
        prop_assert_eq!(r.steps.len(), n.total());
    }

    #[test]
    fn new_faces_and_boundary_follow_the_code(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = AdmissibleStructure::from_coronoid(&random_system(&mut rng)).unwrap();
        let n = random_vector(&mut rng, s.cycle_count(), 2);
        let r = iterated_altan(&s, &n).unwrap();
        for (i, step) in r.steps.iter().enumerate() {
            let (degrees, _) = new_face_degrees(&step.code).unwrap();
            prop_assert_eq!(traced_face_degrees(&r, i), degrees);
        }
        for j in n.support() {
            let d = s.degree_two_count(j);
            let expected = BBCode::new([3u8, 2].repeat(d)).unwrap();
            prop_assert!(r.structure.cycle_code(j).equivalent(&expected));
        }
    }

    #[test]
    fn inner_perimeters_count_hole_boundary_vertices(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random_coronoid(&mut rng, 20).unwrap();
        let g = skeleton(&k).unwrap();
        let holes = k.complement_decomposition().holes;
        for p in g.perimeters().iter().filter(|p| p.kind == PerimeterKind::Inner) {
            let twos = g.bbc(p).count_twos();
            prop_assert_eq!(twos, hole_stats(&holes[p.hole.unwrap()]).unwrap().nu);
        }
    }

    #[test]
    fn patch_altan_stays_a_perforated_patch(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_perforated_patch(&mut rng, 10).unwrap();
        let k = p.admissible_perimeters().unwrap().len();
        let n = random_vector(&mut rng, k, 3);
        let q = patch_altan(&p, &n).unwrap().patch;
        prop_assert!(q.is_perforated_patch());
        prop_assert_eq!(q.complement_components().len(), p.complement_components().len());
        if p.is_2connected() {
            prop_assert!(q.is_2connected());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn kekule_count_doubles_per_expansion(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = rng.gen_range(1..=6);
        let k = random_benzenoid(&mut rng, size);
        let s = AdmissibleStructure::from_coronoid(&k).unwrap();
        let n = random_vector(&mut rng, 1, 2);
        prop_assert!(verify_altan_theorem(&s, &n).unwrap().all_ok());
    }
}
