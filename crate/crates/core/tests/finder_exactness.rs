//! Exactness of the production search against the naive oracles.

mod common;

use common::*;
use rand::Rng;

use ramsey_core::finders::{
    check_witness, connected_matching_number, find_cycle_at_least, find_cycle_exact,
    find_path_exact, max_matching,
};

#[test]
fn path_and_cycle_search_agree_with_oracle_on_random_graphs() {
    let mut rng = rng(0x5eed_0001);
    let densities = [0.15, 0.3, 0.5, 0.7, 0.85];
    for round in 0..500 {
        let n = rng.gen_range(4..=12);
        let p = densities[round % densities.len()];
        let g = random_graph(&mut rng, n, p);

        let kp = rng.gen_range(1..=n.min(10));
        let got = find_path_exact(&g, kp).unwrap();
        assert_eq!(
            got.is_some(),
            oracle_has_path(&g, kp),
            "path k={kp} round={round} edges={:?}",
            g.edges()
        );
        if let Some(vs) = got {
            assert_eq!(vs.len(), kp);
            check_witness(&g, &ramsey_core::finders::StructureWitness::Path(vs)).unwrap();
        }

        let kc = rng.gen_range(3..=n.min(10));
        let got = find_cycle_exact(&g, kc).unwrap();
        assert_eq!(
            got.is_some(),
            oracle_has_cycle(&g, kc),
            "cycle k={kc} round={round} edges={:?}",
            g.edges()
        );
        if let Some(vs) = got {
            assert_eq!(vs.len(), kc);
            check_witness(&g, &ramsey_core::finders::StructureWitness::Cycle(vs)).unwrap();
        }

        let got = find_cycle_at_least(&g, kc).unwrap();
        assert_eq!(
            got.is_some(),
            oracle_has_cycle_at_least(&g, kc),
            "cycle>={kc} round={round} edges={:?}",
            g.edges()
        );
        if let Some(vs) = got {
            assert!(vs.len() >= kc);
            check_witness(&g, &ramsey_core::finders::StructureWitness::Cycle(vs)).unwrap();
        }
    }
}

#[test]
fn hamiltonian_sized_targets_agree_with_oracle() {
    let mut rng = rng(0x5eed_0002);
    for round in 0..100 {
        let n = rng.gen_range(4..=9);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(
            find_path_exact(&g, n).unwrap().is_some(),
            oracle_has_path(&g, n),
            "ham path round={round}"
        );
        assert_eq!(
            find_cycle_exact(&g, n).unwrap().is_some(),
            oracle_has_cycle(&g, n),
            "ham cycle round={round}"
        );
    }
}

#[test]
fn search_is_monotone_in_the_target_size() {
    let mut rng = rng(0x5eed_0003);
    for _ in 0..120 {
        let n = rng.gen_range(4..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        for k in 2..=n {
            if find_path_exact(&g, k).unwrap().is_some() {
                assert!(
                    find_path_exact(&g, k - 1).unwrap().is_some(),
                    "P{k} found but P{} missing", k - 1
                );
            }
            if k >= 3 && find_cycle_exact(&g, k).unwrap().is_some() {
                assert!(find_cycle_at_least(&g, k).unwrap().is_some());
            }
        }
    }
}

#[test]
fn matching_agrees_with_exhaustive_enumeration() {
    let mut rng = rng(0x5eed_0004);
    for round in 0..200 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let (size, w) = max_matching(&g);
        assert_eq!(size, oracle_max_matching(&g), "round={round} edges={:?}", g.edges());
        check_witness(&g, &w).unwrap();

        let (csize, cw) = connected_matching_number(&g);
        assert_eq!(
            csize,
            oracle_connected_matching(&g),
            "round={round} edges={:?}",
            g.edges()
        );
        check_witness(&g, &cw).unwrap();
        assert!(csize <= size);
    }
}
