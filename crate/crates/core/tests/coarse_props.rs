use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::Rng;

use ulf_core::actions::{box_space, schreier_graph, ActionGenerators};
use ulf_core::coarse::{
    filtration_from_generators, metric_from_filtration, Dist, Entourage, UlfGraph,
};
use ulf_core::generators::{random_connected_graph, seeded};

fn random_entourage<R: Rng>(rng: &mut R, n: usize, p: f64) -> Entourage {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Entourage::new(n, pairs).unwrap()
}

fn brute_compose(a: &Entourage, b: &Entourage) -> Entourage {
    let n = a.ground_size();
    let mut pairs = Vec::new();
    for &(x, y) in a.pairs() {
        for z in 0..n {
            if b.contains(y, z) {
                pairs.push((x, z));
            }
        }
    }
    Entourage::new(n, pairs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { rng_seed: RngSeed::Fixed(0x5eed), ..ProptestConfig::with_cases(64) })]

    #[test]
    fn compose_is_associative(seed in any::<u64>(), n in 1usize..=12) {
        let mut rng = seeded(seed);
        let [a, b, c] = [0.2, 0.3, 0.15].map(|p| random_entourage(&mut rng, n, p));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(a.compose(&b).unwrap(), brute_compose(&a, &b));
        prop_assert_eq!(a.compose(&b).unwrap().inverse(), b.inverse().compose(&a.inverse()).unwrap());
    }

    #[test]
    fn filtration_metric_is_a_metric(seed in any::<u64>(), n in 1usize..=30, k in 0usize..=3, depth in 0usize..=6) {
        let mut rng = seeded(seed);
        let gens: Vec<Entourage> = (0..k).map(|_| random_entourage(&mut rng, n, (1.5 / n as f64).min(1.0))).collect();
        let f = filtration_from_generators(n, &gens, depth).unwrap();
        prop_assert!(f.check_invariants().is_ok());
        let d = metric_from_filtration(&f);
        for x in 0..n {
            prop_assert_eq!(d.get(x, x), Dist::ZERO);
            for y in 0..n {
                prop_assert_eq!(d.get(x, y), d.get(y, x));
            }
        }
        if depth >= n {
            prop_assert!(d.check_axioms().is_ok());
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let via = d.get(x, y) + d.get(y, z);
                    // a finite detour longer than the depth is invisible to the truncated metric
                    if via.finite().is_some_and(|v| v as usize <= depth) {
                        prop_assert!(d.get(x, z) <= via);
                    }
                }
            }
        }
    }

    #[test]
    fn box_space_triangle_inequality(seed in any::<u64>(), count in 1usize..=3) {
        let mut rng = seeded(seed);
        let comps: Vec<UlfGraph> = (0..count)
            .map(|_| {
                let n = rng.gen_range(1..=12);
                random_connected_graph(&mut rng, n, 3, 3).unwrap()
            })
            .collect();
        let b = box_space(comps).unwrap();
        let d = b.metric();
        prop_assert!(d.check_axioms().is_ok());
        for x in 0..b.len() {
            for y in 0..b.len() {
                prop_assert!(d.get(x, y).is_finite());
                for z in 0..b.len() {
                    prop_assert!(d.get(x, z) <= d.get(x, y) + d.get(y, z));
                }
            }
        }
    }
}

#[test]
fn cyclic_schreier_graph_is_the_cycle() {
    for m in 3..=40 {
        assert_eq!(
            schreier_graph(&ActionGenerators::cyclic(m)).unwrap(),
            UlfGraph::cycle(m)
        );
    }
}

#[test]
fn box_cross_distance_example() {
    let b = box_space(vec![UlfGraph::cycle(3), UlfGraph::cycle(4)]).unwrap();
    // f(1) = 1 + 1, f(2) = 2 + 2
    assert_eq!(b.metric().get(0, 3), Dist::Finite(6));
}
