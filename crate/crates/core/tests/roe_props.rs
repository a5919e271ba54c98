use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::Rng;

use ulf_core::actions::box_space;
use ulf_core::coarse::{Dist, UlfGraph};
use ulf_core::generators::{random_connected_graph, random_regular_graph, seeded};
use ulf_core::roe::{
    block_constant_ghost, compress, ghost_profile, nonneg_top_eigenvector, operator_norm,
    propagation, sparse_diagonal, PropOperator, SparseFamily,
};

fn random_banded<R: Rng>(rng: &mut R, g: &UlfGraph, r: usize, p: f64) -> PropOperator {
    let d = g.metric();
    let n = g.len();
    let m = DMatrix::from_fn(n, n, |x, y| {
        if d.get(x, y).within(r) && rng.gen_bool(p) {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    PropOperator::from_matrix(m).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { rng_seed: RngSeed::Fixed(0x5eed), ..ProptestConfig::with_cases(100) })]

    #[test]
    fn propagation_is_subadditive_and_monotone(seed in any::<u64>(), n in 1usize..=40) {
        let mut rng = seeded(seed);
        let g = random_connected_graph(&mut rng, n, 3, n / 3).unwrap();
        let d = g.metric();
        let (ra, rb) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let a = random_banded(&mut rng, &g, ra, 0.4);
        let b = random_banded(&mut rng, &g, rb, 0.4);
        let pa = propagation(&a, d).unwrap();
        let pb = propagation(&b, d).unwrap();
        prop_assert!(pa.within(ra) && pb.within(rb));
        prop_assert!(propagation(&a.mul(&b).unwrap(), d).unwrap() <= pa + pb);
        // growing the support of a into a ∪ b never shrinks the propagation
        let grown = DMatrix::from_fn(n, n, |x, y| {
            if b.entry(x, y) != Complex64::new(0.0, 0.0) { Complex64::new(1.0, 0.0) } else { a.entry(x, y) }
        });
        prop_assert!(propagation(&PropOperator::from_matrix(grown).unwrap(), d).unwrap() >= pa);
    }

    #[test]
    fn compress_then_embed_restricts_exactly(seed in any::<u64>(), n in 1usize..=25, s in 0usize..=3) {
        let mut rng = seeded(seed);
        let g = random_connected_graph(&mut rng, n, 3, 2).unwrap();
        let d = g.metric();
        let a = random_banded(&mut rng, &g, s, 0.6);
        let phi = compress(&a, s, d).unwrap();
        for x in 0..n {
            let ball = d.ball(x, s);
            prop_assert_eq!(phi.ball(x), ball.as_slice());
            let e = phi.embed(x);
            for u in 0..n {
                for v in 0..n {
                    let inside = ball.contains(&u) && ball.contains(&v);
                    let expect = if inside { a.entry(u, v) } else { Complex64::new(0.0, 0.0) };
                    prop_assert_eq!(e[(u, v)], expect);
                }
            }
        }
    }

    #[test]
    fn top_eigenvector_is_nonnegative(seed in any::<u64>(), n in 1usize..=12) {
        let mut rng = seeded(seed);
        let b = DMatrix::from_fn(n, n, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let psd = &b * b.adjoint();
        let t = PropOperator::from_matrix(psd).unwrap();
        let norm = operator_norm(&t);
        prop_assume!(norm > 1e-6);
        let t = t.scale(1.0 / norm);
        let top = nonneg_top_eigenvector(&t).unwrap();
        prop_assert!(top.vector.iter().all(|&v| v >= 0.0));
        let len: f64 = top.vector.iter().map(|v| v * v).sum::<f64>().sqrt();
        prop_assert!((len - 1.0).abs() < 1e-10);
        prop_assert!(top.eigen_residual <= 1e-8);
        prop_assert!(top.phases.iter().all(|p| (p.norm() - 1.0).abs() < 1e-12));
        let conj = top.conjugate(&t);
        prop_assert!((operator_norm(&conj) - operator_norm(&t)).abs() < 1e-9);
    }
}

fn entry_max(m: &PropOperator, cells: &[usize]) -> f64 {
    let mut best: f64 = 0.0;
    for &x in cells {
        for &y in cells {
            best = best.max(m.entry(x, y).norm());
        }
    }
    best
}

#[test]
fn sparse_diagonal_profile_brute_force() {
    let mut rng = seeded(17);
    for _ in 0..20 {
        let count = rng.gen_range(1..=4);
        let comps: Vec<UlfGraph> = (0..count)
            .map(|_| {
                let n = rng.gen_range(1..=6);
                random_connected_graph(&mut rng, n, 3, 1).unwrap()
            })
            .collect();
        let b = box_space(comps).unwrap();
        let fam = SparseFamily::from_box_space(&b);
        let blocks: Vec<PropOperator> = fam
            .blocks()
            .iter()
            .map(|v| {
                let m = v.len();
                let x =
                    DMatrix::from_fn(m, m, |_, _| Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
                let psd = PropOperator::from_matrix(&x * x.adjoint()).unwrap();
                let s = operator_norm(&psd);
                if s > 0.0 {
                    psd.scale(1.0 / s)
                } else {
                    PropOperator::identity(m)
                }
            })
            .collect();
        let t = sparse_diagonal(&fam, &blocks).unwrap();
        let order = fam.exhaustion();
        let mut rank = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let profile = ghost_profile(&t, &order).unwrap();
        for k in 0..order.len() {
            let mut expected: f64 = 0.0;
            for blk in fam.blocks() {
                for &x in blk {
                    for &y in blk {
                        if rank[x].max(rank[y]) >= k {
                            expected = expected.max(t.entry(x, y).norm());
                        }
                    }
                }
            }
            assert_eq!(profile.at(k), expected);
        }
        assert_eq!(
            profile.at(0),
            fam.blocks()
                .iter()
                .map(|c| entry_max(&t, c))
                .fold(0.0, f64::max)
        );
    }
}

#[test]
fn block_constant_ghost_on_random_regular_components() {
    let mut rng = seeded(23);
    for _ in 0..10 {
        let comps: Vec<UlfGraph> = (0..3)
            .map(|_| {
                let n = 2 * rng.gen_range(3..=32);
                random_regular_graph(&mut rng, n, 3, 10_000).unwrap()
            })
            .collect();
        let b = box_space(comps).unwrap();
        for k in [0u32, 1, 4, 10] {
            let (t, bounds) = block_constant_ghost(&b, k).unwrap();
            check_bound(&b, &t, &bounds.iter().map(|c| c.bound).collect::<Vec<_>>());
            assert!(propagation(&t, b.metric()).unwrap() <= Dist::Finite(k));
        }
    }
}

fn check_bound(b: &ulf_core::actions::BoxSpace, t: &PropOperator, bounds: &[f64]) {
    for (i, comp) in b.components().iter().enumerate() {
        let m = comp.len();
        let o = b.offset(i);
        let block = DMatrix::from_fn(m, m, |x, y| t.entry(o + x, o + y).re - 1.0 / m as f64);
        let err = block.symmetric_eigen().eigenvalues.amax();
        assert!(
            err <= bounds[i] + 1e-9,
            "component {i}: {err} > {}",
            bounds[i]
        );
    }
}
