//! Every fast path checked against brute-force enumeration on whole corpora:
//! all posets up to isomorphism on few elements, seeded random posets, and
//! the cell posets of every small partition.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use posetprob::blocking::{
    balanced_pair_scan, blocking_ideals, count_by_splitting, decompose, e_blocking, probability, split_check,
};
use posetprob::corpus::{partitions, posets_up_to_isomorphism, random_poset};
use posetprob::ideal_lattice::{all_order_ideals, count_linear_extensions, e_with_constraint, linear_extensions, Limits};
use posetprob::tableaux::{cell_poset, e_partition, f_hook, probability_partition};
use posetprob::{ExactRational, OrderIdeal, Poset};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lim() -> Limits {
    Limits::default()
}

fn relabel(p: &Poset, perm: &[usize]) -> Poset {
    let edges: Vec<(usize, usize)> = p.covers().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Poset::from_covers(p.len(), &edges).unwrap()
}

/// Every subset `T` with `a, b ∉ T` and both `T` and `T ∪ {a}` down-closed.
fn blocking_by_predicate(p: &Poset, a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << a) != 0 || mask & (1 << b) != 0 {
            continue;
        }
        let t: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let mut ta = t.clone();
        ta.push(a);
        ta.sort_unstable();
        if p.is_order_ideal(&t) && p.is_order_ideal(&ta) {
            out.push(t);
        }
    }
    out.sort();
    out
}

#[test]
fn isomorphism_class_counts() {
    let counts: Vec<usize> = (0..=7).map(|n| posets_up_to_isomorphism(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 16, 63, 318, 2045]);
}

#[test]
fn extension_counts_match_enumeration() {
    for n in 0..=7 {
        for p in posets_up_to_isomorphism(n).unwrap() {
            let dp = count_linear_extensions(&p, &lim()).unwrap();
            let listed = linear_extensions(&p).count();
            assert_eq!(dp, BigUint::from(listed), "{p}");
            assert_eq!(count_by_splitting(&p, &lim()).unwrap(), dp);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let p = random_poset(8, 0.25, &mut rng);
        assert_eq!(
            count_linear_extensions(&p, &lim()).unwrap(),
            BigUint::from(linear_extensions(&p).count())
        );
    }
}

#[test]
fn extensions_are_valid_and_lexicographic() {
    for p in posets_up_to_isomorphism(5).unwrap() {
        let all: Vec<Vec<usize>> = linear_extensions(&p).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for e in &all {
            for (i, &x) in e.iter().enumerate() {
                for &y in &e[i + 1..] {
                    assert!(!p.leq(y, x).unwrap());
                }
            }
        }
    }
}

#[test]
fn blocking_expansion_matches_oracle_on_small_posets() {
    for n in 2..=6 {
        for p in posets_up_to_isomorphism(n).unwrap() {
            let total = count_linear_extensions(&p, &lim()).unwrap();
            for (a, b) in p.incomparable_pairs() {
                for (x, y) in [(a, b), (b, a)] {
                    let oracle = e_with_constraint(&p, x, y, &lim()).unwrap();
                    assert_eq!(e_blocking(&p, x, y, &lim()).unwrap(), oracle, "{p} {x}<{y}");
                    let forced = p.add_relation(x, y).unwrap();
                    assert!(forced.changed);
                    assert!(forced.poset.relation_size() > p.relation_size());
                    assert_eq!(count_linear_extensions(&forced.poset, &lim()).unwrap(), oracle);
                }
                assert_eq!(
                    e_with_constraint(&p, a, b, &lim()).unwrap() + e_with_constraint(&p, b, a, &lim()).unwrap(),
                    total
                );
            }
        }
    }
}

#[test]
fn blocking_ideals_are_exactly_the_predicate() {
    for n in 2..=6 {
        for p in posets_up_to_isomorphism(n).unwrap() {
            for (a, b) in p.incomparable_pairs() {
                for (x, y) in [(a, b), (b, a)] {
                    let ours: Vec<Vec<usize>> =
                        blocking_ideals(&p, x, y).unwrap().iter().map(|t| t.members().to_vec()).collect();
                    assert_eq!(ours, blocking_by_predicate(&p, x, y), "{p} {x}<{y}");

                    let d = decompose(&p, x, y).unwrap();
                    let variable = p.induced(&d.variable);
                    assert_eq!(ours.len(), all_order_ideals(&variable, &lim()).unwrap().len());
                    assert!(d.fixed.is_subset(&d.complete));
                    assert!(d.variable.iter().all(|v| !d.fixed.contains(*v) && d.complete.contains(*v)));
                    let below_x: Vec<usize> = p.principal_ideal(x).unwrap().members().iter().copied().filter(|&m| m != x).collect();
                    assert_eq!(d.fixed, OrderIdeal::new(&p, below_x).unwrap());
                }
            }
        }
    }
}

#[test]
fn split_identity_and_balanced_pairs_up_to_seven() {
    let third = ExactRational::new(1.into(), 3.into());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=7 {
        for p in posets_up_to_isomorphism(n).unwrap() {
            for (a, b) in p.incomparable_pairs() {
                assert!(split_check(&p, a, b, &lim()).unwrap(), "{p} {a},{b}");
            }
            if p.is_chain() {
                continue;
            }
            let scan = balanced_pair_scan(&p, &lim()).unwrap();
            assert!(scan.value >= third, "{p}: {}", scan.value);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(balanced_pair_scan(&relabel(&p, &perm), &lim()).unwrap().value, scan.value);
        }
    }
}

#[test]
fn random_posets_seven_to_nine() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 7..=9 {
        for k in 0..12 {
            let prob = [0.15, 0.3, 0.45][k % 3];
            let p = random_poset(n, prob, &mut rng);
            for (a, b) in p.incomparable_pairs() {
                assert_eq!(
                    e_blocking(&p, a, b, &lim()).unwrap(),
                    e_with_constraint(&p, a, b, &lim()).unwrap(),
                    "{p} {a}<{b}"
                );
            }
        }
    }
}

#[test]
fn partition_engine_matches_generic_and_oracle() {
    for n in 1..=8 {
        for lambda in partitions(n) {
            let cp = cell_poset(&lambda);
            let p = cp.poset();
            let total = count_linear_extensions(p, &lim()).unwrap();
            assert_eq!(total, f_hook(&lambda));
            for (i, &a) in cp.cells().iter().enumerate() {
                for (j, &b) in cp.cells().iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let exact = probability_partition(&lambda, a, b).unwrap();
                    assert_eq!(exact, probability(p, i, j, &lim()).unwrap(), "{lambda} {a} {b}");
                    if p.incomparable(i, j).unwrap() {
                        let oracle = e_with_constraint(p, i, j, &lim()).unwrap();
                        assert_eq!(e_partition(&lambda, a, b).unwrap(), oracle);
                        assert_eq!(
                            e_partition(&lambda, a, b).unwrap() + e_partition(&lambda, b, a).unwrap(),
                            total
                        );
                    } else if a.leq(&b) {
                        assert!(exact.is_one());
                    } else {
                        assert!(exact.is_zero());
                    }
                }
            }
        }
    }
}
