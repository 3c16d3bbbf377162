//! Randomised identities over posets, partitions and skew shapes.

use num_bigint::BigUint;
use num_traits::One;
use posetprob::corpus::random_poset;
use posetprob::ideal_lattice::{count_linear_extensions, linear_extensions, Limits};
use posetprob::tableaux::{
    cell_poset, f_hook, f_skew_aitken, f_skew_naruse, factorial, hook_product, reduce, Partition, SkewShape,
};
use posetprob::two_rows::{
    catalan, catalan_probability, f_two_row, f_two_row_skew, probability_two_row, reduced_shape_ratio,
    skew_ratio_two_row, TwoRowCase,
};
use posetprob::{ExactRational, Poset};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn partition_upto(max_weight: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=6, 0..=5)
        .prop_map(|mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            parts
        })
        .prop_filter("weight bound", move |p| p.iter().sum::<usize>() <= max_weight)
        .prop_map(|p| Partition::new(p).unwrap())
}

fn skew_upto(max_weight: usize) -> impl Strategy<Value = SkewShape> {
    (partition_upto(max_weight), prop::collection::vec(0.0f64..=1.0, 5)).prop_map(|(outer, fracs)| {
        let mut inner = Vec::new();
        let mut cap = usize::MAX;
        for (i, &len) in outer.parts().iter().enumerate() {
            let part = ((len as f64) * fracs[i]).round() as usize;
            let part = part.min(len).min(cap);
            inner.push(part);
            cap = part;
        }
        SkewShape::new(outer, Partition::new(inner).unwrap()).unwrap()
    })
}

fn brute_force_skew(s: &SkewShape) -> BigUint {
    let cp = cell_poset(s.outer());
    let idx: Vec<usize> = s.cells().iter().map(|&c| cp.index_of(c).unwrap()).collect();
    BigUint::from(linear_extensions(&cp.poset().induced(&idx)).count())
}

fn any_poset() -> impl Strategy<Value = Poset> {
    (0usize..=9, 0.0f64..=0.6, any::<u64>())
        .prop_map(|(n, prob, seed)| random_poset(n, prob, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn straight_shape_counts_agree(p in partition_upto(8)) {
        let hook = f_hook(&p);
        let straight = SkewShape::straight(p.clone());
        prop_assert_eq!(&f_skew_aitken(&straight), &hook);
        prop_assert_eq!(&f_skew_naruse(&straight).unwrap(), &hook);
        prop_assert_eq!(&count_linear_extensions(cell_poset(&p).poset(), &Limits::default()).unwrap(), &hook);
    }

    #[test]
    fn skew_counts_agree(s in skew_upto(8)) {
        let brute = brute_force_skew(&s);
        prop_assert_eq!(&f_skew_aitken(&s), &brute, "{}", s);
        prop_assert_eq!(&f_skew_naruse(&s).unwrap(), &brute, "{}", s);
    }

    #[test]
    fn reduction_preserves_counts(s in skew_upto(12)) {
        if let Ok(r) = reduce(&s) {
            prop_assert_eq!(f_skew_aitken(&r), f_skew_aitken(&s));
            prop_assert_eq!(r.size(), s.size());
        }
    }

    #[test]
    fn conjugation(p in partition_upto(14)) {
        prop_assert_eq!(&p.conjugate().conjugate(), &p);
        prop_assert_eq!(f_hook(&p.conjugate()), f_hook(&p));
    }

    #[test]
    fn poset_axioms(p in any_poset()) {
        let n = p.len();
        for x in 0..n {
            prop_assert!(p.leq(x, x).unwrap());
            prop_assert!(p.is_order_ideal(p.principal_ideal(x).unwrap().members()));
            for y in 0..n {
                if x != y && p.leq(x, y).unwrap() {
                    prop_assert!(!p.leq(y, x).unwrap());
                }
                for z in 0..n {
                    if p.leq(x, y).unwrap() && p.leq(y, z).unwrap() {
                        prop_assert!(p.leq(x, z).unwrap());
                    }
                }
            }
        }
        // rebuilding from the stored covers gives back the same order
        let again = Poset::from_covers(n, p.covers()).unwrap();
        prop_assert_eq!(again.covers(), p.covers());
        for x in 0..n {
            prop_assert_eq!(again.strictly_above(x), p.strictly_above(x));
        }
        for (a, b) in p.incomparable_pairs() {
            let added = p.add_relation(a, b).unwrap();
            prop_assert!(added.poset.relation_size() > p.relation_size());
            prop_assert_eq!(added.poset.len(), n);
            prop_assert!(added.poset.leq(a, b).unwrap());
        }
    }

    #[test]
    fn two_row_counts(l1 in 0usize..=40, d in 0usize..=40, m in 0usize..=40) {
        let l2 = d.min(l1);
        let shape = Partition::new(vec![l1, l2]).unwrap();
        prop_assert_eq!(f_two_row(l1, l2).unwrap(), f_hook(&shape));
        let full = hook_product(&shape, &shape.cells()).unwrap();
        prop_assert_eq!(full * (1 + l1 - l2), factorial(l1 + 1) * factorial(l2));
        let m = m.min(l1);
        let skew = SkewShape::new(shape, Partition::new(vec![m]).unwrap()).unwrap();
        prop_assert_eq!(f_two_row_skew(l1, l2, m).unwrap(), f_skew_aitken(&skew));
    }

    #[test]
    fn catalan_complement(n in 2usize..=30, b in 1usize..30) {
        let b = 1 + (b - 1) % (n - 1);
        let c = TwoRowCase::first_row(n, n, b + 1, b).unwrap();
        prop_assert_eq!(catalan_probability(n, b).unwrap() + probability_two_row(&c), ExactRational::one());
    }
}

#[test]
fn skew_ratio_identity_up_to_ten() {
    for l1 in 0..=10 {
        for l2 in 0..=l1 {
            let f = ExactRational::from_integer(f_two_row(l1, l2).unwrap().into());
            for mu1 in 0..=l1 {
                let skew = SkewShape::new(
                    Partition::new(vec![l1, l2]).unwrap(),
                    Partition::new(vec![mu1]).unwrap(),
                )
                .unwrap();
                let want = ExactRational::from_integer(f_skew_aitken(&skew).into());
                assert_eq!(skew_ratio_two_row(l1, l2, mu1).unwrap() * &f, want, "({l1},{l2})/({mu1})");
            }
            for mu2 in 0..=l2 {
                let num = ExactRational::from_integer(f_two_row(l1 - mu2, l2 - mu2).unwrap().into());
                assert_eq!(reduced_shape_ratio(l1, l2, mu2).unwrap(), num / &f);
            }
        }
    }
}

#[test]
fn square_shapes_follow_catalan_recurrence() {
    // C_{n+1} = 2(2n+1)/(n+2) C_n
    let mut c = BigUint::one();
    for n in 0..=12usize {
        assert_eq!(f_hook(&Partition::new(vec![n, n]).unwrap()), c);
        assert_eq!(catalan(n), c);
        c = c * (2 * (2 * n + 1)) / (n + 2);
    }
}

#[test]
fn reduced_ratio_tends_to_quarter() {
    let r = reduced_shape_ratio(200, 200, 1).unwrap();
    let x = posetprob::tableaux::to_f64(&r);
    assert!((x - 0.25).abs() < 0.01, "{x}");
}
