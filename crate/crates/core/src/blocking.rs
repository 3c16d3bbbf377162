//! Blocking ideals and the blocking expansion of `e(P; a < b)`.
//!
//! For incomparable `a`, `b` a blocking ideal is an order ideal `T` with
//! `a, b ∉ T` such that `T ∪ {a}` is again an ideal: the ideal reached
//! immediately before `a` is placed. Every linear extension putting `a` first
//! passes through exactly one of them, which gives
//!
//! ```text
//! e(P; a < b) = Σ_T  e(T) · e(P \ (T ∪ {a}))
//! ```
//!
//! The blocking ideals are exactly `A ∪ V` where `A` is the open principal
//! ideal of `a` (the fixed part) and `V` ranges over the order ideals of the
//! variable part `G = D \ A`, with `D` the elements above neither `a` nor `b`.

use fixedbitset::FixedBitSet;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal_lattice::{all_order_ideals, count_linear_extensions, Limits};
use crate::poset::{OrderIdeal, Poset};

/// Exact probability in lowest terms.
pub type ExactRational = BigRational;

pub fn ratio(num: &BigUint, den: &BigUint) -> ExactRational {
    BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Fixed, variable and complete parts for an incomparable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingDecomposition {
    pub alpha: usize,
    pub beta: usize,
    /// Elements strictly below `alpha`.
    pub fixed: OrderIdeal,
    /// `complete \ fixed`; not an ideal of the poset in general.
    pub variable: Vec<usize>,
    /// Elements above neither `alpha` nor `beta`.
    pub complete: OrderIdeal,
}

fn require_incomparable(poset: &Poset, a: usize, b: usize) -> Result<()> {
    if poset.incomparable(a, b)? {
        Ok(())
    } else {
        Err(Error::ComparablePair { a, b })
    }
}

pub fn decompose(poset: &Poset, a: usize, b: usize) -> Result<BlockingDecomposition> {
    require_incomparable(poset, a, b)?;
    let n = poset.len();
    let mut complete_mask = FixedBitSet::with_capacity(n);
    complete_mask.insert_range(..);
    for top in [a, b] {
        complete_mask.set(top, false);
        complete_mask.difference_with(poset.strictly_above(top));
    }
    debug_assert!(poset.is_down_closed(&complete_mask));

    let variable: Vec<usize> = complete_mask
        .ones()
        .filter(|&x| !poset.strictly_below(a).contains(x))
        .collect();
    Ok(BlockingDecomposition {
        alpha: a,
        beta: b,
        fixed: OrderIdeal::from_mask(poset.strictly_below(a)),
        variable,
        complete: OrderIdeal::from_mask(&complete_mask),
    })
}

/// All blocking ideals for `a` before `b`, each as fixed part ∪ an ideal of
/// the variable part. Sorted by member list.
pub fn blocking_ideals(poset: &Poset, a: usize, b: usize) -> Result<Vec<OrderIdeal>> {
    blocking_ideals_with(poset, a, b, &Limits::default())
}

pub fn blocking_ideals_with(
    poset: &Poset,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<Vec<OrderIdeal>> {
    let d = decompose(poset, a, b)?;
    let variable_poset = poset.induced(&d.variable);
    let mut out: Vec<OrderIdeal> = all_order_ideals(&variable_poset, limits)?
        .into_iter()
        .map(|v| {
            let mut members = d.fixed.members().to_vec();
            members.extend(v.members().iter().map(|&i| d.variable[i]));
            OrderIdeal::new(poset, members).expect("fixed part plus variable ideal is down-closed")
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `e(P; a < b)` via the blocking expansion.
pub fn e_blocking(poset: &Poset, a: usize, b: usize, limits: &Limits) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for term in blocking_terms(poset, a, b, limits)? {
        total += term.below * term.above;
    }
    Ok(total)
}

/// One summand of the blocking expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingTerm {
    pub ideal: OrderIdeal,
    /// `e(T)`.
    pub below: BigUint,
    /// `e(P \ (T ∪ {a}))`.
    pub above: BigUint,
}

pub fn blocking_terms(
    poset: &Poset,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<Vec<BlockingTerm>> {
    let ideals = blocking_ideals_with(poset, a, b, limits)?;
    let n = poset.len();
    ideals
        .into_iter()
        .map(|t| {
            let below = count_linear_extensions(&poset.induced(t.members()), limits)?;
            let mut rest = vec![true; n];
            rest[a] = false;
            for &x in t.members() {
                rest[x] = false;
            }
            let rest: Vec<usize> = (0..n).filter(|&x| rest[x]).collect();
            let above = count_linear_extensions(&poset.induced(&rest), limits)?;
            Ok(BlockingTerm {
                ideal: t,
                below,
                above,
            })
        })
        .collect()
}

/// `P(a < b)`: blocking expansion over `e(P)` for incomparable pairs, 1 or 0
/// for comparable ones.
pub fn probability(poset: &Poset, a: usize, b: usize, limits: &Limits) -> Result<ExactRational> {
    if poset.leq(a, b)? {
        if a == b {
            return Err(Error::SameElement(a));
        }
        return Ok(ExactRational::one());
    }
    if poset.leq(b, a)? {
        return Ok(ExactRational::zero());
    }
    let favourable = e_blocking(poset, a, b, limits)?;
    let total = count_linear_extensions(poset, limits)?;
    Ok(ratio(&favourable, &total))
}

/// Checks `e(P; a<b) + e(P; b<a) = e(P)` with both sides from blocking sums.
pub fn split_check(poset: &Poset, a: usize, b: usize, limits: &Limits) -> Result<bool> {
    require_incomparable(poset, a, b)?;
    let split = e_blocking(poset, a, b, limits)? + e_blocking(poset, b, a, limits)?;
    Ok(split == count_linear_extensions(poset, limits)?)
}

/// `e(P)` by recursive splitting on the first incomparable pair. Exposed for
/// comparison with the lattice DP, which remains the default.
pub fn count_by_splitting(poset: &Poset, limits: &Limits) -> Result<BigUint> {
    let Some(&(a, b)) = poset.incomparable_pairs().first() else {
        return Ok(BigUint::one());
    };
    let n = poset.len();
    let mut total = BigUint::zero();
    for (first, second) in [(a, b), (b, a)] {
        for t in blocking_ideals_with(poset, first, second, limits)? {
            let below = count_by_splitting(&poset.induced(t.members()), limits)?;
            let rest: Vec<usize> = (0..n)
                .filter(|&x| x != first && !t.contains(x))
                .collect();
            total += below * count_by_splitting(&poset.induced(&rest), limits)?;
        }
    }
    Ok(total)
}

/// The pair maximizing `min(P(x<y), P(y<x))` and that value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedPair {
    pub pair: (usize, usize),
    pub value: ExactRational,
}

/// Scans every incomparable pair. Ties go to the lexicographically smallest
/// index pair.
pub fn balanced_pair_scan(poset: &Poset, limits: &Limits) -> Result<BalancedPair> {
    Ok(pair_table(poset, limits)?
        .into_iter()
        .fold(None::<BalancedPair>, |best, (pair, p)| {
            let complement = ExactRational::one() - &p;
            let value = if p < complement { p } else { complement };
            match best {
                Some(b) if b.value >= value => Some(b),
                _ => Some(BalancedPair { pair, value }),
            }
        })
        .expect("pair_table is non-empty for non-chains"))
}

/// `P(x < y)` for every incomparable index pair `x < y`, in lexicographic order.
pub fn pair_table(poset: &Poset, limits: &Limits) -> Result<Vec<((usize, usize), ExactRational)>> {
    let pairs = poset.incomparable_pairs();
    if pairs.is_empty() {
        return Err(Error::IsChain);
    }
    let total = count_linear_extensions(poset, limits)?;
    pairs
        .into_iter()
        .map(|(x, y)| Ok(((x, y), ratio(&e_blocking(poset, x, y, limits)?, &total))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal_lattice::e_with_constraint;

    fn lim() -> Limits {
        Limits::default()
    }

    fn members(ideals: &[OrderIdeal]) -> Vec<Vec<usize>> {
        ideals.iter().map(|i| i.members().to_vec()).collect()
    }

    /// Five-element poset extended by 5 below `a = 1` and 6 below `b = 2`.
    fn enlarged() -> Poset {
        Poset::from_covers(7, &[(6, 2), (5, 1), (0, 1), (0, 2), (1, 4), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn antichain_minimal_pair() {
        let p = Poset::antichain(4);
        let d = decompose(&p, 0, 1).unwrap();
        assert!(d.fixed.is_empty());
        assert_eq!(d.complete.members(), &[2, 3]);
        assert_eq!(d.variable, vec![2, 3]);
    }

    #[test]
    fn comparable_pairs_are_rejected() {
        let c = Poset::chain(3);
        assert_eq!(decompose(&c, 0, 2), Err(Error::ComparablePair { a: 0, b: 2 }));
        assert_eq!(blocking_ideals(&c, 2, 0), Err(Error::ComparablePair { a: 2, b: 0 }));
    }

    #[test]
    fn enlarged_example_blocking_ideals() {
        let p = enlarged();
        assert_eq!(members(&blocking_ideals(&p, 1, 2).unwrap()), vec![vec![0, 5], vec![0, 5, 6]]);
        assert_eq!(members(&blocking_ideals(&p, 2, 1).unwrap()), vec![vec![0, 5, 6], vec![0, 6]]);
        assert_eq!(e_blocking(&p, 1, 2, &lim()).unwrap(), BigUint::from(8u32));
        assert_eq!(e_blocking(&p, 2, 1, &lim()).unwrap(), BigUint::from(18u32));
        assert!(split_check(&p, 1, 2, &lim()).unwrap());
    }

    #[test]
    fn probability_edge_cases() {
        let c = Poset::chain(3);
        assert_eq!(probability(&c, 0, 2, &lim()).unwrap(), ExactRational::one());
        assert_eq!(probability(&c, 2, 0, &lim()).unwrap(), ExactRational::zero());
        assert_eq!(probability(&c, 1, 1, &lim()), Err(Error::SameElement(1)));
        let a = Poset::antichain(2);
        assert_eq!(
            probability(&a, 0, 1, &lim()).unwrap(),
            ExactRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn scan_extremal_and_chain() {
        let p = Poset::from_covers(3, &[(0, 1)]).unwrap();
        let best = balanced_pair_scan(&p, &lim()).unwrap();
        assert_eq!(best.value, ExactRational::new(1.into(), 3.into()));
        assert_eq!(best.pair, (0, 2));
        assert_eq!(balanced_pair_scan(&Poset::chain(4), &lim()), Err(Error::IsChain));
        let two = balanced_pair_scan(&Poset::antichain(2), &lim()).unwrap();
        assert_eq!(two.value, ExactRational::new(1.into(), 2.into()));
    }

    #[test]
    fn splitting_count_matches_dp() {
        let p = enlarged();
        assert_eq!(count_by_splitting(&p, &lim()).unwrap(), BigUint::from(26u32));
        let q = Poset::antichain(5);
        assert_eq!(count_by_splitting(&q, &lim()).unwrap(), BigUint::from(120u32));
    }

    #[test]
    fn blocking_matches_oracle_on_small_example() {
        let p = Poset::from_covers(5, &[(0, 1), (0, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        for (a, b) in p.incomparable_pairs() {
            for (x, y) in [(a, b), (b, a)] {
                assert_eq!(
                    e_blocking(&p, x, y, &lim()).unwrap(),
                    e_with_constraint(&p, x, y, &lim()).unwrap()
                );
            }
        }
    }
}
