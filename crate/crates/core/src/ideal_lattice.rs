//! The lattice `J(P)` of order ideals.
//!
//! Saturated chains of `J(P)` are in bijection with linear extensions of `P`,
//! so `e(P)` is a path count over the cover graph of `J(P)`. That count is the
//! fast path. The naive enumerator [`linear_extensions`] stays around as the
//! ground truth everything else is tested against.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, Poset};

/// Caps that turn runaway computations into errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `|J(P)|` that will be materialized.
    pub max_ideals: usize,
    /// Largest poset the brute-force enumeration oracle will accept.
    pub max_enumeration_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ideals: 10_000_000,
            max_enumeration_elements: 12,
        }
    }
}

/// `J(P)` materialized in graded (breadth-first) order, with a hash index
/// from member set to position.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    n: usize,
    ideals: Vec<FixedBitSet>,
    index: HashMap<FixedBitSet, usize>,
    upper_covers: Vec<Vec<usize>>,
}

impl IdealLattice {
    pub fn build(poset: &Poset, limits: &Limits) -> Result<Self> {
        let n = poset.len();
        let mut ideals = vec![FixedBitSet::with_capacity(n)];
        let mut index = HashMap::new();
        index.insert(ideals[0].clone(), 0);
        let mut upper_covers: Vec<Vec<usize>> = vec![Vec::new()];

        let mut cursor = 0;
        while cursor < ideals.len() {
            let current = ideals[cursor].clone();
            for x in 0..n {
                if current.contains(x) || !poset.strictly_below(x).is_subset(&current) {
                    continue;
                }
                let mut next = current.clone();
                next.insert(x);
                let pos = match index.get(&next) {
                    Some(&pos) => pos,
                    None => {
                        let pos = ideals.len();
                        if pos >= limits.max_ideals {
                            return Err(Error::SizeLimitExceeded {
                                what: "number of order ideals",
                                limit: limits.max_ideals,
                            });
                        }
                        index.insert(next.clone(), pos);
                        ideals.push(next);
                        upper_covers.push(Vec::new());
                        pos
                    }
                };
                upper_covers[cursor].push(pos);
            }
            cursor += 1;
        }
        Ok(IdealLattice {
            n,
            ideals,
            index,
            upper_covers,
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideal(&self, i: usize) -> OrderIdeal {
        OrderIdeal::from_mask(&self.ideals[i])
    }

    pub fn ideals(&self) -> Vec<OrderIdeal> {
        self.ideals.iter().map(OrderIdeal::from_mask).collect()
    }

    pub fn position(&self, ideal: &OrderIdeal) -> Option<usize> {
        self.index.get(&ideal.to_mask(self.n)).copied()
    }

    /// Positions of the ideals covering ideal `i`.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    /// Number of saturated chains from the bottom (`∅`) to every ideal.
    pub fn chain_counts_from_bottom(&self) -> Vec<BigUint> {
        let mut counts = vec![BigUint::zero(); self.len()];
        counts[0] = BigUint::one();
        // Graded order: every lower cover of `i` sits before `i`.
        for i in 0..self.len() {
            if counts[i].is_zero() {
                continue;
            }
            let c = counts[i].clone();
            for &j in &self.upper_covers[i] {
                counts[j] += &c;
            }
        }
        counts
    }

    /// `ℓ(J(P))`, the number of maximal chains.
    pub fn maximal_chain_count(&self) -> BigUint {
        self.chain_counts_from_bottom()
            .pop()
            .unwrap_or_else(BigUint::one)
    }
}

/// Every order ideal of `poset` exactly once, in graded order.
pub fn all_order_ideals(poset: &Poset, limits: &Limits) -> Result<Vec<OrderIdeal>> {
    Ok(IdealLattice::build(poset, limits)?.ideals())
}

/// `e(P)` by dynamic programming over `J(P)`.
pub fn count_linear_extensions(poset: &Poset, limits: &Limits) -> Result<BigUint> {
    if poset.is_chain() {
        return Ok(BigUint::one());
    }
    Ok(IdealLattice::build(poset, limits)?.maximal_chain_count())
}

/// Lexicographic stream of linear extensions, each a permutation of indices.
pub fn linear_extensions(poset: &Poset) -> LinearExtensions<'_> {
    LinearExtensions::new(poset)
}

pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    sequence: Vec<usize>,
    placed: Vec<bool>,
    /// Unplaced lower covers per element.
    waiting: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(poset: &'a Poset) -> Self {
        let n = poset.len();
        LinearExtensions {
            poset,
            sequence: Vec::with_capacity(n),
            placed: vec![false; n],
            waiting: (0..n).map(|x| poset.lower_covers(x).len()).collect(),
            started: false,
            done: false,
        }
    }

    fn place(&mut self, x: usize) {
        self.placed[x] = true;
        self.sequence.push(x);
        for &y in self.poset.upper_covers(x) {
            self.waiting[y] -= 1;
        }
    }

    fn unplace(&mut self) -> Option<usize> {
        let x = self.sequence.pop()?;
        self.placed[x] = false;
        for &y in self.poset.upper_covers(x) {
            self.waiting[y] += 1;
        }
        Some(x)
    }

    fn first_available_after(&self, floor: Option<usize>) -> Option<usize> {
        let start = floor.map_or(0, |f| f + 1);
        (start..self.poset.len()).find(|&y| !self.placed[y] && self.waiting[y] == 0)
    }

    fn fill(&mut self) {
        while let Some(x) = self.first_available_after(None) {
            self.place(x);
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(self.sequence.clone());
        }
        loop {
            let Some(last) = self.unplace() else {
                self.done = true;
                return None;
            };
            if let Some(y) = self.first_available_after(Some(last)) {
                self.place(y);
                self.fill();
                return Some(self.sequence.clone());
            }
        }
    }
}

/// `e(P; a < b)` by filtering the full enumeration. This is the oracle.
pub fn e_with_constraint(poset: &Poset, a: usize, b: usize, limits: &Limits) -> Result<BigUint> {
    poset.leq(a, b)?;
    if a == b {
        return Err(Error::SameElement(a));
    }
    if poset.len() > limits.max_enumeration_elements {
        return Err(Error::SizeLimitExceeded {
            what: "poset size for enumeration",
            limit: limits.max_enumeration_elements,
        });
    }
    let mut count: u64 = 0;
    for ext in linear_extensions(poset) {
        let first = ext
            .iter()
            .find(|&&x| x == a || x == b)
            .expect("both elements appear in every extension");
        if *first == a {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Number of saturated chains of `J(P)` from `lower` up to `upper`, computed
/// as `e` of the induced subposet on `upper \ lower`.
pub fn chain_count_interval(
    poset: &Poset,
    lower: &OrderIdeal,
    upper: &OrderIdeal,
    limits: &Limits,
) -> Result<BigUint> {
    for ideal in [lower, upper] {
        if !poset.is_order_ideal(ideal.members()) {
            return Err(Error::NotAnIdeal);
        }
    }
    if !lower.is_subset(upper) {
        return Err(Error::NotNested);
    }
    let between: Vec<usize> = upper
        .members()
        .iter()
        .copied()
        .filter(|&x| !lower.contains(x))
        .collect();
    count_linear_extensions(&poset.induced(&between), limits)
}
