//! Generators for test corpora: posets up to isomorphism, random posets,
//! and partitions.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::ideal_lattice::{all_order_ideals, Limits};
use crate::poset::Poset;
use crate::tableaux::Partition;

/// Largest size for which the canonical form fits in a `u64`.
pub const MAX_CANONICAL_SIZE: usize = 8;

fn relation_bit(n: usize, x: usize, y: usize) -> u64 {
    1u64 << (x * n + y)
}

/// An isomorphism invariant: the smallest strict-relation bitmask over all
/// relabelings that respect a coarse per-element signature.
pub fn canonical_form(p: &Poset) -> Result<u64> {
    let n = p.len();
    if n > MAX_CANONICAL_SIZE {
        return Err(Error::SizeLimitExceeded {
            what: "poset size for canonical form",
            limit: MAX_CANONICAL_SIZE,
        });
    }
    let signature = |x: usize| {
        (
            p.strictly_below(x).count_ones(..),
            p.strictly_above(x).count_ones(..),
            p.lower_covers(x).len(),
            p.upper_covers(x).len(),
        )
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| signature(x));
    let sigs: Vec<_> = order.iter().map(|&x| signature(x)).collect();

    // slot -> element; slots are filled in signature order
    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut best = u64::MAX;
    fn search(
        slot: usize,
        p: &Poset,
        order: &[usize],
        sigs: &[(usize, usize, usize, usize)],
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut u64,
    ) {
        let n = order.len();
        if slot == n {
            let mut mask = 0;
            for i in 0..n {
                for j in 0..n {
                    if i != j && p.less(assignment[i], assignment[j]) {
                        mask |= relation_bit(n, i, j);
                    }
                }
            }
            *best = (*best).min(mask);
            return;
        }
        for k in 0..n {
            if !used[k] && sigs[k] == sigs[slot] {
                used[k] = true;
                assignment[slot] = order[k];
                search(slot + 1, p, order, sigs, assignment, used, best);
                used[k] = false;
            }
        }
    }
    search(0, p, &order, &sigs, &mut assignment, &mut used, &mut best);
    Ok(if n == 0 { 0 } else { best })
}

fn from_relation_mask(n: usize, mask: u64) -> Poset {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| mask & relation_bit(n, i, j) != 0)
        .collect();
    Poset::from_covers(n, &edges).expect("canonical masks are acyclic")
}

/// One representative of each isomorphism class of posets on `n` elements.
///
/// Every poset arises from one on `n − 1` elements by adding a new maximal
/// element above some order ideal, so classes are grown level by level.
pub fn posets_up_to_isomorphism(n: usize) -> Result<Vec<Poset>> {
    if n > MAX_CANONICAL_SIZE {
        return Err(Error::SizeLimitExceeded {
            what: "poset size for isomorphism classes",
            limit: MAX_CANONICAL_SIZE,
        });
    }
    let mut level: Vec<u64> = vec![0];
    for m in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for &mask in &level {
            let q = from_relation_mask(m - 1, mask);
            for ideal in all_order_ideals(&q, &Limits::default())? {
                let mut edges = q.covers().to_vec();
                edges.extend(ideal.members().iter().map(|&x| (x, m - 1)));
                let p = Poset::from_covers(m, &edges)?;
                let c = canonical_form(&p)?;
                if seen.insert(c) {
                    next.push(c);
                }
            }
        }
        next.sort_unstable();
        level = next;
    }
    Ok(level.into_iter().map(|mask| from_relation_mask(n, mask)).collect())
}

/// A random poset: each pair `i < j` becomes a relation `i < j` with
/// probability `edge_prob`, then the transitive closure is taken.
pub fn random_poset<R: Rng + ?Sized>(n: usize, edge_prob: f64, rng: &mut R) -> Poset {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((i, j));
            }
        }
    }
    Poset::from_covers(n, &edges).expect("edges point upward in index order")
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).expect("built decreasing"));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition contained in `outer`, including `∅` and `outer`.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > outer.len() {
            out.push(Partition::new(prefix.clone()).expect("built decreasing"));
            return;
        }
        for part in 0..=outer.row(row).min(max) {
            prefix.push(part);
            go(outer, row + 1, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 1, usize::MAX, &mut Vec::new(), &mut out);
    out
}
