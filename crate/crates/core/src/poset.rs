//! Finite posets on dense indices `0..n`.
//!
//! A [`Poset`] keeps its Hasse diagram (the cover relation) together with the
//! strict order as a pair of bit-matrices, so `leq` is a single bit test.
//! Values are immutable once built.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    /// `above[x]` holds every `y` with `x < y`.
    above: Vec<FixedBitSet>,
    /// `below[x]` holds every `y` with `y < x`.
    below: Vec<FixedBitSet>,
    lower_covers: Vec<Vec<usize>>,
    upper_covers: Vec<Vec<usize>>,
}

/// Result of [`Poset::add_relation`]. `changed` is false when the pair was
/// already ordered, in which case `poset` is an unchanged copy.
#[derive(Clone, Debug)]
pub struct AddedRelation {
    pub poset: Poset,
    pub changed: bool,
}

/// A down-closed subset of a poset, stored as sorted element indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderIdeal {
    members: Vec<usize>,
}

impl Poset {
    /// Builds a poset on `0..n` from arbitrary order edges `(u, v)` meaning
    /// `u < v`. Duplicates and transitively implied edges are dropped.
    pub fn from_covers(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, len: n });
                }
            }
            if u == v {
                return Err(Error::CycleDetected);
            }
            if !succ[u].contains(&v) {
                succ[u].push(v);
                indegree[v] += 1;
            }
        }

        // Kahn's algorithm; anything left over sits on a cycle.
        let mut order = Vec::with_capacity(n);
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &succ[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if order.len() != n {
            return Err(Error::CycleDetected);
        }

        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &u in order.iter().rev() {
            let mut up = FixedBitSet::with_capacity(n);
            for &v in &succ[u] {
                up.insert(v);
                up.union_with(&above[v]);
            }
            above[u] = up;
        }
        Ok(Self::from_strict_order(labels, above))
    }

    /// `above` must already be a transitively closed strict order.
    fn from_strict_order(labels: Vec<String>, above: Vec<FixedBitSet>) -> Self {
        let n = labels.len();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for (x, up) in above.iter().enumerate() {
            for y in up.ones() {
                below[y].insert(x);
            }
        }
        let mut covers = Vec::new();
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in above[x].ones() {
                if above[x].is_disjoint(&below[y]) {
                    covers.push((x, y));
                    upper_covers[x].push(y);
                    lower_covers[y].push(x);
                }
            }
        }
        Poset {
            labels,
            covers,
            above,
            below,
            lower_covers,
            upper_covers,
        }
    }

    pub fn chain(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &edges).expect("a chain is acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_covers(n, &[]).expect("no edges")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The Hasse diagram edges, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn strictly_below(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    pub fn strictly_above(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// Number of pairs `(x, y)` with `x < y`.
    pub fn relation_size(&self) -> usize {
        self.above.iter().map(|s| s.count_ones(..)).sum()
    }

    fn check(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                len: self.len(),
            })
        }
    }

    /// Strict order test without bounds reporting.
    #[inline]
    pub(crate) fn less(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    #[inline]
    pub(crate) fn comparable(&self, x: usize, y: usize) -> bool {
        x == y || self.less(x, y) || self.less(y, x)
    }

    pub fn leq(&self, x: usize, y: usize) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(x == y || self.less(x, y))
    }

    pub fn incomparable(&self, x: usize, y: usize) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        if x == y {
            return Err(Error::SameElement(x));
        }
        Ok(!self.comparable(x, y))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|x| self.above[x].count_ones(..) + self.below[x].count_ones(..) + 1 == self.len())
    }

    /// All incomparable pairs `(x, y)` with `x < y` as indices.
    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in x + 1..n {
                if !self.comparable(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The closed principal ideal `{y : y <= x}`.
    pub fn principal_ideal(&self, x: usize) -> Result<OrderIdeal> {
        self.check(x)?;
        let mut members: Vec<usize> = self.below[x].ones().collect();
        members.push(x);
        members.sort_unstable();
        Ok(OrderIdeal { members })
    }

    /// The closed principal filter `{y : y >= x}`, sorted.
    pub fn principal_filter(&self, x: usize) -> Result<Vec<usize>> {
        self.check(x)?;
        let mut members: Vec<usize> = self.above[x].ones().collect();
        members.push(x);
        members.sort_unstable();
        Ok(members)
    }

    /// True iff `set` is down-closed. Out-of-range indices make it false.
    pub fn is_order_ideal(&self, set: &[usize]) -> bool {
        let n = self.len();
        let mut mask = FixedBitSet::with_capacity(n);
        for &x in set {
            if x >= n {
                return false;
            }
            mask.insert(x);
        }
        self.is_down_closed(&mask)
    }

    pub(crate) fn is_down_closed(&self, mask: &FixedBitSet) -> bool {
        mask.ones().all(|x| self.below[x].is_subset(mask))
    }

    /// The poset with `a < b` and its transitive consequences added.
    pub fn add_relation(&self, a: usize, b: usize) -> Result<AddedRelation> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(Error::SameElement(a));
        }
        if self.less(b, a) {
            return Err(Error::WouldCreateCycle { a, b });
        }
        if self.less(a, b) {
            return Ok(AddedRelation {
                poset: self.clone(),
                changed: false,
            });
        }
        let n = self.len();
        let mut above = self.above.clone();
        // Everything <= a now lies below everything >= b.
        let mut upper = self.above[b].clone();
        upper.insert(b);
        for x in 0..n {
            if x == a || self.less(x, a) {
                above[x].union_with(&upper);
            }
        }
        Ok(AddedRelation {
            poset: Self::from_strict_order(self.labels.clone(), above),
            changed: true,
        })
    }

    /// The induced subposet on `elements` (re-indexed in ascending order of
    /// the original indices, labels carried over).
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let mut keep: Vec<usize> = elements.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let m = keep.len();
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let mut above = vec![FixedBitSet::with_capacity(m); m];
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                if self.less(x, y) {
                    above[i].insert(j);
                }
            }
        }
        Self::from_strict_order(labels, above)
    }

    /// Renders a set of elements by label, e.g. `{1, 7, 9}`.
    pub fn format_set(&self, elements: &[usize]) -> String {
        let inner: Vec<&str> = elements.iter().map(|&x| self.label(x)).collect();
        format!("{{{}}}", inner.join(", "))
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.len())?;
        for &(u, v) in &self.covers {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl OrderIdeal {
    /// Validates that `members` is down-closed in `poset`.
    pub fn new(poset: &Poset, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&x) = members.iter().find(|&&x| x >= poset.len()) {
            return Err(Error::IndexOutOfRange {
                index: x,
                len: poset.len(),
            });
        }
        if !poset.is_order_ideal(&members) {
            return Err(Error::NotAnIdeal);
        }
        Ok(OrderIdeal { members })
    }

    pub(crate) fn from_mask(mask: &FixedBitSet) -> Self {
        OrderIdeal {
            members: mask.ones().collect(),
        }
    }

    pub(crate) fn to_mask(&self, n: usize) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(n);
        for &x in &self.members {
            mask.insert(x);
        }
        mask
    }

    pub fn empty() -> Self {
        OrderIdeal::default()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &OrderIdeal) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }
}
