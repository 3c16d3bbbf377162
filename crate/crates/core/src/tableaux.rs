//! Partitions, skew shapes and counts of standard tableaux.
//!
//! Cells are one-indexed `(row, col)`. `f^λ` is available from the hook
//! length formula, `f^{λ/μ}` from the Aitken determinant and independently
//! from excited diagrams. The blocking expansion specialised to cell posets
//! lives at the bottom of the file.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::blocking::{blocking_ideals, ratio, ExactRational};
use crate::error::{Error, Result};
use crate::poset::{OrderIdeal, Poset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Componentwise order on cells.
    pub fn leq(&self, other: &Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Cell {
    type Err = Error;

    /// Accepts `r,c` or `(r,c)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidShape(format!("cannot parse cell {s:?}"));
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (r, c) = inner.split_once(',').ok_or_else(bad)?;
        let row = r.trim().parse().map_err(|_| bad())?;
        let col = c.trim().parse().map_err(|_| bad())?;
        Ok(Cell { row, col })
    }
}

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Trailing zeros are stripped; anything else out of order is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Length of row `i` (one-indexed), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::new(parts).expect("conjugate is weakly decreasing")
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row(c.row)
    }

    /// `other ⊆ self` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    /// The partition whose diagram is exactly `cells`, if there is one.
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Result<Partition> {
        let cells: HashSet<Cell> = cells.into_iter().collect();
        let rows = cells.iter().map(|c| c.row).max().unwrap_or(0);
        let mut parts = vec![0; rows];
        for c in &cells {
            parts[c.row - 1] += 1;
        }
        let p = Partition::new(parts)?;
        if p.weight() != cells.len() || !cells.iter().all(|&c| p.contains_cell(c)) {
            return Err(Error::InvalidPartition("cells do not form a diagram".into()));
        }
        Ok(p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma separated parts, optionally parenthesised; empty string is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.outer
            .cells()
            .into_iter()
            .filter(|&c| !self.inner.contains_cell(c))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// The cell poset of a partition together with the cell/index maps.
#[derive(Clone, Debug)]
pub struct CellPoset {
    partition: Partition,
    poset: Poset,
    cells: Vec<Cell>,
    index: HashMap<Cell, usize>,
}

impl CellPoset {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> Cell {
        self.cells[i]
    }

    pub fn index_of(&self, c: Cell) -> Result<usize> {
        self.index.get(&c).copied().ok_or(Error::CellOutsideShape(c))
    }

    /// Converts an order ideal of the cell poset into its sub-partition.
    pub fn ideal_to_partition(&self, ideal: &OrderIdeal) -> Partition {
        Partition::from_cells(ideal.members().iter().map(|&i| self.cells[i]))
            .expect("order ideals of a cell poset are diagrams")
    }
}

/// Cells ordered componentwise; covers are unit steps right or down.
pub fn cell_poset(p: &Partition) -> CellPoset {
    let cells = p.cells();
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut edges = Vec::new();
    for (i, c) in cells.iter().enumerate() {
        for next in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
            if let Some(&j) = index.get(&next) {
                edges.push((i, j));
            }
        }
    }
    let labels = cells.iter().map(Cell::to_string).collect();
    let poset = Poset::with_labels(labels, &edges).expect("cell order is acyclic");
    CellPoset {
        partition: p.clone(),
        poset,
        cells,
        index,
    }
}

/// Arm plus leg plus one.
pub fn hook_length(p: &Partition, c: Cell) -> Result<usize> {
    if !p.contains_cell(c) {
        return Err(Error::CellOutsideShape(c));
    }
    let leg_end = p.parts.iter().take_while(|&&len| len >= c.col).count();
    Ok(p.row(c.row) - c.col + leg_end - c.row + 1)
}

/// `H_λ(S)`, the product of hook lengths over `cells`.
pub fn hook_product(p: &Partition, cells: &[Cell]) -> Result<BigUint> {
    cells
        .iter()
        .try_fold(BigUint::one(), |acc, &c| Ok(acc * hook_length(p, c)?))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `f^λ = |λ|! / Π h(c)`.
pub fn f_hook(p: &Partition) -> BigUint {
    let hooks = hook_product(p, &p.cells()).expect("cells of p lie in p");
    let (q, r) = factorial(p.weight()).div_rem(&hooks);
    debug_assert!(r.is_zero());
    q
}

fn inverse_factorial(m: i64) -> BigRational {
    if m < 0 {
        BigRational::zero()
    } else {
        BigRational::new(BigInt::one(), BigInt::from(factorial(m as usize)))
    }
}

pub(crate) fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// `f^{λ/μ} = |λ/μ|! · det[1/(λ_i − μ_j − i + j)!]`, evaluated exactly.
pub fn f_skew_aitken(s: &SkewShape) -> BigUint {
    let n = s.outer.len();
    if n == 0 {
        return BigUint::one();
    }
    let matrix: Vec<Vec<BigRational>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let m = s.outer.row(i) as i64 - s.inner.row(j) as i64 - i as i64 + j as i64;
                    inverse_factorial(m)
                })
                .collect()
        })
        .collect();
    let value = determinant(matrix) * BigRational::from_integer(BigInt::from(factorial(s.size())));
    assert!(
        value.is_integer() && !value.is_negative(),
        "Aitken determinant produced {value} for {s}"
    );
    value
        .to_integer()
        .to_biguint()
        .expect("non-negative integer")
}

/// A set of cells obtained from the inner shape by excited moves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExcitedDiagram {
    cells: Vec<Cell>,
}

impl ExcitedDiagram {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }
}

/// All excited diagrams of `λ/μ`, by breadth-first search from `μ`.
/// `μ` itself comes first.
pub fn excited_diagrams(s: &SkewShape) -> Vec<ExcitedDiagram> {
    let start = ExcitedDiagram {
        cells: s.inner.cells(),
    };
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(d) = queue.pop_front() {
        let occupied: HashSet<Cell> = d.cells.iter().copied().collect();
        let free = |c: Cell| s.outer.contains_cell(c) && !occupied.contains(&c);
        for (k, &c) in d.cells.iter().enumerate() {
            let right = Cell::new(c.row, c.col + 1);
            let down = Cell::new(c.row + 1, c.col);
            let diag = Cell::new(c.row + 1, c.col + 1);
            if free(right) && free(down) && free(diag) {
                let mut cells = d.cells.clone();
                cells[k] = diag;
                cells.sort_unstable();
                let next = ExcitedDiagram { cells };
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out.push(d);
    }
    out
}

/// `f^{λ/μ} = |λ/μ|! · Σ_C H_λ(C) / H_λ(λ)` over excited diagrams `C`.
pub fn f_skew_naruse(s: &SkewShape) -> Result<BigUint> {
    let outer = &s.outer;
    let total_hooks = hook_product(outer, &outer.cells())?;
    let mut sum = BigUint::zero();
    for d in excited_diagrams(s) {
        sum += hook_product(outer, d.cells())?;
    }
    let (q, r) = (factorial(s.size()) * sum).div_rem(&total_hooks);
    if !r.is_zero() {
        return Err(Error::NonIntegralResult("excited diagram sum"));
    }
    Ok(q)
}

/// Strips the `k = μ_r` full leading columns (`r = ℓ(λ)`) from both shapes.
pub fn reduce(s: &SkewShape) -> Result<SkewShape> {
    let r = s.outer.len();
    let k = s.inner.row(r);
    if r == 0 || k == 0 {
        return Err(Error::NotReducible(format!(
            "{s}: inner shape does not reach the last row"
        )));
    }
    let shift = |p: &Partition| {
        Partition::new(p.parts.iter().map(|&x| x - k).collect()).expect("shifting keeps order")
    };
    SkewShape::new(shift(&s.outer), shift(&s.inner))
}

/// Reduces repeatedly until no longer possible.
pub fn fully_reduce(s: &SkewShape) -> SkewShape {
    let mut current = s.clone();
    while let Ok(next) = reduce(&current) {
        current = next;
    }
    current
}

/// Blocking ideals of the cell poset as sub-partitions, sorted.
pub fn blocking_partitions(p: &Partition, a: Cell, b: Cell) -> Result<Vec<Partition>> {
    let cp = cell_poset(p);
    let (ia, ib) = (cp.index_of(a)?, cp.index_of(b)?);
    let mut out: Vec<Partition> = blocking_ideals(cp.poset(), ia, ib)?
        .iter()
        .map(|t| cp.ideal_to_partition(t))
        .collect();
    out.sort();
    Ok(out)
}

/// One summand `f^T · f^{λ/(T ∪ {a})}` of the partition blocking expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTerm {
    pub blocking: Partition,
    pub remainder: SkewShape,
    pub f_blocking: BigUint,
    pub f_remainder: BigUint,
}

pub fn partition_terms(p: &Partition, a: Cell, b: Cell) -> Result<Vec<PartitionTerm>> {
    blocking_partitions(p, a, b)?
        .into_iter()
        .map(|t| {
            let mut with_a = t.cells();
            with_a.push(a);
            let remainder = SkewShape::new(p.clone(), Partition::from_cells(with_a)?)?;
            Ok(PartitionTerm {
                f_blocking: f_hook(&t),
                f_remainder: f_skew_aitken(&remainder),
                blocking: t,
                remainder,
            })
        })
        .collect()
}

/// `e(P_λ; a < b)` as `Σ_T f^T f^{λ/(T ∪ {a})}`.
pub fn e_partition(p: &Partition, a: Cell, b: Cell) -> Result<BigUint> {
    Ok(partition_terms(p, a, b)?
        .into_iter()
        .map(|t| t.f_blocking * t.f_remainder)
        .sum())
}

/// `P(P_λ; a < b)`; 1 or 0 for comparable cells.
pub fn probability_partition(p: &Partition, a: Cell, b: Cell) -> Result<ExactRational> {
    for c in [a, b] {
        if !p.contains_cell(c) {
            return Err(Error::CellOutsideShape(c));
        }
    }
    if a == b {
        let cp = cell_poset(p);
        return Err(Error::SameElement(cp.index_of(a)?));
    }
    if a.leq(&b) {
        return Ok(ExactRational::one());
    }
    if b.leq(&a) {
        return Ok(ExactRational::zero());
    }
    Ok(ratio(&e_partition(p, a, b)?, &f_hook(p)))
}

/// Text picture of the blocking structure: `F` fixed, `V` variable, `a`, `b`,
/// and `o` for everything else.
pub fn decorated_tableau(p: &Partition, a: Cell, b: Cell) -> Result<String> {
    let cp = cell_poset(p);
    let (ia, ib) = (cp.index_of(a)?, cp.index_of(b)?);
    let d = crate::blocking::decompose(cp.poset(), ia, ib)?;
    let mut rows = Vec::new();
    for (i, &len) in p.parts().iter().enumerate() {
        let row: Vec<&str> = (1..=len)
            .map(|j| {
                let c = Cell::new(i + 1, j);
                let idx = cp.index_of(c).expect("cell in shape");
                if c == a {
                    "a"
                } else if c == b {
                    "b"
                } else if d.fixed.contains(idx) {
                    "F"
                } else if d.variable.contains(&idx) {
                    "V"
                } else {
                    "o"
                }
            })
            .collect();
        rows.push(row.join(" "));
    }
    Ok(rows.join("\n"))
}

/// Small helper for callers that want a float view of an exact value.
pub fn to_f64(x: &ExactRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
