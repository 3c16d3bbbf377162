//! Closed forms for two-row shapes `λ = (λ1, λ2)`.
//!
//! With the two cells in different rows there are two configurations:
//! `α = (1,a), β = (2,b)` with `b < a` (the first row cell sits to the right),
//! and `α = (2,a), β = (1,b)` with `a < b`. Blocking sets, counts and
//! probabilities are written directly in terms of binomials.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::blocking::{ratio, ExactRational};
use crate::error::{Error, Result};
use crate::tableaux::{factorial, Cell, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoRowKind {
    /// `α = (1,a)`, `β = (2,b)`, `b < a`.
    AlphaFirstRow,
    /// `α = (2,a)`, `β = (1,b)`, `a < b`.
    AlphaSecondRow,
}

/// A two-row shape with an incomparable pair of cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoRowCase {
    pub lambda1: usize,
    pub lambda2: usize,
    pub alpha: Cell,
    pub beta: Cell,
    pub kind: TwoRowKind,
}

impl TwoRowCase {
    pub fn new(lambda1: usize, lambda2: usize, alpha: Cell, beta: Cell) -> Result<Self> {
        if lambda2 > lambda1 || lambda2 == 0 {
            return Err(Error::InvalidCase(format!(
                "({lambda1},{lambda2}) is not a two-row partition"
            )));
        }
        let shape = Partition::new(vec![lambda1, lambda2])?;
        for c in [alpha, beta] {
            if !shape.contains_cell(c) {
                return Err(Error::CellOutsideShape(c));
            }
        }
        let kind = match (alpha.row, beta.row) {
            (1, 2) if beta.col < alpha.col => TwoRowKind::AlphaFirstRow,
            (2, 1) if alpha.col < beta.col => TwoRowKind::AlphaSecondRow,
            _ => {
                return Err(Error::InvalidCase(format!(
                    "cells {alpha} and {beta} are comparable"
                )))
            }
        };
        Ok(TwoRowCase {
            lambda1,
            lambda2,
            alpha,
            beta,
            kind,
        })
    }

    /// Shorthand for `α = (1,a)`, `β = (2,b)`.
    pub fn first_row(lambda1: usize, lambda2: usize, a: usize, b: usize) -> Result<Self> {
        Self::new(lambda1, lambda2, Cell::new(1, a), Cell::new(2, b))
    }

    pub fn shape(&self) -> Partition {
        Partition::new(vec![self.lambda1, self.lambda2]).expect("validated")
    }

    fn a(&self) -> usize {
        self.alpha.col
    }

    fn b(&self) -> usize {
        self.beta.col
    }
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `f^{(l1,l2)} = (l1+l2)! (1+l1−l2) / ((l1+1)! l2!)`.
pub fn f_two_row(l1: usize, l2: usize) -> Result<BigUint> {
    if l2 > l1 {
        return Err(Error::InvalidShape(format!("({l1},{l2}) is not a partition")));
    }
    // Same value as the factorial form, via the ballot difference.
    let n = l1 + l2;
    Ok(binomial(n, l2) - if l2 == 0 { BigUint::zero() } else { binomial(n, l2 - 1) })
}

/// `f^{(l1,l2)/(m)}`, the skew shape with a one-row inner partition.
pub fn f_two_row_skew(l1: usize, l2: usize, m: usize) -> Result<BigUint> {
    if l2 > l1 || m > l1 {
        return Err(Error::InvalidShape(format!("({l1},{l2})/({m}) is not a skew shape")));
    }
    let n = l1 + l2 - m;
    Ok(binomial(n, l2) - binomial(n, l1 + 1))
}

pub fn blocking_two_row(c: &TwoRowCase) -> Vec<Partition> {
    let (a, b) = (c.a(), c.b());
    let parts: Vec<Vec<usize>> = match c.kind {
        TwoRowKind::AlphaFirstRow => (0..b).map(|t| vec![a - 1, t]).collect(),
        TwoRowKind::AlphaSecondRow => (a..b).map(|t| vec![t, a - 1]).collect(),
    };
    let mut out: Vec<Partition> = parts
        .into_iter()
        .map(|p| Partition::new(p).expect("blocking shapes are partitions"))
        .collect();
    out.sort();
    out
}

/// `e(P_λ; α < β)` by the blocking expansion, each term reduced to a
/// one-row inner shape.
pub fn e_two_row(c: &TwoRowCase) -> BigUint {
    let (l1, l2, a, b) = (c.lambda1, c.lambda2, c.a(), c.b());
    let term = |bl: (usize, usize), inner: (usize, usize)| {
        let k = inner.1;
        f_two_row(bl.0, bl.1).expect("blocking shape") * f_two_row_skew(l1 - k, l2 - k, inner.0 - k).expect("skew shape")
    };
    match c.kind {
        TwoRowKind::AlphaFirstRow => (0..b).map(|t| term((a - 1, t), (a, t))).sum(),
        TwoRowKind::AlphaSecondRow => (a..b).map(|t| term((t, a - 1), (t, a))).sum(),
    }
}

pub fn probability_two_row(c: &TwoRowCase) -> ExactRational {
    ratio(&e_two_row(c), &f_two_row(c.lambda1, c.lambda2).expect("validated shape"))
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `P(P_{(n,n)}; (2,b) < (1,b+1)) = C_b C_{n−b} / C_n`.
pub fn catalan_probability(n: usize, b: usize) -> Result<ExactRational> {
    if b < 1 || b >= n {
        return Err(Error::OutOfRange(format!("need 1 <= b < n, got n={n}, b={b}")));
    }
    Ok(ratio(&(catalan(b) * catalan(n - b)), &catalan(n)))
}

fn dyadic(num: BigUint, log2_den: usize) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::one() << log2_den)
}

/// `C_b / 4^b`, the limit of [`catalan_probability`] as `n → ∞`.
pub fn limit_catalan(b: usize) -> Result<ExactRational> {
    if b < 1 {
        return Err(Error::OutOfRange("need b >= 1".into()));
    }
    Ok(dyadic(catalan(b), 2 * b))
}

/// Limit of `P(P_λ; (1,a) < (2,b))` as `λ1, λ2 → ∞` with bounded difference:
/// `(a+1)/2^a + Σ_{t=1}^{b−1} f^{(a−1,t)} (a−t+1) 2^{−(a−t)} 4^{−t}`.
pub fn limit_probability(a: usize, b: usize) -> Result<ExactRational> {
    if b < 1 || b >= a {
        return Err(Error::OutOfRange(format!("need 1 <= b < a, got a={a}, b={b}")));
    }
    let mut total = dyadic(BigUint::from(a + 1), a);
    for t in 1..b {
        let f = f_two_row(a - 1, t).expect("t < a - 1");
        total += dyadic(f * (a - t + 1), a + t);
    }
    Ok(total)
}

/// `f^{(l1,l2)/(mu1)} / f^{(l1,l2)}`.
pub fn skew_ratio_two_row(l1: usize, l2: usize, mu1: usize) -> Result<ExactRational> {
    if l2 > l1 || mu1 > l1 {
        return Err(Error::InvalidShape(format!("({l1},{l2})/({mu1}) is not a skew shape")));
    }
    let n = l1 + l2 - mu1;
    let skew = if mu1 >= l2 {
        // The rows no longer interact: interleave two chains.
        binomial(n, l2)
    } else {
        binomial(n, l2) - binomial(n, l1 + 1)
    };
    Ok(ratio(&skew, &f_two_row(l1, l2)?))
}

/// `f^{(l1−m, l2−m)} / f^{(l1,l2)}`, which tends to `4^{−m}`.
pub fn reduced_shape_ratio(l1: usize, l2: usize, mu2: usize) -> Result<ExactRational> {
    if mu2 > l2 || l2 > l1 {
        return Err(Error::InvalidShape(format!(
            "cannot strip {mu2} columns from ({l1},{l2})"
        )));
    }
    let n = l1 + l2;
    let num = factorial(n - 2 * mu2) * factorial(l1 + 1) * factorial(l2);
    let den = factorial(n) * factorial(l1 + 1 - mu2) * factorial(l2 - mu2);
    Ok(ratio(&num, &den))
}

/// `M[i][j] = P(P_{(a+i, a+j)}; (1,a) < (2,b))` for `j ≤ i`, zero above the
/// diagonal. Indices are zero-based, so `M[0][0]` is the shape `(a,a)`.
pub fn probability_matrix(a: usize, b: usize, size: usize) -> Result<Vec<Vec<ExactRational>>> {
    if b < 1 || b >= a || size < 1 {
        return Err(Error::OutOfRange(format!(
            "need 1 <= b < a and size >= 1, got a={a}, b={b}, size={size}"
        )));
    }
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if j > i {
                        return Ok(ExactRational::zero());
                    }
                    let c = TwoRowCase::first_row(a + i, a + j, a, b)?;
                    Ok(probability_two_row(&c))
                })
                .collect()
        })
        .collect()
}
