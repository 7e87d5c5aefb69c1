//! Finite distributions over index sets `0..n` and the index maps that act on
//! them.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::rat::{Prob, Rat};

/// A probability distribution over `0..n` with exact rational weights.
///
/// Weights are dense; the support is computed on demand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteDist {
    weights: Vec<Rat>,
}

impl FiniteDist {
    /// Validates nonnegativity and that the weights sum to exactly 1.
    pub fn new(weights: Vec<Rat>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        if let Some((index, w)) = weights.iter().enumerate().find(|(_, w)| w.is_negative()) {
            return Err(Error::NegativeWeight {
                index,
                weight: w.to_string(),
            });
        }
        let sum: Rat = weights.iter().sum();
        if !sum.is_one() {
            return Err(Error::WeightSum {
                sum: sum.to_string(),
            });
        }
        Ok(FiniteDist { weights })
    }

    /// Builds from `(num, den)` pairs; handy in tests and examples.
    pub fn from_fracs(fracs: &[(i64, i64)]) -> Result<Self> {
        let weights = fracs
            .iter()
            .map(|&(n, d)| Rat::new(n, d))
            .collect::<Result<Vec<_>>>()?;
        FiniteDist::new(weights)
    }

    pub fn point_mass(n: usize, j: usize) -> Result<Self> {
        if j >= n {
            return Err(Error::IndexOutOfRange { index: j, arity: n });
        }
        let weights = (0..n)
            .map(|i| if i == j { Rat::one() } else { Rat::zero() })
            .collect();
        Ok(FiniteDist { weights })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDistribution);
        }
        let w = Rat::new(1, n as i64)?;
        Ok(FiniteDist {
            weights: alloc::vec![w; n],
        })
    }

    /// The arity-2 distribution `(p, 1 - p)`.
    pub fn binary(p: &Prob) -> Self {
        FiniteDist {
            weights: alloc::vec![p.value().clone(), p.complement().into_rat()],
        }
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Rat {
        &self.weights[i]
    }

    /// Weight `i` as a probability.
    pub fn prob(&self, i: usize) -> Prob {
        Prob::from_rat(self.weights[i].clone()).expect("distribution weights lie in [0, 1]")
    }

    /// Indices with strictly positive weight.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| w.is_positive())
            .map(|(i, _)| i)
    }

    /// Pointwise `p * self + (1 - p) * other`.
    pub fn mix(&self, p: &Prob, other: &FiniteDist) -> Result<FiniteDist> {
        if self.arity() != other.arity() {
            return Err(Error::DimensionMismatch {
                expected: self.arity(),
                found: other.arity(),
            });
        }
        let q = p.complement();
        let weights = self
            .weights
            .iter()
            .zip(&other.weights)
            .map(|(a, b)| p.value() * a + q.value() * b)
            .collect();
        Ok(FiniteDist { weights })
    }

    /// The renormalised tail `d'_i = d_{i+1} / (1 - d_0)`, defined when
    /// `d_0 != 1` and the arity is at least 2.
    pub fn tail(&self) -> Result<FiniteDist> {
        if self.arity() < 2 {
            return Err(Error::EmptyDistribution);
        }
        let rest = Rat::one() - &self.weights[0];
        let weights = self.weights[1..]
            .iter()
            .map(|w| w.checked_div(&rest))
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteDist { weights })
    }

    /// `i -> d_{s(i)}`.
    pub fn permute(&self, s: &Permutation) -> Result<FiniteDist> {
        check_arity(self.arity(), s.arity())?;
        Ok(FiniteDist {
            weights: s.apply(&self.weights),
        })
    }

    /// The uniquely determined distribution whose every weight is given,
    /// without re-validation. Callers must uphold the invariants.
    pub(crate) fn from_trusted(weights: Vec<Rat>) -> FiniteDist {
        debug_assert!(FiniteDist::new(weights.clone()).is_ok());
        FiniteDist { weights }
    }
}

impl fmt::Display for FiniteDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.weights)
    }
}

impl fmt::Debug for FiniteDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteDist{self}")
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

pub(crate) fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

/// An `n x m` row-stochastic matrix: `n` distributions over `0..m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StochasticMatrix {
    cols: usize,
    rows: Vec<FiniteDist>,
}

impl StochasticMatrix {
    pub fn new(rows: Vec<FiniteDist>) -> Result<Self> {
        let cols = rows.first().ok_or(Error::EmptyDistribution)?.arity();
        for r in &rows {
            check_arity(cols, r.arity())?;
        }
        Ok(StochasticMatrix { cols, rows })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let rows = (0..n)
            .map(|i| FiniteDist::point_mass(n, i))
            .collect::<Result<Vec<_>>>()?;
        StochasticMatrix::new(rows)
    }

    pub fn rows(&self) -> &[FiniteDist] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &FiniteDist {
        &self.rows[i]
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    /// Whether the row supports are pairwise disjoint.
    pub fn has_disjoint_supports(&self) -> bool {
        let mut owner = alloc::vec![false; self.cols];
        for r in &self.rows {
            for j in r.support() {
                if owner[j] {
                    return false;
                }
                owner[j] = true;
            }
        }
        true
    }
}

/// A total map `0..source -> 0..target`, stored as a table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexMap {
    target: usize,
    table: Vec<usize>,
}

/// A map `K: 0..n -> 0..m` whose fibres `K^{-1}(j)` are the blocks of a
/// partition (some blocks may be empty).
pub type PartitionMap = IndexMap;

impl IndexMap {
    pub fn new(table: Vec<usize>, target: usize) -> Result<Self> {
        if let Some(&index) = table.iter().find(|&&v| v >= target) {
            return Err(Error::IndexOutOfRange {
                index,
                arity: target,
            });
        }
        Ok(IndexMap { target, table })
    }

    pub fn identity(n: usize) -> Self {
        IndexMap {
            target: n,
            table: (0..n).collect(),
        }
    }

    pub fn source(&self) -> usize {
        self.table.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn get(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = alloc::vec![false; self.target];
        self.table
            .iter()
            .all(|&v| !core::mem::replace(&mut seen[v], true))
    }
}

/// A bijection on `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    perm: Vec<usize>,
}

impl Permutation {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = alloc::vec![false; perm.len()];
        for &v in &perm {
            if v >= perm.len() || core::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(Permutation { perm })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            perm: (0..n).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.perm.len()
    }

    pub fn get(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// `i -> xs[s(i)]`.
    pub fn apply<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        self.perm.iter().map(|&j| xs[j].clone()).collect()
    }
}

/// `w_j = sum_i d_i e_{i,j}`.
pub fn mix_rows(d: &FiniteDist, e: &StochasticMatrix) -> Result<FiniteDist> {
    check_arity(d.arity(), e.num_rows())?;
    let mut weights = alloc::vec![Rat::zero(); e.num_cols()];
    for (di, row) in d.weights().iter().zip(e.rows()) {
        for (w, eij) in weights.iter_mut().zip(row.weights()) {
            *w += &(di * eij);
        }
    }
    Ok(FiniteDist::from_trusted(weights))
}

/// The pushforward `u_* d`, with `(u_* d)_j = sum_{u(i) = j} d_i`.
pub fn pushforward(d: &FiniteDist, u: &IndexMap) -> Result<FiniteDist> {
    check_arity(u.source(), d.arity())?;
    let mut weights = alloc::vec![Rat::zero(); u.target()];
    for (i, w) in d.weights().iter().enumerate() {
        weights[u.get(i)] += w;
    }
    Ok(FiniteDist::from_trusted(weights))
}

/// Block masses `rho_j = sum_{K(k) = j} lambda_k`.
pub fn rho_dist(lam: &FiniteDist, k: &PartitionMap) -> Result<FiniteDist> {
    pushforward(lam, k)
}

/// The inner distribution of block `j`: `k -> delta_{j, K(k)} lambda_k / rho_j`,
/// or the uniform distribution over `0..n` when `rho_j = 0`.
pub fn partition_inner(j: usize, lam: &FiniteDist, k: &PartitionMap) -> Result<FiniteDist> {
    check_arity(k.source(), lam.arity())?;
    if j >= k.target() {
        return Err(Error::IndexOutOfRange {
            index: j,
            arity: k.target(),
        });
    }
    let rho: Rat = (0..lam.arity())
        .filter(|&i| k.get(i) == j)
        .map(|i| lam.weight(i))
        .sum();
    if rho.is_zero() {
        return FiniteDist::uniform(lam.arity());
    }
    let weights = (0..lam.arity())
        .map(|i| {
            if k.get(i) == j {
                lam.weight(i) / &rho
            } else {
                Rat::zero()
            }
        })
        .collect();
    Ok(FiniteDist::from_trusted(weights))
}
