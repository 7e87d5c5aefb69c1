//! Seeded generators for coefficients, distributions and index maps.
//!
//! Weights use common denominators of at most 64. Boundary values (0, 1,
//! point masses, zero weights) are drawn with elevated probability because
//! that is where the conventions of the recursive operator matter.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dist::{FiniteDist, IndexMap, Permutation, StochasticMatrix};
use crate::rat::{Prob, Rat};

/// The generator used by every checker.
pub type LawRng = ChaCha8Rng;

pub const MAX_DENOMINATOR: i64 = 64;

/// A generator stream for one named law; independent of evaluation order.
pub fn law_rng(seed: u64, law: &str) -> LawRng {
    let mut rng = LawRng::seed_from_u64(seed);
    // FNV-1a
    let stream = law.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x100_0000_01b3)
    });
    rng.set_stream(stream);
    rng
}

pub fn prob(rng: &mut LawRng) -> Prob {
    match rng.random_range(0..10) {
        0 => Prob::zero(),
        1 => Prob::one(),
        _ => {
            let den = rng.random_range(1..=MAX_DENOMINATOR);
            let num = rng.random_range(0..=den);
            Prob::new(num, den).expect("num <= den")
        }
    }
}

/// A rational with small numerator and denominator, of either sign.
pub fn rat(rng: &mut LawRng) -> Rat {
    let den = rng.random_range(1..=16);
    let num = rng.random_range(-24..=24);
    Rat::new(num, den).expect("nonzero denominator")
}

/// A nonnegative scale factor, zero with elevated probability.
pub fn scale(rng: &mut LawRng) -> Rat {
    if rng.random_range(0..8) == 0 {
        return Rat::zero();
    }
    let den = rng.random_range(1..=8);
    let num = rng.random_range(0..=24);
    Rat::new(num, den).expect("nonzero denominator")
}

/// A strictly positive weight.
pub fn positive(rng: &mut LawRng) -> Rat {
    let den = rng.random_range(1..=8);
    let num = rng.random_range(1..=24);
    Rat::new(num, den).expect("nonzero denominator")
}

/// A distribution of arity `n`: a random composition of a common
/// denominator, occasionally a point mass.
pub fn dist(rng: &mut LawRng, n: usize) -> FiniteDist {
    assert!(n >= 1);
    if rng.random_range(0..8) == 0 {
        return FiniteDist::point_mass(n, rng.random_range(0..n)).expect("j < n");
    }
    let den = rng.random_range(1..=MAX_DENOMINATOR);
    let mut cuts: Vec<i64> = (0..n - 1).map(|_| rng.random_range(0..=den)).collect();
    cuts.push(0);
    cuts.push(den);
    cuts.sort_unstable();
    let weights = cuts
        .windows(2)
        .map(|w| Rat::new(w[1] - w[0], den).expect("nonzero denominator"))
        .collect();
    FiniteDist::new(weights).expect("composition sums to the denominator")
}

/// A distribution with strictly positive weights.
pub fn full_support_dist(rng: &mut LawRng, n: usize) -> FiniteDist {
    let raw: Vec<i64> = (0..n).map(|_| rng.random_range(1..=16)).collect();
    let total: i64 = raw.iter().sum();
    let weights = raw
        .into_iter()
        .map(|w| Rat::new(w, total).expect("positive total"))
        .collect();
    FiniteDist::new(weights).expect("normalised")
}

/// A distribution whose support is a subset of `allowed` (nonempty).
pub fn dist_supported_on(rng: &mut LawRng, n: usize, allowed: &[usize]) -> FiniteDist {
    assert!(!allowed.is_empty());
    let inner = dist(rng, allowed.len());
    let mut weights = alloc::vec![Rat::zero(); n];
    for (&i, w) in allowed.iter().zip(inner.weights()) {
        weights[i] = w.clone();
    }
    FiniteDist::new(weights).expect("reindexed distribution")
}

pub fn arity(rng: &mut LawRng, max: usize) -> usize {
    rng.random_range(1..=max.max(1))
}

pub fn stochastic_matrix(rng: &mut LawRng, n: usize, m: usize) -> StochasticMatrix {
    let rows = (0..n).map(|_| dist(rng, m)).collect();
    StochasticMatrix::new(rows).expect("rows share arity")
}

/// An `n x m` matrix with pairwise-disjoint row supports; requires `m >= n`.
pub fn disjoint_matrix(rng: &mut LawRng, n: usize, m: usize) -> StochasticMatrix {
    assert!(m >= n);
    // Each row owns at least one column; remaining columns go to random rows
    // or to nobody.
    let mut cols: Vec<usize> = (0..m).collect();
    cols.shuffle(rng);
    let mut owned: Vec<Vec<usize>> = (0..n).map(|i| alloc::vec![cols[i]]).collect();
    for &c in &cols[n..] {
        let r = rng.random_range(0..=n);
        if r < n {
            owned[r].push(c);
        }
    }
    let rows = owned
        .iter()
        .map(|cs| dist_supported_on(rng, m, cs))
        .collect();
    StochasticMatrix::new(rows).expect("rows share arity")
}

pub fn index_map(rng: &mut LawRng, source: usize, target: usize) -> IndexMap {
    let table = (0..source).map(|_| rng.random_range(0..target)).collect();
    IndexMap::new(table, target).expect("values below target")
}

/// An injection `0..source -> 0..target`; requires `source <= target`.
pub fn injection(rng: &mut LawRng, source: usize, target: usize) -> IndexMap {
    assert!(source <= target);
    let mut all: Vec<usize> = (0..target).collect();
    all.shuffle(rng);
    all.truncate(source);
    IndexMap::new(all, target).expect("values below target")
}

pub fn permutation(rng: &mut LawRng, n: usize) -> Permutation {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    Permutation::new(p).expect("shuffled identity")
}

pub fn coin(rng: &mut LawRng, one_in: u32) -> bool {
    rng.random_range(0..one_in) == 0
}

pub fn index(rng: &mut LawRng, n: usize) -> usize {
    rng.random_range(0..n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samplers_respect_invariants() {
        let mut rng = law_rng(7, "samplers");
        for _ in 0..200 {
            let n = arity(&mut rng, 6);
            let m = n + index(&mut rng, 3);
            let d = dist(&mut rng, n);
            assert_eq!(d.arity(), n);
            assert!(d.weights().iter().all(|w| w.denom() <= &64.into()));
            assert!(disjoint_matrix(&mut rng, n, m).has_disjoint_supports());
            assert!(injection(&mut rng, n, m).is_injective());
            assert!(full_support_dist(&mut rng, n).support().count() == n);
        }
    }

    #[test]
    fn streams_are_deterministic() {
        let a: Vec<Prob> = {
            let mut r = law_rng(1, "unit");
            (0..20).map(|_| prob(&mut r)).collect()
        };
        let b: Vec<Prob> = {
            let mut r = law_rng(1, "unit");
            (0..20).map(|_| prob(&mut r)).collect()
        };
        let c: Vec<Prob> = {
            let mut r = law_rng(1, "idempotence");
            (0..20).map(|_| prob(&mut r)).collect()
        };
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
