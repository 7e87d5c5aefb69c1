//! The binary convex-space interface, its shipped instances and the
//! binary-law checkers.

use alloc::vec::Vec;
use core::fmt;

use crate::dist::{write_tuple, FiniteDist};
use crate::error::{Error, Result};
use crate::inputs;
use crate::rat::{r_of, s_of, Prob, Rat};
use crate::report::{LawConfig, LawOutcome, LawReport};
use crate::sample::{self, LawRng};

/// A convex space: a carrier with binary combinations `x <p> y` for every
/// `p` in `[0, 1]`.
///
/// Implementors promise the unit, idempotence, skewed commutativity and
/// quasi-associativity laws; `check_binary_laws` tests that promise.
/// Points of one space share a shape (dimension, alphabet); `conv` may panic
/// when handed points of different shapes, `try_conv` reports it instead.
pub trait ConvexSpace {
    type Point: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn conv(&self, p: &Prob, x: &Self::Point, y: &Self::Point) -> Self::Point;

    /// Checks that `x` has this space's shape.
    fn validate(&self, _x: &Self::Point) -> Result<()> {
        Ok(())
    }

    fn try_conv(&self, p: &Prob, x: &Self::Point, y: &Self::Point) -> Result<Self::Point> {
        self.validate(x)?;
        self.validate(y)?;
        Ok(self.conv(p, x, y))
    }

    /// The multiary combination `<|>_d xs`. Defaults to the recursion on the
    /// binary operator, see [`crate::multiary::convn_recursive`].
    fn convn(&self, d: &FiniteDist, xs: &[Self::Point]) -> Result<Self::Point> {
        crate::multiary::convn_recursive(self, d, xs)
    }
}

impl<S: ConvexSpace + ?Sized> ConvexSpace for &S {
    type Point = S::Point;

    fn conv(&self, p: &Prob, x: &Self::Point, y: &Self::Point) -> Self::Point {
        (**self).conv(p, x, y)
    }

    fn validate(&self, x: &Self::Point) -> Result<()> {
        (**self).validate(x)
    }

    fn convn(&self, d: &FiniteDist, xs: &[Self::Point]) -> Result<Self::Point> {
        (**self).convn(d, xs)
    }
}

/// A space with a canonical generator of sample points.
pub trait SampleSpace: ConvexSpace {
    fn sample_point(&self, rng: &mut LawRng) -> Self::Point;
}

/// The rational line, `a <p> b = p a + (1 - p) b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RatLine;

impl ConvexSpace for RatLine {
    type Point = Rat;

    fn conv(&self, p: &Prob, x: &Rat, y: &Rat) -> Rat {
        p.value() * x + p.complement().value() * y
    }
}

impl SampleSpace for RatLine {
    fn sample_point(&self, rng: &mut LawRng) -> Rat {
        sample::rat(rng)
    }
}

/// A point of `Q^dim`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatVector(Vec<Rat>);

impl RatVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatVector(coords)
    }

    pub fn from_fracs(fracs: &[(i64, i64)]) -> Result<Self> {
        fracs
            .iter()
            .map(|&(n, d)| Rat::new(n, d))
            .collect::<Result<Vec<_>>>()
            .map(RatVector)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    /// Coordinatewise `p x + (1 - p) y`.
    pub fn mix(&self, p: &Prob, other: &RatVector) -> Result<RatVector> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let q = p.complement();
        Ok(RatVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| p.value() * a + q.value() * b)
                .collect(),
        ))
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatVector{self}")
    }
}

/// `Q^dim` with coordinatewise combination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatVectorSpace {
    pub dim: usize,
}

impl RatVectorSpace {
    pub fn new(dim: usize) -> Self {
        RatVectorSpace { dim }
    }
}

impl ConvexSpace for RatVectorSpace {
    type Point = RatVector;

    fn conv(&self, p: &Prob, x: &RatVector, y: &RatVector) -> RatVector {
        x.mix(p, y).expect("points share the space dimension")
    }

    fn validate(&self, x: &RatVector) -> Result<()> {
        if x.dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            })
        }
    }
}

impl SampleSpace for RatVectorSpace {
    fn sample_point(&self, rng: &mut LawRng) -> RatVector {
        RatVector((0..self.dim).map(|_| sample::rat(rng)).collect())
    }
}

/// Distributions over a fixed alphabet `0..alphabet`, mixed pointwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub alphabet: usize,
}

impl Simplex {
    pub fn new(alphabet: usize) -> Self {
        Simplex { alphabet }
    }
}

impl ConvexSpace for Simplex {
    type Point = FiniteDist;

    fn conv(&self, p: &Prob, x: &FiniteDist, y: &FiniteDist) -> FiniteDist {
        x.mix(p, y).expect("distributions share the alphabet")
    }

    fn validate(&self, x: &FiniteDist) -> Result<()> {
        if x.arity() == self.alphabet {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.alphabet,
                found: x.arity(),
            })
        }
    }
}

impl SampleSpace for Simplex {
    fn sample_point(&self, rng: &mut LawRng) -> FiniteDist {
        sample::dist(rng, self.alphabet)
    }
}

/// Whether `q` dominates `p`: `q(a) = 0` implies `p(a) = 0`.
pub fn dominates(q: &FiniteDist, p: &FiniteDist) -> Result<bool> {
    if q.arity() != p.arity() {
        return Err(Error::DimensionMismatch {
            expected: q.arity(),
            found: p.arity(),
        });
    }
    Ok(q.weights()
        .iter()
        .zip(p.weights())
        .all(|(qa, pa)| !qa.is_zero() || pa.is_zero()))
}

/// A pair `(P, Q)` of distributions with `Q` dominating `P`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DominatedPair {
    p: FiniteDist,
    q: FiniteDist,
}

impl DominatedPair {
    pub fn new(p: FiniteDist, q: FiniteDist) -> Result<Self> {
        if !dominates(&q, &p)? {
            return Err(Error::NotDominated);
        }
        Ok(DominatedPair { p, q })
    }

    pub fn p(&self) -> &FiniteDist {
        &self.p
    }

    pub fn q(&self) -> &FiniteDist {
        &self.q
    }

    /// `(P1 <l> P2, Q1 <l> Q2)`; dominance is re-validated.
    pub fn mix(&self, l: &Prob, other: &DominatedPair) -> Result<DominatedPair> {
        DominatedPair::new(self.p.mix(l, &other.p)?, self.q.mix(l, &other.q)?)
    }
}

impl fmt::Display for DominatedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} << {}", self.p, self.q)
    }
}

/// Dominated pairs over a fixed alphabet, combined componentwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominatedPairs {
    pub alphabet: usize,
}

impl DominatedPairs {
    pub fn new(alphabet: usize) -> Self {
        DominatedPairs { alphabet }
    }
}

impl ConvexSpace for DominatedPairs {
    type Point = DominatedPair;

    fn conv(&self, p: &Prob, x: &DominatedPair, y: &DominatedPair) -> DominatedPair {
        x.mix(p, y)
            .expect("mixtures of dominated pairs stay dominated")
    }

    fn validate(&self, x: &DominatedPair) -> Result<()> {
        if x.p.arity() == self.alphabet {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.alphabet,
                found: x.p.arity(),
            })
        }
    }
}

impl SampleSpace for DominatedPairs {
    fn sample_point(&self, rng: &mut LawRng) -> DominatedPair {
        let q = sample::dist(rng, self.alphabet);
        let p = if sample::coin(rng, 6) {
            q.clone()
        } else {
            let support: Vec<usize> = q.support().collect();
            sample::dist_supported_on(rng, self.alphabet, &support)
        };
        DominatedPair::new(p, q).expect("p is supported inside q")
    }
}

pub const UNIT: &str = "unit";
pub const IDEMPOTENCE: &str = "idempotence";
pub const SKEWED_COMMUTATIVITY: &str = "skewed-commutativity";
pub const QUASI_ASSOCIATIVITY: &str = "quasi-associativity";
pub const ENTROPIC: &str = "entropic";

/// Checks the four binary axioms on sampled `(p, q, x, y, z)`.
pub fn check_binary_laws<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawReport
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut unit = LawOutcome::new(UNIT);
    let mut idem = LawOutcome::new(IDEMPOTENCE);
    let mut skew = LawOutcome::new(SKEWED_COMMUTATIVITY);
    let mut assoc = LawOutcome::new(QUASI_ASSOCIATIVITY);
    let mut rng = sample::law_rng(cfg.seed, "binary");
    for case in 0..cfg.cases {
        let p = sample::prob(&mut rng);
        let q = sample::prob(&mut rng);
        let x = sampler(&mut rng);
        let y = sampler(&mut rng);
        let z = sampler(&mut rng);

        unit.check(
            case,
            space.try_conv(&Prob::one(), &x, &y),
            Ok(x.clone()),
            inputs!["x" => x, "y" => y],
        );
        idem.check(
            case,
            space.try_conv(&p, &x, &x),
            Ok(x.clone()),
            inputs!["p" => p, "x" => x],
        );
        skew.check(
            case,
            space.try_conv(&p.complement(), &x, &y),
            space.try_conv(&p, &y, &x),
            inputs!["p" => p, "x" => x, "y" => y],
        );
        if p.is_zero() && q.is_zero() {
            assoc.degenerate += 1;
        }
        let lhs = space
            .try_conv(&q, &y, &z)
            .and_then(|yz| space.try_conv(&p, &x, &yz));
        let rhs = space
            .try_conv(&r_of(&p, &q), &x, &y)
            .and_then(|xy| space.try_conv(&s_of(&p, &q), &xy, &z));
        assoc.check(
            case,
            lhs,
            rhs,
            inputs!["p" => p, "q" => q, "x" => x, "y" => y, "z" => z],
        );
    }
    let mut report = LawReport::new();
    for o in [unit, idem, skew, assoc] {
        report.push(o);
    }
    report
}

/// Checks `(a <q> b) <p> (c <q> d) = (a <p> c) <q> (b <p> d)`.
pub fn check_entropic_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut out = LawOutcome::new(ENTROPIC);
    let mut rng = sample::law_rng(cfg.seed, ENTROPIC);
    for case in 0..cfg.cases {
        let p = sample::prob(&mut rng);
        let q = sample::prob(&mut rng);
        let [a, b, c, d] = [(); 4].map(|_| sampler(&mut rng));
        out.check(
            case,
            entropic_lhs(space, &p, &q, [&a, &b, &c, &d]),
            entropic_rhs(space, &p, &q, [&a, &b, &c, &d]),
            inputs!["p" => p, "q" => q, "a" => a, "b" => b, "c" => c, "d" => d],
        );
    }
    out
}

pub(crate) fn entropic_lhs<S: ConvexSpace + ?Sized>(
    space: &S,
    p: &Prob,
    q: &Prob,
    [a, b, c, d]: [&S::Point; 4],
) -> Result<S::Point> {
    let ab = space.try_conv(q, a, b)?;
    let cd = space.try_conv(q, c, d)?;
    space.try_conv(p, &ab, &cd)
}

pub(crate) fn entropic_rhs<S: ConvexSpace + ?Sized>(
    space: &S,
    p: &Prob,
    q: &Prob,
    [a, b, c, d]: [&S::Point; 4],
) -> Result<S::Point> {
    let ac = space.try_conv(p, a, c)?;
    let bd = space.try_conv(p, b, d)?;
    space.try_conv(q, &ac, &bd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mutant::LeftProjection;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn fd(fr: &[(i64, i64)]) -> FiniteDist {
        FiniteDist::from_fracs(fr).unwrap()
    }

    #[test]
    fn conv_examples() {
        assert_eq!(RatLine.conv(&Prob::one(), &r(5, 1), &r(9, 1)), r(5, 1));
        assert_eq!(
            RatLine.conv(&Prob::new(1, 2).unwrap(), &r(0, 1), &r(1, 1)),
            r(1, 2)
        );
        let half = Prob::new(1, 2).unwrap();
        assert_eq!(
            Simplex::new(2).conv(&half, &fd(&[(1, 1), (0, 1)]), &fd(&[(0, 1), (1, 1)])),
            fd(&[(1, 2), (1, 2)])
        );
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let s = RatVectorSpace::new(2);
        let a = RatVector::from_fracs(&[(1, 1), (2, 1)]).unwrap();
        let b = RatVector::from_fracs(&[(1, 1)]).unwrap();
        assert_eq!(
            s.try_conv(&Prob::one(), &a, &b),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
        assert!(Simplex::new(3)
            .try_conv(&Prob::one(), &fd(&[(1, 1)]), &fd(&[(1, 1)]))
            .is_err());
    }

    #[test]
    fn dominance_examples() {
        let half = fd(&[(1, 2), (1, 2)]);
        let mass = fd(&[(1, 1), (0, 1)]);
        assert!(dominates(&half, &mass).unwrap());
        assert!(!dominates(&mass, &half).unwrap());
        assert!(dominates(&mass, &mass).unwrap());
        assert!(dominates(&half, &fd(&[(1, 1)])).is_err());
        assert_eq!(
            DominatedPair::new(half, mass).unwrap_err(),
            Error::NotDominated
        );
    }

    #[test]
    fn shipped_instances_satisfy_binary_laws() {
        let cfg = LawConfig::new(3, 200);
        assert!(check_binary_laws(&RatLine, |r| RatLine.sample_point(r), &cfg).all_hold());
        let v = RatVectorSpace::new(3);
        assert!(check_binary_laws(&v, |r| v.sample_point(r), &cfg).all_hold());
        let s = Simplex::new(3);
        assert!(check_binary_laws(&s, |r| s.sample_point(r), &cfg).all_hold());
        let dp = DominatedPairs::new(3);
        assert!(check_binary_laws(&dp, |r| dp.sample_point(r), &cfg).all_hold());
    }

    #[test]
    fn left_projection_breaks_only_skewed_commutativity() {
        let report = check_binary_laws(
            &LeftProjection,
            |r| RatLine.sample_point(r),
            &LawConfig::new(9, 300),
        );
        assert!(report.get(UNIT).unwrap().holds());
        assert!(report.get(IDEMPOTENCE).unwrap().holds());
        assert!(report.get(QUASI_ASSOCIATIVITY).unwrap().holds());
        let skew = report.get(SKEWED_COMMUTATIVITY).unwrap();
        let cx = skew.counterexample.as_ref().expect("counterexample");
        let x = &cx.inputs.iter().find(|(n, _)| n == "x").unwrap().1;
        let y = &cx.inputs.iter().find(|(n, _)| n == "y").unwrap().1;
        assert_ne!(x, y);
        assert_ne!(cx.lhs, cx.rhs);
    }

    // When s = 0 the inner weight r does not affect the right-hand side, so
    // replacing the 0 convention by any other value is undetectable.
    #[test]
    fn r_convention_is_irrelevant_when_s_vanishes() {
        let zero = Prob::zero();
        let mut rng = sample::law_rng(5, "r-convention");
        for _ in 0..100 {
            let [x, y, z] = [(); 3].map(|_| RatLine.sample_point(&mut rng));
            let r = sample::prob(&mut rng);
            let lhs = RatLine.conv(&zero, &x, &RatLine.conv(&zero, &y, &z));
            let rhs = RatLine.conv(&s_of(&zero, &zero), &RatLine.conv(&r, &x, &y), &z);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dominated_pair_mixtures_stay_dominated() {
        let dp = DominatedPairs::new(4);
        let mut rng = sample::law_rng(11, "dp-mix");
        for _ in 0..300 {
            let a = dp.sample_point(&mut rng);
            let b = dp.sample_point(&mut rng);
            let l = sample::prob(&mut rng);
            let m = a.mix(&l, &b).unwrap();
            assert!(dominates(m.q(), m.p()).unwrap());
        }
    }
}
