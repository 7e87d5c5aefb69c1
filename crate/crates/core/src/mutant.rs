//! Deliberately broken instances. The law checkers must reject them with a
//! concrete counterexample.

use crate::dist::FiniteDist;
use crate::error::{Error, Result};
use crate::rat::{Prob, Rat};
use crate::sample::LawRng;
use crate::space::{ConvexSpace, SampleSpace};

/// The rational line with `x <p> y = x`: unit, idempotence and
/// quasi-associativity survive, skewed commutativity does not.
#[derive(Clone, Copy, Debug, Default)]
pub struct LeftProjection;

impl ConvexSpace for LeftProjection {
    type Point = Rat;

    fn conv(&self, _p: &Prob, x: &Rat, _y: &Rat) -> Rat {
        x.clone()
    }
}

impl SampleSpace for LeftProjection {
    fn sample_point(&self, rng: &mut LawRng) -> Rat {
        crate::sample::rat(rng)
    }
}

/// Wraps a space, replacing its multiary operator by the recursion without
/// the `d_0 = 1` shortcut, so a point mass at 0 divides by `1 - d_0 = 0`.
#[derive(Clone, Copy, Debug, Default)]
pub struct UnguardedConvn<S>(pub S);

impl<S: ConvexSpace> ConvexSpace for UnguardedConvn<S> {
    type Point = S::Point;

    fn conv(&self, p: &Prob, x: &S::Point, y: &S::Point) -> S::Point {
        self.0.conv(p, x, y)
    }

    fn validate(&self, x: &S::Point) -> Result<()> {
        self.0.validate(x)
    }

    fn convn(&self, d: &FiniteDist, xs: &[S::Point]) -> Result<S::Point> {
        if d.arity() != xs.len() {
            return Err(Error::ArityMismatch {
                expected: d.arity(),
                found: xs.len(),
            });
        }
        if d.arity() == 1 {
            return Ok(xs[0].clone());
        }
        let rest = self.convn(&d.tail()?, &xs[1..])?;
        Ok(self.0.conv(&d.prob(0), &xs[0], &rest))
    }
}

impl<S: SampleSpace> SampleSpace for UnguardedConvn<S> {
    fn sample_point(&self, rng: &mut LawRng) -> S::Point {
        self.0.sample_point(rng)
    }
}
