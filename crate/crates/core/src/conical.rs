//! Scaled points: the conical space `S_X = (Q_{>0} x X) + {0}` built over a
//! convex space `X`, and the embedding `s1: x -> <1, x>`.
//!
//! Addition of two scaled points combines the carried points with weight
//! `r / (r + q)`; scaling multiplies the weight and collapses to `Zero` at
//! scale 0. Sums of scaled points are associative and commutative, so
//! multiary combinations can be manipulated as ordinary linear sums.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::dist::{check_arity, FiniteDist};
use crate::error::{Error, Result};
use crate::inputs;
use crate::rat::{Prob, Rat};
use crate::report::{LawConfig, LawOutcome, LawReport};
use crate::sample::{self, LawRng};
use crate::space::{entropic_lhs, entropic_rhs, ConvexSpace, RatLine, SampleSpace};

/// A strictly positive rational.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Rat);

impl Weight {
    pub fn new(w: Rat) -> Result<Self> {
        if w.is_positive() {
            Ok(Weight(w))
        } else {
            Err(Error::NonPositiveWeight {
                weight: w.to_string(),
            })
        }
    }

    pub fn one() -> Self {
        Weight(Rat::one())
    }

    pub fn get(&self) -> &Rat {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// An element of `S_X`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ScaledPoint<P> {
    Zero,
    Scaled(Weight, P),
}

impl<P> ScaledPoint<P> {
    pub fn scaled(weight: Rat, point: P) -> Result<Self> {
        Ok(ScaledPoint::Scaled(Weight::new(weight)?, point))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ScaledPoint::Zero)
    }
}

impl<P: fmt::Display> fmt::Display for ScaledPoint<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaledPoint::Zero => f.write_str("0"),
            ScaledPoint::Scaled(w, x) => write!(f, "{w} *: {x}"),
        }
    }
}

/// `x -> <1, x>`.
pub fn s1<P>(x: P) -> ScaledPoint<P> {
    ScaledPoint::Scaled(Weight::one(), x)
}

/// The total weight: 0 for `Zero`.
pub fn weight<P>(a: &ScaledPoint<P>) -> Rat {
    match a {
        ScaledPoint::Zero => Rat::zero(),
        ScaledPoint::Scaled(w, _) => w.get().clone(),
    }
}

/// The carried point of a nonzero scaled point.
pub fn point_of<P>(a: &ScaledPoint<P>) -> Result<&P> {
    match a {
        ScaledPoint::Zero => Err(Error::ZeroPoint),
        ScaledPoint::Scaled(_, x) => Ok(x),
    }
}

/// `<r, x> + <q, y> = <r + q, x <r/(r+q)> y>`, with `Zero` as unit.
pub fn addpt<S: ConvexSpace + ?Sized>(
    space: &S,
    a: &ScaledPoint<S::Point>,
    b: &ScaledPoint<S::Point>,
) -> ScaledPoint<S::Point> {
    match (a, b) {
        (ScaledPoint::Zero, _) => b.clone(),
        (_, ScaledPoint::Zero) => a.clone(),
        (ScaledPoint::Scaled(r, x), ScaledPoint::Scaled(q, y)) => {
            let total = r.get() + q.get();
            let p = Prob::from_rat(r.get() / &total).expect("r <= r + q");
            ScaledPoint::Scaled(Weight(total), space.conv(&p, x, y))
        }
    }
}

/// `c <q, x> = <c q, x>` for `c > 0`, `Zero` otherwise.
pub fn scalept<P: Clone>(c: &Rat, a: &ScaledPoint<P>) -> Result<ScaledPoint<P>> {
    if c.is_negative() {
        return Err(Error::NegativeScale {
            scale: c.to_string(),
        });
    }
    Ok(match a {
        ScaledPoint::Scaled(q, x) if c.is_positive() => {
            ScaledPoint::Scaled(Weight(c * q.get()), x.clone())
        }
        _ => ScaledPoint::Zero,
    })
}

fn scale_by<P: Clone>(p: &Prob, a: &ScaledPoint<P>) -> ScaledPoint<P> {
    scalept(p.value(), a).expect("probabilities are nonnegative")
}

/// Left fold of `addpt` from `Zero`.
pub fn scaled_sum<'a, S, I>(space: &S, terms: I) -> ScaledPoint<S::Point>
where
    S: ConvexSpace + ?Sized,
    S::Point: 'a,
    I: IntoIterator<Item = &'a ScaledPoint<S::Point>>,
{
    terms
        .into_iter()
        .fold(ScaledPoint::Zero, |acc, t| addpt(space, &acc, t))
}

/// `p a + (1 - p) b`, the convex structure of `S_X` itself.
pub fn convpt<S: ConvexSpace + ?Sized>(
    space: &S,
    p: &Prob,
    a: &ScaledPoint<S::Point>,
    b: &ScaledPoint<S::Point>,
) -> ScaledPoint<S::Point> {
    addpt(space, &scale_by(p, a), &scale_by(&p.complement(), b))
}

/// `sum_i d_i s1(x_i)`.
pub fn s1_sum<S: ConvexSpace + ?Sized>(
    space: &S,
    d: &FiniteDist,
    xs: &[S::Point],
) -> Result<ScaledPoint<S::Point>> {
    check_arity(d.arity(), xs.len())?;
    let terms: Vec<_> = d
        .weights()
        .iter()
        .zip(xs)
        .map(|(w, x)| scalept(w, &s1(x.clone())))
        .collect::<Result<_>>()?;
    Ok(scaled_sum(space, &terms))
}

/// `S_X` as a convex space under [`convpt`].
#[derive(Clone, Copy, Debug, Default)]
pub struct ScaledSpace<S>(pub S);

impl<S: ConvexSpace> ConvexSpace for ScaledSpace<S> {
    type Point = ScaledPoint<S::Point>;

    fn conv(&self, p: &Prob, a: &Self::Point, b: &Self::Point) -> Self::Point {
        convpt(&self.0, p, a, b)
    }

    fn validate(&self, a: &Self::Point) -> Result<()> {
        match a {
            ScaledPoint::Zero => Ok(()),
            ScaledPoint::Scaled(_, x) => self.0.validate(x),
        }
    }
}

impl<S: SampleSpace> SampleSpace for ScaledSpace<S> {
    fn sample_point(&self, rng: &mut LawRng) -> Self::Point {
        sample_scaled(rng, &|r| self.0.sample_point(r))
    }
}

/// `Zero` one time in six, otherwise a positive weight on a sampled point.
pub fn sample_scaled<P, F: Fn(&mut LawRng) -> P>(rng: &mut LawRng, sampler: &F) -> ScaledPoint<P> {
    if sample::coin(rng, 6) {
        ScaledPoint::Zero
    } else {
        ScaledPoint::Scaled(Weight(sample::positive(rng)), sampler(rng))
    }
}

/// `p *: y -> p y`, `Zero -> 0`, on scaled points of the rational line.
pub fn scale_r(a: &ScaledPoint<Rat>) -> Rat {
    match a {
        ScaledPoint::Zero => Rat::zero(),
        ScaledPoint::Scaled(p, y) => p.get() * y,
    }
}

/// The closed form `sum_i e_i g_i` of a multiary combination on the line.
pub fn avgn(e: &FiniteDist, g: &[Rat]) -> Result<Rat> {
    check_arity(e.arity(), g.len())?;
    Ok(e.weights().iter().zip(g).map(|(w, x)| w * x).sum())
}

pub const ADD_ASSOCIATIVITY: &str = "add-associativity";
pub const ADD_COMMUTATIVITY: &str = "add-commutativity";
pub const SCALE_ASSOCIATIVITY: &str = "scale-associativity";
pub const LEFT_DISTRIBUTIVITY: &str = "left-distributivity";
pub const RIGHT_DISTRIBUTIVITY: &str = "right-distributivity";
pub const ZERO_ADD: &str = "zero-add";
pub const LEFT_ZERO_SCALE: &str = "left-zero-scale";
pub const RIGHT_ZERO_SCALE: &str = "right-zero-scale";
pub const ONE_SCALE: &str = "one-scale";
pub const WEIGHT_ADDITIVE: &str = "weight-additive";
pub const WEIGHT_SCALING: &str = "weight-scaling";
pub const S1_CONV: &str = "s1-conv";
pub const S1_CONVN: &str = "s1-convn";
pub const ENTROPIC_CONICAL: &str = "entropic-conical";
pub const AVGN: &str = "avgn";
pub const SUM_ORDER: &str = "sum-order-independence";

/// The conical laws of `S_X` (addition associative and commutative with unit
/// `Zero`, scaling associative, both distributivities, zero and one laws),
/// plus the weight homomorphism and order-independence of `scaled_sum`.
pub fn check_conical_laws<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawReport
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let names = [
        ADD_ASSOCIATIVITY,
        ADD_COMMUTATIVITY,
        SCALE_ASSOCIATIVITY,
        LEFT_DISTRIBUTIVITY,
        RIGHT_DISTRIBUTIVITY,
        ZERO_ADD,
        LEFT_ZERO_SCALE,
        RIGHT_ZERO_SCALE,
        ONE_SCALE,
        WEIGHT_ADDITIVE,
        WEIGHT_SCALING,
        SUM_ORDER,
    ];
    let mut outs: Vec<LawOutcome> = names.iter().map(|n| LawOutcome::new(n)).collect();
    let mut rng = sample::law_rng(cfg.seed, "conical");
    let add = |a: &ScaledPoint<S::Point>, b: &ScaledPoint<S::Point>| addpt(space, a, b);
    let zero = Rat::zero();
    for case in 0..cfg.cases {
        let [x, y, z] = [(); 3].map(|_| sample_scaled(&mut rng, &sampler));
        let c = sample::scale(&mut rng);
        let d = sample::scale(&mut rng);
        let degenerate = x.is_zero() || y.is_zero() || z.is_zero() || c.is_zero() || d.is_zero();

        outs[0].check(
            case,
            Ok(add(&x, &add(&y, &z))),
            Ok(add(&add(&x, &y), &z)),
            inputs!["x" => x, "y" => y, "z" => z],
        );
        outs[1].check(
            case,
            Ok(add(&x, &y)),
            Ok(add(&y, &x)),
            inputs!["x" => x, "y" => y],
        );
        outs[2].check(
            case,
            scalept(&d, &x).and_then(|dx| scalept(&c, &dx)),
            scalept(&(&c * &d), &x),
            inputs!["c" => c, "d" => d, "x" => x],
        );
        outs[3].check(
            case,
            scalept(&(&c + &d), &x),
            scalept(&c, &x).and_then(|cx| Ok(add(&cx, &scalept(&d, &x)?))),
            inputs!["c" => c, "d" => d, "x" => x],
        );
        outs[4].check(
            case,
            scalept(&c, &add(&x, &y)),
            scalept(&c, &x).and_then(|cx| Ok(add(&cx, &scalept(&c, &y)?))),
            inputs!["c" => c, "x" => x, "y" => y],
        );
        outs[5].check(
            case,
            Ok(add(&ScaledPoint::Zero, &x)),
            Ok(x.clone()),
            inputs!["x" => x],
        );
        outs[6].check(
            case,
            scalept(&zero, &x),
            Ok(ScaledPoint::Zero),
            inputs!["x" => x],
        );
        outs[7].check(
            case,
            scalept(&c, &ScaledPoint::<S::Point>::Zero),
            Ok(ScaledPoint::Zero),
            inputs!["c" => c],
        );
        outs[8].check(
            case,
            scalept(&Rat::one(), &x),
            Ok(x.clone()),
            inputs!["x" => x],
        );
        outs[9].check(
            case,
            Ok(weight(&add(&x, &y))),
            Ok(weight(&x) + weight(&y)),
            inputs!["x" => x, "y" => y],
        );
        outs[10].check(
            case,
            scalept(&c, &x).map(|cx| weight(&cx)),
            Ok(&c * weight(&x)),
            inputs!["c" => c, "x" => x],
        );
        let n = sample::arity(&mut rng, cfg.max_arity);
        let terms: Vec<_> = (0..n).map(|_| sample_scaled(&mut rng, &sampler)).collect();
        let s = sample::permutation(&mut rng, n);
        let shuffled = s.apply(&terms);
        // Right fold: a different bracketing from the left fold.
        let right = terms
            .iter()
            .rev()
            .fold(ScaledPoint::Zero, |acc, t| add(t, &acc));
        outs[11].record(
            case,
            scaled_sum(space, &shuffled) == scaled_sum(space, &terms) && right == scaled_sum(space, &terms),
            inputs!["terms" => Terms(&terms), "perm" => Terms(&s.apply(&(0..n).collect::<Vec<_>>()))],
            || (scaled_sum(space, &shuffled).to_string(), scaled_sum(space, &terms).to_string()),
        );
        if degenerate {
            for o in &mut outs[..11] {
                o.degenerate += 1;
            }
        }
    }
    LawReport { outcomes: outs }
}

struct Terms<'a, T>(&'a [T]);

impl<T: fmt::Display> fmt::Display for Terms<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// `s1(x <p> y) = s1(x) <p> s1(y)` and `s1(convn(d, x)) = sum_i d_i s1(x_i)`.
pub fn check_s1_laws<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawReport
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut conv = LawOutcome::new(S1_CONV);
    let mut convn = LawOutcome::new(S1_CONVN);
    let mut rng = sample::law_rng(cfg.seed, S1_CONVN);
    for case in 0..cfg.cases {
        let p = sample::prob(&mut rng);
        let x = sampler(&mut rng);
        let y = sampler(&mut rng);
        conv.check(
            case,
            space.try_conv(&p, &x, &y).map(s1),
            Ok(convpt(space, &p, &s1(x.clone()), &s1(y.clone()))),
            inputs!["p" => p, "x" => x, "y" => y],
        );
        let n = sample::arity(&mut rng, cfg.max_arity);
        let d = sample::dist(&mut rng, n);
        let xs: Vec<_> = (0..n).map(|_| sampler(&mut rng)).collect();
        convn.check(
            case,
            space.convn(&d, &xs).map(s1),
            s1_sum(space, &d, &xs),
            inputs!["d" => d, "x" => Terms(&xs)],
        );
    }
    let mut report = LawReport::from(conv);
    report.push(convn);
    report
}

/// The entropic identity along the conical route: both sides embedded by
/// `s1` must equal the expanded conical sums, and those sums must agree.
pub fn check_entropic_conical<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut out = LawOutcome::new(ENTROPIC_CONICAL);
    let mut rng = sample::law_rng(cfg.seed, ENTROPIC_CONICAL);
    for case in 0..cfg.cases {
        let p = sample::prob(&mut rng);
        let q = sample::prob(&mut rng);
        let pts = [(); 4].map(|_| sampler(&mut rng));
        let [a, b, c, d] = pts.clone().map(s1);
        // p(q a + q' b) + p'(q c + q' d)
        let lhs_sum = convpt(
            space,
            &p,
            &convpt(space, &q, &a, &b),
            &convpt(space, &q, &c, &d),
        );
        // q(p a + p' c) + q'(p b + p' d)
        let rhs_sum = convpt(
            space,
            &q,
            &convpt(space, &p, &a, &c),
            &convpt(space, &p, &b, &d),
        );
        let refs = [&pts[0], &pts[1], &pts[2], &pts[3]];
        let lhs = entropic_lhs(space, &p, &q, refs).map(s1);
        let rhs = entropic_rhs(space, &p, &q, refs).map(s1);
        let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if *l == lhs_sum && *r == rhs_sum && lhs_sum == rhs_sum);
        out.record(
            case,
            ok,
            inputs!["p" => p, "q" => q, "a" => pts[0], "b" => pts[1], "c" => pts[2], "d" => pts[3]],
            || (lhs_sum.to_string(), rhs_sum.to_string()),
        );
    }
    out
}

/// On the rational line: `convn(e, g) = sum_i e_i g_i`, and the same value is
/// reached through `scale_r(sum_i e_i s1(g_i))`.
pub fn check_avgn(cfg: &LawConfig) -> LawOutcome {
    let mut out = LawOutcome::new(AVGN);
    let mut rng = sample::law_rng(cfg.seed, AVGN);
    for case in 0..cfg.cases {
        let n = sample::arity(&mut rng, cfg.max_arity);
        let e = sample::dist(&mut rng, n);
        let g: Vec<Rat> = (0..n).map(|_| RatLine.sample_point(&mut rng)).collect();
        let direct = RatLine.convn(&e, &g);
        let closed = avgn(&e, &g);
        let via_cone = s1_sum(&RatLine, &e, &g).map(|s| scale_r(&s));
        let ok = matches!((&direct, &closed, &via_cone), (Ok(a), Ok(b), Ok(c)) if a == b && b == c);
        out.record(case, ok, inputs!["e" => e, "g" => Terms(&g)], || {
            let show = |r: &Result<Rat>| {
                r.as_ref()
                    .map(Rat::to_string)
                    .unwrap_or_else(|e| e.to_string())
            };
            (show(&direct), show(&closed))
        });
    }
    out
}

/// Every conical check over a base space, in a fixed order.
pub fn check_conical_suite<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawReport
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut report = check_conical_laws(space, &sampler, cfg);
    report.extend(check_s1_laws(space, &sampler, cfg));
    report.push(check_entropic_conical(space, &sampler, cfg));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{check_binary_laws, RatVector, RatVectorSpace, Simplex};
    use alloc::vec;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    fn sp(w: Rat, x: Rat) -> ScaledPoint<Rat> {
        ScaledPoint::scaled(w, x).unwrap()
    }

    #[test]
    fn addpt_examples() {
        let a = sp(r(1, 2), r(3, 1));
        assert_eq!(addpt(&RatLine, &ScaledPoint::Zero, &a), a);
        assert_eq!(addpt(&RatLine, &a, &ScaledPoint::Zero), a);
        let x = r(5, 1);
        assert_eq!(
            addpt(&RatLine, &sp(r(1, 2), x.clone()), &sp(r(1, 2), x.clone())),
            s1(x)
        );
        let sum = addpt(&RatLine, &sp(r(1, 2), r(0, 1)), &sp(r(1, 4), r(2, 1)));
        assert_eq!(sum, sp(r(3, 4), r(2, 3)));
        assert_eq!(weight(&sum), r(3, 4));
    }

    #[test]
    fn scalept_examples() {
        let a = sp(r(1, 4), r(7, 1));
        assert_eq!(scalept(&Rat::zero(), &a).unwrap(), ScaledPoint::Zero);
        assert_eq!(scalept(&Rat::one(), &a).unwrap(), a);
        assert_eq!(scalept(&r(2, 1), &a).unwrap(), sp(r(1, 2), r(7, 1)));
        assert!(matches!(
            scalept(&r(-1, 1), &a),
            Err(Error::NegativeScale { .. })
        ));
    }

    #[test]
    fn weights_and_points() {
        assert!(ScaledPoint::scaled(Rat::zero(), r(1, 1)).is_err());
        assert_eq!(weight::<Rat>(&ScaledPoint::Zero), Rat::zero());
        assert_eq!(weight(&s1(r(9, 1))), Rat::one());
        assert_eq!(point_of(&s1(r(9, 1))).unwrap(), &r(9, 1));
        assert_eq!(point_of::<Rat>(&ScaledPoint::Zero), Err(Error::ZeroPoint));
        assert_eq!(
            point_of(&scalept(&r(2, 1), &s1(r(9, 1))).unwrap()).unwrap(),
            &r(9, 1)
        );
        assert_ne!(s1(r(1, 1)), s1(r(2, 1)));
    }

    #[test]
    fn scaled_sum_and_convpt() {
        assert_eq!(scaled_sum::<RatLine, _>(&RatLine, &[]), ScaledPoint::Zero);
        assert_eq!(scaled_sum(&RatLine, &[s1(r(4, 1))]), s1(r(4, 1)));
        let (a, b) = (sp(r(2, 1), r(1, 1)), sp(r(1, 3), r(-1, 1)));
        assert_eq!(convpt(&RatLine, &Prob::one(), &a, &b), a);
        assert_eq!(
            convpt::<RatLine>(
                &RatLine,
                &Prob::new(1, 3).unwrap(),
                &ScaledPoint::Zero,
                &ScaledPoint::Zero
            ),
            ScaledPoint::Zero
        );
    }

    #[test]
    fn weighted_sum_in_the_plane() {
        let space = RatVectorSpace::new(2);
        let x = RatVector::from_fracs(&[(0, 1), (0, 1)]).unwrap();
        let y = RatVector::from_fracs(&[(4, 1), (0, 1)]).unwrap();
        let z = RatVector::from_fracs(&[(0, 1), (4, 1)]).unwrap();
        let d = FiniteDist::from_fracs(&[(1, 2), (1, 4), (1, 4)]).unwrap();
        let xs = vec![x, y, z];
        let w = space.convn(&d, &xs).unwrap();
        assert_eq!(w, RatVector::from_fracs(&[(1, 1), (1, 1)]).unwrap());
        assert_eq!(s1(w), s1_sum(&space, &d, &xs).unwrap());
    }

    #[test]
    fn scale_r_examples() {
        assert_eq!(scale_r(&ScaledPoint::Zero), Rat::zero());
        assert_eq!(scale_r(&sp(r(1, 2), r(4, 1))), r(2, 1));
        assert_eq!(scale_r(&s1(r(7, 3))), r(7, 3));
        let a = sp(r(1, 3), r(2, 1));
        let b = sp(r(5, 2), r(-1, 7));
        assert_eq!(scale_r(&addpt(&RatLine, &a, &b)), scale_r(&a) + scale_r(&b));
    }

    #[test]
    fn avgn_examples() {
        let g: Vec<Rat> = [0, 1, 2].iter().map(|&x| Rat::from_int(x)).collect();
        assert_eq!(
            avgn(
                &FiniteDist::from_fracs(&[(1, 2), (1, 4), (1, 4)]).unwrap(),
                &g
            )
            .unwrap(),
            r(3, 4)
        );
        assert_eq!(
            avgn(&FiniteDist::point_mass(3, 2).unwrap(), &g).unwrap(),
            r(2, 1)
        );
        assert_eq!(
            avgn(
                &FiniteDist::uniform(3).unwrap(),
                &[r(5, 2), r(5, 2), r(5, 2)]
            )
            .unwrap(),
            r(5, 2)
        );
        assert!(avgn(&FiniteDist::uniform(2).unwrap(), &g).is_err());
    }

    #[test]
    fn suites_hold() {
        let cfg = LawConfig::new(8, 150);
        let report = check_conical_suite(&RatLine, |r| RatLine.sample_point(r), &cfg);
        assert!(report.all_hold(), "{report}");
        let s = Simplex::new(3);
        assert!(check_conical_suite(&s, |r| s.sample_point(r), &cfg).all_hold());
        assert!(check_avgn(&cfg).holds());
        let scaled = ScaledSpace(RatLine);
        assert!(check_binary_laws(&scaled, |r| scaled.sample_point(r), &cfg).all_hold());
    }
}
