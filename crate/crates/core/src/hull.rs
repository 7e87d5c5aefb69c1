//! Convex sets and hulls, represented by explicit membership witnesses.

use alloc::vec::Vec;

use crate::dist::{check_arity, FiniteDist};
use crate::error::Result;
use crate::inputs;
use crate::rat::{Prob, Rat};
use crate::report::{LawConfig, LawOutcome};
use crate::sample::{self, LawRng};
use crate::space::ConvexSpace;

/// A point of the hull of `generators`: the combination `<|>_weights g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HullWitness<P> {
    weights: FiniteDist,
    generators: Vec<P>,
}

impl<P> HullWitness<P> {
    pub fn new(weights: FiniteDist, generators: Vec<P>) -> Result<Self> {
        check_arity(weights.arity(), generators.len())?;
        Ok(HullWitness {
            weights,
            generators,
        })
    }

    /// The witness `<|>_(1) x`.
    pub fn single(x: P) -> Self {
        HullWitness {
            weights: FiniteDist::point_mass(1, 0).expect("arity 1"),
            generators: alloc::vec![x],
        }
    }

    pub fn weights(&self) -> &FiniteDist {
        &self.weights
    }

    pub fn generators(&self) -> &[P] {
        &self.generators
    }
}

pub fn hull_eval<S: ConvexSpace + ?Sized>(
    space: &S,
    w: &HullWitness<S::Point>,
) -> Result<S::Point> {
    space.convn(&w.weights, &w.generators)
}

/// The witness of `eval(a) <p> eval(b)`: both generator lists concatenated,
/// weights scaled by `p` and `1 - p`.
pub fn hull_mix<P: Clone>(p: &Prob, a: &HullWitness<P>, b: &HullWitness<P>) -> HullWitness<P> {
    let q = p.complement();
    let weights = a
        .weights
        .weights()
        .iter()
        .map(|w| p.value() * w)
        .chain(b.weights.weights().iter().map(|w| q.value() * w))
        .collect();
    let generators = a.generators.iter().chain(&b.generators).cloned().collect();
    HullWitness {
        weights: FiniteDist::from_trusted(weights),
        generators,
    }
}

/// A decidable subset of a space together with a generator of its members.
pub struct ConvexSetSpec<'a, P> {
    pub name: &'a str,
    pub contains: &'a dyn Fn(&P) -> bool,
    pub sample_member: &'a dyn Fn(&mut LawRng) -> P,
}

/// Samples `p` and members `x, y`, and asserts `x <p> y` is a member.
pub fn check_convex_set<S: ConvexSpace + ?Sized>(
    space: &S,
    set: &ConvexSetSpec<'_, S::Point>,
    cfg: &LawConfig,
) -> LawOutcome {
    let mut out = LawOutcome::new(set.name);
    let mut rng = sample::law_rng(cfg.seed, set.name);
    for case in 0..cfg.cases {
        let p = sample::prob(&mut rng);
        let x = (set.sample_member)(&mut rng);
        let y = (set.sample_member)(&mut rng);
        let z = space.try_conv(&p, &x, &y);
        let ok = matches!(&z, Ok(z) if (set.contains)(z));
        out.record(case, ok, inputs!["p" => p, "x" => x, "y" => y], || {
            let shown = match &z {
                Ok(z) => alloc::format!("{z}"),
                Err(e) => alloc::format!("error: {e}"),
            };
            (shown, alloc::string::String::from("a member of the set"))
        });
    }
    out
}

/// The decomposition `z = x <p> y` of a point in the hull of `X u Y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HullSplit<P> {
    pub p: Prob,
    pub x: HullWitness<P>,
    pub y: HullWitness<P>,
}

/// Splits a hull witness of `z` by tagging each generator as belonging to X
/// (`true`) or to Y (`false`).
///
/// `p` is the total X-mass. The X witness keeps the X generators with
/// weights `d_i / p`; when `p = 0` it is the single point `default_x`. The Y
/// witness is built symmetrically from mass `1 - p` and `default_y`.
pub fn hull_union_split_tagged<P: Clone>(
    z: &HullWitness<P>,
    in_x: &[bool],
    default_x: &P,
    default_y: &P,
) -> Result<HullSplit<P>> {
    check_arity(z.generators.len(), in_x.len())?;
    let mass: Rat = z
        .weights
        .weights()
        .iter()
        .zip(in_x)
        .filter(|(_, &t)| t)
        .map(|(w, _)| w)
        .sum();
    let p = Prob::from_rat(mass).expect("partial sums of a distribution lie in [0, 1]");
    let block = |tag: bool, block_mass: &Prob, default: &P| -> HullWitness<P> {
        if block_mass.is_zero() {
            return HullWitness::single(default.clone());
        }
        let (weights, generators): (Vec<Rat>, Vec<P>) = z
            .weights
            .weights()
            .iter()
            .zip(&z.generators)
            .zip(in_x)
            .filter(|(_, &t)| t == tag)
            .map(|((w, g), _)| (w / block_mass.value(), g.clone()))
            .unzip();
        HullWitness {
            weights: FiniteDist::from_trusted(weights),
            generators,
        }
    };
    let x = block(true, &p, default_x);
    let y = block(false, &p.complement(), default_y);
    Ok(HullSplit { p, x, y })
}

/// [`hull_union_split_tagged`] with the tags read off a membership predicate
/// for X; generators outside X are taken to lie in Y.
pub fn hull_union_split<P: Clone>(
    z: &HullWitness<P>,
    in_x: impl Fn(&P) -> bool,
    default_x: &P,
    default_y: &P,
) -> Result<HullSplit<P>> {
    let tags: Vec<bool> = z.generators.iter().map(in_x).collect();
    hull_union_split_tagged(z, &tags, default_x, default_y)
}

pub const HULL_UNION: &str = "hull-union-split";

/// Random witnesses with random X/Y tagging; asserts `eval(z) = eval(x) <p>
/// eval(y)` and that each block is a distribution over its own generators.
/// Splits with an empty X or Y mass are counted as degenerate; one case in
/// five is forced to be all-X or all-Y.
pub fn check_hull_union<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut out = LawOutcome::new(HULL_UNION);
    let mut rng = sample::law_rng(cfg.seed, HULL_UNION);
    for case in 0..cfg.cases {
        let n = sample::arity(&mut rng, cfg.max_arity);
        let d = sample::dist(&mut rng, n);
        let g: Vec<S::Point> = (0..n).map(|_| sampler(&mut rng)).collect();
        let tags: Vec<bool> = if sample::coin(&mut rng, 5) {
            alloc::vec![sample::coin(&mut rng, 2); n]
        } else {
            (0..n).map(|_| sample::coin(&mut rng, 2)).collect()
        };
        let dx = sampler(&mut rng);
        let dy = sampler(&mut rng);
        let z = HullWitness::new(d, g).expect("arity matches");
        let split = hull_union_split_tagged(&z, &tags, &dx, &dy).expect("tags match");
        if split.p.is_zero() || split.p.is_one() {
            out.degenerate += 1;
        }
        let generators_ok = |w: &HullWitness<S::Point>, tag: bool, default: &S::Point| {
            w.generators.iter().all(|x| {
                z.generators
                    .iter()
                    .zip(&tags)
                    .any(|(g, &t)| t == tag && g == x)
            }) || w.generators == [default.clone()]
        };
        let shape_ok = generators_ok(&split.x, true, &dx) && generators_ok(&split.y, false, &dy);
        let lhs = hull_eval(space, &z);
        let rhs = hull_eval(space, &split.x)
            .and_then(|x| Ok((x, hull_eval(space, &split.y)?)))
            .and_then(|(x, y)| space.try_conv(&split.p, &x, &y));
        let ok = shape_ok && matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        let tag_str: alloc::string::String =
            tags.iter().map(|&t| if t { 'X' } else { 'Y' }).collect();
        out.record(
            case,
            ok,
            inputs!["d" => z.weights, "tags" => tag_str, "p" => split.p],
            || {
                let show = |r: &Result<S::Point>| match r {
                    Ok(v) => alloc::format!("{v}"),
                    Err(e) => alloc::format!("error: {e}"),
                };
                (show(&lhs), show(&rhs))
            },
        );
    }
    out
}
