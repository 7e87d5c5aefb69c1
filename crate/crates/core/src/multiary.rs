//! The multiary convex operator and the laws of its axiomatizations.
//!
//! `convn_recursive` derives `<|>_d x` from the binary operator; the checkers
//! below test the standard laws (projection, barycenter), the partition and
//! idempotence laws, the derived map laws, permutation invariance and the
//! round trips between the binary and multiary presentations.

use alloc::vec::Vec;

use crate::dist::{
    check_arity, mix_rows, partition_inner, pushforward, rho_dist, FiniteDist, StochasticMatrix,
};
use crate::error::Result;
use crate::inputs;
use crate::rat::Prob;
use crate::report::{LawConfig, LawOutcome, LawReport};
use crate::sample::{self, LawRng};
use crate::space::ConvexSpace;

pub const PROJECTION: &str = "projection";
pub const BARYCENTER: &str = "barycenter";
pub const PARTITION: &str = "partition";
pub const MULTIARY_IDEMPOTENCE: &str = "multiary-idempotence";
pub const MAP: &str = "map";
pub const INJECTIVE_MAP: &str = "injective-map";
pub const PARTITION_BARYCENTER: &str = "partition-barycenter";
pub const PERMUTATION: &str = "permutation";
pub const BINCONV_ROUNDTRIP: &str = "binconv-roundtrip";
pub const CONVN_ROUNDTRIP: &str = "convn-roundtrip";

/// `x_0` if `d_0 = 1` or `n = 1`, otherwise `x_0 <d_0> (<|>_{d'} x_{1..})`
/// with `d'_i = d_{i+1} / (1 - d_0)`.
pub fn convn_recursive<S: ConvexSpace + ?Sized>(
    space: &S,
    d: &FiniteDist,
    xs: &[S::Point],
) -> Result<S::Point> {
    for x in xs {
        space.validate(x)?;
    }
    convn_recursive_with(d, xs, &|p, x, y| Ok(space.conv(p, x, y)))
}

/// The same recursion over an arbitrary, possibly failing, binary step.
pub fn convn_recursive_with<P, F>(d: &FiniteDist, xs: &[P], step: &F) -> Result<P>
where
    P: Clone,
    F: Fn(&Prob, &P, &P) -> Result<P>,
{
    check_arity(d.arity(), xs.len())?;
    if d.weight(0).is_one() || d.arity() == 1 {
        return Ok(xs[0].clone());
    }
    let rest = convn_recursive_with(&d.tail()?, &xs[1..], step)?;
    step(&d.prob(0), &xs[0], &rest)
}

/// `x0 <p> x1` read off the multiary operator at `(p, 1 - p)`.
pub fn binconv_from_convn<S: ConvexSpace + ?Sized>(
    space: &S,
    p: &Prob,
    x0: &S::Point,
    x1: &S::Point,
) -> Result<S::Point> {
    space.convn(&FiniteDist::binary(p), &[x0.clone(), x1.clone()])
}

/// The binary space induced by a multiary operator, whose own multiary
/// operator is re-derived by recursion.
#[derive(Clone, Copy, Debug)]
pub struct BinaryFromMultiary<S>(pub S);

impl<S: ConvexSpace> ConvexSpace for BinaryFromMultiary<S> {
    type Point = S::Point;

    fn conv(&self, p: &Prob, x: &S::Point, y: &S::Point) -> S::Point {
        binconv_from_convn(&self.0, p, x, y).expect("underlying multiary operator is total")
    }

    fn validate(&self, x: &S::Point) -> Result<()> {
        self.0.validate(x)
    }

    fn convn(&self, d: &FiniteDist, xs: &[S::Point]) -> Result<S::Point> {
        for x in xs {
            self.0.validate(x)?;
        }
        convn_recursive_with(d, xs, &|p, x, y| binconv_from_convn(&self.0, p, x, y))
    }
}

fn points<S, F>(rng: &mut LawRng, sampler: &F, n: usize) -> Vec<S::Point>
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    (0..n).map(|_| sampler(rng)).collect()
}

fn list<T: core::fmt::Display>(xs: &[T]) -> alloc::string::String {
    use core::fmt::Write;
    let mut s = alloc::string::String::from("[");
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{x}");
    }
    s.push(']');
    s
}

fn matrix(e: &StochasticMatrix) -> alloc::string::String {
    list(e.rows())
}

/// `convn(d, i -> convn(e_i, x))`.
fn nested<S: ConvexSpace + ?Sized>(
    space: &S,
    d: &FiniteDist,
    e: &StochasticMatrix,
    xs: &[S::Point],
) -> Result<S::Point> {
    let inner = e
        .rows()
        .iter()
        .map(|row| space.convn(row, xs))
        .collect::<Result<Vec<_>>>()?;
    space.convn(d, &inner)
}

/// Point mass `d` at `j`: `convn(d, x) = x_j`.
pub fn check_projection_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut out = LawOutcome::new(PROJECTION);
    let mut rng = sample::law_rng(cfg.seed, PROJECTION);
    for case in 0..cfg.cases {
        let n = sample::arity(&mut rng, cfg.max_arity);
        let j = sample::index(&mut rng, n);
        let d = FiniteDist::point_mass(n, j).expect("j < n");
        let xs = points::<S, F>(&mut rng, &sampler, n);
        out.check(
            case,
            space.convn(&d, &xs),
            Ok(xs[j].clone()),
            inputs!["j" => j, "x" => list(&xs)],
        );
    }
    out
}

fn check_barycenter_with<S, F, M>(
    name: &str,
    space: &S,
    sampler: F,
    cfg: &LawConfig,
    matrix_of: M,
) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
    M: Fn(&mut LawRng, usize, usize) -> StochasticMatrix,
{
    let mut out = LawOutcome::new(name);
    let mut rng = sample::law_rng(cfg.seed, name);
    for case in 0..cfg.cases {
        let n = sample::arity(&mut rng, cfg.max_arity);
        let m = sample::arity(&mut rng, cfg.max_arity);
        let (n, m) = if name == PARTITION_BARYCENTER {
            (n.min(m), n.max(m))
        } else {
            (n, m)
        };
        let d = sample::dist(&mut rng, n);
        let e = matrix_of(&mut rng, n, m);
        let xs = points::<S, F>(&mut rng, &sampler, m);
        let rhs = mix_rows(&d, &e).and_then(|w| space.convn(&w, &xs));
        out.check(
            case,
            nested(space, &d, &e, &xs),
            rhs,
            inputs!["d" => d, "e" => matrix(&e), "x" => list(&xs)],
        );
    }
    out
}

/// `convn(d, i -> convn(e_i, x)) = convn(sum_i d_i e_i, x)`.
pub fn check_barycenter_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    check_barycenter_with(BARYCENTER, space, sampler, cfg, |rng, n, m| {
        if n == m && sample::coin(rng, 8) {
            StochasticMatrix::identity(n).expect("n >= 1")
        } else {
            sample::stochastic_matrix(rng, n, m)
        }
    })
}

/// The barycenter law restricted to matrices whose rows have pairwise
/// disjoint supports.
pub fn check_partition_barycenter_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    check_barycenter_with(
        PARTITION_BARYCENTER,
        space,
        sampler,
        cfg,
        sample::disjoint_matrix,
    )
}

/// `convn(lam, x) = convn(rho, j -> convn(inner_j, x))` for a partition map
/// `K`, including blocks of zero mass. Cases with an empty block are counted
/// as degenerate.
pub fn check_partition_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut out = LawOutcome::new(PARTITION);
    let mut rng = sample::law_rng(cfg.seed, PARTITION);
    for case in 0..cfg.cases {
        let n = sample::arity(&mut rng, cfg.max_arity);
        let m = sample::arity(&mut rng, cfg.max_arity);
        let lam = sample::dist(&mut rng, n);
        // One case in three gets an extra block that K never hits.
        let k = if sample::coin(&mut rng, 3) {
            let table = sample::index_map(&mut rng, n, m).table().to_vec();
            crate::dist::IndexMap::new(table, m + 1).expect("values below m")
        } else {
            sample::index_map(&mut rng, n, m)
        };
        let xs = points::<S, F>(&mut rng, &sampler, n);
        let rho = rho_dist(&lam, &k);
        if let Ok(rho) = &rho {
            if rho.weights().iter().any(|w| w.is_zero()) {
                out.degenerate += 1;
            }
        }
        let rhs = rho.and_then(|rho| {
            let inner = (0..k.target())
                .map(|j| partition_inner(j, &lam, &k).and_then(|w| space.convn(&w, &xs)))
                .collect::<Result<Vec<_>>>()?;
            space.convn(&rho, &inner)
        });
        out.check(
            case,
            space.convn(&lam, &xs),
            rhs,
            inputs!["lambda" => lam, "K" => list(k.table()), "x" => list(&xs)],
        );
    }
    out
}

/// `convn(lam, x) = A` whenever `x_i = A` on the support of `lam`.
pub fn check_idem_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut out = LawOutcome::new(MULTIARY_IDEMPOTENCE);
    let mut rng = sample::law_rng(cfg.seed, MULTIARY_IDEMPOTENCE);
    for case in 0..cfg.cases {
        let n = sample::arity(&mut rng, cfg.max_arity);
        let lam = sample::dist(&mut rng, n);
        let a = sampler(&mut rng);
        let xs: Vec<S::Point> = lam
            .weights()
            .iter()
            .map(|w| {
                if w.is_positive() {
                    a.clone()
                } else {
                    sampler(&mut rng)
                }
            })
            .collect();
        if lam.support().count() < n {
            out.degenerate += 1;
        }
        out.check(
            case,
            space.convn(&lam, &xs),
            Ok(a.clone()),
            inputs!["lambda" => lam, "A" => a, "x" => list(&xs)],
        );
    }
    out
}

fn check_map_with<S, F>(
    name: &str,
    injective: bool,
    space: &S,
    sampler: F,
    cfg: &LawConfig,
) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut out = LawOutcome::new(name);
    let mut rng = sample::law_rng(cfg.seed, name);
    for case in 0..cfg.cases {
        let a = sample::arity(&mut rng, cfg.max_arity);
        let b = sample::arity(&mut rng, cfg.max_arity);
        let u = if injective {
            sample::injection(&mut rng, a.min(b), a.max(b))
        } else {
            sample::index_map(&mut rng, a, b)
        };
        let d = sample::dist(&mut rng, u.source());
        let g = points::<S, F>(&mut rng, &sampler, u.target());
        let pulled: Vec<S::Point> = u.table().iter().map(|&j| g[j].clone()).collect();
        let rhs = pushforward(&d, &u).and_then(|w| space.convn(&w, &g));
        out.check(
            case,
            space.convn(&d, &pulled),
            rhs,
            inputs!["d" => d, "u" => list(u.table()), "g" => list(&g)],
        );
    }
    out
}

/// `convn(d, i -> g_{u(i)}) = convn(u_* d, g)` for any map `u`.
pub fn check_map_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    check_map_with(MAP, false, space, sampler, cfg)
}

/// The map law restricted to injective `u`.
pub fn check_inj_map_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    check_map_with(INJECTIVE_MAP, true, space, sampler, cfg)
}

/// `convn(d o s, x o s) = convn(d, x)` for permutations `s`.
pub fn check_perm_law<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawOutcome
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut out = LawOutcome::new(PERMUTATION);
    let mut rng = sample::law_rng(cfg.seed, PERMUTATION);
    for case in 0..cfg.cases {
        let n = sample::arity(&mut rng, cfg.max_arity);
        let s = sample::permutation(&mut rng, n);
        let d = sample::dist(&mut rng, n);
        let xs = points::<S, F>(&mut rng, &sampler, n);
        let lhs = d.permute(&s).and_then(|ds| space.convn(&ds, &s.apply(&xs)));
        out.check(
            case,
            lhs,
            space.convn(&d, &xs),
            inputs!["d" => d, "s" => list(&(0..n).map(|i| s.get(i)).collect::<Vec<_>>()), "x" => list(&xs)],
        );
    }
    out
}

/// Both round trips between the presentations: the binary operator read
/// off `convn` agrees with `conv`, and the multiary operator re-derived from
/// that binary operator agrees with `convn`.
pub fn check_roundtrips<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawReport
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut bin = LawOutcome::new(BINCONV_ROUNDTRIP);
    let mut nary = LawOutcome::new(CONVN_ROUNDTRIP);
    let rederived = BinaryFromMultiary(space);
    let mut rng = sample::law_rng(cfg.seed, "roundtrips");
    for case in 0..cfg.cases {
        let p = sample::prob(&mut rng);
        let a = sampler(&mut rng);
        let b = sampler(&mut rng);
        bin.check(
            case,
            binconv_from_convn(space, &p, &a, &b),
            space.try_conv(&p, &a, &b),
            inputs!["p" => p, "a" => a, "b" => b],
        );
        let n = sample::arity(&mut rng, cfg.max_arity);
        let d = sample::dist(&mut rng, n);
        let xs = points::<S, F>(&mut rng, &sampler, n);
        nary.check(
            case,
            rederived.convn(&d, &xs),
            space.convn(&d, &xs),
            inputs!["d" => d, "x" => list(&xs)],
        );
    }
    let mut report = LawReport::from(bin);
    report.push(nary);
    report
}

/// Every multiary law, in a fixed order.
pub fn check_multiary_laws<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawReport
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut report = LawReport::new();
    report.push(check_projection_law(space, &sampler, cfg));
    report.push(check_barycenter_law(space, &sampler, cfg));
    report.push(check_partition_law(space, &sampler, cfg));
    report.push(check_idem_law(space, &sampler, cfg));
    report.push(check_partition_barycenter_law(space, &sampler, cfg));
    report.push(check_inj_map_law(space, &sampler, cfg));
    report.push(check_map_law(space, &sampler, cfg));
    report.push(check_perm_law(space, &sampler, cfg));
    report.extend(check_roundtrips(space, &sampler, cfg));
    report
}
