//! Convex and concave functions into the ordered reals, checked numerically,
//! and the divergence of dominated pairs.
//!
//! Everything here is floating point. Comparisons use an additive slack
//! (default `1e-9`). Logarithms are base 2 unless a [`LogBase`] says
//! otherwise; the extended logarithm is 0 on `x <= 0`.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;

use rand::Rng;

use crate::dist::FiniteDist;
use crate::error::{Error, Result};
use crate::inputs;
use crate::rat::Prob;
use crate::report::{LawConfig, LawOutcome};
use crate::sample::{self, LawRng};
use crate::space::{dominates, ConvexSpace, DominatedPairs, SampleSpace};

/// A real with its usual total order, the codomain of convex functions.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct OrderedReal(pub f64);

impl OrderedReal {
    /// `p x + (1 - p) y`.
    pub fn conv(p: f64, x: OrderedReal, y: OrderedReal) -> OrderedReal {
        OrderedReal(p * x.0 + (1.0 - p) * y.0)
    }
}

impl fmt::Display for OrderedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", real(self.0))
    }
}

/// Renders a real with 17 significant digits.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LogBase {
    #[default]
    Two,
    E,
}

/// `log(x)` for `x > 0`, 0 otherwise.
pub fn log_ext_in(base: LogBase, x: f64) -> f64 {
    if x > 0.0 {
        match base {
            LogBase::Two => libm::log2(x),
            LogBase::E => libm::log(x),
        }
    } else {
        0.0
    }
}

/// The extended binary logarithm.
pub fn log_ext(x: f64) -> f64 {
    log_ext_in(LogBase::Two, x)
}

/// The built-in catalog of total real functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealFn {
    LogExt,
    LnExt,
    NegLogExt,
    Square,
    Abs,
    /// `x log2 x` on `x > 0`, 0 otherwise.
    XLogX,
    Sin,
    /// `2x + 1`.
    Linear,
    Exp,
}

impl RealFn {
    pub const ALL: [RealFn; 9] = [
        RealFn::LogExt,
        RealFn::LnExt,
        RealFn::NegLogExt,
        RealFn::Square,
        RealFn::Abs,
        RealFn::XLogX,
        RealFn::Sin,
        RealFn::Linear,
        RealFn::Exp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RealFn::LogExt => "log_ext",
            RealFn::LnExt => "ln_ext",
            RealFn::NegLogExt => "neg_log_ext",
            RealFn::Square => "square",
            RealFn::Abs => "abs",
            RealFn::XLogX => "xlogx",
            RealFn::Sin => "sin",
            RealFn::Linear => "linear",
            RealFn::Exp => "exp",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        RealFn::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFunction(name.to_string()))
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            RealFn::LogExt => log_ext(x),
            RealFn::LnExt => log_ext_in(LogBase::E, x),
            RealFn::NegLogExt => -log_ext(x),
            RealFn::Square => x * x,
            RealFn::Abs => libm::fabs(x),
            RealFn::XLogX => x * log_ext(x),
            RealFn::Sin => libm::sin(x),
            RealFn::Linear => 2.0 * x + 1.0,
            RealFn::Exp => libm::exp(x),
        }
    }

    /// A sensible default domain for command-line use.
    pub fn default_domain(self) -> Domain {
        match self {
            RealFn::LogExt | RealFn::LnExt | RealFn::NegLogExt => {
                Domain::log(libm::exp2(-20.0), libm::exp2(20.0))
            }
            RealFn::XLogX => Domain::log(libm::exp2(-20.0), 1024.0),
            RealFn::Sin => Domain::linear(0.0, 2.0 * core::f64::consts::PI),
            _ => Domain::linear(-10.0, 10.0),
        }
    }
}

/// Additive slack for floating-point comparisons.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    slack: f64,
}

impl Tolerance {
    pub fn new(slack: f64) -> Result<Self> {
        if slack >= 0.0 {
            Ok(Tolerance { slack })
        } else {
            Err(Error::Parse {
                input: real(slack),
                reason: "slack must be nonnegative".to_string(),
            })
        }
    }

    pub fn slack(&self) -> f64 {
        self.slack
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { slack: 1e-9 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Convex,
    Concave,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Convex => "convex",
            Mode::Concave => "concave",
        }
    }
}

/// `f(p x + (1-p) y) <= p f(x) + (1-p) f(y) + slack`.
pub fn convex_at(f: impl Fn(f64) -> f64, p: f64, x: f64, y: f64, tol: &Tolerance) -> bool {
    let lhs = f(p * x + (1.0 - p) * y);
    let rhs = p * f(x) + (1.0 - p) * f(y);
    lhs <= rhs + tol.slack
}

/// Convexity for the reversed order.
pub fn concave_at(f: impl Fn(f64) -> f64, p: f64, x: f64, y: f64, tol: &Tolerance) -> bool {
    let lhs = f(p * x + (1.0 - p) * y);
    let rhs = p * f(x) + (1.0 - p) * f(y);
    lhs >= rhs - tol.slack
}

pub fn holds_at(
    mode: Mode,
    f: impl Fn(f64) -> f64,
    p: f64,
    x: f64,
    y: f64,
    tol: &Tolerance,
) -> bool {
    match mode {
        Mode::Convex => convex_at(f, p, x, y, tol),
        Mode::Concave => concave_at(f, p, x, y, tol),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// An open interval `(lo, hi)`, sampled uniformly or log-uniformly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
    pub spacing: Spacing,
}

impl Domain {
    pub fn linear(lo: f64, hi: f64) -> Self {
        Domain {
            lo,
            hi,
            spacing: Spacing::Linear,
        }
    }

    pub fn log(lo: f64, hi: f64) -> Self {
        Domain {
            lo,
            hi,
            spacing: Spacing::Log,
        }
    }

    /// Log spacing for positive intervals spanning more than three decades.
    pub fn auto(lo: f64, hi: f64) -> Self {
        if lo > 0.0 && hi / lo > 1e3 {
            Domain::log(lo, hi)
        } else {
            Domain::linear(lo, hi)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = self.lo.is_finite() && self.hi.is_finite();
        if !finite || self.hi - self.lo <= 0.0 || (self.spacing == Spacing::Log && self.lo <= 0.0) {
            return Err(Error::DegenerateInterval {
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(())
    }

    /// Maps `t` in `[0, 1]` into the interval.
    fn at(&self, t: f64) -> f64 {
        match self.spacing {
            Spacing::Linear => self.lo + t * (self.hi - self.lo),
            Spacing::Log => {
                let (a, b) = (libm::log(self.lo), libm::log(self.hi));
                libm::exp(a + t * (b - a))
            }
        }
    }

    fn sample(&self, rng: &mut LawRng) -> f64 {
        loop {
            let x = self.at(rng.random::<f64>());
            if x > self.lo && x < self.hi {
                return x;
            }
        }
    }

    /// `n` interior grid points.
    pub fn grid(&self, n: usize) -> impl Iterator<Item = f64> + '_ {
        (0..n).map(move |i| self.at((i + 1) as f64 / (n + 1) as f64))
    }
}

fn sample_weight(rng: &mut LawRng) -> f64 {
    match rng.random_range(0..10) {
        0 => 0.0,
        1 => 1.0,
        2 => 0.5,
        _ => rng.random::<f64>(),
    }
}

pub const CONVEX_IN: &str = "convex-in";
pub const SECOND_DERIVATIVE: &str = "second-derivative";
pub const DIV_NONNEGATIVE: &str = "div-nonnegative";
pub const DIV_CONVEXITY: &str = "div-convexity";
pub const ORDER_LAWS: &str = "order-laws";

/// Samples `(p, x, y)` with `x, y` in the domain and reports the first
/// violation of convexity (or concavity) beyond the slack.
pub fn check_convex_in(
    f: impl Fn(f64) -> f64,
    domain: &Domain,
    mode: Mode,
    cfg: &LawConfig,
    tol: &Tolerance,
) -> Result<LawOutcome> {
    domain.validate()?;
    let mut out = LawOutcome::new(CONVEX_IN);
    let mut rng = sample::law_rng(cfg.seed, CONVEX_IN);
    for case in 0..cfg.cases {
        let p = sample_weight(&mut rng);
        let x = domain.sample(&mut rng);
        let y = domain.sample(&mut rng);
        let ok = holds_at(mode, &f, p, x, y, tol);
        out.record(
            case,
            ok,
            inputs!["mode" => mode.name(), "p" => real(p), "x" => real(x), "y" => real(y)],
            || {
                (
                    real(f(p * x + (1.0 - p) * y)),
                    real(p * f(x) + (1.0 - p) * f(y)),
                )
            },
        );
    }
    Ok(out)
}

/// Central second differences on an interior grid. A grid point violates
/// convexity when the difference is below `-slack` by more than the rounding
/// noise of the stencil (concavity symmetrically). This is numerical
/// evidence, not a proof.
pub fn second_derivative_test(
    f: impl Fn(f64) -> f64,
    domain: &Domain,
    grid_points: usize,
    mode: Mode,
    tol: &Tolerance,
) -> Result<LawOutcome> {
    domain.validate()?;
    if grid_points < 3 {
        return Err(Error::Parse {
            input: grid_points.to_string(),
            reason: "at least 3 grid points are required".to_string(),
        });
    }
    let mut out = LawOutcome::new(SECOND_DERIVATIVE);
    for (case, x) in domain.grid(grid_points).enumerate() {
        let (d2, noise) = second_difference(&f, x, domain);
        let ok = match mode {
            Mode::Convex => d2 >= -tol.slack - noise,
            Mode::Concave => d2 <= tol.slack + noise,
        };
        out.record(
            case,
            ok,
            inputs!["mode" => mode.name(), "x" => real(x)],
            || {
                (
                    real(d2),
                    format!(
                        "{}0 (noise {})",
                        if mode == Mode::Convex { ">= " } else { "<= " },
                        real(noise)
                    ),
                )
            },
        );
    }
    Ok(out)
}

/// The central second difference at `x` and a bound on its rounding error.
pub fn second_difference(f: impl Fn(f64) -> f64, x: f64, domain: &Domain) -> (f64, f64) {
    let scale = if x == 0.0 {
        1e-3 * (domain.hi - domain.lo)
    } else {
        libm::fabs(x)
    };
    let h = (1e-3 * scale)
        .min(0.5 * (x - domain.lo))
        .min(0.5 * (domain.hi - x));
    let (a, b, c) = (f(x - h), f(x), f(x + h));
    let d2 = (a - 2.0 * b + c) / (h * h);
    let noise =
        4.0 * f64::EPSILON * (libm::fabs(a) + 2.0 * libm::fabs(b) + libm::fabs(c)) / (h * h);
    (d2, noise)
}

/// `D(P || Q) = sum_a P(a) log(P(a) / Q(a))`, terms with `P(a) = 0` dropped.
pub fn div_in(base: LogBase, p: &FiniteDist, q: &FiniteDist) -> Result<f64> {
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch {
            expected: p.arity(),
            found: q.arity(),
        });
    }
    if !dominates(q, p)? {
        return Err(Error::NotDominated);
    }
    Ok(p.weights()
        .iter()
        .zip(q.weights())
        .filter(|(pa, _)| !pa.is_zero())
        .map(|(pa, qa)| {
            let pa = pa.to_f64();
            pa * log_ext_in(base, pa / qa.to_f64())
        })
        .sum())
}

/// Divergence in bits.
pub fn div(p: &FiniteDist, q: &FiniteDist) -> Result<f64> {
    div_in(LogBase::Two, p, q)
}

/// Samples a dominated pair; one in three has a full-support `Q`.
fn sample_pair(space: &DominatedPairs, rng: &mut LawRng) -> crate::space::DominatedPair {
    if sample::coin(rng, 3) {
        let q = sample::full_support_dist(rng, space.alphabet);
        let p = sample::dist(rng, space.alphabet);
        crate::space::DominatedPair::new(p, q).expect("full support dominates everything")
    } else {
        space.sample_point(rng)
    }
}

/// `D(P || Q) >= -slack` on sampled dominated pairs.
pub fn check_div_nonneg(cfg: &LawConfig, alphabet_size: usize, tol: &Tolerance) -> LawOutcome {
    let space = DominatedPairs::new(alphabet_size);
    let mut out = LawOutcome::new(DIV_NONNEGATIVE);
    let mut rng = sample::law_rng(cfg.seed, DIV_NONNEGATIVE);
    for case in 0..cfg.cases {
        let pair = sample_pair(&space, &mut rng);
        let d = div(pair.p(), pair.q());
        let ok = matches!(d, Ok(v) if v >= -tol.slack);
        out.record(case, ok, inputs!["pair" => pair], || {
            (
                d.map(real).unwrap_or_else(|e| e.to_string()),
                format!(">= -{}", real(tol.slack)),
            )
        });
    }
    out
}

/// Convexity of the divergence over the convex space of dominated pairs:
/// `D(l P1 + l' P2 || l Q1 + l' Q2) <= l D(P1||Q1) + l' D(P2||Q2) + slack`.
pub fn check_div_convexity(cfg: &LawConfig, alphabet_size: usize, tol: &Tolerance) -> LawOutcome {
    let space = DominatedPairs::new(alphabet_size);
    let mut out = LawOutcome::new(DIV_CONVEXITY);
    let mut rng = sample::law_rng(cfg.seed, DIV_CONVEXITY);
    for case in 0..cfg.cases {
        let a = sample_pair(&space, &mut rng);
        let b = sample_pair(&space, &mut rng);
        let l: Prob = sample::prob(&mut rng);
        let mixed = space.conv(&l, &a, &b);
        let lf = l.value().to_f64();
        let lhs = div(mixed.p(), mixed.q());
        let rhs = div(a.p(), a.q()).and_then(|da| Ok(lf * da + (1.0 - lf) * div(b.p(), b.q())?));
        let ok = matches!((&lhs, &rhs), (Ok(x), Ok(y)) if *x <= *y + tol.slack);
        out.record(case, ok, inputs!["lambda" => l, "a" => a, "b" => b], || {
            let show = |r: &Result<f64>| r.clone().map(real).unwrap_or_else(|e| e.to_string());
            (show(&lhs), show(&rhs))
        });
    }
    out
}

/// Reflexivity, transitivity and antisymmetry of `<=` on sampled reals.
pub fn check_order_laws(cfg: &LawConfig) -> LawOutcome {
    let mut out = LawOutcome::new(ORDER_LAWS);
    let mut rng = sample::law_rng(cfg.seed, ORDER_LAWS);
    let draw = |rng: &mut LawRng| {
        // Small integers make ties likely.
        if sample::coin(rng, 2) {
            OrderedReal(rng.random_range(-3..=3) as f64)
        } else {
            OrderedReal(rng.random_range(-1e6..1e6))
        }
    };
    for case in 0..cfg.cases {
        let [x, y, z] = [(); 3].map(|_| draw(&mut rng));
        #[allow(clippy::eq_op)]
        let refl = x <= x;
        let trans = !(x <= y && y <= z) || x <= z;
        let anti = !(x <= y && y <= x) || x.partial_cmp(&y) == Some(Ordering::Equal);
        out.record(
            case,
            refl && trans && anti,
            inputs!["x" => x, "y" => y, "z" => z],
            || (format!("refl={refl} trans={trans}"), format!("anti={anti}")),
        );
    }
    out
}
