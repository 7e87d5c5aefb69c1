//! The full law suite and the named instances it can run on.

use alloc::string::ToString;

use crate::conical::{check_avgn, check_conical_suite, ScaledSpace};
use crate::error::{Error, Result};
use crate::hull::check_hull_union;
use crate::multiary::check_multiary_laws;
use crate::mutant::{LeftProjection, UnguardedConvn};
use crate::report::{LawConfig, LawReport};
use crate::sample::LawRng;
use crate::space::{
    check_binary_laws, check_entropic_law, ConvexSpace, DominatedPairs, RatLine, RatVectorSpace,
    SampleSpace, Simplex,
};

/// Binary, entropic, multiary, conical and hull laws on one space.
pub fn full_suite<S, F>(space: &S, sampler: F, cfg: &LawConfig) -> LawReport
where
    S: ConvexSpace + ?Sized,
    F: Fn(&mut LawRng) -> S::Point,
{
    let mut report = check_binary_laws(space, &sampler, cfg);
    report.push(check_entropic_law(space, &sampler, cfg));
    report.extend(check_multiary_laws(space, &sampler, cfg));
    report.extend(check_conical_suite(space, &sampler, cfg));
    report.push(check_hull_union(space, &sampler, cfg));
    report
}

fn run<S: SampleSpace>(space: &S, cfg: &LawConfig) -> LawReport {
    full_suite(space, |r| space.sample_point(r), cfg)
}

/// A named space for the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Instance {
    Rat,
    Vec(usize),
    Fdist(usize),
    DomPair,
    ScaledRat,
    /// `x <p> y = x` on the rational line.
    BrokenDemo,
    /// Multiary recursion without the point-mass shortcut.
    BrokenConvn,
}

impl Instance {
    pub const NAMES: [&'static str; 11] = [
        "rat",
        "vec1",
        "vec2",
        "vec3",
        "fdist2",
        "fdist3",
        "fdist4",
        "dompair",
        "scaled-rat",
        "broken-demo",
        "broken-convn",
    ];

    pub fn from_name(name: &str) -> Result<Self> {
        let parsed = match name {
            "rat" => Instance::Rat,
            "dompair" => Instance::DomPair,
            "scaled-rat" => Instance::ScaledRat,
            "broken-demo" => Instance::BrokenDemo,
            "broken-convn" => Instance::BrokenConvn,
            _ => {
                let dim = |prefix: &str| {
                    name.strip_prefix(prefix)
                        .and_then(|d| d.parse::<usize>().ok())
                };
                match (dim("vec"), dim("fdist")) {
                    (Some(d @ 1..=3), _) => Instance::Vec(d),
                    (_, Some(k @ 2..=4)) => Instance::Fdist(k),
                    _ => {
                        return Err(Error::Parse {
                            input: name.to_string(),
                            reason: "unknown instance".to_string(),
                        })
                    }
                }
            }
        };
        Ok(parsed)
    }

    pub fn run(self, cfg: &LawConfig) -> LawReport {
        match self {
            Instance::Rat => {
                let mut report = run(&RatLine, cfg);
                report.push(check_avgn(cfg));
                report
            }
            Instance::Vec(d) => run(&RatVectorSpace::new(d), cfg),
            Instance::Fdist(k) => run(&Simplex::new(k), cfg),
            Instance::DomPair => run(&DominatedPairs::new(3), cfg),
            Instance::ScaledRat => run(&ScaledSpace(RatLine), cfg),
            Instance::BrokenDemo => run(&LeftProjection, cfg),
            Instance::BrokenConvn => run(&UnguardedConvn(RatLine), cfg),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        for name in Instance::NAMES {
            assert!(Instance::from_name(name).is_ok(), "{name}");
        }
        assert!(Instance::from_name("vec4").is_err());
        assert!(Instance::from_name("fdist1").is_err());
        assert!(Instance::from_name("nope").is_err());
    }

    #[test]
    fn mutants_fail_and_instances_pass() {
        let cfg = LawConfig::new(1, 60);
        assert!(Instance::Rat.run(&cfg).all_hold());
        assert!(Instance::ScaledRat.run(&cfg).all_hold());
        assert!(!Instance::BrokenDemo.run(&cfg).all_hold());
        assert!(!Instance::BrokenConvn.run(&cfg).all_hold());
    }
}
