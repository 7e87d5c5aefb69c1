//! One function per subcommand. Each writes its report to `out` and returns
//! whether every check passed.

use std::io::{Read, Write};

use convspace::analysis::{
    check_convex_in, div_in, real, second_derivative_test, Domain, LogBase, Mode, RealFn, Spacing,
    Tolerance,
};
use convspace::hull::{hull_eval, hull_union_split_tagged};
use convspace::space::{dominates, DominatedPairs, RatLine, RatVectorSpace, Simplex};
use convspace::suite::Instance;
use convspace::{ConvexSpace, Error, LawConfig, LawOutcome, LawReport};
use serde_json::{json, Map, Value};

use crate::args::{Base, Command, ModeArg, Sampling};
use crate::format::{
    dist_from_json, dist_to_json, field, points_from_json, witness_from_json, witness_to_json,
    JsonSpace, PointKind,
};
use crate::{Cli, CliError, Format};

type Result<T> = std::result::Result<T, CliError>;

/// Binds `$s` to the space matching a point encoding.
macro_rules! with_space {
    ($kind:expr, |$s:ident| $body:expr) => {
        match $kind {
            PointKind::Rat => {
                let $s = &RatLine;
                $body
            }
            PointKind::Vector(dim) => {
                let $s = &RatVectorSpace::new(dim);
                $body
            }
            PointKind::Dist(n) => {
                let $s = &Simplex::new(n);
                $body
            }
            PointKind::Pair(n) => {
                let $s = &DominatedPairs::new(n);
                $body
            }
        }
    };
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let format = cli.format;
    match &cli.command {
        Command::Laws { instance, sampling } => laws(instance, sampling, format, out),
        Command::Barycenter { input } => barycenter(input, format, out),
        Command::HullSplit {
            input,
            x_indices,
            default_x,
            default_y,
        } => hull_split(
            input,
            x_indices.as_deref(),
            default_x.as_deref(),
            default_y.as_deref(),
            format,
            out,
        ),
        Command::Divergence { p, q, base } => divergence(p, q, *base, format, out),
        Command::ConvexCheck {
            function,
            mode,
            interval,
            grid,
            slack,
            sampling,
        } => {
            let mode = match mode {
                ModeArg::Convex => Mode::Convex,
                ModeArg::Concave => Mode::Concave,
            };
            convex_check(
                function, mode, *interval, *grid, *slack, sampling, format, out,
            )
        }
    }
}

fn emit(
    out: &mut dyn Write,
    format: Format,
    text: impl FnOnce() -> String,
    value: impl FnOnce() -> Value,
) -> Result<()> {
    let rendered = match format {
        Format::Text => text(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value()).expect("values serialize");
            s.push('\n');
            s
        }
    };
    out.write_all(rendered.as_bytes())
        .map_err(|error| CliError::Io {
            source_name: "stdout".into(),
            error,
        })
}

/// Reads JSON from `-` (stdin), from inline text starting with `{` or `[`, or
/// from a file.
pub fn load_json(arg: &str) -> Result<Value> {
    let (source_name, text) = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|error| CliError::Io {
                source_name: "stdin".into(),
                error,
            })?;
        ("stdin".to_string(), s)
    } else if arg.trim_start().starts_with(['{', '[']) {
        ("inline JSON".to_string(), arg.to_string())
    } else {
        let s = std::fs::read_to_string(arg).map_err(|error| CliError::Io {
            source_name: arg.to_string(),
            error,
        })?;
        (arg.to_string(), s)
    };
    serde_json::from_str(&text).map_err(|error| CliError::Json { source_name, error })
}

fn outcome_json(o: &LawOutcome) -> Value {
    let counterexample = o.counterexample.as_ref().map_or(Value::Null, |c| {
        let inputs: Map<String, Value> = c
            .inputs
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({ "case": c.case, "inputs": inputs, "lhs": c.lhs, "rhs": c.rhs })
    });
    json!({
        "law": o.law,
        "pass": o.holds(),
        "cases": o.cases,
        "passed": o.passed,
        "degenerate": o.degenerate,
        "counterexample": counterexample,
    })
}

pub fn report_json(report: &LawReport) -> Value {
    Value::Array(report.outcomes.iter().map(outcome_json).collect())
}

fn summary(report: &LawReport) -> String {
    let total = report.outcomes.len();
    match report.failures().count() {
        0 => format!("all {total} checks hold"),
        n => format!("{n} of {total} checks failed"),
    }
}

fn laws(name: &str, sampling: &Sampling, format: Format, out: &mut dyn Write) -> Result<bool> {
    let instance = Instance::from_name(name)
        .map_err(|_| CliError::Usage(format!("unknown instance `{name}`")))?;
    let cfg = LawConfig::new(sampling.seed, sampling.cases);
    let report = instance.run(&cfg);
    let pass = report.all_hold();
    emit(
        out,
        format,
        || {
            format!(
                "instance {name}, seed {}, {} cases per law\n{report}{}\n",
                cfg.seed,
                cfg.cases,
                summary(&report)
            )
        },
        || {
            json!({
                "instance": name,
                "seed": cfg.seed,
                "cases": cfg.cases,
                "pass": pass,
                "laws": report_json(&report),
            })
        },
    )?;
    Ok(pass)
}

fn first_point<'a>(v: &'a Value, what: &str) -> Result<&'a Value> {
    v.as_array().and_then(|a| a.first()).ok_or_else(|| {
        Error::Parse {
            input: v.to_string(),
            reason: format!("{what} must be a nonempty array"),
        }
        .into()
    })
}

fn barycenter(input: &str, format: Format, out: &mut dyn Write) -> Result<bool> {
    let v = load_json(input)?;
    let d = dist_from_json(field(&v, "weights")?)?;
    let points = field(&v, "points")?;
    let kind = PointKind::of(first_point(points, "points")?)?;
    let (text, value) = with_space!(kind, |space| {
        let xs = points_from_json(space, points)?;
        let z = space.convn(&d, &xs)?;
        (format!("{z}\n"), json!({ "point": space.encode(&z) }))
    });
    emit(out, format, || text, || value)?;
    Ok(true)
}

fn json_arg(flag: Option<&str>, v: &Value, key: &str, what: &str) -> Result<Value> {
    match flag {
        Some(s) => serde_json::from_str(s).map_err(|error| CliError::Json {
            source_name: what.to_string(),
            error,
        }),
        None => v
            .get(key)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("missing {what}: pass --{what} or \"{key}\""))),
    }
}

fn hull_split(
    input: &str,
    x_flag: Option<&[usize]>,
    dx_flag: Option<&str>,
    dy_flag: Option<&str>,
    format: Format,
    out: &mut dyn Write,
) -> Result<bool> {
    let v = load_json(input)?;
    let x_indices: Vec<usize> = match x_flag {
        Some(x) => x.to_vec(),
        None => {
            let raw = v.get("x_indices").ok_or_else(|| {
                CliError::Usage("missing X index set: pass --x or \"x_indices\"".into())
            })?;
            serde_json::from_value(raw.clone()).map_err(|error| CliError::Json {
                source_name: "x_indices".into(),
                error,
            })?
        }
    };
    let dx = json_arg(dx_flag, &v, "default_x", "default-x")?;
    let dy = json_arg(dy_flag, &v, "default_y", "default-y")?;
    let kind = PointKind::of(first_point(field(&v, "generators")?, "generators")?)?;
    let (pass, text, value) = with_space!(kind, |space| {
        let z = witness_from_json(space, &v)?;
        let dx = space.decode_valid(&dx)?;
        let dy = space.decode_valid(&dy)?;
        let n = z.generators().len();
        let mut tags = vec![false; n];
        for &i in &x_indices {
            *tags
                .get_mut(i)
                .ok_or(Error::IndexOutOfRange { index: i, arity: n })? = true;
        }
        let split = hull_union_split_tagged(&z, &tags, &dx, &dy)?;
        let point = hull_eval(space, &z)?;
        let rebuilt = space.conv(
            &split.p,
            &hull_eval(space, &split.x)?,
            &hull_eval(space, &split.y)?,
        );
        let ok = rebuilt == point;
        let (wx, wy) = (
            witness_to_json(space, &split.x),
            witness_to_json(space, &split.y),
        );
        let text = format!(
            "p = {}\nx = {wx}\ny = {wy}\nz = {point}\nx <p> y = {rebuilt}\nreconstruction: {}\n",
            split.p,
            if ok { "verified" } else { "FAILED" }
        );
        let value = json!({
            "p": split.p.to_string(),
            "x": wx,
            "y": wy,
            "point": space.encode(&point),
            "reconstructed": space.encode(&rebuilt),
            "reconstruction": ok,
        });
        (ok, text, value)
    });
    emit(out, format, || text, || value)?;
    Ok(pass)
}

fn divergence(p: &str, q: &str, base: Base, format: Format, out: &mut dyn Write) -> Result<bool> {
    let p = dist_from_json(&load_json(p)?)?;
    let q = dist_from_json(&load_json(q)?)?;
    let (log_base, base_name, unit) = match base {
        Base::Two => (LogBase::Two, "2", "bits"),
        Base::E => (LogBase::E, "e", "nats"),
    };
    let dominated = dominates(&q, &p)?;
    let d = if dominated {
        Some(div_in(log_base, &p, &q)?)
    } else {
        None
    };
    emit(
        out,
        format,
        || match d {
            Some(d) => format!("D(P || Q) = {} {unit}\n", real(d)),
            None => format!("P = {p} is not dominated by Q = {q}\n"),
        },
        || {
            json!({
                "p": dist_to_json(&p),
                "q": dist_to_json(&q),
                "base": base_name,
                "dominated": dominated,
                "divergence": d.map(real),
            })
        },
    )?;
    match d {
        Some(_) => Ok(true),
        None => Err(Error::NotDominated.into()),
    }
}

#[allow(clippy::too_many_arguments)]
fn convex_check(
    function: &str,
    mode: Mode,
    interval: Option<(f64, f64)>,
    grid: usize,
    slack: f64,
    sampling: &Sampling,
    format: Format,
    out: &mut dyn Write,
) -> Result<bool> {
    let f = RealFn::from_name(function)?;
    let domain = interval.map_or(f.default_domain(), |(lo, hi)| Domain::auto(lo, hi));
    let tol = Tolerance::new(slack)?;
    let cfg = LawConfig::new(sampling.seed, sampling.cases);
    let mut report = LawReport::from(check_convex_in(|x| f.eval(x), &domain, mode, &cfg, &tol)?);
    report.push(second_derivative_test(
        |x| f.eval(x),
        &domain,
        grid,
        mode,
        &tol,
    )?);
    let pass = report.all_hold();
    let spacing = match domain.spacing {
        Spacing::Linear => "linear",
        Spacing::Log => "log",
    };
    emit(
        out,
        format,
        || {
            format!(
                "{} {} on ({}, {}), {spacing} spacing, slack {}, seed {}\n{report}{}\n",
                f.name(),
                mode.name(),
                real(domain.lo),
                real(domain.hi),
                real(tol.slack()),
                cfg.seed,
                summary(&report)
            )
        },
        || {
            json!({
                "function": f.name(),
                "mode": mode.name(),
                "interval": [real(domain.lo), real(domain.hi)],
                "spacing": spacing,
                "slack": real(tol.slack()),
                "seed": cfg.seed,
                "cases": cfg.cases,
                "grid": grid,
                "pass": pass,
                "laws": report_json(&report),
            })
        },
    )?;
    Ok(pass)
}
