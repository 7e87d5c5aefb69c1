//! JSON encodings of rationals, points, distributions and hull witnesses.
//!
//! Rationals are strings such as `"1/2"` or `"-3"`; JSON integers are also
//! accepted on input. Points are encoded by shape:
//!
//! | point                | encoding                                  |
//! |----------------------|-------------------------------------------|
//! | rational             | `"1/2"`                                   |
//! | rational vector      | `{"coords": ["1/2", "0"]}` (or a bare array) |
//! | distribution         | `{"weights": ["1/2", "1/2"]}`             |
//! | dominated pair       | `{"p": {"weights": ..}, "q": {"weights": ..}}` |

use convspace::dist::FiniteDist;
use convspace::hull::HullWitness;
use convspace::space::{
    DominatedPair, DominatedPairs, RatLine, RatVector, RatVectorSpace, Simplex,
};
use convspace::{ConvexSpace, Error, Rat};
use serde_json::{json, Map, Value};

pub type Result<T> = std::result::Result<T, Error>;

fn bad(input: &Value, reason: &str) -> Error {
    Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rat::from_int(i)),
            None => Err(bad(
                v,
                "not an exact rational; write it as a \"num/den\" string",
            )),
        },
        _ => Err(bad(v, "expected a rational string")),
    }
}

pub fn rat_to_json(r: &Rat) -> Value {
    Value::String(r.to_string())
}

fn rats_from_json(v: &Value) -> Result<Vec<Rat>> {
    v.as_array()
        .ok_or_else(|| bad(v, "expected an array of rationals"))?
        .iter()
        .map(rat_from_json)
        .collect()
}

fn rats_to_json(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(rat_to_json).collect())
}

pub fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| bad(v, &format!("missing field \"{key}\"")))
}

/// `{"weights": [...]}` or a bare array of weights.
pub fn dist_from_json(v: &Value) -> Result<FiniteDist> {
    let weights = match v {
        Value::Object(_) => field(v, "weights")?,
        _ => v,
    };
    FiniteDist::new(rats_from_json(weights)?)
}

pub fn dist_to_json(d: &FiniteDist) -> Value {
    json!({ "weights": rats_to_json(d.weights()) })
}

/// The instance a point encoding belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointKind {
    Rat,
    Vector(usize),
    Dist(usize),
    Pair(usize),
}

impl PointKind {
    pub fn of(v: &Value) -> Result<Self> {
        match v {
            Value::String(_) | Value::Number(_) => Ok(PointKind::Rat),
            Value::Array(a) => Ok(PointKind::Vector(a.len())),
            Value::Object(o) if o.contains_key("coords") => Ok(PointKind::Vector(
                field(v, "coords")?.as_array().map_or(0, Vec::len),
            )),
            Value::Object(o) if o.contains_key("weights") => Ok(PointKind::Dist(
                field(v, "weights")?.as_array().map_or(0, Vec::len),
            )),
            Value::Object(o) if o.contains_key("p") && o.contains_key("q") => {
                Ok(PointKind::Pair(dist_from_json(field(v, "q")?)?.arity()))
            }
            _ => Err(bad(v, "not a point encoding")),
        }
    }
}

/// A convex space whose points have a JSON encoding.
pub trait JsonSpace: ConvexSpace {
    fn decode(&self, v: &Value) -> Result<Self::Point>;
    fn encode(&self, x: &Self::Point) -> Value;

    /// Decodes and checks the point belongs to this space.
    fn decode_valid(&self, v: &Value) -> Result<Self::Point> {
        let x = self.decode(v)?;
        self.validate(&x)?;
        Ok(x)
    }
}

impl JsonSpace for RatLine {
    fn decode(&self, v: &Value) -> Result<Rat> {
        rat_from_json(v)
    }

    fn encode(&self, x: &Rat) -> Value {
        rat_to_json(x)
    }
}

impl JsonSpace for RatVectorSpace {
    fn decode(&self, v: &Value) -> Result<RatVector> {
        let coords = match v {
            Value::Object(_) => field(v, "coords")?,
            _ => v,
        };
        Ok(RatVector::new(rats_from_json(coords)?))
    }

    fn encode(&self, x: &RatVector) -> Value {
        json!({ "coords": rats_to_json(x.coords()) })
    }
}

impl JsonSpace for Simplex {
    fn decode(&self, v: &Value) -> Result<FiniteDist> {
        dist_from_json(v)
    }

    fn encode(&self, x: &FiniteDist) -> Value {
        dist_to_json(x)
    }
}

impl JsonSpace for DominatedPairs {
    fn decode(&self, v: &Value) -> Result<DominatedPair> {
        DominatedPair::new(
            dist_from_json(field(v, "p")?)?,
            dist_from_json(field(v, "q")?)?,
        )
    }

    fn encode(&self, x: &DominatedPair) -> Value {
        json!({ "p": dist_to_json(x.p()), "q": dist_to_json(x.q()) })
    }
}

pub fn points_from_json<S: JsonSpace>(space: &S, v: &Value) -> Result<Vec<S::Point>> {
    v.as_array()
        .ok_or_else(|| bad(v, "expected an array of points"))?
        .iter()
        .map(|x| space.decode_valid(x))
        .collect()
}

/// `{"weights": [...], "generators": [...]}`.
pub fn witness_from_json<S: JsonSpace>(space: &S, v: &Value) -> Result<HullWitness<S::Point>> {
    let weights = dist_from_json(field(v, "weights")?)?;
    let generators = points_from_json(space, field(v, "generators")?)?;
    HullWitness::new(weights, generators)
}

pub fn witness_to_json<S: JsonSpace>(space: &S, w: &HullWitness<S::Point>) -> Value {
    let mut obj = Map::new();
    obj.insert("weights".into(), rats_to_json(w.weights().weights()));
    obj.insert(
        "generators".into(),
        Value::Array(w.generators().iter().map(|g| space.encode(g)).collect()),
    );
    Value::Object(obj)
}
