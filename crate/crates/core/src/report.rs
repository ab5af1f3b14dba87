//! Condition statuses, witnesses and the aggregate verdict shared by the
//! feasibility pipelines.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{BigInt, BigRational, Surd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not_applicable",
        })
    }
}

/// "Feasible" means no implemented necessary condition fails; it is never a
/// claim of existence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Feasible,
    Infeasible,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Feasible => "feasible",
            Verdict::Infeasible => "infeasible",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum WitnessValue {
    Integer(BigInt),
    Rational(BigRational),
    Surd(Surd),
    Bool(bool),
    Text(String),
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessValue::Integer(n) => write!(f, "{n}"),
            WitnessValue::Rational(q) => write!(f, "{q}"),
            WitnessValue::Surd(s) => write!(f, "{s}"),
            WitnessValue::Bool(b) => write!(f, "{b}"),
            WitnessValue::Text(t) => f.write_str(t),
        }
    }
}

impl From<BigInt> for WitnessValue {
    fn from(n: BigInt) -> Self {
        WitnessValue::Integer(n)
    }
}

impl From<BigRational> for WitnessValue {
    fn from(q: BigRational) -> Self {
        if q.is_integer() {
            WitnessValue::Integer(q.to_integer())
        } else {
            WitnessValue::Rational(q)
        }
    }
}

impl From<Surd> for WitnessValue {
    fn from(s: Surd) -> Self {
        match s.as_rational() {
            Some(q) => q.into(),
            None => WitnessValue::Surd(s),
        }
    }
}

impl From<bool> for WitnessValue {
    fn from(b: bool) -> Self {
        WitnessValue::Bool(b)
    }
}

impl From<&str> for WitnessValue {
    fn from(t: &str) -> Self {
        WitnessValue::Text(t.to_owned())
    }
}

impl From<String> for WitnessValue {
    fn from(t: String) -> Self {
        WitnessValue::Text(t)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub name: String,
    pub value: WitnessValue,
}

/// One necessary condition with its outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Condition {
    pub id: &'static str,
    pub status: Status,
    pub witness: Vec<Witness>,
}

impl Condition {
    pub fn new(id: &'static str, status: Status) -> Self {
        Condition {
            id,
            status,
            witness: Vec::new(),
        }
    }

    pub fn pass(id: &'static str) -> Self {
        Self::new(id, Status::Pass)
    }

    pub fn fail(id: &'static str) -> Self {
        Self::new(id, Status::Fail)
    }

    pub fn not_applicable(id: &'static str, reason: impl Into<String>) -> Self {
        Self::new(id, Status::NotApplicable).with("reason", reason.into())
    }

    pub fn from_bool(id: &'static str, ok: bool) -> Self {
        Self::new(id, if ok { Status::Pass } else { Status::Fail })
    }

    pub fn with(mut self, name: &str, value: impl Into<WitnessValue>) -> Self {
        self.witness.push(Witness {
            name: name.to_owned(),
            value: value.into(),
        });
        self
    }

    pub fn get(&self, name: &str) -> Option<&WitnessValue> {
        self.witness
            .iter()
            .find(|w| w.name == name)
            .map(|w| &w.value)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Infeasible iff some applicable condition fails.
pub fn aggregate(conditions: &[Condition]) -> Verdict {
    if conditions.iter().any(|c| c.status == Status::Fail) {
        Verdict::Infeasible
    } else {
        Verdict::Feasible
    }
}
