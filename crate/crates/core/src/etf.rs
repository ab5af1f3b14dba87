//! Necessary conditions for real equiangular tight frames of `n` vectors in
//! `R^d`: the Gerzon window, odd-integer square roots, the derived strongly
//! regular graph with its Krein conditions, and the sharpened size window
//! for `d >= 5`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{
    big, ceil_surd, cmp_surd, is_odd_integer, rat, rational_sqrt, BigRational, Surd,
};
use crate::bounds::{gerzon_check, GerzonSide};
use crate::error::{Error, Result};
use crate::report::{aggregate, Condition, Status, Verdict};
use crate::srg::{consistency_check, krein, SrgParams};

#[derive(Debug, Clone, PartialEq)]
pub struct EtfFeasibility {
    pub d: u64,
    pub n: u64,
    pub conditions: Vec<Condition>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl EtfFeasibility {
    pub fn condition(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coro1Class {
    ExceptionalLower,
    ExceptionalUpper,
    Window,
    Infeasible,
    NotApplicable,
}

impl fmt::Display for Coro1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coro1Class::ExceptionalLower => "exceptional_lower",
            Coro1Class::ExceptionalUpper => "exceptional_upper",
            Coro1Class::Window => "window",
            Coro1Class::Infeasible => "infeasible",
            Coro1Class::NotApplicable => "not_applicable",
        })
    }
}

fn check_pre(d: u64, n: u64) -> Result<()> {
    if n > d + 1 && d + 1 > 2 {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "need n > d+1 > 2; got d = {d}, n = {n}"
        )))
    }
}

/// `d(n-1)/(n-d)`, the squared inverse coherence.
pub fn radicand(d: u64, n: u64) -> BigRational {
    BigRational::new((d * (n - 1)).into(), (n - d).into())
}

/// The degree `a = n/2 - 1 + (1 - n/(2d)) sqrt(d(n-1)/(n-d))`.
pub fn etf_degree(d: u64, n: u64) -> Result<Surd> {
    check_pre(d, n)?;
    let root = Surd::sqrt_of(&radicand(d, n))?;
    let slope = big(1) - BigRational::new(n.into(), (2 * d).into());
    Ok(root.scale(&slope) + Surd::from(BigRational::new(n.into(), 2.into()) - big(1)))
}

/// `(n-1, a, (3a-n)/2, a/2)`. A non-rational `a` is kept as a surd and
/// flagged by the consistency check.
pub fn etf_srg(d: u64, n: u64) -> Result<SrgParams> {
    let a = etf_degree(d, n)?;
    let nq = Surd::from(big(n));
    let lambda = (a.scale(&big(3)) - nq).scale(&rat(1, 2));
    let mu = a.scale(&rat(1, 2));
    Ok(SrgParams {
        v: Surd::from(big(n - 1)),
        k: a,
        lambda,
        mu,
    })
}

/// Both `sqrt(d(n-1)/(n-d))` and `sqrt((n-d)(n-1)/d)` must be odd integers.
pub fn aw_integrality(d: u64, n: u64) -> Condition {
    const ID: &str = "aw_integrality";
    if n <= d + 1 {
        return Condition::not_applicable(ID, "n <= d+1");
    }
    if n == 2 * d {
        return Condition::not_applicable(ID, "n = 2d");
    }
    let first = radicand(d, n);
    let second = BigRational::new(((n - d) * (n - 1)).into(), d.into());
    let mut cond = Condition::pass(ID);
    let mut failures = Vec::new();
    for (name, q) in [
        ("sqrt(d(n-1)/(n-d))", &first),
        ("sqrt((n-d)(n-1)/d)", &second),
    ] {
        match rational_sqrt(q).expect("positive") {
            Some(r) => {
                if !is_odd_integer(&r) {
                    failures.push(format!("{name} = {r} is not an odd integer"));
                }
                cond = cond.with(name, r);
            }
            None => {
                failures.push(format!("{name}: {q} is not a perfect square"));
                cond = cond.with(name, Surd::sqrt_of(q).expect("positive"));
            }
        }
    }
    if !failures.is_empty() {
        cond.status = Status::Fail;
        cond = cond.with("failures", failures.join("; "));
    }
    cond
}

fn lower_exceptional(d: u64) -> (BigRational, BigRational) {
    (big(d) + rat(1, 2), big(2 * d) + rat(1, 4))
}

fn window_lower(d: u64) -> (BigRational, BigRational) {
    (big(d) + rat(1, 2), big(3 * d) + rat(1, 4))
}

/// Integer window `[ceil(d + 1/2 + sqrt(3d + 1/4)), floor(d(d+2)/3)]`.
pub fn coro1_window(d: u64) -> (u64, u64) {
    let (a, b) = window_lower(d);
    let lo = ceil_surd(&a, &b).expect("positive radicand");
    (u64::try_from(lo).expect("fits in u64"), d * (d + 2) / 3)
}

pub fn coro1_classify(d: u64, n: u64) -> Result<Coro1Class> {
    check_pre(d, n)?;
    if d < 5 {
        return Ok(Coro1Class::NotApplicable);
    }
    let nq = big(n);
    let (a, b) = lower_exceptional(d);
    if cmp_surd(&nq, &a, &b)? == Ordering::Equal {
        return Ok(Coro1Class::ExceptionalLower);
    }
    if 2 * n == d * (d + 1) {
        return Ok(Coro1Class::ExceptionalUpper);
    }
    let (a, b) = window_lower(d);
    if cmp_surd(&nq, &a, &b)? != Ordering::Less && 3 * n <= d * (d + 2) {
        Ok(Coro1Class::Window)
    } else {
        Ok(Coro1Class::Infeasible)
    }
}

fn gerzon_condition(d: u64, n: u64) -> Result<Condition> {
    let g = gerzon_check(d, n)?;
    let side = match g.side {
        GerzonSide::Below => "below",
        GerzonSide::Inside => "inside",
        GerzonSide::Above => "above",
    };
    Ok(Condition::from_bool("gerzon", g.inside())
        .with("side", side)
        .with("n^2-(2d+1)n+d^2-d", g.lower_quadratic)
        .with("d(d+1)/2", g.upper))
}

fn krein_condition(params: &SrgParams) -> Condition {
    const ID: &str = "krein";
    match krein(params) {
        Ok((k1, k2)) => {
            let ok = k1.signum() != Ordering::Less && k2.signum() != Ordering::Less;
            Condition::from_bool(ID, ok).with("K1", k1).with("K2", k2)
        }
        Err(e) => Condition::not_applicable(ID, e.to_string()),
    }
}

fn coro1_condition(d: u64, n: u64) -> Result<Condition> {
    const ID: &str = "coro1_window";
    let class = coro1_classify(d, n)?;
    if class == Coro1Class::NotApplicable {
        return Ok(Condition::not_applicable(ID, "d < 5"));
    }
    let (lo, hi) = coro1_window(d);
    Ok(Condition::from_bool(ID, class != Coro1Class::Infeasible)
        .with("class", class.to_string())
        .with("window_min", big(lo))
        .with("window_max", big(hi)))
}

/// Conjectured equivalence between ETF(d, d(d+2)/3) and
/// ETF(d+1, (d+1)(d+2)/2); reported, never used.
fn partner_note(d: u64, n: u64) -> String {
    let mut note = String::from(
        "conjectured: ETF(d, d(d+2)/3) exists if and only if there exists an ETF with parameters (d+1, (d+1)(d+2)/2)",
    );
    if 3 * n == d * (d + 2) {
        note.push_str(&format!(
            "; partner of ({d}, {n}) is ({}, {})",
            d + 1,
            (d + 1) * (d + 2) / 2
        ));
    } else if d >= 3 && 2 * n == d * (d + 1) && ((d - 1) * (d + 1)).is_multiple_of(3) {
        note.push_str(&format!(
            "; partner of ({d}, {n}) is ({}, {})",
            d - 1,
            (d - 1) * (d + 1) / 3
        ));
    }
    note
}

pub fn etf_report(d: u64, n: u64) -> Result<EtfFeasibility> {
    check_pre(d, n)?;
    let params = etf_srg(d, n)?;
    let srg = consistency_check(&params)
        .with("v", params.v.clone())
        .with("k", params.k.clone())
        .with("lambda", params.lambda.clone())
        .with("mu", params.mu.clone());
    let conditions = vec![
        gerzon_condition(d, n)?,
        aw_integrality(d, n),
        srg,
        krein_condition(&params),
        coro1_condition(d, n)?,
    ];
    let verdict = aggregate(&conditions);
    Ok(EtfFeasibility {
        d,
        n,
        conditions,
        verdict,
        notes: vec![partner_note(d, n)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::report::WitnessValue;

    fn ints(p: &SrgParams) -> Vec<BigRational> {
        p.as_array()
            .iter()
            .map(|s| s.as_rational().unwrap())
            .collect()
    }

    #[test]
    fn srg_examples() {
        assert_eq!(
            ints(&etf_srg(6, 16).unwrap()),
            [int(15), int(6), int(1), int(3)]
        );
        assert_eq!(
            ints(&etf_srg(7, 28).unwrap()),
            [int(27), int(10), int(1), int(5)]
        );
        assert_eq!(
            ints(&etf_srg(3, 6).unwrap()),
            [int(5), int(2), int(0), int(1)]
        );
        assert!(!etf_srg(4, 7).unwrap().k.is_rational());
        assert!(etf_srg(3, 4).is_err());
    }

    #[test]
    fn aw_examples() {
        let c = aw_integrality(6, 16);
        assert_eq!(c.status, Status::Pass);
        assert_eq!(
            c.get("sqrt(d(n-1)/(n-d))"),
            Some(&WitnessValue::from(int(3)))
        );
        assert_eq!(
            c.get("sqrt((n-d)(n-1)/d)"),
            Some(&WitnessValue::from(int(5)))
        );
        assert_eq!(aw_integrality(5, 10).status, Status::NotApplicable);
        assert_eq!(aw_integrality(4, 7).status, Status::Fail);
    }

    #[test]
    fn coro1_examples() {
        assert_eq!(coro1_classify(6, 16).unwrap(), Coro1Class::Window);
        assert_eq!(coro1_classify(6, 10).unwrap(), Coro1Class::ExceptionalLower);
        assert_eq!(coro1_classify(6, 18).unwrap(), Coro1Class::Infeasible);
        assert_eq!(coro1_classify(4, 6).unwrap(), Coro1Class::NotApplicable);
        assert_eq!(coro1_window(6), (11, 16));
        for d in 5..200 {
            assert_eq!(
                coro1_classify(d, d * (d + 1) / 2).unwrap(),
                Coro1Class::ExceptionalUpper
            );
        }
    }

    #[test]
    fn report_examples() {
        let r = etf_report(6, 16).unwrap();
        assert_eq!(r.verdict, Verdict::Feasible);
        assert!(r.conditions.iter().all(|c| c.passed()));
        let r = etf_report(6, 18).unwrap();
        assert_eq!(r.verdict, Verdict::Infeasible);
        assert_eq!(r.condition("coro1_window").unwrap().status, Status::Fail);
        assert_eq!(etf_report(22, 176).unwrap().verdict, Verdict::Feasible);
        assert!(etf_report(6, 16).unwrap().notes[0].contains("(7, 28)"));
        assert!(etf_report(2, 3).is_err());
    }

    #[test]
    fn aw_pass_gives_integral_degree_of_matching_parity() {
        for d in 3..80u64 {
            for n in d + 2..=d * (d + 1) / 2 + 50 {
                if n == 2 * d || aw_integrality(d, n).status != Status::Pass {
                    continue;
                }
                let a = etf_degree(d, n).unwrap().to_integer().unwrap();
                assert_eq!((a - n) % 2u32, 0.into(), "d={d} n={n}");
            }
        }
    }
}
