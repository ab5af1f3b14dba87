//! Necessary conditions for packings meeting the Levenstein coherence bound
//! with equality: the derived strongly regular graph, eigenvalue
//! integrality, the admissible-size enumeration, the two-distance embedding
//! and its size bound.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::arith::{big, rational_sqrt, BigInt, BigRational, Surd};
use crate::error::{Error, Result};
use crate::report::{aggregate, Condition, Verdict};
use crate::srg::{consistency_check, krein, SrgParams, SrgSpectrum};

#[derive(Debug, Clone, PartialEq)]
pub struct LevenFeasibility {
    pub d: u64,
    pub n: u64,
    pub alpha_sq: BigRational,
    pub conditions: Vec<Condition>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl LevenFeasibility {
    pub fn condition(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpecialSize {
    /// `d(d+2)/2`
    HalfDDPlus2,
    /// `d(d+1)(d+2)/6`
    Tight,
}

/// One admissible size with its annotations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeEntry {
    pub n: u64,
    /// Integer parameter producing `n`; `None` for the `d(d+2)/2` entry.
    pub alpha: Option<u64>,
    pub in_window: bool,
    pub special: Option<SpecialSize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodalSizes {
    pub sizes: Vec<u64>,
    /// Odd candidates removed because antipodal sets have even size.
    pub dropped_odd: Vec<u64>,
}

fn check_domain(d: u64, n: u64) -> Result<()> {
    if d >= 1 && 2 * n > d * (d + 1) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "need n > d(d+1)/2; got d = {d}, n = {n}"
        )))
    }
}

fn ratio(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `(3n - d(d+2)) / ((d+2)(n-d))`.
pub fn alpha_sq(d: u64, n: u64) -> Result<BigRational> {
    check_domain(d, n)?;
    let (d, n) = (d as i128, n as i128);
    Ok(ratio(3 * n - d * (d + 2), (d + 2) * (n - d)))
}

/// Parameters and spectrum from the closed forms.
pub fn leven_srg(d: u64, n: u64) -> Result<(SrgParams, SrgSpectrum)> {
    check_domain(d, n)?;
    let (d, n) = (d as i128, n as i128);
    let e = 3 * n - d * (d + 2);
    let k = ratio((n - d) * (n - d) * (d + 2), d * e);
    let lambda = ratio(
        (n - d) * ((d + 8) * n * n - 9 * d * (d + 2) * n + 2 * d * d * (d + 2) * (d + 2)),
        d * e * e,
    );
    let mu = ratio((n - d) * (n - d) * (d + 2) * n, d * e * e);
    let params = SrgParams::from_rationals(big(n as u64), k, lambda, mu);
    let spectrum = SrgSpectrum {
        r1: ratio((n - d) * (2 * n - d * (d + 2)), d * e).into(),
        r2: ratio(-(n - d) * (d + 2), e).into(),
        n1: ratio(d * (d + 1) / 2 - 1, 1).into(),
        n2: ratio(n - d * (d + 1) / 2, 1).into(),
    };
    Ok((params, spectrum))
}

/// `1/alpha` and `(n-d)/(d alpha)` must both be integers.
pub fn al_integrality(d: u64, n: u64) -> Result<Condition> {
    const ID: &str = "al_integrality";
    let a2 = alpha_sq(d, n)?;
    if d < 4 {
        return Ok(Condition::not_applicable(ID, "d < 4"));
    }
    let Some(alpha) = rational_sqrt(&a2)? else {
        return Ok(Condition::fail(ID)
            .with("alpha^2", a2.clone())
            .with("1/alpha", Surd::sqrt_of(&a2.recip())?)
            .with("reason", "alpha^2 is not a rational square"));
    };
    let inv = alpha.recip();
    let other = big(n - d) / (big(d) * &alpha);
    let ok = inv.is_integer() && other.is_integer();
    Ok(Condition::from_bool(ID, ok)
        .with("1/alpha", inv)
        .with("(n-d)/(d alpha)", other))
}

fn alpha_max(d: u64) -> u64 {
    2 * (d - 1) * (d + 2) / (d + 5)
}

fn annotate(d: u64, n: u64, alpha: Option<u64>) -> SizeEntry {
    let in_window = 2 * n >= d * (d + 3) && 9 * n <= d * (d + 2) * (d + 2);
    let special = if 2 * n == d * (d + 2) {
        Some(SpecialSize::HalfDDPlus2)
    } else if 6 * n == d * (d + 1) * (d + 2) {
        Some(SpecialSize::Tight)
    } else {
        None
    };
    SizeEntry {
        n,
        alpha,
        in_window,
        special,
    }
}

/// Sizes `d(d+2)(d-1+a)/(3a)` for integers `a` in `[2, 2(d-1)(d+2)/(d+5)]`,
/// plus `d(d+2)/2`, keeping the integral ones; ascending.
pub fn enumerate_sizes(d: u64, apply_al_filter: bool) -> Result<Vec<SizeEntry>> {
    if d < 4 {
        return Err(Error::DimensionTooSmall(d));
    }
    let base = d * (d + 2);
    let mut out: Vec<SizeEntry> = Vec::new();
    for a in 2..=alpha_max(d) {
        let num = base * (d - 1 + a);
        if num.is_multiple_of(3 * a) {
            out.push(annotate(d, num / (3 * a), Some(a)));
        }
    }
    if base.is_multiple_of(2) {
        out.push(annotate(d, base / 2, None));
    }
    out.sort_by_key(|e| e.n);
    out.dedup_by_key(|e| e.n);
    if apply_al_filter {
        let mut kept = Vec::new();
        for e in out {
            if al_integrality(d, e.n)?.passed() {
                kept.push(e);
            }
        }
        out = kept;
    }
    Ok(out)
}

/// `(-d/(n-d), d/(2n-d(d+1)))`.
pub fn embedding_angles(d: u64, n: u64) -> Result<(BigRational, BigRational)> {
    check_domain(d, n)?;
    if 2 * n == d * (d + 2) {
        return Err(Error::Precondition(
            "n = d(d+2)/2 makes the positive angle 1".into(),
        ));
    }
    let (d, n) = (d as i128, n as i128);
    Ok((ratio(-d, n - d), ratio(d, 2 * n - d * (d + 1))))
}

/// `n <= m(m+3)/2` with `m = n - d(d+1)/2`.
pub fn two_distance_bound_check(d: u64, n: u64) -> Result<Condition> {
    check_domain(d, n)?;
    let m = n - d * (d + 1) / 2;
    let bound = BigInt::from(m) * BigInt::from(m + 3) / 2;
    Ok(
        Condition::from_bool("two_distance", BigInt::from(n) <= bound)
            .with("m", BigInt::from(m))
            .with("m(m+3)/2", bound),
    )
}

fn alpha_condition(d: u64, a2: &BigRational) -> Result<Condition> {
    const ID: &str = "alpha_exact";
    if d < 4 {
        return Ok(Condition::not_applicable(ID, "d < 4"));
    }
    let zero = big(0);
    let one = big(1);
    let ok = *a2 > zero && *a2 < one;
    let mut c = Condition::from_bool(ID, ok).with("alpha^2", a2.clone());
    c = match rational_sqrt(a2)? {
        Some(a) => c.with("alpha", a),
        None => c.with("alpha", Surd::sqrt_of(a2)?),
    };
    Ok(c)
}

fn krein_condition(params: &SrgParams) -> Condition {
    match krein(params) {
        Ok((k1, k2)) => {
            let ok = k1.signum() != Ordering::Less && k2.signum() != Ordering::Less;
            Condition::from_bool("krein", ok)
                .with("K1", k1)
                .with("K2", k2)
        }
        Err(e) => Condition::not_applicable("krein", e.to_string()),
    }
}

fn enum_condition(d: u64, n: u64) -> Result<Condition> {
    const ID: &str = "enum_membership";
    if d < 4 {
        return Ok(Condition::not_applicable(ID, "d < 4"));
    }
    let sizes = enumerate_sizes(d, false)?;
    Ok(match sizes.iter().find(|e| e.n == n) {
        Some(e) => {
            let mut c = Condition::pass(ID).with("in_window", e.in_window);
            if let Some(a) = e.alpha {
                c = c.with("alpha_param", big(a));
            }
            if let Some(s) = e.special {
                c = c.with(
                    "special",
                    match s {
                        SpecialSize::HalfDDPlus2 => "d(d+2)/2",
                        SpecialSize::Tight => "d(d+1)(d+2)/6",
                    },
                );
            }
            c
        }
        None => Condition::fail(ID).with(
            "admissible",
            sizes
                .iter()
                .map(|e| e.n.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
    })
}

pub fn leven_report(d: u64, n: u64) -> Result<LevenFeasibility> {
    check_domain(d, n)?;
    let a2 = alpha_sq(d, n)?;
    let (params, spec) = leven_srg(d, n)?;
    let mut srg = consistency_check(&params);
    for (name, v) in [
        ("v", &params.v),
        ("k", &params.k),
        ("lambda", &params.lambda),
        ("mu", &params.mu),
        ("r1", &spec.r1),
        ("r2", &spec.r2),
    ] {
        srg = srg.with(name, v.clone());
    }
    let mut two = two_distance_bound_check(d, n)?;
    let mut notes = Vec::new();
    match embedding_angles(d, n) {
        Ok((neg, pos)) => two = two.with("angle_neg", neg).with("angle_pos", pos),
        Err(e) => notes.push(format!("no two-distance embedding: {e}")),
    }
    if 2 * n == d * (d + 2) {
        notes.push("n = d(d+2)/2 bypasses the parametrized family; integrality then needs sqrt(d) integral".into());
    }
    let conditions = vec![
        alpha_condition(d, &a2)?,
        al_integrality(d, n)?,
        srg,
        krein_condition(&params),
        enum_condition(d, n)?,
        two,
    ];
    let verdict = aggregate(&conditions);
    Ok(LevenFeasibility {
        d,
        n,
        alpha_sq: a2,
        conditions,
        verdict,
        notes,
    })
}

/// Sizes `2 d(d+2)(d-1+a)/(3a)` for integers `a` in `[3, 2(d-1)(d+2)/(d+5)]`
/// plus `d(d+2)`, restricted to even values; ascending.
pub fn antipodal_4_5_sizes(d: u64) -> Result<AntipodalSizes> {
    if d < 4 {
        return Err(Error::DimensionTooSmall(d));
    }
    let base = d * (d + 2);
    let mut cands = Vec::new();
    for a in 3..=alpha_max(d) {
        let num = 2 * base * (d - 1 + a);
        if num.is_multiple_of(3 * a) {
            cands.push(num / (3 * a));
        }
    }
    cands.push(base);
    cands.sort_unstable();
    cands.dedup();
    let (sizes, dropped_odd) = cands.into_iter().partition(|n| n % 2 == 0);
    Ok(AntipodalSizes { sizes, dropped_odd })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::report::{Status, WitnessValue};

    fn ns(v: &[SizeEntry]) -> Vec<u64> {
        v.iter().map(|e| e.n).collect()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_sq(7, 63).unwrap(), rat(1, 4));
        assert_eq!(alpha_sq(22, 1408).unwrap(), rat(1, 9));
        assert_eq!(alpha_sq(4, 20).unwrap(), rat(3, 8));
        assert!(alpha_sq(7, 28).is_err());
    }

    #[test]
    fn srg_examples() {
        let (p, s) = leven_srg(7, 63).unwrap();
        assert_eq!(p, SrgParams::new(63, 32, 16, 16));
        assert_eq!((s.r1, s.r2), (Surd::from_int(4), Surd::from_int(-4)));
        assert_eq!((s.n1, s.n2), (Surd::from_int(27), Surd::from_int(35)));
        let (p, _) = leven_srg(22, 1408).unwrap();
        assert_eq!(p.k, Surd::from_int(567));
    }

    #[test]
    fn integrality_examples() {
        let c = al_integrality(7, 63).unwrap();
        assert!(c.passed());
        assert_eq!(c.get("1/alpha"), Some(&WitnessValue::from(int(2))));
        assert_eq!(c.get("(n-d)/(d alpha)"), Some(&WitnessValue::from(int(16))));
        assert_eq!(al_integrality(7, 42).unwrap().status, Status::Fail);
        assert_eq!(al_integrality(4, 20).unwrap().status, Status::Fail);
    }

    #[test]
    fn enumeration_examples() {
        let all = enumerate_sizes(7, false).unwrap();
        assert_eq!(ns(&all), [35, 39, 42, 63, 84]);
        assert_eq!(ns(&enumerate_sizes(7, true).unwrap()), [63]);
        let e63 = all.iter().find(|e| e.n == 63).unwrap();
        assert_eq!(e63.alpha, Some(3));
        assert!(e63.in_window);
        assert_eq!(all.last().unwrap().special, Some(SpecialSize::Tight));
    }

    #[test]
    fn enumeration_stays_in_window_or_special() {
        for d in 4..=40u64 {
            for e in enumerate_sizes(d, false).unwrap() {
                assert!(e.in_window || e.special.is_some(), "d={d} n={}", e.n);
                let (p, s) = leven_srg(d, e.n).unwrap();
                let one = Surd::from_int(1);
                assert_eq!(
                    &p.k * (&p.k - &p.lambda - &one),
                    (&p.v - &p.k - &one) * &p.mu
                );
                assert_eq!(&one + &s.n1 + &s.n2, p.v);
                assert_eq!(&p.k + &s.n1 * &s.r1 + &s.n2 * &s.r2, Surd::zero());
            }
        }
    }

    #[test]
    fn al_pass_matches_graph_eigenvalue() {
        for d in 4..=40u64 {
            for e in enumerate_sizes(d, true).unwrap() {
                let (_, s) = leven_srg(d, e.n).unwrap();
                let r2 = -alpha_sq(d, e.n).unwrap().recip();
                assert!(r2.is_integer());
                assert_eq!(s.r2, Surd::from(r2));
            }
        }
    }

    #[test]
    fn angles() {
        assert_eq!(embedding_angles(7, 63).unwrap(), (rat(-1, 8), rat(1, 10)));
        assert_eq!(embedding_angles(4, 14).unwrap(), (rat(-2, 5), rat(1, 2)));
        assert!(embedding_angles(4, 12).is_err());
        for d in 4..30u64 {
            for n in d * (d + 1) / 2 + 1..d * d * d {
                if 2 * n == d * (d + 2) {
                    continue;
                }
                let (neg, pos) = embedding_angles(d, n).unwrap();
                assert!(neg < int(0) && pos > int(0));
            }
        }
    }

    #[test]
    fn two_distance_examples() {
        assert!(two_distance_bound_check(7, 63).unwrap().passed());
        assert!(!two_distance_bound_check(7, 34).unwrap().passed());
        for d in 2..40 {
            assert!(two_distance_bound_check(d, d * (d + 3) / 2)
                .unwrap()
                .passed());
        }
    }

    #[test]
    fn reports() {
        let r = leven_report(7, 63).unwrap();
        assert_eq!(r.verdict, Verdict::Feasible);
        assert!(r.conditions.iter().all(|c| c.passed()));
        assert_eq!(leven_report(7, 42).unwrap().verdict, Verdict::Infeasible);
        let small = leven_report(3, 7).unwrap();
        assert_eq!(
            small.condition("al_integrality").unwrap().status,
            Status::NotApplicable
        );
    }

    #[test]
    fn antipodal_sizes() {
        let s = antipodal_4_5_sizes(7).unwrap();
        assert_eq!(s.sizes, [70, 78, 84, 126]);
        assert_eq!(s.dropped_odd, [63, 105]);
        for d in 4..60u64 {
            let top = 2 * d * (d + 2) * (d + 2);
            if top % 9 == 0 {
                assert_eq!(
                    *antipodal_4_5_sizes(d).unwrap().sizes.last().unwrap(),
                    top / 9
                );
            }
        }
    }
}
