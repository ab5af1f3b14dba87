//! Strongly-regular-graph parameter arithmetic: spectrum, multiplicities,
//! Krein conditions, the counting identity and conference-graph detection.
//!
//! Parameters are carried as [`Surd`]s. Rational parameters let the
//! pipelines report a non-integral derived parameter as a witness instead of
//! failing on construction; quadratic-surd parameters arise from the ETF
//! pipeline when the square root in the degree formula is irrational, and
//! keep the Krein evaluation exact there too.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::arith::{BigRational, Surd};
use crate::error::{Error, Result};
use crate::report::Condition;

#[derive(Debug, Clone, PartialEq)]
pub struct SrgParams {
    pub v: Surd,
    pub k: Surd,
    pub lambda: Surd,
    pub mu: Surd,
}

/// Restricted eigenvalues `r1 >= r2` and their multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct SrgSpectrum {
    pub r1: Surd,
    pub r2: Surd,
    pub n1: Surd,
    pub n2: Surd,
}

impl SrgParams {
    pub fn new(v: i64, k: i64, lambda: i64, mu: i64) -> Self {
        SrgParams {
            v: v.into(),
            k: k.into(),
            lambda: lambda.into(),
            mu: mu.into(),
        }
    }

    pub fn from_rationals(
        v: BigRational,
        k: BigRational,
        lambda: BigRational,
        mu: BigRational,
    ) -> Self {
        SrgParams {
            v: v.into(),
            k: k.into(),
            lambda: lambda.into(),
            mu: mu.into(),
        }
    }

    pub fn as_array(&self) -> [&Surd; 4] {
        [&self.v, &self.k, &self.lambda, &self.mu]
    }

    /// `(lambda - mu)^2 + 4 (k - mu)`.
    pub fn discriminant(&self) -> Result<Surd> {
        let lm = self
            .lambda
            .checked_sub(&self.mu)
            .ok_or_else(not_quadratic)?;
        let km = self.k.checked_sub(&self.mu).ok_or_else(not_quadratic)?;
        lm.checked_mul(&lm)
            .and_then(|sq| sq.checked_add(&km.scale(&BigRational::from_integer(4.into()))))
            .ok_or_else(not_quadratic)
    }
}

fn not_quadratic() -> Error {
    Error::NotQuadratic("SRG parameters span more than one quadratic field".into())
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// `(r1, r2, sqrt(discriminant))` with `r1 >= r2`.
fn eigen_parts(p: &SrgParams) -> Result<(Surd, Surd, Surd)> {
    let disc = p.discriminant()?;
    if disc.signum() == Ordering::Less {
        return Err(Error::Precondition(format!(
            "negative SRG discriminant {disc}"
        )));
    }
    let root = disc.sqrt().ok_or_else(|| {
        Error::NotQuadratic(format!("sqrt({disc}) is not in the parameters' field"))
    })?;
    let lm = p.lambda.checked_sub(&p.mu).ok_or_else(not_quadratic)?;
    let r1 = lm
        .checked_add(&root)
        .ok_or_else(not_quadratic)?
        .scale(&half());
    let r2 = lm
        .checked_sub(&root)
        .ok_or_else(not_quadratic)?
        .scale(&half());
    Ok((r1, r2, root))
}

/// The two restricted eigenvalues, `r1 >= r2`.
pub fn eigenvalues(p: &SrgParams) -> Result<(Surd, Surd)> {
    let (r1, r2, _) = eigen_parts(p)?;
    Ok((r1, r2))
}

/// Exact eigenvalues and multiplicities.
///
/// Multiplicities are returned as computed; non-integrality is reported
/// by [`consistency_check`], not here.
pub fn spectrum(p: &SrgParams) -> Result<SrgSpectrum> {
    let (r1, r2, root) = eigen_parts(p)?;
    if root.is_zero() {
        return Err(Error::Precondition(
            "zero SRG discriminant: multiplicities undefined".into(),
        ));
    }
    let one = Surd::from_int(1);
    let two = Surd::from_int(2);
    let nq = || not_quadratic();
    let vm1 = p.v.checked_sub(&one).ok_or_else(nq)?;
    let lm = p.lambda.checked_sub(&p.mu).ok_or_else(nq)?;
    // (2k + (v-1)(lambda-mu)) / sqrt(disc)
    let skew = two
        .checked_mul(&p.k)
        .and_then(|a| a.checked_add(&vm1.checked_mul(&lm)?))
        .and_then(|a| a.checked_div(&root))
        .ok_or_else(nq)?;
    let n1 = vm1.checked_sub(&skew).ok_or_else(nq)?.scale(&half());
    let n2 = vm1.checked_add(&skew).ok_or_else(nq)?.scale(&half());
    Ok(SrgSpectrum { r1, r2, n1, n2 })
}

/// Krein quantities `(K1, K2)`; both are nonnegative for every SRG.
///
/// With `s = r1 + r2`, `p = r1 r2` and `delta = r1 - r2`:
/// `K1, K2 = (sym -/+ delta * anti) / 2`, where
/// `sym = (k-1)(s^2 - 2p) + (k - p) s` and `anti = ks + 3k + 3p + s`.
pub fn krein(p: &SrgParams) -> Result<(Surd, Surd)> {
    let (_, _, delta) = eigen_parts(p)?;
    let nq = || not_quadratic();
    let one = Surd::from_int(1);
    let k = &p.k;
    let s = p.lambda.checked_sub(&p.mu).ok_or_else(nq)?;
    let prod = p.mu.checked_sub(k).ok_or_else(nq)?;
    let three = BigRational::from_integer(3.into());
    let sym = k
        .checked_sub(&one)
        .and_then(|km1| {
            let sq = s
                .checked_mul(&s)?
                .checked_sub(&prod.scale(&BigRational::from_integer(2.into())))?;
            km1.checked_mul(&sq)
        })
        .and_then(|a| a.checked_add(&k.checked_sub(&prod)?.checked_mul(&s)?))
        .ok_or_else(nq)?;
    let anti = k
        .checked_mul(&s)
        .and_then(|a| a.checked_add(&k.checked_add(&prod)?.scale(&three)))
        .and_then(|a| a.checked_add(&s))
        .and_then(|a| a.checked_mul(&delta))
        .ok_or_else(nq)?;
    let k1 = sym.checked_sub(&anti).ok_or_else(nq)?.scale(&half());
    let k2 = sym.checked_add(&anti).ok_or_else(nq)?.scale(&half());
    Ok((k1, k2))
}

/// Integrality, the counting identity `k(k-lambda-1) = (v-k-1)mu`, and
/// integral multiplicities.
pub fn consistency_check(p: &SrgParams) -> Condition {
    let mut failures: Vec<String> = Vec::new();
    for (name, value) in ["v", "k", "lambda", "mu"].iter().zip(p.as_array()) {
        match value.to_integer() {
            None => failures.push(format!("{name} = {value} is not an integer")),
            Some(n) if n.is_negative() => failures.push(format!("{name} = {n} is negative")),
            Some(_) => {}
        }
    }
    if p.k.partial_cmp(&p.v) != Some(Ordering::Less) {
        failures.push(format!("k = {} is not below v = {}", p.k, p.v));
    }
    let one = Surd::from_int(1);
    let counting =
        p.k.checked_sub(&p.lambda)
            .and_then(|a| a.checked_sub(&one))
            .and_then(|a| a.checked_mul(&p.k))
            .zip(
                p.v.checked_sub(&p.k)
                    .and_then(|a| a.checked_sub(&one))
                    .and_then(|a| a.checked_mul(&p.mu)),
            );
    let mut cond = Condition::pass("srg_consistency");
    match counting {
        Some((lhs, rhs)) => {
            if lhs != rhs {
                failures.push(format!("k(k-lambda-1) = {lhs} != (v-k-1)mu = {rhs}"));
            }
            cond = cond.with("k(k-lambda-1)", lhs).with("(v-k-1)mu", rhs);
        }
        None => failures.push("parameters span more than one quadratic field".into()),
    }
    match spectrum(p) {
        Ok(spec) => {
            for (name, m) in [("n1", &spec.n1), ("n2", &spec.n2)] {
                match m.to_integer() {
                    Some(n) if !n.is_negative() => {}
                    _ => failures.push(format!(
                        "multiplicity {name} = {m} is not a nonnegative integer"
                    )),
                }
            }
            cond = cond.with("n1", spec.n1).with("n2", spec.n2);
        }
        Err(e) => failures.push(format!("spectrum unavailable: {e}")),
    }
    if !failures.is_empty() {
        cond.status = crate::report::Status::Fail;
        cond = cond.with("failures", failures.join("; "));
    }
    cond
}

/// Parameters of the form `(v, (v-1)/2, (v-5)/4, (v-1)/4)`.
pub fn is_conference(p: &SrgParams) -> bool {
    let one = Surd::from_int(1);
    let Some(vm1) = p.v.checked_sub(&one) else {
        return false;
    };
    let Some(vm5) = p.v.checked_sub(&Surd::from_int(5)) else {
        return false;
    };
    let q = |n: i64| BigRational::new(1.into(), n.into());
    p.k == vm1.scale(&q(2)) && p.lambda == vm5.scale(&q(4)) && p.mu == vm1.scale(&q(4))
}
