//! Closed-form size bounds for antipodal s-distance sets with strength t,
//! the squared Welch and Levenstein coherence bounds, the Gerzon window, and
//! the best-known-bound dispatcher.
//!
//! Bounds are exact rationals. Coherence bounds are squared so that they
//! stay rational; compare them against squared coherences.

use std::cmp::Ordering;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{big, binomial, BigInt, BigRational};
use crate::error::{Error, Result};
use crate::gegenbauer::harm_dim;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    Dgs,
    NozakiSuda,
    Xxy,
    Table1Row,
    Welch,
    Levenstein,
    Gerzon,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// Present iff `applicable`.
    pub value: Option<BigRational>,
    pub formula_id: FormulaId,
    pub applicable: bool,
    pub note: String,
}

impl BoundReport {
    fn applicable(formula_id: FormulaId, value: BigRational, note: impl Into<String>) -> Self {
        BoundReport {
            value: Some(value),
            formula_id,
            applicable: true,
            note: note.into(),
        }
    }

    fn inapplicable(formula_id: FormulaId, note: impl Into<String>) -> Self {
        BoundReport {
            value: None,
            formula_id,
            applicable: false,
            note: note.into(),
        }
    }

    /// Largest admissible integer size, `floor(value)`.
    pub fn integer_cap(&self) -> Option<BigInt> {
        self.value.as_ref().map(|v| v.floor().to_integer())
    }
}

fn h(d: u64, k: u64) -> BigRational {
    BigRational::from_integer(harm_dim(d, k).expect("d >= 2 checked by caller"))
}

fn two_binom(a: u64, b: u64) -> BigRational {
    BigRational::from_integer(binomial(a, b) * 2)
}

fn check_ds(d: u64, s: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    if s < 1 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    Ok(())
}

fn check_odd_t(t: u64) -> Result<()> {
    if t.is_multiple_of(2) {
        Err(Error::Precondition(format!("strength t = {t} must be odd")))
    } else {
        Ok(())
    }
}

/// `2 C(d+s-2, s-1)`.
pub fn dgs_antipodal(d: u64, s: u64) -> Result<BoundReport> {
    check_ds(d, s)?;
    Ok(BoundReport::applicable(
        FormulaId::Dgs,
        two_binom(d + s - 2, s - 1),
        "absolute bound for antipodal s-distance sets; equality iff tight (2s-1)-design",
    ))
}

/// `2 C(d+s-delta-1, s-delta) - 2 h_{t-s+delta+1}` for odd
/// `t` in `[s-delta-1, 2s-2delta-3]`, `delta = s mod 2`.
pub fn nozaki_suda(d: u64, s: u64, t: u64) -> Result<BoundReport> {
    check_ds(d, s)?;
    check_odd_t(t)?;
    let delta = s % 2;
    let lo = (s + 1).checked_sub(delta + 2);
    let hi = (2 * s + 3).checked_sub(2 * delta + 6);
    let in_range = matches!((lo, hi), (Some(lo), Some(hi)) if lo <= t && t <= hi);
    if !in_range {
        return Ok(BoundReport::inapplicable(
            FormulaId::NozakiSuda,
            format!("t = {t} outside [s-delta-1, 2s-2delta-3] for s = {s}"),
        ));
    }
    let value = two_binom(d + s - delta - 1, s - delta) - h(d, t + delta + 1 - s) * big(2);
    Ok(BoundReport::applicable(FormulaId::NozakiSuda, value, ""))
}

/// `2 C(d+s-2, s-1) - 2 h_{t-s+2}` for even `s` in `[(t+5)/2, t+1]`, `t >= 3`.
pub fn xxy_bound(d: u64, s: u64, t: u64) -> Result<BoundReport> {
    check_ds(d, s)?;
    check_odd_t(t)?;
    if t < 3 || s % 2 == 1 || 2 * s < t + 5 || s > t + 1 {
        return Ok(BoundReport::inapplicable(
            FormulaId::Xxy,
            format!("requires t >= 3 and even s in [(t+5)/2, t+1]; got s = {s}, t = {t}"),
        ));
    }
    let value = two_binom(d + s - 2, s - 1) - h(d, t + 2 - s) * big(2);
    Ok(BoundReport::applicable(FormulaId::Xxy, value, ""))
}

/// The best bound known for `(d, s, t)`, dispatched row by row.
pub fn best_known(d: u64, s: u64, t: u64) -> Result<BoundReport> {
    check_ds(d, s)?;
    check_odd_t(t)?;
    if s < 2 {
        return Err(Error::Precondition("best_known needs s >= 2".into()));
    }
    let dq = big(d);
    let floor_note = |v: &BigRational, row: &str| {
        if v.is_integer() {
            row.to_owned()
        } else {
            format!(
                "{row}; integer sizes must not exceed floor = {}",
                v.floor().to_integer()
            )
        }
    };
    let dgs = two_binom(d + s - 2, s - 1);

    if (s, t) == (3, 3) {
        if d >= 5 {
            let v = big(2) * &dq * (&dq + big(2)) / big(3);
            let note = floor_note(&v, "s=3, t=3 row: 2d(d+2)/3");
            return Ok(BoundReport::applicable(FormulaId::Table1Row, v, note));
        }
        return Ok(BoundReport::applicable(
            FormulaId::Dgs,
            dgs,
            "s=3, t=3 row needs d >= 5; falling back to the absolute bound",
        ));
    }
    if (s, t) == (4, 5) {
        if d >= 4 {
            let dp2 = &dq + big(2);
            let v = big(2) * &dq * &dp2 * &dp2 / big(9);
            let note = floor_note(&v, "s=4, t=5 row: 2d(d+2)^2/9");
            return Ok(BoundReport::applicable(FormulaId::Table1Row, v, note));
        }
        return Ok(BoundReport::applicable(
            FormulaId::Dgs,
            dgs,
            "s=4, t=5 row needs d >= 4; falling back to the absolute bound",
        ));
    }
    if s.is_multiple_of(2) && 2 * s == t + 3 && t >= 7 {
        let ns = two_binom(d + s - 1, s) - h(d, t + 1 - s) * big(2);
        let (winner, v) = match ns.cmp(&dgs) {
            Ordering::Less => ("2C(d+s-1,s) - 2h_{t-s+1}", ns.clone()),
            _ => ("2C(d+s-2,s-1)", dgs.clone()),
        };
        let note = format!(
            "even s=(t+3)/2, t>=7 row: min of 2C(d+s-2,s-1) = {dgs} and 2C(d+s-1,s) - 2h_{{t-s+1}} = {ns}; {winner} wins"
        );
        return Ok(BoundReport::applicable(FormulaId::Table1Row, v, note));
    }
    if s.is_multiple_of(2) {
        let xxy = xxy_bound(d, s, t)?;
        if xxy.applicable {
            return Ok(BoundReport {
                note: "even s in [(t+5)/2, t+1] row".into(),
                ..xxy
            });
        }
    } else if 2 * s >= t + 5 && s <= t + 2 {
        let v = dgs.clone() - h(d, t + 2 - s) * big(2);
        return Ok(BoundReport::applicable(
            FormulaId::Table1Row,
            v,
            "odd s in [(t+5)/2, t+2] row: 2C(d+s-2,s-1) - 2h_{t-s+2}",
        ));
    }
    Ok(BoundReport::applicable(
        FormulaId::Dgs,
        dgs,
        format!("(s, t) = ({s}, {t}) matches no refined row; absolute bound applies"),
    ))
}

/// `(n-d) / (d(n-1))`, the squared Welch bound.
pub fn welch_sq(d: u64, n: u64) -> Result<BigRational> {
    if d == 0 || n <= d {
        return Err(Error::Precondition(format!(
            "Welch bound needs n > d; got d = {d}, n = {n}"
        )));
    }
    Ok(BigRational::new(
        BigInt::from(n - d),
        BigInt::from(d * (n - 1)),
    ))
}

/// `(3n - d(d+2)) / ((d+2)(n-d))`, the squared Levenstein bound, defined
/// for `n > d(d+2)/3`.
pub fn levenstein_sq(d: u64, n: u64) -> Result<BigRational> {
    let num = 3 * n as i128 - (d * (d + 2)) as i128;
    if d == 0 || num <= 0 || n <= d {
        return Err(Error::Precondition(format!(
            "Levenstein bound needs n > d(d+2)/3; got d = {d}, n = {n}"
        )));
    }
    Ok(BigRational::new(
        BigInt::from(num),
        BigInt::from((d + 2) * (n - d)),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GerzonSide {
    Below,
    Inside,
    Above,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GerzonCheck {
    pub side: GerzonSide,
    pub on_lower_boundary: bool,
    pub on_upper_boundary: bool,
    /// `n^2 - (2d+1)n + d^2 - d`; nonnegative iff `n` clears the lower end.
    pub lower_quadratic: BigInt,
    pub upper: BigRational,
}

impl GerzonCheck {
    pub fn inside(&self) -> bool {
        self.side == GerzonSide::Inside
    }
}

/// `d + 1/2 + sqrt(2d + 1/4) <= n <= d(d+1)/2`, decided through the
/// integer quadratic `n^2 - (2d+1)n + d^2 - d >= 0`.
pub fn gerzon_check(d: u64, n: u64) -> Result<GerzonCheck> {
    if !(n > d + 1 && d + 1 > 2) {
        return Err(Error::Precondition(format!(
            "Gerzon window needs n > d+1 > 2; got d = {d}, n = {n}"
        )));
    }
    let (dn, nn) = (BigInt::from(d), BigInt::from(n));
    let q: BigInt = &nn * &nn - (BigInt::from(2) * &dn + 1u32) * &nn + &dn * &dn - &dn;
    let upper = BigRational::new(BigInt::from(d * (d + 1)), BigInt::from(2));
    let nq = BigRational::from_integer(nn);
    let side = if q < BigInt::zero() {
        GerzonSide::Below
    } else if nq > upper {
        GerzonSide::Above
    } else {
        GerzonSide::Inside
    };
    Ok(GerzonCheck {
        side,
        on_lower_boundary: q.is_zero(),
        on_upper_boundary: nq == upper,
        lower_quadratic: q,
        upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{cmp_surd, int, rat};

    fn val(r: Result<BoundReport>) -> Option<BigRational> {
        r.unwrap().value
    }

    #[test]
    fn dgs_examples() {
        assert_eq!(val(dgs_antipodal(3, 3)), Some(int(12)));
        for d in 2..20 {
            assert_eq!(val(dgs_antipodal(d, 2)), Some(big(2 * d)));
        }
        assert_eq!(val(dgs_antipodal(4, 4)), Some(int(40)));
    }

    #[test]
    fn nozaki_suda_examples() {
        assert_eq!(val(nozaki_suda(4, 4, 5)), Some(int(52)));
        for d in 2..10 {
            let r = nozaki_suda(d, 3, 3).unwrap();
            assert!(!r.applicable && r.value.is_none());
        }
        assert_eq!(val(nozaki_suda(3, 5, 5)), Some(int(20)));
        assert!(nozaki_suda(3, 5, 4).is_err());
    }

    #[test]
    fn xxy_examples() {
        assert_eq!(val(xxy_bound(3, 4, 3)), Some(int(14)));
        assert!(!xxy_bound(9, 4, 5).unwrap().applicable);
        assert_eq!(val(xxy_bound(4, 6, 7)), Some(int(80)));
    }

    #[test]
    fn best_known_examples() {
        let r = best_known(7, 4, 5).unwrap();
        assert_eq!(
            (r.value, r.formula_id),
            (Some(int(126)), FormulaId::Table1Row)
        );
        let r = best_known(5, 3, 3).unwrap();
        assert_eq!(r.value, Some(rat(70, 3)));
        assert!(r.note.contains("floor = 23"), "{}", r.note);
        let r = best_known(4, 4, 7).unwrap();
        assert_eq!((r.value, r.formula_id), (Some(int(40)), FormulaId::Dgs));
    }

    #[test]
    fn best_known_min_row_reports_both() {
        // s = 5 would be odd; s = 6, t = 9 is the first even (t+3)/2 row
        let r = best_known(10, 6, 9).unwrap();
        assert_eq!(r.formula_id, FormulaId::Table1Row);
        let dgs = val(dgs_antipodal(10, 6)).unwrap();
        assert!(r.value.clone().unwrap() <= dgs);
        assert!(r.note.contains("min of"));
    }

    #[test]
    fn best_known_never_exceeds_dgs() {
        for d in 2..30u64 {
            for t in (1..=15u64).step_by(2) {
                for s in 2..=t + 3 {
                    let b = best_known(d, s, t).unwrap().value.unwrap();
                    let dgs = val(dgs_antipodal(d, s)).unwrap();
                    assert!(b <= dgs, "d={d} s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn xxy_lowers_dgs_by_two_h() {
        for d in 2..40u64 {
            for t in (3..=15u64).step_by(2) {
                for s in 2..=t + 1 {
                    let r = xxy_bound(d, s, t).unwrap();
                    if r.applicable {
                        let expected = val(dgs_antipodal(d, s)).unwrap() - h(d, t + 2 - s) * big(2);
                        assert_eq!(r.value.unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn size_bound_chain() {
        for d in 4..=50u64 {
            let dq = big(d);
            let a = big(2) * &dq * (&dq + big(2)) * (&dq + big(2)) / big(9);
            let b = &dq * (&dq + big(1)) * (&dq + big(2)) / big(3);
            let c = (&dq + big(2))
                * (&dq * &dq * &dq + big(4) * &dq * &dq - big(9) * &dq + big(12))
                / big(12);
            assert!(a < b && b < c, "d = {d}");
        }
    }

    #[test]
    fn welch_examples() {
        assert_eq!(welch_sq(3, 6).unwrap(), rat(1, 5));
        for d in 2..20 {
            assert_eq!(welch_sq(d, d + 1).unwrap(), rat(1, (d * d) as i64));
        }
        assert_eq!(welch_sq(4, 5).unwrap(), rat(1, 16));
        assert!(welch_sq(4, 4).is_err());
    }

    #[test]
    fn levenstein_examples() {
        assert_eq!(levenstein_sq(7, 63).unwrap(), rat(1, 4));
        assert_eq!(levenstein_sq(4, 20).unwrap(), rat(3, 8));
        assert_eq!(levenstein_sq(23, 2300).unwrap(), rat(1, 9));
        assert!(levenstein_sq(6, 16).is_err());
    }

    #[test]
    fn levenstein_supersedes_welch_past_gerzon() {
        for d in 3..=30u64 {
            let gerzon = d * (d + 1) / 2;
            for n in gerzon + 1..=d * d * d {
                assert!(
                    welch_sq(d, n).unwrap() < levenstein_sq(d, n).unwrap(),
                    "d={d} n={n}"
                );
            }
            // below d(d+1)/2 the Welch bound is the stronger one
            for n in (d * (d + 2) / 3 + 1).max(d + 1)..=gerzon {
                if let Ok(l) = levenstein_sq(d, n) {
                    assert!(welch_sq(d, n).unwrap() >= l, "d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn gerzon_examples() {
        let g = gerzon_check(6, 10).unwrap();
        assert!(g.inside() && g.on_lower_boundary);
        let g = gerzon_check(6, 21).unwrap();
        assert!(g.inside() && g.on_upper_boundary);
        assert_eq!(gerzon_check(6, 22).unwrap().side, GerzonSide::Above);
        assert_eq!(gerzon_check(6, 9).unwrap().side, GerzonSide::Below);
        assert!(gerzon_check(1, 5).is_err());
        assert!(gerzon_check(6, 7).is_err());
    }

    #[test]
    fn gerzon_quadratic_matches_surd_threshold() {
        for d in 2..80u64 {
            let a = BigRational::from_integer(BigInt::from(d)) + rat(1, 2);
            let b = big(2 * d) + rat(1, 4);
            for n in d + 2..d * (d + 1) {
                let by_surd = cmp_surd(&big(n), &a, &b).unwrap() != Ordering::Less;
                let g = gerzon_check(d, n).unwrap();
                assert_eq!(g.side != GerzonSide::Below, by_surd, "d={d} n={n}");
            }
        }
    }
}
