//! Harmonic dimensions, Gegenbauer polynomials normalized by
//! `G_k(1) = h_k`, Gegenbauer expansions, and annihilator polynomials.
//!
//! Polynomials are generic over their coefficient type so the same
//! expansion code runs over exact rationals and over `f64` (the latter for
//! angle sets with irrational members such as `±1/sqrt(5)`).

use std::fmt::Debug;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{big, binomial, BigInt, BigRational};
use crate::error::{Error, Result};

/// Coefficient field for [`Polynomial`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + std::ops::Div<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn from_rational(q: &BigRational) -> Self;
}

impl Scalar for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl Scalar for f64 {
    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T: Scalar = BigRational> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial<BigRational> {
    pub fn to_f64(&self) -> Polynomial<f64> {
        self.map(f64::from_rational)
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

/// Coefficients `f_k` with `p(x) = sum_k f_k G_k^{(d)}(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GegenbauerExpansion<T: Scalar = BigRational> {
    pub dimension: u64,
    pub coeffs: Vec<T>,
}

impl<T: Scalar> GegenbauerExpansion<T> {
    /// `f_k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `sum_k f_k G_k^{(d)}`.
    pub fn recombine(&self) -> Polynomial<T> {
        let family = gegenbauer_family(self.dimension, self.coeffs.len().saturating_sub(1))
            .expect("dimension validated at construction");
        self.coeffs
            .iter()
            .zip(&family)
            .fold(Polynomial::zero(), |acc, (f, g)| {
                &acc + &g.map(T::from_rational).scale(f)
            })
    }
}

fn check_dim(d: u64) -> Result<()> {
    if d < 2 {
        Err(Error::DimensionTooSmall(d))
    } else {
        Ok(())
    }
}

/// Dimension `h_k` of degree-`k` harmonic polynomials in `d` variables.
pub fn harm_dim(d: u64, k: u64) -> Result<BigInt> {
    check_dim(d)?;
    Ok(match k {
        0 => BigInt::one(),
        1 => BigInt::from(d),
        _ => binomial(d + k - 1, k) - binomial(d + k - 3, k - 2),
    })
}

/// Ratio `(d+k-3)/(d+2k-4)` in the three-term recurrence; 1 at the
/// removable singularity `d = 2, k = 1`.
fn recurrence_ratio(d: u64, k: u64) -> BigRational {
    let den = d + 2 * k - 4;
    if den == 0 {
        return BigRational::one();
    }
    BigRational::new(BigInt::from(d + k - 3), BigInt::from(den))
}

/// `G_0, ..., G_kmax` in dimension `d`, exact.
pub fn gegenbauer_family(d: u64, kmax: usize) -> Result<Vec<Polynomial>> {
    check_dim(d)?;
    let mut family = vec![Polynomial::constant(BigRational::one())];
    if kmax == 0 {
        return Ok(family);
    }
    family.push(Polynomial::new(vec![BigRational::zero(), big(d)]));
    let x = Polynomial::x();
    for k in 1..kmax as u64 {
        // (k+1)/(d+2k) G_{k+1} = x G_k - ratio G_{k-1}
        let lhs =
            &(&x * &family[k as usize]) - &family[k as usize - 1].scale(&recurrence_ratio(d, k));
        let factor = BigRational::new(BigInt::from(d + 2 * k), BigInt::from(k + 1));
        family.push(lhs.scale(&factor));
    }
    Ok(family)
}

/// `G_k^{(d)}` with exact rational coefficients.
pub fn gegenbauer_poly(d: u64, k: usize) -> Result<Polynomial> {
    Ok(gegenbauer_family(d, k)?.pop().expect("family is nonempty"))
}

/// Exact value of `G_k^{(d)}(x)` at a rational point.
pub fn gegenbauer_eval(d: u64, k: usize, x: &BigRational) -> Result<BigRational> {
    Ok(gegenbauer_values(d, k, x)?.pop().expect("nonempty"))
}

/// Exact values `G_0(x), ..., G_kmax(x)` by the three-term recurrence.
pub fn gegenbauer_values(d: u64, kmax: usize, x: &BigRational) -> Result<Vec<BigRational>> {
    check_dim(d)?;
    let mut vals = vec![BigRational::one()];
    if kmax >= 1 {
        vals.push(big(d) * x);
    }
    for k in 1..kmax as u64 {
        let lhs = x * &vals[k as usize] - recurrence_ratio(d, k) * &vals[k as usize - 1];
        vals.push(lhs * BigRational::new(BigInt::from(d + 2 * k), BigInt::from(k + 1)));
    }
    Ok(vals)
}

/// Double-precision values `G_0(x), ..., G_kmax(x)`.
pub fn gegenbauer_values_f64(d: u64, kmax: usize, x: f64) -> Result<Vec<f64>> {
    check_dim(d)?;
    let df = d as f64;
    let mut vals = Vec::with_capacity(kmax + 1);
    vals.push(1.0);
    if kmax >= 1 {
        vals.push(df * x);
    }
    for k in 1..kmax {
        let kf = k as f64;
        let den = df + 2.0 * kf - 4.0;
        let ratio = if den == 0.0 {
            1.0
        } else {
            (df + kf - 3.0) / den
        };
        let next = (x * vals[k] - ratio * vals[k - 1]) * (df + 2.0 * kf) / (kf + 1.0);
        vals.push(next);
    }
    Ok(vals)
}

/// Double-precision `G_k^{(d)}(x)`.
pub fn gegenbauer_eval_f64(d: u64, k: usize, x: f64) -> Result<f64> {
    Ok(gegenbauer_values_f64(d, k, x)?[k])
}

/// Gegenbauer coefficients of `p` in dimension `d`, by peeling off the
/// leading term against `G_m` from the top degree down.
pub fn gegenbauer_expand<T: Scalar>(p: &Polynomial<T>, d: u64) -> Result<GegenbauerExpansion<T>> {
    check_dim(d)?;
    let Some(deg) = p.degree() else {
        return Ok(GegenbauerExpansion {
            dimension: d,
            coeffs: Vec::new(),
        });
    };
    let family: Vec<Polynomial<T>> = gegenbauer_family(d, deg)?
        .iter()
        .map(|g| g.map(T::from_rational))
        .collect();
    let mut rest = p.clone();
    let mut coeffs = vec![T::zero(); deg + 1];
    for m in (0..=deg).rev() {
        let lead = family[m].coeff(m);
        let f = rest.coeff(m) / lead;
        rest = &rest - &family[m].scale(&f);
        // drop the (possibly inexact) top coefficient in float mode
        rest = Polynomial::new(rest.coeffs.iter().take(m).cloned().collect());
        coeffs[m] = f;
    }
    Ok(GegenbauerExpansion {
        dimension: d,
        coeffs,
    })
}

/// `prod_{a in angles} (x - a)/(1 - a)` with exact coefficients.
///
/// The empty angle set gives the constant polynomial 1.
pub fn annihilator(angles: &[BigRational]) -> Result<Polynomial> {
    let one = BigRational::one();
    angles
        .iter()
        .try_fold(Polynomial::constant(one.clone()), |acc, a| {
            if *a == one {
                return Err(Error::AngleIsOne);
            }
            let denom = &one - a;
            let factor = Polynomial::new(vec![-a / &denom, &one / &denom]);
            Ok(&acc * &factor)
        })
}

/// Real-coefficient annihilator for angle sets with irrational members.
pub fn annihilator_f64(angles: &[f64]) -> Result<Polynomial<f64>> {
    angles
        .iter()
        .try_fold(Polynomial::constant(1.0), |acc, &a| {
            if (1.0 - a).abs() < f64::EPSILON {
                return Err(Error::AngleIsOne);
            }
            let factor = Polynomial::new(vec![-a / (1.0 - a), 1.0 / (1.0 - a)]);
            Ok(&acc * &factor)
        })
}
