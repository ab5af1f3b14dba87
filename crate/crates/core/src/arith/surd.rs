use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{int_sqrt, rational_sqrt};
use crate::error::{Error, Result};

/// An element `(num + sur * sqrt(radicand)) / den` of a real quadratic field.
///
/// `radicand` is a positive integer that is not a perfect square, or `1`
/// when `sur` is zero; `den > 0` and `gcd(num, sur, den) = 1`. Two surds can
/// be combined when their radicands differ by a rational square factor;
/// otherwise the `checked_*` methods return `None` and the operator impls
/// panic.
#[derive(Clone, Debug)]
pub struct Surd {
    num: BigInt,
    sur: BigInt,
    den: BigInt,
    radicand: BigInt,
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

impl Surd {
    pub fn from_rational(q: BigRational) -> Self {
        let (num, den) = q.into_raw();
        Self::build(num, BigInt::zero(), den, BigInt::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::build(
            BigInt::from(n),
            BigInt::zero(),
            BigInt::one(),
            BigInt::one(),
        )
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    /// `sqrt(q)` for rational `q >= 0`.
    pub fn sqrt_of(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::NegativeSqrt(q.to_string()));
        }
        Ok(Self::new(BigRational::zero(), BigRational::one(), q))
    }

    /// `rational + coeff * sqrt(r)` for rational `r >= 0`.
    ///
    /// Panics if `r < 0`.
    pub fn new(rational: BigRational, coeff: BigRational, r: &BigRational) -> Self {
        assert!(!r.is_negative(), "negative radicand {r}");
        if coeff.is_zero() || r.is_zero() {
            return Self::from_rational(rational);
        }
        // sqrt(p/q) = sqrt(p q) / q
        let mut radicand = r.numer() * r.denom();
        let mut coeff = coeff / BigRational::from_integer(r.denom().clone());
        for p in SMALL_PRIMES {
            let sq = BigInt::from(p * p);
            while (&radicand % &sq).is_zero() {
                radicand /= &sq;
                coeff *= BigRational::from_integer(BigInt::from(p));
            }
        }
        let root = int_sqrt(&radicand).expect("radicand is positive");
        if root.is_exact {
            return Self::from_rational(
                rational + coeff * BigRational::from_integer(root.floor_root),
            );
        }
        let den = rational.denom().lcm(coeff.denom());
        let num = rational.numer() * (&den / rational.denom());
        let sur = coeff.numer() * (&den / coeff.denom());
        Self::build(num, sur, den, radicand)
    }

    /// Normalizes signs and common factors.
    fn build(mut num: BigInt, mut sur: BigInt, mut den: BigInt, radicand: BigInt) -> Self {
        let radicand = if sur.is_zero() {
            BigInt::one()
        } else {
            radicand
        };
        if den.is_negative() {
            num = -num;
            sur = -sur;
            den = -den;
        }
        let g = den.gcd(&num).gcd(&sur);
        if !g.is_one() && !g.is_zero() {
            num /= &g;
            sur /= &g;
            den /= &g;
        }
        Surd {
            num,
            sur,
            den,
            radicand,
        }
    }

    pub fn rational_part(&self) -> BigRational {
        BigRational::new(self.num.clone(), self.den.clone())
    }

    pub fn coeff(&self) -> BigRational {
        BigRational::new(self.sur.clone(), self.den.clone())
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.sur.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.rational_part())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero() && self.sur.is_zero()
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let a = self.num.sign_cmp();
        let c = self.sur.sign_cmp();
        if c == Ordering::Equal || a == c || a == Ordering::Equal {
            return if c == Ordering::Equal { a } else { c };
        }
        // opposite signs: compare num^2 with sur^2 r; equality is impossible
        // because r is not a perfect square
        if &self.num * &self.num > &self.sur * &self.sur * &self.radicand {
            a
        } else {
            c
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational_part().to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return a;
        }
        let c = self.coeff().to_f64().unwrap_or(f64::NAN);
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        a + c * r.sqrt()
    }

    /// Conjugate `rational - coeff * sqrt(radicand)`.
    pub fn conjugate(&self) -> Self {
        Surd {
            num: self.num.clone(),
            sur: -&self.sur,
            den: self.den.clone(),
            radicand: self.radicand.clone(),
        }
    }

    /// Both operands over a common radicand, if one exists.
    fn unify<'a>(&'a self, other: &'a Self) -> Option<(Cow<'a, Surd>, Cow<'a, Surd>, &'a BigInt)> {
        if other.is_rational() || self.radicand == other.radicand {
            return Some((Cow::Borrowed(self), Cow::Borrowed(other), &self.radicand));
        }
        if self.is_rational() {
            return Some((Cow::Borrowed(self), Cow::Borrowed(other), &other.radicand));
        }
        // sqrt(r2) = sqrt(r1 r2) / r1 * sqrt(r1) when r1 r2 is a square
        let root = int_sqrt(&(&self.radicand * &other.radicand)).ok()?;
        if !root.is_exact {
            return None;
        }
        let lifted = Surd {
            num: &other.num * &self.radicand,
            sur: &other.sur * root.floor_root,
            den: &other.den * &self.radicand,
            radicand: self.radicand.clone(),
        };
        Some((Cow::Borrowed(self), Cow::Owned(lifted), &self.radicand))
    }

    fn add_like(&self, other: &Self, negate: bool) -> Option<Self> {
        let (x, y, r) = self.unify(other)?;
        let (yn, ys) = if negate {
            (-&y.num, -&y.sur)
        } else {
            (y.num.clone(), y.sur.clone())
        };
        if x.den == y.den {
            return Some(Self::build(
                &x.num + yn,
                &x.sur + ys,
                x.den.clone(),
                r.clone(),
            ));
        }
        Some(Self::build(
            &x.num * &y.den + yn * &x.den,
            &x.sur * &y.den + ys * &x.den,
            &x.den * &y.den,
            r.clone(),
        ))
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        self.add_like(other, false)
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.add_like(other, true)
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let (x, y, r) = self.unify(other)?;
        let num = &x.num * &y.num + &x.sur * &y.sur * r;
        let sur = &x.num * &y.sur + &x.sur * &y.num;
        Some(Self::build(num, sur, &x.den * &y.den, r.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let inv = other.recip()?;
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.num * &self.num - &self.sur * &self.sur * &self.radicand;
        Some(Self::build(
            &self.den * &self.num,
            -(&self.den * &self.sur),
            norm,
            self.radicand.clone(),
        ))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::build(
            &self.num * q.numer(),
            &self.sur * q.numer(),
            &self.den * q.denom(),
            self.radicand.clone(),
        )
    }

    /// Nonnegative square root inside the same quadratic field (or a new
    /// one, when `self` is rational), `None` if it does not exist there.
    pub fn sqrt(&self) -> Option<Self> {
        if self.signum() == Ordering::Less {
            return None;
        }
        if self.is_rational() {
            return Some(Self::sqrt_of(&self.rational_part()).expect("nonnegative"));
        }
        // (u + v sqrt r)^2 = x + y sqrt r  <=>  u^2 + r v^2 = x, 2uv = y
        let x = self.rational_part();
        let y = self.coeff();
        let r = BigRational::from_integer(self.radicand.clone());
        let norm = &x * &x - &y * &y * &r;
        let root = rational_sqrt(&norm).ok().flatten()?;
        let two = BigRational::from_integer(BigInt::from(2));
        for u_sq in [(&x + &root) / &two, (&x - &root) / &two] {
            if u_sq.is_negative() || u_sq.is_zero() {
                continue;
            }
            if let Some(u) = rational_sqrt(&u_sq).ok().flatten() {
                let v = &y / (&two * &u);
                let cand = Self::from_parts(u, v, self.radicand.clone());
                return Some(if cand.signum() == Ordering::Less {
                    -cand
                } else {
                    cand
                });
            }
        }
        None
    }

    /// `rational + coeff * sqrt(radicand)` for an already reduced radicand.
    fn from_parts(rational: BigRational, coeff: BigRational, radicand: BigInt) -> Self {
        let den = rational.denom().lcm(coeff.denom());
        let num = rational.numer() * (&den / rational.denom());
        let sur = coeff.numer() * (&den / coeff.denom());
        Self::build(num, sur, den, radicand)
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        match self.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        match self.checked_sub(other) {
            Some(d) => d.is_zero(),
            // 1, sqrt(r1), sqrt(r2) are linearly independent over Q
            None => false,
        }
    }
}

impl PartialOrd for Surd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.checked_sub(other).map(|d| d.signum())
    }
}

impl From<BigRational> for Surd {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for Surd {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rational = self.rational_part();
        if self.is_rational() {
            return write!(f, "{rational}");
        }
        if !rational.is_zero() {
            write!(f, "{rational} ")?;
            f.write_str(if self.sur.is_negative() { "- " } else { "+ " })?;
        } else if self.sur.is_negative() {
            f.write_str("-")?;
        }
        let c = self.coeff().abs();
        if !c.is_one() {
            write!(f, "{c}*")?;
        }
        write!(f, "sqrt({})", self.radicand)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            num: -self.num,
            sur: -self.sur,
            den: self.den,
            radicand: self.radicand,
        }
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        -self.clone()
    }
}

macro_rules! surd_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Surd> for &Surd {
            type Output = Surd;
            fn $method(self, rhs: &Surd) -> Surd {
                self.$checked(rhs).unwrap_or_else(|| {
                    panic!(
                        "incompatible quadratic fields: {} {} {}",
                        self,
                        stringify!($method),
                        rhs
                    )
                })
            }
        }
        impl $trait<Surd> for Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Surd> for Surd {
            type Output = Surd;
            fn $method(self, rhs: &Surd) -> Surd {
                (&self).$method(rhs)
            }
        }
        impl $trait<Surd> for &Surd {
            type Output = Surd;
            fn $method(self, rhs: Surd) -> Surd {
                self.$method(&rhs)
            }
        }
    };
}

surd_binop!(Add, add, checked_add);
surd_binop!(Sub, sub, checked_sub);
surd_binop!(Mul, mul, checked_mul);
surd_binop!(Div, div, checked_div);
