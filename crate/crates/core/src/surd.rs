//! Exact arithmetic in a real quadratic field `Q(√D)`.
//!
//! Elements are `a + b√D` with rational `a`, `b`. A perfect-square `D` is
//! folded into `a`, so `b != 0` always means `√D` is irrational and the
//! representation is unique. Purely rational values carry `D = 0`, which lets
//! them mix with any radicand.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::exact_sqrt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticSurd {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

impl QuadraticSurd {
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Self {
        assert!(!d.is_negative(), "radicand must be nonnegative");
        if b.is_zero() || d.is_zero() {
            return Self::rational(a);
        }
        if let Some(s) = exact_sqrt(&d) {
            return Self::rational(a + b * BigRational::from_integer(s));
        }
        Self { a, b, d }
    }

    /// Like [`QuadraticSurd::new`] but rejects a negative radicand.
    pub fn try_new(a: BigRational, b: BigRational, d: BigInt) -> crate::Result<Self> {
        if d.is_negative() {
            return Err(crate::Error::BadModulus(d.to_string()));
        }
        Ok(Self::new(a, b, d))
    }

    pub fn rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `k · √d`
    pub fn sqrt_times(k: BigRational, d: &BigInt) -> Self {
        Self::new(BigRational::zero(), k, d.clone())
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign decided by comparing `a²` with `b²·D`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sb == Ordering::Equal || sa == sb {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        a + self.b.to_f64().unwrap_or(f64::NAN) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    fn common_d(&self, other: &Self) -> BigInt {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "mixing different quadratic fields");
                self.d.clone()
            }
        }
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, self.d.clone())
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.d);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}*sqrt({})", self.a, sign, self.b.abs(), self.d)
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Add for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn add(self, rhs: Self) -> QuadraticSurd {
        let d = self.common_d(rhs);
        QuadraticSurd::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl Sub for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn sub(self, rhs: Self) -> QuadraticSurd {
        let d = self.common_d(rhs);
        QuadraticSurd::new(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl Mul for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn mul(self, rhs: Self) -> QuadraticSurd {
        let d = self.common_d(rhs);
        let dr = BigRational::from_integer(d.clone());
        QuadraticSurd::new(
            &self.a * &rhs.a + &self.b * &rhs.b * dr,
            &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        )
    }
}

impl Div for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn div(self, rhs: Self) -> QuadraticSurd {
        assert!(!rhs.is_zero(), "division by zero in Q(sqrt D)");
        let norm = &rhs.a * &rhs.a - &rhs.b * &rhs.b * BigRational::from_integer(rhs.d.clone());
        let num = self * &rhs.conjugate();
        QuadraticSurd::new(&num.a / &norm, &num.b / &norm, num.d.clone())
    }
}

impl Neg for &QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        QuadraticSurd::new(-&self.a, -&self.b, self.d.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QuadraticSurd {
            type Output = QuadraticSurd;
            fn $m(self, rhs: Self) -> QuadraticSurd { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for QuadraticSurd {
    type Output = QuadraticSurd;
    fn neg(self) -> QuadraticSurd {
        -&self
    }
}

impl Zero for QuadraticSurd {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn is_zero(&self) -> bool {
        QuadraticSurd::is_zero(self)
    }
}

impl One for QuadraticSurd {
    fn one() -> Self {
        Self::from_int(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn sign_by_squares() {
        let two = BigInt::from(2);
        // 3 - 2√2 > 0, 2 - 2√2 < 0
        assert_eq!(
            QuadraticSurd::new(r(3), r(-2), two.clone()).signum(),
            Ordering::Greater
        );
        assert_eq!(
            QuadraticSurd::new(r(2), r(-2), two.clone()).signum(),
            Ordering::Less
        );
        assert_eq!(
            QuadraticSurd::new(r(-3), r(2), two).signum(),
            Ordering::Less
        );
    }

    #[test]
    fn perfect_square_folds() {
        let x = QuadraticSurd::new(r(1), r(3), BigInt::from(4));
        assert!(x.is_rational());
        assert_eq!(x.rational_part(), &r(7));
    }

    #[test]
    fn field_ops() {
        let d = BigInt::from(3);
        let x = QuadraticSurd::new(r(1), r(1), d.clone());
        let y = &x * &x.conjugate(); // 1 - 3
        assert_eq!(y, QuadraticSurd::from_int(-2));
        let z = &QuadraticSurd::from_int(1) / &x;
        assert_eq!(&z * &x, QuadraticSurd::from_int(1));
        assert!((x.to_f64() - (1.0 + 3f64.sqrt())).abs() < 1e-12);
    }
}
