//! Exact scalars: arbitrary-precision rationals and values `a + b·√d`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand constructor, `rat(1, 3)` is one third.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `"p/q"` text form, always with an explicit denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`. Decimal points are rejected so
/// that no value silently loses exactness.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::validation("scalar", format!("malformed rational {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::validation("scalar", format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact sign as -1, 0 or +1.
pub fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Square root of a rational when it is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// The arithmetic the geometric constructions need from a scalar.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: &Rational) -> Self;
    fn sign(&self) -> i8;
    fn approx(&self) -> f64;
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn sign(&self) -> i8 {
        sign_of(self)
    }
    fn approx(&self) -> f64 {
        to_f64(self)
    }
}

/// `a + b·√d` with rational `a`, `b` and radicand `d ≥ 0`.
///
/// Values whose radicand is a rational square (or whose `b` vanishes) are
/// kept in pure rational form `b = 0, d = 0`. Binary operations require both
/// operands to live in the same quadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::DegenerateInput(format!(
                "negative radicand {}",
                format_rational(&d)
            )));
        }
        Ok(Self::normalized(a, b, d))
    }

    fn normalized(a: Rational, b: Rational, d: Rational) -> Self {
        if b.is_zero() || d.is_zero() {
            return QuadExt {
                a,
                b: Rational::zero(),
                d: Rational::zero(),
            };
        }
        if let Some(root) = rational_sqrt(&d) {
            return QuadExt {
                a: a + b * root,
                b: Rational::zero(),
                d: Rational::zero(),
            };
        }
        QuadExt { a, b, d }
    }

    /// Like `normalized`, for a radicand already known not to be a square.
    fn in_field(a: Rational, b: Rational, d: Rational) -> Self {
        if b.is_zero() || d.is_zero() {
            return QuadExt::rational(a);
        }
        QuadExt { a, b, d }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: Rational::zero(),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }
    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Radicand shared by two operands. Panics on mixed fields, which would
    /// be a construction bug: every value in one computation comes from a
    /// single quadratic.
    fn common_radicand(&self, other: &Self) -> Rational {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Rational::zero(),
            (false, true) => self.d.clone(),
            (true, false) => other.d.clone(),
            (false, false) => {
                assert_eq!(self.d, other.d, "QuadExt operands from different fields");
                self.d.clone()
            }
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `a² - b²d`, the field norm.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.d
    }

    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * &self.d)) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * to_f64(&self.d).sqrt()
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        match (self.clone() - other.clone()).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", format_rational(&self.a))
        } else {
            write!(
                f,
                "{} + {}*sqrt({})",
                format_rational(&self.a),
                format_rational(&self.b),
                format_rational(&self.d)
            )
        }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        let d = self.common_radicand(&rhs);
        QuadExt::in_field(self.a + rhs.a, self.b + rhs.b, d)
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        let d = self.common_radicand(&rhs);
        QuadExt::in_field(self.a - rhs.a, self.b - rhs.b, d)
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        let d = self.common_radicand(&rhs);
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt::in_field(a, b, d)
    }
}

impl Div for QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: QuadExt) -> QuadExt {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in QuadExt");
        let num = self * rhs.conjugate();
        QuadExt::in_field(num.a / &n, num.b / &n, num.d)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        // √d is irrational whenever b ≠ 0.
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }
}

impl Field for QuadExt {
    fn from_rational(r: &Rational) -> Self {
        QuadExt::rational(r.clone())
    }
    fn sign(&self) -> i8 {
        self.signum()
    }
    fn approx(&self) -> f64 {
        self.to_f64()
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::rational(r)
    }
}

/// Wire form `{"a":"p/q","b":"p/q","d":"p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadExtDoc {
    pub a: String,
    pub b: String,
    pub d: String,
}

impl From<&QuadExt> for QuadExtDoc {
    fn from(q: &QuadExt) -> Self {
        QuadExtDoc {
            a: format_rational(&q.a),
            b: format_rational(&q.b),
            d: format_rational(&q.d),
        }
    }
}

impl TryFrom<&QuadExtDoc> for QuadExt {
    type Error = Error;
    fn try_from(doc: &QuadExtDoc) -> Result<Self> {
        QuadExt::new(
            parse_rational(&doc.a)?,
            parse_rational(&doc.b)?,
            parse_rational(&doc.d)?,
        )
    }
}
