//! Exact-or-float scalars with one-way promotion integer → rational → float.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarKind {
    Integer,
    Rational,
    Float,
}

/// A structure constant or element coordinate.
///
/// Rationals are kept reduced with a positive denominator; a rational with
/// denominator one is always stored as `Int`. Floats are always finite.
#[derive(Debug, Clone)]
pub enum Scalar {
    Int(BigInt),
    Rational(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Int(BigInt::zero())
    }

    pub fn one() -> Self {
        Scalar::Int(BigInt::one())
    }

    pub fn int(v: i64) -> Self {
        Scalar::Int(BigInt::from(v))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        if r.is_integer() {
            Scalar::Int(r.to_integer())
        } else {
            Scalar::Rational(r)
        }
    }

    /// Wraps a float; non-finite values are rejected.
    pub fn float(v: f64) -> Option<Self> {
        v.is_finite().then_some(Scalar::Float(v))
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Int(_) => ScalarKind::Integer,
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::Float(_) => ScalarKind::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Float(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Int(n) => n.to_f64().unwrap_or(f64::NAN),
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(v) => *v,
        }
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Int(n) => Some(BigRational::from_integer(n.clone())),
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Float(_) => None,
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(n) => Some(n.clone()),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Float(v) => *v == 0.0,
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Int(n) => n.signum().to_i32().unwrap_or(0),
            Scalar::Rational(r) => r.signum().to_integer().to_i32().unwrap_or(0),
            Scalar::Float(v) => {
                if *v > 0.0 {
                    1
                } else if *v < 0.0 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn recip(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Int(n) => Scalar::from_rational(BigRational::new(BigInt::one(), n.clone())),
            Scalar::Rational(r) => Scalar::from_rational(r.recip()),
            Scalar::Float(v) => Scalar::Float(1.0 / v),
        })
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(n.abs()),
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            Scalar::Float(v) => Scalar::Float(v.abs()),
        }
    }

    /// Exact equality for exact pairs; float comparison otherwise.
    pub fn exact_eq(&self, other: &Scalar) -> bool {
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }

    fn binary(
        &self,
        other: &Scalar,
        exact: impl Fn(BigRational, BigRational) -> BigRational,
        float: impl Fn(f64, f64) -> f64,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                Scalar::from_rational(exact(BigRational::from_integer(a.clone()), BigRational::from_integer(b.clone())))
            }
            (Scalar::Float(_), _) | (_, Scalar::Float(_)) => Scalar::Float(float(self.to_f64(), other.to_f64())),
            _ => Scalar::from_rational(exact(self.to_rational().unwrap(), other.to_rational().unwrap())),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.exact_eq(other)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self.to_rational(), other.to_rational()) {
            (Some(a), Some(b)) => Some(a.cmp(&b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::Int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::from_rational(v)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if let (Scalar::Int(a), Scalar::Int(b)) = (self, rhs) {
            return Scalar::Int(a + b);
        }
        self.binary(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if let (Scalar::Int(a), Scalar::Int(b)) = (self, rhs) {
            return Scalar::Int(a - b);
        }
        self.binary(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let (Scalar::Int(a), Scalar::Int(b)) = (self, rhs) {
            return Scalar::Int(a * b);
        }
        self.binary(rhs, |a, b| a * b, |a, b| a * b)
    }
}

/// Division by an exact zero panics; callers check with [`Scalar::is_zero`].
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, |a, b| a / b, |a, b| a / b)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(n) => Scalar::Int(-n),
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Float(v) => Scalar::Float(-v),
        }
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);
owned_op!(Div, div);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Float(v) => {
                if v.fract() == 0.0 && v.abs() < 1e15 {
                    write!(f, "{v:.1}")
                } else {
                    write!(f, "{v}")
                }
            }
        }
    }
}

/// Parses `"7"`, `"-3/4"` or a decimal float such as `"0.5"`.
impl std::str::FromStr for Scalar {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
            let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            return Ok(Scalar::from_rational(BigRational::new(p, q)));
        }
        if let Ok(n) = s.parse::<BigInt>() {
            return Ok(Scalar::Int(n));
        }
        match s.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(Scalar::Float(v)),
            _ => Err(format!("not a number: {s:?}")),
        }
    }
}
