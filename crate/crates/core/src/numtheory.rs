//! Exact rational numbers and integer gcd helpers.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    /// Integer value, when the number is an integer that fits in an `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rat> {
        Rat::one().checked_div(self)
    }

    /// Integer power; negative exponents invert, so zero to a negative power
    /// is a division by zero.
    pub fn pow(&self, exp: i64) -> Result<Rat> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = i32::try_from(exp)
            .map_err(|_| Error::InvalidArgument(format!("exponent {exp} out of range")))?;
        Ok(Rat(num_traits::Pow::pow(&self.0, e)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_integer(n)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("invalid rational {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rat::new(n, d)
            }
            None => Ok(Rat::from_integer(s.trim().parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($tr::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// Result of [`bezout_multi`]: `Σ coeffs[i]·λ[i] = g` with `g = gcd(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutResult {
    pub g: i64,
    pub coeffs: Vec<i64>,
}

impl BezoutResult {
    pub fn combination(&self, values: &[i64]) -> i64 {
        self.coeffs.iter().zip(values).map(|(m, l)| m * l).sum()
    }
}

/// Classical extended Euclid on nonnegative inputs: returns `(g, s, t)` with
/// `s·a + t·b = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    debug_assert!(a >= 0 && b >= 0);
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    (old_r, old_s, old_t)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Multi-integer Bézout coefficients by a left fold of [`ext_gcd`].
///
/// Entries are folded in list order. The first nonzero entry gets
/// coefficient `sign(λ)`. An entry already divisible by the running gcd
/// (zeros included) gets coefficient 0 and leaves earlier coefficients
/// untouched; otherwise the running coefficients are scaled by the extended
/// Euclid cofactor.
pub fn bezout_multi(values: &[i64]) -> Result<BezoutResult> {
    let mut g = 0i64;
    let mut coeffs = vec![0i64; values.len()];
    for (i, &v) in values.iter().enumerate() {
        let a = v.abs();
        if a == 0 {
            continue;
        }
        if g == 0 {
            g = a;
            coeffs[i] = v.signum();
        } else if a % g != 0 {
            let (ng, s, t) = ext_gcd(g, a);
            for c in coeffs.iter_mut().take(i) {
                *c *= s;
            }
            coeffs[i] = t * v.signum();
            g = ng;
        }
    }
    if g == 0 {
        return Err(Error::ZeroGcd);
    }
    Ok(BezoutResult { g, coeffs })
}
