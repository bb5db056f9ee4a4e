//! Exact arithmetic on the extended rationals `Q ∪ {∞}`.
//!
//! A single unsigned infinity is used. Bracket notation such as `[-inf, 96]`
//! only distinguishes `-inf` from `+inf` for display.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

/// An element of `Q ∪ {∞}`, always stored in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtRat {
    Finite(BigRational),
    Infinity,
}

impl ExtRat {
    pub fn infinity() -> Self {
        ExtRat::Infinity
    }

    pub fn zero() -> Self {
        ExtRat::Finite(BigRational::zero())
    }

    pub fn integer(n: i64) -> Self {
        ExtRat::Finite(BigRational::from_integer(n.into()))
    }

    /// `num/den`; a zero denominator gives `∞`.
    ///
    /// Panics on `0/0`, which names no slope.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_coords(BigInt::from(num), BigInt::from(den))
    }

    /// The slope of the homology class with coordinates `(r, s)`, i.e. `r/s`.
    pub fn from_coords(r: BigInt, s: BigInt) -> Self {
        assert!(!(r.is_zero() && s.is_zero()), "(0, 0) is not a slope");
        if s.is_zero() {
            ExtRat::Infinity
        } else {
            ExtRat::Finite(BigRational::new(r, s))
        }
    }

    /// Primitive coordinates `(r, s)` with `s >= 0`; `∞` is `(1, 0)`.
    pub fn coords(&self) -> (BigInt, BigInt) {
        match self {
            ExtRat::Finite(q) => (q.numer().clone(), q.denom().clone()),
            ExtRat::Infinity => (BigInt::one(), BigInt::zero()),
        }
    }

    pub fn numer(&self) -> BigInt {
        self.coords().0
    }

    pub fn denom(&self) -> BigInt {
        self.coords().1
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Infinity)
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExtRat::Finite(q) => Some(q),
            ExtRat::Infinity => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, ExtRat::Finite(q) if q.is_integer())
    }

    /// Negation; `∞` is fixed.
    pub fn neg(&self) -> Self {
        match self {
            ExtRat::Finite(q) => ExtRat::Finite(-q),
            ExtRat::Infinity => ExtRat::Infinity,
        }
    }

    /// `1/y`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        let (r, s) = self.coords();
        ExtRat::from_coords(s, r)
    }
}

impl From<BigRational> for ExtRat {
    fn from(q: BigRational) -> Self {
        ExtRat::Finite(q)
    }
}

impl From<i64> for ExtRat {
    fn from(n: i64) -> Self {
        ExtRat::integer(n)
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Infinity => write!(f, "inf"),
            ExtRat::Finite(q) if q.is_integer() => write!(f, "{}", q.numer()),
            ExtRat::Finite(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl FromStr for ExtRat {
    type Err = Error;

    /// Grammar: `inf | [+-]?digits(/digits)?`, the denominator nonzero.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::SlopeSyntax(s.to_string());
        if s == "inf" {
            return Ok(ExtRat::Infinity);
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = match den {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                d.parse().map_err(|_| bad())?
            }
        };
        if den.is_zero() {
            return Err(Error::ZeroDenominator(s.to_string()));
        }
        Ok(ExtRat::Finite(BigRational::new(num, den)))
    }
}

/// `⌊y·k⌋` for finite `y` and `k >= 1`.
pub fn floor_mul(y: &ExtRat, k: u64) -> Result<BigInt, Error> {
    let q = y.finite().ok_or(Error::InfiniteArgument("floor_mul"))?;
    if k == 0 {
        return Err(Error::NonPositiveMultiplier);
    }
    Ok((q.numer() * BigInt::from(k)).div_floor(q.denom()))
}

/// `⌈y·k⌉` for finite `y` and `k >= 1`.
pub fn ceil_mul(y: &ExtRat, k: u64) -> Result<BigInt, Error> {
    let q = y.finite().ok_or(Error::InfiniteArgument("ceil_mul"))?;
    if k == 0 {
        return Err(Error::NonPositiveMultiplier);
    }
    Ok((q.numer() * BigInt::from(k)).div_ceil(q.denom()))
}

/// Exact sum with `∞` absorbing.
pub fn sum_ext<'a, I>(terms: I) -> ExtRat
where
    I: IntoIterator<Item = &'a ExtRat>,
{
    let mut acc = BigRational::zero();
    for t in terms {
        match t {
            ExtRat::Finite(q) => acc += q,
            ExtRat::Infinity => return ExtRat::Infinity,
        }
    }
    ExtRat::Finite(acc)
}

/// Least common multiple of the denominators of the finite values.
pub fn lcm_of_denominators<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigRational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
