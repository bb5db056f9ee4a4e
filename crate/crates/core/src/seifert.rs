//! Endpoint kernel for Seifert fibered pieces over `S²` or `RP²`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rationals::{lcm_of_denominators, sum_ext, ExtRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// Base orbifold `S²`.
    Orientable,
    /// Base orbifold `RP²`.
    NonOrientable,
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Orientable => write!(f, "S2"),
            Base::NonOrientable => write!(f, "RP2"),
        }
    }
}

/// Base and Seifert slopes `y_i^D` of the root piece.
///
/// Slopes are finite by construction. Integer slopes are allowed; there is
/// no separate Euler-number slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertData {
    pub base: Base,
    slopes: Vec<BigRational>,
}

impl SeifertData {
    pub fn new(base: Base, slopes: &[ExtRat]) -> Result<Self> {
        let slopes = slopes
            .iter()
            .enumerate()
            .map(|(index, y)| {
                y.finite()
                    .cloned()
                    .ok_or(Error::InfiniteSeifertSlope { index })
            })
            .collect::<Result<_>>()?;
        Ok(SeifertData { base, slopes })
    }

    pub fn from_rationals(base: Base, slopes: Vec<BigRational>) -> Self {
        SeifertData { base, slopes }
    }

    pub fn slopes(&self) -> &[BigRational] {
        &self.slopes
    }

    pub fn slopes_ext(&self) -> Vec<ExtRat> {
        self.slopes.iter().cloned().map(ExtRat::Finite).collect()
    }

    pub fn slope_sum(&self) -> BigRational {
        self.slopes
            .iter()
            .fold(BigRational::zero(), |acc, y| acc + y)
    }

    /// Number of exceptional fibers.
    pub fn nonintegral_count(&self) -> usize {
        self.slopes.iter().filter(|y| !y.is_integer()).count()
    }

    pub fn is_orientable(&self) -> bool {
        self.base == Base::Orientable
    }

    pub(crate) fn push_slope(&mut self, y: BigRational) {
        self.slopes.push(y);
    }
}

/// One extremal value of the endpoint search with its least witness `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub value: ExtRat,
    pub witness: u64,
}

impl Endpoint {
    fn infinite() -> Self {
        Endpoint {
            value: ExtRat::Infinity,
            witness: 1,
        }
    }

    fn negated(self) -> Self {
        Endpoint {
            value: self.value.neg(),
            witness: self.witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endpoints {
    pub lower: Endpoint,
    pub upper: Endpoint,
}

impl Endpoints {
    /// `0 = y− = y+`, or `y+ < 0 < y−` on the real line.
    pub fn realizes_zero(&self) -> bool {
        match (self.lower.value.finite(), self.upper.value.finite()) {
            (Some(lo), Some(hi)) => {
                (lo.is_zero() && hi.is_zero()) || (hi.is_negative() && lo.is_positive())
            }
            _ => false,
        }
    }
}

/// Largest `max |numerator|` for which the `i128` path is used, per unit of
/// `bound² · (terms + 2)`.
fn fits_i128(terms: &[&BigRational], bound: u64) -> bool {
    let Some(max_num) = terms
        .iter()
        .map(|q| q.numer().abs().to_u128())
        .try_fold(1u128, |m, n| n.map(|n| m.max(n)))
    else {
        return false;
    };
    let Some(max_den) = terms
        .iter()
        .map(|q| q.denom().to_u128())
        .try_fold(1u128, |m, d| d.map(|d| m.max(d)))
    else {
        return false;
    };
    let b = bound as u128;
    max_num
        .max(max_den)
        .checked_mul(b)
        .and_then(|x| x.checked_mul(b))
        .and_then(|x| x.checked_mul(terms.len() as u128 + 2))
        .is_some_and(|x| x < (i128::MAX as u128))
}

fn search_small(floors: &[(i128, i128)], ceils: &[(i128, i128)], bound: u64) -> (i128, u64) {
    let mut best: Option<(i128, u64)> = None;
    for k in 1..=bound {
        let kk = k as i128;
        let mut sum: i128 = 1;
        for &(n, d) in floors {
            sum += (n * kk).div_euclid(d);
        }
        for &(n, d) in ceils {
            sum += -(-n * kk).div_euclid(d) - 1;
        }
        let f = -sum;
        let better = match best {
            None => true,
            Some((bf, bk)) => f * (bk as i128) > bf * kk,
        };
        if better {
            best = Some((f, k));
        }
    }
    best.expect("bound is at least 1")
}

fn search_big(floors: &[&BigRational], ceils: &[&BigRational], bound: u64) -> (BigInt, u64) {
    let mut best: Option<(BigInt, u64)> = None;
    for k in 1..=bound {
        let kk = BigInt::from(k);
        let mut sum = BigInt::one();
        for q in floors {
            sum += (q.numer() * &kk).div_floor(q.denom());
        }
        for q in ceils {
            sum += (q.numer() * &kk).div_ceil(q.denom()) - 1;
        }
        let f = -sum;
        let better = match &best {
            None => true,
            Some((bf, bk)) => &f * BigInt::from(*bk) > bf * &kk,
        };
        if better {
            best = Some((f, k));
        }
    }
    best.expect("bound is at least 1")
}

fn to_pair(q: &BigRational) -> (i128, i128) {
    (
        q.numer().to_i128().expect("checked by fits_i128"),
        q.denom().to_i128().expect("checked by fits_i128"),
    )
}

/// `max_k −(1/k)(1 + Σ⌊f·k⌋ + Σ(⌈c·k⌉ − 1))` over `1 ≤ k ≤ factor·s`, where
/// `s` is the lcm of all denominators; the least maximizing `k` is returned.
pub fn lower_endpoint(
    floors: &[BigRational],
    ceils_minus_one: &[BigRational],
    factor: u64,
) -> Result<Endpoint> {
    let all: Vec<&BigRational> = floors.iter().chain(ceils_minus_one).collect();
    let s = lcm_of_denominators(all.iter().copied()) * BigInt::from(factor.max(1));
    let bound = s
        .to_u64()
        .ok_or_else(|| Error::SearchBoundTooLarge(s.clone()))?;
    let (value, witness) = if fits_i128(&all, bound) {
        let f: Vec<_> = floors.iter().map(to_pair).collect();
        let c: Vec<_> = ceils_minus_one.iter().map(to_pair).collect();
        let (v, k) = search_small(&f, &c, bound);
        (BigRational::new(v.into(), k.into()), k)
    } else {
        let f: Vec<_> = floors.iter().collect();
        let c: Vec<_> = ceils_minus_one.iter().collect();
        let (v, k) = search_big(&f, &c, bound);
        (BigRational::new(v, k.into()), k)
    };
    Ok(Endpoint {
        value: ExtRat::Finite(value),
        witness,
    })
}

/// `min_k −(1/k)(−1 + Σ⌈c·k⌉ + Σ(⌊f·k⌋ + 1))`, dual to [`lower_endpoint`].
pub fn upper_endpoint(
    ceils: &[BigRational],
    floors_plus_one: &[BigRational],
    factor: u64,
) -> Result<Endpoint> {
    let neg = |v: &[BigRational]| v.iter().map(|q| -q).collect::<Vec<_>>();
    Ok(lower_endpoint(&neg(ceils), &neg(floors_plus_one), factor)?.negated())
}

/// Endpoints of a Seifert piece with daughter endpoint pairs, at `factor`
/// times the lcm bound. An infinite daughter endpoint makes the
/// corresponding endpoint infinite.
pub fn graph_endpoints(
    seifert: &[BigRational],
    pairs: &[(ExtRat, ExtRat)],
    factor: u64,
) -> Result<Endpoints> {
    let finite = |side: fn(&(ExtRat, ExtRat)) -> &ExtRat| -> Option<Vec<BigRational>> {
        pairs.iter().map(|p| side(p).finite().cloned()).collect()
    };
    let lower = match finite(|p| &p.1) {
        Some(plus) => lower_endpoint(seifert, &plus, factor)?,
        None => Endpoint::infinite(),
    };
    let upper = match finite(|p| &p.0) {
        Some(minus) => upper_endpoint(seifert, &minus, factor)?,
        None => Endpoint::infinite(),
    };
    Ok(Endpoints { lower, upper })
}

fn finite_slopes(slopes: &[ExtRat]) -> Result<Vec<BigRational>> {
    slopes
        .iter()
        .enumerate()
        .map(|(index, y)| {
            y.finite()
                .cloned()
                .ok_or(Error::InfiniteSeifertSlope { index })
        })
        .collect()
}

/// Endpoints for the regular fiber complement with Seifert slopes `slopes`.
///
/// The formula is evaluated for any finite list; when at most one slope is
/// non-integral the piece is a solid torus and its interval is instead the
/// complement of the longitude.
pub fn jn_endpoints(slopes: &[ExtRat]) -> Result<Endpoints> {
    if slopes.is_empty() {
        return Err(Error::NoSlopes);
    }
    let ys = finite_slopes(slopes)?;
    graph_endpoints(&ys, &[], 1)
}

/// Endpoints with floor terms on `j ∈ J` and `(ceil − 1)` terms on the rest
/// for `y−`, dually for `y+`.
///
/// Requires at least three slopes, `slopes[0]` integral, the others not, and
/// `0 ∈ J`.
pub fn j_realizable_endpoints(slopes: &[ExtRat], j: &BTreeSet<usize>) -> Result<Endpoints> {
    let ys = finite_slopes(slopes)?;
    if ys.len() < 3 {
        return Err(Error::TooFewFibers(ys.len().saturating_sub(1)));
    }
    if !j.contains(&0) {
        return Err(Error::JWithoutZero);
    }
    if let Some(&index) = j.iter().find(|&&i| i >= ys.len()) {
        return Err(Error::FiberIndex {
            index,
            len: ys.len(),
        });
    }
    if !ys[0].is_integer() {
        return Err(Error::SlopeForm(format!(
            "slope 0 must be an integer, got {}",
            ExtRat::Finite(ys[0].clone())
        )));
    }
    if let Some(i) = ys.iter().skip(1).position(|y| y.is_integer()) {
        return Err(Error::SlopeForm(format!(
            "slope {} must not be an integer",
            i + 1
        )));
    }
    let (inside, outside): (Vec<_>, Vec<_>) =
        ys.into_iter().enumerate().partition(|(i, _)| j.contains(i));
    let inside: Vec<BigRational> = inside.into_iter().map(|(_, y)| y).collect();
    let outside: Vec<BigRational> = outside.into_iter().map(|(_, y)| y).collect();
    Ok(Endpoints {
        lower: lower_endpoint(&inside, &outside, 1)?,
        upper: upper_endpoint(&inside, &outside, 1)?,
    })
}

/// `−Σ y_i`, with `∞` absorbing.
pub fn seifert_longitude(slopes: &[ExtRat]) -> ExtRat {
    sum_ext(slopes).neg()
}
