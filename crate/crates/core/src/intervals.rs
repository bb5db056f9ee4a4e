//! Subsets of the slope circle `Q ∪ {∞}` and their images under gluing maps.
//!
//! Arcs run counterclockwise, which on the slope line means increasing
//! through `+∞` and wrapping around to `-∞`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rationals::ExtRat;

/// Position of `x` on the circle cut open at `from`.
///
/// `from` itself is the least element.
fn lift(from: &ExtRat, x: &ExtRat) -> (u8, Option<BigRational>) {
    if x == from {
        return (0, None);
    }
    match (from, x) {
        (ExtRat::Infinity, ExtRat::Finite(q)) => (1, Some(q.clone())),
        (ExtRat::Finite(f), ExtRat::Finite(q)) if q > f => (1, Some(q.clone())),
        (ExtRat::Finite(_), ExtRat::Infinity) => (2, None),
        (ExtRat::Finite(_), ExtRat::Finite(q)) => (3, Some(q.clone())),
        (ExtRat::Infinity, ExtRat::Infinity) => unreachable!(),
    }
}

/// `x` lies strictly inside the counterclockwise arc from `from` to `to`.
///
/// With `from == to` the arc is the whole circle minus that point.
fn strictly_between(from: &ExtRat, x: &ExtRat, to: &ExtRat) -> bool {
    if x == from {
        return false;
    }
    if from == to {
        return true;
    }
    lift(from, x) < lift(from, to)
}

/// An interval of L-space filling slopes.
///
/// `Bracket(a, b)` with `a != b` is the closed arc from `a` to `b`.
/// `Bracket(a, a)` is the circle minus `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LInterval {
    Empty,
    Point(ExtRat),
    Bracket(ExtRat, ExtRat),
}

impl LInterval {
    pub fn bracket(a: ExtRat, b: ExtRat) -> Self {
        LInterval::Bracket(a, b)
    }

    /// `Bracket(∞, ∞)`, every finite slope.
    pub fn all_finite() -> Self {
        LInterval::Bracket(ExtRat::Infinity, ExtRat::Infinity)
    }

    pub fn contains(&self, x: &ExtRat) -> bool {
        match self {
            LInterval::Empty => false,
            LInterval::Point(p) => p == x,
            LInterval::Bracket(a, b) if a == b => x != a,
            LInterval::Bracket(a, b) => x == a || x == b || strictly_between(a, x, b),
        }
    }

    pub fn interior(&self) -> OpenArc {
        match self {
            LInterval::Empty | LInterval::Point(_) => OpenArc::Empty,
            LInterval::Bracket(a, b) => OpenArc::Arc(a.clone(), b.clone()),
        }
    }

    /// `∞` lies in the interior.
    pub fn has_infinity_inside(&self) -> bool {
        self.interior().contains(&ExtRat::Infinity)
    }

    pub fn is_bracket(&self) -> bool {
        matches!(self, LInterval::Bracket(..))
    }

    /// Image under the slope map of `m`.
    pub fn push(&self, m: &GluingMatrix) -> LInterval {
        match self {
            LInterval::Empty => LInterval::Empty,
            LInterval::Point(x) => LInterval::Point(m.apply(x)),
            LInterval::Bracket(a, b) => {
                let (a, b) = (m.apply(a), m.apply(b));
                if m.preserves_orientation() {
                    LInterval::Bracket(a, b)
                } else {
                    LInterval::Bracket(b, a)
                }
            }
        }
    }

    /// The same set as a closed subset of the circle, if it is closed.
    pub fn as_closed(&self) -> Option<ClosedSet> {
        match self {
            LInterval::Point(x) => Some(ClosedSet::Point(x.clone())),
            LInterval::Bracket(a, b) if a != b => Some(ClosedSet::Arc(a.clone(), b.clone())),
            _ => None,
        }
    }
}

fn left_end(x: &ExtRat) -> String {
    match x {
        ExtRat::Infinity => "-inf".to_string(),
        _ => x.to_string(),
    }
}

fn right_end(x: &ExtRat) -> String {
    match x {
        ExtRat::Infinity => "+inf".to_string(),
        _ => x.to_string(),
    }
}

/// Renders with the ends that a reader expects on the slope line.
fn arc_text(a: &ExtRat, b: &ExtRat, open: (&str, &str), at_inf: (&str, &str)) -> String {
    let wraps = match (a, b) {
        (ExtRat::Finite(a), ExtRat::Finite(b)) => a > b,
        _ => false,
    };
    let lo = |x: &ExtRat| if x.is_infinite() { at_inf.0 } else { open.0 };
    let hi = |x: &ExtRat| if x.is_infinite() { at_inf.1 } else { open.1 };
    if wraps {
        format!(
            "{}{}, +inf{} u {}-inf, {}{}",
            open.0, a, at_inf.1, at_inf.0, b, open.1
        )
    } else {
        format!("{}{}, {}{}", lo(a), left_end(a), right_end(b), hi(b))
    }
}

impl fmt::Display for LInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LInterval::Empty => write!(f, "empty"),
            LInterval::Point(x) => write!(f, "{{{x}}}"),
            LInterval::Bracket(ExtRat::Infinity, ExtRat::Infinity) => write!(f, "<-inf, +inf>"),
            LInterval::Bracket(a, b) if a == b => write!(f, "Q \\ {{{a}}}"),
            LInterval::Bracket(a, b) => write!(f, "{}", arc_text(a, b, ("[", "]"), ("[", "]"))),
        }
    }
}

/// An open subset of the circle: empty, or the open arc from one point to another.
///
/// `Arc(a, a)` is the circle minus `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OpenArc {
    Empty,
    Arc(ExtRat, ExtRat),
}

impl OpenArc {
    pub fn contains(&self, x: &ExtRat) -> bool {
        match self {
            OpenArc::Empty => false,
            OpenArc::Arc(a, b) => strictly_between(a, x, b),
        }
    }

    pub fn complement(&self) -> ClosedSet {
        match self {
            OpenArc::Empty => ClosedSet::Whole,
            OpenArc::Arc(a, b) if a == b => ClosedSet::Point(a.clone()),
            OpenArc::Arc(a, b) => ClosedSet::Arc(b.clone(), a.clone()),
        }
    }

    pub fn push(&self, m: &GluingMatrix) -> OpenArc {
        match self {
            OpenArc::Empty => OpenArc::Empty,
            OpenArc::Arc(a, b) => {
                let (a, b) = (m.apply(a), m.apply(b));
                if m.preserves_orientation() {
                    OpenArc::Arc(a, b)
                } else {
                    OpenArc::Arc(b, a)
                }
            }
        }
    }
}

impl fmt::Display for OpenArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpenArc::Empty => write!(f, "empty"),
            OpenArc::Arc(ExtRat::Infinity, ExtRat::Infinity) => write!(f, "<-inf, +inf>"),
            OpenArc::Arc(a, b) if a == b => write!(f, "Q \\ {{{a}}}"),
            OpenArc::Arc(a, b) => write!(f, "{}", arc_text(a, b, ("(", ")"), ("<", ">"))),
        }
    }
}

/// A nonempty closed subset of the circle of the kinds that arise as
/// complements of [`OpenArc`]s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClosedSet {
    Whole,
    Point(ExtRat),
    /// Closed arc from the first point to the second; the points differ.
    Arc(ExtRat, ExtRat),
}

impl ClosedSet {
    pub fn contains(&self, x: &ExtRat) -> bool {
        match self {
            ClosedSet::Whole => true,
            ClosedSet::Point(p) => p == x,
            ClosedSet::Arc(a, b) => x == a || x == b || strictly_between(a, x, b),
        }
    }

    /// Two closed arcs meet iff one contains an endpoint of the other.
    pub fn intersects(&self, other: &ClosedSet) -> bool {
        match (self, other) {
            (ClosedSet::Whole, _) | (_, ClosedSet::Whole) => true,
            (ClosedSet::Point(p), s) | (s, ClosedSet::Point(p)) => s.contains(p),
            (ClosedSet::Arc(a, b), ClosedSet::Arc(c, d)) => {
                self.contains(c) || self.contains(d) || other.contains(a) || other.contains(b)
            }
        }
    }
}

impl fmt::Display for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedSet::Whole => write!(f, "Q u {{inf}}"),
            ClosedSet::Point(x) => write!(f, "{{{x}}}"),
            ClosedSet::Arc(a, b) => write!(f, "{}", arc_text(a, b, ("[", "]"), ("[", "]"))),
        }
    }
}

/// The union of two open sets is the whole circle.
pub fn covers_circle(a: &OpenArc, b: &OpenArc) -> bool {
    !a.complement().intersects(&b.complement())
}

/// An integer matrix of determinant ±1 acting on slopes by
/// `(r, s) ↦ (ar + bs, cr + ds)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluingMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl GluingMatrix {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        if det.abs() != BigInt::one() {
            return Err(Error::GluingDeterminant(det));
        }
        Ok(GluingMatrix { a, b, c, d })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        GluingMatrix::from_i64(1, 0, 0, 1).unwrap()
    }

    /// `y ↦ 1/y`.
    pub fn inversion() -> Self {
        GluingMatrix::from_i64(0, 1, 1, 0).unwrap()
    }

    /// `y ↦ -y`.
    pub fn negation() -> Self {
        GluingMatrix::from_i64(-1, 0, 0, 1).unwrap()
    }

    pub fn entries(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), self.d.clone()],
        ]
    }

    pub fn det(&self) -> i8 {
        if &self.a * &self.d - &self.b * &self.c == BigInt::one() {
            1
        } else {
            -1
        }
    }

    pub fn preserves_orientation(&self) -> bool {
        self.det() == 1
    }

    pub fn apply(&self, x: &ExtRat) -> ExtRat {
        let (r, s) = x.coords();
        ExtRat::from_coords(&self.a * &r + &self.b * &s, &self.c * &r + &self.d * &s)
    }

    pub fn inverse(&self) -> Self {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let m = GluingMatrix {
            a: d.clone(),
            b: -b,
            c: -c,
            d: a.clone(),
        };
        if self.det() == 1 {
            m
        } else {
            m.scaled_by_minus_one()
        }
    }

    fn scaled_by_minus_one(&self) -> Self {
        GluingMatrix {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// `self · other`, acting as `other` first.
    pub fn compose(&self, other: &GluingMatrix) -> Self {
        GluingMatrix {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Marks on the circle for the critical points of `interval`, read from `∞`.
///
/// `*` is a point of the set, `o` a point outside it; `===` an arc inside
/// the set, `---` an arc outside it.
pub fn render_circle(interval: &LInterval) -> String {
    let mut finite: Vec<BigRational> = match interval {
        LInterval::Empty => vec![],
        LInterval::Point(x) => x.finite().into_iter().cloned().collect(),
        LInterval::Bracket(a, b) => a.finite().into_iter().chain(b.finite()).cloned().collect(),
    };
    finite.sort();
    finite.dedup();
    let mark = |x: &ExtRat| if interval.contains(x) { "*" } else { "o" };
    let span = |x: &ExtRat| if interval.contains(x) { "===" } else { "---" };
    let two = BigRational::from_integer(2.into());
    let one = BigRational::one();

    let mut out = format!("inf {}", mark(&ExtRat::Infinity));
    if finite.is_empty() {
        let probe = ExtRat::Finite(BigRational::zero());
        out.push_str(&format!(
            " {} (all finite) {} inf",
            span(&probe),
            span(&probe)
        ));
        return out;
    }
    let first = ExtRat::Finite(&finite[0] - &one);
    out.push_str(&format!(" {} ", span(&first)));
    for (i, q) in finite.iter().enumerate() {
        let x = ExtRat::Finite(q.clone());
        out.push_str(&format!("{} {}", x, mark(&x)));
        let probe = match finite.get(i + 1) {
            Some(next) => ExtRat::Finite((q + next) / &two),
            None => ExtRat::Finite(q + &one),
        };
        out.push_str(&format!(" {} ", span(&probe)));
    }
    out.push_str("inf");
    out
}

/// Compares two finite values; `None` when either is `∞`.
pub fn cmp_finite(a: &ExtRat, b: &ExtRat) -> Option<Ordering> {
    Some(a.finite()?.cmp(b.finite()?))
}
