//! `(p, q)`-cables of knot complements.
//!
//! A cable is the gluing of the knot complement to a Seifert piece over the
//! twice-punctured disk with one exceptional fiber of slope `−q*/p`. Three
//! slope bases appear:
//!
//! * the Seifert basis `(f̃, −h̃)` of the cable space, used by [`crate::graph`];
//! * the cabling surgery basis `(μ, f̃)` with `μ = −h̃`, the inversion of the
//!   Seifert basis;
//! * for knots in `S³`, the basis `(μ, λ_Q)` with `λ_Q = f̃ + pq·h̃`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{rational_longitude, TreeManifold};
use crate::intervals::{GluingMatrix, LInterval};
use crate::rationals::{ceil_mul, floor_mul, lcm_of_denominators, ExtRat};
use crate::seifert::{Base, Endpoint};

/// `p·p* − q·q* = 1` with `0 < q* < p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CableParams {
    pub p: i64,
    pub q: i64,
    pub pstar: i64,
    pub qstar: i64,
}

pub fn cable_coeffs(p: i64, q: i64) -> Result<CableParams> {
    const FRAMING: &str =
        "a 1/q-cable is only a change of framing, and p = 0 or q = 0 is not a cable";
    if p <= 1 || q == 0 {
        return Err(Error::DiscardedCable {
            p,
            q,
            reason: if p < 0 {
                "p must be positive; reverse the orientation instead"
            } else {
                FRAMING
            },
        });
    }
    let eg = p.extended_gcd(&q);
    if eg.gcd != 1 {
        return Err(Error::DiscardedCable {
            p,
            q,
            reason: "p and q must be coprime",
        });
    }
    // p·x + q·y = 1, so (p*, q*) = (x, −y) up to adding (t·q, t·p).
    let (x, y) = (eg.x as i128, eg.y as i128);
    let (p128, q128) = (p as i128, q as i128);
    let qstar = (-y).rem_euclid(p128);
    let t = (qstar + y) / p128;
    let pstar = x + t * q128;
    debug_assert_eq!(p128 * pstar - q128 * qstar, 1);
    Ok(CableParams {
        p,
        q,
        pstar: pstar.to_i64().expect("|p*| <= |q|"),
        qstar: qstar.to_i64().expect("q* < p"),
    })
}

impl CableParams {
    /// Carries surgery-basis slopes of the companion to the Seifert basis
    /// of the cable space: `μ ↦ (−q*, −p)`, `λ ↦ (p*, q)`.
    pub fn gluing(&self) -> GluingMatrix {
        GluingMatrix::from_i64(-self.qstar, self.pstar, -self.p, self.q)
            .expect("determinant p·p* − q·q* = 1")
    }

    /// `−q*/p`.
    pub fn seifert_slope(&self) -> ExtRat {
        ExtRat::frac(-self.qstar, self.p)
    }

    /// Cabling surgery basis to the `S³` basis: `a/b ↦ a/b + pq`.
    pub fn s3_shift(&self) -> GluingMatrix {
        GluingMatrix::from_i64(1, self.p * self.q, 0, 1).expect("unipotent")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CableBranch {
    Empty,
    Point,
    Bracket,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CableInterval {
    pub params: CableParams,
    /// Companion interval endpoints carried into the Seifert basis.
    pub y1_lower: ExtRat,
    pub y1_upper: ExtRat,
    /// `y−` and `y+` in the Seifert basis, with least witnesses.
    pub lower: Endpoint,
    pub upper: Endpoint,
    pub branch: CableBranch,
    /// Exactly one of `y1±` is infinite, a case the general theorem leaves
    /// to its catch-all branch.
    pub one_sided_infinite: bool,
    /// The result in the cabling surgery basis.
    pub interval: LInterval,
}

fn cable_search(params: &CableParams, y1: &BigRational, lower: bool, bound: u64) -> Endpoint {
    let qp = ExtRat::frac(params.qstar, params.p);
    let y1e = ExtRat::Finite(y1.clone());
    let mut best: Option<(BigRational, u64)> = None;
    for k in 1..=bound {
        let num = if lower {
            ceil_mul(&qp, k).unwrap() - ceil_mul(&y1e, k).unwrap()
        } else {
            floor_mul(&qp, k).unwrap() - floor_mul(&y1e, k).unwrap()
        };
        let v = BigRational::new(num, k.into());
        let better = match &best {
            None => true,
            Some((b, _)) => (lower && v > *b) || (!lower && v < *b),
        };
        if better {
            best = Some((v, k));
        }
    }
    let (v, k) = best.expect("bound is at least 1");
    Endpoint {
        value: ExtRat::Finite(v),
        witness: k,
    }
}

/// The interval of the `(p, q)`-cable of a Floer simple knot complement
/// with interval `[[lower, upper]]` in the surgery basis `(μ, λ)`.
pub fn cable_interval(lower: &ExtRat, upper: &ExtRat, p: i64, q: i64) -> Result<CableInterval> {
    let params = cable_coeffs(p, q)?;
    let k = GluingMatrix::from_i64(params.qstar, -params.pstar, params.p, -params.q)
        .expect("determinant p·p* − q·q* = 1");
    let y1_lower = k.apply(lower);
    let y1_upper = k.apply(upper);
    let s = cable_search_bound(p, &[y1_lower.clone(), y1_upper.clone()]);
    let bound = s.to_u64().ok_or(Error::SearchBoundTooLarge(s))?;
    let inf = Endpoint {
        value: ExtRat::Infinity,
        witness: 1,
    };
    let y_lower = match &y1_upper {
        ExtRat::Finite(y) => cable_search(&params, y, true, bound),
        ExtRat::Infinity => inf.clone(),
    };
    let y_upper = match &y1_lower {
        ExtRat::Finite(y) => cable_search(&params, y, false, bound),
        ExtRat::Infinity => inf,
    };
    let one_sided_infinite = y1_lower.is_infinite() != y1_upper.is_infinite();
    let ordered = matches!(
        (&y1_lower, &y1_upper),
        (ExtRat::Finite(a), ExtRat::Finite(b)) if a < b
    );
    let cmp = match (y_lower.value.finite(), y_upper.value.finite()) {
        (Some(a), Some(b)) => Some(a.cmp(b)),
        _ => None,
    };
    let (branch, interval) = match (ordered, cmp) {
        (true, Some(std::cmp::Ordering::Greater)) => (CableBranch::Empty, LInterval::Empty),
        (true, Some(std::cmp::Ordering::Equal)) => {
            (CableBranch::Point, LInterval::Point(y_lower.value.recip()))
        }
        _ => (
            CableBranch::Bracket,
            LInterval::Bracket(y_upper.value.recip(), y_lower.value.recip()),
        ),
    };
    Ok(CableInterval {
        params,
        y1_lower,
        y1_upper,
        lower: y_lower,
        upper: y_upper,
        branch,
        one_sided_infinite,
        interval,
    })
}

/// The cabling-basis interval `i` rewritten in the `S³` basis.
pub fn cable_interval_s3_basis(i: &LInterval, p: i64, q: i64) -> Result<LInterval> {
    Ok(i.push(&cable_coeffs(p, q)?.s3_shift()))
}

/// The companion's interval lies in `[p*/q*, ∞]` at the left and in
/// `[(q − p*)/(p − q*), q/p⟩ ∪ {∞}` at the right.
pub fn isolated_meridian_predicate(lower: &ExtRat, upper: &ExtRat, params: &CableParams) -> bool {
    let ps_qs = ExtRat::frac(params.pstar, params.qstar);
    let left_ok = LInterval::Bracket(ps_qs, ExtRat::Infinity).contains(lower);
    let q_p = ExtRat::frac(params.q, params.p);
    let c = ExtRat::frac(params.q - params.pstar, params.p - params.qstar);
    let right_ok = upper.is_infinite()
        || (LInterval::Bracket(c, q_p.clone()).contains(upper) && *upper != q_p);
    left_ok && right_ok
}

/// [`cable_interval`] for a companion whose meridional filling is an
/// L-space, cross-checked against the closed-form test for the `{∞}` case.
pub fn cable_interval_lspace_ambient(
    lower: &ExtRat,
    upper: &ExtRat,
    p: i64,
    q: i64,
) -> Result<CableInterval> {
    if !LInterval::Bracket(lower.clone(), upper.clone()).contains(&ExtRat::Infinity) {
        return Err(Error::AmbientNotLSpace {
            lower: lower.to_string(),
            upper: upper.to_string(),
        });
    }
    let c = cable_interval(lower, upper, p, q)?;
    let predicted = isolated_meridian_predicate(lower, upper, &c.params);
    let actual = c.interval == LInterval::Point(ExtRat::Infinity);
    if predicted != actual {
        return Err(Error::CrossCheck(format!(
            "closed form predicts {{inf}} = {predicted}, general formula gives {}",
            c.interval
        )));
    }
    Ok(c)
}

/// Closed form for a knot in `S³` whose complement has interval
/// `[2g − 1, ∞]`, in the `S³` basis of the cable.
pub fn s3_cable_closed_form(genus: i64, p: i64, q: i64) -> Result<LInterval> {
    cable_coeffs(p, q)?;
    let n = BigRational::from_integer((2 * genus - 1).into());
    if n > BigRational::new(q.into(), p.into()) {
        Ok(LInterval::Point(ExtRat::Infinity))
    } else {
        Ok(LInterval::Bracket(
            ExtRat::integer(p * q - p - q + 2 * genus * p),
            ExtRat::Infinity,
        ))
    }
}

/// A knot complement to be cabled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotComplement {
    /// Known only by its interval in the surgery basis `(μ, λ)`.
    Leaf(LInterval),
    /// `framing` carries the manifold's root slopes to the surgery basis.
    Tree {
        manifold: TreeManifold,
        framing: GluingMatrix,
    },
}

/// The cable as a tree: a root with Seifert slope `−q*/p` and the companion
/// as its only daughter. The result is in the Seifert basis.
pub fn cable_construct_tree(companion: KnotComplement, p: i64, q: i64) -> Result<TreeManifold> {
    let params = cable_coeffs(p, q)?;
    let mut root = TreeManifold::seifert_piece(Base::Orientable, &[params.seifert_slope()])?;
    match companion {
        KnotComplement::Leaf(i) => root.attach_leaf(i.push(&params.gluing())),
        KnotComplement::Tree { manifold, framing } => {
            root.attach(params.gluing().compose(&framing), manifold)?
        }
    }
    Ok(root)
}

/// A determinant one matrix sending `slope` to `∞`.
pub fn framing_to_infinity(slope: &ExtRat) -> GluingMatrix {
    let (r, s) = slope.coords();
    let eg = r.extended_gcd(&s);
    // a·r + b·s = ±1 with gcd(r, s) = 1.
    let (a, b) = if eg.gcd == BigInt::from(1) {
        (eg.x, eg.y)
    } else {
        (-eg.x, -eg.y)
    };
    let m = GluingMatrix::new(a, b, -s, r).expect("determinant a·r + b·s = 1");
    debug_assert!(m.apply(slope).is_infinite());
    m
}

/// The `(p, q)`-cable of `Y` viewed as a knot complement in `Y(l)`, where
/// `l` is the rational longitude.
pub fn cable_in_longitudinal_filling(y: TreeManifold, p: i64, q: i64) -> Result<TreeManifold> {
    let l = rational_longitude(&y)?;
    let framing = framing_to_infinity(&l);
    cable_construct_tree(
        KnotComplement::Tree {
            manifold: y,
            framing,
        },
        p,
        q,
    )
}

/// The regular fiber complement in `S¹×S²`: a solid torus with longitude `0`.
pub fn s1s2_fiber_complement() -> TreeManifold {
    TreeManifold::seifert_piece(Base::Orientable, &[]).expect("no slopes")
}

/// Least common multiple of `p` and the denominators of the finite values.
pub fn cable_search_bound(p: i64, y1: &[ExtRat]) -> BigInt {
    BigInt::from(p).lcm(&lcm_of_denominators(y1.iter().filter_map(ExtRat::finite)))
}
