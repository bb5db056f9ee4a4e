//! Rooted-tree graph manifolds with torus boundary: classification and
//! L-space intervals.
//!
//! The root is a Seifert fibered piece over `S²` or `RP²` minus disks. Each
//! Seifert slope `y_i^D` fills a fiber neighbourhood, and each daughter is
//! glued along a torus boundary component, with its L-space interval carried
//! into the root's slope coordinates by the gluing map.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::intervals::{cmp_finite, ClosedSet, GluingMatrix, LInterval};
use crate::rationals::{sum_ext, ExtRat};
use crate::seifert::{graph_endpoints, Base, Endpoints, SeifertData};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Daughter {
    /// A glued subtree; `gluing` carries its slopes into the parent's.
    Subtree {
        gluing: GluingMatrix,
        manifold: Box<TreeManifold>,
    },
    /// A daughter known only through its interval, already in parent
    /// coordinates.
    LeafInterval(LInterval),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeManifold {
    pub seifert: SeifertData,
    daughters: Vec<Daughter>,
}

impl TreeManifold {
    /// Rejects subtree daughters that are solid tori; see [`TreeManifold::attach`].
    pub fn new(seifert: SeifertData, daughters: Vec<Daughter>) -> Result<Self> {
        for (index, d) in daughters.iter().enumerate() {
            if let Daughter::Subtree { manifold, .. } = d {
                if manifold.is_solid_torus() {
                    return Err(Error::SolidTorusDaughter { index });
                }
            }
        }
        Ok(TreeManifold { seifert, daughters })
    }

    /// A single Seifert piece with no daughters.
    pub fn seifert_piece(base: Base, slopes: &[ExtRat]) -> Result<Self> {
        Ok(TreeManifold {
            seifert: SeifertData::new(base, slopes)?,
            daughters: vec![],
        })
    }

    pub fn daughters(&self) -> &[Daughter] {
        &self.daughters
    }

    /// Glues `manifold` as a new daughter. A solid torus is absorbed into the
    /// Seifert slopes instead.
    pub fn attach(&mut self, gluing: GluingMatrix, manifold: TreeManifold) -> Result<()> {
        if manifold.is_solid_torus() {
            let slope = absorbed_slope(&gluing, &manifold);
            let slope = slope.finite().cloned().ok_or(Error::NonPrimeAbsorption)?;
            self.seifert.push_slope(slope);
        } else {
            self.daughters.push(Daughter::Subtree {
                gluing,
                manifold: Box::new(manifold),
            });
        }
        Ok(())
    }

    pub fn attach_leaf(&mut self, interval: LInterval) {
        self.daughters.push(Daughter::LeafInterval(interval));
    }

    /// Orientable base, no daughters, at most one exceptional fiber.
    pub fn is_solid_torus(&self) -> bool {
        self.seifert.is_orientable()
            && self.daughters.is_empty()
            && self.seifert.nonintegral_count() <= 1
    }

    /// Number of Seifert pieces on the longest root-to-leaf path.
    pub fn height(&self) -> usize {
        1 + self
            .daughters
            .iter()
            .map(|d| match d {
                Daughter::Subtree { manifold, .. } => manifold.height(),
                Daughter::LeafInterval(_) => 0,
            })
            .max()
            .unwrap_or(0)
    }
}

/// The Seifert slope that a solid torus becomes when glued by `gluing`.
fn absorbed_slope(gluing: &GluingMatrix, solid: &TreeManifold) -> ExtRat {
    let l = ExtRat::Finite(-solid.seifert.slope_sum());
    gluing.apply(&l)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    SolidTorus,
    Fs0,
    Fs1(usize),
    Fs2(usize),
    Fs3,
    Nfs1,
    Nfs2(usize),
    Nfs3,
    Nfs4(usize),
    Empty,
}

impl Verdict {
    /// Floer simple, i.e. the interval is a bracket.
    pub fn is_floer_simple(&self) -> bool {
        matches!(
            self,
            Verdict::SolidTorus | Verdict::Fs0 | Verdict::Fs1(_) | Verdict::Fs2(_) | Verdict::Fs3
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::SolidTorus => "SolidTorus",
            Verdict::Fs0 => "FS0",
            Verdict::Fs1(_) => "FS1",
            Verdict::Fs2(_) => "FS2",
            Verdict::Fs3 => "FS3",
            Verdict::Nfs1 => "NFS1",
            Verdict::Nfs2(_) => "NFS2",
            Verdict::Nfs3 => "NFS3",
            Verdict::Nfs4(_) => "NFS4",
            Verdict::Empty => "Empty",
        }
    }

    /// The distinguished daughter, for clauses that name one.
    pub fn daughter(&self) -> Option<usize> {
        match self {
            Verdict::Fs1(j) | Verdict::Fs2(j) | Verdict::Nfs2(j) | Verdict::Nfs4(j) => Some(*j),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Data certifying a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    /// Daughter intervals in root coordinates.
    pub daughter_intervals: Vec<LInterval>,
    /// Daughters of the form `[-inf, b]`.
    pub minus_infinity: Vec<usize>,
    /// Daughters of the form `[a, +inf]`.
    pub plus_infinity: Vec<usize>,
    /// Daughters with empty interval.
    pub empty_daughters: Vec<usize>,
    /// Number of non-integral Seifert slopes.
    pub exceptional_fibers: usize,
    /// Number of integral finite daughter endpoints `y_{i±}`.
    pub integral_daughter_endpoints: usize,
    /// `(y−, y+)` with least witnesses; absent for solid tori, non-orientable
    /// bases and empty daughters.
    pub endpoints: Option<Endpoints>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub witnesses: Witnesses,
}

/// Everything computed for one tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub classification: Classification,
    pub interval: LInterval,
}

impl Analysis {
    pub fn verdict(&self) -> Verdict {
        self.classification.verdict
    }

    pub fn daughter_intervals(&self) -> &[LInterval] {
        &self.classification.witnesses.daughter_intervals
    }

    pub fn endpoints(&self) -> Option<&Endpoints> {
        self.classification.witnesses.endpoints.as_ref()
    }
}

/// `(y_{i−}, y_{i+})` for a point or bracket daughter.
fn endpoint_pair(d: &LInterval) -> Option<(ExtRat, ExtRat)> {
    match d {
        LInterval::Empty => None,
        LInterval::Point(y) => Some((y.clone(), y.clone())),
        LInterval::Bracket(a, b) => Some((a.clone(), b.clone())),
    }
}

fn is_finite_arc(d: &LInterval) -> bool {
    matches!(d, LInterval::Bracket(a, b) if cmp_finite(a, b) == Some(std::cmp::Ordering::Less))
}

/// Every clause that holds, in evaluation order. A well-formed input
/// satisfies exactly one.
fn holding_clauses(
    seifert: &SeifertData,
    ds: &[LInterval],
    endpoints: Option<&Endpoints>,
) -> Vec<Verdict> {
    let inf = ExtRat::Infinity;
    let n_g = ds.len();
    let inside = |i: usize| ds[i].has_infinity_inside();
    let others_inside = |j: usize| (0..n_g).filter(|&i| i != j).all(inside);
    let mut out = vec![];

    if seifert.is_orientable() && n_g == 0 && seifert.nonintegral_count() <= 1 {
        out.push(Verdict::SolidTorus);
    }
    if !seifert.is_orientable() {
        if (0..n_g).all(inside) {
            out.push(Verdict::Fs0);
        }
        return finish(out);
    }

    if let Some(j) = (0..n_g).find(|&j| ds[j] == LInterval::all_finite() && others_inside(j)) {
        out.push(Verdict::Fs1(j));
    }
    if let Some(j) = (0..n_g).find(|&j| is_finite_arc(&ds[j]) && others_inside(j)) {
        let e = endpoints.expect("no empty daughters");
        match cmp_finite(&e.lower.value, &e.upper.value) {
            Some(std::cmp::Ordering::Less) => out.push(Verdict::Fs2(j)),
            Some(std::cmp::Ordering::Equal) => out.push(Verdict::Nfs2(j)),
            _ => {}
        }
    }
    let all_brackets = ds.iter().all(LInterval::is_bracket);
    let all_contain = ds.iter().all(|d| d.contains(&inf));
    if all_brackets && all_contain && !(n_g == 0 && seifert.nonintegral_count() <= 1) {
        let (minus, plus) = infinity_sets(ds);
        // With two daughters ending at ∞, detaching either leaves a piece
        // whose interval also ends at ∞, so ∞ lies in neither interior and
        // no finite filling is an L-space.
        if minus.len() + plus.len() <= 1 {
            out.push(Verdict::Fs3);
        } else {
            out.push(Verdict::Nfs3);
        }
    }
    if let Some(j) = (0..n_g).find(|&j| ds[j] == LInterval::Point(inf.clone())) {
        if all_contain {
            out.push(Verdict::Nfs4(j));
        }
    }
    if n_g == 1 && seifert.nonintegral_count() <= 1 {
        if let LInterval::Point(ExtRat::Finite(y1)) = &ds[0] {
            let all_integral = seifert.slopes().iter().all(|y| y.is_integer());
            if all_integral || (seifert.slope_sum() + y1).is_integer() {
                out.push(Verdict::Nfs1);
            }
        }
    }
    finish(out)
}

fn finish(mut out: Vec<Verdict>) -> Vec<Verdict> {
    if out.is_empty() {
        out.push(Verdict::Empty);
    }
    out
}

/// `I_{−∞}` and `I_{+∞}`.
fn infinity_sets(ds: &[LInterval]) -> (Vec<usize>, Vec<usize>) {
    let mut minus = vec![];
    let mut plus = vec![];
    for (i, d) in ds.iter().enumerate() {
        if let LInterval::Bracket(a, b) = d {
            match (a.is_infinite(), b.is_infinite()) {
                (true, false) => minus.push(i),
                (false, true) => plus.push(i),
                _ => {}
            }
        }
    }
    (minus, plus)
}

fn classify_from_daughters(
    seifert: &SeifertData,
    ds: Vec<LInterval>,
    factor: u64,
) -> Result<Classification> {
    let (minus_infinity, plus_infinity) = infinity_sets(&ds);
    let empty_daughters = (0..ds.len())
        .filter(|&i| ds[i] == LInterval::Empty)
        .collect::<Vec<_>>();
    let pairs: Option<Vec<(ExtRat, ExtRat)>> = ds.iter().map(endpoint_pair).collect();
    let integral_daughter_endpoints = pairs
        .iter()
        .flatten()
        .flat_map(|(a, b)| [a, b])
        .filter(|y| y.is_integer())
        .count();
    let solid = seifert.is_orientable() && ds.is_empty() && seifert.nonintegral_count() <= 1;
    let endpoints = match &pairs {
        Some(pairs) if seifert.is_orientable() && !solid => {
            Some(graph_endpoints(seifert.slopes(), pairs, factor)?)
        }
        _ => None,
    };
    let holding = holding_clauses(seifert, &ds, endpoints.as_ref());
    debug_assert_eq!(holding.len(), 1, "clauses {holding:?} on {ds:?}");
    Ok(Classification {
        verdict: holding[0],
        witnesses: Witnesses {
            daughter_intervals: ds,
            minus_infinity,
            plus_infinity,
            empty_daughters,
            exceptional_fibers: seifert.nonintegral_count(),
            integral_daughter_endpoints,
            endpoints,
        },
    })
}

fn interval_for(seifert: &SeifertData, c: &Classification) -> LInterval {
    let e = c.witnesses.endpoints.as_ref();
    let bracket = || {
        let e = e.expect("endpoints are computed for this verdict");
        LInterval::Bracket(e.lower.value.clone(), e.upper.value.clone())
    };
    let point = || {
        let e = e.expect("endpoints are computed for this verdict");
        debug_assert_eq!(e.lower.value, e.upper.value);
        LInterval::Point(e.lower.value.clone())
    };
    match c.verdict {
        Verdict::Empty => LInterval::Empty,
        Verdict::SolidTorus => {
            let l = ExtRat::Finite(-seifert.slope_sum());
            LInterval::Bracket(l.clone(), l)
        }
        Verdict::Fs0 => LInterval::all_finite(),
        Verdict::Fs1(_) | Verdict::Fs2(_) | Verdict::Fs3 => bracket(),
        Verdict::Nfs1 => {
            let p = point();
            if let LInterval::Point(ExtRat::Finite(y1)) = &c.witnesses.daughter_intervals[0] {
                debug_assert_eq!(
                    p,
                    LInterval::Point(ExtRat::Finite(-seifert.slope_sum() - y1))
                );
            }
            p
        }
        Verdict::Nfs2(_) => point(),
        Verdict::Nfs3 => LInterval::Point(ExtRat::Infinity),
        Verdict::Nfs4(_) => {
            let p = point();
            debug_assert_eq!(p, LInterval::Point(ExtRat::Infinity));
            p
        }
    }
}

/// Full analysis with the endpoint search run to `factor` times the bound.
pub fn analyze_with_factor(y: &TreeManifold, factor: u64) -> Result<Analysis> {
    let ds = y
        .daughters
        .iter()
        .map(|d| match d {
            Daughter::LeafInterval(i) => Ok(i.clone()),
            Daughter::Subtree { gluing, manifold } => {
                Ok(analyze_with_factor(manifold, factor)?.interval.push(gluing))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let classification = classify_from_daughters(&y.seifert, ds, factor)?;
    let interval = interval_for(&y.seifert, &classification);
    Ok(Analysis {
        classification,
        interval,
    })
}

/// Classification, interval and witnesses, each subtree evaluated once.
pub fn analyze(y: &TreeManifold) -> Result<Analysis> {
    analyze_with_factor(y, 1)
}

/// Daughter intervals in the root's slope coordinates.
pub fn daughter_intervals(y: &TreeManifold) -> Result<Vec<LInterval>> {
    Ok(analyze(y)?.classification.witnesses.daughter_intervals)
}

pub fn classify(y: &TreeManifold) -> Result<Classification> {
    Ok(analyze(y)?.classification)
}

/// All clauses that hold for `y`, evaluated independently of one another.
pub fn holding_verdicts(y: &TreeManifold) -> Result<Vec<Verdict>> {
    let c = classify(y)?;
    Ok(holding_clauses(
        &y.seifert,
        &c.witnesses.daughter_intervals,
        c.witnesses.endpoints.as_ref(),
    ))
}

/// `(y−, y+)` for Seifert slopes `yd` and daughter endpoint pairs.
pub fn y_endpoints(yd: &[ExtRat], daughter_pairs: &[(ExtRat, ExtRat)]) -> Result<Endpoints> {
    let s = SeifertData::new(Base::Orientable, yd)?;
    graph_endpoints(s.slopes(), daughter_pairs, 1)
}

pub fn lspace_interval(y: &TreeManifold) -> Result<LInterval> {
    Ok(analyze(y)?.interval)
}

/// The slope whose filling has `b₁ > 0`; `∞` over `RP²`.
pub fn rational_longitude(y: &TreeManifold) -> Result<ExtRat> {
    if !y.seifert.is_orientable() {
        return Ok(ExtRat::Infinity);
    }
    let mut terms = vec![ExtRat::Finite(y.seifert.slope_sum())];
    for (index, d) in y.daughters.iter().enumerate() {
        match d {
            Daughter::LeafInterval(_) => return Err(Error::LongitudeUnknown { index }),
            Daughter::Subtree { gluing, manifold } => {
                terms.push(gluing.apply(&rational_longitude(manifold)?))
            }
        }
    }
    Ok(sum_ext(&terms).neg())
}

pub fn is_lspace_filling(y: &TreeManifold, slope: &ExtRat) -> Result<bool> {
    Ok(lspace_interval(y)?.contains(slope))
}

/// A connected summand of the filling along the fiber slope `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Summand {
    /// Lens space of slope `s/r` from a Seifert slope `r/s`; `S³` when `s = 1`.
    Lens { p: BigInt, q: BigInt },
    /// Filling of daughter `index` along the preimage of `∞`.
    DaughterFilling {
        index: usize,
        slope: Option<ExtRat>,
        lspace: bool,
    },
}

impl Summand {
    /// Known to be a nontrivial summand.
    fn is_nontrivial(&self) -> Option<bool> {
        match self {
            Summand::Lens { p, .. } => Some(!p.is_one()),
            Summand::DaughterFilling { lspace: false, .. } => Some(true),
            Summand::DaughterFilling { lspace: true, .. } => None,
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Lens { p, .. } if p.is_one() => write!(f, "S3"),
            Summand::Lens { p, q } => write!(f, "L({p}, {q})"),
            Summand::DaughterFilling {
                index,
                slope,
                lspace,
            } => {
                let slope = slope
                    .as_ref()
                    .map_or_else(|| "?".to_string(), |s| s.to_string());
                let kind = if *lspace { "L-space" } else { "not an L-space" };
                write!(f, "daughters[{index}]({slope}) [{kind}]")
            }
        }
    }
}

/// The fiber-slope filling over an `S²` base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityFilling {
    pub summands: Vec<Summand>,
    pub lspace: bool,
    /// `None` when an L-space daughter filling might be `S³`.
    pub reducible: Option<bool>,
}

/// How a slope sits with respect to `L(Y)` and the reducible fillings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlopeStatus {
    LSpace,
    /// Not an L-space. `reducible` is decided only for the fiber slope.
    NotLSpace {
        reducible: Option<bool>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoliationReport {
    pub interval: LInterval,
    /// Complement of the interior of `L(Y)`.
    pub foliation_slopes: ClosedSet,
    /// Present for an `S²` base that is not a solid torus.
    pub infinity_filling: Option<InfinityFilling>,
}

impl FoliationReport {
    /// Each slope lies in exactly one of `L(Y)`, the reducible fillings, or
    /// the slopes whose fillings carry taut foliations.
    pub fn status(&self, slope: &ExtRat) -> SlopeStatus {
        if self.interval.contains(slope) {
            return SlopeStatus::LSpace;
        }
        let reducible = match (slope, &self.infinity_filling) {
            (ExtRat::Infinity, Some(f)) => f.reducible,
            _ => None,
        };
        SlopeStatus::NotLSpace { reducible }
    }
}

pub fn foliation_sets(y: &TreeManifold) -> Result<FoliationReport> {
    let a = analyze(y)?;
    let foliation_slopes = a.interval.interior().complement();
    let infinity_filling = if y.seifert.is_orientable() && !y.is_solid_torus() {
        let mut summands: Vec<Summand> = y
            .seifert
            .slopes()
            .iter()
            .map(|q| Summand::Lens {
                p: q.denom().clone(),
                q: q.numer().clone(),
            })
            .collect();
        let ds = a.daughter_intervals();
        for (index, d) in y.daughters.iter().enumerate() {
            let slope = match d {
                Daughter::Subtree { gluing, .. } => Some(gluing.inverse().apply(&ExtRat::Infinity)),
                Daughter::LeafInterval(_) => None,
            };
            summands.push(Summand::DaughterFilling {
                index,
                slope,
                lspace: ds[index].contains(&ExtRat::Infinity),
            });
        }
        let lspace = ds.iter().all(|d| d.contains(&ExtRat::Infinity));
        if lspace != a.interval.contains(&ExtRat::Infinity) {
            return Err(Error::CrossCheck(format!(
                "connected-sum rule gives {lspace} at inf but L(Y) = {}",
                a.interval
            )));
        }
        let known = summands.iter().map(Summand::is_nontrivial);
        let definite = known.clone().filter(|k| *k == Some(true)).count();
        let unknown = known.filter(|k| k.is_none()).count();
        let reducible = if definite >= 2 {
            Some(true)
        } else if definite + unknown <= 1 {
            Some(false)
        } else {
            None
        };
        Some(InfinityFilling {
            summands,
            lspace,
            reducible,
        })
    } else {
        None
    };
    Ok(FoliationReport {
        interval: a.interval,
        foliation_slopes,
        infinity_filling,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GstReport {
    pub is_gst: bool,
    /// `None` when a leaf daughter hides the longitude and `L(Y)` is not a
    /// co-point; a co-point interval always omits exactly the longitude.
    pub longitude: Option<ExtRat>,
    pub interval: LInterval,
    /// Iterated-cable shape test, run when the longitude is known and not `∞`.
    pub structural: Option<bool>,
}

/// `L(Y)` is everything but the rational longitude.
pub fn is_generalized_solid_torus(y: &TreeManifold) -> Result<GstReport> {
    let interval = lspace_interval(y)?;
    let known = match rational_longitude(y) {
        Ok(l) => Some(l),
        Err(Error::LongitudeUnknown { .. }) => None,
        Err(e) => return Err(e),
    };
    let co_point = match &interval {
        LInterval::Bracket(a, b) if a == b => Some(a.clone()),
        _ => None,
    };
    let is_gst = match &known {
        Some(l) => co_point.as_ref() == Some(l),
        None => co_point.is_some(),
    };
    let structural = match &known {
        Some(l) if !l.is_infinite() => Some(iterated_cable_shape(y)?),
        _ => None,
    };
    if let Some(s) = structural {
        if s != is_gst {
            return Err(Error::CrossCheck(format!(
                "interval test says {is_gst}, iterated-cable shape says {s}"
            )));
        }
    }
    Ok(GstReport {
        is_gst,
        longitude: known.or(co_point),
        interval,
        structural,
    })
}

/// Recognizes iterated cables of the regular fiber complement in `S¹×S²`.
fn iterated_cable_shape(y: &TreeManifold) -> Result<bool> {
    if !y.seifert.is_orientable() {
        return Ok(false);
    }
    let exceptional = y.seifert.nonintegral_count();
    match y.daughters.as_slice() {
        [] => Ok(exceptional <= 1 || (exceptional == 2 && y.seifert.slope_sum().is_integer())),
        [Daughter::Subtree { gluing, manifold }] => {
            if exceptional == 0 {
                return daughter_is_gst(manifold);
            }
            if exceptional > 1 {
                return Ok(false);
            }
            let pushed = lspace_interval(manifold)?.push(gluing);
            match pushed {
                LInterval::Bracket(ExtRat::Finite(a), ExtRat::Finite(b)) if a == b => {
                    let closes_up = (y.seifert.slope_sum() + a).is_integer();
                    Ok(closes_up && daughter_is_gst(manifold)?)
                }
                _ => Ok(false),
            }
        }
        [Daughter::LeafInterval(_)] => Err(Error::LongitudeUnknown { index: 0 }),
        _ => Ok(false),
    }
}

fn daughter_is_gst(y: &TreeManifold) -> Result<bool> {
    if rational_longitude(y)?.is_infinite() {
        Ok(is_generalized_solid_torus(y)?.is_gst)
    } else {
        iterated_cable_shape(y)
    }
}

/// Reruns every endpoint search at ten times the bound and compares.
pub fn oracle_check(y: &TreeManifold) -> Result<()> {
    let base = analyze(y)?;
    let wide = analyze_with_factor(y, 10)?;
    if base.interval != wide.interval || base.endpoints() != wide.endpoints() {
        return Err(Error::CrossCheck(format!(
            "endpoint search at 10x the bound gives {} instead of {}",
            wide.interval, base.interval
        )));
    }
    for d in y.daughters() {
        if let Daughter::Subtree { manifold, .. } = d {
            oracle_check(manifold)?;
        }
    }
    Ok(())
}

/// `-Σ y_i^D` for a solid torus.
pub fn solid_torus_longitude(y: &TreeManifold) -> Option<ExtRat> {
    y.is_solid_torus()
        .then(|| ExtRat::Finite(-y.seifert.slope_sum()))
}
