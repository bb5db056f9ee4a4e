//! Seeded property suites shared by `properties.rs` and `acceptance.rs`.
//! Each returns the number of cases that met the property's hypotheses.

use std::panic::{catch_unwind, AssertUnwindSafe};

use lspace::cabling::{
    cable_construct_tree, cable_in_longitudinal_filling, cable_interval, s1s2_fiber_complement,
    KnotComplement,
};
use lspace::gluing::{closed_union_is_lspace, nbar, nbar_filling_is_lspace};
use lspace::graph::{
    analyze, analyze_with_factor, holding_verdicts, is_generalized_solid_torus, lspace_interval,
    solid_torus_longitude, Daughter, TreeManifold,
};
use lspace::seifert::jn_endpoints;
use lspace::{covers_circle, ExtRat, GluingMatrix, LInterval};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use super::*;

pub type Outcome = Result<usize, String>;

/// Runs a suite, turning a panic into a failure message.
pub fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".to_string());
        Err(format!("panicked: {msg}"))
    })
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn need(checked: usize, min: usize, what: &str) -> Outcome {
    ensure!(
        checked >= min,
        "{what}: only {checked} cases met the hypotheses"
    );
    Ok(checked)
}

fn denom(v: &ExtRat) -> BigInt {
    v.finite().expect("finite").denom().clone()
}

/// Root trees whose endpoint searches stay cheap enough for a 10x rerun.
fn bounded_tree(g: &mut Gen, limit: u64) -> TreeManifold {
    loop {
        let y = tree(g, 3);
        match root_bound(&y) {
            Some(b) if b > BigInt::from(limit) => continue,
            _ => return y,
        }
    }
}

/// (a) the search bound `s` finds the same extrema as `10·s`.
pub fn k_bound(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    let mut checked = 0;
    let mut lists = 0;
    while lists < cases {
        let n = g.gen_range(1..=5);
        let ys: Vec<ExtRat> = (0..n).map(|_| finite(&mut g, 12)).collect();
        // A solid torus has the co-point interval; its formula value is unused.
        if ys.iter().filter(|y| !y.is_integer()).count() <= 1 {
            continue;
        }
        lists += 1;
        let e = jn_endpoints(&ys).map_err(|e| e.to_string())?;
        let qs: Vec<BigRational> = ys.iter().map(|y| y.finite().unwrap().clone()).collect();
        let ((lo, lk), (hi, hk)) = naive_endpoints(&qs, &[], 10);
        ensure!(
            (lo.clone(), lk, hi.clone(), hk)
                == (
                    e.lower.value.clone(),
                    e.lower.witness,
                    e.upper.value.clone(),
                    e.upper.witness
                ),
            "slopes {ys:?}: bound gives {e:?}, 10x oracle gives ({lo}, {lk}, {hi}, {hk})"
        );
    }
    while checked < cases {
        let y = bounded_tree(&mut g, 5_000);
        let base = analyze(&y).map_err(|e| e.to_string())?;
        let wide = analyze_with_factor(&y, 10).map_err(|e| e.to_string())?;
        ensure!(
            base.interval == wide.interval && base.endpoints() == wide.endpoints(),
            "tree {y:?}: {} at s, {} at 10s",
            base.interval,
            wide.interval
        );
        if let (Some(e), Some(pairs)) = (base.endpoints(), root_pairs(&y)) {
            let ((lo, lk), (hi, hk)) = naive_endpoints(y.seifert.slopes(), &pairs, 10);
            ensure!(
                e.lower.value == lo
                    && e.lower.witness == lk
                    && e.upper.value == hi
                    && e.upper.witness == hk,
                "tree {y:?}: endpoints {e:?} vs oracle ({lo}, {lk}, {hi}, {hk})"
            );
            checked += 1;
        }
    }
    Ok(checked)
}

/// (b) least witnesses are the denominators of finite endpoints.
pub fn denominators(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < cases && attempts < 50 * cases {
        attempts += 1;
        let y = tree(&mut g, 3);
        let a = analyze(&y).map_err(|e| e.to_string())?;
        let Some(e) = a.endpoints() else { continue };
        if e.lower.value.is_infinite() || e.upper.value.is_infinite() {
            continue;
        }
        ensure!(
            BigInt::from(e.lower.witness) == denom(&e.lower.value)
                && BigInt::from(e.upper.witness) == denom(&e.upper.value),
            "tree {y:?}: endpoints {e:?}"
        );
        checked += 1;
    }
    need(checked, cases, "denominators")
}

/// (c) coinciding finite endpoints are integers realized at `k = 1`.
pub fn coinciding_endpoints(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < cases && attempts < 50 * cases {
        attempts += 1;
        // Single-piece roots with one point daughter hit `y− = y+` often.
        let mut y = if g.gen_bool(0.5) {
            tree(&mut g, 3)
        } else {
            let slopes: Vec<ExtRat> = (0..g.gen_range(0..=2)).map(|_| finite(&mut g, 8)).collect();
            TreeManifold::seifert_piece(lspace::seifert::Base::Orientable, &slopes).unwrap()
        };
        if y.daughters().is_empty() {
            y.attach_leaf(LInterval::Point(finite(&mut g, 8)));
        }
        let a = analyze(&y).map_err(|e| e.to_string())?;
        let Some(e) = a.endpoints() else { continue };
        let w = &a.classification.witnesses;
        if w.exceptional_fibers + w.integral_daughter_endpoints == 0 {
            continue;
        }
        if e.lower.value.is_infinite() || e.lower.value != e.upper.value {
            continue;
        }
        ensure!(
            e.lower.value.is_integer() && e.lower.witness == 1 && e.upper.witness == 1,
            "tree {y:?}: endpoints {e:?}"
        );
        checked += 1;
    }
    need(checked, cases, "coinciding endpoints")
}

/// (d) `y− > −Σy − Σy_{i+}` and `y+ < −Σy − Σy_{i−}` under the claim's
/// hypotheses.
pub fn strict_offsets(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < cases && attempts < 50 * cases {
        attempts += 1;
        let y = tree_with_daughters(&mut g, 3);
        let n_g = y.daughters().len();
        if !(n_g >= 2 || y.seifert.nonintegral_count() >= 2) {
            continue;
        }
        let Some(pairs) = root_pairs(&y) else {
            continue;
        };
        let a = analyze(&y).map_err(|e| e.to_string())?;
        let e = a.endpoints().expect("orientable, no empty daughters");
        let sum_d: BigRational = y.seifert.slope_sum();
        let mut any = false;
        if let Some(plus) = pairs
            .iter()
            .map(|p| p.1.finite().cloned())
            .collect::<Option<Vec<_>>>()
        {
            let bound = -&sum_d - plus.iter().sum::<BigRational>();
            let lo = e
                .lower
                .value
                .finite()
                .expect("finite daughters give finite y-");
            ensure!(*lo > bound, "tree {y:?}: y- = {lo} not above {bound}");
            any = true;
        }
        if let Some(minus) = pairs
            .iter()
            .map(|p| p.0.finite().cloned())
            .collect::<Option<Vec<_>>>()
        {
            let bound = -&sum_d - minus.iter().sum::<BigRational>();
            let hi = e
                .upper
                .value
                .finite()
                .expect("finite daughters give finite y+");
            ensure!(*hi < bound, "tree {y:?}: y+ = {hi} not below {bound}");
            any = true;
        }
        checked += usize::from(any);
    }
    need(checked, cases, "strict offsets")
}

/// (e) integer shifts summing to zero leave the interval and endpoints fixed.
pub fn reparameterization(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    for _ in 0..cases {
        let y = tree(&mut g, 3);
        let n = y.seifert.slopes().len() + y.daughters().len();
        let shifts = zero_sum(&mut g, n);
        let (z, w) = shifts.split_at(y.seifert.slopes().len());
        let moved = reparameterize(&y, z, w);
        let (a, b) = (analyze(&y).unwrap(), analyze(&moved).unwrap());
        ensure!(
            a.interval == b.interval && a.endpoints() == b.endpoints(),
            "tree {y:?} shifted by {shifts:?}: {} vs {}",
            a.interval,
            b.interval
        );
    }
    Ok(cases)
}

/// (f) the mirror tree has the negated interval, endpoints negated and
/// swapped with their witnesses.
pub fn orientation_duality(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    for _ in 0..cases {
        let y = tree(&mut g, 3);
        let (a, b) = (analyze(&y).unwrap(), analyze(&mirror(&y)).unwrap());
        ensure!(
            b.interval == a.interval.push(&GluingMatrix::negation()),
            "tree {y:?}: {} mirrors to {}",
            a.interval,
            b.interval
        );
        if let (Some(e), Some(f)) = (a.endpoints(), b.endpoints()) {
            ensure!(
                f.lower.value == e.upper.value.neg()
                    && f.upper.value == e.lower.value.neg()
                    && f.lower.witness == e.upper.witness
                    && f.upper.witness == e.lower.witness,
                "tree {y:?}: endpoints {e:?} mirror to {f:?}"
            );
        }
    }
    Ok(cases)
}

/// The union of `Ŷ[slope]` and the detached last daughter, decided by the
/// gluing rules.
fn unrolled_decision(y: &TreeManifold, slope: &BigRational) -> bool {
    let (hat, last) = detach_last(y, slope);
    match last {
        Daughter::Subtree { gluing, manifold } => {
            closed_union_is_lspace(&manifold, &hat, &gluing)
                .unwrap()
                .lspace
        }
        Daughter::LeafInterval(i) => match solid_torus_longitude(&hat) {
            Some(meridian) => i.contains(&meridian),
            None => covers_circle(&i.interior(), &lspace_interval(&hat).unwrap().interior()),
        },
    }
}

/// (g) filling membership agrees with detaching the last daughter and
/// regluing.
pub fn recursion_unrolling(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    let mut checked = 0;
    for _ in 0..cases {
        let y = tree_with_daughters(&mut g, 3);
        let l = lspace_interval(&y).unwrap();
        for s in probes(&mut g, &l) {
            let direct = l.contains(&ExtRat::Finite(s.clone()));
            let unrolled = unrolled_decision(&y, &s);
            ensure!(
                direct == unrolled,
                "tree {y:?} filled along {}: interval {l} says {direct}, regluing says {unrolled}",
                ExtRat::Finite(s)
            );
            checked += 1;
        }
    }
    need(checked, cases, "recursion unrolling")
}

/// (h) exactly one classification clause holds.
pub fn exclusivity(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    for _ in 0..cases {
        let y = tree(&mut g, 3);
        let v = holding_verdicts(&y).map_err(|e| e.to_string())?;
        ensure!(v.len() == 1, "tree {y:?}: clauses {v:?}");
    }
    Ok(cases)
}

/// (i) the cable formula agrees with the interval of the constructed tree,
/// read in the surgery basis.
pub fn cable_two_path(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    for _ in 0..cases {
        let (p, q) = cable_pair(&mut g, 7, 15);
        let LInterval::Bracket(lo, hi) = proper_bracket(&mut g) else {
            unreachable!()
        };
        let direct = cable_interval(&lo, &hi, p, q).map_err(|e| e.to_string())?;
        let t = cable_construct_tree(
            KnotComplement::Leaf(LInterval::Bracket(lo.clone(), hi.clone())),
            p,
            q,
        )
        .map_err(|e| e.to_string())?;
        let via_tree = lspace_interval(&t)
            .unwrap()
            .push(&GluingMatrix::inversion());
        ensure!(
            direct.interval == via_tree,
            "[{lo}, {hi}] cabled by ({p}, {q}): formula {}, tree {via_tree}",
            direct.interval
        );
    }
    Ok(cases)
}

/// (j) pushing by `M` then `M⁻¹` is the identity and membership moves with
/// the slope.
pub fn mobius_round_trip(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    for _ in 0..cases {
        let i = any_interval(&mut g);
        let m = unimodular(&mut g);
        let pushed = i.push(&m);
        ensure!(
            pushed.push(&m.inverse()) == i,
            "{i} by {m}: round trip gives {}",
            pushed.push(&m.inverse())
        );
        let arc = i.interior();
        ensure!(
            arc.push(&m).push(&m.inverse()) == arc,
            "interior of {i} by {m}"
        );
        for _ in 0..4 {
            let x = slope(&mut g, 8);
            let mx = m.apply(&x);
            ensure!(
                i.contains(&x) == pushed.contains(&mx),
                "{x} in {i} vs {mx} in {pushed}"
            );
            ensure!(
                arc.contains(&x) == arc.push(&m).contains(&mx),
                "{x} in interior of {i}"
            );
        }
    }
    Ok(cases)
}

/// Gluing symmetry, agreement with Dehn filling and the `N̄` test.
pub fn gluing_consistency(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    for _ in 0..cases {
        let y1 = tree(&mut g, 2);
        let y2 = tree(&mut g, 2);
        let m = unimodular(&mut g);
        let forward = closed_union_is_lspace(&y1, &y2, &m).unwrap();
        let backward = closed_union_is_lspace(&y2, &y1, &m.inverse()).unwrap();
        ensure!(
            forward.lspace == backward.lspace,
            "{y1:?} and {y2:?} by {m}: not symmetric"
        );

        let st =
            TreeManifold::seifert_piece(lspace::seifert::Base::Orientable, &[finite(&mut g, 8)])
                .unwrap();
        let l = solid_torus_longitude(&st).unwrap();
        let pushed = m.inverse().apply(&l);
        let filled = closed_union_is_lspace(&y1, &st, &m).unwrap().lspace;
        if !y1.is_solid_torus() {
            ensure!(
                filled == lspace_interval(&y1).unwrap().contains(&pushed),
                "{y1:?} filled along {pushed}"
            );
        }

        let mu = slope(&mut g, 8);
        let to_zero = nbar_framing(&mu);
        ensure!(
            to_zero.apply(&mu) == ExtRat::zero(),
            "framing sends {mu} to 0"
        );
        if !y1.is_solid_torus() {
            let via_gluing = closed_union_is_lspace(&y1, &nbar(), &to_zero)
                .unwrap()
                .lspace;
            let via_interior = nbar_filling_is_lspace(&y1, &mu).unwrap();
            ensure!(via_gluing == via_interior, "{y1:?} with N-bar at {mu}");
        }
    }
    Ok(cases)
}

/// A unimodular matrix sending `mu` to `0`.
fn nbar_framing(mu: &ExtRat) -> GluingMatrix {
    let (r, s) = mu.coords();
    // u·r + v·s = 1, rows (s, −r) and (u, v).
    let eg = r.extended_gcd(&s);
    let (u, v) = if eg.gcd.is_one() {
        (eg.x, eg.y)
    } else {
        (-eg.x, -eg.y)
    };
    GluingMatrix::new(s, -r, u, v).unwrap()
}

/// `N̄`, its cables and iterated cables of the `S¹×S²` fiber complement are
/// generalized solid tori.
pub fn gst_closure(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    let report = is_generalized_solid_torus(&nbar()).unwrap();
    ensure!(
        report.is_gst && report.longitude.is_some(),
        "N-bar: {report:?}"
    );
    for _ in 0..cases {
        let mut y = if g.gen_bool(0.8) {
            s1s2_fiber_complement()
        } else {
            nbar()
        };
        let depth = g.gen_range(1..=4);
        for _ in 0..depth {
            let (p, q) = cable_pair(&mut g, 5, 15);
            y = cable_in_longitudinal_filling(y, p, q).map_err(|e| e.to_string())?;
            let r = is_generalized_solid_torus(&y).map_err(|e| e.to_string())?;
            ensure!(
                r.is_gst && r.longitude.is_some(),
                "cable ({p}, {q}) gives {r:?} for {y:?}"
            );
        }
    }
    Ok(cases)
}

/// Fiber complements of invariantly exceptional fibers in L-space fillings
/// are Floer simple, and refilling them gives back the L-space.
pub fn exceptional_fiber_complements(seed: u64, cases: usize) -> Outcome {
    let mut g = gen(seed);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < cases && attempts < 200 * cases {
        attempts += 1;
        let y = tree(&mut g, 3);
        if !y.seifert.is_orientable() || y.seifert.nonintegral_count() < 2 {
            continue;
        }
        let l = lspace_interval(&y).unwrap();
        let inside: Vec<BigRational> = probes(&mut g, &l)
            .into_iter()
            .filter(|s| l.contains(&ExtRat::Finite(s.clone())))
            .collect();
        let Some(mu) = inside.first() else { continue };
        let exceptional: Vec<usize> = (0..y.seifert.slopes().len())
            .filter(|&i| !y.seifert.slopes()[i].is_integer())
            .collect();
        let j = exceptional[g.gen_range(0..exceptional.len())];
        let yj = ExtRat::Finite(y.seifert.slopes()[j].clone());
        let c = exceptional_fiber_complement(&y, j, mu);
        let lc = lspace_interval(&c).unwrap();
        ensure!(
            matches!(lc, LInterval::Bracket(..)),
            "tree {y:?} filled along {}: complement of fiber {j} has interval {lc}",
            ExtRat::Finite(mu.clone())
        );
        ensure!(
            lc.contains(&yj),
            "refilling fiber {j} of {y:?} along {yj} leaves {lc}"
        );
        checked += 1;
    }
    need(checked, cases, "exceptional fiber complements")
}
