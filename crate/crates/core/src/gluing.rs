//! L-space decisions for closed manifolds `Y1 ∪_M Y2` glued along their
//! boundary tori.

use crate::error::Result;
use crate::graph::{lspace_interval, solid_torus_longitude, TreeManifold};
use crate::intervals::{covers_circle, GluingMatrix, LInterval, OpenArc};
use crate::rationals::ExtRat;
use crate::seifert::Base;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Which branch decided the gluing, with its witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GluingCase {
    /// Neither side is a solid torus; the interiors must cover the circle.
    /// Both arcs are in the slope coordinates of `Y2`.
    Cover {
        first_pushed: OpenArc,
        second: OpenArc,
    },
    /// One side is a solid torus, so the union is a Dehn filling of the
    /// other side along `slope` (in that side's coordinates).
    DehnFilling {
        filled: Side,
        slope: ExtRat,
        interval: LInterval,
    },
    /// Both sides are solid tori. The union is a lens space, or `S¹×S²`
    /// when the meridians agree. Meridians are in `Y2` coordinates.
    LensSpace {
        first_meridian: ExtRat,
        second_meridian: ExtRat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingVerdict {
    pub lspace: bool,
    pub case: GluingCase,
}

/// `M` carries boundary slopes of `Y1` to boundary slopes of `Y2`.
pub fn closed_union_is_lspace(
    y1: &TreeManifold,
    y2: &TreeManifold,
    m: &GluingMatrix,
) -> Result<GluingVerdict> {
    // A solid torus's rational longitude is its meridian.
    match (solid_torus_longitude(y1), solid_torus_longitude(y2)) {
        (Some(l1), Some(l2)) => {
            let first_meridian = m.apply(&l1);
            Ok(GluingVerdict {
                lspace: first_meridian != l2,
                case: GluingCase::LensSpace {
                    first_meridian,
                    second_meridian: l2,
                },
            })
        }
        (Some(l1), None) => {
            let slope = m.apply(&l1);
            let interval = lspace_interval(y2)?;
            Ok(GluingVerdict {
                lspace: interval.contains(&slope),
                case: GluingCase::DehnFilling {
                    filled: Side::Second,
                    slope,
                    interval,
                },
            })
        }
        (None, Some(l2)) => {
            let slope = m.inverse().apply(&l2);
            let interval = lspace_interval(y1)?;
            Ok(GluingVerdict {
                lspace: interval.contains(&slope),
                case: GluingCase::DehnFilling {
                    filled: Side::First,
                    slope,
                    interval,
                },
            })
        }
        (None, None) => {
            let first_pushed = lspace_interval(y1)?.interior().push(m);
            let second = lspace_interval(y2)?.interior();
            Ok(GluingVerdict {
                lspace: covers_circle(&first_pushed, &second),
                case: GluingCase::Cover {
                    first_pushed,
                    second,
                },
            })
        }
    }
}

/// Gluing `N̄` so that its rational longitude meets `mu` gives an L-space
/// iff `mu` lies in the interior of `L(Y)`.
pub fn nbar_filling_is_lspace(y: &TreeManifold, mu: &ExtRat) -> Result<bool> {
    Ok(lspace_interval(y)?.interior().contains(mu))
}

/// The regular fiber complement with Seifert slopes `(0, -1/2, 1/2)`, the
/// twisted I-bundle over the Klein bottle, with rational longitude `0`.
pub fn nbar() -> TreeManifold {
    TreeManifold::seifert_piece(
        Base::Orientable,
        &[ExtRat::integer(0), ExtRat::frac(-1, 2), ExtRat::frac(1, 2)],
    )
    .expect("finite slopes")
}
