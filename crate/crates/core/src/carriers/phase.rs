//! Exact arc arithmetic for the phase hyperfield.
//!
//! Angles are rationals in units of pi. A set of nonzero phases is an
//! [`IntervalUnion`] inside `[0, 2)`.

use num::{One, Signed, Zero};

use super::element::{int, Rat};
use super::interval::{Interval, IntervalUnion, XVal};

fn fin(r: Rat) -> XVal {
    XVal::Fin(r)
}

fn endpoints(i: &Interval) -> (Rat, Rat) {
    (
        i.lo.fin().cloned().expect("finite angle"),
        i.hi.fin().cloned().expect("finite angle"),
    )
}

/// The arc running counterclockwise from `lo` to `hi` (`lo <= hi`, any
/// real offsets), wrapped onto `[0, 2)`.
pub fn arc_from(lo: Rat, lo_closed: bool, hi: Rat, hi_closed: bool) -> IntervalUnion {
    let two = int(2);
    let shift = (&lo / &two).floor() * &two;
    let lo = lo - &shift;
    let hi = hi - &shift;
    let len = &hi - &lo;
    debug_assert!(!len.is_negative());
    let full = || Interval::new(fin(Rat::zero()), true, fin(two.clone()), false).unwrap();
    if len > two {
        return IntervalUnion::from_interval(full());
    }
    if len == two {
        let circle = IntervalUnion::from_interval(full());
        if lo_closed || hi_closed {
            return circle;
        }
        let pt = fin(lo);
        return IntervalUnion::from_parts(circle.parts().iter().flat_map(|p| {
            [
                Interval::new(p.lo.clone(), p.lo_closed, pt.clone(), false),
                Interval::new(pt.clone(), false, p.hi.clone(), p.hi_closed),
            ]
            .into_iter()
            .flatten()
        }));
    }
    let mut parts = Vec::new();
    if hi < two {
        parts.extend(Interval::new(fin(lo), lo_closed, fin(hi), hi_closed));
    } else if hi == two {
        parts.extend(Interval::new(fin(lo), lo_closed, fin(two), false));
        if hi_closed {
            parts.push(Interval::point(fin(Rat::zero())));
        }
    } else {
        parts.extend(Interval::new(fin(lo), lo_closed, fin(two.clone()), false));
        parts.extend(Interval::new(fin(Rat::zero()), true, fin(hi - two), hi_closed));
    }
    IntervalUnion::from_parts(parts)
}

pub fn rotate(arcs: &IntervalUnion, by: &Rat) -> IntervalUnion {
    let mut out = IntervalUnion::empty();
    for p in arcs.parts() {
        let (lo, hi) = endpoints(p);
        out = out.union(&arc_from(lo + by, p.lo_closed, hi + by, p.hi_closed));
    }
    out
}

/// Angle negation, i.e. complex conjugation / multiplicative inversion.
pub fn negate(arcs: &IntervalUnion) -> IntervalUnion {
    let mut out = IntervalUnion::empty();
    for p in arcs.parts() {
        let (lo, hi) = endpoints(p);
        out = out.union(&arc_from(-hi, p.hi_closed, -lo, p.lo_closed));
    }
    out
}

/// Elementwise product of two arc sets (Minkowski sum of angles mod 2).
pub fn minkowski(a: &IntervalUnion, b: &IntervalUnion) -> IntervalUnion {
    let mut out = IntervalUnion::empty();
    for p in a.parts() {
        for q in b.parts() {
            let (l1, h1) = endpoints(p);
            let (l2, h2) = endpoints(q);
            out = out.union(&arc_from(l1 + l2, p.lo_closed && q.lo_closed, h1 + h2, p.hi_closed && q.hi_closed));
        }
    }
    out
}

/// `inf { s > 0 : z - s ∈ arcs (mod 2) }`.
fn clockwise_gap(z: &Rat, arcs: &IntervalUnion) -> Option<Rat> {
    let mut best: Option<Rat> = None;
    for p in arcs.parts() {
        let (lo, hi) = endpoints(p);
        for k in 0..2 {
            let off = int(2 * k);
            let top = z - &lo + &off;
            if !top.is_positive() {
                continue;
            }
            let bottom = z - &hi + &off;
            let cand = if bottom.is_positive() { bottom } else { Rat::zero() };
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best
}

/// `inf { t > 0 : z + t ∈ arcs (mod 2) }`.
fn counterclockwise_gap(z: &Rat, arcs: &IntervalUnion) -> Option<Rat> {
    let mut best: Option<Rat> = None;
    for p in arcs.parts() {
        let (lo, hi) = endpoints(p);
        for k in 0..2 {
            let off = int(2 * k);
            let top = &hi - z + &off;
            if !top.is_positive() {
                continue;
            }
            let bottom = &lo - z + &off;
            let cand = if bottom.is_positive() { bottom } else { Rat::zero() };
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best
}

/// Points lying strictly inside an open minor arc that starts (clockwise
/// end) in `a` and ends (counterclockwise end) in `b`.
///
/// `z` qualifies iff the clockwise gap to `a` plus the counterclockwise gap
/// to `b` is below 1. Both gaps are piecewise linear in `z` with breaks only
/// at arc endpoints, so each segment is solved as a linear inequality.
fn open_arcs_between(a: &IntervalUnion, b: &IntervalUnion) -> IntervalUnion {
    if a.is_empty() || b.is_empty() {
        return IntervalUnion::empty();
    }
    let one = Rat::one();
    let gap = |z: &Rat| -> Rat {
        clockwise_gap(z, a).expect("nonempty") + counterclockwise_gap(z, b).expect("nonempty")
    };
    let mut breaks: Vec<Rat> = vec![Rat::zero()];
    for p in a.parts().iter().chain(b.parts()) {
        let (lo, hi) = endpoints(p);
        breaks.push(lo);
        breaks.push(hi);
    }
    breaks.retain(|x| *x < int(2));
    breaks.sort();
    breaks.dedup();
    let mut parts = Vec::new();
    for (j, l) in breaks.iter().enumerate() {
        if gap(l) < one {
            parts.push(Interval::point(fin(l.clone())));
        }
        let r = breaks.get(j + 1).cloned().unwrap_or_else(|| int(2));
        let third = (&r - l) / int(3);
        let m1 = l + &third;
        let m2 = &m1 + &third;
        let f1 = gap(&m1);
        let slope = (gap(&m2) - &f1) / &third;
        let piece = if slope.is_zero() {
            if f1 < one {
                Interval::new(fin(l.clone()), false, fin(r.clone()), false)
            } else {
                None
            }
        } else {
            let root = &m1 + (&one - &f1) / &slope;
            if slope.is_positive() {
                let hi = if root < r { root } else { r.clone() };
                Interval::new(fin(l.clone()), false, fin(hi), false)
            } else {
                let lo = if root > *l { root } else { l.clone() };
                Interval::new(fin(lo), false, fin(r.clone()), false)
            }
        };
        parts.extend(piece);
    }
    IntervalUnion::from_parts(parts)
}

/// Hyperaddition of two phase sets given by zero flags and arc unions.
pub fn add_sets(za: bool, a: &IntervalUnion, zb: bool, b: &IntervalUnion) -> (bool, IntervalUnion) {
    let mut zero = false;
    let mut arcs = IntervalUnion::empty();
    if za {
        zero |= zb;
        arcs = arcs.union(b);
    }
    if zb {
        zero |= za;
        arcs = arcs.union(a);
    }
    arcs = arcs
        .union(&open_arcs_between(a, b))
        .union(&open_arcs_between(b, a))
        .union(&a.intersect(b));
    let antipodal = a.intersect(&rotate(b, &Rat::one()));
    if !antipodal.is_empty() {
        zero = true;
        arcs = arcs.union(&antipodal).union(&rotate(&antipodal, &Rat::one()));
    }
    (zero, arcs)
}
