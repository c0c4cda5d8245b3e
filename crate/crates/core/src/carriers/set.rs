use std::collections::BTreeSet;

use num::Zero;

use super::element::{int, Element, ExtRat, Rat};
use super::interval::{Interval, IntervalUnion, XVal};

/// A subset of one carrier, always kept in canonical form so that
/// structural equality is set equality.
///
/// Phase sets store their nonzero part as a union of angle intervals inside
/// `[0, 2)` (units of pi); an arc crossing angle 0 is stored as two pieces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementSet {
    Finite(BTreeSet<Element>),
    Trop(IntervalUnion),
    Viro(IntervalUnion),
    Phase { zero: bool, arcs: IntervalUnion },
}

pub(crate) fn ext_to_x(e: &ExtRat) -> XVal {
    match e {
        ExtRat::NegInf => XVal::NegInf,
        ExtRat::Fin(r) => XVal::Fin(r.clone()),
    }
}

pub(crate) fn x_to_ext(x: &XVal) -> ExtRat {
    match x {
        XVal::NegInf => ExtRat::NegInf,
        XVal::Fin(r) => ExtRat::Fin(r.clone()),
        XVal::PosInf => panic!("+inf is not a tropical element"),
    }
}

/// Clips an interval union to the angle window `[0, 2)`.
pub(crate) fn clip_angles(u: &IntervalUnion) -> IntervalUnion {
    let window = Interval::new(XVal::Fin(Rat::zero()), true, XVal::Fin(int(2)), false).unwrap();
    u.intersect_interval(&window)
}

impl ElementSet {
    pub fn finite<I: IntoIterator<Item = Element>>(items: I) -> Self {
        ElementSet::Finite(items.into_iter().collect())
    }

    /// The singleton set of the same kind as the carrier of `e`.
    pub fn singleton(e: &Element) -> Self {
        match e {
            Element::Sym(_) | Element::Mod(_) => ElementSet::finite([e.clone()]),
            Element::Trop(x) => ElementSet::Trop(IntervalUnion::point(ext_to_x(x))),
            Element::Viro(r) => ElementSet::Viro(IntervalUnion::point(XVal::Fin(r.clone()))),
            Element::Phase(None) => ElementSet::Phase { zero: true, arcs: IntervalUnion::empty() },
            Element::Phase(Some(r)) => ElementSet::Phase {
                zero: false,
                arcs: IntervalUnion::point(XVal::Fin(r.clone())),
            },
        }
    }

    /// An empty set of the same kind as `self`.
    pub fn empty_like(&self) -> Self {
        match self {
            ElementSet::Finite(_) => ElementSet::Finite(BTreeSet::new()),
            ElementSet::Trop(_) => ElementSet::Trop(IntervalUnion::empty()),
            ElementSet::Viro(_) => ElementSet::Viro(IntervalUnion::empty()),
            ElementSet::Phase { .. } => ElementSet::Phase { zero: false, arcs: IntervalUnion::empty() },
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            ElementSet::Finite(s) => s.is_empty(),
            ElementSet::Trop(u) | ElementSet::Viro(u) => u.is_empty(),
            ElementSet::Phase { zero, arcs } => !zero && arcs.is_empty(),
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (ElementSet::Finite(s), _) => s.contains(e),
            (ElementSet::Trop(u), Element::Trop(x)) => u.contains(&ext_to_x(x)),
            (ElementSet::Viro(u), Element::Viro(r)) => u.contains(&XVal::Fin(r.clone())),
            (ElementSet::Phase { zero, .. }, Element::Phase(None)) => *zero,
            (ElementSet::Phase { arcs, .. }, Element::Phase(Some(r))) => arcs.contains(&XVal::Fin(r.clone())),
            _ => false,
        }
    }

    fn same_kind(&self, other: &ElementSet) -> bool {
        std::mem::discriminant(self) == std::mem::discriminant(other)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        assert!(self.same_kind(other), "union of sets from different carriers");
        match (self, other) {
            (ElementSet::Finite(a), ElementSet::Finite(b)) => ElementSet::Finite(a.union(b).cloned().collect()),
            (ElementSet::Trop(a), ElementSet::Trop(b)) => ElementSet::Trop(a.union(b)),
            (ElementSet::Viro(a), ElementSet::Viro(b)) => ElementSet::Viro(a.union(b)),
            (ElementSet::Phase { zero: za, arcs: a }, ElementSet::Phase { zero: zb, arcs: b }) => {
                ElementSet::Phase { zero: *za || *zb, arcs: a.union(b) }
            }
            _ => unreachable!(),
        }
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        assert!(self.same_kind(other), "intersection of sets from different carriers");
        match (self, other) {
            (ElementSet::Finite(a), ElementSet::Finite(b)) => {
                ElementSet::Finite(a.intersection(b).cloned().collect())
            }
            (ElementSet::Trop(a), ElementSet::Trop(b)) => ElementSet::Trop(a.intersect(b)),
            (ElementSet::Viro(a), ElementSet::Viro(b)) => ElementSet::Viro(a.intersect(b)),
            (ElementSet::Phase { zero: za, arcs: a }, ElementSet::Phase { zero: zb, arcs: b }) => {
                ElementSet::Phase { zero: *za && *zb, arcs: a.intersect(b) }
            }
            _ => unreachable!(),
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.union(other) == *other
    }

    /// The unique member when the set is a singleton.
    pub fn as_singleton(&self) -> Option<Element> {
        match self {
            ElementSet::Finite(s) if s.len() == 1 => s.iter().next().cloned(),
            ElementSet::Trop(u) => u.as_point().map(|x| Element::Trop(x_to_ext(x))),
            ElementSet::Viro(u) => u.as_point().and_then(|x| x.fin().cloned()).map(Element::Viro),
            ElementSet::Phase { zero: true, arcs } if arcs.is_empty() => Some(Element::Phase(None)),
            ElementSet::Phase { zero: false, arcs } => {
                arcs.as_point().and_then(|x| x.fin().cloned()).map(|r| Element::Phase(Some(r)))
            }
            _ => None,
        }
    }

    pub fn is_finite_kind(&self) -> bool {
        matches!(self, ElementSet::Finite(_))
    }

    /// Finite member list, when the set is given by enumeration.
    pub fn members(&self) -> Option<Vec<Element>> {
        match self {
            ElementSet::Finite(s) => Some(s.iter().cloned().collect()),
            _ => self.as_singleton().map(|e| vec![e]),
        }
    }

    /// Representative members: every member of a finite set, otherwise per
    /// component the closed upper endpoint, the closed lower endpoint and an
    /// interior point, in that order.
    pub fn representatives(&self) -> Vec<Element> {
        fn from_union(u: &IntervalUnion, wrap: &dyn Fn(&XVal) -> Option<Element>) -> Vec<Element> {
            let mut out = Vec::new();
            for p in u.parts().iter().rev() {
                let mut push = |x: &XVal| {
                    if let Some(e) = wrap(x) {
                        if !out.contains(&e) {
                            out.push(e);
                        }
                    }
                };
                if p.hi_closed {
                    push(&p.hi);
                }
                if p.lo_closed {
                    push(&p.lo);
                }
                if !p.is_point() {
                    push(&p.interior_point());
                }
            }
            out
        }
        match self {
            ElementSet::Finite(s) => s.iter().cloned().collect(),
            ElementSet::Trop(u) => from_union(u, &|x| match x {
                XVal::PosInf => None,
                _ => Some(Element::Trop(x_to_ext(x))),
            }),
            ElementSet::Viro(u) => from_union(u, &|x| x.fin().cloned().map(Element::Viro)),
            ElementSet::Phase { zero, arcs } => {
                let mut out = from_union(arcs, &|x| x.fin().cloned().map(|r| Element::Phase(Some(r))));
                if *zero {
                    out.push(Element::Phase(None));
                }
                out
            }
        }
    }

    /// Removes the given element (used to drop zero from domains).
    pub fn remove(&self, e: &Element) -> ElementSet {
        match (self, e) {
            (ElementSet::Finite(s), _) => {
                let mut s = s.clone();
                s.remove(e);
                ElementSet::Finite(s)
            }
            (ElementSet::Trop(u), Element::Trop(x)) => ElementSet::Trop(remove_point(u, &ext_to_x(x))),
            (ElementSet::Viro(u), Element::Viro(r)) => ElementSet::Viro(remove_point(u, &XVal::Fin(r.clone()))),
            (ElementSet::Phase { arcs, .. }, Element::Phase(None)) => {
                ElementSet::Phase { zero: false, arcs: arcs.clone() }
            }
            (ElementSet::Phase { zero, arcs }, Element::Phase(Some(r))) => ElementSet::Phase {
                zero: *zero,
                arcs: remove_point(arcs, &XVal::Fin(r.clone())),
            },
            _ => self.clone(),
        }
    }
}

fn remove_point(u: &IntervalUnion, x: &XVal) -> IntervalUnion {
    let mut out = Vec::new();
    for p in u.parts() {
        if !p.contains(x) {
            out.push(p.clone());
            continue;
        }
        if let Some(l) = Interval::new(p.lo.clone(), p.lo_closed, x.clone(), false) {
            out.push(l);
        }
        if let Some(r) = Interval::new(x.clone(), false, p.hi.clone(), p.hi_closed) {
            out.push(r);
        }
    }
    IntervalUnion::from_parts(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn removing_a_point_splits_an_interval() {
        let s = ElementSet::Trop(IntervalUnion::from_interval(
            Interval::closed(XVal::NegInf, XVal::Fin(int(3))).unwrap(),
        ));
        let t = s.remove(&Element::trop(1));
        assert!(!t.contains(&Element::trop(1)));
        assert!(t.contains(&Element::trop(0)));
        assert!(t.contains(&Element::neg_inf()));
        let z = s.remove(&Element::neg_inf());
        assert!(!z.contains(&Element::neg_inf()));
    }

    #[test]
    fn representatives_prefer_upper_endpoint() {
        let s = ElementSet::Trop(IntervalUnion::from_interval(
            Interval::closed(XVal::NegInf, XVal::Fin(int(0))).unwrap(),
        ));
        assert_eq!(
            s.representatives(),
            vec![Element::trop(0), Element::neg_inf(), Element::trop(-1)]
        );
    }

    #[test]
    fn singleton_detection() {
        assert_eq!(
            ElementSet::singleton(&Element::phase(int(3))).as_singleton(),
            Some(Element::phase(int(1)))
        );
        assert_eq!(ElementSet::singleton(&Element::neg_inf()).as_singleton(), Some(Element::neg_inf()));
    }
}
