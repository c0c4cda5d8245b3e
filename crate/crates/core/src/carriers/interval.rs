//! Finite unions of rational intervals in canonical form.
//!
//! Endpoints live in the rationals extended by both infinities. A closed
//! endpoint at `NegInf` means the point `-inf` itself is a member, which is
//! how the tropical zero is represented. `PosInf` is never a member.

use std::cmp::Ordering;

use num::Zero;

use super::element::{format_rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum XVal {
    NegInf,
    Fin(Rat),
    PosInf,
}

impl XVal {
    pub fn fin(&self) -> Option<&Rat> {
        match self {
            XVal::Fin(r) => Some(r),
            _ => None,
        }
    }

    pub fn add(&self, other: &XVal) -> XVal {
        match (self, other) {
            (XVal::Fin(a), XVal::Fin(b)) => XVal::Fin(a + b),
            (XVal::NegInf, XVal::PosInf) | (XVal::PosInf, XVal::NegInf) => {
                panic!("indeterminate sum of infinities")
            }
            (XVal::NegInf, _) | (_, XVal::NegInf) => XVal::NegInf,
            _ => XVal::PosInf,
        }
    }

    pub fn neg(&self) -> XVal {
        match self {
            XVal::NegInf => XVal::PosInf,
            XVal::PosInf => XVal::NegInf,
            XVal::Fin(r) => XVal::Fin(-r),
        }
    }

    pub fn label(&self) -> String {
        match self {
            XVal::NegInf => "-inf".into(),
            XVal::PosInf => "inf".into(),
            XVal::Fin(r) => format_rat(r),
        }
    }
}

/// A nonempty interval. Invariant: `lo < hi`, or `lo == hi` with both ends closed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: XVal,
    pub lo_closed: bool,
    pub hi: XVal,
    pub hi_closed: bool,
}

impl Interval {
    /// Builds an interval, returning `None` when it would be empty.
    pub fn new(lo: XVal, lo_closed: bool, hi: XVal, hi_closed: bool) -> Option<Interval> {
        let hi_closed = hi_closed && hi != XVal::PosInf;
        let lo_closed = lo_closed && lo != XVal::PosInf;
        match lo.cmp(&hi) {
            Ordering::Less => Some(Interval { lo, lo_closed, hi, hi_closed }),
            Ordering::Equal if lo_closed && hi_closed => Some(Interval { lo, lo_closed, hi, hi_closed }),
            _ => None,
        }
    }

    pub fn closed(lo: XVal, hi: XVal) -> Option<Interval> {
        Interval::new(lo, true, hi, true)
    }

    pub fn point(x: XVal) -> Interval {
        Interval { lo: x.clone(), lo_closed: true, hi: x, hi_closed: true }
    }

    pub fn contains(&self, x: &XVal) -> bool {
        let above = match self.lo.cmp(x) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Greater => false,
        };
        let below = match x.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        above && below
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            Ordering::Greater => (self.lo.clone(), self.lo_closed),
            Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            Ordering::Less => (self.hi.clone(), self.hi_closed),
            Ordering::Greater => (other.hi.clone(), other.hi_closed),
            Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval::new(lo, lo_closed, hi, hi_closed)
    }

    /// A point strictly inside the interval, or the point itself for degenerate intervals.
    pub fn interior_point(&self) -> XVal {
        match (&self.lo, &self.hi) {
            (XVal::Fin(a), XVal::Fin(b)) => XVal::Fin((a + b) / Rat::from_integer(2.into())),
            (XVal::NegInf, XVal::Fin(b)) => XVal::Fin(b - Rat::from_integer(1.into())),
            (XVal::Fin(a), XVal::PosInf) => XVal::Fin(a + Rat::from_integer(1.into())),
            (XVal::NegInf, XVal::PosInf) => XVal::Fin(Rat::zero()),
            (XVal::NegInf, XVal::NegInf) => XVal::NegInf,
            _ => unreachable!("interval invariant"),
        }
    }

    pub fn label(&self) -> String {
        if self.is_point() {
            return format!("{{{}}}", self.lo.label());
        }
        format!(
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo.label(),
            self.hi.label(),
            if self.hi_closed { ']' } else { ')' }
        )
    }

    /// Starts before `other` in the canonical sort.
    fn sort_key_cmp(&self, other: &Interval) -> Ordering {
        self.lo
            .cmp(&other.lo)
            .then_with(|| other.lo_closed.cmp(&self.lo_closed))
    }
}

/// Sorted, pairwise disjoint, maximal intervals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalUnion {
    parts: Vec<Interval>,
}

impl IntervalUnion {
    pub fn empty() -> Self {
        IntervalUnion { parts: Vec::new() }
    }

    pub fn from_interval(i: Interval) -> Self {
        IntervalUnion { parts: vec![i] }
    }

    pub fn point(x: XVal) -> Self {
        IntervalUnion::from_interval(Interval::point(x))
    }

    pub fn from_parts<I: IntoIterator<Item = Interval>>(parts: I) -> Self {
        let mut parts: Vec<Interval> = parts.into_iter().collect();
        parts.sort_by(|a, b| a.sort_key_cmp(b));
        let mut out: Vec<Interval> = Vec::with_capacity(parts.len());
        for p in parts {
            if let Some(last) = out.last_mut() {
                let touches = match p.lo.cmp(&last.hi) {
                    Ordering::Less => true,
                    Ordering::Equal => last.hi_closed || p.lo_closed,
                    Ordering::Greater => false,
                };
                if touches {
                    match p.hi.cmp(&last.hi) {
                        Ordering::Greater => {
                            last.hi = p.hi;
                            last.hi_closed = p.hi_closed;
                        }
                        Ordering::Equal => last.hi_closed |= p.hi_closed,
                        Ordering::Less => {}
                    }
                    continue;
                }
            }
            out.push(p);
        }
        IntervalUnion { parts: out }
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: &XVal) -> bool {
        self.parts.iter().any(|p| p.contains(x))
    }

    pub fn union(&self, other: &IntervalUnion) -> IntervalUnion {
        IntervalUnion::from_parts(self.parts.iter().chain(other.parts.iter()).cloned())
    }

    pub fn intersect(&self, other: &IntervalUnion) -> IntervalUnion {
        let mut out = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                if let Some(c) = a.intersect(b) {
                    out.push(c);
                }
            }
        }
        IntervalUnion::from_parts(out)
    }

    pub fn intersect_interval(&self, i: &Interval) -> IntervalUnion {
        self.intersect(&IntervalUnion::from_interval(i.clone()))
    }

    pub fn is_subset(&self, other: &IntervalUnion) -> bool {
        self.union(other) == *other
    }

    pub fn as_point(&self) -> Option<&XVal> {
        match self.parts.as_slice() {
            [p] if p.is_point() => Some(&p.lo),
            _ => None,
        }
    }

    /// Infimum of the set together with whether it is attained.
    pub fn inf(&self) -> Option<(&XVal, bool)> {
        self.parts.first().map(|p| (&p.lo, p.lo_closed))
    }

    /// Supremum of the set together with whether it is attained.
    pub fn sup(&self) -> Option<(&XVal, bool)> {
        self.parts.last().map(|p| (&p.hi, p.hi_closed))
    }

    /// Applies an order-preserving (`reverse == false`) or order-reversing
    /// bijection to every endpoint.
    pub fn map_monotone<F: Fn(&XVal) -> XVal>(&self, f: F, reverse: bool) -> IntervalUnion {
        IntervalUnion::from_parts(self.parts.iter().filter_map(|p| {
            if reverse {
                Interval::new(f(&p.hi), p.hi_closed, f(&p.lo), p.lo_closed)
            } else {
                Interval::new(f(&p.lo), p.lo_closed, f(&p.hi), p.hi_closed)
            }
        }))
    }

    pub fn label(&self) -> String {
        if self.parts.is_empty() {
            return "{}".into();
        }
        self.parts.iter().map(Interval::label).collect::<Vec<_>>().join(" ∪ ")
    }
}
