use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::element::{format_rat, int, parse_rat, reduce_angle, Element, ExtRat, Rat};
use super::finite::FiniteTable;
use super::interval::{Interval, IntervalUnion, XVal};
use super::phase;
use super::set::{clip_angles, ext_to_x, ElementSet};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Table(Arc<FiniteTable>),
    Prime(u64),
    Tropical,
    Viro,
    Phase,
}

/// A hyperfield: carrier, single-valued multiplication and set-valued
/// hyperaddition. Cheap to clone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperfield {
    kind: Kind,
}

impl fmt::Display for Hyperfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Hyperfield {
    pub fn krasner() -> Self {
        Hyperfield::from_table(FiniteTable::krasner())
    }

    pub fn signs() -> Self {
        Hyperfield::from_table(FiniteTable::signs())
    }

    pub fn weak_signs() -> Self {
        Hyperfield::from_table(FiniteTable::weak_signs())
    }

    pub fn tropical() -> Self {
        Hyperfield { kind: Kind::Tropical }
    }

    pub fn viro() -> Self {
        Hyperfield { kind: Kind::Viro }
    }

    pub fn phase() -> Self {
        Hyperfield { kind: Kind::Phase }
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::UnknownHyperfield(format!("GF({p}): {p} is not prime")));
        }
        Ok(Hyperfield { kind: Kind::Prime(p) })
    }

    pub fn from_table(t: FiniteTable) -> Self {
        Hyperfield { kind: Kind::Table(Arc::new(t)) }
    }

    /// Selects a hyperfield by name: `K`, `S`, `W`, `T`, `V`, `P`, `GF(p)`
    /// `W(Zn,k)` for the cyclic group `Z/n` with `e = g^k`, or `W(G,e):<table-file>`.
    pub fn by_name(name: &str) -> Result<Self> {
        let name = name.trim();
        match name {
            "K" => return Ok(Hyperfield::krasner()),
            "S" => return Ok(Hyperfield::signs()),
            "W" => return Ok(Hyperfield::weak_signs()),
            "T" => return Ok(Hyperfield::tropical()),
            "V" => return Ok(Hyperfield::viro()),
            "P" => return Ok(Hyperfield::phase()),
            _ => {}
        }
        if let Some(p) = name.strip_prefix("GF(").and_then(|s| s.strip_suffix(')')) {
            let p: u64 = p.trim().parse().map_err(|_| Error::UnknownHyperfield(name.into()))?;
            return Hyperfield::prime(p);
        }
        if let Some((n, k)) = name.strip_prefix("W(Z").and_then(|s| s.strip_suffix(')')).and_then(|s| s.split_once(',')) {
            let n: usize = n.trim().parse().map_err(|_| Error::UnknownHyperfield(name.into()))?;
            let k: usize = k.trim().parse().map_err(|_| Error::UnknownHyperfield(name.into()))?;
            return Ok(Hyperfield::from_table(FiniteTable::weak_cyclic(n, k)?));
        }
        if let Some(path) = name.strip_prefix("W(G,e):") {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidTable(format!("cannot read {path}: {e}")))?;
            return Ok(Hyperfield::from_table(FiniteTable::weak_from_cayley(name, &text)?));
        }
        Err(Error::UnknownHyperfield(name.into()))
    }

    pub fn name(&self) -> String {
        match &self.kind {
            Kind::Table(t) => t.name.clone(),
            Kind::Prime(p) => format!("GF({p})"),
            Kind::Tropical => "T".into(),
            Kind::Viro => "V".into(),
            Kind::Phase => "P".into(),
        }
    }

    pub fn table(&self) -> Option<&FiniteTable> {
        match &self.kind {
            Kind::Table(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, Kind::Table(_) | Kind::Prime(_))
    }

    pub fn is_tropical(&self) -> bool {
        matches!(self.kind, Kind::Tropical)
    }

    /// Every element of a finite carrier, in index order.
    pub fn elements(&self) -> Option<Vec<Element>> {
        match &self.kind {
            Kind::Table(t) => Some((0..t.len()).map(Element::Sym).collect()),
            Kind::Prime(p) => Some((0..*p).map(Element::Mod).collect()),
            _ => None,
        }
    }

    pub fn zero(&self) -> Element {
        match &self.kind {
            Kind::Table(t) => Element::Sym(t.zero),
            Kind::Prime(_) => Element::Mod(0),
            Kind::Tropical => Element::neg_inf(),
            Kind::Viro => Element::Viro(Rat::zero()),
            Kind::Phase => Element::Phase(None),
        }
    }

    pub fn one(&self) -> Element {
        match &self.kind {
            Kind::Table(t) => Element::Sym(t.one),
            Kind::Prime(_) => Element::Mod(1),
            Kind::Tropical => Element::trop(0),
            Kind::Viro => Element::Viro(Rat::one()),
            Kind::Phase => Element::Phase(Some(Rat::zero())),
        }
    }

    pub fn is_zero(&self, e: &Element) -> bool {
        *e == self.zero()
    }

    pub fn owns(&self, e: &Element) -> bool {
        match (&self.kind, e) {
            (Kind::Table(t), Element::Sym(i)) => *i < t.len(),
            (Kind::Prime(p), Element::Mod(x)) => x < p,
            (Kind::Tropical, Element::Trop(_)) => true,
            (Kind::Viro, Element::Viro(r)) => !r.is_negative(),
            (Kind::Phase, Element::Phase(None)) => true,
            (Kind::Phase, Element::Phase(Some(r))) => !r.is_negative() && *r < int(2),
            _ => false,
        }
    }

    pub fn check(&self, e: &Element) -> Result<()> {
        if self.owns(e) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch { hyperfield: self.name(), element: format!("{e:?}") })
        }
    }

    fn check_set(&self, s: &ElementSet) -> Result<()> {
        let ok = matches!(
            (&self.kind, s),
            (Kind::Table(_) | Kind::Prime(_), ElementSet::Finite(_))
                | (Kind::Tropical, ElementSet::Trop(_))
                | (Kind::Viro, ElementSet::Viro(_))
                | (Kind::Phase, ElementSet::Phase { .. })
        );
        if ok {
            Ok(())
        } else {
            Err(Error::CarrierMismatch { hyperfield: self.name(), element: self.format_set(s) })
        }
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Element, y: &Element) -> Element {
        match (&self.kind, x, y) {
            (Kind::Table(t), Element::Sym(a), Element::Sym(b)) => Element::Sym(t.mul[*a][*b]),
            (Kind::Prime(p), Element::Mod(a), Element::Mod(b)) => Element::Mod(((*a as u128 * *b as u128) % *p as u128) as u64),
            (Kind::Tropical, Element::Trop(a), Element::Trop(b)) => Element::Trop(a.add(b)),
            (Kind::Viro, Element::Viro(a), Element::Viro(b)) => Element::Viro(a * b),
            (Kind::Phase, Element::Phase(Some(a)), Element::Phase(Some(b))) => Element::Phase(Some(reduce_angle(&(a + b)))),
            (Kind::Phase, _, _) => Element::Phase(None),
            _ => panic!("mixed carriers"),
        }
    }

    /// `x` multiplied by itself `n` times (`x^0` is one).
    pub fn pow(&self, x: &Element, n: usize) -> Element {
        (0..n).fold(self.one(), |acc, _| self.mul_unchecked(&acc, x))
    }

    pub fn neg(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        Ok(match (&self.kind, x) {
            (Kind::Table(t), Element::Sym(a)) => Element::Sym(t.neg[*a]),
            (Kind::Prime(p), Element::Mod(a)) => Element::Mod((p - a) % p),
            (Kind::Tropical, _) | (Kind::Viro, _) => x.clone(),
            (Kind::Phase, Element::Phase(Some(r))) => Element::phase(r + Rat::one()),
            (Kind::Phase, _) => x.clone(),
            _ => unreachable!(),
        })
    }

    pub fn inv(&self, x: &Element) -> Result<Element> {
        self.check(x)?;
        if self.is_zero(x) {
            return Err(Error::InverseOfZero);
        }
        Ok(match (&self.kind, x) {
            (Kind::Table(t), Element::Sym(a)) => {
                Element::Sym(t.inv[*a].ok_or_else(|| Error::InvalidTable(format!("{} has no inverse", t.symbols[*a])))?)
            }
            (Kind::Prime(p), Element::Mod(a)) => {
                let inv = BigInt::from(*a).modpow(&BigInt::from(p - 2), &BigInt::from(*p));
                Element::Mod(inv.to_u64().expect("residue fits"))
            }
            (Kind::Tropical, Element::Trop(ExtRat::Fin(r))) => Element::trop_rat(-r),
            (Kind::Viro, Element::Viro(r)) => Element::Viro(r.recip()),
            (Kind::Phase, Element::Phase(Some(r))) => Element::phase(-r),
            _ => unreachable!(),
        })
    }

    pub fn singleton(&self, e: &Element) -> ElementSet {
        ElementSet::singleton(e)
    }

    pub fn empty_set(&self) -> ElementSet {
        match self.kind {
            Kind::Table(_) | Kind::Prime(_) => ElementSet::Finite(BTreeSet::new()),
            Kind::Tropical => ElementSet::Trop(IntervalUnion::empty()),
            Kind::Viro => ElementSet::Viro(IntervalUnion::empty()),
            Kind::Phase => ElementSet::Phase { zero: false, arcs: IntervalUnion::empty() },
        }
    }

    /// The whole carrier as a set.
    pub fn full_set(&self) -> ElementSet {
        match self.kind {
            Kind::Table(_) | Kind::Prime(_) => ElementSet::finite(self.elements().unwrap()),
            Kind::Tropical => ElementSet::Trop(IntervalUnion::from_interval(
                Interval::new(XVal::NegInf, true, XVal::PosInf, false).unwrap(),
            )),
            Kind::Viro => ElementSet::Viro(IntervalUnion::from_interval(
                Interval::new(XVal::Fin(Rat::zero()), true, XVal::PosInf, false).unwrap(),
            )),
            Kind::Phase => ElementSet::Phase {
                zero: true,
                arcs: IntervalUnion::from_interval(
                    Interval::new(XVal::Fin(Rat::zero()), true, XVal::Fin(int(2)), false).unwrap(),
                ),
            },
        }
    }

    pub fn nonzero_set(&self) -> ElementSet {
        self.full_set().remove(&self.zero())
    }

    /// Single hyperaddition `x ⊞ y`.
    pub fn hyperadd(&self, x: &Element, y: &Element) -> Result<ElementSet> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.hyperadd_unchecked(x, y))
    }

    pub(crate) fn hyperadd_unchecked(&self, x: &Element, y: &Element) -> ElementSet {
        match (&self.kind, x, y) {
            (Kind::Table(t), Element::Sym(a), Element::Sym(b)) => {
                ElementSet::Finite(t.add[*a][*b].iter().map(|&i| Element::Sym(i)).collect())
            }
            (Kind::Prime(p), Element::Mod(a), Element::Mod(b)) => ElementSet::finite([Element::Mod((a + b) % p)]),
            (Kind::Tropical, Element::Trop(a), Element::Trop(b)) => {
                if a == b {
                    ElementSet::Trop(IntervalUnion::from_interval(Interval::closed(XVal::NegInf, ext_to_x(a)).unwrap()))
                } else {
                    ElementSet::singleton(&Element::Trop(a.clone().max(b.clone())))
                }
            }
            (Kind::Viro, Element::Viro(a), Element::Viro(b)) => ElementSet::Viro(IntervalUnion::from_interval(
                Interval::closed(XVal::Fin((a - b).abs()), XVal::Fin(a + b)).unwrap(),
            )),
            (Kind::Phase, _, _) => self.set_hyperadd_unchecked(&ElementSet::singleton(x), &ElementSet::singleton(y)),
            _ => panic!("mixed carriers"),
        }
    }

    /// `A ⊞ B = ⋃ a ⊞ b`, computed exactly from the set descriptions.
    pub fn set_hyperadd(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        self.check_set(a)?;
        self.check_set(b)?;
        if a.is_empty() || b.is_empty() {
            return Err(Error::Empty("hyperaddition of an empty set"));
        }
        Ok(self.set_hyperadd_unchecked(a, b))
    }

    /// Like [`Self::set_hyperadd`] but an empty operand yields the empty set.
    pub(crate) fn set_hyperadd_unchecked(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        if a.is_empty() || b.is_empty() {
            return self.empty_set();
        }
        match (a, b) {
            (ElementSet::Finite(sa), ElementSet::Finite(sb)) => {
                let mut out = BTreeSet::new();
                for x in sa {
                    for y in sb {
                        if let ElementSet::Finite(s) = self.hyperadd_unchecked(x, y) {
                            out.extend(s);
                        }
                    }
                }
                ElementSet::Finite(out)
            }
            (ElementSet::Trop(ua), ElementSet::Trop(ub)) => ElementSet::Trop(tropical_set_add(ua, ub)),
            (ElementSet::Viro(ua), ElementSet::Viro(ub)) => ElementSet::Viro(viro_set_add(ua, ub)),
            (ElementSet::Phase { zero: za, arcs: aa }, ElementSet::Phase { zero: zb, arcs: ab }) => {
                let (zero, arcs) = phase::add_sets(*za, aa, *zb, ab);
                ElementSet::Phase { zero, arcs }
            }
            _ => panic!("mixed carriers"),
        }
    }

    /// Iterated hyperaddition of a nonempty list of elements.
    pub fn hypersum(&self, xs: &[Element]) -> Result<ElementSet> {
        let (first, rest) = xs.split_first().ok_or(Error::Empty("hypersum of no elements"))?;
        self.check(first)?;
        let mut acc = ElementSet::singleton(first);
        for x in rest {
            self.check(x)?;
            acc = self.set_hyperadd_unchecked(&acc, &ElementSet::singleton(x));
        }
        Ok(acc)
    }

    /// Iterated hyperaddition of sets; an empty list gives `{0}`.
    pub fn set_hypersum(&self, sets: &[ElementSet]) -> ElementSet {
        let mut it = sets.iter();
        let Some(first) = it.next() else {
            return ElementSet::singleton(&self.zero());
        };
        it.fold(first.clone(), |acc, s| self.set_hyperadd_unchecked(&acc, s))
    }

    /// Elementwise product `{ x y : x ∈ A, y ∈ B }`.
    pub fn set_mul(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        if a.is_empty() || b.is_empty() {
            return self.empty_set();
        }
        match (a, b) {
            (ElementSet::Finite(sa), ElementSet::Finite(sb)) => {
                ElementSet::Finite(sa.iter().flat_map(|x| sb.iter().map(move |y| self.mul_unchecked(x, y))).collect())
            }
            (ElementSet::Trop(ua), ElementSet::Trop(ub)) => ElementSet::Trop(tropical_set_mul(ua, ub)),
            (ElementSet::Viro(ua), ElementSet::Viro(ub)) => ElementSet::Viro(viro_set_mul(ua, ub)),
            (ElementSet::Phase { zero: za, arcs: aa }, ElementSet::Phase { zero: zb, arcs: ab }) => {
                ElementSet::Phase { zero: *za || *zb, arcs: phase::minkowski(aa, ab) }
            }
            _ => panic!("mixed carriers"),
        }
    }

    pub fn scale_set(&self, c: &Element, a: &ElementSet) -> ElementSet {
        self.set_mul(&ElementSet::singleton(c), a)
    }

    pub fn neg_set(&self, a: &ElementSet) -> ElementSet {
        match a {
            ElementSet::Finite(s) => ElementSet::Finite(s.iter().map(|x| self.neg(x).expect("own element")).collect()),
            ElementSet::Trop(_) | ElementSet::Viro(_) => a.clone(),
            ElementSet::Phase { zero, arcs } => ElementSet::Phase { zero: *zero, arcs: phase::rotate(arcs, &Rat::one()) },
        }
    }

    /// `{ x^-1 : x ∈ A, x ≠ 0 }`.
    pub fn inv_set(&self, a: &ElementSet) -> ElementSet {
        let a = a.remove(&self.zero());
        match &a {
            ElementSet::Finite(s) => ElementSet::Finite(s.iter().map(|x| self.inv(x).expect("nonzero")).collect()),
            ElementSet::Trop(u) => ElementSet::Trop(u.map_monotone(XVal::neg, true)),
            ElementSet::Viro(u) => ElementSet::Viro(u.map_monotone(
                |x| match x {
                    XVal::Fin(r) if r.is_zero() => XVal::PosInf,
                    XVal::Fin(r) => XVal::Fin(r.recip()),
                    XVal::PosInf => XVal::Fin(Rat::zero()),
                    XVal::NegInf => unreachable!("nonnegative carrier"),
                },
                true,
            )),
            ElementSet::Phase { arcs, .. } => ElementSet::Phase { zero: false, arcs: phase::negate(arcs) },
        }
    }

    /// Parses one coefficient literal for this carrier.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        let bad = || Error::Parse(format!("`{t}` is not an element of {}", self.name()));
        match &self.kind {
            Kind::Table(table) => table
                .symbols
                .iter()
                .position(|s| s == t)
                .map(Element::Sym)
                .ok_or_else(bad),
            Kind::Prime(p) => {
                let r = parse_rat(t).ok_or_else(bad)?;
                let m = BigInt::from(*p);
                let den = r.denom().mod_floor(&m);
                if den.is_zero() {
                    return Err(bad());
                }
                let den_inv = den.modpow(&(&m - BigInt::from(2)), &m);
                let v = (r.numer().mod_floor(&m) * den_inv).mod_floor(&m);
                Ok(Element::Mod(v.to_u64().expect("residue fits")))
            }
            Kind::Tropical => {
                if t == "-inf" {
                    Ok(Element::neg_inf())
                } else {
                    parse_rat(t).map(Element::trop_rat).ok_or_else(bad)
                }
            }
            Kind::Viro => match parse_rat(t) {
                Some(r) if !r.is_negative() => Ok(Element::Viro(r)),
                _ => Err(bad()),
            },
            Kind::Phase => parse_phase(t).ok_or_else(bad),
        }
    }

    pub fn format_element(&self, e: &Element) -> String {
        match (&self.kind, e) {
            (Kind::Table(t), Element::Sym(i)) => t.symbols[*i].clone(),
            (_, Element::Mod(x)) => x.to_string(),
            (_, Element::Trop(x)) => x.to_string(),
            (_, Element::Viro(r)) => format_rat(r),
            (_, Element::Phase(None)) => "0".into(),
            (_, Element::Phase(Some(r))) => format!("ph({})", format_rat(r)),
            _ => format!("{e:?}"),
        }
    }

    pub fn format_set(&self, s: &ElementSet) -> String {
        match s {
            ElementSet::Finite(items) => {
                format!("{{{}}}", items.iter().map(|e| self.format_element(e)).collect::<Vec<_>>().join(","))
            }
            ElementSet::Trop(u) | ElementSet::Viro(u) => u.label(),
            ElementSet::Phase { zero, arcs } => {
                let mut parts: Vec<String> = Vec::new();
                if *zero {
                    parts.push("{0}".into());
                }
                for p in arcs.parts() {
                    let lab = |x: &XVal| format!("ph({})", x.label());
                    if p.is_point() {
                        parts.push(format!("{{{}}}", lab(&p.lo)));
                    } else {
                        parts.push(format!(
                            "{}{},{}{}",
                            if p.lo_closed { '[' } else { '(' },
                            lab(&p.lo),
                            lab(&p.hi),
                            if p.hi_closed { ']' } else { ')' }
                        ));
                    }
                }
                if parts.is_empty() {
                    "{}".into()
                } else {
                    parts.join(" ∪ ")
                }
            }
        }
    }

    /// Parses a set literal: `{a,b,...}` for an explicit list, or an
    /// interval `[lo,hi]` / `(lo,hi)` with `-inf`/`inf` bounds on ordered
    /// carriers.
    pub fn parse_set(&self, text: &str) -> Result<ElementSet> {
        let t = text.trim();
        let bad = || Error::Parse(format!("`{t}` is not a set over {}", self.name()));
        if let Some(inner) = t.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
            let items = split_top_level(inner)
                .into_iter()
                .filter(|s| !s.trim().is_empty())
                .map(|s| self.parse_element(&s))
                .collect::<Result<Vec<_>>>()?;
            let mut acc = self.empty_set();
            for e in &items {
                acc = acc.union(&ElementSet::singleton(e));
            }
            return Ok(acc);
        }
        let lo_closed = match t.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let hi_closed = match t.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        let inner = &t[1..t.len() - 1];
        let (l, h) = inner.split_once(',').ok_or_else(bad)?;
        let bound = |s: &str| -> Option<XVal> {
            match s.trim() {
                "-inf" => Some(XVal::NegInf),
                "inf" | "+inf" => Some(XVal::PosInf),
                s => parse_rat(s).map(XVal::Fin),
            }
        };
        let (lo, hi) = (bound(l).ok_or_else(bad)?, bound(h).ok_or_else(bad)?);
        let iv = Interval::new(lo, lo_closed, hi, hi_closed).ok_or_else(bad)?;
        let u = IntervalUnion::from_interval(iv);
        let set = match self.kind {
            Kind::Tropical => ElementSet::Trop(u),
            Kind::Viro => ElementSet::Viro(u.intersect(match &self.full_set() {
                ElementSet::Viro(full) => full,
                _ => unreachable!(),
            })),
            Kind::Phase => ElementSet::Phase { zero: false, arcs: clip_angles(&u) },
            _ => return Err(bad()),
        };
        Ok(set)
    }
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out
}

fn parse_phase(t: &str) -> Option<Element> {
    match t {
        "0" => return Some(Element::Phase(None)),
        "1" => return Some(Element::phase(Rat::zero())),
        "-1" => return Some(Element::phase(Rat::one())),
        _ => {}
    }
    if let Some(inner) = t.strip_prefix("ph(").and_then(|s| s.strip_suffix(')')) {
        return parse_rat(inner).map(Element::phase);
    }
    let inner = t.strip_prefix("e^{")?.strip_suffix('}')?.trim();
    let inner = inner.strip_prefix('i')?.trim();
    let (before, after) = inner.split_once("pi")?;
    let coef = match before.trim() {
        "" => Rat::one(),
        s => parse_rat(s)?,
    };
    let after = after.trim();
    let den = if after.is_empty() {
        Rat::one()
    } else {
        parse_rat(after.strip_prefix('/')?)?
    };
    if den.is_zero() {
        return None;
    }
    Some(Element::phase(coef / den))
}

/// Tropical `A ⊞ B`: maxima of distinct pairs plus `[-inf, c]` for `c ∈ A ∩ B`.
fn tropical_set_add(a: &IntervalUnion, b: &IntervalUnion) -> IntervalUnion {
    let above = |s: &IntervalUnion, other: &IntervalUnion| -> IntervalUnion {
        let (inf, _) = other.inf().expect("nonempty");
        match Interval::new(inf.clone(), false, XVal::PosInf, false) {
            Some(window) => s.intersect_interval(&window),
            None => IntervalUnion::empty(),
        }
    };
    let mut out = above(a, b).union(&above(b, a));
    let common = a.intersect(b);
    if let Some((sup, attained)) = common.sup() {
        out = out.union(&IntervalUnion::from_parts(Interval::new(XVal::NegInf, true, sup.clone(), attained)));
    }
    out
}

/// Viro `A ⊞ B`: per pair of components the triangle-inequality interval.
fn viro_set_add(a: &IntervalUnion, b: &IntervalUnion) -> IntervalUnion {
    let mut parts = Vec::new();
    for i in a.parts() {
        for j in b.parts() {
            let (lo, lo_closed) = if i.intersect(j).is_some() {
                (XVal::Fin(Rat::zero()), true)
            } else {
                let (low, high) = if i.hi <= j.lo { (i, j) } else { (j, i) };
                if low.hi == high.lo {
                    (XVal::Fin(Rat::zero()), false)
                } else {
                    let d = high.lo.fin().unwrap() - low.hi.fin().unwrap();
                    (XVal::Fin(d), low.hi_closed && high.lo_closed)
                }
            };
            let hi = i.hi.add(&j.hi);
            parts.extend(Interval::new(lo, lo_closed, hi, i.hi_closed && j.hi_closed));
        }
    }
    IntervalUnion::from_parts(parts)
}

fn tropical_set_mul(a: &IntervalUnion, b: &IntervalUnion) -> IntervalUnion {
    let finite_part = |u: &IntervalUnion| -> Vec<Interval> {
        u.parts()
            .iter()
            .filter_map(|p| {
                if p.lo == XVal::NegInf {
                    Interval::new(XVal::NegInf, false, p.hi.clone(), p.hi_closed)
                } else {
                    Some(p.clone())
                }
            })
            .collect()
    };
    let mut parts = Vec::new();
    for i in finite_part(a) {
        for j in finite_part(b) {
            parts.extend(Interval::new(i.lo.add(&j.lo), i.lo_closed && j.lo_closed, i.hi.add(&j.hi), i.hi_closed && j.hi_closed));
        }
    }
    if a.contains(&XVal::NegInf) || b.contains(&XVal::NegInf) {
        parts.push(Interval::point(XVal::NegInf));
    }
    IntervalUnion::from_parts(parts)
}

fn viro_set_mul(a: &IntervalUnion, b: &IntervalUnion) -> IntervalUnion {
    let zero = XVal::Fin(Rat::zero());
    let is_zero_point = |p: &Interval| p.is_point() && p.lo == zero;
    let mut parts = Vec::new();
    for i in a.parts() {
        for j in b.parts() {
            if is_zero_point(i) || is_zero_point(j) {
                parts.push(Interval::point(zero.clone()));
                continue;
            }
            let mul = |x: &XVal, y: &XVal| match (x, y) {
                (XVal::Fin(p), XVal::Fin(q)) => XVal::Fin(p * q),
                _ => XVal::PosInf,
            };
            let lo = match (&i.lo, &j.lo) {
                (XVal::Fin(p), XVal::Fin(q)) => XVal::Fin(p * q),
                _ => unreachable!("lower bounds are finite"),
            };
            let lo_closed = (i.lo_closed && j.lo_closed) || (i.lo == zero && i.lo_closed) || (j.lo == zero && j.lo_closed);
            parts.extend(Interval::new(lo, lo_closed, mul(&i.hi, &j.hi), i.hi_closed && j.hi_closed));
        }
    }
    IntervalUnion::from_parts(parts)
}
