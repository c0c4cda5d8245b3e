//! Reducibility: `p` is reducible when `q ⊡ r = {p}` for some `q`, `r` of
//! positive degree.
//!
//! Pulling out leading coefficients, `q` and `r` may be taken monic. Over the
//! tropical hyperfield `q ⊡ r` is a singleton exactly when every coefficient
//! hypersum attains its maximum once or is `-inf`, so a split of degrees
//! reduces to finitely many systems of linear equalities and strict
//! inequalities over the rationals, one per choice of which coefficients are
//! `-inf` and which term attains each maximum.

use serde::{Deserialize, Serialize};

use crate::carriers::{format_rat, Element, ExtRat, Hyperfield, Rat};
use crate::error::{Error, Result};
use crate::polyalg::{boxprod, Polynomial};

pub const DEFAULT_REDUCIBILITY_BOUND: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reducibility {
    Reducible,
    Irreducible,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibilityCertificate {
    pub hyperfield: String,
    pub polynomial: String,
    pub verdict: Reducibility,
    /// `(q, r)` with `q ⊡ r = {p}`.
    pub factors: Option<(String, String)>,
    /// Forced values and contradictions, one line per deduction.
    pub trace: Vec<String>,
    pub cases_checked: usize,
    pub note: String,
}

pub fn is_reducible(p: &Polynomial, search_bound: usize) -> Result<ReducibilityCertificate> {
    let hf = p.hf();
    let n = p.degree();
    if n < 2 {
        return Err(Error::Unsupported("reducibility needs degree at least 2".into()));
    }
    let mut cert = ReducibilityCertificate {
        hyperfield: hf.name(),
        polynomial: p.to_string(),
        verdict: Reducibility::Undecided,
        factors: None,
        trace: Vec::new(),
        cases_checked: 0,
        note: String::new(),
    };
    if n > search_bound {
        cert.note = format!("degree {n} exceeds the search bound {search_bound}");
        return Ok(cert);
    }
    let (lead, monic) = p.monic_decompose();
    let found = if hf.is_finite() {
        by_enumeration(&monic, &mut cert)?
    } else if hf.is_tropical() {
        by_cases(&monic, &mut cert)?
    } else {
        cert.note = "reducibility is decided only over finite carriers and T".into();
        return Ok(cert);
    };
    match found {
        Some((q, r)) => {
            let q = q.scalar_prod(&lead)?;
            debug_assert_eq!(boxprod(&q, &r)?.as_singleton().as_ref(), Some(p));
            cert.verdict = Reducibility::Reducible;
            cert.factors = Some((q.to_string(), r.to_string()));
        }
        None => {
            cert.verdict = Reducibility::Irreducible;
            if cert.note.is_empty() {
                cert.note = format!("no monic split of degree {n} has a singleton product equal to the monic part");
            }
        }
    }
    Ok(cert)
}

fn singleton_product(q: &Polynomial, r: &Polynomial, p: &Polynomial) -> Result<bool> {
    Ok(boxprod(q, r)?.as_singleton().as_ref() == Some(p))
}

fn monic_of_degree(hf: &Hyperfield, d: usize) -> Result<Vec<Polynomial>> {
    let elems = hf.elements().ok_or(Error::NotFinite("enumerating polynomials"))?;
    let mut choices = vec![elems; d];
    choices.push(vec![hf.one()]);
    crate::polyalg::polybox::cartesian(&choices).into_iter().map(|c| Polynomial::new(hf, c)).collect()
}

fn by_enumeration(p: &Polynomial, cert: &mut ReducibilityCertificate) -> Result<Option<(Polynomial, Polynomial)>> {
    let hf = p.hf();
    let n = p.degree();
    for k in 1..=n / 2 {
        let rs = monic_of_degree(hf, n - k)?;
        for q in monic_of_degree(hf, k)? {
            for r in &rs {
                cert.cases_checked += 1;
                if singleton_product(&q, r, p)? {
                    return Ok(Some((q, r.clone())));
                }
            }
        }
    }
    Ok(None)
}

/// `a . x + c`, compared against zero.
#[derive(Clone, Debug)]
struct Lin {
    a: Vec<Rat>,
    c: Rat,
}

impl Lin {
    fn constant(nvars: usize, c: Rat) -> Lin {
        Lin { a: vec![Rat::from_integer(0.into()); nvars], c }
    }

    fn sub(&self, o: &Lin) -> Lin {
        Lin { a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect(), c: &self.c - &o.c }
    }

    fn scale(&self, k: &Rat) -> Lin {
        Lin { a: self.a.iter().map(|x| x * k).collect(), c: &self.c * k }
    }

    fn add(&self, o: &Lin) -> Lin {
        Lin { a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(), c: &self.c + &o.c }
    }
}

/// `lin > 0` when strict, else `lin >= 0`.
#[derive(Clone, Debug)]
struct Constraint {
    lin: Lin,
    strict: bool,
}

/// Fourier-Motzkin elimination; returns a satisfying point when one exists.
fn fourier_motzkin(cons: Vec<Constraint>, nvars: usize) -> Option<Vec<Rat>> {
    let zero = Rat::from_integer(0.into());
    let mut stages = Vec::with_capacity(nvars);
    let mut cur = cons;
    for v in 0..nvars {
        stages.push(cur.clone());
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in cur {
            if c.lin.a[v] > zero {
                pos.push(c);
            } else if c.lin.a[v] < zero {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let lin = p.lin.scale(&(-&q.lin.a[v])).add(&q.lin.scale(&p.lin.a[v]));
                rest.push(Constraint { lin, strict: p.strict || q.strict });
            }
        }
        cur = rest;
    }
    if cur.iter().any(|c| if c.strict { c.lin.c <= zero } else { c.lin.c < zero }) {
        return None;
    }
    let mut x = vec![zero.clone(); nvars];
    for v in (0..nvars).rev() {
        let mut lo: Option<(Rat, bool)> = None;
        let mut hi: Option<(Rat, bool)> = None;
        for c in &stages[v] {
            let coef = &c.lin.a[v];
            if *coef == zero {
                continue;
            }
            let others: Rat = c.lin.c.clone() + (v + 1..nvars).map(|u| &c.lin.a[u] * &x[u]).sum::<Rat>();
            let bound = -others / coef;
            if *coef > zero {
                if lo.as_ref().is_none_or(|(b, s)| bound > *b || (bound == *b && c.strict && !s)) {
                    lo = Some((bound, c.strict));
                }
            } else if hi.as_ref().is_none_or(|(b, s)| bound < *b || (bound == *b && c.strict && !s)) {
                hi = Some((bound, c.strict));
            }
        }
        let one = Rat::from_integer(1.into());
        x[v] = match (lo, hi) {
            (Some((l, _)), Some((h, _))) if l == h => l,
            (Some((l, _)), Some((h, _))) => (l + h) / Rat::from_integer(2.into()),
            (Some((l, s)), None) => if s { l + one } else { l },
            (None, Some((h, s))) => if s { h - one } else { h },
            (None, None) => zero.clone(),
        };
    }
    Some(x)
}

/// A coefficient slot of `q` (degree `k`) or `r` (degree `m`); the leading slots are the unit.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Var(usize),
    Unit,
}

struct Split {
    k: usize,
    m: usize,
}

impl Split {
    fn nvars(&self) -> usize {
        self.k + self.m
    }

    fn q(&self, j: usize) -> Slot {
        if j == self.k { Slot::Unit } else { Slot::Var(j) }
    }

    fn r(&self, l: usize) -> Slot {
        if l == self.m { Slot::Unit } else { Slot::Var(self.k + l) }
    }

    fn name(&self, v: usize) -> String {
        if v < self.k { format!("q_{v}") } else { format!("r_{}", v - self.k) }
    }

    /// Pairs `(q_j, r_{i-j})` feeding coefficient `i` of the product.
    fn terms(&self, i: usize) -> Vec<(Slot, Slot)> {
        (0..=self.k).filter(|&j| j <= i && i - j <= self.m).map(|j| (self.q(j), self.r(i - j))).collect()
    }
}

fn fin(e: &Element) -> Option<&Rat> {
    match e {
        Element::Trop(ExtRat::Fin(r)) => Some(r),
        _ => None,
    }
}

fn by_cases(p: &Polynomial, cert: &mut ReducibilityCertificate) -> Result<Option<(Polynomial, Polynomial)>> {
    let n = p.degree();
    for k in 1..=n / 2 {
        let split = Split { k, m: n - k };
        let nv = split.nvars();
        let mut forced = vec![false; nv];
        if let Some(contradiction) = propagate_neg_inf(p, &split, &mut forced, &mut cert.trace) {
            cert.trace.push(format!("split ({k},{}): {contradiction}", n - k));
            continue;
        }
        let free: Vec<usize> = (0..nv).filter(|&v| !forced[v]).collect();
        for pattern in 0u32..(1 << free.len()) {
            let mut finite = vec![false; nv];
            for (b, &v) in free.iter().enumerate() {
                finite[v] = pattern >> b & 1 == 1;
            }
            if let Some(qr) = solve_pattern(p, &split, &finite, cert)? {
                return Ok(Some(qr));
            }
        }
    }
    Ok(None)
}

fn is_finite_slot(s: Slot, finite: &[bool]) -> bool {
    match s {
        Slot::Unit => true,
        Slot::Var(v) => finite[v],
    }
}

/// Forces `-inf` through coefficients of `p` equal to `-inf`; returns the
/// contradiction when a finite coefficient loses all its terms.
fn propagate_neg_inf(p: &Polynomial, split: &Split, forced: &mut [bool], trace: &mut Vec<String>) -> Option<String> {
    let hf = p.hf();
    for (i, c) in p.coeffs().iter().enumerate() {
        if fin(c).is_some() {
            continue;
        }
        for (a, b) in split.terms(i) {
            if let (Slot::Unit, Slot::Var(v)) | (Slot::Var(v), Slot::Unit) = (a, b) {
                if !forced[v] {
                    forced[v] = true;
                    trace.push(format!("coefficient of T^{i} is -inf, so {} = -inf", split.name(v)));
                }
            }
        }
    }
    let dead = |s: Slot| matches!(s, Slot::Var(v) if forced[v]);
    for (i, c) in p.coeffs().iter().enumerate() {
        if fin(c).is_none() {
            continue;
        }
        let terms = split.terms(i);
        if terms.iter().all(|&(a, b)| dead(a) || dead(b)) {
            let shown: Vec<String> = terms.iter().map(|&(a, b)| format!("{} ⊙ {}", slot_name(split, a), slot_name(split, b))).collect();
            return Some(format!("coefficient of T^{i} must be {}, but {} = -inf", hf.format_element(c), shown.join(" ⊞ ")));
        }
    }
    None
}

fn slot_name(split: &Split, s: Slot) -> String {
    match s {
        Slot::Unit => "0".into(),
        Slot::Var(v) => split.name(v),
    }
}

fn term_lin(nv: usize, a: Slot, b: Slot) -> Lin {
    let mut l = Lin::constant(nv, Rat::from_integer(0.into()));
    for s in [a, b] {
        if let Slot::Var(v) = s {
            l.a[v] += Rat::from_integer(1.into());
        }
    }
    l
}

/// Tries every choice of maximising term under one finiteness pattern.
fn solve_pattern(
    p: &Polynomial,
    split: &Split,
    finite: &[bool],
    cert: &mut ReducibilityCertificate,
) -> Result<Option<(Polynomial, Polynomial)>> {
    let nv = split.nvars();
    let mut per_coeff: Vec<(Rat, Vec<(Slot, Slot)>)> = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        let live: Vec<(Slot, Slot)> = split.terms(i).into_iter().filter(|&(a, b)| is_finite_slot(a, finite) && is_finite_slot(b, finite)).collect();
        match fin(c) {
            None if !live.is_empty() => return Ok(None),
            None => {}
            Some(_) if live.is_empty() => return Ok(None),
            Some(v) => per_coeff.push((v.clone(), live)),
        }
    }
    let mut idx = vec![0usize; per_coeff.len()];
    loop {
        cert.cases_checked += 1;
        let mut cons = Vec::new();
        for ((target, live), &choice) in per_coeff.iter().zip(&idx) {
            let t = Lin::constant(nv, target.clone());
            let (a, b) = live[choice];
            let top = term_lin(nv, a, b).sub(&t);
            cons.push(Constraint { lin: top.clone(), strict: false });
            cons.push(Constraint { lin: top.scale(&Rat::from_integer((-1).into())), strict: false });
            for (o, &(a2, b2)) in live.iter().enumerate() {
                if o != choice {
                    cons.push(Constraint { lin: t.sub(&term_lin(nv, a2, b2)), strict: true });
                }
            }
        }
        if let Some(x) = fourier_motzkin(cons, nv) {
            let value = |v: usize| if finite[v] { Element::Trop(ExtRat::Fin(x[v].clone())) } else { Element::neg_inf() };
            let hf = p.hf();
            let mut qc: Vec<Element> = (0..split.k).map(value).collect();
            qc.push(hf.one());
            let mut rc: Vec<Element> = (split.k..nv).map(value).collect();
            rc.push(hf.one());
            let (q, r) = (Polynomial::new(hf, qc)?, Polynomial::new(hf, rc)?);
            if singleton_product(&q, &r, p)? {
                let vals: Vec<String> = (0..nv).map(|v| format!("{}={}", split.name(v), if finite[v] { format_rat(&x[v]) } else { "-inf".into() })).collect();
                cert.trace.push(format!("split ({},{}): feasible with {}", split.k, split.m, vals.join(", ")));
                return Ok(Some((q, r)));
            }
            return Err(Error::Verification(format!("case solution {q}, {r} does not multiply to {p}")));
        }
        let mut d = 0;
        loop {
            if d == idx.len() {
                return Ok(None);
            }
            idx[d] += 1;
            if idx[d] < per_coeff[d].1.len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}
