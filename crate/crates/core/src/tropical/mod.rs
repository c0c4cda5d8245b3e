//! Algebra specific to the tropical hyperfield: sorted hypersums, boxes of
//! products of linear factors, root multisets and reducibility.

mod hull;
mod reducible;

pub use hull::{root_multiset, RootMultiset};
pub use reducible::{is_reducible, Reducibility, ReducibilityCertificate, DEFAULT_REDUCIBILITY_BOUND};

use serde::{Deserialize, Serialize};

use crate::carriers::{Element, ElementSet, ExtRat, Hyperfield, IntervalUnion, Interval, XVal};
use crate::divide::quotients;
use crate::error::{Error, Result};
use crate::polyalg::member::SEARCH_BUDGET;
use crate::polyalg::solver::{Network, Solution, Template};
use crate::polyalg::{PolyBox, Polynomial, ProductExpr};

/// Largest list accepted by the subset-enumerating box formula.
pub const MAX_LINEAR_FACTORS: usize = 12;

/// Members of the box sampled for the reverse inclusion check.
const REVERSE_SAMPLES: usize = 48;

fn trop_value(e: &Element) -> Result<&ExtRat> {
    match e {
        Element::Trop(x) => Ok(x),
        other => Err(Error::CarrierMismatch { hyperfield: "T".into(), element: format!("{other:?}") }),
    }
}

/// `e_1 ⊞ ... ⊞ e_n` for an ascending list: `{e_n}` when the maximum is
/// unique, `[-inf, e_n]` when it is attained twice.
pub fn trop_hypersum_sorted(es: &[ExtRat]) -> Result<ElementSet> {
    let Some(top) = es.last() else {
        return Err(Error::Empty("tropical hypersum"));
    };
    if es.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Unsupported("hypersum input must be sorted ascending".into()));
    }
    let hi = match top {
        ExtRat::NegInf => XVal::NegInf,
        ExtRat::Fin(r) => XVal::Fin(r.clone()),
    };
    if es.len() >= 2 && es[es.len() - 2] == *top {
        let i = Interval::closed(XVal::NegInf, hi).expect("-inf is the least value");
        Ok(ElementSet::Trop(IntervalUnion::from_interval(i)))
    } else {
        Ok(ElementSet::Trop(IntervalUnion::point(hi)))
    }
}

/// `0T + a`, which is `T - a` since tropical negation is the identity.
pub fn linear_factor(a: &Element) -> Result<Polynomial> {
    Polynomial::linear_root(&Hyperfield::tropical(), a)
}

/// The box whose `T^{n-s}` coefficient is the hypersum of all products of
/// `s` of the given roots.
pub fn linear_product_box(roots: &[Element]) -> Result<PolyBox> {
    let n = roots.len();
    if n == 0 {
        return Err(Error::Empty("root list"));
    }
    if n > MAX_LINEAR_FACTORS {
        return Err(Error::DegreeLimit { degree: n, limit: MAX_LINEAR_FACTORS });
    }
    let vals: Vec<&ExtRat> = roots.iter().map(trop_value).collect::<Result<_>>()?;
    let mut by_size: Vec<Vec<ExtRat>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let sum = (0..n).filter(|i| mask >> i & 1 == 1).fold(ExtRat::fin(crate::carriers::int(0)), |acc, i| acc.add(vals[i]));
        by_size[mask.count_ones() as usize].push(sum);
    }
    let mut coeffs = vec![ElementSet::Trop(IntervalUnion::empty()); n + 1];
    for (s, mut sums) in by_size.into_iter().enumerate() {
        sums.sort();
        coeffs[n - s] = trop_hypersum_sorted(&sums)?;
    }
    PolyBox::new(&Hyperfield::tropical(), coeffs)
}

/// `S_1 = {0T + a_1}`, `S_k = ⋃_{p ∈ S_{k-1}} (0T + a_k) ⊡ p`, as a nested expression.
pub fn iterated_linear_product(roots: &[Element]) -> Result<ProductExpr> {
    let (first, rest) = roots.split_first().ok_or(Error::Empty("root list"))?;
    let mut e = ProductExpr::leaf(linear_factor(first)?);
    for a in rest {
        e = ProductExpr::prod(ProductExpr::leaf(linear_factor(a)?), e);
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxEquivalenceCertificate {
    pub roots: Vec<String>,
    pub linear_product_box: String,
    pub equal: bool,
    /// One line per multiplication step: the coefficient sets reachable from
    /// the previous box lie inside the next box.
    pub forward_steps: Vec<String>,
    /// Box members shown to lie in the iterated product by an explicit chain of quotients.
    pub reverse_checked: usize,
    pub failures: Vec<String>,
}

/// Checks that the iterated product of `0T + a_i` equals `linear_product_box`.
///
/// Forward: every polynomial in `(0T + a_k) ⊡ B_{k-1}` has its coefficients in
/// `B_{k-1}[i-1] ⊞ a_k B_{k-1}[i]`, which must lie in `B_k[i]`.
/// Reverse: representative members of `B_n` are peeled one root at a time,
/// each quotient chosen inside `B_{k-1}` and replayed through `quotients`.
pub fn box_equivalence(roots: &[Element], max_factors: usize) -> Result<BoxEquivalenceCertificate> {
    if roots.len() > max_factors {
        return Err(Error::DegreeLimit { degree: roots.len(), limit: max_factors });
    }
    let t = Hyperfield::tropical();
    let boxes: Vec<PolyBox> = (1..=roots.len()).map(|k| linear_product_box(&roots[..k])).collect::<Result<_>>()?;
    let mut failures = Vec::new();
    let mut forward_steps = Vec::new();
    if boxes[0] != PolyBox::from_poly(&linear_factor(&roots[0])?) {
        failures.push("first box differs from the first factor".into());
    }
    for k in 1..roots.len() {
        let (prev, next) = (&boxes[k - 1], &boxes[k]);
        let a = &roots[k];
        let mut ok = true;
        for i in 0..=k + 1 {
            let lower = if i == 0 { t.empty_set() } else { prev.coeffs().get(i - 1).cloned().unwrap_or_else(|| t.singleton(&t.zero())) };
            let upper = prev.coeffs().get(i).map(|s| t.scale_set(a, s)).unwrap_or_else(|| t.singleton(&t.zero()));
            let reach = if lower.is_empty() { upper } else { t.set_hyperadd_unchecked(&lower, &upper) };
            if !reach.is_subset(&next.coeffs()[i]) {
                ok = false;
                failures.push(format!("step {}: T^{i} reaches {} outside {}", k + 1, t.format_set(&reach), t.format_set(&next.coeffs()[i])));
            }
        }
        forward_steps.push(format!("step {}: {} {}", k + 1, if ok { "contained in" } else { "escapes" }, next.label()));
    }
    let last = boxes.last().expect("nonempty");
    let samples = last.representative_members(REVERSE_SAMPLES);
    let mut reverse_checked = 0;
    for p in &samples {
        match peel(p, roots, &boxes) {
            Ok(()) => reverse_checked += 1,
            Err(why) => failures.push(format!("{p}: {why}")),
        }
    }
    Ok(BoxEquivalenceCertificate {
        roots: roots.iter().map(|a| t.format_element(a)).collect(),
        linear_product_box: last.label(),
        equal: failures.is_empty(),
        forward_steps,
        reverse_checked,
        failures,
    })
}

/// Shows `p ∈ S_k` by finding `q ∈ B_{k-1}` with `p ∈ (0T + a_k) ⊡ q` and recursing.
fn peel(p: &Polynomial, roots: &[Element], boxes: &[PolyBox]) -> std::result::Result<(), String> {
    let k = roots.len();
    let a = &roots[k - 1];
    if k == 1 {
        let lin = linear_factor(a).map_err(|e| e.to_string())?;
        return if *p == lin { Ok(()) } else { Err(format!("{p} is not {lin}")) };
    }
    let t = p.hf();
    let template = Template::prod(
        Template::Known(linear_factor(a).map_err(|e| e.to_string())?),
        Template::Unknown { label: "q".into(), domains: boxes[k - 2].coeffs().to_vec() },
    );
    let net = Network::new(t, &template, Some(p));
    let q = match net.solve(SEARCH_BUDGET) {
        Solution::Sat(values) => values[net.free_nodes()[0]].clone(),
        Solution::Refuted(c) => return Err(c.trace.last().cloned().unwrap_or_default()),
        Solution::Exhausted { .. } => return Err(format!("no quotient at {} inside the smaller box", t.format_element(a))),
        Solution::Unknown(why) => return Err(why),
    };
    let qs = quotients(p, a).map_err(|e| e.to_string())?;
    if !qs.admits(&q) {
        return Err(format!("{q} is not a quotient at {}", t.format_element(a)));
    }
    peel(&q, &roots[..k - 1], &boxes[..k - 1])
}
