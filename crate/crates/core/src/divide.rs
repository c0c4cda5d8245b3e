//! Roots, quotients and multiplicities.
//!
//! `p ∈ (T - a) ⊡ q` with `q = d_0 + ... + d_{n-1} T^{n-1}` holds iff
//! `d_{n-1} = c_n`, `c_i ∈ d_{i-1} ⊞ (-a) d_i` for `0 < i < n`, and
//! `c_0 = -a d_0`. By reversibility the middle condition reads
//! `d_{i-1} ∈ c_i ⊞ a d_i`, so the `d_i` form a chain that is solved exactly
//! by one downward and one upward pass of set propagation.

use std::collections::HashMap;

use crate::carriers::{Element, ElementSet, Hyperfield};
use crate::error::{Error, Result};
use crate::polyalg::solver::{Network, Solution, Template};
use crate::polyalg::{boxprod, Polynomial};

/// Cap on representative quotients per query on infinite carriers.
const QUOTIENT_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSet {
    pub dividend: Polynomial,
    pub root: Element,
    /// Admissible values of `d_i`, indexed by `i`; empty when `a` is not a root.
    pub domains: Vec<ElementSet>,
    /// Quotients built from representative coefficient values.
    pub representatives: Vec<Polynomial>,
    /// True when `representatives` lists every quotient.
    pub exhaustive: bool,
}

impl QuotientSet {
    pub fn is_empty(&self) -> bool {
        self.domains.is_empty()
    }

    /// Exact test of `p ∈ (T - a) ⊡ q`.
    pub fn admits(&self, q: &Polynomial) -> bool {
        let lin = Polynomial::linear_root(self.dividend.hf(), &self.root).expect("same carrier");
        boxprod(&lin, q).is_ok_and(|b| b.contains(&self.dividend))
    }
}

pub fn is_root(p: &Polynomial, a: &Element) -> Result<bool> {
    p.is_root(a)
}

/// Chain domains of the quotient coefficients, or `None` when there is no quotient.
fn chain_domains(p: &Polynomial, a: &Element) -> Option<Vec<ElementSet>> {
    let hf = p.hf();
    let n = p.degree();
    if n == 0 {
        return None;
    }
    let c = p.coeffs();
    let mut doms = vec![hf.empty_set(); n];
    doms[n - 1] = ElementSet::singleton(&c[n]);
    for i in (1..n).rev() {
        doms[i - 1] = hf.set_hyperadd_unchecked(&ElementSet::singleton(&c[i]), &hf.scale_set(a, &doms[i]));
    }
    if hf.is_zero(a) {
        if !hf.is_zero(&c[0]) {
            return None;
        }
    } else {
        let d0 = hf.mul_unchecked(&c[0], &hf.inv(&hf.neg(a).ok()?).ok()?);
        doms[0] = doms[0].intersect(&ElementSet::singleton(&d0));
    }
    if doms[0].is_empty() {
        return None;
    }
    if !hf.is_zero(a) {
        let a_inv = hf.inv(a).ok()?;
        for i in 1..n {
            let lower = hf.set_hyperadd_unchecked(&doms[i - 1], &ElementSet::singleton(&hf.neg(&c[i]).ok()?));
            doms[i] = doms[i].intersect(&hf.scale_set(&a_inv, &lower));
            if doms[i].is_empty() {
                return None;
            }
        }
    }
    Some(doms)
}

/// All `q` with `p ∈ (T - a) ⊡ q`.
pub fn quotients(p: &Polynomial, a: &Element) -> Result<QuotientSet> {
    let hf = p.hf();
    hf.check(a)?;
    let Some(domains) = chain_domains(p, a) else {
        return Ok(QuotientSet { dividend: p.clone(), root: a.clone(), domains: Vec::new(), representatives: Vec::new(), exhaustive: true });
    };
    let n = p.degree();
    let mut reps = Vec::new();
    let mut partial = vec![hf.zero(); n];
    partial[n - 1] = p.coeffs()[n].clone();
    let exhaustive = hf.is_finite();
    choose(p, a, &domains, n - 1, &mut partial, &mut reps);
    let set = QuotientSet { dividend: p.clone(), root: a.clone(), domains, representatives: reps, exhaustive };
    if set.representatives.is_empty() || !set.representatives.iter().all(|q| set.admits(q)) {
        return Err(Error::Verification(format!("quotient chain of {p} at {} does not replay", hf.format_element(a))));
    }
    Ok(set)
}

/// Top-down choice of `d_{i-1}` given `d_i = partial[i]`.
fn choose(p: &Polynomial, a: &Element, doms: &[ElementSet], i: usize, partial: &mut Vec<Element>, out: &mut Vec<Polynomial>) {
    if out.len() >= QUOTIENT_CAP {
        return;
    }
    let hf = p.hf();
    if i == 0 {
        out.push(Polynomial::new(hf, partial.clone()).expect("leading coefficient is c_n"));
        return;
    }
    let allowed = doms[i - 1].intersect(&hf.hyperadd_unchecked(&p.coeffs()[i], &hf.mul_unchecked(a, &partial[i])));
    for v in allowed.representatives() {
        partial[i - 1] = v;
        choose(p, a, doms, i - 1, partial, out);
    }
}

/// `mult_a(p)`: zero unless `a` is a root, else one more than the largest
/// multiplicity among the quotients.
pub fn mult_at(p: &Polynomial, a: &Element) -> Result<usize> {
    mult_memo(p, a, &mut HashMap::new())
}

fn mult_memo(p: &Polynomial, a: &Element, memo: &mut HashMap<Polynomial, usize>) -> Result<usize> {
    if let Some(&m) = memo.get(p) {
        return Ok(m);
    }
    let root = is_root(p, a)?;
    let qs = quotients(p, a)?;
    if root == qs.is_empty() {
        return Err(Error::Verification(format!(
            "root test and quotient chain disagree for {p} at {}",
            p.hf().format_element(a)
        )));
    }
    let m = if qs.is_empty() {
        0
    } else {
        let mut best = 0;
        for q in &qs.representatives {
            best = best.max(mult_memo(q, a, memo)?);
        }
        1 + best
    };
    memo.insert(p.clone(), m);
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultSetResult {
    pub multiplicity: usize,
    /// False when the last level could not be decided, making `multiplicity` a lower bound.
    pub exact: bool,
    /// One line per level `k` tried: whether `mult_S(p) >= k`.
    pub levels: Vec<String>,
}

/// `mult_S(p)`, with zero when no element of `S` is a root.
pub fn mult_set(p: &Polynomial, s: &ElementSet) -> Result<MultSetResult> {
    let hf = p.hf();
    if hf.is_finite() {
        let elements = s.members().ok_or(Error::NotFinite("region"))?;
        let m = mult_set_finite(p, &elements, &mut HashMap::new())?;
        let levels = vec![format!("exhaustive recursion over {} root candidates", elements.len())];
        return Ok(MultSetResult { multiplicity: m, exact: true, levels });
    }
    mult_set_levels(p, s)
}

fn mult_set_finite(p: &Polynomial, s: &[Element], memo: &mut HashMap<Polynomial, usize>) -> Result<usize> {
    if let Some(&m) = memo.get(p) {
        return Ok(m);
    }
    let mut best: Option<usize> = None;
    for a in s {
        for q in quotients(p, a)?.representatives {
            let m = mult_set_finite(&q, s, memo)?;
            best = Some(best.map_or(m, |b| b.max(m)));
        }
    }
    let m = best.map_or(0, |b| b + 1);
    memo.insert(p.clone(), m);
    Ok(m)
}

/// The chain `(T - a_1) ⊡ (... ⊡ ((T - a_k) ⊡ r))` with every `a_j ∈ S`.
fn level_template(hf: &Hyperfield, s: &ElementSet, n: usize, k: usize) -> Template {
    let mut r_doms = vec![hf.full_set(); n - k + 1];
    r_doms[n - k] = hf.nonzero_set();
    let mut t = Template::Unknown { label: "r".into(), domains: r_doms };
    for j in (1..=k).rev() {
        let lin = Template::Unknown { label: format!("(T-a{j})"), domains: vec![hf.neg_set(s), ElementSet::singleton(&hf.one())] };
        t = Template::prod(lin, t);
    }
    t
}

/// Decides `mult_S(p) >= k` level by level with the coefficient solver.
pub fn mult_set_levels(p: &Polynomial, s: &ElementSet) -> Result<MultSetResult> {
    let hf = p.hf();
    let n = p.degree();
    let mut levels = Vec::new();
    for k in 1..=n {
        let net = Network::new(hf, &level_template(hf, s, n, k), Some(p));
        match net.solve(crate::polyalg::member::SEARCH_BUDGET) {
            Solution::Sat(values) => {
                let roots: Vec<String> = net
                    .free_nodes()
                    .into_iter()
                    .filter(|&i| net.label(i).starts_with("(T-a"))
                    .map(|i| format!("{}={}", net.label(i), values[i]))
                    .collect();
                levels.push(format!("level {k}: satisfiable with {}", roots.join(", ")));
            }
            Solution::Refuted(c) => {
                levels.push(format!("level {k}: infeasible; {}", c.trace.last().cloned().unwrap_or_default()));
                return Ok(MultSetResult { multiplicity: k - 1, exact: true, levels });
            }
            Solution::Exhausted { nodes } => {
                levels.push(format!("level {k}: infeasible after exhaustive search of {nodes} nodes"));
                return Ok(MultSetResult { multiplicity: k - 1, exact: true, levels });
            }
            Solution::Unknown(why) => {
                levels.push(format!("level {k}: undecided; {why}"));
                return Ok(MultSetResult { multiplicity: k - 1, exact: false, levels });
            }
        }
    }
    Ok(MultSetResult { multiplicity: n, exact: true, levels })
}
