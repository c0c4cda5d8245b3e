//! Constraint propagation and search over the coefficients of every
//! intermediate polynomial in a product expression.
//!
//! Each internal node `N = A ⊡ B` imposes `N_i ∈ ⊞_{k+l=i} A_k B_l` and each
//! `N = A ⊞ B` imposes `N_i ∈ A_i ⊞ B_i`. Domains only ever shrink by removing
//! values that cannot take part in a solution, so an emptied domain is a
//! proof of infeasibility on every carrier.

use crate::carriers::{Element, ElementSet, Hyperfield};

use super::expr::ProductExpr;
use super::poly::Polynomial;

const MAX_PASSES: usize = 48;

/// An expression shape whose leaves may be unknown polynomials.
#[derive(Clone, Debug)]
pub enum Template {
    Known(Polynomial),
    /// An unknown polynomial with a domain per coefficient `T^0..T^n`.
    Unknown { label: String, domains: Vec<ElementSet> },
    Prod(Box<Template>, Box<Template>),
    Sum(Box<Template>, Box<Template>),
}

impl Template {
    pub fn from_expr(e: &ProductExpr) -> Template {
        match e {
            ProductExpr::Leaf(p) => Template::Known(p.clone()),
            ProductExpr::Prod(a, b) => Template::Prod(Box::new(Template::from_expr(a)), Box::new(Template::from_expr(b))),
            ProductExpr::Sum(a, b) => Template::Sum(Box::new(Template::from_expr(a)), Box::new(Template::from_expr(b))),
            ProductExpr::Scalar(c, a) => {
                let hf = a.hf();
                let constant = Polynomial::constant(hf, c.clone()).expect("nonzero scalar");
                Template::Prod(Box::new(Template::Known(constant)), Box::new(Template::from_expr(a)))
            }
        }
    }

    pub fn prod(a: Template, b: Template) -> Template {
        Template::Prod(Box::new(a), Box::new(b))
    }

    fn label(&self) -> String {
        match self {
            Template::Known(p) => p.to_string(),
            Template::Unknown { label, .. } => label.clone(),
            Template::Prod(a, b) => format!("{}*{}", a.atom(), b.atom()),
            Template::Sum(a, b) => format!("{}+{}", a.atom(), b.atom()),
        }
    }

    fn atom(&self) -> String {
        match self {
            Template::Unknown { label, .. } => label.clone(),
            _ => format!("({})", self.label()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Shape {
    Leaf { known: bool },
    Prod(usize, usize),
    Sum(usize, usize),
}

#[derive(Clone, Debug)]
struct Node {
    shape: Shape,
    label: String,
    degree: usize,
    /// Leading coefficient is nonzero in every member.
    exact_degree: bool,
}

/// The flattened constraint network, children before parents, root last.
#[derive(Clone, Debug)]
pub struct Network {
    hf: Hyperfield,
    nodes: Vec<Node>,
    initial: Vec<Vec<ElementSet>>,
}

pub type Domains = Vec<Vec<ElementSet>>;

/// Why propagation failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub trace: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// Every node's value, indexed like the network.
    Sat(Vec<Polynomial>),
    /// Propagation alone emptied a domain.
    Refuted(Conflict),
    /// Search over a finite carrier exhausted every choice.
    Exhausted { nodes: usize },
    Unknown(String),
}

impl Network {
    /// Builds the network; `target` fixes the root's coefficients when given.
    pub fn new(hf: &Hyperfield, template: &Template, target: Option<&Polynomial>) -> Network {
        let mut net = Network { hf: hf.clone(), nodes: Vec::new(), initial: Vec::new() };
        net.flatten(template);
        let root = net.nodes.len() - 1;
        if let Some(p) = target {
            let n = net.nodes[root].degree.max(p.degree());
            net.nodes[root].degree = n;
            net.initial[root] = (0..=n).map(|i| ElementSet::singleton(&p.coeff(i))).collect();
        }
        net
    }

    fn flatten(&mut self, t: &Template) -> usize {
        let hf = self.hf.clone();
        let (shape, label, degree, exact, doms) = match t {
            Template::Known(p) => {
                let doms = p.coeffs().iter().map(ElementSet::singleton).collect();
                (Shape::Leaf { known: true }, p.to_string(), p.degree(), true, doms)
            }
            Template::Unknown { label, domains } => {
                let exact = !domains.last().expect("nonempty").contains(&hf.zero());
                (Shape::Leaf { known: false }, label.clone(), domains.len() - 1, exact, domains.clone())
            }
            Template::Prod(a, b) => {
                let (ia, ib) = (self.flatten(a), self.flatten(b));
                let n = self.nodes[ia].degree + self.nodes[ib].degree;
                let exact = self.nodes[ia].exact_degree && self.nodes[ib].exact_degree;
                (Shape::Prod(ia, ib), t.label(), n, exact, self.free_domains(n, exact))
            }
            Template::Sum(a, b) => {
                let (ia, ib) = (self.flatten(a), self.flatten(b));
                let (da, db) = (self.nodes[ia].degree, self.nodes[ib].degree);
                let exact = (da > db && self.nodes[ia].exact_degree) || (db > da && self.nodes[ib].exact_degree);
                let n = da.max(db);
                (Shape::Sum(ia, ib), t.label(), n, exact, self.free_domains(n, exact))
            }
        };
        self.nodes.push(Node { shape, label, degree, exact_degree: exact });
        self.initial.push(doms);
        self.nodes.len() - 1
    }

    fn free_domains(&self, n: usize, exact: bool) -> Vec<ElementSet> {
        let mut d = vec![self.hf.full_set(); n + 1];
        if exact {
            d[n] = self.hf.nonzero_set();
        }
        d
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn initial(&self) -> &Domains {
        &self.initial
    }

    pub fn label(&self, node: usize) -> &str {
        &self.nodes[node].label
    }

    /// Internal non-root nodes and unknown leaves: the nodes a solution assigns.
    pub fn free_nodes(&self) -> Vec<usize> {
        let root = self.root();
        (0..self.nodes.len())
            .filter(|&i| i != root && self.nodes[i].shape != Shape::Leaf { known: true })
            .collect()
    }

    fn mono(i: usize) -> String {
        match i {
            0 => "T^0".into(),
            1 => "T^1".into(),
            _ => format!("T^{i}"),
        }
    }

    /// Narrows `doms[node][i]` to `new`; returns whether anything changed.
    fn narrow(
        &self,
        doms: &mut Domains,
        node: usize,
        i: usize,
        new: ElementSet,
        cause: Option<(usize, usize)>,
        trace: &mut Vec<String>,
    ) -> Result<bool, Conflict> {
        let old = &doms[node][i];
        if *old == new {
            return Ok(false);
        }
        if new.is_empty() {
            trace.push(format!(
                "coefficient of {} in {} has no admissible value",
                Self::mono(i),
                self.nodes[node].label
            ));
            return Err(Conflict { trace: trace.clone() });
        }
        if let (Some((by_node, by_i)), Some(v)) = (cause, new.as_singleton()) {
            if old.as_singleton().is_none() {
                trace.push(format!(
                    "coefficient of {} in {} is forced to {} by the coefficient of {} in {}",
                    Self::mono(i),
                    self.nodes[node].label,
                    self.hf.format_set(&ElementSet::singleton(&v)),
                    Self::mono(by_i),
                    self.nodes[by_node].label
                ));
            }
        }
        doms[node][i] = new;
        Ok(true)
    }

    fn coeff_dom(&self, doms: &Domains, node: usize, i: usize) -> ElementSet {
        doms[node].get(i).cloned().unwrap_or_else(|| ElementSet::singleton(&self.hf.zero()))
    }

    fn propagate_prod(&self, doms: &mut Domains, n: usize, a: usize, b: usize, i: usize, trace: &mut Vec<String>) -> Result<bool, Conflict> {
        let hf = &self.hf;
        let zero = hf.zero();
        let (da, db) = (self.nodes[a].degree, self.nodes[b].degree);
        let pairs: Vec<(usize, usize)> = (0..=i.min(da)).filter(|k| i - k <= db).map(|k| (k, i - k)).collect();
        let terms: Vec<ElementSet> = pairs.iter().map(|&(k, l)| hf.set_mul(&doms[a][k], &doms[b][l])).collect();
        let mut changed = false;
        let total = hf.set_hypersum(&terms);
        let target = self.coeff_dom(doms, n, i);
        let narrowed = target.intersect(&total);
        if narrowed.is_empty() {
            trace.push(format!(
                "coefficient of {} in {}: {} is disjoint from {}",
                Self::mono(i),
                self.nodes[n].label,
                hf.format_set(&target),
                hf.format_set(&total)
            ));
            return Err(Conflict { trace: trace.clone() });
        }
        changed |= self.narrow(doms, n, i, narrowed, None, trace)?;
        let target = doms[n][i].clone();
        for (j, &(k, l)) in pairs.iter().enumerate() {
            let others: Vec<ElementSet> = terms.iter().enumerate().filter(|(x, _)| *x != j).map(|(_, t)| t.clone()).collect();
            let rest = hf.set_hypersum(&others);
            let allowed = terms[j].intersect(&hf.set_hyperadd_unchecked(&target, &hf.neg_set(&rest)));
            let mut fa = doms[a][k].clone();
            let mut fb = doms[b][l].clone();
            if !allowed.contains(&zero) {
                fa = fa.remove(&zero);
                fb = fb.remove(&zero);
            }
            if !fb.contains(&zero) {
                fa = fa.intersect(&hf.set_mul(&allowed, &hf.inv_set(&fb)));
            }
            if !fa.contains(&zero) {
                fb = fb.intersect(&hf.set_mul(&allowed, &hf.inv_set(&fa)));
            }
            changed |= self.narrow(doms, a, k, fa, Some((n, i)), trace)?;
            changed |= self.narrow(doms, b, l, fb, Some((n, i)), trace)?;
        }
        Ok(changed)
    }

    fn propagate_sum(&self, doms: &mut Domains, n: usize, a: usize, b: usize, i: usize, trace: &mut Vec<String>) -> Result<bool, Conflict> {
        let hf = &self.hf;
        let sa = self.coeff_dom(doms, a, i);
        let sb = self.coeff_dom(doms, b, i);
        let total = hf.set_hyperadd_unchecked(&sa, &sb);
        let target = doms[n][i].clone();
        let narrowed = target.intersect(&total);
        if narrowed.is_empty() {
            trace.push(format!(
                "coefficient of {} in {}: {} is disjoint from {}",
                Self::mono(i),
                self.nodes[n].label,
                hf.format_set(&target),
                hf.format_set(&total)
            ));
            return Err(Conflict { trace: trace.clone() });
        }
        let mut changed = self.narrow(doms, n, i, narrowed, None, trace)?;
        let target = doms[n][i].clone();
        if i <= self.nodes[a].degree {
            let fa = sa.intersect(&hf.set_hyperadd_unchecked(&target, &hf.neg_set(&sb)));
            changed |= self.narrow(doms, a, i, fa, Some((n, i)), trace)?;
        }
        let sa = self.coeff_dom(doms, a, i);
        if i <= self.nodes[b].degree {
            let fb = sb.intersect(&hf.set_hyperadd_unchecked(&target, &hf.neg_set(&sa)));
            changed |= self.narrow(doms, b, i, fb, Some((n, i)), trace)?;
        }
        Ok(changed)
    }

    /// Runs all constraints to a fixpoint (or the pass cap).
    pub fn propagate(&self, doms: &mut Domains, trace: &mut Vec<String>) -> Result<(), Conflict> {
        for _ in 0..MAX_PASSES {
            let mut changed = false;
            for n in 0..self.nodes.len() {
                let deg = self.nodes[n].degree;
                match self.nodes[n].shape {
                    Shape::Leaf { .. } => {}
                    Shape::Prod(a, b) => {
                        for i in 0..=deg {
                            changed |= self.propagate_prod(doms, n, a, b, i, trace)?;
                        }
                    }
                    Shape::Sum(a, b) => {
                        for i in 0..=deg {
                            changed |= self.propagate_sum(doms, n, a, b, i, trace)?;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Ok(())
    }

    /// Exact check of a full assignment of single values.
    pub fn check_assignment(&self, values: &[Vec<Element>]) -> bool {
        let hf = &self.hf;
        let zero = hf.zero();
        let get = |node: usize, i: usize| values[node].get(i).cloned().unwrap_or_else(|| zero.clone());
        for (n, node) in self.nodes.iter().enumerate() {
            if !values[n].iter().zip(&self.initial[n]).all(|(v, d)| d.contains(v)) {
                return false;
            }
            if values[n].iter().all(|v| *v == zero) {
                return false;
            }
            let ok = match node.shape {
                Shape::Leaf { .. } => true,
                Shape::Prod(a, b) => (0..=node.degree).all(|i| {
                    let terms: Vec<Element> = (0..=i).map(|k| hf.mul_unchecked(&get(a, k), &get(b, i - k))).collect();
                    hf.hypersum(&terms).expect("nonempty").contains(&get(n, i))
                }),
                Shape::Sum(a, b) => (0..=node.degree).all(|i| hf.hyperadd_unchecked(&get(a, i), &get(b, i)).contains(&get(n, i))),
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Propagation followed by depth-first search over representative values.
    pub fn solve(&self, budget: usize) -> Solution {
        let mut doms = self.initial.clone();
        let mut trace = Vec::new();
        if let Err(c) = self.propagate(&mut doms, &mut trace) {
            return Solution::Refuted(c);
        }
        let mut visited = 0;
        let mut incomplete = false;
        match self.search(doms, budget, &mut visited, &mut incomplete) {
            Some(values) => Solution::Sat(
                values
                    .into_iter()
                    .map(|v| Polynomial::new(&self.hf, v).expect("checked nonzero"))
                    .collect(),
            ),
            None if incomplete || !self.hf.is_finite() => Solution::Unknown(format!(
                "no solution among {visited} representative assignments; the search is not exhaustive here"
            )),
            None => Solution::Exhausted { nodes: visited },
        }
    }

    fn search(&self, doms: Domains, budget: usize, visited: &mut usize, incomplete: &mut bool) -> Option<Vec<Vec<Element>>> {
        *visited += 1;
        if *visited > budget {
            *incomplete = true;
            return None;
        }
        // first-fail: smallest finite domain, else the first open one
        let mut pick: Option<(usize, usize, usize)> = None;
        for (n, ds) in doms.iter().enumerate() {
            for (i, d) in ds.iter().enumerate() {
                if d.as_singleton().is_some() {
                    continue;
                }
                let size = d.members().map(|m| m.len()).filter(|_| d.is_finite_kind()).unwrap_or(usize::MAX);
                if pick.is_none_or(|(_, _, s)| size < s) {
                    pick = Some((n, i, size));
                }
            }
        }
        let Some((n, i, _)) = pick else {
            let values: Vec<Vec<Element>> =
                doms.iter().map(|ds| ds.iter().map(|d| d.as_singleton().expect("singleton")).collect()).collect();
            return self.check_assignment(&values).then_some(values);
        };
        for v in doms[n][i].representatives() {
            let mut next = doms.clone();
            next[n][i] = ElementSet::singleton(&v);
            let mut scratch = Vec::new();
            if self.propagate(&mut next, &mut scratch).is_err() {
                continue;
            }
            if let Some(found) = self.search(next, budget, visited, incomplete) {
                return Some(found);
            }
            if *incomplete {
                return None;
            }
        }
        None
    }
}
