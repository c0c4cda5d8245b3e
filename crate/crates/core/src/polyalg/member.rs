//! Membership and equality of hyperproduct expressions, with certificates.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::carriers::{Element, ElementSet, Hyperfield};
use crate::error::{Error, Result};

use super::expr::ProductExpr;
use super::poly::Polynomial;
use super::polybox::{boxprod, boxsum, same_hf, PolyBox};
use super::solver::{Network, Solution, Template};

/// Search budget (visited search nodes) for a single membership query.
pub const SEARCH_BUDGET: usize = 200_000;
const SAMPLE_CAP: usize = 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

/// A reason why a polynomial is not in an expression's value set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoReason {
    /// Constraint propagation emptied a coefficient domain.
    Propagation { trace: Vec<String> },
    /// The expression has a linear factor `c(T - a)` but `0 ∉ p(a)`.
    RootObstruction { factor: Polynomial, root: Element, value: ElementSet },
    /// Exhaustive search over a finite carrier found no assignment.
    Exhaustive { visited: usize },
}

impl NoReason {
    /// Human-readable lines; propagation reasons keep their full trace.
    pub fn describe(&self, hf: &Hyperfield) -> Vec<String> {
        match self {
            NoReason::Propagation { trace } => trace.clone(),
            NoReason::RootObstruction { factor, root, value } => vec![format!(
                "factor {factor} has root {}, but the polynomial evaluates to {} there",
                hf.format_element(root),
                hf.format_set(value)
            )],
            NoReason::Exhaustive { visited } => vec![format!("exhaustive search over {visited} nodes found no assignment")],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberCertificate {
    pub verdict: Verdict,
    pub polynomial: Polynomial,
    pub expression: ProductExpr,
    /// For `Yes`: the value of every intermediate node, labelled by its subexpression.
    pub assignment: Vec<(String, Polynomial)>,
    pub reasons: Vec<NoReason>,
    pub note: Option<String>,
}

/// The linear root `a = -c_0 / c_1` of a degree-one leaf.
fn linear_root(p: &Polynomial) -> Option<Element> {
    if p.degree() != 1 {
        return None;
    }
    let hf = p.hf();
    let ratio = hf.mul_unchecked(&p.coeffs()[0], &hf.inv(&p.coeffs()[1]).ok()?);
    hf.neg(&ratio).ok()
}

fn root_obstructions(p: &Polynomial, e: &ProductExpr) -> Vec<NoReason> {
    let ProductExpr::Prod(a, b) = e else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for side in [a, b] {
        if let ProductExpr::Leaf(f) = side.as_ref() {
            if let Some(root) = linear_root(f) {
                let value = p.eval(&root).expect("same carrier");
                if !value.contains(&p.hf().zero()) {
                    out.push(NoReason::RootObstruction { factor: f.clone(), root, value });
                }
            }
        }
    }
    out
}

/// Decides whether `p` lies in the value set of `e`.
pub fn expr_member(p: &Polynomial, e: &ProductExpr) -> Result<MemberCertificate> {
    same_hf(p.hf(), e.hf())?;
    let hf = p.hf();
    let net = Network::new(hf, &Template::from_expr(e), Some(p));
    let mut reasons = root_obstructions(p, e);
    let mut assignment = Vec::new();
    let mut note = None;
    let verdict = match net.solve(SEARCH_BUDGET) {
        Solution::Sat(values) => {
            if !reasons.is_empty() {
                return Err(Error::Verification(format!("{p} satisfies {e} despite a root obstruction")));
            }
            assignment = net.free_nodes().into_iter().map(|n| (net.label(n).to_string(), values[n].clone())).collect();
            Verdict::Yes
        }
        Solution::Refuted(c) => {
            reasons.insert(0, NoReason::Propagation { trace: c.trace });
            Verdict::No
        }
        Solution::Exhausted { nodes } => {
            reasons.insert(0, NoReason::Exhaustive { visited: nodes });
            Verdict::No
        }
        Solution::Unknown(why) => {
            if reasons.is_empty() {
                note = Some(why);
                Verdict::Undecided
            } else {
                Verdict::No
            }
        }
    };
    let cert = MemberCertificate { verdict, polynomial: p.clone(), expression: e.clone(), assignment, reasons, note };
    if cert.verdict == Verdict::Yes && !verify_yes(&cert) {
        return Err(Error::Verification(format!("assignment for {p} in {e} does not replay")));
    }
    Ok(cert)
}

/// Replays a `Yes` certificate using only box arithmetic: every node value
/// must lie in the box of its children's values.
pub fn verify_yes(cert: &MemberCertificate) -> bool {
    let mut values = cert.assignment.iter().map(|(_, q)| q.clone());
    fn walk(e: &ProductExpr, values: &mut dyn Iterator<Item = Polynomial>, is_root: bool, root: &Polynomial) -> Option<Polynomial> {
        let value_of = |values: &mut dyn Iterator<Item = Polynomial>| if is_root { Some(root.clone()) } else { values.next() };
        match e {
            ProductExpr::Leaf(p) => Some(p.clone()),
            ProductExpr::Prod(a, b) => {
                let (va, vb) = (walk(a, values, false, root)?, walk(b, values, false, root)?);
                let v = value_of(values)?;
                boxprod(&va, &vb).ok()?.contains(&v).then_some(v)
            }
            ProductExpr::Sum(a, b) => {
                let (va, vb) = (walk(a, values, false, root)?, walk(b, values, false, root)?);
                let v = value_of(values)?;
                boxsum(&va, &vb).ok()?.contains(&v).then_some(v)
            }
            ProductExpr::Scalar(c, a) => {
                // the scalar becomes a constant leaf, then the product node
                let va = walk(a, values, false, root)?;
                let v = value_of(values)?;
                (va.scalar_prod(c).ok()? == v).then_some(v)
            }
        }
    }
    cert.verdict == Verdict::Yes
        && walk(&cert.expression, &mut values, true, &cert.polynomial).as_ref() == Some(&cert.polynomial)
        && values.next().is_none()
}

/// Replays a `No` certificate's root obstructions; propagation and
/// exhaustive reasons are replayed by re-running the solver.
pub fn verify_no(cert: &MemberCertificate) -> bool {
    cert.verdict == Verdict::No
        && cert.reasons.iter().all(|r| match r {
            NoReason::RootObstruction { root, .. } => !cert.polynomial.is_root(root).unwrap_or(true),
            NoReason::Propagation { .. } | NoReason::Exhaustive { .. } => {
                let net = Network::new(cert.polynomial.hf(), &Template::from_expr(&cert.expression), Some(&cert.polynomial));
                matches!(net.solve(SEARCH_BUDGET), Solution::Refuted(_) | Solution::Exhausted { .. })
            }
        })
}

/// Exact member list of an expression over a finite carrier.
pub fn enumerate_expr(e: &ProductExpr) -> Result<BTreeSet<Polynomial>> {
    if !e.hf().is_finite() {
        return Err(Error::NotFinite("enumerating an expression"));
    }
    match e {
        ProductExpr::Leaf(p) => Ok(BTreeSet::from([p.clone()])),
        ProductExpr::Prod(a, b) | ProductExpr::Sum(a, b) => {
            let (sa, sb) = (enumerate_expr(a)?, enumerate_expr(b)?);
            let mut out = BTreeSet::new();
            for p in &sa {
                for q in &sb {
                    let bx = if matches!(e, ProductExpr::Prod(..)) { boxprod(p, q)? } else { boxsum(p, q)? };
                    out.extend(bx.enumerate()?);
                }
            }
            Ok(out)
        }
        ProductExpr::Scalar(c, a) => enumerate_expr(a)?.iter().map(|p| p.scalar_prod(c)).collect(),
    }
}

/// Representative members of an expression: exhaustive on finite carriers,
/// built from box representatives otherwise.
pub fn sample_members(e: &ProductExpr, cap: usize) -> Vec<Polynomial> {
    match e {
        ProductExpr::Leaf(p) => vec![p.clone()],
        ProductExpr::Prod(a, b) | ProductExpr::Sum(a, b) => {
            let (sa, sb) = (sample_members(a, cap), sample_members(b, cap));
            let mut out: Vec<Polynomial> = Vec::new();
            for p in &sa {
                for q in &sb {
                    let bx = if matches!(e, ProductExpr::Prod(..)) { boxprod(p, q) } else { boxsum(p, q) };
                    if let Ok(bx) = bx {
                        for m in bx.representative_members(cap) {
                            if !out.contains(&m) {
                                out.push(m);
                            }
                        }
                    }
                }
            }
            out.truncate(cap.max(1) * 4);
            out
        }
        ProductExpr::Scalar(c, a) => sample_members(a, cap).iter().filter_map(|p| p.scalar_prod(c).ok()).collect(),
    }
}

/// Description of an expression's value set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprSet {
    pub hf: Hyperfield,
    pub expression: ProductExpr,
    /// Exact sorted member list on finite carriers.
    pub members: Option<Vec<Polynomial>>,
    /// Per-node coefficient domains after propagation, labelled by subexpression.
    pub node_boxes: Vec<(String, PolyBox)>,
}

pub fn expr_set(e: &ProductExpr) -> Result<ExprSet> {
    let hf = e.hf().clone();
    let members = if hf.is_finite() { Some(enumerate_expr(e)?.into_iter().collect()) } else { None };
    let net = Network::new(&hf, &Template::from_expr(e), None);
    let mut doms = net.initial().clone();
    let mut trace = Vec::new();
    net.propagate(&mut doms, &mut trace)
        .map_err(|c| Error::Verification(format!("unconstrained expression is infeasible: {:?}", c.trace)))?;
    let mut nodes = net.free_nodes();
    nodes.push(net.root());
    let node_boxes = nodes
        .into_iter()
        .map(|n| Ok((net.label(n).to_string(), PolyBox::new(&hf, doms[n].clone())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExprSet { hf, expression: e.clone(), members, node_boxes })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityCertificate {
    pub verdict: EqualityVerdict,
    pub left: ProductExpr,
    pub right: ProductExpr,
    /// A polynomial in exactly one side, with its replayed memberships.
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EqualityVerdict {
    Equal,
    Unequal,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub polynomial: Polynomial,
    /// True when the witness lies in the left set and not in the right.
    pub in_left: bool,
    pub membership: MemberCertificate,
    pub refutation: MemberCertificate,
}

fn witness_for(p: &Polynomial, inside: &ProductExpr, outside: &ProductExpr, in_left: bool) -> Result<Option<Witness>> {
    let refutation = expr_member(p, outside)?;
    if refutation.verdict != Verdict::No {
        return Ok(None);
    }
    let membership = expr_member(p, inside)?;
    if membership.verdict != Verdict::Yes {
        return Err(Error::Verification(format!("sampled member {p} of {inside} failed to replay")));
    }
    Ok(Some(Witness { polynomial: p.clone(), in_left, membership, refutation }))
}

/// Compares the value sets of two expressions.
pub fn expr_equal(left: &ProductExpr, right: &ProductExpr) -> Result<EqualityCertificate> {
    same_hf(left.hf(), right.hf())?;
    let done = |verdict, witness, note| EqualityCertificate { verdict, left: left.clone(), right: right.clone(), witness, note };
    if left.hf().is_finite() {
        let (a, b) = (enumerate_expr(left)?, enumerate_expr(right)?);
        if a == b {
            return Ok(done(EqualityVerdict::Equal, None, Some(format!("both sets have {} members", a.len()))));
        }
        // densest witness first, then the polynomial order
        let zeros = |p: &Polynomial| p.coeffs().iter().filter(|c| left.hf().is_zero(c)).count();
        let first = a.symmetric_difference(&b).min_by_key(|p| (zeros(p), (*p).clone())).expect("sets differ").clone();
        let in_left = a.contains(&first);
        let (inside, outside) = if in_left { (left, right) } else { (right, left) };
        let w = witness_for(&first, inside, outside, in_left)?
            .ok_or_else(|| Error::Verification(format!("enumeration and membership disagree on {first}")))?;
        return Ok(done(EqualityVerdict::Unequal, Some(w), None));
    }
    let mut tried = 0;
    for (inside, outside, in_left) in [(left, right, true), (right, left, false)] {
        for p in sample_members(inside, SAMPLE_CAP) {
            tried += 1;
            if let Some(w) = witness_for(&p, inside, outside, in_left)? {
                return Ok(done(EqualityVerdict::Unequal, Some(w), None));
            }
        }
    }
    Ok(done(
        EqualityVerdict::Undecided,
        None,
        Some(format!("no separating member among {tried} sampled polynomials; equality is not decidable by sampling")),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::parse::{parse_expr, parse_poly};

    fn member(hf: &Hyperfield, p: &str, e: &str) -> MemberCertificate {
        expr_member(&parse_poly(p, hf).unwrap(), &parse_expr(e, hf).unwrap()).unwrap()
    }

    #[test]
    fn viro_bracketings() {
        let v = Hyperfield::viro();
        let yes = member(&v, "T^3+2T^2+11T+6", "(T+2)*((T+1)*(T+3))");
        assert_eq!(yes.verdict, Verdict::Yes);
        assert_eq!(yes.assignment[0].1, parse_poly("T^2+4T+3", &v).unwrap());
        let no = member(&v, "T^3+2T^2+11T+6", "(T+1)*((T+2)*(T+3))");
        assert_eq!(no.verdict, Verdict::No);
        let NoReason::Propagation { trace } = &no.reasons[0] else { panic!("{:?}", no.reasons) };
        let forced = trace.iter().position(|l| l.contains("T^1") && l.contains("{5}")).expect("d1 forced");
        let clash = trace.iter().position(|l| l.contains("T^2") && l.contains("[4,6]")).expect("conflict");
        assert!(forced < clash);
        assert!(verify_no(&no));
    }

    #[test]
    fn weak_signs_root_obstruction() {
        let w = Hyperfield::weak_signs();
        assert_eq!(member(&w, "T^3-1", "(T-1)*((T+1)*(T+1))").verdict, Verdict::Yes);
        let no = member(&w, "T^3-1", "(T+1)*((T-1)*(T+1))");
        assert_eq!(no.verdict, Verdict::No);
        assert!(no.reasons.iter().any(|r| matches!(r, NoReason::RootObstruction { .. })));
    }

    #[test]
    fn finite_membership_matches_enumeration() {
        let k = Hyperfield::krasner();
        let e = parse_expr("(T+1)*((T^2+1)*(T+1))", &k).unwrap();
        let set = enumerate_expr(&e).unwrap();
        for p in &set {
            assert_eq!(expr_member(p, &e).unwrap().verdict, Verdict::Yes);
        }
        let outside = parse_poly("T^4+1", &k).unwrap();
        assert_eq!(set.contains(&outside), expr_member(&outside, &e).unwrap().verdict == Verdict::Yes);
    }

    #[test]
    fn scalar_and_sum_nodes() {
        let s = Hyperfield::signs();
        let e = parse_expr("(-1)*(T+1)", &s).unwrap();
        assert_eq!(expr_member(&parse_poly("-T-1", &s).unwrap(), &e).unwrap().verdict, Verdict::Yes);
        let e = parse_expr("(T)+(-T)", &s).unwrap();
        assert_eq!(enumerate_expr(&e).unwrap().len(), 2);
        assert_eq!(expr_member(&parse_poly("T", &s).unwrap(), &e).unwrap().verdict, Verdict::Yes);
    }
}
