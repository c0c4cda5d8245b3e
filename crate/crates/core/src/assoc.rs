//! Associativity of the polynomial hyperproduct: single checks, exhaustive
//! scans, the `1 ⊞ 1` criterion and pointwise comparisons.
//!
//! Every certificate stores plain text (polynomials and expressions in the
//! parser's syntax) so that it serializes stably and can be replayed against
//! a fresh parse.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::carriers::{Element, Hyperfield};
use crate::error::{Error, Result};
use crate::polyalg::member::{enumerate_expr, EqualityVerdict, MemberCertificate, Witness};
use crate::polyalg::polybox::cartesian;
use crate::polyalg::{expr_equal, expr_member, parse_expr, parse_poly, Polynomial, ProductExpr, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssocKind {
    AssocHolds,
    Counterexample,
    Undecided,
}

/// A polynomial in `member_of` and not in `excluded_from`, with both justifications.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub polynomial: String,
    pub member_of: String,
    pub excluded_from: String,
    /// Intermediate node values, `label = polynomial`.
    pub membership: Vec<String>,
    /// Per-coefficient constraint trace or root obstruction.
    pub refutation: Vec<String>,
}

impl WitnessReport {
    pub(crate) fn from_certs(hf: &Hyperfield, membership: &MemberCertificate, refutation: &MemberCertificate) -> Self {
        WitnessReport {
            polynomial: membership.polynomial.to_string(),
            member_of: membership.expression.to_string(),
            excluded_from: refutation.expression.to_string(),
            membership: membership.assignment.iter().map(|(l, q)| format!("{l} = {q}")).collect(),
            refutation: refutation.reasons.iter().flat_map(|r| r.describe(hf)).collect(),
        }
    }

    fn from_witness(hf: &Hyperfield, w: &Witness) -> Self {
        Self::from_certs(hf, &w.membership, &w.refutation)
    }

    /// Re-parses and re-decides both memberships.
    pub fn replay(&self, hf: &Hyperfield) -> Result<bool> {
        let p = parse_poly(&self.polynomial, hf)?;
        let inside = expr_member(&p, &parse_expr(&self.member_of, hf)?)?;
        let outside = expr_member(&p, &parse_expr(&self.excluded_from, hf)?)?;
        Ok(inside.verdict == Verdict::Yes && outside.verdict == Verdict::No)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssocCertificate {
    pub hyperfield: String,
    pub kind: AssocKind,
    pub triple: [String; 3],
    pub left: String,
    pub right: String,
    pub witness: Option<WitnessReport>,
    pub note: Option<String>,
}

impl AssocCertificate {
    /// A counterexample replays when its witness does; other kinds carry nothing to replay.
    pub fn replay(&self, hf: &Hyperfield) -> Result<bool> {
        match (&self.kind, &self.witness) {
            (AssocKind::Counterexample, Some(w)) => w.replay(hf),
            (AssocKind::Counterexample, None) => Ok(false),
            _ => Ok(true),
        }
    }
}

fn compare(hf: &Hyperfield, triple: [&Polynomial; 3], left: ProductExpr, right: ProductExpr) -> Result<AssocCertificate> {
    let eq = expr_equal(&left, &right)?;
    let kind = match eq.verdict {
        EqualityVerdict::Equal => AssocKind::AssocHolds,
        EqualityVerdict::Unequal => AssocKind::Counterexample,
        EqualityVerdict::Undecided => AssocKind::Undecided,
    };
    Ok(AssocCertificate {
        hyperfield: hf.name(),
        kind,
        triple: triple.map(|p| p.to_string()),
        left: left.to_string(),
        right: right.to_string(),
        witness: eq.witness.as_ref().map(|w| WitnessReport::from_witness(hf, w)),
        note: eq.note,
    })
}

/// Compares `p ⊡ (q ⊡ r)` with `(p ⊡ q) ⊡ r`.
pub fn assoc_check(p: &Polynomial, q: &Polynomial, r: &Polynomial) -> Result<AssocCertificate> {
    compare(p.hf(), [p, q, r], ProductExpr::right_nested(p, q, r), ProductExpr::left_nested(p, q, r))
}

/// Pairwise comparisons of `p(qr)`, `q(rp)` and `r(pq)`, which cover every
/// bracketing and ordering up to commutativity.
pub fn assoc_check_all(p: &Polynomial, q: &Polynomial, r: &Polynomial) -> Result<Vec<AssocCertificate>> {
    let forms = [ProductExpr::right_nested(p, q, r), ProductExpr::right_nested(q, r, p), ProductExpr::right_nested(r, p, q)];
    [(0, 1), (0, 2), (1, 2)]
        .into_iter()
        .map(|(i, j)| compare(p.hf(), [p, q, r], forms[i].clone(), forms[j].clone()))
        .collect()
}

/// Every polynomial of degree at most `max_deg`, monic ones only when asked,
/// in ascending degree and coefficient order.
pub fn polynomials_up_to(hf: &Hyperfield, max_deg: usize, monic_only: bool) -> Result<Vec<Polynomial>> {
    let elems = hf.elements().ok_or(Error::NotFinite("scanning polynomials"))?;
    let leads: Vec<Element> = if monic_only { vec![hf.one()] } else { elems.iter().filter(|e| !hf.is_zero(e)).cloned().collect() };
    let mut out = Vec::new();
    for d in 0..=max_deg {
        let mut choices = vec![elems.clone(); d];
        choices.push(leads.clone());
        let mut batch: Vec<Polynomial> = cartesian(&choices).into_iter().map(|c| Polynomial::new(hf, c)).collect::<Result<_>>()?;
        batch.sort();
        out.extend(batch);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub hyperfield: String,
    pub max_deg: usize,
    pub monic_only: bool,
    pub polynomials: usize,
    pub triples_checked: usize,
    pub counterexamples: Vec<AssocCertificate>,
}

/// Exhaustive scan of `p ⊡ (q ⊡ r)` against `(p ⊡ q) ⊡ r`.
///
/// `(p, q, r)` and `(r, q, p)` pose the same question by commutativity, so
/// only triples with `p <= r` are checked.
pub fn assoc_scan(hf: &Hyperfield, max_deg: usize, monic_only: bool) -> Result<ScanReport> {
    let polys = polynomials_up_to(hf, max_deg, monic_only)?;
    let n = polys.len();
    let triples: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|i| (0..n).flat_map(move |j| (i..n).map(move |k| (i, j, k)))).collect();
    let found: Vec<Result<Option<AssocCertificate>>> = triples
        .par_iter()
        .map(|&(i, j, k)| {
            let (p, q, r) = (&polys[i], &polys[j], &polys[k]);
            let (left, right) = (ProductExpr::right_nested(p, q, r), ProductExpr::left_nested(p, q, r));
            if enumerate_expr(&left)? == enumerate_expr(&right)? {
                return Ok(None);
            }
            assoc_check(p, q, r).map(Some)
        })
        .collect();
    let counterexamples = found.into_iter().filter_map(Result::transpose).collect::<Result<Vec<_>>>()?;
    Ok(ScanReport { hyperfield: hf.name(), max_deg, monic_only, polynomials: n, triples_checked: triples.len(), counterexamples })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OnePlusOneCertificate {
    pub hyperfield: String,
    pub one_plus_one: String,
    pub singleton: bool,
    /// Present when `1 ⊞ 1` is not a singleton: `T^4 + d1 T^3 + m T^2 + d2 T + 1`
    /// with `d1 ≠ d2` and `d1, d2, m ∈ 1 ⊞ 1`, inside `(T+1) ⊡ ((T^2+1) ⊡ (T+1))`
    /// and outside `(T^2+1) ⊡ ((T+1) ⊡ (T+1))`.
    pub witness: Option<WitnessReport>,
    pub d1: Option<String>,
    pub d2: Option<String>,
}

impl OnePlusOneCertificate {
    pub fn replay(&self, hf: &Hyperfield) -> Result<bool> {
        match &self.witness {
            Some(w) => w.replay(hf),
            None => Ok(self.singleton),
        }
    }
}

/// In `(T^2+1) ⊡ ((T+1) ⊡ (T+1))` the `T^3` and `T` coefficients both equal
/// the middle coefficient of the inner square, while
/// `(T+1) ⊡ ((T^2+1) ⊡ (T+1))` fills them independently from `1 ⊞ 1`.
pub fn one_plus_one_criterion(hf: &Hyperfield) -> Result<OnePlusOneCertificate> {
    let one = hf.one();
    let sum = hf.hyperadd(&one, &one)?;
    let mut cert = OnePlusOneCertificate {
        hyperfield: hf.name(),
        one_plus_one: hf.format_set(&sum),
        singleton: sum.as_singleton().is_some(),
        witness: None,
        d1: None,
        d2: None,
    };
    if cert.singleton {
        return Ok(cert);
    }
    let reps = sum.representatives();
    let mut ordered: Vec<Element> = reps.iter().filter(|e| !hf.is_zero(e)).cloned().collect();
    ordered.extend(reps.iter().filter(|e| hf.is_zero(e)).cloned());
    let (d1, d2, m) = (ordered[0].clone(), ordered[1].clone(), ordered[0].clone());
    let zero = hf.zero();
    let poly = |c: Vec<Element>| Polynomial::new(hf, c);
    let lin = poly(vec![one.clone(), one.clone()])?;
    let quad = poly(vec![one.clone(), zero.clone(), one.clone()])?;
    let coupled = ProductExpr::right_nested(&quad, &lin, &lin);
    let free = ProductExpr::right_nested(&lin, &quad, &lin);
    let w = poly(vec![one.clone(), d2.clone(), m, d1.clone(), one.clone()])?;
    let inside = expr_member(&w, &free)?;
    let outside = expr_member(&w, &coupled)?;
    if inside.verdict != Verdict::Yes || outside.verdict != Verdict::No {
        return Err(Error::Verification(format!(
            "witness {w}: {:?} in {free}, {:?} in {coupled}",
            inside.verdict, outside.verdict
        )));
    }
    cert.witness = Some(WitnessReport::from_certs(hf, &inside, &outside));
    cert.d1 = Some(hf.format_element(&d1));
    cert.d2 = Some(hf.format_element(&d2));
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointwiseRow {
    pub at: String,
    /// `p(a)(q(a)r(a))`, `q(a)(r(a)p(a))`, `r(a)(p(a)q(a))` as element-wise set products.
    pub products: [String; 3],
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointwiseReport {
    pub hyperfield: String,
    pub triple: [String; 3],
    pub rows: Vec<PointwiseRow>,
    pub all_equal: bool,
}

/// Compares the three bracketed products of evaluation sets at each point of
/// `region`; a finite carrier defaults to all of its elements.
pub fn pointwise_products_equal(p: &Polynomial, q: &Polynomial, r: &Polynomial, region: Option<&[Element]>) -> Result<PointwiseReport> {
    let hf = p.hf();
    for other in [q, r] {
        if other.hf() != hf {
            return Err(Error::HyperfieldMismatch(hf.name(), other.hf().name()));
        }
    }
    let points = match region {
        Some(pts) => pts.to_vec(),
        None => hf.elements().ok_or(Error::NotFinite("pointwise region; pass explicit points"))?,
    };
    if points.is_empty() {
        return Err(Error::Empty("pointwise region"));
    }
    let mut rows = Vec::new();
    for a in &points {
        let (pa, qa, ra) = (p.eval(a)?, q.eval(a)?, r.eval(a)?);
        let prods = [
            hf.set_mul(&pa, &hf.set_mul(&qa, &ra)),
            hf.set_mul(&qa, &hf.set_mul(&ra, &pa)),
            hf.set_mul(&ra, &hf.set_mul(&pa, &qa)),
        ];
        let equal = prods[0] == prods[1] && prods[1] == prods[2];
        rows.push(PointwiseRow { at: hf.format_element(a), products: prods.map(|s| hf.format_set(&s)), equal });
    }
    Ok(PointwiseReport {
        hyperfield: hf.name(),
        triple: [p, q, r].map(|x| x.to_string()),
        all_equal: rows.iter().all(|r| r.equal),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polys(hf: &Hyperfield, texts: [&str; 3]) -> [Polynomial; 3] {
        texts.map(|t| parse_poly(t, hf).unwrap())
    }

    #[test]
    fn signs_counterexample_witness() {
        let s = Hyperfield::signs();
        let [p, q, r] = polys(&s, ["T+1", "T-1", "T-1"]);
        let c = assoc_check(&p, &q, &r).unwrap();
        assert_eq!(c.kind, AssocKind::Counterexample);
        let w = c.witness.as_ref().unwrap();
        assert_eq!(w.polynomial, "T^3+T^2+T+1");
        assert_eq!(w.member_of, "(T+1)*((T-1)*(T-1))");
        assert!(c.replay(&s).unwrap());
    }

    #[test]
    fn krasner_criterion_witness() {
        let k = Hyperfield::krasner();
        let c = one_plus_one_criterion(&k).unwrap();
        assert!(!c.singleton);
        assert_eq!(c.witness.as_ref().unwrap().polynomial, "T^4+T^3+T^2+1");
        assert!(c.replay(&k).unwrap());
    }

    #[test]
    fn tropical_criterion_witness() {
        let t = Hyperfield::tropical();
        let c = one_plus_one_criterion(&t).unwrap();
        assert_eq!(c.one_plus_one, "[-inf,0]");
        assert_eq!((c.d1.as_deref(), c.d2.as_deref()), (Some("0"), Some("-1")));
        assert!(c.replay(&t).unwrap());
    }

    #[test]
    fn prime_field_criterion_inapplicable() {
        let c = one_plus_one_criterion(&Hyperfield::prime(3).unwrap()).unwrap();
        assert!(c.singleton && c.witness.is_none());
        assert_eq!(c.one_plus_one, "{2}");
    }

    #[test]
    fn scan_orders_and_counts() {
        let k = Hyperfield::krasner();
        let polys = polynomials_up_to(&k, 1, true).unwrap();
        assert_eq!(polys.len(), 3);
        let report = assoc_scan(&Hyperfield::prime(2).unwrap(), 1, false).unwrap();
        assert!(report.counterexamples.is_empty());
        // three polynomials, six unordered (p, r) pairs, three middles
        assert_eq!(report.triples_checked, 18);
    }

    #[test]
    fn signs_pointwise() {
        let s = Hyperfield::signs();
        let [p, q, r] = polys(&s, ["T+1", "T-1", "T-1"]);
        let rep = pointwise_products_equal(&p, &q, &r, None).unwrap();
        assert_eq!(rep.rows.len(), 3);
        assert!(rep.all_equal);
    }
}
