//! The reproduction suite behind `repro --all`: fourteen worked checks, each
//! reporting pass or fail with a one-line detail.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::assoc::{assoc_scan, one_plus_one_criterion, pointwise_products_equal};
use crate::carriers::{check_axioms, int, is_doubly_distributive, rat, Element, ElementSet, ExtRat, Hyperfield, ProbeSpec};
use crate::divide::{mult_at, mult_set, quotients};
use crate::error::{Error, Result};
use crate::polyalg::{expr_equal, expr_member, parse_expr, parse_poly, verify_no, verify_yes, EqualityVerdict, NoReason, PolyBox, Polynomial, Verdict};
use crate::tropical::{box_equivalence, is_reducible, linear_product_box, root_multiset, Reducibility};

/// Seed for the randomised tropical checks.
pub const SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn() -> Result<(bool, String)>;

pub const CRITERIA: [(&str, Check); 14] = [
    ("hyperfield axioms", axioms),
    ("double distributivity", double_distributivity),
    ("tropical evaluation", tropical_evaluation),
    ("Viro bracketings", viro_bracketings),
    ("phase roots and quotients", phase_roots),
    ("weak signs bracketings", weak_signs_bracketings),
    ("signs bracketings", signs_bracketings),
    ("Krasner bracketings and scan", krasner_bracketings),
    ("1 ⊞ 1 criterion", one_plus_one),
    ("tropical linear products", tropical_linear_products),
    ("tropical factorization round trip", tropical_round_trip),
    ("tropical reducibility", tropical_reducibility),
    ("multiplicity examples", multiplicities),
    ("pointwise evaluation", pointwise),
];

pub fn run_one(id: usize) -> CriterionResult {
    let (title, check) = CRITERIA[id - 1];
    let start = Instant::now();
    let (passed, detail) = match check() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionResult { id, title: title.into(), passed, detail, millis: start.elapsed().as_millis() }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA.len()).map(run_one).collect()
}

fn poly(hf: &Hyperfield, text: &str) -> Result<Polynomial> {
    parse_poly(text, hf)
}

fn member(hf: &Hyperfield, p: &str, e: &str) -> Result<crate::polyalg::MemberCertificate> {
    expr_member(&poly(hf, p)?, &parse_expr(e, hf)?)
}

fn axioms() -> Result<(bool, String)> {
    let exhaustive = [Hyperfield::krasner(), Hyperfield::signs(), Hyperfield::weak_signs(), Hyperfield::by_name("W(Z3,0)")?];
    let probed = [Hyperfield::tropical(), Hyperfield::viro(), Hyperfield::phase(), Hyperfield::prime(5)?];
    let mut failed = Vec::new();
    for hf in &exhaustive {
        let r = check_axioms(hf, &ProbeSpec::Exhaustive);
        if !(r.exhaustive && r.all_hold()) {
            failed.push(hf.name());
        }
    }
    for hf in &probed {
        if !check_axioms(hf, &ProbeSpec::Default).all_hold() {
            failed.push(hf.name());
        }
    }
    Ok((failed.is_empty(), if failed.is_empty() { "8 hyperfields satisfy every axiom".into() } else { format!("violations in {failed:?}") }))
}

fn double_distributivity() -> Result<(bool, String)> {
    let s = is_doubly_distributive(&Hyperfield::signs(), &ProbeSpec::Exhaustive);
    let w = is_doubly_distributive(&Hyperfield::weak_signs(), &ProbeSpec::Exhaustive);
    let ok = s.exhaustive && s.holds && w.exhaustive && !w.holds && w.counterexample.is_some();
    let quad = w.counterexample.map(|c| c.quadruple.join(", ")).unwrap_or_default();
    Ok((ok, format!("S holds on {} quadruples; W fails at ({quad})", s.quadruples_checked)))
}

fn tropical_evaluation() -> Result<(bool, String)> {
    let t = Hyperfield::tropical();
    let p = poly(&t, "1T^3+(-2)")?;
    let mut ok = true;
    for a in [rat(-5, 1), rat(-3, 2), rat(-11, 10)] {
        ok &= p.eval(&Element::trop_rat(a))? == t.singleton(&Element::trop(-2));
    }
    ok &= t.format_set(&p.eval(&Element::trop(-1))?) == "[-inf,-2]";
    for a in [rat(-9, 10), rat(0, 1), rat(5, 2)] {
        let expected = Element::trop_rat(int(1) + int(3) * &a);
        ok &= p.eval(&Element::trop_rat(a))? == t.singleton(&expected);
    }
    Ok((ok, "{-2} below -1, [-inf,-2] at -1, {1+3a} above".into()))
}

fn viro_bracketings() -> Result<(bool, String)> {
    let v = Hyperfield::viro();
    let yes = member(&v, "T^3+2T^2+11T+6", "(T+2)*((T+1)*(T+3))")?;
    let no = member(&v, "T^3+2T^2+11T+6", "(T+1)*((T+2)*(T+3))")?;
    let trace = match no.reasons.first() {
        Some(NoReason::Propagation { trace }) => trace.clone(),
        _ => Vec::new(),
    };
    let forced = trace.iter().position(|l| l.contains("T^1") && l.contains("forced to {5}"));
    let clash = trace.iter().position(|l| l.contains("T^2") && l.contains("[4,6]"));
    let ordered = matches!((forced, clash), (Some(f), Some(c)) if f < c);
    let ok = yes.verdict == Verdict::Yes && verify_yes(&yes) && no.verdict == Verdict::No && verify_no(&no) && ordered;
    Ok((ok, format!("YES then NO; trace: {}", trace.last().cloned().unwrap_or_default())))
}

fn phase_roots() -> Result<(bool, String)> {
    let ph = Hyperfield::phase();
    let cubic = poly(&ph, "T^3-e^{i pi/8}T^2+e^{i 5pi/24}T-e^{i pi/3}")?;
    let q = poly(&ph, "T^2-e^{i pi/12}T+e^{i pi/6}")?;
    let at_12 = Element::phase(rat(1, 12));
    let not_root = !cubic.is_root(&at_12)?;
    let qs = quotients(&cubic, &Element::phase(rat(1, 6)))?;
    let contains = qs.admits(&q);
    let m = mult_at(&q, &at_12)?;
    Ok((not_root && contains && m == 2, format!("0 ∉ p(ph(1/12)): {not_root}; q is a quotient: {contains}; mult = {m}")))
}

fn weak_signs_bracketings() -> Result<(bool, String)> {
    let w = Hyperfield::weak_signs();
    let yes = member(&w, "T^3-1", "(T-1)*((T+1)*(T+1))")?;
    let no = member(&w, "T^3-1", "(T+1)*((T-1)*(T+1))")?;
    let obstruction = no.reasons.iter().any(|r| {
        matches!(r, NoReason::RootObstruction { root, value, .. }
            if w.format_element(root) == "-1" && !value.contains(&w.zero()))
    });
    let ok = yes.verdict == Verdict::Yes && no.verdict == Verdict::No && obstruction && verify_no(&no);
    Ok((ok, "T^3-1 in (T-1)*((T+1)*(T+1)); excluded from (T+1)*((T-1)*(T+1)) since 0 ∉ p(-1)".into()))
}

fn signs_bracketings() -> Result<(bool, String)> {
    let s = Hyperfield::signs();
    let yes = member(&s, "T^3+T^2+T+1", "(T+1)*((T-1)*(T-1))")?;
    let p = poly(&s, "T^3+T^2+T+1")?;
    let at_one = p.eval(&s.one())? == s.singleton(&s.one());
    let eq = expr_equal(&parse_expr("(T+1)*((T-1)*(T-1))", &s)?, &parse_expr("(T-1)*((T+1)*(T-1))", &s)?)?;
    let ok = yes.verdict == Verdict::Yes && at_one && eq.verdict == EqualityVerdict::Unequal;
    let w = eq.witness.map(|w| w.polynomial.to_string()).unwrap_or_default();
    Ok((ok, format!("member, p(1) = {{1}}, bracketings differ at {w}")))
}

fn krasner_bracketings() -> Result<(bool, String)> {
    let k = Hyperfield::krasner();
    let eq = expr_equal(&parse_expr("(T+1)*((T^2+1)*(T+1))", &k)?, &parse_expr("(T^2+1)*((T+1)*(T+1))", &k)?)?;
    let scan = assoc_scan(&k, 2, true)?;
    let ok = eq.verdict == EqualityVerdict::Unequal && eq.witness.is_some() && !scan.counterexamples.is_empty();
    let w = eq.witness.map(|w| w.polynomial.to_string()).unwrap_or_default();
    Ok((ok, format!("witness {w}; scan found {} counterexamples in {} triples", scan.counterexamples.len(), scan.triples_checked)))
}

/// The built-in hyperfields.
pub fn builtin_hyperfields() -> Result<Vec<Hyperfield>> {
    Ok(vec![
        Hyperfield::krasner(),
        Hyperfield::signs(),
        Hyperfield::weak_signs(),
        Hyperfield::by_name("W(Z3,0)")?,
        Hyperfield::tropical(),
        Hyperfield::viro(),
        Hyperfield::phase(),
        Hyperfield::prime(2)?,
        Hyperfield::prime(3)?,
        Hyperfield::prime(5)?,
    ])
}

fn one_plus_one() -> Result<(bool, String)> {
    let mut ok = true;
    let mut non_singleton = Vec::new();
    for hf in builtin_hyperfields()? {
        let c = one_plus_one_criterion(&hf)?;
        if !c.singleton {
            non_singleton.push(hf.name());
            let shaped = c.witness.as_ref().is_some_and(|w| poly(&hf, &w.polynomial).is_ok_and(|p| p.degree() == 4)) && c.d1 != c.d2;
            ok &= shaped && c.replay(&hf)?;
        }
    }
    ok &= ["K", "W", "T", "V"].iter().all(|n| non_singleton.iter().any(|m| m == n));
    Ok((ok, format!("non-singleton and replayed: {}", non_singleton.join(", "))))
}

fn random_root(rng: &mut StdRng) -> Element {
    if rng.gen_bool(0.08) {
        return Element::neg_inf();
    }
    Element::trop_rat(rat(rng.gen_range(-12..=12), rng.gen_range(1..=3)))
}

fn random_roots(rng: &mut StdRng, n: usize) -> Vec<Element> {
    let mut out: Vec<Element> = Vec::with_capacity(n);
    for _ in 0..n {
        // repeat an earlier root now and then so that ties are exercised
        if !out.is_empty() && rng.gen_bool(0.3) {
            let i = rng.gen_range(0..out.len());
            out.push(out[i].clone());
        } else {
            out.push(random_root(rng));
        }
    }
    out
}

/// A random member of a tropical box: singletons are fixed, `[-inf, x]`
/// contributes `x`, `-inf` or a value below `x`.
pub fn random_box_member(b: &PolyBox, rng: &mut StdRng) -> Result<Polynomial> {
    let coeffs = b
        .coeffs()
        .iter()
        .map(|s| {
            if let Some(e) = s.as_singleton() {
                return Ok(e);
            }
            let top = s.representatives().into_iter().next().ok_or(Error::Empty("box coefficient"))?;
            Ok(match (rng.gen_range(0..3), &top) {
                (0, _) => top,
                (1, _) => Element::neg_inf(),
                (_, Element::Trop(ExtRat::Fin(x))) => Element::trop_rat(x - rat(rng.gen_range(1..=8), rng.gen_range(1..=2))),
                _ => top,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Polynomial::new(b.hf(), coeffs)
}

fn tropical_linear_products() -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut failures = 0;
    let mut instances = 0;
    for (count, n) in [(100, 3), (50, 4)] {
        for _ in 0..count {
            let roots = random_roots(&mut rng, n);
            instances += 1;
            let cert = box_equivalence(&roots, 6)?;
            let mut rotated = roots.clone();
            rotated.rotate_left(1);
            let mut reversed = roots.clone();
            reversed.reverse();
            let b = linear_product_box(&roots)?;
            if !cert.equal || linear_product_box(&rotated)? != b || linear_product_box(&reversed)? != b {
                failures += 1;
            }
        }
    }
    Ok((failures == 0, format!("{instances} instances, {failures} failures")))
}

fn tropical_round_trip() -> Result<(bool, String)> {
    let mut rng = StdRng::seed_from_u64(SEED ^ 1);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let mut roots = random_roots(&mut rng, n);
        let p = random_box_member(&linear_product_box(&roots)?, &mut rng)?;
        roots.sort_by(|a, b| b.cmp(a));
        let found = root_multiset(&p)?;
        let mut counts_ok = true;
        for a in &roots {
            counts_ok &= mult_at(&p, a)? == roots.iter().filter(|b| *b == a).count();
        }
        if found.elements() != roots || !counts_ok {
            failures.push(p.to_string());
        }
    }
    Ok((failures.is_empty(), format!("100 samples, failures: {failures:?}")))
}

fn tropical_reducibility() -> Result<(bool, String)> {
    let t = Hyperfield::tropical();
    let irr = is_reducible(&poly(&t, "0T^2+2")?, 4)?;
    let forced = ["so q_0 = -inf", "so r_0 = -inf"].iter().all(|f| irr.trace.iter().any(|l| l.ends_with(f)));
    let contradiction = irr.trace.iter().any(|l| l.contains("must be 2"));
    let red = is_reducible(&poly(&t, "0T^2+5T+5")?, 4)?;
    let ok = irr.verdict == Reducibility::Irreducible && forced && contradiction && red.verdict == Reducibility::Reducible;
    Ok((ok, format!("0T^2+2: {}; 0T^2+5T+5 = {:?}", irr.trace.join("; "), red.factors)))
}

fn multiplicities() -> Result<(bool, String)> {
    let s = Hyperfield::signs();
    let m = mult_at(&poly(&s, "T^3-T")?, &s.zero())?;
    let v = Hyperfield::viro();
    let region: ElementSet = v.parse_set("[1,inf)")?;
    let ms = mult_set(&poly(&v, "T^2+3T+1")?, &region)?;
    Ok((m == 1 && ms.multiplicity == 1 && ms.exact, format!("mult_0 = {m}; mult_[1,inf) = {} (exact: {})", ms.multiplicity, ms.exact)))
}

fn pointwise() -> Result<(bool, String)> {
    let s = Hyperfield::signs();
    let rep = pointwise_products_equal(&poly(&s, "T+1")?, &poly(&s, "T-1")?, &poly(&s, "T-1")?, None)?;
    let points: Vec<&str> = rep.rows.iter().map(|r| r.at.as_str()).collect();
    Ok((rep.all_equal && rep.rows.len() == 3, format!("equal at {}", points.join(", "))))
}
