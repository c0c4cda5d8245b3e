//! Acceptance suite: fourteen end-to-end checks, each compared against a
//! test-side oracle. Prints one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use common::{trop_element, trop_linear_box, SignField, Trop};
use hyperpoly::assoc::{assoc_scan, one_plus_one_criterion, pointwise_products_equal};
use hyperpoly::carriers::{check_axioms, int, is_doubly_distributive, rat, Element, Hyperfield, ProbeSpec};
use hyperpoly::divide::{is_root, mult_at, mult_set, quotients};
use hyperpoly::polyalg::{
    boxprod, expr_equal, expr_member, parse_expr, parse_poly, verify_no, verify_yes, EqualityVerdict, NoReason, Polynomial, Verdict,
};
use hyperpoly::repro::builtin_hyperfields;
use hyperpoly::tropical::{box_equivalence, is_reducible, linear_product_box, root_multiset, Reducibility};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn poly(hf: &Hyperfield, text: &str) -> Polynomial {
    parse_poly(text, hf).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn signs_vec(text: &str, f: SignField) -> Vec<i8> {
    f.signs_of(&poly(&f.hf(), text))
}

fn axioms() -> Outcome {
    // the library tables agree with the oracle tables on every pair
    for f in [SignField::K, SignField::S, SignField::W] {
        let hf = f.hf();
        for x in f.elements() {
            for y in f.elements() {
                let got = hf.hyperadd(&f.element(x), &f.element(y)).unwrap();
                let got: BTreeSet<i8> = got.members().unwrap().iter().map(|e| f.sign_of_element(e)).collect();
                ensure!(got == f.add(x, y), "{}: {x} ⊞ {y} = {got:?}", f.name());
            }
        }
        // reversibility straight from the oracle tables
        for x in f.elements() {
            for y in f.elements() {
                for z in f.elements() {
                    ensure!(f.add(y, z).contains(&x) == f.add(x, f.neg(y)).contains(&z), "{}: reversibility at {x},{y},{z}", f.name());
                }
            }
        }
    }
    for name in ["K", "S", "W", "W(Z3,0)"] {
        let r = check_axioms(&Hyperfield::by_name(name).unwrap(), &ProbeSpec::Exhaustive);
        ensure!(r.exhaustive && r.all_hold(), "{name}: {:?}", r.results.iter().filter(|x| !x.holds).collect::<Vec<_>>());
    }
    for name in ["T", "V", "P", "GF(5)"] {
        let r = check_axioms(&Hyperfield::by_name(name).unwrap(), &ProbeSpec::Default);
        ensure!(r.all_hold(), "{name}: probe violation");
    }
    Ok(())
}

fn double_distributivity() -> Outcome {
    let distributive = |f: SignField| {
        let els = f.elements();
        let mut bad = None;
        for &a in &els {
            for &b in &els {
                for &c in &els {
                    for &d in &els {
                        let lhs: BTreeSet<i8> = f.add(a, b).iter().flat_map(|&s| f.add(c, d).into_iter().map(move |t| s * t)).collect();
                        let rhs = f.sum(&[a * c, a * d, b * c, b * d]);
                        if lhs != rhs && bad.is_none() {
                            bad = Some([a, b, c, d]);
                        }
                    }
                }
            }
        }
        bad
    };
    ensure!(distributive(SignField::S).is_none(), "oracle: S not doubly distributive");
    ensure!(distributive(SignField::W).is_some(), "oracle: W doubly distributive");
    let s = is_doubly_distributive(&Hyperfield::signs(), &ProbeSpec::Exhaustive);
    let w = is_doubly_distributive(&Hyperfield::weak_signs(), &ProbeSpec::Exhaustive);
    ensure!(s.exhaustive && s.holds, "S reported not doubly distributive");
    ensure!(w.exhaustive && !w.holds, "W reported doubly distributive");
    let quad = w.counterexample.ok_or("no W quadruple")?.quadruple;
    let f = SignField::W;
    let q: Vec<i8> = quad.iter().map(|x| f.sign_of_element(&f.hf().parse_element(x).unwrap())).collect();
    let lhs: BTreeSet<i8> = f.add(q[0], q[1]).iter().flat_map(|&s| f.add(q[2], q[3]).into_iter().map(move |t| s * t)).collect();
    ensure!(lhs != f.sum(&[q[0] * q[2], q[0] * q[3], q[1] * q[2], q[1] * q[3]]), "quadruple {quad:?} is not a counterexample");
    Ok(())
}

fn tropical_evaluation() -> Outcome {
    let t = Hyperfield::tropical();
    let p = poly(&t, "1T^3+(-2)");
    for k in -40..=40 {
        let a = rat(k, 10);
        let lead = int(1) + int(3) * &a;
        let expected = match lead.cmp(&int(-2)) {
            std::cmp::Ordering::Less => "{-2}".to_string(),
            std::cmp::Ordering::Equal => "[-inf,-2]".to_string(),
            std::cmp::Ordering::Greater => t.format_set(&t.singleton(&Element::trop_rat(lead))),
        };
        let got = t.format_set(&p.eval(&Element::trop_rat(a.clone())).map_err(|e| e.to_string())?);
        ensure!(got == expected, "p({a}) = {got}, expected {expected}");
    }
    Ok(())
}

fn viro_bracketings() -> Outcome {
    let v = Hyperfield::viro();
    let p = poly(&v, "T^3+2T^2+11T+6");
    let yes = expr_member(&p, &parse_expr("(T+2)*((T+1)*(T+3))", &v).unwrap()).map_err(|e| e.to_string())?;
    let no = expr_member(&p, &parse_expr("(T+1)*((T+2)*(T+3))", &v).unwrap()).map_err(|e| e.to_string())?;
    ensure!(yes.verdict == Verdict::Yes && verify_yes(&yes), "YES side: {:?}", yes.verdict);
    ensure!(no.verdict == Verdict::No && verify_no(&no), "NO side: {:?}", no.verdict);
    let trace = no
        .reasons
        .iter()
        .find_map(|r| match r {
            NoReason::Propagation { trace } => Some(trace.clone()),
            _ => None,
        })
        .ok_or("no propagation trace")?;
    let forced = trace.iter().position(|l| l.contains("T^1") && l.contains("{5}")).ok_or("no line forcing 5")?;
    let clash = trace.iter().position(|l| l.contains("T^2") && l.contains("[4,6]")).ok_or("no [4,6] line")?;
    ensure!(forced < clash, "trace out of order: {trace:?}");
    // oracle: (T+1)(T^2+dT+6) needs 11 ∈ 6 ⊞ d and 2 ∈ d ⊞ 1; on d ∈ [1,5] the first holds only at 5
    let viro = |x: i64| Element::viro(int(x));
    for k in 4..=20 {
        let d = Element::viro(rat(k, 4));
        let first = v.hyperadd(&viro(6), &d).unwrap().contains(&viro(11));
        ensure!(first == (k == 20), "11 ∈ 6 ⊞ {k}/4 is {first}");
    }
    ensure!(!v.hyperadd(&viro(5), &viro(1)).unwrap().contains(&viro(2)), "2 ∈ 5 ⊞ 1");
    Ok(())
}

fn phase_roots() -> Outcome {
    let ph = Hyperfield::phase();
    let cubic = poly(&ph, "T^3-e^{i pi/8}T^2+e^{i 5pi/24}T-e^{i pi/3}");
    let q = poly(&ph, "T^2-e^{i pi/12}T+e^{i pi/6}");
    let a12 = Element::phase(rat(1, 12));
    let a6 = Element::phase(rat(1, 6));
    ensure!(!cubic.eval(&a12).unwrap().contains(&ph.zero()), "0 ∈ p(ph(1/12))");
    ensure!(!is_root(&cubic, &a12).unwrap(), "ph(1/12) reported as a root");
    ensure!(quotients(&cubic, &a6).unwrap().admits(&q), "q not among the quotients");
    // oracle: the cubic lies in the box (T - ph(1/6)) ⊡ q, and q in (T - ph(1/12)) ⊡ (T - ph(1/12))
    let lin6 = Polynomial::linear_root(&ph, &a6).unwrap();
    let lin12 = Polynomial::linear_root(&ph, &a12).unwrap();
    ensure!(boxprod(&lin6, &q).unwrap().contains(&cubic), "cubic ∉ (T - ph(1/6)) ⊡ q");
    ensure!(boxprod(&lin12, &lin12).unwrap().contains(&q), "q ∉ (T - ph(1/12))^2");
    let m = mult_at(&q, &a12).unwrap();
    ensure!(m == 2, "mult_at = {m}");
    Ok(())
}

fn weak_signs_bracketings() -> Outcome {
    let f = SignField::W;
    let w = f.hf();
    let target = signs_vec("T^3-1", f);
    let yes_set = f.right_nested(&signs_vec("T-1", f), &signs_vec("T+1", f), &signs_vec("T+1", f));
    let no_set = f.right_nested(&signs_vec("T+1", f), &signs_vec("T-1", f), &signs_vec("T+1", f));
    ensure!(yes_set.contains(&target) && !no_set.contains(&target), "oracle disagrees with the example");
    ensure!(!f.eval(&target, -1).contains(&0), "oracle: -1 is a root of T^3-1");
    let p = poly(&w, "T^3-1");
    let yes = expr_member(&p, &parse_expr("(T-1)*((T+1)*(T+1))", &w).unwrap()).unwrap();
    let no = expr_member(&p, &parse_expr("(T+1)*((T-1)*(T+1))", &w).unwrap()).unwrap();
    ensure!(yes.verdict == Verdict::Yes && verify_yes(&yes), "YES side failed");
    ensure!(no.verdict == Verdict::No && verify_no(&no), "NO side failed");
    let obstruction = no.reasons.iter().any(|r| {
        matches!(r, NoReason::RootObstruction { root, value, .. } if w.format_element(root) == "-1" && !value.contains(&w.zero()))
    });
    ensure!(obstruction, "NO is not certified by the root at -1");
    Ok(())
}

fn signs_bracketings() -> Outcome {
    let f = SignField::S;
    let s = f.hf();
    let target = signs_vec("T^3+T^2+T+1", f);
    let left = f.right_nested(&signs_vec("T+1", f), &signs_vec("T-1", f), &signs_vec("T-1", f));
    let right = f.right_nested(&signs_vec("T-1", f), &signs_vec("T+1", f), &signs_vec("T-1", f));
    ensure!(left.contains(&target), "oracle: target not in the left bracketing");
    ensure!(left != right, "oracle: bracketings coincide");
    ensure!(f.eval(&target, 1) == BTreeSet::from([1]), "oracle: p(1) ≠ {{1}}");
    let yes = expr_member(&poly(&s, "T^3+T^2+T+1"), &parse_expr("(T+1)*((T-1)*(T-1))", &s).unwrap()).unwrap();
    ensure!(yes.verdict == Verdict::Yes && verify_yes(&yes), "membership not confirmed");
    ensure!(poly(&s, "T^3+T^2+T+1").eval(&s.one()).unwrap() == s.singleton(&s.one()), "p(1) ≠ {{1}}");
    let eq = expr_equal(&parse_expr("(T+1)*((T-1)*(T-1))", &s).unwrap(), &parse_expr("(T-1)*((T+1)*(T-1))", &s).unwrap()).unwrap();
    ensure!(eq.verdict == EqualityVerdict::Unequal, "bracketings reported equal");
    let wit = eq.witness.ok_or("no witness")?;
    let wv = f.signs_of(&wit.polynomial);
    ensure!(left.contains(&wv) != right.contains(&wv), "oracle rejects witness {}", wit.polynomial);
    Ok(())
}

fn krasner_bracketings() -> Outcome {
    let f = SignField::K;
    let k = f.hf();
    let (p, q) = (signs_vec("T+1", f), signs_vec("T^2+1", f));
    let left = f.right_nested(&p, &q, &p);
    let right = f.right_nested(&q, &p, &p);
    let eq = expr_equal(&parse_expr("(T+1)*((T^2+1)*(T+1))", &k).unwrap(), &parse_expr("(T^2+1)*((T+1)*(T+1))", &k).unwrap()).unwrap();
    ensure!(eq.verdict == EqualityVerdict::Unequal, "bracketings reported equal");
    let wit = eq.witness.ok_or("no witness")?;
    let wv = f.signs_of(&wit.polynomial);
    ensure!(left.contains(&wv) == wit.in_left && right.contains(&wv) != wit.in_left, "oracle rejects witness {}", wit.polynomial);
    let scan = assoc_scan(&k, 2, true).unwrap();
    ensure!(!scan.counterexamples.is_empty(), "scan found nothing");
    for c in &scan.counterexamples {
        let [a, b, d] = c.triple.clone().map(|t| signs_vec(&t, f));
        let lhs = f.right_nested(&a, &b, &d);
        let rhs: BTreeSet<Vec<i8>> = f.prod(&a, &b).iter().flat_map(|m| f.prod(m, &d)).collect();
        ensure!(lhs != rhs, "oracle: {:?} is associative", c.triple);
    }
    Ok(())
}

fn one_plus_one() -> Outcome {
    let expected = [
        ("K", "{0,1}", false),
        ("S", "{1}", true),
        ("W", "{1,-1}", false),
        ("W(Z3,0)", "{0,g0,g1,g2}", false),
        ("T", "[-inf,0]", false),
        ("V", "[0,2]", false),
        ("P", "{1}", true),
        ("GF(2)", "{0}", true),
        ("GF(3)", "{2}", true),
        ("GF(5)", "{2}", true),
    ];
    let hfs = builtin_hyperfields().unwrap();
    ensure!(hfs.len() == expected.len(), "{} built-in hyperfields", hfs.len());
    for (hf, (name, set, singleton)) in hfs.iter().zip(expected) {
        ensure!(hf.name() == name, "unexpected hyperfield {}", hf.name());
        let c = one_plus_one_criterion(hf).map_err(|e| format!("{name}: {e}"))?;
        let want = hf.parse_set(set).unwrap();
        ensure!(hf.parse_set(&c.one_plus_one).unwrap() == want, "{name}: 1 ⊞ 1 = {}", c.one_plus_one);
        ensure!(c.singleton == singleton, "{name}: singleton = {}", c.singleton);
        if singleton {
            continue;
        }
        let w = c.witness.as_ref().ok_or(format!("{name}: no witness"))?;
        let p = poly(hf, &w.polynomial);
        let d1 = hf.parse_element(c.d1.as_deref().ok_or("no d1")?).unwrap();
        let d2 = hf.parse_element(c.d2.as_deref().ok_or("no d2")?).unwrap();
        ensure!(p.degree() == 4 && p.coeff(0) == hf.one() && p.coeff(4) == hf.one(), "{name}: witness {p}");
        ensure!(p.coeff(3) == d1 && p.coeff(1) == d2 && d1 != d2, "{name}: d1, d2 misplaced in {p}");
        ensure!(want.contains(&d1) && want.contains(&d2), "{name}: d1, d2 outside 1 ⊞ 1");
        ensure!(c.replay(hf).unwrap(), "{name}: certificate does not replay");
        if let Some(f) = [SignField::K, SignField::W].into_iter().find(|f| f.name() == name) {
            let (lin, quad) = (signs_vec("T+1", f), signs_vec("T^2+1", f));
            let pv = f.signs_of(&p);
            ensure!(f.right_nested(&lin, &quad, &lin).contains(&pv), "{name}: oracle excludes witness");
            ensure!(!f.right_nested(&quad, &lin, &lin).contains(&pv), "{name}: oracle includes witness");
        }
    }
    Ok(())
}

fn random_trop_roots(rng: &mut StdRng, n: usize) -> Vec<Trop> {
    let mut out: Vec<Trop> = Vec::with_capacity(n);
    for _ in 0..n {
        if !out.is_empty() && rng.gen_bool(0.3) {
            let i = rng.gen_range(0..out.len());
            out.push(out[i]);
        } else if rng.gen_bool(0.08) {
            out.push(None);
        } else {
            out.push(Some(rng.gen_range(-9..=9)));
        }
    }
    out
}

fn tropical_linear_products() -> Outcome {
    let t = Hyperfield::tropical();
    let mut rng = StdRng::seed_from_u64(0xacce97);
    for (count, n) in [(100, 3), (50, 4)] {
        for _ in 0..count {
            let roots = random_trop_roots(&mut rng, n);
            let els: Vec<Element> = roots.iter().copied().map(trop_element).collect();
            let b = linear_product_box(&els).unwrap();
            let got: Vec<String> = b.coeffs().iter().map(|s| t.format_set(s)).collect();
            let want = trop_linear_box(&roots);
            let same = got.iter().zip(&want).all(|(g, w)| t.parse_set(g).unwrap() == t.parse_set(w).unwrap());
            ensure!(same, "{roots:?}: box {got:?}, oracle {want:?}");
            let cert = box_equivalence(&els, 6).unwrap();
            ensure!(cert.equal && cert.reverse_checked > 0, "{roots:?}: {:?}", cert.failures);
            let mut shuffled = els.clone();
            for i in (1..shuffled.len()).rev() {
                shuffled.swap(i, rng.gen_range(0..=i));
            }
            ensure!(linear_product_box(&shuffled).unwrap() == b, "{roots:?}: box depends on order");
        }
    }
    Ok(())
}

fn tropical_round_trip() -> Outcome {
    let t = Hyperfield::tropical();
    let mut rng = StdRng::seed_from_u64(0x707);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let roots = random_trop_roots(&mut rng, n);
        // a member of the oracle box: tied coefficients drop below the top or to -inf
        let want = trop_linear_box(&roots);
        let coeffs: Vec<Element> = want
            .iter()
            .map(|label| {
                let set = t.parse_set(label).unwrap();
                let top = set.representatives().into_iter().next().unwrap();
                if set.as_singleton().is_some() {
                    return top;
                }
                let Element::Trop(hyperpoly::carriers::ExtRat::Fin(x)) = &top else { return top };
                match rng.gen_range(0..3) {
                    0 => top.clone(),
                    1 => Element::neg_inf(),
                    _ => Element::trop_rat(x - int(rng.gen_range(1..=5))),
                }
            })
            .collect();
        let p = Polynomial::new(&t, coeffs).unwrap();
        ensure!(linear_product_box(&roots.iter().copied().map(trop_element).collect::<Vec<_>>()).unwrap().contains(&p), "{p} outside its box");
        let mut sorted = roots.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        let expect: Vec<Element> = sorted.iter().copied().map(trop_element).collect();
        let found = root_multiset(&p).map_err(|e| format!("{p}: {e}"))?;
        ensure!(found.elements() == expect, "{p}: roots {:?}, expected {sorted:?}", found.roots);
        for r in &sorted {
            let count = sorted.iter().filter(|x| *x == r).count();
            let m = mult_at(&p, &trop_element(*r)).unwrap();
            ensure!(m == count, "{p}: mult at {r:?} is {m}, expected {count}");
        }
    }
    Ok(())
}

fn tropical_reducibility() -> Outcome {
    let t = Hyperfield::tropical();
    let p = poly(&t, "0T^2+2");
    let irr = is_reducible(&p, 4).unwrap();
    ensure!(irr.verdict == Reducibility::Irreducible, "0T^2+2: {:?}", irr.verdict);
    ensure!(irr.trace.iter().any(|l| l.ends_with("so q_0 = -inf")), "missing forced q_0 line: {:?}", irr.trace);
    ensure!(irr.trace.iter().any(|l| l.ends_with("so r_0 = -inf")), "missing forced r_0 line: {:?}", irr.trace);
    ensure!(irr.trace.iter().any(|l| l.contains("must be 2")), "missing contradiction: {:?}", irr.trace);
    // oracle: no pair of linear factors on a grid multiplies to exactly {p}
    let grid: Vec<Trop> = std::iter::once(None).chain((-8..=8).map(Some)).collect();
    for &a in &grid {
        for &b in &grid {
            let bx = trop_linear_box(&[a, b]);
            ensure!(bx != ["{2}", "{-inf}", "{0}"], "grid factorization {a:?}, {b:?}");
        }
    }
    let q = poly(&t, "0T^2+5T+5");
    let red = is_reducible(&q, 4).unwrap();
    ensure!(red.verdict == Reducibility::Reducible, "0T^2+5T+5: {:?}", red.verdict);
    let (f, g) = red.factors.ok_or("no factors")?;
    let prod = boxprod(&poly(&t, &f), &poly(&t, &g)).unwrap();
    ensure!(prod.as_singleton() == Some(q.clone()), "{f} ⊡ {g} = {}", prod.label());
    ensure!(trop_linear_box(&[Some(5), Some(0)]) == ["{5}", "{5}", "{0}"], "oracle box of (5, 0)");
    Ok(())
}

fn multiplicities() -> Outcome {
    let f = SignField::S;
    let s = f.hf();
    let p = poly(&s, "T^3-T");
    let m = mult_at(&p, &s.zero()).unwrap();
    ensure!(m == 1, "mult_0(T^3-T) = {m}");
    // oracle: T^3-T ∈ T ⊡ (T^2-1) and 0 ∉ (T^2-1)(0)
    ensure!(f.prod(&[0, 1], &[-1, 0, 1]).contains(&vec![0, -1, 0, 1]), "oracle: T^3-T ∉ T ⊡ (T^2-1)");
    ensure!(!f.eval(&[-1, 0, 1], 0).contains(&0), "oracle: 0 is a root of T^2-1");
    let v = Hyperfield::viro();
    let q = poly(&v, "T^2+3T+1");
    let region = v.parse_set("[1,inf)").unwrap();
    let ms = mult_set(&q, &region).unwrap();
    ensure!(ms.multiplicity == 1 && ms.exact, "mult over [1,inf) = {} (exact {})", ms.multiplicity, ms.exact);
    // oracle: 0 ∈ a^2 ⊞ 3a ⊞ 1 iff no term exceeds the sum of the other two; each such root is simple
    for k in 4..=20 {
        let a = rat(k, 4);
        let terms = [&a * &a, int(3) * &a, int(1)];
        let total: num::BigRational = terms.iter().sum();
        let root = terms.iter().all(|t| int(2) * t <= total);
        let e = Element::viro(a.clone());
        ensure!(is_root(&q, &e).unwrap() == root, "is_root at {a}");
        if root {
            ensure!(mult_at(&q, &e).unwrap() == 1, "mult at {a}");
        }
    }
    Ok(())
}

fn pointwise() -> Outcome {
    let f = SignField::S;
    let s = f.hf();
    let (p, q, r) = (poly(&s, "T+1"), poly(&s, "T-1"), poly(&s, "T-1"));
    let rep = pointwise_products_equal(&p, &q, &r, None).unwrap();
    ensure!(rep.all_equal && rep.rows.len() == 3, "library: {:?}", rep.rows);
    let mul = |a: &BTreeSet<i8>, b: &BTreeSet<i8>| -> BTreeSet<i8> { a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect() };
    for a in [-1, 0, 1] {
        let (pa, qa, ra) = (f.eval(&[1, 1], a), f.eval(&[-1, 1], a), f.eval(&[-1, 1], a));
        let forms = [mul(&pa, &mul(&qa, &ra)), mul(&mul(&pa, &qa), &ra), mul(&mul(&pa, &ra), &qa)];
        ensure!(forms[0] == forms[1] && forms[1] == forms[2], "oracle differs at {a}: {forms:?}");
    }
    Ok(())
}

const CRITERIA: [(&str, Check); 14] = [
    ("axioms", axioms),
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

fn main() -> ExitCode {
    let mut failed = 0;
    for (i, (title, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS {:>2} {title} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {title} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
