//! Axiom and double-distributivity checks.
//!
//! On finite carriers the exhaustive probe is a decision procedure. On
//! infinite carriers a probe grid can only falsify.

use serde::{Deserialize, Serialize};

use super::element::{rat, Element, Rat};
use super::hyperfield::Hyperfield;
use super::set::ElementSet;

/// Which elements an axiom check quantifies over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProbeSpec {
    /// Every element; finite carriers only.
    Exhaustive,
    Grid(Vec<Element>),
    /// Exhaustive on finite carriers, the built-in grid otherwise.
    Default,
}

/// Built-in falsification grid of an infinite carrier.
pub fn default_grid(hf: &Hyperfield) -> Vec<Element> {
    if let Some(all) = hf.elements() {
        return all;
    }
    let r = |n: i64, d: i64| -> Rat { rat(n, d) };
    match hf.name().as_str() {
        "T" => {
            let mut g = vec![Element::neg_inf()];
            g.extend([r(-2, 1), r(-1, 1), r(0, 1), r(1, 2), r(1, 1), r(3, 1)].map(Element::trop_rat));
            g
        }
        "V" => [r(0, 1), r(1, 2), r(1, 1), r(2, 1), r(3, 1)].map(Element::Viro).to_vec(),
        _ => {
            let mut g = vec![hf.zero()];
            g.extend([r(0, 1), r(1, 2), r(1, 1), r(3, 2), r(1, 3), r(5, 4)].map(Element::phase));
            g
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub holds: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub hyperfield: String,
    /// True when the probe covered the whole carrier, making the report a decision.
    pub exhaustive: bool,
    pub probe_size: usize,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }
}

fn probe_elements(hf: &Hyperfield, probe: &ProbeSpec) -> (Vec<Element>, bool) {
    match probe {
        ProbeSpec::Exhaustive | ProbeSpec::Default => match hf.elements() {
            Some(all) => (all, true),
            None => (default_grid(hf), false),
        },
        ProbeSpec::Grid(g) => (g.iter().filter(|e| hf.owns(e)).cloned().collect(), false),
    }
}

struct Checker<'a> {
    hf: &'a Hyperfield,
    results: Vec<AxiomResult>,
}

impl Checker<'_> {
    fn record<I, F>(&mut self, axiom: &str, cases: I, mut fails: F)
    where
        I: IntoIterator<Item = Vec<Element>>,
        F: FnMut(&[Element]) -> bool,
    {
        let mut counterexample = None;
        for case in cases {
            if fails(&case) {
                let labels: Vec<String> = case.iter().map(|e| self.hf.format_element(e)).collect();
                counterexample = Some(format!("({})", labels.join(", ")));
                break;
            }
        }
        self.results.push(AxiomResult { axiom: axiom.into(), holds: counterexample.is_none(), counterexample });
    }
}

fn tuples(g: &[Element], k: usize) -> Vec<Vec<Element>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                g.iter().map(move |e| {
                    let mut t = t.clone();
                    t.push(e.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// Checks the hyperfield axioms on the probe.
pub fn check_axioms(hf: &Hyperfield, probe: &ProbeSpec) -> AxiomReport {
    let (g, exhaustive) = probe_elements(hf, probe);
    let zero = hf.zero();
    let one = hf.one();
    let add = |x: &Element, y: &Element| hf.hyperadd_unchecked(x, y);
    let single = ElementSet::singleton;
    let mut c = Checker { hf, results: Vec::new() };

    c.record("zero differs from one", [vec![zero.clone(), one.clone()]], |_| zero == one);
    c.record("hyperaddition is commutative", tuples(&g, 2), |t| add(&t[0], &t[1]) != add(&t[1], &t[0]));
    c.record("hyperaddition is associative", tuples(&g, 3), |t| {
        let left = hf.set_hyperadd_unchecked(&add(&t[0], &t[1]), &single(&t[2]));
        let right = hf.set_hyperadd_unchecked(&single(&t[0]), &add(&t[1], &t[2]));
        left != right
    });
    c.record("zero is the additive identity", tuples(&g, 1), |t| add(&zero, &t[0]) != single(&t[0]));
    c.record("hyperinverses exist and are unique", tuples(&g, 1), |t| {
        let n = hf.neg(&t[0]).expect("own element");
        let witnesses = g.iter().filter(|y| add(&t[0], y).contains(&zero)).count();
        let expected = usize::from(g.contains(&n));
        !add(&t[0], &n).contains(&zero) || witnesses != expected
    });
    c.record("reversibility", tuples(&g, 3), |t| {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        let ny = hf.neg(y).expect("own element");
        add(y, z).contains(x) != add(x, &ny).contains(z)
    });
    c.record("multiplication is commutative", tuples(&g, 2), |t| {
        hf.mul_unchecked(&t[0], &t[1]) != hf.mul_unchecked(&t[1], &t[0])
    });
    c.record("multiplication is associative", tuples(&g, 3), |t| {
        hf.mul_unchecked(&hf.mul_unchecked(&t[0], &t[1]), &t[2]) != hf.mul_unchecked(&t[0], &hf.mul_unchecked(&t[1], &t[2]))
    });
    c.record("one is the multiplicative identity", tuples(&g, 1), |t| hf.mul_unchecked(&one, &t[0]) != t[0]);
    c.record("zero is absorbing", tuples(&g, 1), |t| hf.mul_unchecked(&zero, &t[0]) != zero);
    c.record("nonzero elements are invertible", tuples(&g, 1), |t| {
        !hf.is_zero(&t[0]) && hf.inv(&t[0]).map(|i| hf.mul_unchecked(&i, &t[0]) != one).unwrap_or(true)
    });
    c.record("distributivity", tuples(&g, 3), |t| {
        let (a, x, y) = (&t[0], &t[1], &t[2]);
        let left = hf.scale_set(a, &add(x, y));
        let right = add(&hf.mul_unchecked(a, x), &hf.mul_unchecked(a, y));
        left != right
    });
    c.record("negation commutes with multiplication", tuples(&g, 2), |t| {
        let n = hf.neg(&hf.mul_unchecked(&t[0], &t[1])).expect("own element");
        n != hf.mul_unchecked(&hf.neg(&t[0]).expect("own element"), &t[1])
    });

    AxiomReport { hyperfield: hf.name(), exhaustive, probe_size: g.len(), results: c.results }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributivityCounterexample {
    pub quadruple: [String; 4],
    pub product_of_sums: String,
    pub sum_of_products: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributivityReport {
    pub hyperfield: String,
    pub exhaustive: bool,
    pub holds: bool,
    pub quadruples_checked: usize,
    pub counterexample: Option<DistributivityCounterexample>,
}

/// Compares `(a⊞b)(c⊞d)` with `ac⊞ad⊞bc⊞bd` on every probed quadruple.
pub fn is_doubly_distributive(hf: &Hyperfield, probe: &ProbeSpec) -> DistributivityReport {
    let (g, exhaustive) = probe_elements(hf, probe);
    let mut checked = 0;
    for t in tuples(&g, 4) {
        checked += 1;
        let (a, b, c, d) = (&t[0], &t[1], &t[2], &t[3]);
        let lhs = hf.set_mul(&hf.hyperadd_unchecked(a, b), &hf.hyperadd_unchecked(c, d));
        let terms = [hf.mul_unchecked(a, c), hf.mul_unchecked(a, d), hf.mul_unchecked(b, c), hf.mul_unchecked(b, d)];
        let rhs = hf.hypersum(&terms).expect("nonempty");
        if lhs != rhs {
            let f = |e: &Element| hf.format_element(e);
            return DistributivityReport {
                hyperfield: hf.name(),
                exhaustive,
                holds: false,
                quadruples_checked: checked,
                counterexample: Some(DistributivityCounterexample {
                    quadruple: [f(a), f(b), f(c), f(d)],
                    product_of_sums: hf.format_set(&lhs),
                    sum_of_products: hf.format_set(&rhs),
                }),
            };
        }
    }
    DistributivityReport { hyperfield: hf.name(), exhaustive, holds: true, quadruples_checked: checked, counterexample: None }
}
