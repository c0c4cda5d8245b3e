//! Test-side oracles written from the definitions, independent of the library's
//! table and solver code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperpoly::carriers::{Element, Hyperfield};
use hyperpoly::polyalg::Polynomial;

/// Sign-valued hyperfields with carrier {-1, 0, 1} (Krasner uses {0, 1}).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignField {
    K,
    S,
    W,
}

impl SignField {
    pub fn name(self) -> &'static str {
        match self {
            SignField::K => "K",
            SignField::S => "S",
            SignField::W => "W",
        }
    }

    pub fn hf(self) -> Hyperfield {
        Hyperfield::by_name(self.name()).unwrap()
    }

    pub fn elements(self) -> Vec<i8> {
        match self {
            SignField::K => vec![0, 1],
            _ => vec![-1, 0, 1],
        }
    }

    /// Negation; Krasner's is the identity.
    pub fn neg(self, x: i8) -> i8 {
        if self == SignField::K {
            x
        } else {
            -x
        }
    }

    pub fn add(self, x: i8, y: i8) -> BTreeSet<i8> {
        if x == 0 {
            return [y].into();
        }
        if y == 0 {
            return [x].into();
        }
        match self {
            SignField::K => [0, 1].into(),
            SignField::S if x == y => [x].into(),
            SignField::W if x == y => [-1, 1].into(),
            _ => [-1, 0, 1].into(),
        }
    }

    pub fn add_sets(self, a: &BTreeSet<i8>, b: &BTreeSet<i8>) -> BTreeSet<i8> {
        a.iter().flat_map(|&x| b.iter().flat_map(move |&y| self.add(x, y))).collect()
    }

    pub fn sum(self, xs: &[i8]) -> BTreeSet<i8> {
        xs.iter().fold(BTreeSet::from([0]), |acc, &x| self.add_sets(&acc, &[x].into()))
    }

    /// All coefficient vectors (T^0 first, trimmed, nonzero) of `p ⊡ q`.
    pub fn prod(self, p: &[i8], q: &[i8]) -> BTreeSet<Vec<i8>> {
        let n = p.len() + q.len() - 1;
        let mut choices: Vec<Vec<i8>> = Vec::with_capacity(n);
        for i in 0..n {
            let terms: Vec<i8> = (0..p.len())
                .filter(|&k| i >= k && i - k < q.len())
                .map(|k| p[k] * q[i - k])
                .collect();
            choices.push(self.sum(&terms).into_iter().collect());
        }
        let mut out = BTreeSet::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(choices: &[Vec<i8>], cur: &mut Vec<i8>, out: &mut BTreeSet<Vec<i8>>) {
            if cur.len() == choices.len() {
                let mut v = cur.clone();
                while v.last() == Some(&0) {
                    v.pop();
                }
                if !v.is_empty() {
                    out.insert(v);
                }
                return;
            }
            for &c in &choices[cur.len()] {
                cur.push(c);
                rec(choices, cur, out);
                cur.pop();
            }
        }
        rec(&choices, &mut cur, &mut out);
        out
    }

    /// `p ⊡ (q ⊡ r)` as the union over the inner product.
    pub fn right_nested(self, p: &[i8], q: &[i8], r: &[i8]) -> BTreeSet<Vec<i8>> {
        self.prod(q, r).iter().flat_map(|m| self.prod(p, m)).collect()
    }

    pub fn eval(self, p: &[i8], a: i8) -> BTreeSet<i8> {
        let terms: Vec<i8> = p.iter().enumerate().map(|(i, &c)| c * a.pow(i as u32)).collect();
        self.sum(&terms)
    }

    pub fn element(self, x: i8) -> Element {
        self.hf().parse_element(&x.to_string()).unwrap()
    }

    pub fn to_poly(self, v: &[i8]) -> Polynomial {
        let hf = self.hf();
        let coeffs = v.iter().map(|c| hf.parse_element(&c.to_string()).unwrap()).collect();
        Polynomial::new(&hf, coeffs).unwrap()
    }

    pub fn signs_of(self, p: &Polynomial) -> Vec<i8> {
        let hf = p.hf();
        p.coeffs().iter().map(|c| sign_of(&hf.format_element(c))).collect()
    }

    pub fn sign_of_element(self, e: &Element) -> i8 {
        sign_of(&self.hf().format_element(e))
    }
}

fn sign_of(s: &str) -> i8 {
    match s {
        "0" => 0,
        "1" => 1,
        "-1" => -1,
        other => panic!("not a sign: {other}"),
    }
}

/// Tropical value: `None` is -inf.
pub type Trop = Option<i64>;

/// Box of a product of tropical linear factors from the sorted-roots rule:
/// the `T^{n-s}` coefficient is the sum of the `s` largest roots, and it is
/// the interval `[-inf, sum]` exactly when the `s`-th and `(s+1)`-th largest tie
/// at a finite value.
pub fn trop_linear_box(roots: &[Trop]) -> Vec<String> {
    let mut sorted = roots.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let n = sorted.len();
    let mut coeffs = vec![String::new(); n + 1];
    for s in 0..=n {
        let sum = sorted[..s].iter().try_fold(0i64, |acc, r| r.map(|x| acc + x));
        let tied = s > 0 && s < n && sorted[s - 1] == sorted[s] && sorted[s].is_some();
        let label = match sum {
            None => "{-inf}".to_string(),
            Some(x) if tied => format!("[-inf,{x}]"),
            Some(x) => format!("{{{x}}}"),
        };
        coeffs[n - s] = label;
    }
    coeffs
}

pub fn trop_element(t: Trop) -> Element {
    match t {
        None => Element::neg_inf(),
        Some(x) => Element::trop(x),
    }
}
