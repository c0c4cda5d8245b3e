use crate::carriers::{Element, ElementSet, Hyperfield};
use crate::error::{Error, Result};

use super::poly::Polynomial;

/// All polynomials whose `T^i` coefficient lies in `coeffs[i]`, read after
/// trimming zero leading coefficients. The all-zero choice is never a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBox {
    hf: Hyperfield,
    coeffs: Vec<ElementSet>,
}

pub(crate) fn same_hf(a: &Hyperfield, b: &Hyperfield) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::HyperfieldMismatch(a.name(), b.name()))
    }
}

impl PolyBox {
    pub fn new(hf: &Hyperfield, coeffs: Vec<ElementSet>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty("box with no coefficients"));
        }
        if coeffs.iter().any(ElementSet::is_empty) {
            return Err(Error::Empty("box with an empty coefficient set"));
        }
        Ok(PolyBox { hf: hf.clone(), coeffs })
    }

    pub fn from_poly(p: &Polynomial) -> Self {
        PolyBox { hf: p.hf().clone(), coeffs: p.coeffs().iter().map(ElementSet::singleton).collect() }
    }

    pub fn hf(&self) -> &Hyperfield {
        &self.hf
    }

    pub fn coeffs(&self) -> &[ElementSet] {
        &self.coeffs
    }

    pub fn nominal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.hf() == &self.hf
            && p.degree() <= self.nominal_degree()
            && self.coeffs.iter().enumerate().all(|(i, s)| s.contains(&p.coeff(i)))
    }

    /// True when every coefficient set admits zero, so that trimming had to
    /// exclude the all-zero selection.
    pub fn excludes_zero_selection(&self) -> bool {
        let z = self.hf.zero();
        self.coeffs.iter().all(|s| s.contains(&z))
    }

    /// The single member, when every coefficient set is a singleton.
    pub fn as_singleton(&self) -> Option<Polynomial> {
        let coeffs: Option<Vec<Element>> = self.coeffs.iter().map(ElementSet::as_singleton).collect();
        Polynomial::new(&self.hf, coeffs?).ok()
    }

    /// Sorted members of a box over a finite carrier.
    pub fn enumerate(&self) -> Result<Vec<Polynomial>> {
        let choices: Vec<Vec<Element>> = self
            .coeffs
            .iter()
            .map(|s| s.members().filter(|_| s.is_finite_kind()).ok_or(Error::NotFinite("enumerating a box")))
            .collect::<Result<_>>()?;
        let mut out: Vec<Polynomial> = cartesian(&choices).into_iter().filter_map(|c| Polynomial::new(&self.hf, c).ok()).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Members built from representative coefficient values, fewest zero
    /// coefficients first. Exhaustive on finite carriers.
    pub fn representative_members(&self, limit: usize) -> Vec<Polynomial> {
        let choices: Vec<Vec<Element>> = self.coeffs.iter().map(ElementSet::representatives).collect();
        let mut out: Vec<Polynomial> = cartesian(&choices).into_iter().filter_map(|c| Polynomial::new(&self.hf, c).ok()).collect();
        let zero = self.hf.zero();
        out.sort_by_key(|p| p.coeffs().iter().filter(|c| **c == zero).count() + (self.nominal_degree() - p.degree()));
        out.dedup();
        out.truncate(limit);
        out
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|s| self.hf.format_set(s)).collect();
        format!("[ {} ]", parts.join(", "))
    }
}

/// Cartesian product; index 0 varies fastest, the last index slowest.
pub fn cartesian(choices: &[Vec<Element>]) -> Vec<Vec<Element>> {
    if choices.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        out.push(idx.iter().zip(choices).map(|(&i, opts)| opts[i].clone()).collect());
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `p ⊡ q`: coefficient `i` is the hypersum of `c_k d_l` over `k + l = i`.
pub fn boxprod(p: &Polynomial, q: &Polynomial) -> Result<PolyBox> {
    same_hf(p.hf(), q.hf())?;
    let hf = p.hf();
    let n = p.degree() + q.degree();
    let coeffs = (0..=n)
        .map(|i| {
            let terms: Vec<Element> = (0..=i)
                .filter(|k| *k <= p.degree() && i - k <= q.degree())
                .map(|k| hf.mul_unchecked(&p.coeffs()[k], &q.coeffs()[i - k]))
                .collect();
            hf.hypersum(&terms)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyBox::new(hf, coeffs)
}

/// `p ⊞ q`: coefficient `i` is `c_i ⊞ d_i`, at nominal degree `max(m, n)`.
pub fn boxsum(p: &Polynomial, q: &Polynomial) -> Result<PolyBox> {
    same_hf(p.hf(), q.hf())?;
    let hf = p.hf();
    let n = p.degree().max(q.degree());
    let coeffs = (0..=n).map(|i| hf.hyperadd(&p.coeff(i), &q.coeff(i))).collect::<Result<Vec<_>>>()?;
    PolyBox::new(hf, coeffs)
}
