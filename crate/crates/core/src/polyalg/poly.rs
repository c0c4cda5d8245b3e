use std::cmp::Ordering;
use std::fmt;

use crate::carriers::{Element, ElementSet, Hyperfield};
use crate::error::{Error, Result};

/// A univariate polynomial `c_0 + c_1 T + ... + c_n T^n` with `c_n ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    hf: Hyperfield,
    coeffs: Vec<Element>,
}

impl Polynomial {
    /// Builds a polynomial from `c_0..c_n`, trimming zero leading coefficients.
    pub fn new(hf: &Hyperfield, coeffs: Vec<Element>) -> Result<Self> {
        for c in &coeffs {
            hf.check(c)?;
        }
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| hf.is_zero(c)) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroLeading);
        }
        Ok(Polynomial { hf: hf.clone(), coeffs })
    }

    pub fn constant(hf: &Hyperfield, c: Element) -> Result<Self> {
        Polynomial::new(hf, vec![c])
    }

    pub fn one(hf: &Hyperfield) -> Self {
        Polynomial { hf: hf.clone(), coeffs: vec![hf.one()] }
    }

    /// `T - a`.
    pub fn linear_root(hf: &Hyperfield, a: &Element) -> Result<Self> {
        Polynomial::new(hf, vec![hf.neg(a)?, hf.one()])
    }

    pub fn hf(&self) -> &Hyperfield {
        &self.hf
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Coefficient of `T^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.hf.zero())
    }

    pub fn leading(&self) -> &Element {
        self.coeffs.last().expect("nonempty")
    }

    pub fn is_monic(&self) -> bool {
        *self.leading() == self.hf.one()
    }

    /// `p(a) = c_n a^n ⊞ ... ⊞ c_0`, an exact hypersum.
    pub fn eval(&self, a: &Element) -> Result<ElementSet> {
        self.hf.check(a)?;
        let terms: Vec<Element> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| self.hf.mul_unchecked(c, &self.hf.pow(a, i)))
            .collect();
        self.hf.hypersum(&terms)
    }

    pub fn is_root(&self, a: &Element) -> Result<bool> {
        Ok(self.eval(a)?.contains(&self.hf.zero()))
    }

    /// `a ⊡ p`, coefficientwise; `a` must be nonzero.
    pub fn scalar_prod(&self, a: &Element) -> Result<Self> {
        self.hf.check(a)?;
        if self.hf.is_zero(a) {
            return Err(Error::ZeroScalar);
        }
        Ok(Polynomial { hf: self.hf.clone(), coeffs: self.coeffs.iter().map(|c| self.hf.mul_unchecked(a, c)).collect() })
    }

    /// `(c_n, p_0)` with `p_0` monic and `c_n ⊡ p_0 = p`.
    pub fn monic_decompose(&self) -> (Element, Polynomial) {
        let lead = self.leading().clone();
        let inv = self.hf.inv(&lead).expect("leading coefficient is nonzero");
        (lead, self.scalar_prod(&inv).expect("nonzero scalar"))
    }

    /// `T^n ⊡ p`, a pure coefficient shift.
    pub fn shift(&self, n: usize) -> Self {
        let mut coeffs = vec![self.hf.zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { hf: self.hf.clone(), coeffs }
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the leading one down.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carriers::{int, rat};
    use crate::polyalg::parse::parse_poly;

    #[test]
    fn trimming_and_zero_polynomial() {
        let t = Hyperfield::tropical();
        let p = Polynomial::new(&t, vec![Element::trop(1), Element::neg_inf()]).unwrap();
        assert_eq!(p.degree(), 0);
        assert_eq!(Polynomial::new(&t, vec![Element::neg_inf()]), Err(Error::ZeroLeading));
    }

    #[test]
    fn tropical_evaluation() {
        let t = Hyperfield::tropical();
        let p = parse_poly("1T^3+(-2)", &t).unwrap();
        assert_eq!(t.format_set(&p.eval(&Element::trop(-2)).unwrap()), "{-2}");
        assert_eq!(t.format_set(&p.eval(&Element::trop(-1)).unwrap()), "[-inf,-2]");
        assert_eq!(t.format_set(&p.eval(&Element::trop(0)).unwrap()), "{1}");
    }

    #[test]
    fn monic_decomposition() {
        let t = Hyperfield::tropical();
        let p = parse_poly("2T^2+3T+1", &t).unwrap();
        let (c, p0) = p.monic_decompose();
        assert_eq!(c, Element::trop(2));
        assert_eq!(p0, parse_poly("0T^2+1T+(-1)", &t).unwrap());
        let s = Hyperfield::signs();
        let (c, p0) = parse_poly("-T^2+T", &s).unwrap().monic_decompose();
        assert_eq!(s.format_element(&c), "-1");
        assert_eq!(p0, parse_poly("T^2-T", &s).unwrap());
    }

    #[test]
    fn phase_cubic_misses_zero() {
        let p = Hyperfield::phase();
        let cubic = parse_poly("T^3-e^{i pi/8}T^2+e^{i 5pi/24}T-e^{i pi/3}", &p).unwrap();
        assert!(!cubic.is_root(&Element::phase(rat(1, 12))).unwrap());
        assert!(cubic.is_root(&Element::phase(rat(1, 6))).unwrap());
        assert_eq!(cubic.coeff(0), Element::phase(rat(4, 3)));
        assert_eq!(cubic.coeff(3), Element::phase(int(0)));
    }
}
