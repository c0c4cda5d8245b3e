use std::fmt;

use crate::carriers::{Element, Hyperfield};
use crate::error::{Error, Result};

use super::poly::Polynomial;

/// A tree of hyperproducts and hypersums over polynomial leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductExpr {
    Leaf(Polynomial),
    Prod(Box<ProductExpr>, Box<ProductExpr>),
    Sum(Box<ProductExpr>, Box<ProductExpr>),
    /// `a ⊡ E` for a nonzero constant `a`.
    Scalar(Element, Box<ProductExpr>),
}

impl ProductExpr {
    pub fn leaf(p: Polynomial) -> Self {
        ProductExpr::Leaf(p)
    }

    pub fn prod(a: ProductExpr, b: ProductExpr) -> Self {
        ProductExpr::Prod(Box::new(a), Box::new(b))
    }

    pub fn sum(a: ProductExpr, b: ProductExpr) -> Self {
        ProductExpr::Sum(Box::new(a), Box::new(b))
    }

    /// Right-nested product `p ⊡ (q ⊡ r)`.
    pub fn right_nested(p: &Polynomial, q: &Polynomial, r: &Polynomial) -> Self {
        ProductExpr::prod(ProductExpr::Leaf(p.clone()), ProductExpr::prod(ProductExpr::Leaf(q.clone()), ProductExpr::Leaf(r.clone())))
    }

    /// Left-nested product `(p ⊡ q) ⊡ r`.
    pub fn left_nested(p: &Polynomial, q: &Polynomial, r: &Polynomial) -> Self {
        ProductExpr::prod(ProductExpr::prod(ProductExpr::Leaf(p.clone()), ProductExpr::Leaf(q.clone())), ProductExpr::Leaf(r.clone()))
    }

    pub fn hf(&self) -> &Hyperfield {
        match self {
            ProductExpr::Leaf(p) => p.hf(),
            ProductExpr::Prod(a, _) | ProductExpr::Sum(a, _) | ProductExpr::Scalar(_, a) => a.hf(),
        }
    }

    /// Largest degree any member can have.
    pub fn nominal_degree(&self) -> usize {
        match self {
            ProductExpr::Leaf(p) => p.degree(),
            ProductExpr::Prod(a, b) => a.nominal_degree() + b.nominal_degree(),
            ProductExpr::Sum(a, b) => a.nominal_degree().max(b.nominal_degree()),
            ProductExpr::Scalar(_, a) => a.nominal_degree(),
        }
    }

    pub fn leaves(&self) -> Vec<&Polynomial> {
        match self {
            ProductExpr::Leaf(p) => vec![p],
            ProductExpr::Prod(a, b) | ProductExpr::Sum(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v
            }
            ProductExpr::Scalar(_, a) => a.leaves(),
        }
    }

    /// Checks that all leaves share one hyperfield, scalars are nonzero and
    /// the degree stays within `max_degree`.
    pub fn validate(&self, max_degree: usize) -> Result<()> {
        let hf = self.hf();
        for leaf in self.leaves() {
            if leaf.hf() != hf {
                return Err(Error::HyperfieldMismatch(hf.name(), leaf.hf().name()));
            }
        }
        self.check_scalars()?;
        let degree = self.nominal_degree();
        if degree > max_degree {
            return Err(Error::DegreeLimit { degree, limit: max_degree });
        }
        Ok(())
    }

    fn check_scalars(&self) -> Result<()> {
        match self {
            ProductExpr::Leaf(_) => Ok(()),
            ProductExpr::Prod(a, b) | ProductExpr::Sum(a, b) => {
                a.check_scalars()?;
                b.check_scalars()
            }
            ProductExpr::Scalar(c, a) => {
                let hf = a.hf();
                hf.check(c)?;
                if hf.is_zero(c) {
                    return Err(Error::ZeroScalar);
                }
                a.check_scalars()
            }
        }
    }
}

impl fmt::Display for ProductExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn atom(e: &ProductExpr) -> String {
            match e {
                ProductExpr::Leaf(p) if p.coeffs().iter().filter(|c| !p.hf().is_zero(c)).count() == 1 && p.degree() > 0 => {
                    p.to_string()
                }
                _ => format!("({e})"),
            }
        }
        match self {
            ProductExpr::Leaf(p) => write!(f, "{p}"),
            ProductExpr::Prod(a, b) => write!(f, "{}*{}", atom(a), atom(b)),
            ProductExpr::Sum(a, b) => write!(f, "({a})+({b})"),
            ProductExpr::Scalar(c, a) => {
                let text = a.hf().format_element(c);
                let text = if text.starts_with('-') { format!("({text})") } else { text };
                write!(f, "{}*{}", text, atom(a))
            }
        }
    }
}
