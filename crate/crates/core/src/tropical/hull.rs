use serde::{Deserialize, Serialize};

use crate::carriers::{Element, ExtRat, Rat};
use crate::divide::mult_at;
use crate::error::{Error, Result};
use crate::polyalg::Polynomial;

use super::linear_product_box;

/// Roots `a_1 >= ... >= a_n` of a monic tropical polynomial, with the
/// verification that was run on them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootMultiset {
    pub polynomial: String,
    pub roots: Vec<String>,
    /// `(root, mult_at)` for each distinct root.
    pub multiplicities: Vec<(String, usize)>,
    pub in_box: bool,
}

impl RootMultiset {
    pub fn elements(&self) -> Vec<Element> {
        self.roots
            .iter()
            .map(|r| crate::carriers::Hyperfield::tropical().parse_element(r).expect("printed by the tropical carrier"))
            .collect()
    }
}

/// Upper concave hull of `(i, c_i)` over finite coefficients. Each edge
/// from `i` to `j` contributes the root `-(slope)` with multiplicity `j - i`;
/// the `k` lowest coefficients equal to `-inf` contribute `k` roots `-inf`.
pub fn root_multiset(p: &Polynomial) -> Result<RootMultiset> {
    let hf = p.hf();
    if !hf.is_tropical() {
        return Err(Error::HyperfieldMismatch(hf.name(), "T".into()));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let pts: Vec<(usize, Rat)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| match c {
            Element::Trop(ExtRat::Fin(r)) => Some((i, r.clone())),
            _ => None,
        })
        .collect();
    let trailing = pts[0].0;
    let mut hull: Vec<(usize, Rat)> = Vec::new();
    for pt in pts {
        // pop while the last point is on or below the chord, keeping slopes strictly decreasing
        while hull.len() >= 2 {
            let (i0, c0) = &hull[hull.len() - 2];
            let (i1, c1) = &hull[hull.len() - 1];
            let lhs = (c1 - c0) * Rat::from_integer((pt.0 - i1).into());
            let rhs = (&pt.1 - c1) * Rat::from_integer((i1 - i0).into());
            if lhs <= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut roots: Vec<ExtRat> = Vec::new();
    for w in hull.windows(2) {
        let (i, ci) = &w[0];
        let (j, cj) = &w[1];
        let slope = (cj - ci) / Rat::from_integer(((j - i) as i64).into());
        roots.extend(std::iter::repeat_n(ExtRat::Fin(-slope), j - i));
    }
    roots.extend(std::iter::repeat_n(ExtRat::NegInf, trailing));
    roots.sort_by(|a, b| b.cmp(a));
    debug_assert_eq!(roots.len(), p.degree());

    let elems: Vec<Element> = roots.iter().cloned().map(Element::Trop).collect();
    let in_box = linear_product_box(&elems)?.contains(p);
    let mut multiplicities = Vec::new();
    let mut distinct = elems.clone();
    distinct.dedup();
    for a in &distinct {
        let m = mult_at(p, a)?;
        let count = elems.iter().filter(|b| *b == a).count();
        if m != count {
            return Err(Error::Verification(format!("{p}: root {} counted {count} times but mult_at is {m}", hf.format_element(a))));
        }
        multiplicities.push((hf.format_element(a), m));
    }
    if !in_box {
        return Err(Error::Verification(format!("{p} is not in the box of its hull roots")));
    }
    Ok(RootMultiset { polynomial: p.to_string(), roots: elems.iter().map(|a| hf.format_element(a)).collect(), multiplicities, in_box })
}
