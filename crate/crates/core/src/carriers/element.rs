use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Formats a rational as `n` or `n/d`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(text: &str) -> Option<Rat> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = t.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Reduces an angle (in units of pi) into `[0, 2)`.
pub fn reduce_angle(r: &Rat) -> Rat {
    let two = int(2);
    let q = (r / &two).floor();
    let out = r - q * two;
    debug_assert!(!out.is_negative() && out < int(2));
    out
}

/// Rational extended by negative infinity, the carrier of the tropical hyperfield.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRat {
    NegInf,
    Fin(Rat),
}

impl ExtRat {
    pub fn fin(r: Rat) -> Self {
        ExtRat::Fin(r)
    }

    pub fn add(&self, other: &ExtRat) -> ExtRat {
        match (self, other) {
            (ExtRat::Fin(a), ExtRat::Fin(b)) => ExtRat::Fin(a + b),
            _ => ExtRat::NegInf,
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::NegInf => write!(f, "-inf"),
            ExtRat::Fin(r) => write!(f, "{}", format_rat(r)),
        }
    }
}

/// One value of a hyperfield carrier.
///
/// Finite table carriers (Krasner, signs, weak signs and every `W(G,e)`)
/// share the `Sym` variant: the index refers to the symbol list of the
/// table. `Phase(None)` is the zero of the phase hyperfield and
/// `Phase(Some(r))` is the unit complex number `exp(i r pi)` with `r` in
/// `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Sym(usize),
    Mod(u64),
    Trop(ExtRat),
    Viro(Rat),
    Phase(Option<Rat>),
}

impl Element {
    pub fn trop(n: i64) -> Element {
        Element::Trop(ExtRat::Fin(int(n)))
    }

    pub fn trop_rat(r: Rat) -> Element {
        Element::Trop(ExtRat::Fin(r))
    }

    pub fn neg_inf() -> Element {
        Element::Trop(ExtRat::NegInf)
    }

    pub fn viro(r: Rat) -> Element {
        Element::Viro(r)
    }

    /// The phase `exp(i angle pi)`; the angle is reduced mod 2.
    pub fn phase(angle: Rat) -> Element {
        Element::Phase(Some(reduce_angle(&angle)))
    }
}
