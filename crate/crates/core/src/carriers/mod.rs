//! Hyperfield carriers, canonical element sets and axiom checkers.

pub mod axioms;
pub mod element;
pub mod finite;
pub mod hyperfield;
pub mod interval;
pub mod phase;
pub mod set;

pub use axioms::{check_axioms, is_doubly_distributive, AxiomReport, DistributivityReport, ProbeSpec};
pub use element::{format_rat, int, parse_rat, rat, Element, ExtRat, Rat};
pub use finite::FiniteTable;
pub use hyperfield::Hyperfield;
pub use interval::{Interval, IntervalUnion, XVal};
pub use set::ElementSet;
