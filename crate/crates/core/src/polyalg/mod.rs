//! Polynomials over a hyperfield and the hyperstructure they form.

pub mod expr;
pub mod member;
pub mod parse;
pub mod poly;
pub mod polybox;
pub mod solver;

pub use expr::ProductExpr;
pub use member::{
    enumerate_expr, expr_equal, expr_member, expr_set, sample_members, verify_no, verify_yes, EqualityCertificate,
    EqualityVerdict, ExprSet, MemberCertificate, NoReason, Verdict, Witness,
};
pub use parse::{format_poly, parse_expr, parse_poly};
pub use poly::Polynomial;
pub use polybox::{boxprod, boxsum, PolyBox};
