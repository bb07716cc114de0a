//! Exact q-series engine for Ramanujan's theta function
//! `f(a, b) = sum_n a^(n(n+1)/2) b^(n(n-1)/2)`.
//!
//! Series are truncated bivariate Laurent series over cyclotomic fields, so identities
//! involving roots of unity are checked by exact coefficient comparison.

pub mod catalog;
pub mod cli;
pub mod cyclotomic;
pub mod dissect;
pub mod error;
pub mod exprlang;
pub mod laurent;
pub mod theta;

pub use cyclotomic::{cyclotomic_polynomial, zeta_power, CycloNum, CyclotomicField, IntPolynomial};
pub use dissect::{
    boundary_monomials, dissect_closed, dissect_filter, transform_lhs, transform_rhs, DissectionSpec,
};
pub use error::{Error, Result};
pub use laurent::{LaurentSeries, Mismatch, Monomial, ScaledMonomial, Validity};
pub use theta::{pochhammer_expand, theta_expand, triple_product_rhs, ThetaArgs};
pub use catalog::{
    builtin_catalog, evaluate, verify_identity, Expr, Identity, Report, RunDocument, Status, Summary,
};
pub use exprlang::{parse_expr, parse_identity, print_expr, ParseError};
