//! Subalgebras, idempotents, ideals and quasiunits of two-dimensional
//! algebras over exact fields, with closed-form solvers, a brute-force
//! oracle and executable versions of the canonical classification tables.

pub mod algebra;
pub mod catalog;
pub mod census;
pub mod field;
pub mod poly;
pub mod report;
pub mod solvers;
