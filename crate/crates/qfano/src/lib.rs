//! Exact-arithmetic enumeration and verification of numerical Q-Fano
//! threefold candidates.
//!
//! A terminal Q-Fano threefold is described numerically by its Fano index
//! `q`, its basket of cyclic-quotient singularities, and the local classes of
//! the ample generator `A` of the divisor class group. From these the
//! orbifold Riemann-Roch formula determines `A^3`, the genus, and the
//! dimensions of every linear system `|tA + s.Xi|` (`Xi` a torsion divisor
//! class). This crate implements:
//!
//! - [`numerics`]: arbitrary-precision rationals and modular helpers,
//! - [`basket`]: baskets of singularities, local class data, covers induced
//!   by torsion classes, and Mori-extraction discrepancies,
//! - [`riemann_roch`]: the orbifold Riemann-Roch engine,
//! - [`search`]: the bounded exhaustive candidate searches (torsion-free,
//!   torsion, and index-drop variants) with golden-table verification,
//! - [`sarkisov`]: the integer arithmetic of Sarkisov links and a declarative
//!   harness replaying the case-by-case eliminations.
//!
//! Everything computes in exact rational arithmetic; no floating point is
//! used anywhere.

pub mod basket;
pub mod numerics;
pub mod riemann_roch;
pub mod sarkisov;
pub mod search;

use thiserror::Error;

/// Errors shared by all modules of this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A rational was constructed with a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,
    /// A modulus or other argument was outside its documented domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// `a` has no inverse modulo `r`.
    #[error("{a} is not invertible modulo {r}")]
    NotInvertible { a: i64, r: i64 },
    /// The congruence `1 + q*l = 0 (mod r)` has no solution at some point.
    #[error("no local class solution at a point of index {r}: gcd({q}, {r}) != 1")]
    NoLocalSolution { q: u32, r: u32 },
    /// A torsion assignment is inconsistent with its basket or claimed order.
    #[error("inconsistent torsion data: {0}")]
    InconsistentTorsion(String),
    /// The `A^3` formula needs `q >= 3`.
    #[error("unsupported Fano index {q}: the degree formula requires q >= 3")]
    UnsupportedIndex { q: u32 },
    /// Kawamata-Viehweg vanishing does not apply to the requested class.
    #[error("vanishing not applicable: t = {t} requires t > -q = -{q}")]
    VanishingNotApplicable { t: i64, q: u32 },
    /// An Euler characteristic that must be an integer is not.
    #[error("non-integral Euler characteristic {chi} for {what}")]
    NonIntegralChi { chi: String, what: String },
    /// No torsion order `n` with `chi(n.Xi) = 1` exists up to the global index.
    #[error("no torsion order found up to the global index {bound}")]
    NoTorsionOrder { bound: u64 },
    /// A link equation violates the integrality precondition of the solver.
    #[error("malformed equation: {0}")]
    MalformedEquation(String),
    /// The solver cannot derive finite bounds for an equation.
    #[error("cannot bound equation: {0}")]
    Unbounded(String),
    /// `verify` was asked for a table that does not exist.
    #[error("unknown table id {0:?}")]
    UnknownTable(String),
    /// A case spec references an axiom missing from the registry.
    #[error("unknown axiom tag {0:?}")]
    UnknownAxiom(String),
    /// A data or case file failed to parse.
    #[error("parse error in {file} line {line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
