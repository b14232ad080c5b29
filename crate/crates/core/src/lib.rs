//! Exact-integer toolkit for 2×2 matrices whose coefficients can be permuted
//! arbitrarily without losing integer eigenvalues.
//!
//! A 2×2 integer matrix `(a b; c d)` has integer eigenvalues exactly when the
//! discriminant `(a-d)² + 4bc` is a perfect square. Demanding that *every*
//! arrangement of the multiset `{a,b,c,d}` passes this test yields six
//! square conditions. This crate
//!
//! * generates coefficient quadruples satisfying all six conditions from
//!   Pythagorean triples ([`families`]),
//! * enumerates and parity-normalizes the triples themselves ([`triples`]),
//! * verifies the property over all distinct arrangements, for 2×2 and 3×3
//!   matrices, in exact checked integer arithmetic ([`eigen`]),
//! * exhaustively scans coefficient ranges for every solution, classifies
//!   what it finds, and supports sharded, resumable searches ([`search`]).
//!
//! The crate is `no_std` (with `alloc`); all arithmetic is checked and
//! overflow is always reported as an error, never wrapped.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod eigen;
pub mod families;
pub mod multiset;
pub mod ratio;
pub mod search;
pub mod triples;

mod arith;

pub use ratio::Ratio;

/// Error type shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Checked 64-bit arithmetic overflowed while evaluating `op`.
    #[error("integer overflow while computing {op}")]
    Overflow { op: &'static str },

    /// `(r, s, t)` is not a valid Pythagorean triple.
    #[error("({r}, {s}, {t}) is not a Pythagorean triple with positive sides")]
    InvalidTriple { r: i64, s: i64, t: i64 },

    /// Euclid parameters must satisfy `f > g >= 1` and `h >= 1`.
    #[error("invalid Euclid parameters: need f > g >= 1 and h >= 1, got f={f}, g={g}, h={h}")]
    InvalidEuclidParams { f: i64, g: i64, h: i64 },

    /// A rational-valued quadruple entry where an integer was required.
    #[error("entry {entry} = {numer}/{denom} of the solution is not an integer")]
    NonIntegerEntry { entry: char, numer: i64, denom: i64 },

    /// The factor pair does not satisfy `k*l = r*s/2`.
    #[error("factor pair violates k*l = r*s/2 (k*l = {found}, expected {expected})")]
    FactorConstraint { found: Ratio, expected: Ratio },

    /// A triple was passed to an operation that requires the normalized
    /// layout (`s` divisible by 4, `r` and `t` of equal parity).
    #[error(
        "triple ({r}, {s}, {t}) is not normalized: need s divisible by 4 and r of the parity \
         of t (reorder the legs, halving an all-even triple first)"
    )]
    NotNormalized { r: i64, s: i64, t: i64 },

    /// The hypotenuse must be odd for this construction.
    #[error("hypotenuse t = {t} is even; this construction requires odd t")]
    EvenHypotenuse { t: i64 },

    /// `n` must be odd for the alternative canonical form.
    #[error("parameter n = {n} must be odd")]
    EvenN { n: i64 },

    /// Two parameters that must be coprime are not.
    #[error("parameters {a} and {b} must be coprime")]
    NotCoprime { a: i64, b: i64 },

    /// A parameter that must be nonzero (or positive) is out of domain.
    #[error("parameter {name} = {value} is out of domain ({requirement})")]
    BadParameter {
        name: &'static str,
        value: i64,
        requirement: &'static str,
    },

    /// Division by zero in rational arithmetic.
    #[error("rational division by zero")]
    ZeroDenominator,

    /// Search range bounds are inverted.
    #[error("invalid search range: lo = {lo} exceeds hi = {hi}")]
    InvalidRange { lo: i64, hi: i64 },

    /// The search would need more work units than the configured budget.
    #[error("search needs {required} work units but the budget is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },

    /// A checkpoint does not belong to the search being resumed.
    #[error("checkpoint mismatch: {reason}")]
    CheckpointMismatch { reason: &'static str },
}

impl Error {
    fn overflow(op: &'static str) -> Self {
        Error::Overflow { op }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
