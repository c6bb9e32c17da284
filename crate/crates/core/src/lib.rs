//! Effective tools around fields of rationality of automorphic families.
//!
//! * [`weil`]: exact certification and enumeration of Weil polynomials and
//!   Hecke-eigenvalue candidates.
//! * [`conductor`]: explicit depth and conductor bounds for local parameters.
//! * [`vaaler`] and [`trig`]: Beurling–Selberg–Vaaler majorants and minorants
//!   on tori, with Weyl-group symmetrization.
//! * [`plancherel`]: seeded simulation of Satake-parameter families and the
//!   small-ball estimates that make finite sets sparse.
//! * [`genus`]: genus bounds for curves over finite fields from the
//!   trigonometric point-count inequalities.
//!
//! The guide in `book/` walks through each of these; its code listings are
//! compiled and run as doctests of this crate.

pub mod arith;
pub mod conductor;
pub mod error;
pub mod genus;
pub mod plancherel;
pub mod poly;
pub mod rational;
pub mod simplex;
pub mod sturm;
pub mod surd;
pub mod trig;
pub mod vaaler;
pub mod weil;

pub use error::{Error, Result};
pub use poly::IntPolynomial;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/weil.md")]
    mod weil {}
    #[doc = include_str!("../../../book/src/conductor.md")]
    mod conductor {}
    #[doc = include_str!("../../../book/src/vaaler.md")]
    mod vaaler {}
    #[doc = include_str!("../../../book/src/plancherel.md")]
    mod plancherel {}
    #[doc = include_str!("../../../book/src/genus.md")]
    mod genus {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
