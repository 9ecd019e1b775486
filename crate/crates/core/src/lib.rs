//! Exact computations with stable Grothendieck polynomials `G_λ`, their duals
//! `g_λ`, and the skew shapes built from staircases.
//!
//! Polynomials are truncated symmetric functions with integer coefficients in
//! the monomial basis. Every identity is checked by exact comparison up to a
//! stated degree.

pub mod error;
pub mod grothendieck;
pub mod shapes;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use grothendieck::SignedCount;
pub use shapes::{star_join, Partition, SkewShape, StripKind};
pub use symfunc::{Basis, BasisExpansion, SymFunc, TruncationProfile};
pub use tableaux::{EntrySet, FillingKind, SetFilling, Word};
