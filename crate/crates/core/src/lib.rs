//! Exact arithmetic in the braid group quotients `B_n/Γ₃(P_n)`.

pub mod action;
pub mod element;
pub mod error;
pub mod invariants;
pub mod json;
pub mod lattice;
pub mod perm;
pub mod signed;
pub mod torsion;
pub mod verify;
pub mod word;

pub use element::{tits_lift, NilElement, Order};
pub use error::{NilError, Result};
pub use lattice::{comm_structure, CommPart, Pair, PureElement, PurePart, SignedTriple, Triple};
pub use perm::Permutation;
pub use word::{BraidWord, Letter, Sign};
