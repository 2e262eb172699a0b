//! Combinatorics of Schubert polynomials: permutations, inversion diagrams on
//! the staircase, inversions tableaux, pipe dreams, chute moves, and the
//! polynomials themselves, all over exact integer arithmetic.

pub mod chute;
pub mod diagram;
pub mod error;
pub mod grassmann;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{CodeRole, LehmerCode, Permutation};
