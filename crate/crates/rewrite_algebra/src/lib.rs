//! Cohn–Leavitt path algebras `𝒜_K(Ė)` of finite bi-separated graphs over
//! `K = ℚ`.
//!
//! Elements are exact linear combinations of generalized paths in the
//! double graph. Products are reduced to the unique normal form given by
//! the confluent rewriting system attached to a fixed choice of forbidden
//! words; normal paths form a linear basis.

pub mod algebra;
pub mod elem;
pub mod path;

pub use algebra::{Algebra, ForbiddenTable, RelationFailure};
pub use elem::{degree_components, q, AlgElem, Q};
pub use path::{path_mul, GenPath, Letter};
