//! Lie algebras given by structure constants, their elements and operators.

mod algebra;
mod charseq;
mod element;
mod jordan;

pub use algebra::{LieAlgebra, TableBuilder, ValidationReport};
pub use charseq::{characteristic_sequence, CharSeq, CharSeqEstimate};
pub use element::{flat_index, Element, LinearOperator};
pub use jordan::{jordan_block_sizes_at, jordan_block_sizes_nilpotent};
