mod bits;
pub mod ordinal;
pub mod syntax;
pub mod theories;
pub mod proofs;
pub mod batch;
