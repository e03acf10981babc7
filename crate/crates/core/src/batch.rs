//! Batch entry points over many independent inputs.
//!
//! With the `parallel` feature (on by default) the unsuffixed functions fan
//! out over a rayon pool. The `_seq` variants are always available and give
//! identical results in identical order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::proofs::{check, Proof, ProofError};
use crate::syntax::Formula;
use crate::theories::{axiom_check, AxiomGroup, Rejection, TheorySpec};

pub fn check_proofs_seq(theory: &TheorySpec, proofs: &[Proof]) -> Vec<Result<(), ProofError>> {
    proofs.iter().map(|p| check(theory, p)).collect()
}

pub fn axiom_check_all_seq(theory: &TheorySpec, formulas: &[Formula]) -> Vec<Result<AxiomGroup, Rejection>> {
    formulas.iter().map(|f| axiom_check(theory, f)).collect()
}

#[cfg(feature = "parallel")]
pub fn check_proofs(theory: &TheorySpec, proofs: &[Proof]) -> Vec<Result<(), ProofError>> {
    proofs.par_iter().map(|p| check(theory, p)).collect()
}

#[cfg(feature = "parallel")]
pub fn axiom_check_all(theory: &TheorySpec, formulas: &[Formula]) -> Vec<Result<AxiomGroup, Rejection>> {
    formulas.par_iter().map(|f| axiom_check(theory, f)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn check_proofs(theory: &TheorySpec, proofs: &[Proof]) -> Vec<Result<(), ProofError>> {
    check_proofs_seq(theory, proofs)
}

#[cfg(not(feature = "parallel"))]
pub fn axiom_check_all(theory: &TheorySpec, formulas: &[Formula]) -> Vec<Result<AxiomGroup, Rejection>> {
    axiom_check_all_seq(theory, formulas)
}
