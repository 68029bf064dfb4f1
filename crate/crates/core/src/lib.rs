//! Constructions and instance-level checks for wedge-transitive digraphs of
//! product action type: finite fields, permutation actions, wreath products,
//! orbital digraphs, normal quotients and isomorphism testing.

pub mod constructions;
pub mod digraph;
pub mod finfield;
pub mod permaction;
pub mod verify;

use thiserror::Error;

pub use digraph::{Digraph, Direction};
pub use finfield::{FieldElement, FiniteField};
pub use permaction::{GeneratedAction, Labels, Permutation, WreathElement};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] finfield::FieldError),
    #[error(transparent)]
    Action(#[from] permaction::ActionError),
    #[error(transparent)]
    Graph(#[from] digraph::GraphError),
    #[error("invalid field order q = {q}: {reason}")]
    BadOrder { q: u32, reason: &'static str },
    #[error("the zero vector has no square-class")]
    ZeroVector,
    #[error("orbital graph seed ({0}, {0}) would be a loop")]
    LoopSeed(usize),
    #[error("generating set check failed: expected group order {expected}, got {got}")]
    GeneratorCheck { expected: usize, got: usize },
    #[error("{0}")]
    Parameter(String),
}
