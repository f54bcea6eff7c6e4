//! Gadgets used by hardness reductions and their exhaustive verifiers.
//!
//! A verifier never trusts a construction: forcers are checked by
//! enumerating every valid partition, variable gadgets by satisfiability
//! queries with side constraints.

mod edge;
mod forcers;
mod set;
mod variable;

pub use edge::{
    build_blue_edge_forcer, build_h9_red_edge_forcer, verify_clause_edge_gadget, verify_edge_forcer, EdgeForcer,
};
pub use forcers::{
    build_h4_blue_forcer, build_red_forcer, compose_red_to_blue, glue_at_q, verify_blue_forcer, verify_red_forcer,
    Forcer,
};
pub use set::{default_gadget_set, ClauseShape, GadgetSet, SectionTemplate, DEFAULT_GADGET_SET};
pub use variable::{find_swap_involution, verify_variable_gadget, VariableGadget};

use crate::graph::{Edge, GraphError};
use crate::solver::{EdgePartition, Partition, SolverError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error("enumeration budget of {budget} states exceeded")]
    Budget { budget: u64 },
    #[error("host contains the triangle {0:?}")]
    Triangle([usize; 3]),
    #[error("invalid gadget: {0}")]
    Invalid(String),
    #[error("input is not a red forcer: {0}")]
    NotRedForcer(String),
    #[error("no 4-regular base graph of girth {girth}: {reason}")]
    NoBaseGraph { girth: usize, reason: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<SolverError> for GadgetError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::BudgetExceeded { budget } => GadgetError::Budget { budget },
            SolverError::Triangle(t) => GadgetError::Triangle(t),
            other => GadgetError::Invalid(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    Partition(Partition),
    EdgePartition(EdgePartition),
    /// Colors imposed on a clause gadget's literal edges.
    LiteralPattern(Vec<(Edge, crate::solver::Color)>),
    /// An adjacent blue pair that a contract forbids.
    BlueAdjacency(Edge, Edge),
}

/// Outcome of a verifier. On failure `failed` names the broken condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub pass: bool,
    pub failed: Option<String>,
    pub counterexample: Option<Counterexample>,
    /// Valid (edge) partitions inspected, when the verifier enumerates.
    pub partitions: Option<usize>,
}

impl Verdict {
    fn pass(partitions: Option<usize>) -> Self {
        Verdict {
            pass: true,
            failed: None,
            counterexample: None,
            partitions,
        }
    }

    fn fail(reason: impl Into<String>, counterexample: Option<Counterexample>, partitions: Option<usize>) -> Self {
        Verdict {
            pass: false,
            failed: Some(reason.into()),
            counterexample,
            partitions,
        }
    }
}
