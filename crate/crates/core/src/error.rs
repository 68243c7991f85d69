//! Error type shared across the library.

use std::fmt;

use crate::graph::{Edge, Triangle, ValidationIssue, VertexId};

/// Everything that can go wrong in the library, from malformed inputs to
/// budget refusals. Pipeline self-check failures get their own variant so
/// callers can tell "bad input" apart from "bug".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Structural validation failed; the individual findings are attached.
    InvalidGraph(Vec<ValidationIssue>),
    /// No part has both of its incident sides complete, so no apex exists.
    NotBilaterallyComplete,
    /// A certificate references an edge the graph does not contain.
    EdgeNotInGraph(Edge),
    /// A certificate references a triangle the graph does not contain.
    TriangleNotInGraph(Triangle),
    /// Bipartite subgraph construction saw a vertex on both sides.
    VertexOnBothSides(VertexId),
    /// Bipartite subgraph construction saw the same edge twice.
    DuplicateEdge(Edge),
    /// Edge coloring needed more classes than there are apex vertices.
    TooManyColorClasses { classes: usize, apex: usize },
    /// The node set handed to the solver does not separate source from sink.
    InvalidSeparator,
    /// The instance exceeds the oracle budget; the message says which limit.
    BudgetExceeded(String),
    /// An internal invariant failed. This is a bug, not bad input.
    InternalInvariant(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGraph(issues) => {
                write!(f, "invalid graph ({} issue(s)", issues.len())?;
                if let Some(first) = issues.first() {
                    write!(f, ", first: {first}")?;
                }
                write!(f, ")")
            }
            Error::NotBilaterallyComplete => {
                write!(
                    f,
                    "graph is not bilaterally complete: no part has two complete sides"
                )
            }
            Error::EdgeNotInGraph(e) => write!(f, "edge {e} is not in the graph"),
            Error::TriangleNotInGraph(t) => write!(f, "triangle {t} is not in the graph"),
            Error::VertexOnBothSides(v) => {
                write!(
                    f,
                    "vertex {v} appears on both sides of a bipartite subgraph"
                )
            }
            Error::DuplicateEdge(e) => write!(f, "edge {e} listed twice"),
            Error::TooManyColorClasses { classes, apex } => write!(
                f,
                "edge coloring produced {classes} classes but only {apex} apex vertices exist"
            ),
            Error::InvalidSeparator => {
                write!(f, "node set does not separate the source from the sink")
            }
            Error::BudgetExceeded(what) => write!(f, "oracle budget exceeded: {what}"),
            Error::InternalInvariant(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl std::error::Error for Error {}
