//! Symbolic identification of modulation spaces of tensor products.
//!
//! Expressions are parsed from a small textual grammar, rewritten innermost-first by a
//! prioritized rule table until no rule applies, and every firing is recorded.

pub mod ast;
pub mod engine;
pub mod golden;
pub mod inclusion;
pub mod parser;
pub mod rules;

pub use ast::{Exponent, SpaceExpr, TfWeight, WeightExpr};
pub use engine::{explain, measure, normalize, trace_json, Normalized, Rejection, TraceStep};
pub use inclusion::{includes, Inclusion, InclusionStep};
pub use parser::{parse, ParseError};
