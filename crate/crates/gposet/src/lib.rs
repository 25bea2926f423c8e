//! Intervals of the poset of finite graphs ordered by induced-subgraph
//! containment: canonical forms, Hasse diagrams, Möbius functions, split
//! structure, closed-form predictors, and a discrete Morse engine on the
//! poset of path forests.

pub mod canon;
pub mod dsl;
pub mod enumerate;
pub mod experiments;
pub mod fixtures;
pub mod formulas;
pub mod graph;
pub mod interval;
pub mod io;
pub mod morse;
pub mod paths;
pub mod poset;
pub mod split;

pub use canon::{CanonError, CanonicalCode, Canonicalizer, OccurrenceSet};
pub use dsl::{parse_graph, SpecError};
pub use formulas::{predict, ClosedForm, Prediction};
pub use graph::{Graph, GraphError, NamedFamily, StructuralPredicates, VertexSet};
pub use interval::{build_interval, mobius, mobius_connected, Interval, IntervalElement, IntervalError};
pub use morse::{mobius_via_morse, MorseSummary, OperationChain};
pub use paths::{path_mobius, Operation, PathError, PathInterval, PathMultiset};
pub use split::{split_classify, verify_disconnection_theorem, SplitReport, SplitStatus, SplitWitness};

/// Chapters of the guide under `book/`, compiled here so their examples run
/// as doc-tests.
pub mod guide {
    #[doc = include_str!("../../../book/src/intro.md")]
    pub mod intro {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub mod graphs {}
    #[doc = include_str!("../../../book/src/intervals.md")]
    pub mod intervals {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    pub mod formulas {}
    #[doc = include_str!("../../../book/src/path-forests.md")]
    pub mod path_forests {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    pub mod experiments {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
