//! Exact computation of edge cut domination parameters of small graphs,
//! together with a harness that mechanically verifies the standard closed
//! forms, bounds, and inequality chain over generated families and the
//! exhaustive catalogue of small connected graphs.

mod canon;
mod combi;

pub mod classical;
pub mod cutdom;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod predicates;

pub use classical::ParamResult;
pub use cutdom::{CtProfile, Extremum};
pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph};
pub use harness::{Caps, ClaimId, ClaimReport, ClaimStatus, CorpusItem};
pub use predicates::Mode;
