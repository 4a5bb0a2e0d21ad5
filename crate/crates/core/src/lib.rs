//! Token addition/removal (TAR) reconfiguration graphs of vertex-set graph parameters.

pub mod canon;
pub mod census;
pub mod error;
pub mod export;
pub mod family;
pub mod feasibility;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod hamilton;
pub mod iso;
pub mod kind;
pub mod tar;
pub mod verify;

pub use error::{Error, Result};
pub use family::{build_family, FamilySpec};
pub use graph::{combine, CombineOp, Graph, VertexSet};
pub use kind::{Direction, ParameterKind};
