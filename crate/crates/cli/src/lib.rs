//! Operational surface of the Lambek invariant engine: the diagram file
//! format, seeded diagram generation, the law suites and the report
//! runners. The binary in `main.rs` is a thin argument parser over
//! [`run`]'s entry points.

pub mod doc;
pub mod gen;
pub mod laws;
pub mod run;

pub use doc::{AnyDiagram, DiagramDoc, ModelTag, ParseError};
pub use gen::{generate_diagram, GenConfig};
pub use run::{run_axioms, run_check, run_gen, run_lambek, Format, RunConfig};
