//! Instance types (CNF, 2-QBF, simple graphs) and the executable
//! reduction constructions built from them.

pub mod cnf;
pub mod graph;
pub mod qbf;
pub mod translate;

pub use cnf::CnfFormula;
pub use graph::SimpleGraph;
pub use qbf::Qbf2Formula;
pub use translate::TranslationError;
