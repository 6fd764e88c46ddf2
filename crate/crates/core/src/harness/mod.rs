//! File format, generators, the disjoint-paths gadget and corpus runs.

pub mod bench;
pub mod format;
pub mod gadget;
pub mod generate;

pub use bench::{run_corpus, write_csv, BudgetSpec, CorpusSpec, RunReport, Solver};
pub use format::{emit, parse_instance, Instance};
pub use gadget::{degree_reduction_gadget, disjoint_paths};
pub use generate::generate;
