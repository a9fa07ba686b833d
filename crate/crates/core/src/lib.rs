pub mod cli;
pub mod evaluation;
pub mod formula;
pub mod hilbert;
pub mod lattice;
pub mod model;
pub mod report;
pub mod sampling;
