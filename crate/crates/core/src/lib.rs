pub mod cli;
pub mod compat;
pub mod error;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod search;
pub mod tiling;
pub mod triangulation;
pub mod trianguloid;
