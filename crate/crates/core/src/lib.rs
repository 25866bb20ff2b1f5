pub mod bitset;
pub mod matching;
pub mod plane_graph;
pub mod cube;
pub mod generators;
pub mod resonance;
pub mod io;
pub mod theorems;
pub mod cli;
