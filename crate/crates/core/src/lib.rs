pub mod construction;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod solver;
