pub mod cli;
pub mod d3;
pub mod exactmath;
pub mod grassmann;
pub mod lefschetz;
pub mod relations;
pub mod solver;
