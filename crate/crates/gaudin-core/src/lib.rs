pub mod arrangement;
pub mod error;
pub mod flats;
pub mod graphs;
pub mod holonomy;
pub mod limits;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod sample;
pub mod scalar;
