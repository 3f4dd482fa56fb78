pub mod error;
pub mod exterior;
pub mod groebner;
pub mod parse;
pub mod poly;
pub mod distribution;
pub mod linalg;
pub mod sections;
pub mod curves;
pub mod logarithmic;
pub mod cli;
pub mod corpus;
pub mod input;
pub mod report;
