pub mod cli;
pub mod error;
pub mod fundseries;
pub mod genericity;
pub mod linalg;
pub mod pair;
pub mod parabolic;
pub mod rational;
pub mod rootsys;
pub mod weight;
