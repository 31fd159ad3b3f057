pub mod catalog;
pub mod cli;
pub mod env2;
pub mod liealg;
pub mod pairs;
pub mod parabolic;
pub mod ratlin;
pub mod spectra;
