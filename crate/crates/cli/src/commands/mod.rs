pub mod bench;
pub mod catalog;
pub mod generate;
pub mod report;
pub mod search;
pub mod spacetime;
