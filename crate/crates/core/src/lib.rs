pub mod decomp;
pub mod error;
pub mod linalg;
pub mod pointer;
pub mod scenarios;
pub mod spin;
pub mod weak;
