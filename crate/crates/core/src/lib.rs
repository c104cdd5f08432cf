pub mod brauer;
pub mod cli;
pub mod cyclo;
pub mod descent;
pub mod grp;
pub mod harness;
pub mod hnf;
pub mod io;
pub mod linalg;
pub mod modp;
pub mod rep;
