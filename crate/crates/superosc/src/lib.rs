//! File formats and the command-line front end for `superosc-core`.

pub mod cli;
pub mod io;
pub mod number;
