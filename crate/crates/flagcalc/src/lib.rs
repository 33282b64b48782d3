//! Text, CSV and JSON formats and the `flagcalc` command line on top of
//! [`flagcalc_core`].

pub mod cli;
pub mod render;
pub mod text;
pub mod verify;
