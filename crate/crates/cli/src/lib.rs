//! File formats and command-line front end for [`rotmap`].

pub mod cli;
pub mod formats;
