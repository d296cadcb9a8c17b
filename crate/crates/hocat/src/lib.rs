//! File formats, Graphviz output and the command-line front end for
//! `hocat-core`.

pub mod cli;
pub mod doc;
pub mod dot;
pub mod load;

pub use doc::{parse, print, DocError, Document, Kind, Location};
