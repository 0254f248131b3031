//! File formats, DOT export, seeded sampling and parallel scans on top of
//! [`permpow_core`].
//!
//! The `permpow` binary in this package is the command-line front end.

pub mod dot;
pub mod io;
pub mod random;
pub mod scan;

pub use io::FormatError;
pub use scan::ScanSummary;
