//! File formats, fixture generators, reports and the command-line driver
//! for the `convex-rope` solver.

pub mod app;
pub mod format;
pub mod generate;
pub mod report;
pub mod svg;
