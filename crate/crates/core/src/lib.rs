//! Convex ropes of simple polygons, computed by multiple shooting over
//! geodesic shortest paths in a slit domain around the polygon.
//!
//! The crate is `no_std` (it needs `alloc`).

#![no_std]

extern crate alloc;

pub mod geometry;
pub mod polygon;
pub mod domain;
pub mod triangulation;
pub mod geodesic;
pub mod visibility;
pub mod partition;
pub mod solver;
pub mod rope;

pub use geometry::{Point, Polyline, Segment, Vector};
pub use polygon::{SimplePolygon, Visibility, VisibilityCertificate};
