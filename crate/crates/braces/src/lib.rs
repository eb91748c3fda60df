//! A matching-theory graph toolkit.
//!
//! The crate revolves around perfect matchings and the structures built on
//! top of them: 2-factors and 2-factor Hamiltonicity, tight cuts and the
//! decomposition into bricks and braces, star products and trisums, and
//! Pfaffian orientations. Everything is exact and exhaustive, sized for
//! graphs of a few dozen vertices, with explicit budgets on the exponential
//! subroutines so that a search that gives up is distinguishable from a
//! search that proves absence.

pub mod budget;
pub mod construct;
pub mod cuts;
pub mod error;
pub mod factors;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod matching;
pub mod pfaffian;
pub mod planar;
pub mod scan;
pub mod suite;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use fixtures::{all_fixtures, fixture, FixtureId};
pub use graph::{Bipartition, Graph};
