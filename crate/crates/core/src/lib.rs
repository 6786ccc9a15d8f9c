//! Exact verification toolkit for fractional (a,b,m)-covered graphs.
//!
//! A graph `G` is fractional (a,b,m)-covered when, for every set `H` of `m`
//! edges, there is an edge weighting `h : E → [0,1]` with every weighted
//! degree in `[a,b]` and `h ≡ 1` on `H`. This crate decides the property two
//! independent ways ([`covered::is_covered_criterion`] and
//! [`covered::is_covered_direct`]), computes spectral radii and the related
//! bounds, and runs verification campaigns for the spectral-radius and size
//! conditions that guarantee coveredness ([`harness`]).

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod covered;
pub mod error;
pub mod factor;
pub mod flow;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{EdgeSubset, Graph, VertexSet};
