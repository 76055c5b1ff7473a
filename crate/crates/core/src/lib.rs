//! Counting mountain-valley assignments of flat-foldable crease patterns
//! through graph colorings.
//!
//! Start from [`generators`] or [`cpt::parse_cpt`] to obtain a
//! [`model::CreasePattern`], then count its locally flat-foldable
//! assignments with [`line_graph`] (2-colorings of the origami line graph)
//! or exhaustively with [`enumerate`]. The Miura-ori has its own
//! correspondence with grid 3-colorings in [`miura`] and [`coloring`].

pub mod cli;
pub mod coloring;
pub mod cpt;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod line_graph;
pub mod local;
pub mod miura;
pub mod model;
pub mod parity;
pub mod svg;

pub use error::Error;
