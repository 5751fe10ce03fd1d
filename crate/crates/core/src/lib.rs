//! Coronoids, perforated patches and generalised altans.

pub mod altan;
pub mod embedder;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hexgrid;
pub mod hexsystem;
pub mod kekule;
pub mod planemap;
pub mod render;
pub mod skeleton;

pub use error::{Error, Result};
