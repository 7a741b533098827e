//! Compositional pose transfer at desk scale.
//!
//! Three modular networks predict silhouette, garment labels and rendered
//! foreground for a target pose; a procedural paper-doll generator provides
//! training data with exact image-to-UV warps; at inference a unified UV
//! representation of labels and appearance keeps frame sequences temporally
//! coherent.

pub mod error;
pub mod types;

pub use error::{Error, Result};
