//! Canonical image, label and UV data structures shared by every module.
//!
//! All types are immutable after construction; every constructor checks the
//! type's own invariants and rejects rather than clamps. Cross-map
//! invariants (subset relations, warp consistency) are checked by the
//! reporting-only [`Validate`] machinery.

mod atlas;
mod maps;
mod onehot;
mod palette;
mod triplet;
mod uvmaps;
mod validate;
mod warp;

pub use atlas::{Chart, UvAtlas};
pub use maps::{
    garment, GarmentMap, PoseMap, RgbImage, SilhouetteMask, BODY_PARTS, GARMENT_CLASSES,
    POSE_CLASSES,
};
pub use onehot::{concat_channels, decode_onehot, encode_onehot};
pub use palette::{garment_palette, pose_palette, silhouette_palette, PaletteEntry, GARMENT_NAMES, PART_NAMES};
pub use triplet::{ImageTriplet, SourceTriplet};
pub use uvmaps::{UvLabelMap, UvTextureMap};
pub use validate::{validate_warp, Validate, ValidationReport, Violation};
pub use warp::{WarpEntry, WarpField};
