use serde::{Deserialize, Serialize};

/// Display metadata for one label of a label-map file. The palette lives in
/// a JSON sidecar next to the PNGs; on-disk pixels store raw labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaletteEntry {
    pub label: u8,
    pub name: String,
    pub color: [u8; 3],
}

fn entry(label: u8, name: &str, color: [u8; 3]) -> PaletteEntry {
    PaletteEntry { label, name: name.to_string(), color }
}

/// Body-part names in pose-label order. Index 0 is background.
pub const PART_NAMES: [&str; 15] = [
    "background",
    "hip",
    "torso",
    "neck",
    "head",
    "left-upper-arm",
    "left-lower-arm",
    "right-upper-arm",
    "right-lower-arm",
    "left-upper-leg",
    "left-lower-leg",
    "left-foot",
    "right-upper-leg",
    "right-lower-leg",
    "right-foot",
];

pub fn pose_palette() -> Vec<PaletteEntry> {
    // Distinct hues spread over the 14 parts; background black.
    const COLORS: [[u8; 3]; 15] = [
        [0, 0, 0],
        [128, 64, 0],
        [255, 0, 0],
        [255, 128, 0],
        [255, 255, 0],
        [0, 255, 0],
        [0, 200, 128],
        [0, 255, 255],
        [0, 128, 255],
        [0, 0, 255],
        [128, 0, 255],
        [255, 0, 255],
        [128, 128, 0],
        [128, 255, 128],
        [255, 128, 128],
    ];
    PART_NAMES
        .iter()
        .enumerate()
        .map(|(i, n)| entry(i as u8, n, COLORS[i]))
        .collect()
}

pub const GARMENT_NAMES: [&str; 7] =
    ["background", "hair", "face", "skin", "shoes", "garment-top", "garment-bottom"];

pub fn garment_palette() -> Vec<PaletteEntry> {
    const COLORS: [[u8; 3]; 7] = [
        [0, 0, 0],
        [96, 48, 16],
        [255, 204, 160],
        [224, 160, 128],
        [40, 40, 40],
        [0, 96, 255],
        [32, 32, 128],
    ];
    GARMENT_NAMES
        .iter()
        .enumerate()
        .map(|(i, n)| entry(i as u8, n, COLORS[i]))
        .collect()
}

pub fn silhouette_palette() -> Vec<PaletteEntry> {
    vec![entry(0, "background", [0, 0, 0]), entry(1, "foreground", [255, 255, 255])]
}
