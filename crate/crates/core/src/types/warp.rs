use ndarray::Array2;

use super::atlas::UvAtlas;
use crate::error::{Error, Result};

/// Per-pixel image-to-UV correspondence for one pose, plus the inverse
/// index mapping UV cells back to source pixels.
///
/// Forward entries exist exactly where the paired pose map is
/// non-background. The inverse keeps, per cell, the writing pixel whose
/// continuous (u, v) lies closest to the cell center, so that a
/// forward-then-inverse round trip stays within one pixel.
#[derive(Debug, Clone)]
pub struct WarpField {
    part: Array2<i16>,
    u: Array2<f32>,
    v: Array2<f32>,
    inverse: Array2<i32>,
    atlas: UvAtlas,
}

/// One forward warp entry: body-part label and chart-local coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WarpEntry {
    pub part: u8,
    pub u: f32,
    pub v: f32,
}

impl WarpField {
    pub fn from_entries(
        width: usize,
        height: usize,
        atlas: UvAtlas,
        entries: &Array2<Option<WarpEntry>>,
    ) -> Result<Self> {
        if entries.shape() != [height, width] {
            return Err(Error::ShapeMismatch(format!(
                "warp entries {:?} do not match {width}x{height}",
                entries.shape()
            )));
        }
        let mut part = Array2::from_elem((height, width), -1i16);
        let mut uu = Array2::zeros((height, width));
        let mut vv = Array2::zeros((height, width));
        let mut inverse = Array2::from_elem((atlas.height(), atlas.width()), -1i32);
        // Squared distance to the owning cell center, used to pick the
        // inverse winner among colliding pixels.
        let mut best = Array2::from_elem((atlas.height(), atlas.width()), f32::INFINITY);

        for y in 0..height {
            for x in 0..width {
                let Some(e) = entries[[y, x]] else { continue };
                if !(0.0..=1.0).contains(&e.u) || !(0.0..=1.0).contains(&e.v) {
                    return Err(Error::InvalidValue(format!(
                        "warp (u,v)=({},{}) outside [0,1]^2 at pixel ({x},{y})",
                        e.u, e.v
                    )));
                }
                part[[y, x]] = e.part as i16;
                uu[[y, x]] = e.u;
                vv[[y, x]] = e.v;
                let (cx, cy) = atlas.cell(e.part, e.u, e.v);
                let (cu, cv) = atlas.cell_center(e.part, cx, cy);
                let d = (e.u - cu).powi(2) + (e.v - cv).powi(2);
                if d < best[[cy, cx]] {
                    best[[cy, cx]] = d;
                    inverse[[cy, cx]] = (y * width + x) as i32;
                }
            }
        }
        Ok(Self { part, u: uu, v: vv, inverse, atlas })
    }

    pub fn width(&self) -> usize {
        self.part.shape()[1]
    }

    pub fn height(&self) -> usize {
        self.part.shape()[0]
    }

    pub fn atlas(&self) -> &UvAtlas {
        &self.atlas
    }

    /// Forward lookup at a pixel; `None` on background.
    pub fn forward(&self, x: usize, y: usize) -> Option<WarpEntry> {
        let p = self.part[[y, x]];
        if p < 0 {
            None
        } else {
            Some(WarpEntry { part: p as u8, u: self.u[[y, x]], v: self.v[[y, x]] })
        }
    }

    /// Source pixel recorded for a UV cell, if any pixel maps there.
    pub fn inverse(&self, cx: usize, cy: usize) -> Option<(usize, usize)> {
        let idx = self.inverse[[cy, cx]];
        if idx < 0 {
            None
        } else {
            let w = self.width();
            Some((idx as usize % w, idx as usize / w))
        }
    }

    /// Cells touched by the inverse index.
    pub fn covered_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.atlas.width();
        self.inverse
            .iter()
            .enumerate()
            .filter(|(_, idx)| **idx >= 0)
            .map(move |(i, _)| (i % w, i / w))
    }

    pub fn defined_pixels(&self) -> usize {
        self.part.iter().filter(|p| **p >= 0).count()
    }

    pub(crate) fn raw(&self) -> (&Array2<i16>, &Array2<f32>, &Array2<f32>) {
        (&self.part, &self.u, &self.v)
    }
}
