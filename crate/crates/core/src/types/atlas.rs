use serde::{Deserialize, Serialize};

use super::maps::BODY_PARTS;
use crate::error::{Error, Result};

/// Rectangular UV chart for one body part, in canvas cell coordinates.
/// The chart owns the half-open region `[x0, x0+w) x [y0, y0+h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chart {
    pub x0: usize,
    pub y0: usize,
    pub w: usize,
    pub h: usize,
}

/// Fixed chart packing: 14 charts in a 2 x 7 grid, one per body part.
///
/// Chart-local (u, v) in [0,1]^2 quantizes to a cell with nearest-neighbor
/// flooring; charts are pairwise disjoint by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UvAtlas {
    width: usize,
    height: usize,
}

impl UvAtlas {
    /// Canvas size used throughout the documentation defaults.
    pub const DEFAULT: (usize, usize) = (512, 768);
    /// Half-size canvas for fast desk-scale runs.
    pub const DESK: (usize, usize) = (256, 384);

    pub fn new(width: usize, height: usize) -> Result<Self> {
        if width < 2 || height < 7 {
            return Err(Error::InvalidValue(format!(
                "atlas canvas {width}x{height} too small for a 2x7 chart grid"
            )));
        }
        Ok(Self { width, height })
    }

    pub fn default_size() -> Self {
        Self { width: Self::DEFAULT.0, height: Self::DEFAULT.1 }
    }

    pub fn desk() -> Self {
        Self { width: Self::DESK.0, height: Self::DESK.1 }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Chart rectangle for a body-part label in 1..=14.
    pub fn chart(&self, part: u8) -> Chart {
        debug_assert!((1..=BODY_PARTS as u8).contains(&part));
        let idx = (part - 1) as usize;
        let cw = self.width / 2;
        let ch = self.height / 7;
        Chart {
            x0: (idx % 2) * cw,
            y0: (idx / 2) * ch,
            w: cw,
            h: ch,
        }
    }

    /// Quantize chart-local (u, v) in [0,1]^2 to a canvas cell (cx, cy).
    pub fn cell(&self, part: u8, u: f32, v: f32) -> (usize, usize) {
        let c = self.chart(part);
        let cu = ((u * c.w as f32) as usize).min(c.w - 1);
        let cv = ((v * c.h as f32) as usize).min(c.h - 1);
        (c.x0 + cu, c.y0 + cv)
    }

    /// Continuous chart coordinates of a cell center, the inverse of `cell`
    /// up to quantization.
    pub fn cell_center(&self, part: u8, cx: usize, cy: usize) -> (f32, f32) {
        let c = self.chart(part);
        (
            (cx - c.x0) as f32 / c.w as f32 + 0.5 / c.w as f32,
            (cy - c.y0) as f32 / c.h as f32 + 0.5 / c.h as f32,
        )
    }

    /// Which part's chart contains a canvas cell, if any.
    pub fn part_of_cell(&self, cx: usize, cy: usize) -> Option<u8> {
        let cw = self.width / 2;
        let ch = self.height / 7;
        let col = cx / cw;
        let row = cy / ch;
        if col > 1 || row > 6 {
            return None;
        }
        Some((row * 2 + col + 1) as u8)
    }
}
