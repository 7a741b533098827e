use ndarray::{Array2, Array3};

use super::atlas::UvAtlas;
use crate::error::{Error, Result};

/// Pose-invariant garment labels in UV coordinates with a validity mask.
/// Labels outside the valid mask are zero and must never be sampled.
#[derive(Debug, Clone, PartialEq)]
pub struct UvLabelMap {
    canvas: Array2<u8>,
    valid: Array2<u8>,
    atlas: UvAtlas,
}

impl UvLabelMap {
    pub fn new(canvas: Array2<u8>, valid: Array2<u8>, atlas: UvAtlas) -> Result<Self> {
        check_canvas_dims(canvas.shape(), &atlas)?;
        if canvas.shape() != valid.shape() {
            return Err(Error::ShapeMismatch("canvas/valid shape mismatch".into()));
        }
        let mut canvas = canvas;
        // Normalize: anything outside the mask is forced to zero.
        ndarray::Zip::from(&mut canvas).and(&valid).for_each(|c, v| {
            if *v == 0 {
                *c = 0;
            }
        });
        Ok(Self { canvas, valid, atlas })
    }

    /// Bypasses invariant normalization. Exists for fuzzing the
    /// never-read-invalid-cells contract; not for production use.
    #[doc(hidden)]
    pub fn new_unchecked(canvas: Array2<u8>, valid: Array2<u8>, atlas: UvAtlas) -> Self {
        Self { canvas, valid, atlas }
    }

    pub fn empty(atlas: UvAtlas) -> Self {
        Self {
            canvas: Array2::zeros((atlas.height(), atlas.width())),
            valid: Array2::zeros((atlas.height(), atlas.width())),
            atlas,
        }
    }

    pub fn atlas(&self) -> &UvAtlas {
        &self.atlas
    }

    pub fn canvas(&self) -> &Array2<u8> {
        &self.canvas
    }

    pub fn valid(&self) -> &Array2<u8> {
        &self.valid
    }

    pub fn is_valid(&self, cx: usize, cy: usize) -> bool {
        self.valid[[cy, cx]] == 1
    }

    /// Label at a cell, `None` when the cell is invalid.
    pub fn get(&self, cx: usize, cy: usize) -> Option<u8> {
        if self.is_valid(cx, cy) {
            Some(self.canvas[[cy, cx]])
        } else {
            None
        }
    }

    pub fn valid_count(&self) -> usize {
        self.valid.iter().filter(|v| **v == 1).count()
    }
}

/// Pose-invariant 3-channel appearance in UV coordinates with a validity
/// mask. Intensities outside the mask are zero and never sampled.
#[derive(Debug, Clone, PartialEq)]
pub struct UvTextureMap {
    canvas: Array3<f32>,
    valid: Array2<u8>,
    atlas: UvAtlas,
}

impl UvTextureMap {
    pub fn new(canvas: Array3<f32>, valid: Array2<u8>, atlas: UvAtlas) -> Result<Self> {
        if canvas.shape()[0] != 3 {
            return Err(Error::ShapeMismatch(format!(
                "UV texture canvas expects (3, H, W), got {:?}",
                canvas.shape()
            )));
        }
        check_canvas_dims(&canvas.shape()[1..], &atlas)?;
        if canvas.shape()[1..] != *valid.shape() {
            return Err(Error::ShapeMismatch("canvas/valid shape mismatch".into()));
        }
        if let Some(bad) = canvas.iter().find(|x| !x.is_finite() || **x < 0.0 || **x > 1.0) {
            return Err(Error::InvalidValue(format!(
                "UV texture value {bad} outside [0,1]"
            )));
        }
        let mut canvas = canvas;
        for c in 0..3 {
            let mut plane = canvas.index_axis_mut(ndarray::Axis(0), c);
            ndarray::Zip::from(&mut plane).and(&valid).for_each(|p, v| {
                if *v == 0 {
                    *p = 0.0;
                }
            });
        }
        Ok(Self { canvas, valid, atlas })
    }

    #[doc(hidden)]
    pub fn new_unchecked(canvas: Array3<f32>, valid: Array2<u8>, atlas: UvAtlas) -> Self {
        Self { canvas, valid, atlas }
    }

    pub fn empty(atlas: UvAtlas) -> Self {
        Self {
            canvas: Array3::zeros((3, atlas.height(), atlas.width())),
            valid: Array2::zeros((atlas.height(), atlas.width())),
            atlas,
        }
    }

    pub fn atlas(&self) -> &UvAtlas {
        &self.atlas
    }

    pub fn canvas(&self) -> &Array3<f32> {
        &self.canvas
    }

    pub fn valid(&self) -> &Array2<u8> {
        &self.valid
    }

    pub fn is_valid(&self, cx: usize, cy: usize) -> bool {
        self.valid[[cy, cx]] == 1
    }

    pub fn get(&self, cx: usize, cy: usize) -> Option<[f32; 3]> {
        if self.is_valid(cx, cy) {
            Some([
                self.canvas[[0, cy, cx]],
                self.canvas[[1, cy, cx]],
                self.canvas[[2, cy, cx]],
            ])
        } else {
            None
        }
    }

    pub fn valid_count(&self) -> usize {
        self.valid.iter().filter(|v| **v == 1).count()
    }
}

fn check_canvas_dims(shape: &[usize], atlas: &UvAtlas) -> Result<()> {
    if shape != [atlas.height(), atlas.width()] {
        return Err(Error::AtlasMismatch(format!(
            "canvas {shape:?} does not match atlas {}x{}",
            atlas.width(),
            atlas.height()
        )));
    }
    Ok(())
}
