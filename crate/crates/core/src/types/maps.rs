use ndarray::{Array2, Array3};

use crate::error::{Error, Result};

/// Number of pose-map classes: background plus 14 body parts.
pub const POSE_CLASSES: usize = 15;
/// Number of garment classes: background, hair, face, skin, shoes, top, bottom.
pub const GARMENT_CLASSES: usize = 7;
/// Body parts carrying a UV chart (pose labels 1..=14).
pub const BODY_PARTS: usize = 14;

pub mod garment {
    pub const BACKGROUND: u8 = 0;
    pub const HAIR: u8 = 1;
    pub const FACE: u8 = 2;
    pub const SKIN: u8 = 3;
    pub const SHOES: u8 = 4;
    pub const TOP: u8 = 5;
    pub const BOTTOM: u8 = 6;
}

/// 3-channel image with intensities in [0,1], stored channel-first (3, H, W).
#[derive(Debug, Clone, PartialEq)]
pub struct RgbImage {
    data: Array3<f32>,
}

impl RgbImage {
    pub fn new(data: Array3<f32>) -> Result<Self> {
        if data.shape()[0] != 3 {
            return Err(Error::ShapeMismatch(format!(
                "RgbImage expects (3, H, W), got {:?}",
                data.shape()
            )));
        }
        if let Some(bad) = data.iter().find(|x| !x.is_finite() || **x < 0.0 || **x > 1.0) {
            return Err(Error::InvalidValue(format!(
                "RgbImage channel value {bad} outside [0,1]"
            )));
        }
        Ok(Self { data })
    }

    pub fn zeros(width: usize, height: usize) -> Self {
        Self { data: Array3::zeros((3, height, width)) }
    }

    pub fn width(&self) -> usize {
        self.data.shape()[2]
    }

    pub fn height(&self) -> usize {
        self.data.shape()[1]
    }

    pub fn data(&self) -> &Array3<f32> {
        &self.data
    }

    pub fn pixel(&self, x: usize, y: usize) -> [f32; 3] {
        [self.data[[0, y, x]], self.data[[1, y, x]], self.data[[2, y, x]]]
    }

    pub fn into_data(self) -> Array3<f32> {
        self.data
    }
}

/// Binary foreground mask of the dressed person.
#[derive(Debug, Clone, PartialEq)]
pub struct SilhouetteMask {
    data: Array2<u8>,
}

impl SilhouetteMask {
    pub fn new(data: Array2<u8>) -> Result<Self> {
        if let Some(bad) = data.iter().find(|v| **v > 1) {
            return Err(Error::InvalidValue(format!(
                "SilhouetteMask value {bad} is not binary"
            )));
        }
        Ok(Self { data })
    }

    pub fn zeros(width: usize, height: usize) -> Self {
        Self { data: Array2::zeros((height, width)) }
    }

    pub fn width(&self) -> usize {
        self.data.shape()[1]
    }

    pub fn height(&self) -> usize {
        self.data.shape()[0]
    }

    pub fn data(&self) -> &Array2<u8> {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[[y, x]]
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|v| **v == 1).count()
    }

    pub fn into_data(self) -> Array2<u8> {
        self.data
    }
}

/// Body-part labels of the undressed body: 0 = background, 1..=14 parts.
#[derive(Debug, Clone, PartialEq)]
pub struct PoseMap {
    data: Array2<u8>,
}

impl PoseMap {
    pub fn new(data: Array2<u8>) -> Result<Self> {
        if let Some(bad) = data.iter().find(|v| **v as usize >= POSE_CLASSES) {
            return Err(Error::InvalidValue(format!("pose label {bad} out of range")));
        }
        Ok(Self { data })
    }

    pub fn zeros(width: usize, height: usize) -> Self {
        Self { data: Array2::zeros((height, width)) }
    }

    pub fn width(&self) -> usize {
        self.data.shape()[1]
    }

    pub fn height(&self) -> usize {
        self.data.shape()[0]
    }

    pub fn data(&self) -> &Array2<u8> {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[[y, x]]
    }

    pub fn into_data(self) -> Array2<u8> {
        self.data
    }
}

/// Garment-class labels of the dressed body.
#[derive(Debug, Clone, PartialEq)]
pub struct GarmentMap {
    data: Array2<u8>,
}

impl GarmentMap {
    pub fn new(data: Array2<u8>) -> Result<Self> {
        if let Some(bad) = data.iter().find(|v| **v as usize >= GARMENT_CLASSES) {
            return Err(Error::InvalidValue(format!("garment label {bad} out of range")));
        }
        Ok(Self { data })
    }

    pub fn zeros(width: usize, height: usize) -> Self {
        Self { data: Array2::zeros((height, width)) }
    }

    pub fn width(&self) -> usize {
        self.data.shape()[1]
    }

    pub fn height(&self) -> usize {
        self.data.shape()[0]
    }

    pub fn data(&self) -> &Array2<u8> {
        &self.data
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[[y, x]]
    }

    pub fn into_data(self) -> Array2<u8> {
        self.data
    }
}
