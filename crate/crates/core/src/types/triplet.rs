use super::maps::{GarmentMap, PoseMap, RgbImage, SilhouetteMask};
use crate::error::{Error, Result};

/// Source conditioning for the label-space networks: pose, silhouette and
/// garment maps of the observed image.
#[derive(Debug, Clone)]
pub struct SourceTriplet {
    pub pose: PoseMap,
    pub sil: SilhouetteMask,
    pub gar: GarmentMap,
}

impl SourceTriplet {
    pub fn new(pose: PoseMap, sil: SilhouetteMask, gar: GarmentMap) -> Result<Self> {
        let dims = (sil.width(), sil.height());
        if (pose.width(), pose.height()) != dims || (gar.width(), gar.height()) != dims {
            return Err(Error::DimMismatch(format!(
                "source triplet members disagree: pose {}x{}, sil {}x{}, gar {}x{}",
                pose.width(),
                pose.height(),
                sil.width(),
                sil.height(),
                gar.width(),
                gar.height()
            )));
        }
        Ok(Self { pose, sil, gar })
    }

    pub fn width(&self) -> usize {
        self.sil.width()
    }

    pub fn height(&self) -> usize {
        self.sil.height()
    }
}

/// Source conditioning for the rendering network: image, silhouette and
/// garment maps of the observed image.
#[derive(Debug, Clone)]
pub struct ImageTriplet {
    pub img: RgbImage,
    pub sil: SilhouetteMask,
    pub gar: GarmentMap,
}

impl ImageTriplet {
    pub fn new(img: RgbImage, sil: SilhouetteMask, gar: GarmentMap) -> Result<Self> {
        let dims = (sil.width(), sil.height());
        if (img.width(), img.height()) != dims || (gar.width(), gar.height()) != dims {
            return Err(Error::DimMismatch(format!(
                "image triplet members disagree: img {}x{}, sil {}x{}, gar {}x{}",
                img.width(),
                img.height(),
                sil.width(),
                sil.height(),
                gar.width(),
                gar.height()
            )));
        }
        Ok(Self { img, sil, gar })
    }

    pub fn width(&self) -> usize {
        self.sil.width()
    }

    pub fn height(&self) -> usize {
        self.sil.height()
    }
}
