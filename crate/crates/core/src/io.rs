//! File formats: 8-bit single-channel PNGs for label maps with a JSON
//! palette sidecar, RGB PNGs for images, raw little-endian records for warp
//! fields, and paired canvas/validity PNGs plus manifest for UV maps.

use std::fs;
use std::path::Path;

use image::{GrayImage, ImageBuffer, Luma, Rgb};
use ndarray::{Array2, Array3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{
    GarmentMap, PaletteEntry, PoseMap, RgbImage, SilhouetteMask, UvAtlas, UvLabelMap,
    UvTextureMap, WarpEntry, WarpField,
};

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |e| Error::io(path, e)
}

fn img_err(path: &Path) -> impl FnOnce(image::ImageError) -> Error + '_ {
    move |e| Error::format(path, e.to_string())
}

/// Save raw labels (or a binary mask) as an 8-bit grayscale PNG.
pub fn save_label_png(path: &Path, labels: &Array2<u8>) -> Result<()> {
    let (h, w) = labels.dim();
    let img = GrayImage::from_fn(w as u32, h as u32, |x, y| {
        Luma([labels[[y as usize, x as usize]]])
    });
    img.save(path).map_err(img_err(path))
}

pub fn load_label_png(path: &Path) -> Result<Array2<u8>> {
    let img = image::open(path).map_err(img_err(path))?.into_luma8();
    let (w, h) = img.dimensions();
    Ok(Array2::from_shape_fn((h as usize, w as usize), |(y, x)| {
        img.get_pixel(x as u32, y as u32)[0]
    }))
}

/// Save a [0,1] float image as an 8-bit RGB PNG (values quantized by
/// round-to-nearest).
pub fn save_rgb_png(path: &Path, img: &RgbImage) -> Result<()> {
    let (w, h) = (img.width(), img.height());
    let buf: ImageBuffer<Rgb<u8>, Vec<u8>> = ImageBuffer::from_fn(w as u32, h as u32, |x, y| {
        let p = img.pixel(x as usize, y as usize);
        Rgb([quant(p[0]), quant(p[1]), quant(p[2])])
    });
    buf.save(path).map_err(img_err(path))
}

fn quant(v: f32) -> u8 {
    (v * 255.0).round().clamp(0.0, 255.0) as u8
}

pub fn load_rgb_png(path: &Path) -> Result<RgbImage> {
    let img = image::open(path).map_err(img_err(path))?.into_rgb8();
    let (w, h) = img.dimensions();
    let mut data = Array3::zeros((3, h as usize, w as usize));
    for y in 0..h {
        for x in 0..w {
            let p = img.get_pixel(x, y);
            for c in 0..3 {
                data[[c, y as usize, x as usize]] = p[c] as f32 / 255.0;
            }
        }
    }
    RgbImage::new(data)
}

pub fn save_palette(path: &Path, palette: &[PaletteEntry]) -> Result<()> {
    let text = serde_json::to_string_pretty(palette)
        .map_err(|e| Error::format(path, e.to_string()))?;
    fs::write(path, text).map_err(io_err(path))
}

pub fn load_palette(path: &Path) -> Result<Vec<PaletteEntry>> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    serde_json::from_str(&text).map_err(|e| Error::format(path, e.to_string()))
}

/// Warp record layout: row-major pixels, each `(i16 part, u16 u, u16 v)`
/// little-endian. Part is -1 on background; u and v are fixed-point
/// fractions over 65535.
pub fn save_warp(path: &Path, warp: &WarpField) -> Result<()> {
    let (w, h) = (warp.width(), warp.height());
    let mut bytes = Vec::with_capacity(w * h * 6);
    for y in 0..h {
        for x in 0..w {
            match warp.forward(x, y) {
                Some(e) => {
                    bytes.extend_from_slice(&(e.part as i16).to_le_bytes());
                    bytes.extend_from_slice(&fixed(e.u).to_le_bytes());
                    bytes.extend_from_slice(&fixed(e.v).to_le_bytes());
                }
                None => {
                    bytes.extend_from_slice(&(-1i16).to_le_bytes());
                    bytes.extend_from_slice(&0u16.to_le_bytes());
                    bytes.extend_from_slice(&0u16.to_le_bytes());
                }
            }
        }
    }
    fs::write(path, bytes).map_err(io_err(path))
}

fn fixed(v: f32) -> u16 {
    (v * 65535.0).round().clamp(0.0, 65535.0) as u16
}

pub fn load_warp(path: &Path, width: usize, height: usize, atlas: UvAtlas) -> Result<WarpField> {
    let bytes = fs::read(path).map_err(io_err(path))?;
    if bytes.len() != width * height * 6 {
        return Err(Error::format(
            path,
            format!("expected {} bytes for {width}x{height}, got {}", width * height * 6, bytes.len()),
        ));
    }
    let mut entries = Array2::from_elem((height, width), None);
    for y in 0..height {
        for x in 0..width {
            let off = (y * width + x) * 6;
            let part = i16::from_le_bytes([bytes[off], bytes[off + 1]]);
            if part < 0 {
                continue;
            }
            let u = u16::from_le_bytes([bytes[off + 2], bytes[off + 3]]) as f32 / 65535.0;
            let v = u16::from_le_bytes([bytes[off + 4], bytes[off + 5]]) as f32 / 65535.0;
            entries[[y, x]] = Some(WarpEntry { part: part as u8, u, v });
        }
    }
    WarpField::from_entries(width, height, atlas, &entries)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UvManifest {
    pub kind: String,
    pub canvas_width: usize,
    pub canvas_height: usize,
    pub canvas_file: String,
    pub valid_file: String,
}

/// Persist a UV label map as canvas + validity PNGs plus a manifest.
pub fn save_uv_label(dir: &Path, stem: &str, map: &UvLabelMap) -> Result<()> {
    let canvas_file = format!("{stem}_canvas.png");
    let valid_file = format!("{stem}_valid.png");
    save_label_png(&dir.join(&canvas_file), map.canvas())?;
    save_label_png(&dir.join(&valid_file), map.valid())?;
    let manifest = UvManifest {
        kind: "labels".into(),
        canvas_width: map.atlas().width(),
        canvas_height: map.atlas().height(),
        canvas_file,
        valid_file,
    };
    let path = dir.join(format!("{stem}_manifest.json"));
    let text = serde_json::to_string_pretty(&manifest)
        .map_err(|e| Error::format(&path, e.to_string()))?;
    fs::write(&path, text).map_err(io_err(&path))
}

pub fn load_uv_label(dir: &Path, stem: &str) -> Result<UvLabelMap> {
    let manifest = load_uv_manifest(dir, stem)?;
    let canvas = load_label_png(&dir.join(&manifest.canvas_file))?;
    let valid = load_label_png(&dir.join(&manifest.valid_file))?;
    let atlas = UvAtlas::new(manifest.canvas_width, manifest.canvas_height)?;
    UvLabelMap::new(canvas, valid, atlas)
}

pub fn save_uv_texture(dir: &Path, stem: &str, map: &UvTextureMap) -> Result<()> {
    let canvas_file = format!("{stem}_canvas.png");
    let valid_file = format!("{stem}_valid.png");
    let img = RgbImage::new(map.canvas().clone()).expect("uv canvas is a valid image");
    save_rgb_png(&dir.join(&canvas_file), &img)?;
    save_label_png(&dir.join(&valid_file), map.valid())?;
    let manifest = UvManifest {
        kind: "texture".into(),
        canvas_width: map.atlas().width(),
        canvas_height: map.atlas().height(),
        canvas_file,
        valid_file,
    };
    let path = dir.join(format!("{stem}_manifest.json"));
    let text = serde_json::to_string_pretty(&manifest)
        .map_err(|e| Error::format(&path, e.to_string()))?;
    fs::write(&path, text).map_err(io_err(&path))
}

pub fn load_uv_texture(dir: &Path, stem: &str) -> Result<UvTextureMap> {
    let manifest = load_uv_manifest(dir, stem)?;
    let canvas = load_rgb_png(&dir.join(&manifest.canvas_file))?;
    let valid = load_label_png(&dir.join(&manifest.valid_file))?;
    let atlas = UvAtlas::new(manifest.canvas_width, manifest.canvas_height)?;
    UvTextureMap::new(canvas.into_data(), valid, atlas)
}

fn load_uv_manifest(dir: &Path, stem: &str) -> Result<UvManifest> {
    let path = dir.join(format!("{stem}_manifest.json"));
    let text = fs::read_to_string(&path).map_err(io_err(&path))?;
    serde_json::from_str(&text).map_err(|e| Error::format(&path, e.to_string()))
}

pub fn save_mask_png(path: &Path, mask: &SilhouetteMask) -> Result<()> {
    save_label_png(path, mask.data())
}

pub fn load_mask_png(path: &Path) -> Result<SilhouetteMask> {
    SilhouetteMask::new(load_label_png(path)?)
}

pub fn save_pose_png(path: &Path, pose: &PoseMap) -> Result<()> {
    save_label_png(path, pose.data())
}

pub fn load_pose_png(path: &Path) -> Result<PoseMap> {
    PoseMap::new(load_label_png(path)?)
}

pub fn save_garment_png(path: &Path, gar: &GarmentMap) -> Result<()> {
    save_label_png(path, gar.data())
}

pub fn load_garment_png(path: &Path) -> Result<GarmentMap> {
    GarmentMap::new(load_label_png(path)?)
}
