use ndarray::{Array2, Array3, Axis};

use crate::error::{Error, Result};

/// Encode a label map into stacked binary channel planes (C, H, W).
/// Planes sum to one at every pixel.
pub fn encode_onehot(labels: &Array2<u8>, classes: usize) -> Result<Array3<f32>> {
    let (h, w) = labels.dim();
    let mut planes = Array3::zeros((classes, h, w));
    for ((y, x), &l) in labels.indexed_iter() {
        if l as usize >= classes {
            return Err(Error::InvalidValue(format!(
                "label {l} at ({x},{y}) out of range for {classes} classes"
            )));
        }
        planes[[l as usize, y, x]] = 1.0;
    }
    Ok(planes)
}

/// Argmax decode; exact inverse of `encode_onehot` for admissible maps.
pub fn decode_onehot(planes: &Array3<f32>) -> Array2<u8> {
    let (c, h, w) = planes.dim();
    let mut labels = Array2::zeros((h, w));
    for y in 0..h {
        for x in 0..w {
            let mut best = 0usize;
            let mut best_v = planes[[0, y, x]];
            for k in 1..c {
                let v = planes[[k, y, x]];
                if v > best_v {
                    best_v = v;
                    best = k;
                }
            }
            labels[[y, x]] = best as u8;
        }
    }
    labels
}

/// Stack several channel-first blocks into one (C, H, W) tensor.
pub fn concat_channels(blocks: &[ndarray::ArrayView3<f32>]) -> Array3<f32> {
    ndarray::concatenate(
        Axis(0),
        &blocks.iter().map(|b| b.view()).collect::<Vec<_>>(),
    )
    .expect("channel blocks share spatial dims")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pixel_plane() {
        let m = Array2::from_elem((1, 1), 3u8);
        let p = encode_onehot(&m, 7).unwrap();
        for k in 0..7 {
            assert_eq!(p[[k, 0, 0]], if k == 3 { 1.0 } else { 0.0 });
        }
    }

    #[test]
    fn background_map_hits_plane_zero() {
        let m = Array2::zeros((4, 5));
        let p = encode_onehot(&m, 15).unwrap();
        assert!(p.index_axis(Axis(0), 0).iter().all(|v| *v == 1.0));
        assert_eq!(p.sum(), 20.0);
    }

    #[test]
    fn out_of_range_rejected() {
        let m = Array2::from_elem((1, 1), 7u8);
        assert!(encode_onehot(&m, 7).is_err());
    }
}
