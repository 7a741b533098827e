use std::fmt;

use super::maps::{GarmentMap, PoseMap, RgbImage, SilhouetteMask, GARMENT_CLASSES, POSE_CLASSES};
use super::triplet::{ImageTriplet, SourceTriplet};
use super::warp::WarpField;

/// One violated invariant: which rule, how many pixels, and the first
/// offending pixel for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: String,
    pub pixels: usize,
    pub first: Option<(usize, usize)>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first {
            Some((x, y)) => write!(
                f,
                "{} ({} pixels, first at ({x},{y}))",
                self.rule, self.pixels
            ),
            None => write!(f, "{} ({} pixels)", self.rule, self.pixels),
        }
    }
}

/// Reporting-only validation outcome; an empty report means pass.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    fn record(&mut self, rule: &str, pixels: usize, first: Option<(usize, usize)>) {
        if pixels > 0 {
            self.violations.push(Violation { rule: rule.to_string(), pixels, first });
        }
    }

    /// Does any violation mention this rule fragment?
    pub fn names(&self, rule_fragment: &str) -> bool {
        self.violations.iter().any(|v| v.rule.contains(rule_fragment))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            for v in &self.violations {
                writeln!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

pub trait Validate {
    fn validate(&self) -> ValidationReport;
}

/// Count pixels failing a predicate over (x, y).
fn scan(
    width: usize,
    height: usize,
    mut bad: impl FnMut(usize, usize) -> bool,
) -> (usize, Option<(usize, usize)>) {
    let mut count = 0;
    let mut first = None;
    for y in 0..height {
        for x in 0..width {
            if bad(x, y) {
                count += 1;
                if first.is_none() {
                    first = Some((x, y));
                }
            }
        }
    }
    (count, first)
}

impl Validate for RgbImage {
    fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let (n, first) = scan(self.width(), self.height(), |x, y| {
            self.pixel(x, y)
                .iter()
                .any(|c| !c.is_finite() || *c < 0.0 || *c > 1.0)
        });
        r.record("intensity out of [0,1]", n, first);
        r
    }
}

impl Validate for SilhouetteMask {
    fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let (n, first) = scan(self.width(), self.height(), |x, y| self.get(x, y) > 1);
        r.record("silhouette not binary", n, first);
        r
    }
}

impl Validate for PoseMap {
    fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let (n, first) = scan(self.width(), self.height(), |x, y| {
            self.get(x, y) as usize >= POSE_CLASSES
        });
        r.record("label out of range", n, first);
        r
    }
}

impl Validate for GarmentMap {
    fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let (n, first) = scan(self.width(), self.height(), |x, y| {
            self.get(x, y) as usize >= GARMENT_CLASSES
        });
        r.record("label out of range", n, first);
        r
    }
}

impl Validate for SourceTriplet {
    fn validate(&self) -> ValidationReport {
        let mut r = self.pose.validate();
        r.merge(self.sil.validate());
        r.merge(self.gar.validate());
        let (n, first) = scan(self.width(), self.height(), |x, y| {
            self.gar.get(x, y) != 0 && self.sil.get(x, y) == 0
        });
        r.record("garment outside silhouette", n, first);
        let (n, first) = scan(self.width(), self.height(), |x, y| {
            self.pose.get(x, y) != 0 && self.sil.get(x, y) == 0
        });
        r.record("body outside silhouette", n, first);
        r
    }
}

impl Validate for ImageTriplet {
    fn validate(&self) -> ValidationReport {
        let mut r = self.img.validate();
        r.merge(self.sil.validate());
        r.merge(self.gar.validate());
        let (n, first) = scan(self.width(), self.height(), |x, y| {
            self.gar.get(x, y) != 0 && self.sil.get(x, y) == 0
        });
        r.record("garment outside silhouette", n, first);
        r
    }
}

/// Pairwise consistency of a warp field against its pose map: defined
/// exactly on body pixels, matching part labels, and a forward-inverse
/// round trip within one pixel.
pub fn validate_warp(warp: &WarpField, pose: &PoseMap) -> ValidationReport {
    let mut r = ValidationReport::default();
    if warp.width() != pose.width() || warp.height() != pose.height() {
        r.violations.push(Violation {
            rule: "warp/pose dims disagree".into(),
            pixels: usize::MAX,
            first: None,
        });
        return r;
    }
    let (n, first) = scan(pose.width(), pose.height(), |x, y| {
        warp.forward(x, y).is_some() != (pose.get(x, y) != 0)
    });
    r.record("warp domain differs from body pixels", n, first);
    let (n, first) = scan(pose.width(), pose.height(), |x, y| {
        warp.forward(x, y).is_some_and(|e| e.part != pose.get(x, y))
    });
    r.record("warp part label mismatches pose label", n, first);
    let (n, first) = scan(pose.width(), pose.height(), |x, y| {
        warp.forward(x, y).is_some_and(|e| {
            let (cx, cy) = warp.atlas().cell(e.part, e.u, e.v);
            match warp.inverse(cx, cy) {
                Some((ix, iy)) => {
                    (ix as i64 - x as i64).abs() > 1 || (iy as i64 - y as i64).abs() > 1
                }
                None => true,
            }
        })
    });
    r.record("forward-inverse round trip beyond one pixel", n, first);
    r
}
