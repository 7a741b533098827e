use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::types::{garment, POSE_CLASSES};

/// Body-part labels used by the pose map. Label 0 is background.
pub mod part {
    pub const HIP: u8 = 1;
    pub const TORSO: u8 = 2;
    pub const NECK: u8 = 3;
    pub const HEAD: u8 = 4;
    pub const L_UPPER_ARM: u8 = 5;
    pub const L_LOWER_ARM: u8 = 6;
    pub const R_UPPER_ARM: u8 = 7;
    pub const R_LOWER_ARM: u8 = 8;
    pub const L_UPPER_LEG: u8 = 9;
    pub const L_LOWER_LEG: u8 = 10;
    pub const L_FOOT: u8 = 11;
    pub const R_UPPER_LEG: u8 = 12;
    pub const R_LOWER_LEG: u8 = 13;
    pub const R_FOOT: u8 = 14;
}

/// Static skeleton topology: where each part attaches on its parent, its
/// rest direction, joint limits and garment class. Geometry magnitudes
/// (lengths, widths) are per-figure and live in [`FigureSpec`].
#[derive(Debug, Clone, Copy)]
pub struct PartDef {
    pub label: u8,
    pub parent: Option<u8>,
    /// Attachment point along the parent axis in [0,1].
    pub attach_a: f32,
    /// Attachment offset across the parent axis in body half-widths.
    pub attach_t: f32,
    /// Rest direction relative to the parent direction, radians.
    pub rest_angle: f32,
    /// Joint limits for the pose angle added on top of the rest direction.
    pub min_angle: f32,
    pub max_angle: f32,
    pub garment: u8,
    /// Head is rendered as an ellipse, everything else as a box.
    pub ellipse: bool,
}

use part::*;
use std::f32::consts::{FRAC_PI_2, PI};

pub const PART_DEFS: [PartDef; 14] = [
    PartDef { label: HIP, parent: None, attach_a: 0.0, attach_t: 0.0, rest_angle: 0.0, min_angle: -0.3, max_angle: 0.3, garment: garment::BOTTOM, ellipse: false },
    PartDef { label: TORSO, parent: Some(HIP), attach_a: 1.0, attach_t: 0.0, rest_angle: 0.0, min_angle: -0.35, max_angle: 0.35, garment: garment::TOP, ellipse: false },
    PartDef { label: NECK, parent: Some(TORSO), attach_a: 1.0, attach_t: 0.0, rest_angle: 0.0, min_angle: -0.3, max_angle: 0.3, garment: garment::SKIN, ellipse: false },
    PartDef { label: HEAD, parent: Some(NECK), attach_a: 1.0, attach_t: 0.0, rest_angle: 0.0, min_angle: -0.35, max_angle: 0.35, garment: garment::HAIR, ellipse: true },
    PartDef { label: L_UPPER_ARM, parent: Some(TORSO), attach_a: 0.94, attach_t: -1.0, rest_angle: -FRAC_PI_2, min_angle: -1.5, max_angle: 1.5, garment: garment::TOP, ellipse: false },
    PartDef { label: L_LOWER_ARM, parent: Some(L_UPPER_ARM), attach_a: 1.0, attach_t: 0.0, rest_angle: 0.0, min_angle: -2.0, max_angle: 0.3, garment: garment::SKIN, ellipse: false },
    PartDef { label: R_UPPER_ARM, parent: Some(TORSO), attach_a: 0.94, attach_t: 1.0, rest_angle: FRAC_PI_2, min_angle: -1.5, max_angle: 1.5, garment: garment::TOP, ellipse: false },
    PartDef { label: R_LOWER_ARM, parent: Some(R_UPPER_ARM), attach_a: 1.0, attach_t: 0.0, rest_angle: 0.0, min_angle: -0.3, max_angle: 2.0, garment: garment::SKIN, ellipse: false },
    PartDef { label: L_UPPER_LEG, parent: Some(HIP), attach_a: 0.05, attach_t: -0.55, rest_angle: PI, min_angle: -0.9, max_angle: 0.9, garment: garment::BOTTOM, ellipse: false },
    PartDef { label: L_LOWER_LEG, parent: Some(L_UPPER_LEG), attach_a: 1.0, attach_t: 0.0, rest_angle: 0.0, min_angle: -0.15, max_angle: 1.6, garment: garment::SKIN, ellipse: false },
    PartDef { label: L_FOOT, parent: Some(L_LOWER_LEG), attach_a: 1.0, attach_t: 0.0, rest_angle: FRAC_PI_2, min_angle: -0.5, max_angle: 0.5, garment: garment::SHOES, ellipse: false },
    PartDef { label: R_UPPER_LEG, parent: Some(HIP), attach_a: 0.05, attach_t: 0.55, rest_angle: PI, min_angle: -0.9, max_angle: 0.9, garment: garment::BOTTOM, ellipse: false },
    PartDef { label: R_LOWER_LEG, parent: Some(R_UPPER_LEG), attach_a: 1.0, attach_t: 0.0, rest_angle: 0.0, min_angle: -1.6, max_angle: 0.15, garment: garment::SKIN, ellipse: false },
    PartDef { label: R_FOOT, parent: Some(R_LOWER_LEG), attach_a: 1.0, attach_t: 0.0, rest_angle: -FRAC_PI_2, min_angle: -0.5, max_angle: 0.5, garment: garment::SHOES, ellipse: false },
];

pub fn part_def(label: u8) -> &'static PartDef {
    &PART_DEFS[(label - 1) as usize]
}

/// Per-part geometry as fractions of the image height.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PartGeom {
    pub len: f32,
    pub body_hw: f32,
    pub dress_hw: f32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Pattern {
    Solid,
    Stripes { count: u8 },
    Checker { count: u8 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GarmentStyle {
    pub base: [f32; 3],
    pub second: [f32; 3],
    pub pattern: Pattern,
}

impl GarmentStyle {
    pub fn solid(base: [f32; 3]) -> Self {
        Self { base, second: base, pattern: Pattern::Solid }
    }

    /// Color at chart-local coordinates; u runs around the part, v along it.
    pub fn color(&self, u: f32, v: f32) -> [f32; 3] {
        let pick_second = match self.pattern {
            Pattern::Solid => false,
            Pattern::Stripes { count } => ((v * count as f32) as i32) % 2 == 1,
            Pattern::Checker { count } => {
                (((u * 2.0 * count as f32) as i32) + ((v * count as f32) as i32)) % 2 == 1
            }
        };
        if pick_second {
            self.second
        } else {
            self.base
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaceParams {
    /// Eye center offset from the face midline, fraction of head rx.
    pub eye_dx: f32,
    /// Eye vertical position along the head axis, fraction of head length.
    pub eye_a: f32,
    pub eye_r: f32,
    pub mouth_a: f32,
    pub mouth_hw: f32,
}

/// A procedurally generated subject: per-part geometry, garment styles and
/// face layout, deterministic from its seed. Limb geometry is mirrored
/// left-right so a T pose renders symmetric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureSpec {
    pub seed: u64,
    pub geom: [PartGeom; POSE_CLASSES],
    pub styles: [GarmentStyle; 7],
    pub face: FaceParams,
}

fn jitter(rng: &mut impl Rng, base: f32, rel: f32) -> f32 {
    base * (1.0 + rng.gen_range(-rel..rel))
}

fn color_in(rng: &mut impl Rng, lo: f32, hi: f32) -> [f32; 3] {
    [rng.gen_range(lo..hi), rng.gen_range(lo..hi), rng.gen_range(lo..hi)]
}

/// Deterministic figure generation.
pub fn generate_figure(seed: u64) -> FigureSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5f1_66_u64.wrapping_mul(0x9e37_79b9_7f4a_7c15));

    let zero = PartGeom { len: 0.0, body_hw: 0.0, dress_hw: 0.0 };
    let mut geom = [zero; POSE_CLASSES];

    let hip_hw = jitter(&mut rng, 0.072, 0.12);
    geom[HIP as usize] = PartGeom { len: jitter(&mut rng, 0.075, 0.1), body_hw: hip_hw, dress_hw: hip_hw + 0.022 };
    let torso_hw = jitter(&mut rng, 0.072, 0.12);
    geom[TORSO as usize] = PartGeom { len: jitter(&mut rng, 0.19, 0.08), body_hw: torso_hw, dress_hw: torso_hw + 0.026 };
    let neck_hw = jitter(&mut rng, 0.016, 0.1);
    geom[NECK as usize] = PartGeom { len: jitter(&mut rng, 0.035, 0.1), body_hw: neck_hw, dress_hw: neck_hw };
    let head_rx = jitter(&mut rng, 0.042, 0.1);
    geom[HEAD as usize] = PartGeom { len: jitter(&mut rng, 0.11, 0.08), body_hw: head_rx, dress_hw: head_rx };

    let ua = PartGeom {
        len: jitter(&mut rng, 0.14, 0.1),
        body_hw: jitter(&mut rng, 0.019, 0.1),
        dress_hw: 0.0,
    };
    let ua = PartGeom { dress_hw: ua.body_hw + 0.013, ..ua };
    let la_hw = jitter(&mut rng, 0.015, 0.1);
    let la = PartGeom { len: jitter(&mut rng, 0.13, 0.1), body_hw: la_hw, dress_hw: la_hw };
    let ul = PartGeom {
        len: jitter(&mut rng, 0.16, 0.08),
        body_hw: jitter(&mut rng, 0.03, 0.1),
        dress_hw: 0.0,
    };
    let ul = PartGeom { dress_hw: ul.body_hw + 0.015, ..ul };
    let ll_hw = jitter(&mut rng, 0.021, 0.1);
    let ll = PartGeom { len: jitter(&mut rng, 0.15, 0.08), body_hw: ll_hw, dress_hw: ll_hw };
    let ft_hw = jitter(&mut rng, 0.016, 0.1);
    let ft = PartGeom { len: jitter(&mut rng, 0.05, 0.1), body_hw: ft_hw, dress_hw: ft_hw + 0.008 };

    // Mirrored limbs share geometry.
    geom[L_UPPER_ARM as usize] = ua;
    geom[R_UPPER_ARM as usize] = ua;
    geom[L_LOWER_ARM as usize] = la;
    geom[R_LOWER_ARM as usize] = la;
    geom[L_UPPER_LEG as usize] = ul;
    geom[R_UPPER_LEG as usize] = ul;
    geom[L_LOWER_LEG as usize] = ll;
    geom[R_LOWER_LEG as usize] = ll;
    geom[L_FOOT as usize] = ft;
    geom[R_FOOT as usize] = ft;

    let skin = {
        let tone = rng.gen_range(0.0f32..1.0);
        [0.45 + 0.45 * tone, 0.35 + 0.38 * tone, 0.28 + 0.34 * tone]
    };
    let hair = color_in(&mut rng, 0.08, 0.55);
    let shoes = color_in(&mut rng, 0.08, 0.5);
    let face = [
        (skin[0] * 1.06).min(1.0),
        (skin[1] * 1.06).min(1.0),
        (skin[2] * 1.06).min(1.0),
    ];

    let top_pattern = match rng.gen_range(0u8..3) {
        0 => Pattern::Solid,
        1 => Pattern::Stripes { count: rng.gen_range(4..9) },
        _ => Pattern::Checker { count: rng.gen_range(3..7) },
    };
    let bottom_pattern = match rng.gen_range(0u8..2) {
        0 => Pattern::Solid,
        _ => Pattern::Stripes { count: rng.gen_range(3..7) },
    };
    let top = GarmentStyle {
        base: color_in(&mut rng, 0.15, 0.95),
        second: color_in(&mut rng, 0.15, 0.95),
        pattern: top_pattern,
    };
    let bottom = GarmentStyle {
        base: color_in(&mut rng, 0.1, 0.8),
        second: color_in(&mut rng, 0.1, 0.8),
        pattern: bottom_pattern,
    };

    let styles = [
        GarmentStyle::solid([0.0; 3]), // background, never drawn
        GarmentStyle::solid(hair),
        GarmentStyle::solid(face),
        GarmentStyle::solid(skin),
        GarmentStyle::solid(shoes),
        top,
        bottom,
    ];

    let face = FaceParams {
        eye_dx: rng.gen_range(0.3..0.42),
        eye_a: rng.gen_range(0.52..0.62),
        eye_r: rng.gen_range(0.1..0.15),
        mouth_a: rng.gen_range(0.24..0.32),
        mouth_hw: rng.gen_range(0.25..0.4),
    };

    FigureSpec { seed, geom, styles, face }
}

impl FigureSpec {
    pub fn geom(&self, label: u8) -> &PartGeom {
        &self.geom[label as usize]
    }

    pub fn style(&self, garment_class: u8) -> &GarmentStyle {
        &self.styles[garment_class as usize]
    }

    /// Checks the garment coverage rule and basic sanity of the geometry.
    pub fn coverage_ok(&self) -> bool {
        let assignment_ok = PART_DEFS.iter().all(|d| {
            let expected = match d.label {
                TORSO | L_UPPER_ARM | R_UPPER_ARM => garment::TOP,
                HIP | L_UPPER_LEG | R_UPPER_LEG => garment::BOTTOM,
                L_FOOT | R_FOOT => garment::SHOES,
                HEAD => garment::HAIR,
                _ => garment::SKIN,
            };
            d.garment == expected
        });
        let geom_ok = PART_DEFS.iter().all(|d| {
            let g = self.geom(d.label);
            g.len > 0.0 && g.body_hw > 0.0 && g.dress_hw >= g.body_hw
        });
        let symmetric = [
            (L_UPPER_ARM, R_UPPER_ARM),
            (L_LOWER_ARM, R_LOWER_ARM),
            (L_UPPER_LEG, R_UPPER_LEG),
            (L_LOWER_LEG, R_LOWER_LEG),
            (L_FOOT, R_FOOT),
        ]
        .iter()
        .all(|(l, r)| self.geom(*l) == self.geom(*r));
        assignment_ok && geom_ok && symmetric
    }
}
