//! Shared domain types: timestamps, points, channels and unit scores.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Seconds since session start. Always finite and non-negative once
/// validated at the ingest boundary.
pub type Timestamp = f64;

/// Index of a tumbling window, starting at 0.
pub type WindowIndex = u64;

/// A 2D point in pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance(&self, other: &Point2D) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }
}

/// The signals the engine knows about. The first five carry per-window
/// scores; `Identity` feeds attendance only and never enters fusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelId {
    Blink,
    Gaze,
    Emotion,
    Posture,
    Noise,
    Identity,
}

impl ChannelId {
    /// The five channels that contribute to the attention score.
    pub const SCORING: [ChannelId; 5] = [
        ChannelId::Blink,
        ChannelId::Gaze,
        ChannelId::Emotion,
        ChannelId::Posture,
        ChannelId::Noise,
    ];

    pub fn is_scoring(&self) -> bool {
        !matches!(self, ChannelId::Identity)
    }

    pub fn name(&self) -> &'static str {
        match self {
            ChannelId::Blink => "blink",
            ChannelId::Gaze => "gaze",
            ChannelId::Emotion => "emotion",
            ChannelId::Posture => "posture",
            ChannelId::Noise => "noise",
            ChannelId::Identity => "identity",
        }
    }
}

/// A finalized unit score for one scoring channel in one window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelScore {
    pub window: WindowIndex,
    pub channel: ChannelId,
    pub score: f64,
}

/// Clamp a finite value into `[0, 1]`.
pub fn clamp_unit(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("clamp_unit: non-finite input {x}")));
    }
    Ok(x.clamp(0.0, 1.0))
}

/// Mean of a slice that is bit-stable under permutation of its input.
///
/// The slice is sorted into a canonical order before naive summation, and the
/// result is clamped into the closed span of the data, so the mean can never
/// leave `[min, max]` through rounding.
pub fn stable_mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
    let sum: f64 = sorted.iter().sum();
    let mean = sum / sorted.len() as f64;
    Some(mean.clamp(sorted[0], sorted[sorted.len() - 1]))
}

/// Permutation-stable compensated mean.
///
/// Sorts into a canonical order, then applies a Neumaier sum followed by one
/// refinement pass over the deviations. Exact for all-equal inputs and for
/// sums whose true value is representable, which the fusion contract relies
/// on.
pub fn compensated_mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
    let n = sorted.len() as f64;
    let first = neumaier_sum(&sorted) / n;
    let residue: Vec<f64> = sorted.iter().map(|v| v - first).collect();
    let mean = first + neumaier_sum(&residue) / n;
    Some(mean.clamp(sorted[0], sorted[sorted.len() - 1]))
}

fn neumaier_sum(values: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for &v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamp_unit_identity_and_bounds() {
        assert_eq!(clamp_unit(0.5).unwrap(), 0.5);
        assert_eq!(clamp_unit(-0.2).unwrap(), 0.0);
        assert_eq!(clamp_unit(1.7).unwrap(), 1.0);
    }

    #[test]
    fn clamp_unit_rejects_non_finite() {
        assert!(clamp_unit(f64::NAN).is_err());
        assert!(clamp_unit(f64::INFINITY).is_err());
    }

    #[test]
    fn clamp_unit_idempotent() {
        for x in [-3.0, -0.1, 0.0, 0.4, 1.0, 9.0] {
            let once = clamp_unit(x).unwrap();
            assert_eq!(clamp_unit(once).unwrap(), once);
        }
    }

    #[test]
    fn stable_mean_permutation_invariant() {
        let a = [0.3, 0.9, 0.1, 0.7];
        let b = [0.9, 0.1, 0.7, 0.3];
        assert_eq!(stable_mean(&a), stable_mean(&b));
        assert_eq!(stable_mean(&[]), None);
    }

    #[test]
    fn stable_mean_stays_within_span() {
        let vals = vec![0.1; 1531];
        let m = stable_mean(&vals).unwrap();
        assert!(m >= 0.1 && m <= 0.1);
    }

    #[test]
    fn compensated_mean_exact_for_equal_inputs() {
        for s in [0.1, 0.2, 1.0 / 3.0, 0.85, 0.999_999_9] {
            let vals = vec![s; 5];
            assert_eq!(compensated_mean(&vals).unwrap(), s);
        }
    }
}
