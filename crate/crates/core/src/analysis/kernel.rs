use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Value of the exponential kernel right at the cutoff: `exp(-3)`.
pub const EXPONENTIAL_DECAY_AT_CUTOFF: f64 = 0.049_787_068_367_863_944;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelKind {
    /// `1 - d / cutoff`, reaching zero at the cutoff.
    #[default]
    Linear,
    /// `exp(-3 d / cutoff)` up to the cutoff, zero beyond it.
    Exponential,
}

impl KernelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            KernelKind::Linear => "linear",
            KernelKind::Exponential => "exponential",
        }
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KernelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linear" => Ok(KernelKind::Linear),
            "exponential" | "exp" => Ok(KernelKind::Exponential),
            other => Err(format!("unknown kernel `{other}` (expected linear or exponential)")),
        }
    }
}

/// A word-distance proximity function: 1 at distance zero, strictly
/// decreasing, and exactly zero past `delta_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProximityKernel {
    pub kind: KernelKind,
    pub delta_s: u32,
}

impl ProximityKernel {
    pub fn new(kind: KernelKind, delta_s: u32) -> Self {
        assert!(delta_s >= 1, "proximity cutoff must be at least 1");
        ProximityKernel { kind, delta_s }
    }

    pub fn linear(delta_s: u32) -> Self {
        Self::new(KernelKind::Linear, delta_s)
    }

    pub fn eval(&self, delta: u64) -> f64 {
        let cutoff = u64::from(self.delta_s);
        if delta > cutoff {
            return 0.0;
        }
        match self.kind {
            // Integer subtraction first keeps the ramp exactly monotone.
            KernelKind::Linear => (cutoff - delta) as f64 / cutoff as f64,
            KernelKind::Exponential => (-3.0 * delta as f64 / cutoff as f64).exp(),
        }
    }
}

pub fn proximity(delta: u64, kernel: &ProximityKernel) -> f64 {
    kernel.eval(delta)
}
