use serde::{Deserialize, Serialize};

use super::kernel::{KernelKind, ProximityKernel};
use crate::names::NameType;

/// Processing parameters for scoring and thresholding.
///
/// The defaults (cutoff 40 words, frequency thresholds 0.20 for characters and
/// 0.40 for places, interaction threshold 0.35) are the values the tool was
/// originally demonstrated with on the Nibelungenlied.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisParams {
    pub delta_s: u32,
    pub f_t_char: f64,
    pub f_t_place: f64,
    pub i_t: f64,
    #[serde(default)]
    pub kernel: KernelKind,
}

impl AnalysisParams {
    pub const DEFAULT_DELTA_S: u32 = 40;
    pub const DEFAULT_F_T_CHAR: f64 = 0.20;
    pub const DEFAULT_F_T_PLACE: f64 = 0.40;
    pub const DEFAULT_I_T: f64 = 0.35;

    pub fn validate(&self) -> Result<(), ParamError> {
        if self.delta_s < 1 {
            return Err(ParamError::DeltaS);
        }
        for (name, value) in [
            ("f_t_char", self.f_t_char),
            ("f_t_place", self.f_t_place),
            ("i_t", self.i_t),
        ] {
            if !(0.0..=1.0).contains(&value) {
                return Err(ParamError::Threshold { name, value });
            }
        }
        Ok(())
    }

    pub fn kernel(&self) -> ProximityKernel {
        ProximityKernel::new(self.kernel, self.delta_s)
    }

    pub fn frequency_threshold(&self, ntype: NameType) -> f64 {
        match ntype {
            NameType::Character => self.f_t_char,
            NameType::Place => self.f_t_place,
        }
    }
}

impl Default for AnalysisParams {
    fn default() -> Self {
        AnalysisParams {
            delta_s: Self::DEFAULT_DELTA_S,
            f_t_char: Self::DEFAULT_F_T_CHAR,
            f_t_place: Self::DEFAULT_F_T_PLACE,
            i_t: Self::DEFAULT_I_T,
            kernel: KernelKind::Linear,
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParamError {
    #[error("delta_s must be at least 1")]
    DeltaS,
    #[error("{name} = {value} is outside [0, 1]")]
    Threshold { name: &'static str, value: f64 },
}
