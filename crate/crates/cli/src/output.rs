//! Serializable forms of every command's result.

use serde::{Deserialize, Serialize};

use crate::render::{de_num, de_nums, de_opt_num, ser_num, ser_nums, ser_opt_num};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumOut {
    pub n: u32,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub lambda: f64,
    #[serde(serialize_with = "ser_nums", deserialize_with = "de_nums")]
    pub values: Vec<f64>,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub quotient: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualOut {
    pub n: u32,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub w: f64,
    #[serde(serialize_with = "ser_nums", deserialize_with = "de_nums")]
    pub values: Vec<f64>,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub quotient: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PsiOut {
    pub n: u32,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub lambda: f64,
    #[serde(serialize_with = "ser_nums", deserialize_with = "de_nums")]
    pub psi_lower: Vec<f64>,
    #[serde(serialize_with = "ser_nums", deserialize_with = "de_nums")]
    pub psi_upper: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdOut {
    pub n: u32,
    pub j: u32,
    pub classification: String,
    #[serde(serialize_with = "ser_opt_num", deserialize_with = "de_opt_num")]
    pub tilde_lambda: Option<f64>,
    #[serde(serialize_with = "ser_opt_num", deserialize_with = "de_opt_num")]
    pub theta_root: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchmidtOut {
    pub n: u32,
    #[serde(rename = "T")]
    pub t: u32,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub lo: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub hi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointwiseOut {
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub w: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub linear_form_cap: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub phi: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub star_bound: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub w_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsOut {
    pub n: u32,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub unconditional: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub conditional_star: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub conditional_w: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub asymptotic_gap: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub crossing_w: f64,
    pub caveat: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pointwise: Option<PointwiseOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsOut {
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub tau: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub delta: f64,
    #[serde(serialize_with = "ser_num", deserialize_with = "de_num")]
    pub theta: f64,
}
