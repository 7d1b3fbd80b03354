use serde::{Deserialize, Serialize};

use crate::connectivity::GeometricFlag;
use crate::homological::HilbertSeries;

pub const MODEL_NOTE: &str = "graded polynomial model of the complete local ring";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub version: String,
    pub ring: String,
    pub field: String,
    pub model: String,
    pub tasks: Vec<TaskReport>,
    pub timing_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TaskReport {
    pub name: String,
    pub ideal: String,
    pub result: serde_json::Value,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<AnalysisReport> {
        serde_json::from_str(text)
    }

    /// JSON with the timing field zeroed, for byte comparisons.
    pub fn to_json_without_timing(&self) -> String {
        AnalysisReport { timing_ms: 0, ..self.clone() }.to_json()
    }

    pub fn task(&self, name: &str) -> Option<&TaskReport> {
        self.tasks.iter().find(|t| t.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub text: String,
    pub shift: i32,
    pub numerator: Vec<i64>,
    pub dim: usize,
}

impl From<&HilbertSeries> for SeriesReport {
    fn from(h: &HilbertSeries) -> SeriesReport {
        SeriesReport { text: h.to_string(), shift: h.shift(), numerator: h.numerator().to_vec(), dim: h.dimension() }
    }
}

impl SeriesReport {
    pub fn series(&self) -> HilbertSeries {
        HilbertSeries::new(self.shift, self.numerator.clone(), self.dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimResult {
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightResult {
    pub height: usize,
    pub codim: usize,
    pub equidimensional: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimesResult {
    pub count: usize,
    pub primes: Vec<Vec<String>>,
    pub dimensions: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphResult {
    pub d: usize,
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    pub t: usize,
    pub geometric_flag: GeometricFlag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyubeznikResult {
    pub lambda_top: usize,
    pub geometric_flag: GeometricFlag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2Result {
    pub codim: usize,
    pub hilbert: SeriesReport,
    pub quotient_hilbert: SeriesReport,
    pub kernel: Vec<String>,
    pub kernel_is_ideal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdTopResult {
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentsResult {
    pub ideals: Vec<Vec<String>>,
    pub canonical_hilbert: SeriesReport,
    pub parts: Vec<SeriesReport>,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageReport {
    pub alpha: u32,
    pub b_hilbert: SeriesReport,
    pub quotient_hilbert: SeriesReport,
    pub coker_dim: Option<u64>,
    pub unmixed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizeResult {
    pub stages: Vec<StageReport>,
    pub coker_dims: Vec<Option<u64>>,
}
