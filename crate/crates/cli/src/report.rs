use cheeger_core::solver::Bounds;
use cheeger_core::verify::Check;
use serde::Serialize;

pub const VERSION: &str = concat!("cheeger ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub krepra_lower: f64,
    pub krepra_upper: f64,
    pub asymptotic: f64,
}

impl From<Bounds> for BoundsReport {
    fn from(b: Bounds) -> Self {
        BoundsReport { krepra_lower: b.krepra_lower, krepra_upper: b.krepra_upper, asymptotic: b.asymptotic }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl From<Check> for CheckReport {
    fn from(c: Check) -> Self {
        CheckReport { name: c.name, pass: c.pass, detail: c.detail }
    }
}

/// Output of `solve` and `verify`. Fields that a command does not produce
/// are `null`.
#[derive(Clone, Debug, Serialize)]
pub struct ResultReport {
    pub version: &'static str,
    pub subject: String,
    pub h: Option<f64>,
    pub r: Option<f64>,
    pub residual: Option<f64>,
    pub iterations: Option<usize>,
    pub bounds: Option<BoundsReport>,
    pub checks: Vec<CheckReport>,
    pub warnings: Vec<String>,
}

impl ResultReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ResultReport {
            version: VERSION,
            subject: subject.into(),
            h: None,
            r: None,
            residual: None,
            iterations: None,
            bounds: None,
            checks: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(CheckReport { name: name.into(), pass, detail: detail.into() });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
