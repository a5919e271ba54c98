use serde::{Deserialize, Serialize};

/// One line of a check run, serialised as
/// `{"check", "residual", "slack", "pass", "seed"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub residual: f64,
    pub slack: f64,
    pub pass: bool,
    pub seed: u64,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, residual: f64, slack: f64, pass: bool, seed: u64) -> Self {
        CheckReport {
            check: check.into(),
            residual,
            slack,
            pass,
            seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = CheckReport::new("norm_reduction", 0.0, 0.5, true, 7);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"norm_reduction","residual":0.0,"slack":0.5,"pass":true,"seed":7}"#
        );
    }
}
