use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// One named comparison of an expected and an observed value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

/// Ordered list of checks; the report passes when every check passes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CertificateReport {
    pub checks: Vec<Check>,
    pub seed: Option<u64>,
    pub stream: Option<u64>,
    pub attempts: usize,
}

impl CertificateReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `expected == observed` under `name` and returns the outcome.
    pub fn expect<T: Serialize + PartialEq>(&mut self, name: &str, expected: T, observed: T) -> bool {
        let pass = expected == observed;
        self.record(name, json!(expected), json!(observed), pass)
    }

    /// Records a check whose outcome is decided by the caller.
    pub fn record(&mut self, name: &str, expected: Value, observed: Value, pass: bool) -> bool {
        self.checks.push(Check {
            check: name.to_string(),
            expected,
            observed,
            pass,
        });
        pass
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.check == name)
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn extend(&mut self, prefix: &str, other: CertificateReport) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.check = format!("{prefix}.{}", c.check);
            }
            self.checks.push(c);
        }
    }

    pub fn with_provenance(mut self, seed: u64, stream: u64, attempts: usize) -> Self {
        self.seed = Some(seed);
        self.stream = Some(stream);
        self.attempts = attempts;
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checks": self.checks,
            "overall": self.passed(),
            "seed": self.seed,
            "stream": self.stream,
            "attempts": self.attempts,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_is_conjunction() {
        let mut r = CertificateReport::new();
        assert!(r.passed());
        assert!(r.expect("degree", 18, 18));
        assert!(r.passed());
        assert!(!r.expect("codim", 2, 3));
        assert!(!r.passed());
        let v = r.to_json();
        assert_eq!(v["overall"], json!(false));
        assert_eq!(v["checks"][1]["check"], json!("codim"));
        assert_eq!(v["checks"][0]["pass"], json!(true));
    }

    #[test]
    fn extend_prefixes_names() {
        let mut a = CertificateReport::new();
        let mut b = CertificateReport::new();
        b.expect("x", 1, 1);
        a.extend("inner", b);
        assert!(a.get("inner.x").is_some());
    }
}
