use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Field, Polynomial};
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Budget,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Budget => "budget",
        })
    }
}

/// How a check was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Identity,
    Membership,
    Rabinowitsch,
    Points,
    Count,
    Dimension,
    Syntactic,
}

/// Evidence attached to a failed check: the offending polynomial and, when
/// one was found, a point (field elements as canonical strings) on which the
/// reference generators vanish but the polynomial does not.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomial: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub point: Option<Vec<String>>,
}

impl Witness {
    pub fn new<K: Field>(poly: Option<&Polynomial<K>>, point: Option<Vec<String>>) -> Self {
        Witness {
            polynomial: poly.map(|p| p.to_string()),
            point,
        }
    }

    pub fn polynomial<K: Field>(poly: &Polynomial<K>) -> Self {
        Self::new(Some(poly), None)
    }

    pub fn text(s: impl Into<String>) -> Self {
        Witness {
            polynomial: Some(s.into()),
            point: None,
        }
    }
}

/// One sub-check of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub label: String,
    pub verdict: Verdict,
    pub method: Method,
}

impl Record {
    pub fn new(label: impl Into<String>, verdict: Verdict, method: Method) -> Self {
        Record {
            label: label.into(),
            verdict,
            method,
        }
    }

    pub fn check(label: impl Into<String>, ok: bool, method: Method) -> Self {
        Self::new(label, if ok { Verdict::Pass } else { Verdict::Fail }, method)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub method: Vec<Method>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
    pub records: Vec<Record>,
}

impl VerificationReport {
    pub fn new(check: impl Into<String>, method: Vec<Method>) -> Self {
        VerificationReport {
            check: check.into(),
            params: BTreeMap::new(),
            verdict: Verdict::Pass,
            witness: None,
            method,
            millis: None,
            message: None,
            records: vec![],
        }
    }

    /// Report for a check that ran out of budget.
    pub fn budget(check: impl Into<String>, err: &Error) -> Self {
        let mut r = Self::new(check, vec![]);
        r.verdict = Verdict::Budget;
        r.message = Some(err.to_string());
        r
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, record: Record) {
        if !self.method.contains(&record.method) {
            self.method.push(record.method);
        }
        self.records.push(record);
    }

    /// Records the first failure's witness unless one is already set.
    pub fn fail_with(&mut self, witness: Witness) {
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }

    /// Appends another report's records, labels prefixed by its check id.
    pub fn absorb(&mut self, other: VerificationReport) {
        for r in other.records {
            self.push(Record::new(format!("{}: {}", other.check, r.label), r.verdict, r.method));
        }
        for m in other.method {
            if !self.method.contains(&m) {
                self.method.push(m);
            }
        }
        if let Some(w) = other.witness {
            self.fail_with(w);
        }
    }

    /// Sets the verdict from the records: any failure fails the report,
    /// otherwise any budget record makes it a budget report.
    pub fn settle(&mut self) {
        self.method.sort();
        self.verdict = if self.records.iter().any(|r| r.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if self.records.iter().any(|r| r.verdict == Verdict::Budget) {
            Verdict::Budget
        } else {
            Verdict::Pass
        };
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn pass_count(&self) -> usize {
        self.records.iter().filter(|r| r.verdict == Verdict::Pass).count()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} [{}]: {}", self.check, params.join(" "), self.verdict)?;
        if let Some(ms) = self.millis {
            write!(f, " ({ms} ms)")?;
        }
        writeln!(f)?;
        for r in &self.records {
            writeln!(f, "  {:<6} {:<12} {}", r.verdict, format!("{:?}", r.method).to_lowercase(), r.label)?;
        }
        if let Some(w) = &self.witness {
            if let Some(p) = &w.polynomial {
                writeln!(f, "  witness polynomial: {p}")?;
            }
            if let Some(pt) = &w.point {
                writeln!(f, "  witness point: ({})", pt.join(","))?;
            }
        }
        if let Some(m) = &self.message {
            writeln!(f, "  {m}")?;
        }
        Ok(())
    }
}
