//! Serialized forms of results: the JSON document and the batch CSV row.

use std::fmt;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Result;
use crate::knot::TwoBridgeKnot;
use crate::obstruct::{Invariant, ObstructionReport, TestKind, TestOutcome};
use crate::rational::{fmt_q, parse_q, Q};

/// Values indexed by spin^c label, serialized as a JSON object with keys in
/// increasing numeric order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap(pub Vec<Q>);

impl Serialize for LabelMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (label, v) in self.0.iter().enumerate() {
            map.serialize_entry(&label.to_string(), &fmt_q(v))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LabelMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LabelMap;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from labels 0..N to rational strings")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<LabelMap, A::Error> {
                let mut entries: Vec<(usize, Q)> = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let label: usize = k.parse().map_err(|_| de::Error::custom(format!("bad label {k:?}")))?;
                    let val = parse_q(&v).map_err(de::Error::custom)?;
                    entries.push((label, val));
                }
                entries.sort_by_key(|e| e.0);
                if entries.iter().enumerate().any(|(i, e)| e.0 != i) {
                    return Err(de::Error::custom("labels must be exactly 0..N"));
                }
                Ok(LabelMap(entries.into_iter().map(|e| e.1).collect()))
            }
        }
        deserializer.deserialize_map(V)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestEntry {
    /// `T`, `D` or `minmax`.
    pub kind: String,
    /// `tau` or `d`; present on min/max entries only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant: Option<String>,
    pub p: u64,
    pub k: u32,
    pub value: String,
    pub fired: bool,
}

impl From<&TestOutcome> for TestEntry {
    fn from(t: &TestOutcome) -> Self {
        let inv = match t.invariant {
            Invariant::Tau => "tau",
            Invariant::D => "d",
        };
        let (kind, invariant) = match (t.kind, t.invariant) {
            (TestKind::SubgroupSum, Invariant::Tau) => ("T".to_string(), None),
            (TestKind::SubgroupSum, Invariant::D) => ("D".to_string(), None),
            (TestKind::MinMax, _) => ("minmax".to_string(), Some(inv.to_string())),
        };
        TestEntry { kind, invariant, p: t.p, k: t.k, value: fmt_q(&t.value), fired: t.fired }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HfkEntry {
    pub label: u32,
    pub a: String,
    pub m: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub p: u32,
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<LabelMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<LabelMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hfk: Option<Vec<HfkEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tests: Option<Vec<TestEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

impl Report {
    pub fn new(knot: &TwoBridgeKnot) -> Self {
        Report {
            name: knot.name().map(str::to_string),
            p: knot.p(),
            q: knot.q(),
            tau: None,
            d: None,
            hfk: None,
            tests: None,
            verdict: None,
        }
    }

    pub fn from_obstruction(r: &ObstructionReport) -> Self {
        Report {
            tau: Some(LabelMap(r.tau_table.clone())),
            d: Some(LabelMap(r.d_table.clone())),
            tests: Some(r.tests.iter().map(TestEntry::from).collect()),
            verdict: Some(r.verdict.to_string()),
            ..Report::new(&r.knot)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::InvalidArgument(format!("bad report: {e}")))
    }
}

/// One line of the batch CSV output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub name: String,
    pub p: u32,
    pub q: u32,
    pub det: u32,
    pub verdict: String,
    /// Names of the tests that fired, `;`-separated.
    pub tests_fired: String,
    /// `T_m=value` for every computed subgroup test, `;`-separated.
    pub t_values: String,
    pub d_values: String,
    pub error: String,
}

impl ReportRow {
    pub fn from_obstruction(name: &str, r: &ObstructionReport) -> Self {
        let values = |inv: Invariant| {
            r.tests
                .iter()
                .filter(|t| t.kind == TestKind::SubgroupSum && t.invariant == inv)
                .map(|t| format!("{t}={}", fmt_q(&t.value)))
                .collect::<Vec<_>>()
                .join(";")
        };
        ReportRow {
            name: name.to_string(),
            p: r.knot.p(),
            q: r.knot.q(),
            det: r.knot.determinant(),
            verdict: r.verdict.to_string(),
            tests_fired: r.fired().map(|t| t.to_string()).collect::<Vec<_>>().join(";"),
            t_values: values(Invariant::Tau),
            d_values: values(Invariant::D),
            error: String::new(),
        }
    }

    pub fn failed(name: &str, p: u32, q: u32, error: impl fmt::Display) -> Self {
        ReportRow {
            name: name.to_string(),
            p,
            q,
            det: p,
            verdict: "error".to_string(),
            tests_fired: String::new(),
            t_values: String::new(),
            d_values: String::new(),
            error: error.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn label_map_round_trip() {
        let m = LabelMap((0..12).map(|i| q(i - 5, 3)).collect());
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.starts_with("{\"0\":\"-5/3\",\"1\":\"-4/3\""));
        assert!(s.contains("\"10\":\"5/3\",\"11\":\"2\"}"));
        let back: LabelMap = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<LabelMap>("{\"1\":\"0\"}").is_err());
    }
}
