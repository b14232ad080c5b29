//! The output record model shared by every subcommand and format.
//!
//! One record per line; the `kind` field selects the payload shape. The
//! JSON encoding is the schema-stable interchange form (see
//! `schema/records.schema.json` at the repository root).

use eigenperm_core::eigen::{EigenPair, EigenReport, Report3x3, Verdict};
use eigenperm_core::families::CoefficientQuad;
use eigenperm_core::search::{Classification, Record2, Record3};
use eigenperm_core::triples::PythTriple;
use serde::{Deserialize, Serialize};

/// A single output line: a typed payload plus the provenance of the data
/// (the family and parameters that produced it), when there is one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(flatten)]
    pub payload: Payload,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Triple {
        r: i64,
        s: i64,
        t: i64,
        primitive: bool,
    },
    Quad {
        /// Construction order `(a, b, c, d)`.
        entries: [i64; 4],
        /// Sorted ascending: the canonical comparison key.
        multiset: [i64; 4],
        /// Eigenvalues `[plus, minus]` of the six representative
        /// arrangements.
        eigen_classes: Vec<[i64; 2]>,
    },
    Report {
        dim: u8,
        coefficients: Vec<i64>,
        /// Number of distinct arrangements of the multiset.
        arrangements: u64,
        all_pass: bool,
        /// 2×2 only: swap classes as `plus/minus*members` (or `x*members`
        /// for a failing class).
        #[serde(skip_serializing_if = "Option::is_none")]
        classes: Option<Vec<String>>,
        /// 2×2 only: per-arrangement verdicts as `a:b:c:d=plus/minus` or
        /// `a:b:c:d=x` when the discriminant is not a perfect square.
        #[serde(skip_serializing_if = "Option::is_none")]
        verdicts: Option<Vec<String>>,
        /// 3×3 only: spectrum of the first arrangement, when integral.
        #[serde(skip_serializing_if = "Option::is_none")]
        spectrum: Option<[i64; 3]>,
        /// 3×3 only: first failing arrangement, row-major.
        #[serde(skip_serializing_if = "Option::is_none")]
        first_failure: Option<Vec<i64>>,
    },
    SearchRecord {
        dim: u8,
        coefficients: Vec<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        classification: Option<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        ansatz_t: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        ansatz_diag: Option<[i64; 2]>,
        #[serde(skip_serializing_if = "Option::is_none")]
        ansatz_off: Option<[i64; 2]>,
        #[serde(skip_serializing_if = "Option::is_none")]
        square_root: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        eigen_classes: Option<Vec<[i64; 2]>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        trivial: Option<bool>,
        #[serde(skip_serializing_if = "Option::is_none")]
        spectrum: Option<[i64; 3]>,
    },
}

impl OutputRecord {
    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::Triple { .. } => "triple",
            Payload::Quad { .. } => "quad",
            Payload::Report { .. } => "report",
            Payload::SearchRecord { .. } => "search-record",
        }
    }

    pub fn triple(t: &PythTriple) -> OutputRecord {
        OutputRecord {
            payload: Payload::Triple {
                r: t.r(),
                s: t.s(),
                t: t.t(),
                primitive: t.is_primitive(),
            },
            provenance: None,
        }
    }

    /// A generated quadruple with the eigenvalues of its six representative
    /// arrangements.
    pub fn quad(quad: &CoefficientQuad, classes: &[EigenPair; 6]) -> OutputRecord {
        OutputRecord {
            payload: Payload::Quad {
                entries: quad.entries(),
                multiset: quad.multiset(),
                eigen_classes: classes.iter().map(|p| [p.plus(), p.minus()]).collect(),
            },
            provenance: quad.provenance().map(|p| p.to_string()),
        }
    }

    pub fn report_2x2(report: &EigenReport) -> OutputRecord {
        let classes = report
            .classes
            .iter()
            .map(|c| match c.eigenvalues {
                Some(p) => format!("{}/{}*{}", p.plus(), p.minus(), c.members),
                None => format!("x*{}", c.members),
            })
            .collect();
        let verdicts = report
            .arrangements
            .iter()
            .map(|a| {
                let [p, q, r, s] = a.matrix.row_major();
                match a.verdict {
                    Verdict::Integer(pair) => {
                        format!("{p}:{q}:{r}:{s}={}/{}", pair.plus(), pair.minus())
                    }
                    Verdict::Irrational => format!("{p}:{q}:{r}:{s}=x"),
                }
            })
            .collect();
        OutputRecord {
            payload: Payload::Report {
                dim: 2,
                coefficients: report.coefficients.to_vec(),
                arrangements: report.arrangements.len() as u64,
                all_pass: report.all_pass,
                classes: Some(classes),
                verdicts: Some(verdicts),
                spectrum: None,
                first_failure: None,
            },
            provenance: None,
        }
    }

    pub fn report_3x3(report: &Report3x3) -> OutputRecord {
        OutputRecord {
            payload: Payload::Report {
                dim: 3,
                coefficients: report.coefficients.to_vec(),
                arrangements: report.arrangement_count,
                all_pass: report.all_pass,
                classes: None,
                verdicts: None,
                spectrum: report.sample_spectrum.map(|(a, b, c)| [a, b, c]),
                first_failure: report.first_failure.map(|m| m.row_major().to_vec()),
            },
            provenance: None,
        }
    }

    pub fn search_2x2(record: &Record2) -> OutputRecord {
        let (ansatz_t, ansatz_diag, ansatz_off, square_root) = match record.classification {
            Classification::Ansatz { t, diag, off } => {
                (Some(t), Some([diag.0, diag.1]), Some([off.0, off.1]), None)
            }
            Classification::Degenerate { square_root } => (None, None, None, Some(square_root)),
            _ => (None, None, None, None),
        };
        OutputRecord {
            payload: Payload::SearchRecord {
                dim: 2,
                coefficients: record.coefficients.to_vec(),
                classification: Some(record.classification.name().to_string()),
                ansatz_t,
                ansatz_diag,
                ansatz_off,
                square_root,
                eigen_classes: Some(
                    record
                        .eigen_classes
                        .iter()
                        .map(|p| [p.plus(), p.minus()])
                        .collect(),
                ),
                trivial: None,
                spectrum: None,
            },
            provenance: None,
        }
    }

    pub fn search_3x3(record: &Record3) -> OutputRecord {
        OutputRecord {
            payload: Payload::SearchRecord {
                dim: 3,
                coefficients: record.coefficients.to_vec(),
                classification: None,
                ansatz_t: None,
                ansatz_diag: None,
                ansatz_off: None,
                square_root: None,
                eigen_classes: None,
                trivial: Some(record.trivial),
                spectrum: Some([record.spectrum.0, record.spectrum.1, record.spectrum.2]),
            },
            provenance: None,
        }
    }

    /// Coefficients carried by this record, when it has any (used by
    /// `verify` when reading piped records).
    pub fn coefficients(&self) -> Option<Vec<i64>> {
        match &self.payload {
            Payload::Quad { entries, .. } => Some(entries.to_vec()),
            Payload::SearchRecord { coefficients, .. } => Some(coefficients.clone()),
            Payload::Report { coefficients, .. } => Some(coefficients.clone()),
            Payload::Triple { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_keeps_every_field() {
        let record = OutputRecord {
            payload: Payload::SearchRecord {
                dim: 2,
                coefficients: vec![0, 2, 3, 5],
                classification: Some("ansatz".to_string()),
                ansatz_t: Some(5),
                ansatz_diag: Some([0, 5]),
                ansatz_off: Some([2, 3]),
                square_root: None,
                eigen_classes: Some(vec![[6, -1], [3, 2]]),
                trivial: None,
                spectrum: None,
            },
            provenance: None,
        };
        let json = serde_json::to_string(&record).unwrap();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, record);
    }

    #[test]
    fn kind_tag_is_kebab_case() {
        let record = OutputRecord {
            payload: Payload::Triple {
                r: 3,
                s: 4,
                t: 5,
                primitive: true,
            },
            provenance: None,
        };
        let json = serde_json::to_string(&record).unwrap();
        assert!(json.contains("\"kind\":\"triple\""));
        assert_eq!(record.kind(), "triple");
    }
}
