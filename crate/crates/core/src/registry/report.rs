use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::manifest::{Claim, Manifest, StatusOverride};
use super::recipe::{evaluate, Value};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Stored,
    Disputed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Stored => "STORED",
            Status::Disputed => "DISPUTED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: String,
    pub paper_ref: String,
    pub expected: Value,
    pub computed: Option<Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub stored: usize,
    pub disputed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub claims: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    fn from_records(mut claims: Vec<Record>) -> Self {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for r in &claims {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Stored => summary.stored += 1,
                Status::Disputed => summary.disputed += 1,
            }
        }
        Report { claims, summary }
    }

    pub fn get(&self, id: &str) -> Option<&Record> {
        self.claims.iter().find(|r| r.id == id)
    }
}

fn check(claim: &Claim) -> Record {
    let (computed, error) = match &claim.recipe {
        Some(recipe) => match evaluate(recipe) {
            Ok(v) => (Some(v), None),
            Err(e) => (None, Some(e.to_string())),
        },
        None => (None, None),
    };
    let matches = computed.as_ref() == Some(&claim.expected);
    let (computed, status) = match claim.status_override {
        // stored data is echoed; a recipe, if present, must still agree
        Some(StatusOverride::Stored) if claim.recipe.is_none() => (Some(claim.expected.clone()), Status::Stored),
        Some(StatusOverride::Stored) if matches => (computed, Status::Stored),
        Some(StatusOverride::Disputed) => (computed, Status::Disputed),
        _ if matches => (computed, Status::Pass),
        _ => (computed, Status::Fail),
    };
    Record {
        id: claim.id.clone(),
        paper_ref: claim.paper_ref.clone(),
        expected: claim.expected.clone(),
        computed,
        status,
        error,
        note: claim.note.clone(),
    }
}

/// Recomputes the claims whose id starts with one of `prefixes` (all claims
/// when `None`). A prefix matching no claim is an error listing the valid ids.
pub fn run_claims(manifest: &Manifest, prefixes: Option<&[String]>) -> Result<Report> {
    let selected: Vec<&Claim> = match prefixes {
        None => manifest.claims.iter().collect(),
        Some(prefixes) => {
            let unknown: Vec<String> =
                prefixes.iter().filter(|p| !manifest.ids().any(|id| id.starts_with(p.as_str()))).cloned().collect();
            if !unknown.is_empty() {
                let mut valid: Vec<&str> = manifest.ids().collect();
                valid.sort_unstable();
                return Err(Error::UnknownClaim { unknown, valid: valid.join(", ") });
            }
            manifest.claims.iter().filter(|c| prefixes.iter().any(|p| c.id.starts_with(p.as_str()))).collect()
        }
    };
    Ok(Report::from_records(selected.into_iter().map(check).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown report format {other:?} (expected text or json)"))),
        }
    }
}

/// Renders a report. Output depends only on the report, so identical runs are byte-identical.
pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => emit_text(report),
    }
}

fn emit_text(report: &Report) -> String {
    let rows: Vec<[String; 5]> = report
        .claims
        .iter()
        .map(|r| {
            let computed = match (&r.computed, &r.error) {
                (Some(v), _) => v.to_string(),
                (None, Some(e)) => format!("error: {e}"),
                (None, None) => "-".to_string(),
            };
            [
                r.id.clone(),
                r.paper_ref.clone(),
                format!("expected {}", r.expected),
                format!("computed {computed}"),
                r.status.to_string(),
            ]
        })
        .collect();
    let mut widths = [0usize; 4];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in &rows {
        for (w, cell) in widths.iter().zip(row) {
            out.push_str(cell);
            out.extend(std::iter::repeat_n(' ', w - cell.chars().count() + 2));
        }
        out.push_str(&row[4]);
        out.push('\n');
    }
    let s = report.summary;
    out.push_str(&format!("{} pass, {} fail, {} stored, {} disputed\n", s.pass, s.fail, s.stored, s.disputed));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn manifest(json: &str) -> Manifest {
        Manifest::from_json_str(json).unwrap()
    }

    const SMALL: &str = r#"{"claims":[
        {"id":"b-two","paper_ref":"table","expected":10,"recipe":{"op":"fibre_dim_ci","args":[3,2]}},
        {"id":"a-one","paper_ref":"text","expected":5,"recipe":{"op":"add","args":[2,2]}},
        {"id":"c-stored","paper_ref":"matrix","expected":23,"status_override":"STORED"},
        {"id":"d-disputed","paper_ref":"text","expected":33,"status_override":"DISPUTED",
         "recipe":{"op":"locus_dim","args":["genus2_D",[17,2]]}}]}"#;

    #[test]
    fn statuses_and_summary() {
        let r = run_claims(&manifest(SMALL), None).unwrap();
        let ids: Vec<&str> = r.claims.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["a-one", "b-two", "c-stored", "d-disputed"]);
        assert_eq!(r.get("a-one").unwrap().status, Status::Fail);
        assert_eq!(r.get("b-two").unwrap().status, Status::Pass);
        assert_eq!(r.get("c-stored").unwrap().computed, Some(Value::Int(23)));
        assert_eq!(r.get("d-disputed").unwrap().computed, Some(Value::Int(31)));
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, stored: 1, disputed: 1 });
    }

    #[test]
    fn stored_claim_with_disagreeing_recipe_fails() {
        let m = manifest(
            r#"{"claims":[{"id":"s","paper_ref":"x","expected":7,"status_override":"STORED",
                "recipe":{"op":"add","args":[3,3]}}]}"#,
        );
        assert_eq!(run_claims(&m, None).unwrap().claims[0].status, Status::Fail);
    }

    #[test]
    fn recipe_errors_fail_with_message() {
        let m = manifest(
            r#"{"claims":[{"id":"e","paper_ref":"x","expected":1,"recipe":{"op":"fibre_dim_ci","args":[9,2]}}]}"#,
        );
        let r = run_claims(&m, None).unwrap();
        assert_eq!(r.claims[0].status, Status::Fail);
        assert!(r.claims[0].error.is_some());
        assert!(emit(&r, Format::Text).contains("computed error: "));
    }

    #[test]
    fn filtering() {
        let m = manifest(SMALL);
        let r = run_claims(&m, Some(&["b".to_string()])).unwrap();
        assert_eq!(r.claims.len(), 1);
        let r = run_claims(&m, Some(&[])).unwrap();
        assert!(r.claims.is_empty());
        assert_eq!(r.summary, Summary::default());
        match run_claims(&m, Some(&["zz".to_string()])) {
            Err(Error::UnknownClaim { unknown, valid }) => {
                assert_eq!(unknown, ["zz"]);
                assert_eq!(valid, "a-one, b-two, c-stored, d-disputed");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn single_line_text_format() {
        let m = manifest(
            r#"{"claims":[{"id":"S3.2-fibre-g1-3-k2","paper_ref":"§3.2 table","expected":10,
                "recipe":{"op":"fibre_dim_ci","args":[3,2]}}]}"#,
        );
        let text = emit(&run_claims(&m, None).unwrap(), Format::Text);
        assert_eq!(
            text,
            "S3.2-fibre-g1-3-k2  §3.2 table  expected 10  computed 10  PASS\n1 pass, 0 fail, 0 stored, 0 disputed\n"
        );
    }

    #[test]
    fn json_shape() {
        let r = run_claims(&manifest(SMALL), Some(&["b".to_string()])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&emit(&r, Format::Json)).unwrap();
        let rec = &v["claims"][0];
        for key in ["id", "paper_ref", "expected", "computed", "status"] {
            assert!(rec.get(key).is_some(), "{key}");
        }
        assert_eq!(rec["status"], "PASS");
        assert_eq!(v["summary"]["pass"], 1);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }
}
