//! Reconciliation report assembly and the runnable verification suites.
//!
//! The report gathers every comparison of a quoted constant or closed form
//! against the value the recurrences force, in five fixed sections. All
//! content is exact and all iteration orders are fixed, so rendering is
//! byte-deterministic for a given version.

use crate::cfinite::{builtin_identity_suite, reconcile_identities};
use crate::genfunc::{cartan_gf, reconcile_gf};
use crate::horadam::Preset;
use crate::sequences::{
    cw_term, cw_terms, reconcile_binet_constants, reconcile_examples, BinetContext,
};
use crate::spinor::{
    reconcile_spinor_forms, spinor_gf, spinor_term, spinor_terms, SpinorBinet,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Outcome of one quoted-vs-computed comparison. `NotComparable` marks quoted
/// displays that pin no finite value (nothing to evaluate on either side).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    NotComparable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotComparable => "not_comparable",
        }
    }
}

/// Side check attached to closed-form coefficient pairs: whether each side's
/// `X + Y` collapses to the initial term `CW_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SumProbe {
    pub paper_sum_is_cw0: bool,
    pub computed_sum_is_cw0: bool,
}

/// One reconciliation row: the quoted value, the constructed value, and the
/// verdict with the mismatching component names.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReconEntry {
    pub name: String,
    pub paper: Value,
    pub computed: Value,
    pub verdict: Verdict,
    pub coords: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe: Option<SumProbe>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// The full report, sections in fixed order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    #[serde(rename = "Examples")]
    pub examples: Vec<ReconEntry>,
    #[serde(rename = "Identities")]
    pub identities: Vec<ReconEntry>,
    #[serde(rename = "BinetConstants")]
    pub binet_constants: Vec<ReconEntry>,
    #[serde(rename = "GeneratingFunctions")]
    pub generating_functions: Vec<ReconEntry>,
    #[serde(rename = "SpinorForms")]
    pub spinor_forms: Vec<ReconEntry>,
}

impl Report {
    pub fn sections(&self) -> [(&'static str, &[ReconEntry]); 5] {
        [
            ("Examples", &self.examples[..]),
            ("Identities", &self.identities[..]),
            ("BinetConstants", &self.binet_constants[..]),
            ("GeneratingFunctions", &self.generating_functions[..]),
            ("SpinorForms", &self.spinor_forms[..]),
        ]
    }

    pub fn entry_count(&self) -> usize {
        self.sections().iter().map(|(_, entries)| entries.len()).sum()
    }

    pub fn find(&self, name: &str) -> Option<&ReconEntry> {
        self.sections()
            .into_iter()
            .flat_map(|(_, entries)| entries.iter())
            .find(|e| e.name == name)
    }
}

/// Run every reconciliation and assemble the report.
pub fn build_report() -> Report {
    Report {
        examples: reconcile_examples(),
        identities: reconcile_identities(),
        binet_constants: reconcile_binet_constants(),
        generating_functions: reconcile_gf(),
        spinor_forms: reconcile_spinor_forms(),
    }
}

pub fn render_json(report: &Report) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

fn md_cell(v: &Value) -> String {
    let raw = match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    md_escape(&raw)
}

pub fn render_markdown(report: &Report) -> String {
    let mut out = String::from("# Reconciliation report\n");
    for (title, entries) in report.sections() {
        out.push_str("\n## ");
        out.push_str(title);
        out.push_str("\n\n");
        out.push_str("| name | verdict | coords | paper | computed | probe | notes |\n");
        out.push_str("| --- | --- | --- | --- | --- | --- | --- |\n");
        for e in entries {
            let probe = match &e.probe {
                Some(p) => format!(
                    "paper_sum_is_cw0={}, computed_sum_is_cw0={}",
                    p.paper_sum_is_cw0, p.computed_sum_is_cw0
                ),
                None => String::new(),
            };
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                md_escape(&e.name),
                e.verdict.as_str(),
                e.coords.join(", "),
                md_cell(&e.paper),
                md_cell(&e.computed),
                probe,
                md_escape(e.notes.as_deref().unwrap_or("")),
            ));
        }
    }
    out
}

// ── Verification suites ─────────────────────────────────────────────────────

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Binet,
    Identities,
    Genfunc,
    All,
    None,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Binet => "binet",
            SuiteKind::Identities => "identities",
            SuiteKind::Genfunc => "genfunc",
            SuiteKind::All => "all",
            SuiteKind::None => "none",
        }
    }
}

/// Outcome of one suite run. Counterexamples are findings, not failures.
#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub suite: &'static str,
    pub total: usize,
    pub verified: usize,
    pub counterexamples: Vec<Value>,
    pub items: Vec<Value>,
}

impl VerifySummary {
    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "total": self.total,
            "verified": self.verified,
            "counterexamples": self.counterexamples,
            "items": self.items,
        })
    }
}

/// Closed form versus recurrence, per row: lifted terms for `n <= 64` and
/// the spinor stream alongside.
fn binet_items() -> Vec<Value> {
    Preset::PAPER_SIX
        .iter()
        .map(|preset| {
            let params = preset.params();
            let ctx = BinetContext::new(params).expect("rows have nonzero discriminant");
            let sb = SpinorBinet::new(&ctx);
            let mut witness: Option<Value> = None;
            for n in 0..=64u64 {
                if ctx.term_integer(n).as_ref() != Some(&cw_term(&params, n)) {
                    witness = Some(json!({ "n": n, "stream": "cartan" }));
                    break;
                }
                if sb.term_rational(n).as_ref() != Some(&spinor_term(&params, n)) {
                    witness = Some(json!({ "n": n, "stream": "spinor" }));
                    break;
                }
            }
            item_json(format!("binet ({})", preset.name()), witness)
        })
        .collect()
}

/// Series expansion versus term stream, per row: 32 coefficients of both the
/// lifted and the spinor series.
fn genfunc_items() -> Vec<Value> {
    Preset::PAPER_SIX
        .iter()
        .map(|preset| {
            let params = preset.params();
            let cartan_ok = cartan_gf(&params).expand(32)
                == cw_terms(&params, 0, 32)
                    .iter()
                    .map(|cw| cw.to_rational())
                    .collect::<Vec<_>>();
            let spinor_ok = spinor_gf(&params).expand(32) == spinor_terms(&params, 0, 32);
            let witness = match (cartan_ok, spinor_ok) {
                (true, true) => None,
                (cartan, _) => Some(json!({
                    "stream": if cartan { "spinor" } else { "cartan" },
                })),
            };
            item_json(format!("genfunc ({})", preset.name()), witness)
        })
        .collect()
}

fn item_json(item: String, witness: Option<Value>) -> Value {
    let mut obj = json!({
        "item": item,
        "status": if witness.is_none() { "verified" } else { "counterexample" },
    });
    if let Some(w) = witness {
        obj["witness"] = w;
    }
    obj
}

fn identity_items() -> Vec<Value> {
    builtin_identity_suite()
        .iter()
        .map(|o| o.to_json())
        .collect()
}

fn summarize(suite: &'static str, items: Vec<Value>) -> VerifySummary {
    let verified = items.iter().filter(|i| i["status"] == "verified").count();
    let counterexamples = items
        .iter()
        .filter(|i| i["status"] != "verified")
        .cloned()
        .collect();
    VerifySummary {
        suite,
        total: items.len(),
        verified,
        counterexamples,
        items,
    }
}

/// Run one suite (or all of them, in declaration order) and summarize.
pub fn run_suite(kind: SuiteKind) -> VerifySummary {
    match kind {
        SuiteKind::None => summarize("none", Vec::new()),
        SuiteKind::Binet => summarize("binet", binet_items()),
        SuiteKind::Identities => summarize("identities", identity_items()),
        SuiteKind::Genfunc => summarize("genfunc", genfunc_items()),
        SuiteKind::All => {
            let mut items = binet_items();
            items.extend(identity_items());
            items.extend(genfunc_items());
            summarize("all", items)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_wire_format() {
        assert_eq!(serde_json::to_value(Verdict::Match).unwrap(), json!("match"));
        assert_eq!(
            serde_json::to_value(Verdict::NotComparable).unwrap(),
            json!("not_comparable")
        );
    }

    #[test]
    fn entry_serialization_field_order() {
        let entry = ReconEntry {
            name: "x".into(),
            paper: json!("1"),
            computed: json!("2"),
            verdict: Verdict::Mismatch,
            coords: vec!["s".into()],
            probe: None,
            notes: None,
        };
        assert_eq!(
            serde_json::to_string(&entry).unwrap(),
            r#"{"name":"x","paper":"1","computed":"2","verdict":"mismatch","coords":["s"]}"#
        );
        let with_probe = ReconEntry {
            probe: Some(SumProbe {
                paper_sum_is_cw0: true,
                computed_sum_is_cw0: true,
            }),
            notes: Some("n".into()),
            ..entry
        };
        assert!(serde_json::to_string(&with_probe)
            .unwrap()
            .contains(r#""probe":{"paper_sum_is_cw0":true,"computed_sum_is_cw0":true},"notes":"n""#));
    }

    #[test]
    fn report_shape() {
        let report = build_report();
        let counts: Vec<(&str, usize)> = report
            .sections()
            .iter()
            .map(|(name, entries)| (*name, entries.len()))
            .collect();
        assert_eq!(
            counts,
            [
                ("Examples", 17),
                ("Identities", 14),
                ("BinetConstants", 10),
                ("GeneratingFunctions", 9),
                ("SpinorForms", 10),
            ]
        );
        assert_eq!(report.entry_count(), 60);
    }

    #[test]
    fn report_rendering_is_deterministic() {
        let (a, b) = (build_report(), build_report());
        assert_eq!(render_json(&a), render_json(&b));
        assert_eq!(render_markdown(&a), render_markdown(&b));
    }

    #[test]
    fn markdown_sections_in_order() {
        let md = render_markdown(&build_report());
        let mut pos = 0;
        for header in [
            "## Examples",
            "## Identities",
            "## BinetConstants",
            "## GeneratingFunctions",
            "## SpinorForms",
        ] {
            let at = md[pos..].find(header).expect(header);
            pos += at + header.len();
        }
    }

    #[test]
    fn suite_totals() {
        let binet = run_suite(SuiteKind::Binet);
        assert_eq!((binet.total, binet.verified), (6, 6));
        assert!(binet.counterexamples.is_empty());

        let genfunc = run_suite(SuiteKind::Genfunc);
        assert_eq!((genfunc.total, genfunc.verified), (6, 6));

        let identities = run_suite(SuiteKind::Identities);
        assert_eq!((identities.total, identities.verified), (56, 20));
        assert_eq!(identities.counterexamples.len(), 36);

        let all = run_suite(SuiteKind::All);
        assert_eq!((all.total, all.verified), (68, 32));

        let none = run_suite(SuiteKind::None);
        assert_eq!((none.total, none.verified), (0, 0));
        assert_eq!(
            none.to_json().to_string(),
            r#"{"suite":"none","total":0,"verified":0,"counterexamples":[],"items":[]}"#
        );
    }

    #[test]
    fn identity_suite_reports_the_verified_jacobsthal_identity() {
        let summary = run_suite(SuiteKind::Identities);
        let rows: Vec<&Value> = summary
            .items
            .iter()
            .filter(|i| i["identity"] == "Cj_{n+1}+2Cj_{n-1}=9CJ_n")
            .collect();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r["status"] == "verified"));
    }
}
