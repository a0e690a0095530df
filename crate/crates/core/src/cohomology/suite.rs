use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cohomology::{
    build_action, cocycle_from_generator_values, enumerate_cocycles, h1_classes, kernel_report, Bounds,
    KernelReport,
};
use crate::diagrams::{DiagramCollection, NodePermutation};
use crate::error::{Error, Result};
use crate::linalg::SmallMatrix;
use crate::weyl::generate_weyl;

/// Manifest format understood by this version.
pub const SUITE_FORMAT: u32 = 1;

const BUILTIN: &[(&str, &str)] = &[
    ("default", include_str!("../../suites/default.toml")),
    ("appendix-a", include_str!("../../suites/appendix-a.toml")),
];

/// A kernel verification suite: `(diagram, action)` pairs with optional
/// expected values.
///
/// ```toml
/// format = 1
/// name = "example"
///
/// [[case]]
/// diagram = "D4"
/// action = ["(1 3 4)"]
/// expect_classes = 2
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Suite {
    pub format: u32,
    pub name: String,
    #[serde(default, rename = "case")]
    pub cases: Vec<SuiteCase>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteCase {
    pub diagram: String,
    pub action: Vec<String>,
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default)]
    pub expect_weyl_order: Option<usize>,
    #[serde(default)]
    pub expect_cocycles: Option<usize>,
    #[serde(default)]
    pub expect_classes: Option<usize>,
    /// A representative of a nontrivial class, as rows of its value at each
    /// generator.
    #[serde(default)]
    pub printed_representative: Option<Vec<Vec<Vec<i64>>>>,
}

impl SuiteCase {
    pub fn label(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| format!("{} [{}]", self.diagram, self.action.join(", ")))
    }
}

impl Suite {
    pub fn builtin_names() -> Vec<&'static str> {
        BUILTIN.iter().map(|(n, _)| *n).collect()
    }

    pub fn builtin(name: &str) -> Option<Suite> {
        BUILTIN
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| Suite::parse(text).expect("embedded suites are valid"))
    }

    pub fn parse(text: &str) -> Result<Suite> {
        let suite: Suite = toml::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        if suite.format != SUITE_FORMAT {
            return Err(Error::Manifest(format!(
                "unsupported suite format {} (expected {SUITE_FORMAT})",
                suite.format
            )));
        }
        Ok(suite)
    }

    pub fn load(path: &Path) -> Result<Suite> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Manifest(format!("{}: {e}", path.display())))?;
        Suite::parse(&text)
    }

    /// A built-in suite name, or else a manifest path.
    pub fn resolve(name_or_path: &str) -> Result<Suite> {
        match Suite::builtin(name_or_path) {
            Some(s) => Ok(s),
            None => Suite::load(Path::new(name_or_path)),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("suite serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn expect<T: PartialEq + std::fmt::Debug>(name: &str, expected: T, actual: T) -> Self {
        Check {
            name: name.into(),
            passed: expected == actual,
            detail: format!("expected {expected:?}, got {actual:?}"),
        }
    }
}

/// How a printed representative was matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrintedMatch {
    AsPrinted,
    Transposed,
    Unmatched,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub label: String,
    pub diagram: String,
    pub action: Vec<String>,
    pub kernel: Option<KernelReport>,
    pub error: Option<String>,
    pub checks: Vec<Check>,
    pub printed_match: Option<PrintedMatch>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: Vec<CaseReport>,
}

impl SuiteReport {
    /// All cases passed; vacuously true for an empty suite.
    pub fn passed(&self) -> bool {
        self.cases.iter().all(CaseReport::passed)
    }
}

/// Runs every case. A failing case is recorded and the suite continues.
pub fn verify_kernel_suite(suite: &Suite, bounds: Bounds) -> SuiteReport {
    let cases = suite
        .cases
        .iter()
        .map(|case| {
            let mut report = CaseReport {
                label: case.label(),
                diagram: case.diagram.clone(),
                action: case.action.clone(),
                kernel: None,
                error: None,
                checks: Vec::new(),
                printed_match: None,
            };
            if let Err(e) = run_case(case, bounds, &mut report) {
                report.error = Some(e.to_string());
            }
            report
        })
        .collect();
    SuiteReport {
        name: suite.name.clone(),
        cases,
    }
}

fn run_case(case: &SuiteCase, bounds: Bounds, report: &mut CaseReport) -> Result<()> {
    let c = DiagramCollection::parse(&case.diagram)?;
    let gens = case
        .action
        .iter()
        .map(|g| NodePermutation::parse(g, c.rank()))
        .collect::<Result<Vec<_>>>()?;
    let w = generate_weyl(&c, bounds.max_order)?;
    let a = build_action(&w, &gens, bounds.max_group)?;
    let cocycles = enumerate_cocycles(&a)?;
    let set = h1_classes(&a, &cocycles)?;
    let k = kernel_report(&a, &cocycles, &set)?;

    report.checks.push(Check {
        name: "trivial_kernel".into(),
        passed: k.trivial_kernel,
        detail: format!("{} of {} classes trivial in GL", k.kernel_size, k.class_count),
    });
    if let Some(n) = case.expect_weyl_order {
        report.checks.push(Check::expect("weyl_order", n, k.weyl_order));
    }
    if let Some(n) = case.expect_cocycles {
        report.checks.push(Check::expect("cocycle_count", n, k.cocycle_count));
    }
    if let Some(n) = case.expect_classes {
        report.checks.push(Check::expect("class_count", n, k.class_count));
    }
    if let Some(printed) = &case.printed_representative {
        let matrices = printed
            .iter()
            .map(|rows| SmallMatrix::from_rows(rows))
            .collect::<Result<Vec<_>>>()?;
        let mut outcome = (PrintedMatch::Unmatched, None);
        for (kind, candidate) in [
            (PrintedMatch::AsPrinted, matrices.clone()),
            (PrintedMatch::Transposed, matrices.iter().map(SmallMatrix::transpose).collect()),
        ] {
            if let Some(alpha) = cocycle_from_generator_values(&a, &candidate)? {
                let i = cocycles
                    .iter()
                    .position(|x| *x == alpha)
                    .ok_or_else(|| Error::Internal("valid cocycle missing from the enumeration".into()))?;
                let class = set.class_of[i];
                if class != set.trivial_class() {
                    outcome = (kind, Some(class));
                    break;
                }
            }
        }
        report.printed_match = Some(outcome.0);
        report.checks.push(Check {
            name: "printed_representative".into(),
            passed: outcome.1.is_some(),
            detail: match outcome {
                (kind, Some(class)) => format!("{kind:?} matrix lies in class {class}"),
                _ => "neither the matrix nor its transpose gives a nontrivial class".into(),
            },
        });
    }
    report.kernel = Some(k);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_parse() {
        for name in Suite::builtin_names() {
            let s = Suite::builtin(name).unwrap();
            assert_eq!(s.name, name);
            assert!(!s.cases.is_empty());
            assert_eq!(Suite::parse(&s.to_toml()).unwrap(), s);
        }
    }

    #[test]
    fn empty_suite_passes() {
        let s = Suite::parse("format = 1\nname = \"empty\"\n").unwrap();
        let r = verify_kernel_suite(&s, Bounds::default());
        assert!(r.cases.is_empty() && r.passed());
    }

    #[test]
    fn bad_manifests() {
        assert!(matches!(Suite::parse("format = 2\nname = \"x\"\n"), Err(Error::Manifest(_))));
        assert!(matches!(Suite::parse("name = \"x\"\n"), Err(Error::Manifest(_))));
        assert!(matches!(
            Suite::resolve("/nonexistent/suite.toml"),
            Err(Error::Manifest(_))
        ));
    }

    #[test]
    fn failing_case_is_recorded() {
        let s = Suite::parse(
            "format = 1\nname = \"x\"\n[[case]]\ndiagram = \"A3\"\naction = [\"(1 2)\"]\n\
             [[case]]\ndiagram = \"A2\"\naction = [\"(1 2)\"]\n",
        )
        .unwrap();
        let r = verify_kernel_suite(&s, Bounds::default());
        assert!(!r.passed());
        assert!(r.cases[0].error.is_some());
        assert!(r.cases[1].passed());
    }

    #[test]
    fn worked_example_suite() {
        let r = verify_kernel_suite(&Suite::builtin("appendix-a").unwrap(), Bounds::default());
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.cases[0].printed_match, Some(PrintedMatch::AsPrinted));
    }
}
