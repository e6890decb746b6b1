//! JSON family documents and the command implementations behind the
//! `ultrafilter` binary.
//!
//! Commands return an [`Outcome`] (stdout, stderr, exit code) instead of
//! printing, so they can be driven directly from tests. Exit codes: 0 for
//! success or a predicate that holds, 1 for a predicate that fails or an
//! unmet hypothesis, 2 for malformed input or usage errors.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::axioms::{
    has_fip, is_filter, is_filter_base, is_free_ultrafilter, is_max_filter, is_ultrafilter, Axiom,
    AxiomReport,
};
use crate::cofinite::{frechet_axiom_suite, frechet_contains, CofiniteSet};
use crate::construct::{
    base_from_family, check_extension_hypotheses, fep_traced, filter_from_family, Side,
};
use crate::enumerate::{enumerate_filters, enumerate_ultrafilters, EnumerationKind};
use crate::error::Error;
use crate::setcore::{SubsetFamily, Universe};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// On-disk form of a universe and a family of subsets of it, by element name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    #[serde(default)]
    pub universe: Vec<String>,
    #[serde(default)]
    pub family: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cofinite: Option<CofiniteSet>,
}

impl FamilyDocument {
    pub fn from_family(universe: &Universe, family: &SubsetFamily) -> Self {
        FamilyDocument {
            universe: universe.labels().to_vec(),
            family: family
                .iter()
                .map(|a| universe.names(a).into_iter().map(str::to_owned).collect())
                .collect(),
            cofinite: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed document: {e}")))
    }

    /// Decodes the universe and family into canonical form.
    pub fn decode(&self) -> Result<(Universe, SubsetFamily), CliError> {
        if self.universe.is_empty() {
            return Err(CliError::input("document has no universe"));
        }
        let universe = Universe::new(self.universe.iter().cloned())?;
        let members = self
            .family
            .iter()
            .map(|names| universe.subset(names.iter().map(String::as_str)))
            .collect::<Result<Vec<_>, _>>()?;
        let family = SubsetFamily::new(universe.size(), members)?;
        Ok((universe, family))
    }

    /// Canonical text: one member per line, members in ascending order.
    pub fn to_json(&self) -> String {
        let quote = |s: &String| serde_json::to_string(s).expect("strings serialize");
        let list = |names: &[String]| {
            format!(
                "[{}]",
                names.iter().map(quote).collect::<Vec<_>>().join(", ")
            )
        };
        let mut out = String::from("{\n");
        let _ = write!(out, "  \"universe\": {}", list(&self.universe));
        out.push_str(",\n  \"family\": [");
        for (i, member) in self.family.iter().enumerate() {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            out.push_str(&list(member));
        }
        out.push_str(if self.family.is_empty() { "]" } else { "\n  ]" });
        if let Some(c) = &self.cofinite {
            let _ = write!(
                out,
                ",\n  \"cofinite\": {}",
                serde_json::to_string(c).expect("cofinite sets serialize")
            );
        }
        out.push_str("\n}\n");
        out
    }
}

/// Parses a family document into a universe and a canonical family.
pub fn parse_family(text: &str) -> Result<(Universe, SubsetFamily), CliError> {
    FamilyDocument::parse(text)?.decode()
}

pub fn serialize_family(universe: &Universe, family: &SubsetFamily) -> String {
    FamilyDocument::from_family(universe, family).to_json()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: EXIT_INPUT,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) => EXIT_FALSE,
            _ => EXIT_INPUT,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn verdict(holds: bool, stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if holds { EXIT_OK } else { EXIT_FALSE },
        }
    }
}

impl From<CliError> for Outcome {
    fn from(e: CliError) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
            code: e.code,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Filter,
    Base,
    Ultrafilter,
    Maxfilter,
    Free,
    Fip,
    /// Membership of the document's `cofinite` set in the Fréchet filter over ω.
    Frechet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtendTarget {
    Base,
    Filter,
    Ultrafilter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    Filters,
    Ultrafilters,
}

fn render_report(universe: &Universe, family: &SubsetFamily, report: &AxiomReport) -> String {
    let Some(axiom) = report.failed_axiom else {
        return "true\n".to_owned();
    };
    let mut out = format!("false: {axiom}");
    if axiom == Axiom::NotFilter {
        if let Ok(AxiomReport {
            failed_axiom: Some(cause),
            ..
        }) = is_filter(family, universe)
        {
            let _ = write!(out, " ({cause})");
        }
    }
    out.push('\n');
    if let Some(witness) = report.witness.as_deref().filter(|w| !w.is_empty()) {
        let sets: Vec<String> = witness.iter().map(|a| universe.render(a)).collect();
        let _ = writeln!(out, "witness: {}", sets.join(" "));
    }
    out
}

fn check_frechet(doc: &FamilyDocument) -> Result<Outcome, CliError> {
    let set = doc
        .cofinite
        .as_ref()
        .ok_or_else(|| CliError::input("document has no cofinite set"))?;
    let suite = frechet_axiom_suite(std::slice::from_ref(set));
    if let Some(axiom) = suite.failed_axiom {
        let sets: Vec<String> = suite
            .witness
            .unwrap_or_default()
            .iter()
            .map(ToString::to_string)
            .collect();
        return Ok(Outcome::verdict(
            false,
            format!(
                "false: Fréchet filter {axiom}\nwitness: {}\n",
                sets.join(" ")
            ),
        ));
    }
    Ok(if frechet_contains(set) {
        Outcome::verdict(true, "true\n".to_owned())
    } else {
        Outcome::verdict(
            false,
            format!("false: complement is infinite\nwitness: {set}\n"),
        )
    })
}

fn check(kind: CheckKind, text: &str) -> Result<Outcome, CliError> {
    let doc = FamilyDocument::parse(text)?;
    if kind == CheckKind::Frechet {
        return check_frechet(&doc);
    }
    let (universe, family) = doc.decode()?;
    let report = match kind {
        CheckKind::Filter => is_filter(&family, &universe)?,
        CheckKind::Base => is_filter_base(&family, &universe)?,
        CheckKind::Ultrafilter => is_ultrafilter(&family, &universe)?,
        CheckKind::Maxfilter => is_max_filter(&family, &universe)?,
        CheckKind::Free => is_free_ultrafilter(&family, &universe)?,
        CheckKind::Fip => {
            let holds = has_fip(&family);
            let text = if holds {
                "true\n".to_owned()
            } else {
                "false: finite intersection property fails\n".to_owned()
            };
            return Ok(Outcome::verdict(holds, text));
        }
        CheckKind::Frechet => unreachable!(),
    };
    Ok(Outcome::verdict(
        report.verdict,
        render_report(&universe, &family, &report),
    ))
}

/// `check --kind K`: runs one checker on a document.
pub fn run_check(kind: CheckKind, text: &str) -> Outcome {
    check(kind, text).unwrap_or_else(Outcome::from)
}

fn extend(target: ExtendTarget, text: &str, trace: bool) -> Result<Outcome, CliError> {
    let (universe, family) = parse_family(text)?;
    check_extension_hypotheses(&family, &universe)?;
    let mut stderr = String::new();
    let extended = match target {
        ExtendTarget::Base => base_from_family(&family)?,
        ExtendTarget::Filter => filter_from_family(&family, &universe)?,
        ExtendTarget::Ultrafilter => {
            let (ultra, steps) = fep_traced(&family, &universe)?;
            if trace {
                for (k, step) in steps.iter().enumerate() {
                    let side = match step.side {
                        Side::Subset => "adjoin",
                        Side::Complement => "adjoin complement",
                    };
                    let _ = writeln!(
                        stderr,
                        "step {}: {} -> {} {}",
                        k + 1,
                        universe.render(&step.considered),
                        side,
                        universe.render(&step.adjoined)
                    );
                }
            }
            ultra
        }
    };
    Ok(Outcome {
        stdout: serialize_family(&universe, &extended),
        stderr,
        code: EXIT_OK,
    })
}

/// `extend --to T`: writes the extended family as a document on stdout. With
/// `trace`, the greedy steps of the ultrafilter extension go to stderr.
pub fn run_extend(target: ExtendTarget, text: &str, trace: bool) -> Outcome {
    extend(target, text, trace).unwrap_or_else(Outcome::from)
}

fn enumerate(n: usize, kind: EnumerateKind, count_only: bool) -> Result<Outcome, CliError> {
    let universe = Universe::with_size(n)?;
    let result = match kind {
        EnumerateKind::Filters => enumerate_filters(&universe)?,
        EnumerateKind::Ultrafilters => enumerate_ultrafilters(&universe)?,
    };
    debug_assert_eq!(
        result.kind,
        match kind {
            EnumerateKind::Filters => EnumerationKind::Filters,
            EnumerateKind::Ultrafilters => EnumerationKind::Ultrafilters,
        }
    );
    let mut out = format!("{}\n", result.count);
    if !count_only {
        for f in &result.families {
            out.push_str(&universe.render_family(f));
            out.push('\n');
        }
    }
    Ok(Outcome::ok(out))
}

/// `enumerate --n N --kind K`: prints the count, then each family unless
/// `count_only`.
pub fn run_enumerate(n: usize, kind: EnumerateKind, count_only: bool) -> Outcome {
    enumerate(n, kind, count_only).unwrap_or_else(Outcome::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIP_PAIR: &str = r#"{"universe":["x","y","z"],"family":[["x","y"],["y","z"]]}"#;
    const DISJOINT: &str = r#"{"universe":["x","y","z"],"family":[["x"],["y"]]}"#;

    #[test]
    fn parse_examples() {
        let (u, f) = parse_family(FIP_PAIR).unwrap();
        assert_eq!(u.size(), 3);
        assert_eq!(f.len(), 2);

        let e = parse_family(r#"{"universe":["x","x"],"family":[]}"#).unwrap_err();
        assert_eq!(e.code, EXIT_INPUT);
        assert!(e.message.contains("duplicate"));

        let e = parse_family(r#"{"universe":["x"],"family":[["y"]]}"#).unwrap_err();
        assert_eq!(e.code, EXIT_INPUT);
        assert!(e.message.contains("unknown element"));

        let e = parse_family(r#"{"universe":["x"],"family":[], "extra": 1}"#).unwrap_err();
        assert_eq!(e.code, EXIT_INPUT);

        let e = parse_family("{not json").unwrap_err();
        assert_eq!(e.code, EXIT_INPUT);

        let many: Vec<String> = (0..64).map(|i| format!("\"e{i}\"")).collect();
        let text = format!(r#"{{"universe":[{}],"family":[]}}"#, many.join(","));
        let e = parse_family(&text).unwrap_err();
        assert_eq!(e.code, EXIT_INPUT);
        assert!(e.message.contains("exceeds"));
    }

    #[test]
    fn canonical_serialization() {
        let text = r#"{"universe":["x","y","z"],"family":[["z","y"],["y"],["y"]]}"#;
        let (u, f) = parse_family(text).unwrap();
        assert_eq!(
            serialize_family(&u, &f),
            "{\n  \"universe\": [\"x\", \"y\", \"z\"],\n  \"family\": [\n    [\"y\"],\n    [\"y\", \"z\"]\n  ]\n}\n"
        );
        let empty = SubsetFamily::empty(3);
        assert_eq!(
            serialize_family(&u, &empty),
            "{\n  \"universe\": [\"x\", \"y\", \"z\"],\n  \"family\": []\n}\n"
        );
    }

    #[test]
    fn check_examples() {
        let o = run_check(CheckKind::Fip, FIP_PAIR);
        assert_eq!((o.stdout.as_str(), o.code), ("true\n", 0));

        let pow = r#"{"universe":["x","y"],"family":[[],["x"],["y"],["x","y"]]}"#;
        let o = run_check(CheckKind::Filter, pow);
        assert_eq!(o.code, 1);
        assert!(o.stdout.starts_with("false: empty set is a member\n"));
        assert!(o.stdout.contains("witness: {}"));

        let fx = r#"{"universe":["x","y","z"],"family":[["x"],["x","y"],["x","z"],["x","y","z"]]}"#;
        let o = run_check(CheckKind::Ultrafilter, fx);
        assert_eq!((o.stdout.as_str(), o.code), ("true\n", 0));

        let o = run_check(CheckKind::Ultrafilter, pow);
        assert_eq!(
            o.stdout,
            "false: not a filter (empty set is a member)\nwitness: {}\n"
        );

        let o = run_check(CheckKind::Free, fx);
        assert_eq!(o.stdout, "false: a finite set is a member\nwitness: {x}\n");
        assert_eq!(o.code, 1);

        let o = run_check(CheckKind::Filter, "[]");
        assert_eq!(o.code, 2);
        assert!(o.stdout.is_empty());
    }

    #[test]
    fn check_frechet_kind() {
        let o = run_check(
            CheckKind::Frechet,
            r#"{"cofinite":{"mode":"cofinite","support":[3,5]}}"#,
        );
        assert_eq!((o.stdout.as_str(), o.code), ("true\n", 0));
        let o = run_check(
            CheckKind::Frechet,
            r#"{"cofinite":{"mode":"finite","support":[1,2]}}"#,
        );
        assert_eq!(o.stdout, "false: complement is infinite\nwitness: {1,2}\n");
        assert_eq!(o.code, 1);
        let o = run_check(CheckKind::Frechet, FIP_PAIR);
        assert_eq!(o.code, 2);
        let o = run_check(
            CheckKind::Filter,
            r#"{"cofinite":{"mode":"finite","support":[]}}"#,
        );
        assert_eq!(o.code, 2);
    }

    #[test]
    fn extend_examples() {
        let o = run_extend(ExtendTarget::Ultrafilter, FIP_PAIR, false);
        assert_eq!(o.code, 0);
        let (u, f) = parse_family(&o.stdout).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(crate::axioms::is_principal(&f, &u).unwrap(), Some(1));
        assert_eq!(run_check(CheckKind::Ultrafilter, &o.stdout).code, 0);

        let o = run_extend(ExtendTarget::Base, FIP_PAIR, false);
        let (u, f) = parse_family(&o.stdout).unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.contains(&u.subset(["y"]).unwrap()));
        assert_eq!(run_check(CheckKind::Base, &o.stdout).code, 0);

        let o = run_extend(ExtendTarget::Filter, FIP_PAIR, false);
        assert_eq!(run_check(CheckKind::Filter, &o.stdout).code, 0);

        let o = run_extend(ExtendTarget::Ultrafilter, DISJOINT, false);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("finite intersection property fails"));

        let o = run_extend(
            ExtendTarget::Filter,
            r#"{"universe":["x"],"family":[]}"#,
            false,
        );
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("family is empty"));
    }

    #[test]
    fn extend_trace() {
        let o = run_extend(ExtendTarget::Ultrafilter, FIP_PAIR, true);
        let lines: Vec<&str> = o.stderr.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "step 1: {} -> adjoin complement {x,y,z}");
        assert_eq!(lines[1], "step 2: {x} -> adjoin complement {y,z}");
        assert_eq!(lines[2], "step 3: {y} -> adjoin {y}");
    }

    #[test]
    fn enumerate_examples() {
        let o = run_enumerate(3, EnumerateKind::Filters, true);
        assert_eq!((o.stdout.as_str(), o.code), ("7\n", 0));
        let o = run_enumerate(3, EnumerateKind::Ultrafilters, true);
        assert_eq!(o.stdout, "3\n");
        let o = run_enumerate(1, EnumerateKind::Filters, false);
        assert_eq!(o.stdout, "1\n{{e0}}\n");
        assert_eq!(run_enumerate(11, EnumerateKind::Filters, true).code, 2);
        assert_eq!(run_enumerate(0, EnumerateKind::Filters, true).code, 2);
    }
}
