use std::fmt::Write as _;

use omlkit::{AxiomReport, Failure};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct Binding {
    pub var: String,
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct Witness {
    pub assignment: Vec<Binding>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sides: Option<[String; 2]>,
}

impl Witness {
    pub fn new(pairs: &[(&str, &str)]) -> Self {
        Self {
            assignment: pairs
                .iter()
                .map(|(v, x)| Binding {
                    var: v.to_string(),
                    value: x.to_string(),
                })
                .collect(),
            sides: None,
        }
    }

    pub fn from_failure(f: &Failure, labels: &[String]) -> Self {
        Self {
            assignment: f
                .assignment
                .iter()
                .map(|&(v, e)| Binding {
                    var: v.to_owned(),
                    value: labels[e].clone(),
                })
                .collect(),
            sides: f.sides.map(|(l, r)| [labels[l].clone(), labels[r].clone()]),
        }
    }

    fn render(&self) -> String {
        let mut out = self
            .assignment
            .iter()
            .map(|b| format!("{}={}", b.var, b.value))
            .collect::<Vec<_>>()
            .join(", ");
        if let Some([l, r]) = &self.sides {
            let _ = write!(out, "{}{l} != {r}", if out.is_empty() { "" } else { ": " });
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail: None,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Witness>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail: None,
            witness,
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    /// Free-form result lines (term lists, classes).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub output: Vec<String>,
    /// An emitted structure file.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<String>,
    #[serde(skip)]
    witnesses: bool,
}

impl Report {
    pub fn new(command: Vec<String>, witnesses: bool) -> Self {
        Self {
            command,
            passed: true,
            checks: Vec::new(),
            output: Vec::new(),
            structure: None,
            witnesses,
        }
    }

    pub fn witnesses(&self) -> bool {
        self.witnesses
    }

    pub fn push(&mut self, mut check: Check) {
        if !self.witnesses {
            check.witness = None;
        }
        self.passed &= check.passed;
        self.checks.push(check);
    }

    /// One check per law of `rep`, in the order checked.
    pub fn push_axioms(&mut self, rep: &AxiomReport, labels: &[String]) {
        for &law in rep.checked() {
            match rep.failure(law) {
                None => self.push(Check::pass(law)),
                Some(f) => {
                    let mut c = Check::fail(law, Some(Witness::from_failure(f, labels)));
                    if let Some(eq) = f.instantiate(labels) {
                        c = c.detail(eq);
                    }
                    self.push(c);
                }
            }
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let emitting = self.structure.is_some();
        // prefix with '#' so an emitted structure stays a valid file
        let lead = if emitting { "# " } else { "" };
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{lead}{verdict}  {}", c.name);
            if let Some(d) = &c.detail {
                let _ = write!(out, ": {d}");
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "{lead}      witness {}", w.render());
            }
        }
        for line in &self.output {
            let _ = writeln!(out, "{lead}{line}");
        }
        if !self.checks.is_empty() {
            let verdict = if self.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{lead}verdict: {verdict}");
        }
        if let Some(s) = &self.structure {
            out.push_str(s);
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}
