//! Small shared result types for the verification suites.

/// One named check inside a suite report.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize, PartialEq)]
pub struct SuiteItem {
    pub name: String,
    /// Statement label the check certifies (e.g. a theorem or lemma number).
    pub anchor: String,
    pub pass: bool,
    /// Human-readable counterexample or mismatch payload on failure; may
    /// also carry informational notes on success (e.g. reported
    /// discrepancies that are tolerated by design).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SuiteItem {
    pub fn pass(name: impl Into<String>, anchor: impl Into<String>) -> Self {
        SuiteItem {
            name: name.into(),
            anchor: anchor.into(),
            pass: true,
            detail: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        anchor: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        SuiteItem {
            name: name.into(),
            anchor: anchor.into(),
            pass: false,
            detail: Some(detail.into()),
        }
    }

    pub fn from_eq(name: impl Into<String>, anchor: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name, anchor)
        } else {
            Self::fail(name, anchor, detail)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.detail = Some(note.into());
        self
    }
}

/// A list of named checks produced by one suite-style operation.
#[derive(Debug, Clone, Default, serde::Serialize, serde::Deserialize, PartialEq)]
pub struct SuiteReport {
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn push(&mut self, item: SuiteItem) {
        self.items.push(item);
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteItem> {
        self.items.iter().filter(|i| !i.pass)
    }
}
