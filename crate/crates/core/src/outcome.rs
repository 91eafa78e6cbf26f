use alloc::string::String;
use core::fmt;

/// Result of checking one statement on one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails { detail: String },
    /// A hypothesis of the statement is false for this input.
    Inapplicable { clause: String },
}

impl Outcome {
    pub fn fails(detail: impl Into<String>) -> Self {
        Outcome::Fails {
            detail: detail.into(),
        }
    }

    pub fn inapplicable(clause: impl Into<String>) -> Self {
        Outcome::Inapplicable {
            clause: clause.into(),
        }
    }

    /// `Holds` when `ok`, else `Fails` with the given detail.
    pub fn from_check(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails { detail: detail() }
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fails { .. })
    }

    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Holds => f.write_str("holds"),
            Outcome::Fails { detail } => write!(f, "FAILS: {detail}"),
            Outcome::Inapplicable { clause } => write!(f, "inapplicable ({clause})"),
        }
    }
}
