use thiserror::Error;

use crate::matroid::{CircuitViolation, IndependenceViolation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe has {0} elements; at most {max} are supported", max = crate::sets::MAX_UNIVERSE)]
    UniverseTooLarge(usize),

    #[error("duplicate element label {0:?} in universe")]
    DuplicateLabel(String),

    #[error("element index {index} is outside a universe of {size} elements")]
    InvalidElement { index: usize, size: usize },

    #[error("{}unknown element {token:?}", line_prefix(*.line))]
    UnknownElement { token: String, line: Option<usize> },

    #[error("operands live on different universes")]
    UniverseMismatch,

    #[error("not a circuit family: {violation}{}", lines_suffix(.lines))]
    CircuitAxioms {
        violation: CircuitViolation,
        lines: Vec<usize>,
    },

    #[error("not an independent-set family: {0}")]
    IndependenceAxioms(IndependenceViolation),

    #[error("relation is not serial: element {element} has an empty neighborhood")]
    NotSerial { element: String },

    #[error(
        "relation is not transitive: {y} is in RN({x}) but RN({y}) is not contained in RN({x})"
    )]
    NotTransitive { x: String, y: String },

    #[error("relation is not an equivalence relation")]
    NotEquivalence,

    #[error("equivalence class of {element} has {size} elements; at most 2 allowed")]
    ClassTooLarge { element: String, size: usize },

    #[error("search space for n = {0} is too large; exhaustive enumeration supports n <= {max}", max = crate::enumeration::MAX_ENUMERATION)]
    SearchSpaceTooLarge(usize),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("missing `{0}` header")]
    MissingHeader(&'static str),

    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
}

impl Error {
    /// Precondition violations on otherwise well-formed inputs.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotSerial { .. }
                | Error::NotTransitive { .. }
                | Error::NotEquivalence
                | Error::ClassTooLarge { .. }
        )
    }
}

fn line_prefix(line: Option<usize>) -> String {
    match line {
        Some(l) => format!("line {l}: "),
        None => String::new(),
    }
}

fn lines_suffix(lines: &[usize]) -> String {
    match lines {
        [] => String::new(),
        [l] => format!(" (line {l})"),
        ls => {
            let joined: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
            format!(" (lines {})", joined.join(", "))
        }
    }
}
