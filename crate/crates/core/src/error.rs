use thiserror::Error;

/// Errors raised by the combinatorial operations and the text parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("grade mismatch: {left} vs {right}")]
    GradeMismatch { left: usize, right: usize },

    #[error("{op} is undefined in grade 0")]
    GradeZero { op: &'static str },

    #[error("expected grade {expected}, got {actual}")]
    WrongGrade { expected: usize, actual: usize },

    #[error("not a permutation: {0}")]
    NotBijective(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn same_grade(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::GradeMismatch { left, right })
    }
}
