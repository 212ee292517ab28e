use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}:{line}:{col}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{}: expected {expected} input, found tag `{found}`", path.display())]
    TagMismatch {
        path: PathBuf,
        expected: &'static str,
        found: String,
    },
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{}", one_based(.0))]
    Library(#[from] maxcomm::Error),
}

impl CliError {
    /// 1 for a violated mathematical precondition, 2 for anything the user
    /// has to fix in the invocation or the input files.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Library messages with matrix and node indices shifted to the 1-based
/// numbering the command line uses.
fn one_based(e: &maxcomm::Error) -> String {
    use maxcomm::Error as E;
    match e {
        E::NotCommuting(i, j) => format!("matrices {} and {} do not commute", i + 1, j + 1),
        E::NotIrreducible(k) => format!("matrix {} is not irreducible", k + 1),
        E::RootsNotDistinct(k) => format!("matrix {} has two classes with equal Perron roots", k + 1),
        E::ZeroOutDegree { node } => format!("node {} has zero out-degree", node + 1),
        E::IndexOutOfRange { index, len } => format!("index {} out of range 1..={len}", index + 1),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_are_one_based() {
        let e = CliError::from(maxcomm::Error::NotCommuting(0, 1));
        assert_eq!(e.to_string(), "matrices 1 and 2 do not commute");
        assert_eq!(e.exit_code(), 1);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
    }
}
