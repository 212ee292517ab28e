//! The text matrix format.
//!
//! ```text
//! # comments start with '#'
//! maxplus
//! 3 3
//! -2 1 -inf
//! -1 -1 -2
//! -1 -inf -2
//! ```
//!
//! The first line is the tag (`maxplus`, `maxtimes`, `boolean` or
//! `classical`), the second holds the dimensions, and then come the rows.
//! `-inf` is accepted only under `maxplus`; `maxtimes` and `classical`
//! entries are nonnegative reals and `boolean` entries are `0` or `1`.

use std::fmt;
use std::path::{Path, PathBuf};

use maxcomm::classical::NonnegMatrix;
use maxcomm::{Algebra, Scalar, TropMatrix};

use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tag {
    MaxPlus,
    MaxTimes,
    Boolean,
    Classical,
}

impl Tag {
    fn parse(word: &str) -> Option<Tag> {
        match word {
            "maxplus" => Some(Tag::MaxPlus),
            "maxtimes" => Some(Tag::MaxTimes),
            "boolean" => Some(Tag::Boolean),
            "classical" => Some(Tag::Classical),
            _ => None,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::MaxPlus => "maxplus",
            Tag::MaxTimes => "maxtimes",
            Tag::Boolean => "boolean",
            Tag::Classical => "classical",
        })
    }
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    line: usize,
    col: usize,
}

/// A matrix file read and checked for shape and tag-specific token rules;
/// entries are converted to scalars on demand.
#[derive(Clone, Debug)]
pub struct MatrixFile {
    pub path: PathBuf,
    pub tag: Tag,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Token>,
}

impl MatrixFile {
    pub fn read(path: &Path) -> CliResult<MatrixFile> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        MatrixFile::parse(path, &text)
    }

    pub fn parse(path: &Path, text: &str) -> CliResult<MatrixFile> {
        let fail = |line: usize, col: usize, message: String| CliError::Parse {
            path: path.to_path_buf(),
            line,
            col,
            message,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

        let (tag_line, tag_text) = lines.next().ok_or_else(|| fail(1, 1, "empty file".into()))?;
        let tag = Tag::parse(tag_text.trim()).ok_or_else(|| {
            fail(tag_line, 1, format!("unknown tag `{}`", tag_text.trim()))
        })?;

        let (dims_line, dims_text) = lines
            .next()
            .ok_or_else(|| fail(tag_line + 1, 1, "missing dimensions line".into()))?;
        let dims: Vec<Token> = tokens(dims_line, dims_text);
        let parse_dim = |t: &Token| match t.text.parse::<usize>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(fail(t.line, t.col, format!("bad dimension `{}`", t.text))),
        };
        let (rows, cols) = match dims.as_slice() {
            [r, c] => (parse_dim(r)?, parse_dim(c)?),
            _ => return Err(fail(dims_line, 1, "expected `rows cols`".into())),
        };

        let mut entries = Vec::with_capacity(rows * cols);
        let mut row_count = 0;
        for (number, line) in lines {
            let row = tokens(number, line);
            if row_count == rows {
                return Err(fail(number, row[0].col, format!("more than {rows} rows")));
            }
            if row.len() != cols {
                return Err(fail(
                    number,
                    1,
                    format!("expected {cols} entries, found {}", row.len()),
                ));
            }
            for t in &row {
                check_token(tag, t).map_err(|m| fail(t.line, t.col, m))?;
            }
            entries.extend(row);
            row_count += 1;
        }
        if row_count != rows {
            let last = text.lines().count().max(1);
            return Err(fail(last, 1, format!("expected {rows} rows, found {row_count}")));
        }
        Ok(MatrixFile {
            path: path.to_path_buf(),
            tag,
            rows,
            cols,
            entries,
        })
    }

    /// The matrix as max-plus scalars of type `S`. Max-times entries go
    /// through the logarithm, which only float scalars support.
    pub fn tropical<S: Scalar>(&self) -> CliResult<TropMatrix<S>> {
        let fail = |t: &Token, message: String| CliError::Parse {
            path: self.path.clone(),
            line: t.line,
            col: t.col,
            message,
        };
        let (algebra, data) = match self.tag {
            Tag::MaxPlus => {
                let data = self
                    .entries
                    .iter()
                    .map(|t| {
                        t.text
                            .parse::<S>()
                            .map_err(|_| fail(t, format!("bad entry `{}`", t.text)))
                    })
                    .collect::<CliResult<Vec<S>>>()?;
                (Algebra::MaxPlus, data)
            }
            Tag::Boolean => {
                let data = self
                    .entries
                    .iter()
                    .map(|t| if t.text == "1" { S::unit() } else { S::bottom() })
                    .collect();
                (Algebra::Boolean, data)
            }
            Tag::MaxTimes => {
                let data = self
                    .entries
                    .iter()
                    .map(|t| {
                        let x: f64 = t.text.parse().expect("checked while reading");
                        if x == 0.0 {
                            Ok(S::bottom())
                        } else {
                            S::from_f64(x.ln()).ok_or_else(|| {
                                CliError::Usage(format!(
                                    "{}: max-times input needs --mode float",
                                    self.path.display()
                                ))
                            })
                        }
                    })
                    .collect::<CliResult<Vec<S>>>()?;
                (Algebra::MaxTimes, data)
            }
            Tag::Classical => {
                return Err(CliError::TagMismatch {
                    path: self.path.clone(),
                    expected: "maxplus, maxtimes or boolean",
                    found: self.tag.to_string(),
                })
            }
        };
        Ok(TropMatrix::new(self.rows, self.cols, data, algebra)?)
    }

    pub fn classical(&self) -> CliResult<NonnegMatrix> {
        if self.tag != Tag::Classical {
            return Err(CliError::TagMismatch {
                path: self.path.clone(),
                expected: "classical",
                found: self.tag.to_string(),
            });
        }
        let data = self
            .entries
            .iter()
            .map(|t| t.text.parse().expect("checked while reading"))
            .collect();
        Ok(NonnegMatrix::new(self.rows, self.cols, data)?)
    }
}

fn tokens(line: usize, text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut start = None;
    for (k, ch) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(k),
            (true, Some(s)) => {
                out.push(Token {
                    text: text[s..k].to_string(),
                    line,
                    col: text[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn check_token(tag: Tag, t: &Token) -> Result<(), String> {
    let nonnegative = |t: &Token| match t.text.parse::<f64>() {
        Ok(x) if x.is_finite() && x >= 0.0 => Ok(()),
        Ok(_) => Err(format!("entry `{}` must be a nonnegative real", t.text)),
        Err(_) => Err(format!("bad entry `{}`", t.text)),
    };
    match tag {
        // exact syntax is checked when the scalar type is known
        Tag::MaxPlus => Ok(()),
        Tag::Boolean if t.text == "0" || t.text == "1" => Ok(()),
        Tag::Boolean => Err(format!("boolean entry `{}` must be 0 or 1", t.text)),
        Tag::MaxTimes | Tag::Classical if t.text == "-inf" => {
            Err(format!("`-inf` is only valid under maxplus, not {tag}"))
        }
        Tag::MaxTimes | Tag::Classical => nonnegative(t),
    }
}

fn emit(tag: Tag, rows: usize, cols: usize, entry: impl Fn(usize, usize) -> String) -> String {
    let mut out = format!("{tag}\n{rows} {cols}\n");
    for i in 0..rows {
        let row: Vec<String> = (0..cols).map(|j| entry(i, j)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Serializes a max-plus matrix in the file format, under the tag its
/// algebra records.
pub fn emit_tropical<S: Scalar>(m: &TropMatrix<S>) -> String {
    let tag = match m.algebra() {
        Algebra::MaxPlus => Tag::MaxPlus,
        Algebra::MaxTimes => Tag::MaxTimes,
        Algebra::Boolean => Tag::Boolean,
    };
    emit(tag, m.rows(), m.cols(), |i, j| {
        let x = m.get(i, j);
        match tag {
            Tag::Boolean => u8::from(x.is_unit()).to_string(),
            Tag::MaxTimes if x.is_bottom() => "0".into(),
            Tag::MaxTimes => x.to_f64().exp().to_string(),
            _ => x.to_string(),
        }
    })
}

pub fn emit_classical(m: &NonnegMatrix) -> String {
    emit(Tag::Classical, m.rows(), m.cols(), |i, j| m.get(i, j).to_string())
}
