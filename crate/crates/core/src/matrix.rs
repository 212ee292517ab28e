//! Dense max-plus matrices and the semiring kernel: `⊕`, `⊗`, commutation,
//! diagonal scaling, residuation and unit thresholding.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, TropScalar};

/// How the entries of a [`TropMatrix`] should be read.
///
/// Entries are always stored in the additive (max-plus) picture; the tag
/// records provenance. `MaxTimes` data was read through the logarithm and
/// `Boolean` matrices only hold bottom and unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    MaxPlus,
    MaxTimes,
    Boolean,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::MaxPlus => "maxplus",
            Algebra::MaxTimes => "maxtimes",
            Algebra::Boolean => "boolean",
        })
    }
}

/// Row-major dense matrix over a max-plus scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct TropMatrix<S = TropScalar> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    algebra: Algebra,
}

pub type Vector<S = TropScalar> = Vec<S>;

impl<S: Scalar> TropMatrix<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>, algebra: Algebra) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                found: data.len(),
            });
        }
        if algebra == Algebra::Boolean {
            if let Some(pos) = data.iter().position(|x| !x.is_bottom() && !x.is_unit()) {
                return Err(Error::NotBoolean {
                    row: pos / cols,
                    col: pos % cols,
                });
            }
        }
        Ok(TropMatrix {
            rows,
            cols,
            data,
            algebra,
        })
    }

    /// Max-plus matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::EntryCount {
                rows: r,
                cols: c,
                found: bad.len(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect(), Algebra::MaxPlus)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector<S>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for column in columns {
                if column.len() != rows {
                    return Err(Error::EntryCount {
                        rows,
                        cols,
                        found: column.len(),
                    });
                }
                data.push(column[i].clone());
            }
        }
        Self::new(rows, cols, data, Algebra::MaxPlus)
    }

    pub fn filled(rows: usize, cols: usize, value: S) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        TropMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
            algebra: Algebra::MaxPlus,
        }
    }

    pub fn bottom(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, S::bottom())
    }

    /// Unit on the diagonal, bottom elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::bottom(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::unit();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn with_algebra(mut self, algebra: Algebra) -> Result<Self> {
        if algebra == Algebra::Boolean {
            return Self::new(self.rows, self.cols, self.data, algebra);
        }
        self.algebra = algebra;
        Ok(self)
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        TropMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
            algebra: self.algebra,
        }
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            algebra: self.algebra,
        }
    }

    /// `c ⊗ A`.
    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.otimes(c))
    }

    /// `A ⊘ c`, i.e. every finite entry shifted by `-c`. Panics on bottom `c`.
    pub fn div_scalar(&self, c: &S) -> Self {
        self.map(|x| x.odiv(c))
    }

    /// Principal submatrix (or general submatrix) on the given index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        TropMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
            algebra: self.algebra,
        }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vector<S> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(S::bottom(), |acc, (a, x)| acc.oplus(&a.otimes(x)))
            })
            .collect()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.shape() == other.shape()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_eq(b))
    }

    /// Entrywise `self <= other`.
    pub fn approx_le(&self, other: &Self) -> bool {
        self.shape() == other.shape()
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.approx_le(b))
    }

    pub fn column_is_bottom(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_bottom())
    }

    /// `true` when entry `(i, j)` is an edge of the associated digraph.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        !self.get(i, j).is_bottom()
    }

    /// Associated digraph as a row-major adjacency list.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| self.has_edge(i, j)).collect())
            .collect()
    }

    /// Largest entry, bottom if all entries are bottom.
    pub fn max_entry(&self) -> S {
        self.data.iter().fold(S::bottom(), |acc, x| acc.oplus(x))
    }

    /// `A^k`, with `A^0 = I`.
    pub fn power(&self, k: u32) -> Result<Self> {
        let n = self.order()?;
        let mut result = Self::identity(n);
        result.algebra = self.algebra;
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = mat_mul(&result, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = mat_mul(&base, &base)?;
            }
        }
        Ok(result)
    }
}

fn check_same_shape<S: Scalar>(
    op: &'static str,
    a: &TropMatrix<S>,
    b: &TropMatrix<S>,
) -> Result<()> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            op,
            left: a.shape(),
            right: b.shape(),
        });
    }
    if a.algebra != b.algebra {
        return Err(Error::AlgebraMismatch { op });
    }
    Ok(())
}

/// Entrywise maximum `A ⊕ B`.
pub fn mat_add<S: Scalar>(a: &TropMatrix<S>, b: &TropMatrix<S>) -> Result<TropMatrix<S>> {
    check_same_shape("mat_add", a, b)?;
    Ok(TropMatrix {
        rows: a.rows,
        cols: a.cols,
        data: a.data.iter().zip(&b.data).map(|(x, y)| x.oplus(y)).collect(),
        algebra: a.algebra,
    })
}

/// Max-plus product `A ⊗ B`: `c_ij = max_k (a_ik + b_kj)`.
pub fn mat_mul<S: Scalar>(a: &TropMatrix<S>, b: &TropMatrix<S>) -> Result<TropMatrix<S>> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch {
            op: "mat_mul",
            left: a.shape(),
            right: b.shape(),
        });
    }
    if a.algebra != b.algebra {
        return Err(Error::AlgebraMismatch { op: "mat_mul" });
    }
    let mut data = vec![S::bottom(); a.rows * b.cols];
    for i in 0..a.rows {
        for k in 0..a.cols {
            let aik = a.get(i, k);
            if aik.is_bottom() {
                continue;
            }
            for j in 0..b.cols {
                let bkj = b.get(k, j);
                if bkj.is_bottom() {
                    continue;
                }
                let slot = &mut data[i * b.cols + j];
                let candidate = aik.otimes(bkj);
                if candidate > *slot {
                    *slot = candidate;
                }
            }
        }
    }
    Ok(TropMatrix {
        rows: a.rows,
        cols: b.cols,
        data,
        algebra: a.algebra,
    })
}

/// `true` iff `A ⊗ B = B ⊗ A` (within epsilon for float scalars).
pub fn commute_check<S: Scalar>(a: &TropMatrix<S>, b: &TropMatrix<S>) -> Result<bool> {
    let n = a.order()?;
    if b.shape() != (n, n) {
        return Err(Error::ShapeMismatch {
            op: "commute_check",
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(mat_mul(a, b)?.approx_eq(&mat_mul(b, a)?))
}

/// Pairwise commutation of a family; reports the first offending pair.
pub fn check_family_commutes<S: Scalar>(mats: &[TropMatrix<S>]) -> Result<()> {
    if mats.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !commute_check(&mats[i], &mats[j])? {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    Ok(())
}

/// Diagonal similarity `U⁻¹ A U` with `U = diag(u)`: `ã_ij = a_ij ⊗ u_j ⊗ u_i⁻¹`.
pub fn scale_diag<S: Scalar>(a: &TropMatrix<S>, u: &[S]) -> Result<TropMatrix<S>> {
    let n = a.order()?;
    if u.len() != n {
        return Err(Error::ShapeMismatch {
            op: "scale_diag",
            left: a.shape(),
            right: (u.len(), 1),
        });
    }
    let inverses = u
        .iter()
        .enumerate()
        .map(|(index, x)| x.inverse().ok_or(Error::BottomInScaling { index }))
        .collect::<Result<Vec<_>>>()?;
    let mut out = a.clone();
    for i in 0..n {
        for j in 0..n {
            let v = a.get(i, j).otimes(&u[j]).otimes(&inverses[i]);
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Greatest `C` with `X ⊗ C <= Y` (max-plus residuation `X \ Y`).
///
/// `C_kj = min_{i : X_ik finite} (Y_ij - X_ik)`, where a bottom `Y_ij`
/// forces bottom. The caller certifies exact solvability by checking
/// `X ⊗ C == Y`.
pub fn residual<S: Scalar>(x: &TropMatrix<S>, y: &TropMatrix<S>) -> Result<TropMatrix<S>> {
    if x.rows != y.rows {
        return Err(Error::ShapeMismatch {
            op: "residual",
            left: x.shape(),
            right: y.shape(),
        });
    }
    if let Some(col) = (0..x.cols).find(|&k| x.column_is_bottom(k)) {
        return Err(Error::EmptyColumn { col });
    }
    let mut data = Vec::with_capacity(x.cols * y.cols);
    for k in 0..x.cols {
        for j in 0..y.cols {
            let mut best: Option<S> = None;
            for i in 0..x.rows {
                let xik = x.get(i, k);
                if xik.is_bottom() {
                    continue;
                }
                let candidate = y.get(i, j).odiv(xik);
                best = Some(match best {
                    Some(current) if current <= candidate => current,
                    _ => candidate,
                });
            }
            data.push(best.expect("column has a finite entry"));
        }
    }
    Ok(TropMatrix {
        rows: x.cols,
        cols: y.cols,
        data,
        algebra: y.algebra,
    })
}

/// Boolean matrix with unit exactly where `A` equals the unit. Every entry
/// must be at most the unit, i.e. `A` must already be scaled.
pub fn threshold_unit<S: Scalar>(a: &TropMatrix<S>) -> Result<TropMatrix<S>> {
    let mut data = Vec::with_capacity(a.data.len());
    for (pos, x) in a.data.iter().enumerate() {
        if !x.approx_le(&S::unit()) {
            return Err(Error::AboveUnit {
                row: pos / a.cols,
                col: pos % a.cols,
            });
        }
        data.push(if x.is_unit() { S::unit() } else { S::bottom() });
    }
    Ok(TropMatrix {
        rows: a.rows,
        cols: a.cols,
        data,
        algebra: Algebra::Boolean,
    })
}

/// Scales a nonzero vector so that its largest entry is the unit.
pub fn normalize_vector<S: Scalar>(v: &[S]) -> Option<Vector<S>> {
    let top = v.iter().fold(S::bottom(), |acc, x| acc.oplus(x));
    if top.is_bottom() {
        return None;
    }
    Some(v.iter().map(|x| x.odiv(&top)).collect())
}

pub fn vectors_approx_eq<S: Scalar>(a: &[S], b: &[S]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y))
}

/// `c ⊗ v`.
pub fn scale_vector<S: Scalar>(v: &[S], c: &S) -> Vector<S> {
    v.iter().map(|x| x.otimes(c)).collect()
}

/// Checks `A ⊗ v = α ⊗ v` for a nonzero `v`.
pub fn is_eigenpair<S: Scalar>(a: &TropMatrix<S>, v: &[S], alpha: &S) -> bool {
    v.iter().any(|x| !x.is_bottom())
        && vectors_approx_eq(&a.mul_vec(v), &scale_vector(v, alpha))
}

/// Support (indices of finite entries) of a vector.
pub fn support<S: Scalar>(v: &[S]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_bottom())
        .map(|(i, _)| i)
        .collect()
}

/// Keeps one representative per ray: normalizes each vector and drops
/// duplicates (in first-seen order).
pub fn dedup_rays<S: Scalar>(vectors: impl IntoIterator<Item = Vector<S>>) -> Vec<Vector<S>> {
    let mut out: Vec<Vector<S>> = Vec::new();
    for v in vectors {
        if let Some(n) = normalize_vector(&v) {
            if !out.iter().any(|w| vectors_approx_eq(w, &n)) {
                out.push(n);
            }
        }
    }
    out
}

impl<S: Scalar> fmt::Display for TropMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Parses `"a b c; d e f"` (optionally wrapped in brackets) as a max-plus
/// matrix; handy in tests and examples.
impl<S: Scalar> FromStr for TropMatrix<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let rows = body
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| {
                        tok.parse::<S>().map_err(|_| {
                            Error::PreconditionViolated(format!("bad matrix entry `{tok}`"))
                        })
                    })
                    .collect::<Result<Vec<S>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}
