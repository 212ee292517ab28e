//! Nonnegative matrices in ordinary arithmetic. Class structure is shared
//! with the max-plus layer; what changes is the label of a class (its
//! classical Perron root) and that eigenvector supports are governed by
//! premier spectral classes.
//!
//! Roots of irreducible blocks are generally irrational, so everything
//! here is `f64` with a tolerance.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};

use crate::commuting::CommonEigenResult;
use crate::error::{Error, Result};
use crate::poly::parse_factors;
use crate::structure::{ClassDecomposition, RootOrder};

pub const CLASSICAL_EPSILON: f64 = 1e-9;

const POWER_CAP: usize = 200_000;
const POWER_TOL: f64 = 1e-13;

/// Square or rectangular matrix with finite nonnegative entries.
#[derive(Clone, Debug, PartialEq)]
pub struct NonnegMatrix {
    m: DMatrix<f64>,
}

impl NonnegMatrix {
    /// Row-major constructor.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
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
        Self::from_dmatrix(DMatrix::from_row_slice(rows, cols, &data))
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::EntryCount {
                rows: r,
                cols: c,
                found: bad.len(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_dmatrix(m: DMatrix<f64>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let x = m[(i, j)];
                if !x.is_finite() || x < 0.0 {
                    return Err(Error::NegativeEntry { row: i, col: j });
                }
            }
        }
        Ok(NonnegMatrix { m })
    }

    pub fn identity(n: usize) -> Self {
        NonnegMatrix {
            m: DMatrix::identity(n, n),
        }
    }

    pub fn as_dmatrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn rows(&self) -> usize {
        self.m.nrows()
    }

    pub fn cols(&self) -> usize {
        self.m.ncols()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    pub fn order(&self) -> Result<usize> {
        if self.rows() != self.cols() {
            return Err(Error::NotSquare {
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(self.rows())
    }

    pub fn transpose(&self) -> Self {
        NonnegMatrix {
            m: self.m.transpose(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols() != other.rows() {
            return Err(Error::ShapeMismatch {
                op: "mul",
                left: (self.rows(), self.cols()),
                right: (other.rows(), other.cols()),
            });
        }
        Ok(NonnegMatrix {
            m: &self.m * &other.m,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.m.shape() != other.m.shape() {
            return Err(Error::ShapeMismatch {
                op: "add",
                left: self.m.shape(),
                right: other.m.shape(),
            });
        }
        Ok(NonnegMatrix {
            m: &self.m + &other.m,
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        NonnegMatrix {
            m: DMatrix::from_fn(rows.len(), cols.len(), |i, j| self.m[(rows[i], cols[j])]),
        }
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (&self.m * DVector::from_column_slice(v)).iter().copied().collect()
    }

    /// Maximum row sum.
    pub fn norm_inf(&self) -> f64 {
        norm_inf(&self.m)
    }

    /// Digraph with an edge `i -> j` whenever `a_ij > 0`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.rows())
            .map(|i| (0..self.cols()).filter(|&j| self.m[(i, j)] > 0.0).collect())
            .collect()
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.m.shape() == other.m.shape()
            && norm_inf(&(&self.m - &other.m)) <= eps * (1.0 + self.norm_inf().max(other.norm_inf()))
    }
}

impl fmt::Display for NonnegMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let row: Vec<String> = (0..self.cols()).map(|j| self.m[(i, j)].to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}

/// Parses `"10 0 0; 5 0 0; 2 3 3"`.
impl FromStr for NonnegMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|x| {
                        x.parse::<f64>().map_err(|_| {
                            Error::PreconditionViolated(format!("bad number `{x}`"))
                        })
                    })
                    .collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

fn norm_inf(m: &DMatrix<f64>) -> f64 {
    m.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

fn close(x: f64, y: f64, eps: f64) -> bool {
    (x - y).abs() <= eps * (1.0 + x.abs().max(y.abs()))
}

/// `‖AB - BA‖∞ <= ε (1 + ‖A‖∞ ‖B‖∞)`.
pub fn classical_commute_check(a: &NonnegMatrix, b: &NonnegMatrix, eps: f64) -> Result<bool> {
    let n = a.order()?;
    if b.m.shape() != (n, n) {
        return Err(Error::ShapeMismatch {
            op: "classical_commute_check",
            left: a.m.shape(),
            right: b.m.shape(),
        });
    }
    let gap = norm_inf(&(&a.m * &b.m - &b.m * &a.m));
    Ok(gap <= eps * (1.0 + a.norm_inf() * b.norm_inf()))
}

fn check_family(mats: &[NonnegMatrix], eps: f64) -> Result<()> {
    if mats.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            if !classical_commute_check(&mats[i], &mats[j], eps)? {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    Ok(())
}

/// Spectral radius and a nonnegative eigenvector (largest entry 1) of a
/// nonnegative square matrix whose spectral radius is a simple eigenvalue.
///
/// Power iteration runs on `M + cI` with `c = 1 + max diagonal entry`,
/// which makes the spectral radius strictly dominant. If it stalls, the
/// radius is read off the complex spectrum and the vector off the null
/// space of `M - ρI`.
pub fn perron_pair(m: &DMatrix<f64>) -> (f64, Vec<f64>) {
    let n = m.nrows();
    let c = 1.0 + m.diagonal().iter().copied().fold(0.0, f64::max);
    let shifted = m + DMatrix::identity(n, n) * c;
    let mut x = DVector::from_element(n, 1.0);
    for _ in 0..POWER_CAP {
        let y = &shifted * &x;
        let top = y.max();
        let next = y / top;
        let diff = (&next - &x).amax();
        x = next;
        if diff <= POWER_TOL {
            return (top - c, x.iter().copied().collect());
        }
    }
    null_space_fallback(m)
}

fn null_space_fallback(m: &DMatrix<f64>) -> (f64, Vec<f64>) {
    let n = m.nrows();
    let rho = m
        .clone()
        .complex_eigenvalues()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let shifted = m - DMatrix::identity(n, n) * rho;
    let svd = shifted.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let k = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .map(|(k, _)| k)
        .expect("nonempty spectrum");
    let raw: Vec<f64> = v_t.row(k).iter().map(|x| x.abs()).collect();
    let top = raw.iter().copied().fold(0.0, f64::max);
    (rho, raw.iter().map(|x| x / top).collect())
}

/// Classical Perron root of a principal block.
fn block_root(a: &NonnegMatrix, nodes: &[usize]) -> f64 {
    if let [i] = nodes {
        return a.get(*i, *i);
    }
    perron_pair(&a.submatrix(nodes, nodes).m).0
}

/// Classes, classical Perron roots, access closure and flags. The flags
/// follow the max-plus definitions with classical roots; the classical
/// theory is governed by the premier spectral flag.
pub fn classical_decompose(a: &NonnegMatrix, eps: f64) -> Result<ClassDecomposition<f64>> {
    a.order()?;
    let order = RootOrder {
        is_zero: &|r: &f64| *r <= eps,
        le: &|x: &f64, y: &f64| *x <= *y || close(*x, *y, eps),
        lt: &|x: &f64, y: &f64| *x < *y && !close(*x, *y, eps),
    };
    Ok(ClassDecomposition::build(
        &a.adjacency(),
        |nodes| block_root(a, nodes),
        order,
    ))
}

fn sorted_distinct(mut values: Vec<f64>, eps: f64) -> Vec<f64> {
    values.sort_by(|x, y| y.total_cmp(x));
    values.dedup_by(|x, y| close(*x, *y, eps));
    values
}

/// Roots of the premier spectral classes, largest first.
pub fn distinguished_eigenvalues(a: &NonnegMatrix, eps: f64) -> Result<Vec<f64>> {
    let d = classical_decompose(a, eps)?;
    Ok(distinguished_of(&d, eps))
}

fn distinguished_of(d: &ClassDecomposition<f64>, eps: f64) -> Vec<f64> {
    sorted_distinct(
        d.premier_spectral_classes()
            .into_iter()
            .map(|c| d.roots[c])
            .collect(),
        eps,
    )
}

/// `μ` with `M u = μ u` within tolerance, if `u` is an eigenvector.
fn eigen_ratio(m: &NonnegMatrix, u: &[f64], eps: f64) -> Option<f64> {
    let mu_vec = m.mul_vec(u);
    let dot: f64 = u.iter().zip(&mu_vec).map(|(x, y)| x * y).sum();
    let norm2: f64 = u.iter().map(|x| x * x).sum();
    if norm2 == 0.0 {
        return None;
    }
    let mu = dot / norm2;
    let scale = u.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let residual = mu_vec
        .iter()
        .zip(u)
        .fold(0.0f64, |acc, (y, x)| acc.max((y - mu * x).abs()));
    (residual <= eps * (1.0 + m.norm_inf()) * scale).then_some(mu)
}

/// Common nonnegative eigenvector of a commuting pair, with `A`-eigenvalue
/// the distinguished eigenvalue `α`.
///
/// The `A`-eigenvector supported on the initial segment of a premier
/// spectral class with root `α` is tried first. When it is not a
/// `B`-eigenvector, shifted power iteration with `B` inside the nonnegative
/// eigencone of `A` produces one.
pub fn classical_common_eigenvector(
    a: &NonnegMatrix,
    b: &NonnegMatrix,
    alpha: f64,
    eps: f64,
) -> Result<CommonEigenResult<f64>> {
    if !classical_commute_check(a, b, eps)? {
        return Err(Error::NotCommuting(0, 1));
    }
    let d = classical_decompose(a, eps)?;
    let nu = d
        .premier_spectral_classes()
        .into_iter()
        .find(|&c| close(d.roots[c], alpha, eps))
        .ok_or(Error::NotDistinguished)?;
    let nodes = d.nodes_of(&d.initial_segment(nu)?);
    let (rho, x) = perron_pair(&a.submatrix(&nodes, &nodes).m);
    if !close(rho, alpha, eps) {
        return Err(Error::InternalInvariantViolation(format!(
            "initial segment has Perron root {rho} instead of {alpha}"
        )));
    }
    let mut u = vec![0.0; a.rows()];
    for (k, &i) in nodes.iter().enumerate() {
        u[i] = x[k];
    }

    let u = match eigen_ratio(b, &u, eps) {
        Some(_) => u,
        None => power_in_cone(b, u),
    };
    let a_value = eigen_ratio(a, &u, eps);
    let b_value = eigen_ratio(b, &u, eps);
    match (a_value, b_value) {
        (Some(av), Some(bv)) if close(av, alpha, eps) => Ok(CommonEigenResult {
            vector: u,
            eigenvalues: vec![alpha, bv],
        }),
        _ => Err(Error::InternalInvariantViolation(
            "power iteration left the common eigencone".into(),
        )),
    }
}

fn power_in_cone(b: &NonnegMatrix, start: Vec<f64>) -> Vec<f64> {
    let n = b.rows();
    let c = 1.0 + b.m.diagonal().iter().copied().fold(0.0, f64::max);
    let shifted = &b.m + DMatrix::identity(n, n) * c;
    let mut x = DVector::from_vec(start);
    x /= x.max();
    for _ in 0..POWER_CAP {
        let y = &shifted * &x;
        let next = &y / y.max();
        let diff = (&next - &x).amax();
        x = next;
        if diff <= POWER_TOL {
            break;
        }
    }
    x.iter().copied().collect()
}

/// Verdict on a commuting pair where `B` is irreducible: `A` must be a
/// direct sum of irreducible blocks and `λ(A)` its only distinguished
/// eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducibilityVerdict {
    pub completely_reducible: bool,
    pub distinguished: Vec<f64>,
    pub perron_root: f64,
}

impl ReducibilityVerdict {
    pub fn holds(&self) -> bool {
        self.completely_reducible
            && self.distinguished.len() == 1
            && self.distinguished[0] == self.perron_root
    }
}

fn classically_irreducible(d: &ClassDecomposition<f64>, m: &NonnegMatrix) -> bool {
    d.class_count() == 1 && (m.rows() > 1 || m.get(0, 0) > 0.0)
}

pub fn complete_reducibility_check(
    a: &NonnegMatrix,
    b: &NonnegMatrix,
    eps: f64,
) -> Result<ReducibilityVerdict> {
    if !classical_commute_check(a, b, eps)? {
        return Err(Error::NotCommuting(0, 1));
    }
    if !classically_irreducible(&classical_decompose(b, eps)?, b) {
        return Err(Error::NotIrreducible(1));
    }
    let d = classical_decompose(a, eps)?;
    let perron_root = d.roots.iter().copied().fold(0.0, f64::max);
    Ok(ReducibilityVerdict {
        completely_reducible: d.reduced_edges.is_empty(),
        distinguished: distinguished_of(&d, eps),
        perron_root,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealTerm {
    pub coeff: f64,
    pub exponents: Vec<u32>,
}

/// Real polynomial in commuting variables; coefficients may be negative.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPolynomial {
    terms: Vec<RealTerm>,
}

impl RealPolynomial {
    pub fn new(terms: Vec<RealTerm>) -> Result<Self> {
        let arity = terms
            .first()
            .map(|t| t.exponents.len())
            .ok_or_else(|| Error::InvalidPolynomial("no terms".into()))?;
        if terms.iter().any(|t| t.exponents.len() != arity) {
            return Err(Error::InvalidPolynomial(
                "exponent vectors differ in length".into(),
            ));
        }
        Ok(RealPolynomial { terms })
    }

    pub fn terms(&self) -> &[RealTerm] {
        &self.terms
    }

    pub fn arity(&self) -> usize {
        self.terms[0].exponents.len()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.iter().all(|t| t.coeff >= 0.0)
    }

    pub fn eval_scalar(&self, point: &[f64]) -> Result<f64> {
        self.check_arity(point.len())?;
        Ok(self
            .terms
            .iter()
            .map(|t| {
                t.exponents
                    .iter()
                    .zip(point)
                    .fold(t.coeff, |v, (&e, x)| v * x.powi(e as i32))
            })
            .sum())
    }

    fn check_arity(&self, found: usize) -> Result<()> {
        if found != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found,
            });
        }
        Ok(())
    }

    /// `p(A_1, ..., A_r)` as a real matrix, factors multiplied in variable
    /// order.
    pub fn eval(&self, mats: &[NonnegMatrix]) -> Result<DMatrix<f64>> {
        self.check_arity(mats.len())?;
        let n = mats[0].order()?;
        for m in mats {
            if m.m.shape() != (n, n) {
                return Err(Error::ShapeMismatch {
                    op: "eval",
                    left: (n, n),
                    right: m.m.shape(),
                });
            }
        }
        let mut total = DMatrix::zeros(n, n);
        for t in &self.terms {
            let mut product = DMatrix::identity(n, n) * t.coeff;
            for (k, &e) in t.exponents.iter().enumerate() {
                for _ in 0..e {
                    product = &product * &mats[k].m;
                }
            }
            total += product;
        }
        Ok(total)
    }

    /// Evaluates and checks the result is nonnegative; entries that are
    /// negative only by rounding are set to zero.
    pub fn eval_nonnegative(&self, mats: &[NonnegMatrix], eps: f64) -> Result<NonnegMatrix> {
        let mut value = self.eval(mats)?;
        let scale = 1.0 + norm_inf(&value);
        for i in 0..value.nrows() {
            for j in 0..value.ncols() {
                let x = value[(i, j)];
                if x < -eps * scale {
                    return Err(Error::NegativeEvaluation { row: i, col: j });
                }
                value[(i, j)] = x.max(0.0);
            }
        }
        NonnegMatrix::from_dmatrix(value)
    }
}

impl fmt::Display for RealPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.terms.iter().enumerate() {
            let magnitude = t.coeff.abs();
            match (k, t.coeff < 0.0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if magnitude != 1.0 || t.exponents.iter().all(|&e| e == 0) {
                factors.push(magnitude.to_string());
            }
            for (i, &e) in t.exponents.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

/// Parses `"x1^2*x2 - x1*x2"`; `-` separates terms like `+` but negates.
impl FromStr for RealPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pieces: Vec<(f64, String)> = Vec::new();
        let mut sign = 1.0;
        let mut current = String::new();
        for ch in s.chars() {
            if ch != '+' && ch != '-' {
                current.push(ch);
                continue;
            }
            if !current.trim().is_empty() {
                pieces.push((sign, current.trim().to_string()));
            } else if !(pieces.is_empty() && ch == '-' && sign > 0.0) {
                return Err(Error::InvalidPolynomial(format!("empty term in `{s}`")));
            }
            sign = if ch == '-' { -1.0 } else { 1.0 };
            current.clear();
        }
        if current.trim().is_empty() {
            return Err(Error::InvalidPolynomial(format!("empty term in `{s}`")));
        }
        pieces.push((sign, current.trim().to_string()));
        let raw = pieces
            .into_iter()
            .map(|(sign, text)| {
                parse_factors(&text)
                    .map(|(coeffs, vars)| (sign, coeffs, vars))
                    .map_err(Error::InvalidPolynomial)
            })
            .collect::<Result<Vec<_>>>()?;
        if raw.is_empty() {
            return Err(Error::InvalidPolynomial("no terms".into()));
        }
        let arity = raw
            .iter()
            .flat_map(|(_, _, vars)| vars.iter().map(|(i, _)| i + 1))
            .max()
            .unwrap_or(1);
        let mut terms = Vec::with_capacity(raw.len());
        for (sign, coeffs, vars) in raw {
            let mut coeff = sign;
            for c in coeffs {
                let value: f64 = c
                    .parse()
                    .map_err(|_| Error::InvalidPolynomial(format!("bad coefficient `{c}`")))?;
                coeff *= value;
            }
            let mut exponents = vec![0; arity];
            for (i, e) in vars {
                exponents[i] += e;
            }
            terms.push(RealTerm { coeff, exponents });
        }
        Self::new(terms)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalPolynomialCheck {
    /// `p` of the class-aligned roots of the common premier spectral classes.
    pub predicted: Vec<f64>,
    /// Distinguished eigenvalues of `p(A_1, ..., A_r)`.
    pub actual: Vec<f64>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalDistrootsReport {
    pub classes: Vec<Vec<usize>>,
    pub classes_coincide: bool,
    pub closures_coincide: bool,
    pub premier_spectral_classes: Vec<Vec<usize>>,
    pub premier_coincide: bool,
    /// Common premier spectral classes are premier spectral for the sum.
    pub premier_in_sum: bool,
    pub polynomial_check: Option<ClassicalPolynomialCheck>,
}

impl ClassicalDistrootsReport {
    pub fn holds(&self) -> bool {
        self.classes_coincide
            && self.closures_coincide
            && self.premier_coincide
            && self.premier_in_sum
            && self.polynomial_check.as_ref().is_none_or(|c| c.holds)
    }
}

fn has_distinct_roots(d: &ClassDecomposition<f64>, eps: f64) -> bool {
    d.roots
        .iter()
        .enumerate()
        .all(|(i, x)| d.roots[i + 1..].iter().all(|y| !close(*x, *y, eps)))
}

/// Structure shared by a commuting family whose members each have pairwise
/// distinct class roots, and optionally the spectral mapping for a real
/// polynomial whose value on the family is nonnegative.
pub fn classical_distroots_report(
    mats: &[NonnegMatrix],
    p: Option<&RealPolynomial>,
    eps: f64,
) -> Result<ClassicalDistrootsReport> {
    check_family(mats, eps)?;
    let decompositions = mats
        .iter()
        .map(|m| classical_decompose(m, eps))
        .collect::<Result<Vec<_>>>()?;
    if let Some(i) = decompositions.iter().position(|d| !has_distinct_roots(d, eps)) {
        return Err(Error::RootsNotDistinct(i));
    }
    let evaluated = p.map(|p| p.eval_nonnegative(mats, eps)).transpose()?;

    let mut sum = mats[0].clone();
    for m in &mats[1..] {
        sum = sum.add(m)?;
    }
    let sum_d = classical_decompose(&sum, eps)?;
    let first = &decompositions[0];
    let classes_coincide = decompositions
        .iter()
        .chain(std::iter::once(&sum_d))
        .all(|d| d.classes == first.classes);
    let closures_coincide =
        classes_coincide && decompositions.iter().all(|d| d.closure == first.closure);
    let premier: Vec<Vec<usize>> = decompositions
        .iter()
        .map(|d| d.premier_spectral_classes())
        .collect();
    let premier_coincide = classes_coincide && premier.iter().all(|s| *s == premier[0]);
    let premier_in_sum =
        classes_coincide && premier[0].iter().all(|&c| sum_d.flags[c].premier_spectral);

    let polynomial_check = match (p, evaluated) {
        (Some(p), Some(value)) if premier_coincide => {
            let mut predicted = Vec::new();
            for &nu in &premier[0] {
                let tuple: Vec<f64> = decompositions.iter().map(|d| d.roots[nu]).collect();
                predicted.push(p.eval_scalar(&tuple)?);
            }
            let predicted = sorted_distinct(predicted, eps);
            let actual = distinguished_eigenvalues(&value, eps)?;
            let holds = predicted.len() == actual.len()
                && predicted.iter().zip(&actual).all(|(x, y)| close(*x, *y, eps));
            Some(ClassicalPolynomialCheck {
                predicted,
                actual,
                holds,
            })
        }
        (Some(_), _) => Some(ClassicalPolynomialCheck {
            predicted: Vec::new(),
            actual: Vec::new(),
            holds: false,
        }),
        (None, _) => None,
    };

    Ok(ClassicalDistrootsReport {
        classes: first.classes.clone(),
        classes_coincide,
        closures_coincide,
        premier_spectral_classes: premier,
        premier_coincide,
        premier_in_sum,
        polynomial_check,
    })
}
