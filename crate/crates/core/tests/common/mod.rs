//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use maxcomm::matrix::{is_eigenpair, mat_add, support};
use maxcomm::spectral::perron_root;
use maxcomm::structure::{decompose, eigencone, spectrum, support_characterization};
use maxcomm::{Rational, Scalar, TropMatrix, TropScalar};

pub fn m(text: &str) -> TropMatrix {
    text.parse().unwrap()
}

pub fn s(text: &str) -> TropScalar {
    text.parse().unwrap()
}

pub fn v(text: &str) -> Vec<TropScalar> {
    text.split_whitespace().map(|x| x.parse().unwrap()).collect()
}

/// Every elementary cycle, listed from its smallest node, with its weight.
pub fn elementary_cycles(a: &TropMatrix) -> Vec<(Vec<usize>, Rational)> {
    fn extend(
        a: &TropMatrix,
        start: usize,
        path: &mut Vec<usize>,
        weight: Rational,
        out: &mut Vec<(Vec<usize>, Rational)>,
    ) {
        let last = *path.last().unwrap();
        for next in start..a.rows() {
            let Some(w) = a.get(last, next).finite().copied() else {
                continue;
            };
            if next == start {
                out.push((path.clone(), weight + w));
            } else if !path.contains(&next) {
                path.push(next);
                extend(a, start, path, weight + w, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for start in 0..a.rows() {
        extend(a, start, &mut vec![start], Rational::from_integer(0), &mut out);
    }
    out
}

fn mean(cycle: &(Vec<usize>, Rational)) -> Rational {
    cycle.1 / Rational::from_integer(cycle.0.len() as i128)
}

/// Maximal cycle mean by enumeration; bottom when acyclic.
pub fn oracle_root(a: &TropMatrix) -> TropScalar {
    elementary_cycles(a)
        .iter()
        .map(mean)
        .max()
        .map_or(TropScalar::Bottom, TropScalar::Fin)
}

/// Nodes and edges of all cycles attaining the maximal mean.
pub fn oracle_critical(a: &TropMatrix) -> (BTreeSet<usize>, BTreeSet<(usize, usize)>) {
    let cycles = elementary_cycles(a);
    let Some(best) = cycles.iter().map(mean).max() else {
        return Default::default();
    };
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for c in cycles.iter().filter(|c| mean(c) == best) {
        let k = c.0.len();
        for i in 0..k {
            nodes.insert(c.0[i]);
            edges.insert((c.0[i], c.0[(i + 1) % k]));
        }
    }
    (nodes, edges)
}

/// Cross-checks the spectrum and every eigencone against the support
/// characterization: each eigencone is made of eigenvectors, the supports
/// of max combinations of its generators are exactly the node sets the
/// characterization accepts, and class roots outside the spectrum admit no
/// support at all.
pub fn check_supports(a: &TropMatrix) -> Result<(), String> {
    let n = a.rows();
    let d = decompose(a).map_err(|e| e.to_string())?;
    let values: Vec<TropScalar> = spectrum(a)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|x| x.eigenvalue)
        .collect();
    let subsets: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    let mut candidates = d.roots.clone();
    candidates.sort();
    candidates.dedup();
    for lambda in &candidates {
        let accepted: BTreeSet<Vec<usize>> = subsets
            .iter()
            .filter(|u| support_characterization(a, lambda, u).unwrap())
            .cloned()
            .collect();
        if !values.contains(lambda) {
            if !accepted.is_empty() {
                return Err(format!("{lambda} not in spectrum but supports {accepted:?}"));
            }
            if eigencone(a, lambda).is_ok() {
                return Err(format!("eigencone built for non-eigenvalue {lambda}"));
            }
            continue;
        }
        let gens = eigencone(a, lambda).map_err(|e| e.to_string())?.generators();
        for g in &gens {
            if !is_eigenpair(a, g, lambda) {
                return Err(format!("generator {g:?} is not an eigenvector for {lambda}"));
            }
        }
        let mut reached = BTreeSet::new();
        for mask in 1u32..1 << gens.len() {
            let mut combo = vec![TropScalar::Bottom; n];
            for (k, g) in gens.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    combo = combo.iter().zip(g).map(|(x, y)| x.oplus(y)).collect();
                }
            }
            reached.insert(support(&combo));
        }
        if reached != accepted {
            return Err(format!(
                "λ = {lambda}: cone supports {reached:?} vs characterization {accepted:?}"
            ));
        }
    }
    Ok(())
}

/// `λ(A ⊕ B) = λ(A) ⊕ λ(B)`, which holds when `A` and `B` commute.
pub fn sum_root_identity(a: &TropMatrix, b: &TropMatrix) -> bool {
    let lhs = perron_root(&mat_add(a, b).unwrap()).unwrap();
    let rhs = perron_root(a).unwrap().oplus(&perron_root(b).unwrap());
    lhs == rhs
}

/// Largest real root of `x^3 + b x^2 + c x + d` by the trigonometric or
/// Cardano formula.
pub fn largest_cubic_root(b: f64, c: f64, d: f64) -> f64 {
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let shift = -b / 3.0;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    if disc > 0.0 {
        let r = disc.sqrt();
        return (-q / 2.0 + r).cbrt() + (-q / 2.0 - r).cbrt() + shift;
    }
    if p == 0.0 {
        return (-q).cbrt() + shift;
    }
    let radius = 2.0 * (-p / 3.0).sqrt();
    let angle = ((3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0).acos() / 3.0;
    (0..3)
        .map(|k| radius * (angle - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos())
        .fold(f64::NEG_INFINITY, f64::max)
        + shift
}

/// Spectral radius of a nonnegative 2x2 or 3x3 matrix from its
/// characteristic polynomial.
pub fn closed_form_root(a: &[Vec<f64>]) -> f64 {
    match a.len() {
        1 => a[0][0],
        2 => {
            let tr = a[0][0] + a[1][1];
            let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            (tr + (tr * tr - 4.0 * det).max(0.0).sqrt()) / 2.0
        }
        3 => {
            let tr = a[0][0] + a[1][1] + a[2][2];
            let minors = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2]
                - a[0][2] * a[2][0]
                + a[1][1] * a[2][2]
                - a[1][2] * a[2][1];
            let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
            largest_cubic_root(-tr, minors, -det)
        }
        _ => panic!("closed form only for orders up to 3"),
    }
}
