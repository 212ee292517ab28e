use std::path::{Path, PathBuf};

use maxcomm::boolean::common_eigennode;
use maxcomm::classical::{
    classical_common_eigenvector, classical_commute_check, classical_decompose,
    classical_distroots_report, complete_reducibility_check, NonnegMatrix, RealPolynomial,
};
use maxcomm::commuting::{
    common_eigenvector_family, distroots_report, principal_intersection, Intersection,
};
use maxcomm::generate::{FamilyKind, GeneratedPair, Generator};
use maxcomm::matrix::commute_check;
use maxcomm::spectral::{
    critical_digraph, is_irreducible, kleene_star, normalize, perron_root, projector_limit,
    spectral_projector,
};
use maxcomm::structure::{decompose, eigencone, frobenius_form, spectrum_of};
use maxcomm::{MaxPolynomial, Scalar, TropMatrix};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::matfile::{emit_classical, emit_tropical, MatrixFile};
use crate::report::{self, Mode, Report};

/// A command that reads max-plus matrices and runs in either scalar mode.
#[derive(Clone, Debug)]
pub enum Tropical {
    Spectrum,
    Star,
    Critical,
    Projector { normalize: bool, limit: Option<usize> },
    Fnf,
    Eigencone { value: Option<String> },
    Commute,
    CommonEig { index: usize, value: Option<String> },
    IntersectPrincipal { normalize: bool },
    Eigennode,
    Distroots { poly: Option<String> },
}

impl Tropical {
    pub fn name(&self) -> &'static str {
        match self {
            Tropical::Spectrum => "spectrum",
            Tropical::Star => "star",
            Tropical::Critical => "critical",
            Tropical::Projector { .. } => "projector",
            Tropical::Fnf => "fnf",
            Tropical::Eigencone { .. } => "eigencone",
            Tropical::Commute => "commute",
            Tropical::CommonEig { .. } => "common-eig",
            Tropical::IntersectPrincipal { .. } => "intersect-principal",
            Tropical::Eigennode => "eigennode",
            Tropical::Distroots { .. } => "distroots",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Classical {
    Decompose,
    CommonEig { value: f64 },
    Distroots { poly: Option<String> },
    Reducibility,
}

impl Classical {
    pub fn name(&self) -> &'static str {
        match self {
            Classical::Decompose => "classical-decompose",
            Classical::CommonEig { .. } => "classical-common-eig",
            Classical::Distroots { .. } => "classical-distroots",
            Classical::Reducibility => "classical-reducibility",
        }
    }
}

pub fn read_all(paths: &[PathBuf]) -> CliResult<Vec<MatrixFile>> {
    paths.iter().map(|p| MatrixFile::read(p)).collect()
}

fn parse_value<S: Scalar>(text: &str) -> CliResult<S> {
    text.parse()
        .map_err(|_| CliError::Usage(format!("bad scalar `{text}`")))
}

fn single<S: Scalar>(mats: &[TropMatrix<S>]) -> &TropMatrix<S> {
    &mats[0]
}

pub fn run_tropical<S: Scalar>(
    cmd: &Tropical,
    files: &[MatrixFile],
    mode: Mode,
) -> CliResult<Report> {
    let mats = files
        .iter()
        .map(MatrixFile::tropical::<S>)
        .collect::<CliResult<Vec<_>>>()?;
    let mut r = Report::new(cmd.name(), files, mode);
    match cmd {
        Tropical::Spectrum => {
            let a = single(&mats);
            let d = decompose(a)?;
            let spectrum: Vec<Value> = spectrum_of(&d)
                .iter()
                .map(|v| json!({"eigenvalue": report::scalar(&v.eigenvalue), "classes": report::numbers(&v.classes)}))
                .collect();
            r.result("perron_root", report::scalar(&perron_root(a)?))
                .result("irreducible", json!(is_irreducible(a)?))
                .result("classes", report::groups(&d.classes))
                .result("class_roots", report::vector(&d.roots))
                .result("spectral_classes", report::numbers(&d.spectral_classes()))
                .result("premier_spectral_classes", report::numbers(&d.premier_spectral_classes()))
                .result("spectrum", Value::Array(spectrum));
        }
        Tropical::Star => {
            r.result("star", report::matrix(&kleene_star(single(&mats))?));
        }
        Tropical::Critical => {
            let a = single(&mats);
            let crit = critical_digraph(a)?;
            r.result("perron_root", report::scalar(&perron_root(a)?))
                .result("nodes", report::numbers(&crit.nodes))
                .result("edges", report::pairs(&crit.edges))
                .result("components", report::groups(&crit.components));
        }
        Tropical::Projector { normalize: scale, limit } => {
            let a = single(&mats);
            let root = perron_root(a)?;
            let b = if *scale { normalize(a)?.0 } else { a.clone() };
            let q = spectral_projector(&b)?;
            r.result("perron_root", report::scalar(&root))
                .result("projector", report::matrix(&q));
            if let Some(cap) = limit {
                let lim = projector_limit(&b, *cap)?;
                r.result("limit", report::matrix(&lim))
                    .verdict("limit_matches_closed_form", lim.approx_eq(&q));
            }
        }
        Tropical::Fnf => {
            let a = single(&mats);
            let d = decompose(a)?;
            r.result("permutation", report::numbers(&d.permutation))
                .result("classes", report::groups(&d.classes))
                .result("reduced_edges", report::pairs(&d.reduced_edges))
                .result("skeleton", report::pairs(&d.skeleton()))
                .result("frobenius_form", report::matrix(&frobenius_form(a, &d)));
        }
        Tropical::Eigencone { value } => {
            let a = single(&mats);
            let values = match value {
                Some(text) => vec![parse_value::<S>(text)?],
                None => spectrum_of(&decompose(a)?)
                    .into_iter()
                    .map(|v| v.eigenvalue)
                    .collect(),
            };
            let mut cones = Vec::new();
            for alpha in values {
                let cone = eigencone(a, &alpha)?;
                let gens: Vec<Value> = cone.generators().iter().map(|g| report::vector(g)).collect();
                cones.push(json!({"eigenvalue": report::scalar(&alpha), "generators": gens}));
            }
            r.result("eigencones", Value::Array(cones));
        }
        Tropical::Commute => {
            let mut failing = Vec::new();
            for i in 0..mats.len() {
                for j in i + 1..mats.len() {
                    if !commute_check(&mats[i], &mats[j])? {
                        failing.push((i, j));
                    }
                }
            }
            r.result("non_commuting_pairs", report::pairs(&failing))
                .verdict("commute", failing.is_empty());
        }
        Tropical::CommonEig { index, value } => {
            let k = index_from_one(*index, mats.len())?;
            let alpha = match value {
                Some(text) => parse_value::<S>(text)?,
                None => perron_root(&mats[k])?,
            };
            let common = common_eigenvector_family(&mats, k, &alpha)?;
            r.result("vector", report::vector(&common.vector))
                .result("eigenvalues", report::vector(&common.eigenvalues))
                .verdict("eigenpairs", common.verify(&mats));
        }
        Tropical::IntersectPrincipal { normalize: scale } => {
            let scaled = if *scale {
                mats.iter()
                    .map(|m| normalize(m).map(|(b, _)| b))
                    .collect::<maxcomm::Result<Vec<_>>>()?
            } else {
                mats.clone()
            };
            match principal_intersection(&scaled)? {
                Intersection::Empty => {
                    r.result("empty", json!(true)).result("generators", json!([]));
                }
                Intersection::Cone { generators, .. } => {
                    let gens: Vec<Value> = generators.iter().map(|g| report::vector(g)).collect();
                    r.result("empty", json!(false)).result("generators", Value::Array(gens));
                }
            }
        }
        Tropical::Eigennode => {
            let [a, b] = pair(&mats)?;
            let node = common_eigennode(a, b)?;
            r.result("vector", report::vector(&node.vector))
                .result("critical_a", report::numbers(&node.critical_a))
                .result("critical_b", report::numbers(&node.critical_b))
                .result("common", report::numbers(&node.common))
                .verdict("common_eigennode_exists", !node.common.is_empty());
        }
        Tropical::Distroots { poly } => {
            let p = poly
                .as_deref()
                .map(|text| {
                    text.parse::<MaxPolynomial<S>>()
                        .map_err(|e| CliError::Usage(e.to_string()))
                })
                .transpose()?;
            let rep = distroots_report(&mats, p.as_ref())?;
            let spectral: Vec<Value> = rep.spectral_classes.iter().map(|s| report::numbers(s)).collect();
            let reduced: Vec<Value> = rep.reduced_edges.iter().map(|e| report::pairs(e)).collect();
            r.result("classes", report::groups(&rep.classes))
                .result("spectral_classes", Value::Array(spectral))
                .result("reduced_edges", Value::Array(reduced))
                .verdict("classes_coincide", rep.classes_coincide)
                .verdict("closures_coincide", rep.closures_coincide)
                .verdict("spectral_classes_coincide", rep.spectral_coincide);
            if let Some(check) = &rep.polynomial_eigenvalue_check {
                r.result("polynomial_predicted", report::vector(&check.predicted))
                    .result("polynomial_actual", report::vector(&check.actual))
                    .verdict("polynomial_eigenvalues", check.holds);
            }
        }
    }
    Ok(r)
}

fn pair<T>(items: &[T]) -> CliResult<[&T; 2]> {
    match items {
        [a, b] => Ok([a, b]),
        _ => Err(CliError::Usage(format!("expected two matrices, got {}", items.len()))),
    }
}

fn index_from_one(index: usize, len: usize) -> CliResult<usize> {
    if index == 0 || index > len {
        return Err(CliError::Usage(format!("--index must lie in 1..={len}")));
    }
    Ok(index - 1)
}

fn eigen_residual(m: &NonnegMatrix, v: &[f64], mu: f64) -> f64 {
    m.mul_vec(v)
        .iter()
        .zip(v)
        .fold(0.0f64, |acc, (y, x)| acc.max((y - mu * x).abs()))
}

pub fn run_classical(cmd: &Classical, files: &[MatrixFile], eps: f64) -> CliResult<Report> {
    let mats = files
        .iter()
        .map(MatrixFile::classical)
        .collect::<CliResult<Vec<_>>>()?;
    let mode = Mode {
        kind: "float",
        epsilon: Some(eps),
    };
    let mut r = Report::new(cmd.name(), files, mode);
    match cmd {
        Classical::Decompose => {
            let a = &mats[0];
            let d = classical_decompose(a, eps)?;
            let premier = d.premier_spectral_classes();
            let mut distinguished: Vec<f64> = premier.iter().map(|&c| d.roots[c]).collect();
            distinguished.sort_by(|x, y| y.total_cmp(x));
            r.result("classes", report::groups(&d.classes))
                .result("class_roots", report::reals(&d.roots))
                .result("skeleton", report::pairs(&d.skeleton()))
                .result("spectral_classes", report::numbers(&d.spectral_classes()))
                .result("premier_spectral_classes", report::numbers(&premier))
                .result(
                    "distinguished_eigenvalues",
                    report::reals(&maxcomm::classical::distinguished_eigenvalues(a, eps)?),
                );
        }
        Classical::CommonEig { value } => {
            let [a, b] = pair(&mats)?;
            let common = classical_common_eigenvector(a, b, *value, eps)?;
            let scale = common.vector.iter().copied().fold(0.0, f64::max);
            let ok = [a, b].iter().zip(&common.eigenvalues).all(|(m, &mu)| {
                eigen_residual(m, &common.vector, mu) <= eps * (1.0 + m.norm_inf()) * scale
            });
            r.result("vector", report::reals(&common.vector))
                .result("eigenvalues", report::reals(&common.eigenvalues))
                .verdict("eigenpairs", ok);
        }
        Classical::Distroots { poly } => {
            let p = poly
                .as_deref()
                .map(|text| {
                    text.parse::<RealPolynomial>()
                        .map_err(|e| CliError::Usage(e.to_string()))
                })
                .transpose()?;
            let rep = classical_distroots_report(&mats, p.as_ref(), eps)?;
            let premier: Vec<Value> = rep
                .premier_spectral_classes
                .iter()
                .map(|s| report::numbers(s))
                .collect();
            r.result("classes", report::groups(&rep.classes))
                .result("premier_spectral_classes", Value::Array(premier))
                .verdict("classes_coincide", rep.classes_coincide)
                .verdict("closures_coincide", rep.closures_coincide)
                .verdict("premier_classes_coincide", rep.premier_coincide)
                .verdict("premier_classes_of_sum", rep.premier_in_sum);
            if let Some(check) = &rep.polynomial_check {
                r.result("polynomial_predicted", report::reals(&check.predicted))
                    .result("polynomial_actual", report::reals(&check.actual))
                    .verdict("polynomial_eigenvalues", check.holds);
            }
        }
        Classical::Reducibility => {
            let [a, b] = pair(&mats)?;
            let verdict = complete_reducibility_check(a, b, eps)?;
            r.result("completely_reducible", json!(verdict.completely_reducible))
                .result("distinguished_eigenvalues", report::reals(&verdict.distinguished))
                .result("perron_root", json!(verdict.perron_root))
                .verdict("unique_distinguished_eigenvalue", verdict.holds());
        }
    }
    Ok(r)
}

/// Generates a commuting pair, optionally writing `A.mpx` and `B.mpx`
/// into `out`.
pub fn gen_commuting(kind: FamilyKind, n: usize, seed: u64, out: Option<&Path>) -> CliResult<Report> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let pair = Generator::new(seed).commuting_pair(kind, n)?;
    let (texts, polynomial, matrices, commutes) = match &pair {
        GeneratedPair::Tropical { a, b, q } => (
            [emit_tropical(a), emit_tropical(b)],
            q.to_string(),
            [report::matrix(a), report::matrix(b)],
            commute_check(a, b)?,
        ),
        GeneratedPair::Classical { a, b, q } => (
            [emit_classical(a), emit_classical(b)],
            q.to_string(),
            [report::classical_matrix(a), report::classical_matrix(b)],
            classical_commute_check(a, b, maxcomm::classical::CLASSICAL_EPSILON)?,
        ),
    };
    let mut r = Report::new("gen-commuting", &[], Mode { kind: "exact", epsilon: None });
    let [ma, mb] = matrices;
    r.result("kind", json!(kind.to_string()))
        .result("n", json!(n))
        .result("seed", json!(seed))
        .result("polynomial", json!(polynomial))
        .result("a", ma)
        .result("b", mb)
        .verdict("commute", commutes);
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        let mut written = Vec::new();
        for (name, text) in ["A.mpx", "B.mpx"].iter().zip(&texts) {
            let path = dir.join(name);
            std::fs::write(&path, text).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            written.push(path.display().to_string());
        }
        r.result("files", json!(written));
    }
    Ok(r)
}
