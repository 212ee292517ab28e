//! Common eigenvectors of commuting matrices, polynomial spectral mapping,
//! spectral inequalities and intersections of eigencones.
//!
//! The constructions rest on one observation: if `X` spans a cone invariant
//! under `B` then `B ⊗ X = X ⊗ C` with `C = X \ (B ⊗ X)`, and every
//! eigenvector `z` of `C` gives an eigenvector `X ⊗ z` of `B` inside the
//! cone. Taking `X` to be an eigencone of a matrix that commutes with `B`
//! produces a common eigenvector.
//!
//! For three or more matrices the chained construction keeps a subcone of
//! the full common eigencone. It never loses nonemptiness, which is what
//! the existence statements need, but its generators need not span the
//! whole intersection.

use crate::error::{Error, Result};
use crate::matrix::{
    check_family_commutes, dedup_rays, is_eigenpair, mat_add, mat_mul, residual, Algebra,
    TropMatrix, Vector,
};
use crate::poly::{poly_eval, MaxPolynomial};
use crate::scalar::Scalar;
use crate::spectral::{perron_root, principal_eigencone, spectral_projector};
use crate::structure::{decompose, eigencone, spectrum, ClassDecomposition};

/// A nonzero vector together with its eigenvalue for each input matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CommonEigenResult<S> {
    pub vector: Vector<S>,
    pub eigenvalues: Vec<S>,
}

impl<S: Scalar> CommonEigenResult<S> {
    /// Rechecks `A_i ⊗ vector = eigenvalues[i] ⊗ vector` for every `i`.
    pub fn verify(&self, mats: &[TropMatrix<S>]) -> bool {
        mats.len() == self.eigenvalues.len()
            && mats
                .iter()
                .zip(&self.eigenvalues)
                .all(|(a, alpha)| is_eigenpair(a, &self.vector, alpha))
    }
}

/// Either an empty intersection or generators of a common eigencone.
#[derive(Clone, Debug, PartialEq)]
pub enum Intersection<S> {
    Empty,
    Cone {
        eigenvalues: Vec<S>,
        generators: Vec<Vector<S>>,
    },
}

impl<S> Intersection<S> {
    pub fn is_empty(&self) -> bool {
        matches!(self, Intersection::Empty)
    }

    pub fn generators(&self) -> &[Vector<S>] {
        match self {
            Intersection::Empty => &[],
            Intersection::Cone { generators, .. } => generators,
        }
    }
}

fn as_maxplus<S: Scalar>(a: &TropMatrix<S>) -> TropMatrix<S> {
    a.clone()
        .with_algebra(Algebra::MaxPlus)
        .expect("retagging as max-plus always succeeds")
}

fn family_as_maxplus<S: Scalar>(mats: &[TropMatrix<S>]) -> Result<Vec<TropMatrix<S>>> {
    check_family_commutes(mats)?;
    Ok(mats.iter().map(as_maxplus).collect())
}

/// `C = X \ (A ⊗ X)`, or `None` when `X ⊗ C != A ⊗ X`, i.e. when the cone
/// spanned by the columns of `X` is not invariant under `A`.
fn certified_commutant<S: Scalar>(
    a: &TropMatrix<S>,
    x: &TropMatrix<S>,
) -> Result<Option<TropMatrix<S>>> {
    let ax = mat_mul(a, x)?;
    let c = residual(x, &ax)?;
    Ok(mat_mul(x, &c)?.approx_eq(&ax).then_some(c))
}

/// Eigenvectors of `C` for `μ`, or for `λ(C)` when `μ` is `None`.
fn commutant_eigenvectors<S: Scalar>(c: &TropMatrix<S>, mu: Option<&S>) -> Result<(S, Vec<Vector<S>>)> {
    let mu = match mu {
        Some(mu) => mu.clone(),
        None => perron_root(c)?,
    };
    let cone = eigencone(c, &mu)?;
    Ok((mu, cone.generators()))
}

/// An eigenvector of `A` inside the cone spanned by the columns of `X`.
///
/// `X` must have no bottom column and its column span must be invariant
/// under `A`. The eigenvector comes from the principal eigenvalue of the
/// certified commutant `C = X \ (A ⊗ X)`.
pub fn invariant_cone_eigenvector<S: Scalar>(
    a: &TropMatrix<S>,
    x: &TropMatrix<S>,
) -> Result<(Vector<S>, S)> {
    let (a, x) = (as_maxplus(a), as_maxplus(x));
    let c = certified_commutant(&a, &x)?.ok_or(Error::NotInvariant)?;
    let (mu, zs) = commutant_eigenvectors(&c, None)?;
    let u = x.mul_vec(&zs[0]);
    if !is_eigenpair(&a, &u, &mu) {
        return Err(Error::InternalInvariantViolation(
            "image of a commutant eigenvector is not an eigenvector".into(),
        ));
    }
    Ok((u, mu))
}

/// Every `(u, μ)` obtained from the eigenvalues of the commutant, one per
/// generator of each eigencone of `C`.
pub fn invariant_cone_eigenvectors_all<S: Scalar>(
    a: &TropMatrix<S>,
    x: &TropMatrix<S>,
) -> Result<Vec<(Vector<S>, S)>> {
    let (a, x) = (as_maxplus(a), as_maxplus(x));
    let c = certified_commutant(&a, &x)?.ok_or(Error::NotInvariant)?;
    let mut out = Vec::new();
    for value in spectrum(&c)? {
        let (mu, zs) = commutant_eigenvectors(&c, Some(&value.eigenvalue))?;
        for u in dedup_rays(zs.iter().map(|z| x.mul_vec(z))) {
            if !is_eigenpair(&a, &u, &mu) {
                return Err(Error::InternalInvariantViolation(
                    "image of a commutant eigenvector is not an eigenvector".into(),
                ));
            }
            out.push((u, mu.clone()));
        }
    }
    Ok(out)
}

fn eigencone_matrix<S: Scalar>(a: &TropMatrix<S>, alpha: &S) -> Result<TropMatrix<S>> {
    TropMatrix::from_columns(&eigencone(a, alpha)?.generators())
}

fn commutant_of_eigencone<S: Scalar>(
    b: &TropMatrix<S>,
    x: &TropMatrix<S>,
) -> Result<TropMatrix<S>> {
    certified_commutant(b, x)?.ok_or_else(|| {
        Error::InternalInvariantViolation(
            "eigencone of a commuting matrix is not invariant".into(),
        )
    })
}

/// Common eigenvector of a commuting pair with `A`-eigenvalue `α`.
///
/// `X` spans `V(A, α)`, `C = X \ (B ⊗ X)` and `z` is an eigenvector of `C`
/// for `λ(C)`; the result is `u = X ⊗ z` with eigenvalues `(α, λ(C))`.
pub fn common_eigenvector_pair<S: Scalar>(
    a: &TropMatrix<S>,
    b: &TropMatrix<S>,
    alpha: &S,
) -> Result<CommonEigenResult<S>> {
    let mats = family_as_maxplus(&[a.clone(), b.clone()])?;
    let x = eigencone_matrix(&mats[0], alpha)?;
    let c = commutant_of_eigencone(&mats[1], &x)?;
    let (mu, zs) = commutant_eigenvectors(&c, None)?;
    finish(&mats, x.mul_vec(&zs[0]), vec![alpha.clone(), mu])
}

/// Like [`common_eigenvector_pair`] but walks every eigenvalue of the
/// commutant and every generator of its eigencones.
pub fn common_eigenvector_pair_all<S: Scalar>(
    a: &TropMatrix<S>,
    b: &TropMatrix<S>,
    alpha: &S,
) -> Result<Vec<CommonEigenResult<S>>> {
    let mats = family_as_maxplus(&[a.clone(), b.clone()])?;
    let x = eigencone_matrix(&mats[0], alpha)?;
    let c = commutant_of_eigencone(&mats[1], &x)?;
    let mut out = Vec::new();
    for value in spectrum(&c)? {
        let (mu, zs) = commutant_eigenvectors(&c, Some(&value.eigenvalue))?;
        for u in dedup_rays(zs.iter().map(|z| x.mul_vec(z))) {
            out.push(finish(&mats, u, vec![alpha.clone(), mu.clone()])?);
        }
    }
    Ok(out)
}

fn finish<S: Scalar>(
    mats: &[TropMatrix<S>],
    vector: Vector<S>,
    eigenvalues: Vec<S>,
) -> Result<CommonEigenResult<S>> {
    let result = CommonEigenResult {
        vector,
        eigenvalues,
    };
    if !result.verify(mats) {
        return Err(Error::InternalInvariantViolation(
            "constructed vector fails an eigenpair equation".into(),
        ));
    }
    Ok(result)
}

/// Common eigenvector of a pairwise commuting family, starting from
/// `V(A_i, α_i)` and shrinking the cone through the remaining matrices in
/// index order.
pub fn common_eigenvector_family<S: Scalar>(
    mats: &[TropMatrix<S>],
    index: usize,
    alpha: &S,
) -> Result<CommonEigenResult<S>> {
    let mats = family_as_maxplus(mats)?;
    if index >= mats.len() {
        return Err(Error::IndexOutOfRange {
            index,
            len: mats.len(),
        });
    }
    let mut eigenvalues = vec![alpha.clone(); mats.len()];
    let mut x = eigencone_matrix(&mats[index], alpha)?;
    for (k, ak) in mats.iter().enumerate() {
        if k == index {
            continue;
        }
        let c = commutant_of_eigencone(ak, &x)?;
        let (mu, zs) = commutant_eigenvectors(&c, None)?;
        let columns = dedup_rays(zs.iter().map(|z| x.mul_vec(z)));
        x = TropMatrix::from_columns(&columns)?;
        eigenvalues[k] = mu;
    }
    finish(&mats, x.column(0), eigenvalues)
}

/// Forward direction: an eigenvalue of one matrix, the eigenvalue tuple of
/// a common eigenvector through it, and `p` of that tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct ForwardWitness<S> {
    pub matrix: usize,
    pub eigenvalue: S,
    pub tuple: Vec<S>,
    pub value: S,
    pub holds: bool,
}

/// Backward direction: an eigenvalue of `p(A_1, ..., A_r)` and a tuple of
/// member eigenvalues mapping onto it, if one exists.
#[derive(Clone, Debug, PartialEq)]
pub struct BackwardWitness<S> {
    pub eigenvalue: S,
    pub tuple: Option<Vec<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolySpectrumReport<S> {
    pub spectra: Vec<Vec<S>>,
    pub polynomial_spectrum: Vec<S>,
    pub forward: Vec<ForwardWitness<S>>,
    pub backward: Vec<BackwardWitness<S>>,
}

impl<S> PolySpectrumReport<S> {
    pub fn holds(&self) -> bool {
        self.forward.iter().all(|w| w.holds) && self.backward.iter().all(|w| w.tuple.is_some())
    }
}

fn eigenvalues_of<S: Scalar>(a: &TropMatrix<S>) -> Result<Vec<S>> {
    Ok(spectrum(a)?.into_iter().map(|v| v.eigenvalue).collect())
}

fn contains_value<S: Scalar>(values: &[S], x: &S) -> bool {
    values.iter().any(|v| v.approx_eq(x))
}

/// Checks both directions of the spectral mapping for a max polynomial of
/// a commuting family. Forward witnesses come from common eigenvectors;
/// backward witnesses are searched among all tuples of member eigenvalues.
pub fn polynomial_spectrum_check<S: Scalar>(
    mats: &[TropMatrix<S>],
    p: &MaxPolynomial<S>,
) -> Result<PolySpectrumReport<S>> {
    let mats = family_as_maxplus(mats)?;
    let image = poly_eval(p, &mats)?;
    let polynomial_spectrum = eigenvalues_of(&image)?;
    let spectra = mats.iter().map(eigenvalues_of).collect::<Result<Vec<_>>>()?;

    let mut forward = Vec::new();
    for (i, values) in spectra.iter().enumerate() {
        for alpha in values {
            let common = common_eigenvector_family(&mats, i, alpha)?;
            let value = p.eval_scalar(&common.eigenvalues)?;
            forward.push(ForwardWitness {
                matrix: i,
                eigenvalue: alpha.clone(),
                holds: contains_value(&polynomial_spectrum, &value),
                tuple: common.eigenvalues,
                value,
            });
        }
    }

    let tuples = cartesian(&spectra);
    let mut backward = Vec::new();
    for lambda in &polynomial_spectrum {
        let mut found = None;
        for tuple in &tuples {
            if p.eval_scalar(tuple)?.approx_eq(lambda) {
                found = Some(tuple.clone());
                break;
            }
        }
        backward.push(BackwardWitness {
            eigenvalue: lambda.clone(),
            tuple: found,
        });
    }

    Ok(PolySpectrumReport {
        spectra,
        polynomial_spectrum,
        forward,
        backward,
    })
}

fn cartesian<S: Clone>(sets: &[Vec<S>]) -> Vec<Vec<S>> {
    sets.iter().fold(vec![Vec::new()], |acc, set| {
        acc.iter()
            .flat_map(|prefix| {
                set.iter().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x.clone());
                    next
                })
            })
            .collect()
    })
}

/// One inequality `lhs <= rhs` between Perron roots.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInequality<S> {
    pub lhs: S,
    pub rhs: S,
}

impl<S: Scalar> RootInequality<S> {
    pub fn holds(&self) -> bool {
        self.lhs.approx_le(&self.rhs)
    }

    pub fn is_equality(&self) -> bool {
        self.lhs.approx_eq(&self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralInequalityReport<S> {
    /// `λ(p(A_1, ..., A_r)) <= p(λ(A_1), ..., λ(A_r))`.
    pub polynomial: RootInequality<S>,
    /// `λ(A_1 ⊕ ... ⊕ A_r) = λ(A_1) ⊕ ... ⊕ λ(A_r)`.
    pub sum: RootInequality<S>,
    /// `λ(A_1 ⊗ ... ⊗ A_r) <= λ(A_1) ⊗ ... ⊗ λ(A_r)`.
    pub product: RootInequality<S>,
    /// Some member is irreducible, in which case all three are equalities.
    pub some_irreducible: bool,
}

impl<S: Scalar> SpectralInequalityReport<S> {
    pub fn holds(&self) -> bool {
        let parts = [&self.polynomial, &self.sum, &self.product];
        parts.iter().all(|r| r.holds())
            && self.sum.is_equality()
            && (!self.some_irreducible || parts.iter().all(|r| r.is_equality()))
    }
}

pub fn spectral_inequality_report<S: Scalar>(
    mats: &[TropMatrix<S>],
    p: &MaxPolynomial<S>,
) -> Result<SpectralInequalityReport<S>> {
    let mats = family_as_maxplus(mats)?;
    let roots = mats.iter().map(perron_root).collect::<Result<Vec<_>>>()?;
    let polynomial = RootInequality {
        lhs: perron_root(&poly_eval(p, &mats)?)?,
        rhs: p.eval_scalar(&roots)?,
    };
    let mut sum_matrix = mats[0].clone();
    let mut product_matrix = mats[0].clone();
    for m in &mats[1..] {
        sum_matrix = mat_add(&sum_matrix, m)?;
        product_matrix = mat_mul(&product_matrix, m)?;
    }
    let sum = RootInequality {
        lhs: perron_root(&sum_matrix)?,
        rhs: roots.iter().fold(S::bottom(), |acc, r| acc.oplus(r)),
    };
    let product = RootInequality {
        lhs: perron_root(&product_matrix)?,
        rhs: roots.iter().fold(S::unit(), |acc, r| acc.otimes(r)),
    };
    let some_irreducible = mats
        .iter()
        .map(crate::spectral::is_irreducible)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .any(|b| b);
    Ok(SpectralInequalityReport {
        polynomial,
        sum,
        product,
        some_irreducible,
    })
}

/// `Q(A_1) ⊗ ... ⊗ Q(A_r)` for a commuting family of matrices with Perron
/// root unit.
pub fn projector_product<S: Scalar>(mats: &[TropMatrix<S>]) -> Result<TropMatrix<S>> {
    let mats = family_as_maxplus(mats)?;
    let projectors = mats
        .iter()
        .map(spectral_projector)
        .collect::<Result<Vec<_>>>()?;
    let mut product = projectors[0].clone();
    for q in &projectors[1..] {
        product = mat_mul(&product, q)?;
    }
    if cfg!(debug_assertions) && projectors.len() > 1 {
        let mut reversed = projectors[projectors.len() - 1].clone();
        for q in projectors.iter().rev().skip(1) {
            reversed = mat_mul(&reversed, q)?;
        }
        debug_assert!(
            reversed.approx_eq(&product),
            "projectors of commuting matrices do not commute"
        );
    }
    Ok(product)
}

/// Intersection of the principal eigencones of a commuting family whose
/// members all have Perron root unit. It is nontrivial iff the projector
/// product has Perron root unit, and then equals that product's principal
/// eigencone.
pub fn principal_intersection<S: Scalar>(mats: &[TropMatrix<S>]) -> Result<Intersection<S>> {
    let product = projector_product(mats)?;
    let lambda = perron_root(&product)?;
    if lambda.approx_lt(&S::unit()) {
        return Ok(Intersection::Empty);
    }
    if !lambda.approx_eq(&S::unit()) {
        return Err(Error::InternalInvariantViolation(format!(
            "projector product has Perron root {lambda} above unit"
        )));
    }
    let cone = principal_eigencone(&product)?;
    Ok(Intersection::Cone {
        eigenvalues: vec![S::unit(); mats.len()],
        generators: cone.generators(),
    })
}

/// `V(A_1, α_1) ∩ ... ∩ V(A_r, α_r)` restricted to vectors supported on the
/// common initial segment of class `ν`, where `α_i` is the root of `ν` for
/// `A_i`. The class structures of the members must agree on `intl(ν)`.
pub fn eigencone_intersection_at_class<S: Scalar>(
    mats: &[TropMatrix<S>],
    nu: usize,
    eigenvalues: &[S],
) -> Result<Intersection<S>> {
    let mats = family_as_maxplus(mats)?;
    if eigenvalues.len() != mats.len() {
        return Err(Error::ArityMismatch {
            expected: mats.len(),
            found: eigenvalues.len(),
        });
    }
    let decompositions = mats.iter().map(decompose).collect::<Result<Vec<_>>>()?;
    let first = &decompositions[0];
    if nu >= first.class_count() {
        return Err(Error::IndexOutOfRange {
            index: nu,
            len: first.class_count(),
        });
    }
    let segment = first.initial_segment(nu)?;
    let nodes = first.nodes_of(&segment);
    for (i, d) in decompositions.iter().enumerate() {
        if d.partition() != first.partition() || d.initial_segment(nu)? != segment {
            return Err(Error::PreconditionViolated(format!(
                "matrix {i} does not share the initial segment of class {nu}"
            )));
        }
        if !d.flags[nu].spectral || !d.roots[nu].approx_eq(&eigenvalues[i]) {
            return Err(Error::PreconditionViolated(format!(
                "class {nu} is not spectral with root {} for matrix {i}",
                eigenvalues[i]
            )));
        }
    }
    let n = mats[0].rows();
    let pad = |g: &Vector<S>| {
        let mut full = vec![S::bottom(); n];
        for (k, &i) in nodes.iter().enumerate() {
            full[i] = g[k].clone();
        }
        full
    };

    if eigenvalues.iter().any(S::is_bottom) {
        // only an initial class made of one node without a loop has root
        // bottom; its unit vector is then a common eigenvector
        let mut e = vec![S::bottom(); n];
        e[nodes[0]] = S::unit();
        let ok = nodes.len() == 1
            && mats
                .iter()
                .zip(eigenvalues)
                .all(|(a, alpha)| is_eigenpair(a, &e, alpha));
        return if ok {
            Ok(Intersection::Cone {
                eigenvalues: eigenvalues.to_vec(),
                generators: vec![e],
            })
        } else {
            Ok(Intersection::Empty)
        };
    }

    let restricted: Vec<TropMatrix<S>> = mats
        .iter()
        .zip(eigenvalues)
        .map(|(a, alpha)| a.submatrix(&nodes, &nodes).div_scalar(alpha))
        .collect();
    Ok(match principal_intersection(&restricted)? {
        Intersection::Empty => Intersection::Empty,
        Intersection::Cone { generators, .. } => Intersection::Cone {
            eigenvalues: eigenvalues.to_vec(),
            generators: generators.iter().map(pad).collect(),
        },
    })
}

/// Result of the spectral mapping check under distinct class roots.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialEigenvalueCheck<S> {
    /// `p` applied to the class-aligned root tuples of spectral classes.
    pub predicted: Vec<S>,
    pub actual: Vec<S>,
    pub holds: bool,
}

/// Structural comparison of a commuting family whose members each have
/// pairwise distinct class roots.
#[derive(Clone, Debug, PartialEq)]
pub struct DistrootsReport<S> {
    pub classes: Vec<Vec<usize>>,
    pub classes_coincide: bool,
    pub closures_coincide: bool,
    pub reduced_edges: Vec<Vec<(usize, usize)>>,
    pub spectral_classes: Vec<Vec<usize>>,
    pub spectral_coincide: bool,
    pub polynomial_eigenvalue_check: Option<PolynomialEigenvalueCheck<S>>,
}

impl<S> DistrootsReport<S> {
    pub fn holds(&self) -> bool {
        self.classes_coincide
            && self.closures_coincide
            && self.spectral_coincide
            && self
                .polynomial_eigenvalue_check
                .as_ref()
                .is_none_or(|c| c.holds)
    }
}

fn has_distinct_roots<S: Scalar>(d: &ClassDecomposition<S>) -> bool {
    d.roots
        .iter()
        .enumerate()
        .all(|(i, x)| d.roots[i + 1..].iter().all(|y| !x.approx_eq(y)))
}

/// Checks that the members and their sum share classes, access closure and
/// spectral classes, and optionally that the spectrum of `p(A_1, ..., A_r)`
/// is `p` applied to the roots of each common spectral class.
pub fn distroots_report<S: Scalar>(
    mats: &[TropMatrix<S>],
    p: Option<&MaxPolynomial<S>>,
) -> Result<DistrootsReport<S>> {
    let mats = family_as_maxplus(mats)?;
    let decompositions = mats.iter().map(decompose).collect::<Result<Vec<_>>>()?;
    if let Some(i) = decompositions.iter().position(|d| !has_distinct_roots(d)) {
        return Err(Error::RootsNotDistinct(i));
    }
    let mut sum = mats[0].clone();
    for m in &mats[1..] {
        sum = mat_add(&sum, m)?;
    }
    let sum_decomposition = decompose(&sum)?;
    let first = &decompositions[0];
    let classes_coincide = decompositions
        .iter()
        .chain(std::iter::once(&sum_decomposition))
        .all(|d| d.classes == first.classes);
    let closures_coincide =
        classes_coincide && decompositions.iter().all(|d| d.closure == first.closure);
    let spectral_classes: Vec<Vec<usize>> =
        decompositions.iter().map(|d| d.spectral_classes()).collect();
    let spectral_coincide =
        classes_coincide && spectral_classes.iter().all(|s| *s == spectral_classes[0]);

    let polynomial_eigenvalue_check = match p {
        Some(p) if spectral_coincide => {
            let mut predicted: Vec<S> = Vec::new();
            for &nu in &spectral_classes[0] {
                let tuple: Vec<S> = decompositions.iter().map(|d| d.roots[nu].clone()).collect();
                let value = p.eval_scalar(&tuple)?;
                if !contains_value(&predicted, &value) {
                    predicted.push(value);
                }
            }
            predicted.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
            let actual = eigenvalues_of(&poly_eval(p, &mats)?)?;
            let holds = predicted.len() == actual.len()
                && predicted.iter().all(|x| contains_value(&actual, x));
            Some(PolynomialEigenvalueCheck {
                predicted,
                actual,
                holds,
            })
        }
        Some(_) => Some(PolynomialEigenvalueCheck {
            predicted: Vec::new(),
            actual: Vec::new(),
            holds: false,
        }),
        None => None,
    };

    Ok(DistrootsReport {
        classes: first.classes.clone(),
        classes_coincide,
        closures_coincide,
        reduced_edges: decompositions.iter().map(|d| d.reduced_edges.clone()).collect(),
        spectral_classes,
        spectral_coincide,
        polynomial_eigenvalue_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::TropScalar;

    fn m(text: &str) -> TropMatrix {
        text.parse().unwrap()
    }

    fn s(text: &str) -> TropScalar {
        text.parse().unwrap()
    }

    const I1: &str = "-2 1 -inf; -1 -1 -2; -1 -inf -2";
    const I2: &str = "0 -1 -1; -inf 0 -4; -3 -inf 0";
    const R1: &str = "0 -inf -inf -inf; 1 3 -inf -inf; 2 -inf -1 -inf; -inf -inf 0 2";
    const R2: &str = "6 -inf -inf -inf; 5 7 -inf -inf; 8 -inf 5 -inf; 5 -inf 6 8";

    fn proportional(u: &[TropScalar], v: &[TropScalar]) -> bool {
        crate::matrix::normalize_vector(u) == crate::matrix::normalize_vector(v)
    }

    #[test]
    fn irreducible_pair_common_eigenvector() {
        let r = common_eigenvector_pair(&m(I1), &m(I2), &s("0")).unwrap();
        assert!(proportional(&r.vector, &[s("1"), s("0"), s("0")]));
        assert_eq!(r.eigenvalues, vec![s("0"), s("0")]);
        assert!(r.verify(&[m(I1), m(I2)]));
    }

    #[test]
    fn reducible_pair_common_eigenvector() {
        let r = common_eigenvector_pair(&m(R1), &m(R2), &s("3")).unwrap();
        assert_eq!(r.eigenvalues, vec![s("3"), s("7")]);
        assert!(r.verify(&[m(R1), m(R2)]));
        assert_eq!(
            common_eigenvector_pair(&m(R1), &m(R2), &s("0")),
            Err(Error::NotAnEigenvalue)
        );
        assert_eq!(
            common_eigenvector_pair(&m("0 1; -inf 0"), &m("0 -inf; 1 0"), &s("0")),
            Err(Error::NotCommuting(0, 1))
        );
    }

    #[test]
    fn invariant_cone_with_identity_generators() {
        let (u, mu) = invariant_cone_eigenvector(&m(I1), &TropMatrix::identity(3)).unwrap();
        assert_eq!(mu, s("0"));
        assert!(is_eigenpair(&m(I1), &u, &mu));
        let not_invariant = m("0; -inf");
        assert_eq!(
            invariant_cone_eigenvector(&m("0 -inf; 0 0"), &not_invariant),
            Err(Error::NotInvariant)
        );
    }

    #[test]
    fn family_of_three() {
        let sum = mat_add(&m(R1), &m(R2)).unwrap();
        let mats = [m(R1), m(R2), sum];
        let r = common_eigenvector_family(&mats, 0, &s("2")).unwrap();
        assert!(r.verify(&mats));
        assert_eq!(r.eigenvalues[0], s("2"));
    }

    #[test]
    fn polynomial_spectrum_of_reducible_pair() {
        let p: MaxPolynomial<TropScalar> = "x1*x2".parse().unwrap();
        let report = polynomial_spectrum_check(&[m(R1), m(R2)], &p).unwrap();
        assert!(report.holds());
        assert_eq!(report.polynomial_spectrum, vec![s("10")]);
    }

    #[test]
    fn spectral_inequalities() {
        let p: MaxPolynomial<TropScalar> = "x1*x2 + x1^2".parse().unwrap();
        let irreducible = spectral_inequality_report(&[m(I1), m(I2)], &p).unwrap();
        assert!(irreducible.some_irreducible);
        assert!(irreducible.holds());
        assert!(irreducible.polynomial.is_equality() && irreducible.product.is_equality());
        let reducible = spectral_inequality_report(&[m(R1), m(R2)], &p).unwrap();
        assert_eq!(reducible.sum.lhs, s("8"));
        assert!(reducible.holds());
    }

    #[test]
    fn principal_intersection_of_irreducible_pair() {
        let product = projector_product(&[m(I1), m(I2)]).unwrap();
        assert_eq!(product, m("0 1 -1; -1 0 -2; -1 0 -2"));
        let cone = principal_intersection(&[m(I1), m(I2)]).unwrap();
        assert_eq!(cone.generators().len(), 1);
        assert!(proportional(&cone.generators()[0], &[s("1"), s("0"), s("0")]));
    }

    #[test]
    fn principal_intersection_can_be_empty() {
        let a = m("0 -inf; -inf -1");
        let b = m("-1 -inf; -inf 0");
        assert_eq!(principal_intersection(&[a, b]).unwrap(), Intersection::Empty);
    }

    #[test]
    fn intersections_at_classes() {
        let mats = [m(R1), m(R2)];
        for (nu, values) in [(1, ["3", "7"]), (3, ["2", "8"])] {
            let values = [s(values[0]), s(values[1])];
            let cone = eigencone_intersection_at_class(&mats, nu, &values).unwrap();
            assert!(!cone.is_empty());
            for g in cone.generators() {
                assert!(is_eigenpair(&mats[0], g, &values[0]));
                assert!(is_eigenpair(&mats[1], g, &values[1]));
            }
        }
    }

    #[test]
    fn distroots_of_reducible_pair() {
        let p: MaxPolynomial<TropScalar> = "x1 + x2".parse().unwrap();
        let report = distroots_report(&[m(R1), m(R2)], Some(&p)).unwrap();
        assert!(report.holds());
        assert_eq!(report.spectral_classes, vec![vec![1, 3], vec![1, 3]]);
        assert_ne!(report.reduced_edges[0], report.reduced_edges[1]);
        let check = report.polynomial_eigenvalue_check.unwrap();
        assert_eq!(check.predicted, vec![s("8"), s("7")]);
    }
}
