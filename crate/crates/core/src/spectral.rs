//! Single-matrix spectral theory: Perron root (maximal cycle mean), Kleene
//! star, critical digraph, principal eigencone and the spectral projector.

use crate::error::{Error, Result};
use crate::graph::{component_has_cycle, strongly_connected_components};
use crate::matrix::{dedup_rays, mat_add, mat_mul, residual, vectors_approx_eq, TropMatrix, Vector};
use crate::scalar::{cmp_means, Scalar};

/// Nodes and edges lying on cycles whose mean equals the Perron root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalDigraph {
    pub nodes: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Strongly connected components of the critical edges.
    pub components: Vec<Vec<usize>>,
}

/// Generators of an eigencone: every column `g` of `gens` satisfies
/// `A ⊗ g = eigenvalue ⊗ g`, and no column is all bottom. Columns are
/// scaled so their largest entry is the unit.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeGenerators<S> {
    pub eigenvalue: S,
    pub gens: TropMatrix<S>,
}

impl<S: Scalar> ConeGenerators<S> {
    pub fn from_vectors(eigenvalue: S, vectors: Vec<Vector<S>>) -> Result<Self> {
        let rays = dedup_rays(vectors);
        Ok(ConeGenerators {
            eigenvalue,
            gens: TropMatrix::from_columns(&rays)?,
        })
    }

    pub fn generators(&self) -> Vec<Vector<S>> {
        self.gens.columns()
    }

    pub fn len(&self) -> usize {
        self.gens.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.cols() == 0
    }

    /// Membership in the max cone spanned by the generators, decided by
    /// residuation: `v ∈ Img(X)` iff `X ⊗ (X \ v) = v`.
    pub fn contains(&self, v: &[S]) -> bool {
        let Ok(target) = TropMatrix::from_columns(&[v.to_vec()]) else {
            return false;
        };
        residual(&self.gens, &target)
            .and_then(|c| mat_mul(&self.gens, &c))
            .map(|back| vectors_approx_eq(back.data(), v))
            .unwrap_or(false)
    }
}

/// Maximal cycle mean of a strongly connected matrix (Karp's algorithm,
/// maximizing variant), comparing means without division.
fn karp_root<S: Scalar>(m: &TropMatrix<S>) -> S {
    let n = m.rows();
    let mut walks = vec![vec![S::bottom(); n]; n + 1];
    walks[0][0] = S::unit();
    for k in 1..=n {
        for u in 0..n {
            let du = walks[k - 1][u].clone();
            if du.is_bottom() {
                continue;
            }
            for v in 0..n {
                let cand = du.otimes(m.get(u, v));
                if cand > walks[k][v] {
                    walks[k][v] = cand;
                }
            }
        }
    }
    let mut best: Option<(S, u32)> = None;
    for v in 0..n {
        let top = &walks[n][v];
        if top.is_bottom() {
            continue;
        }
        let mut worst: Option<(S, u32)> = None;
        for (k, row) in walks.iter().enumerate().take(n) {
            if row[v].is_bottom() {
                continue;
            }
            let cand = (top.odiv(&row[v]), (n - k) as u32);
            worst = match worst {
                Some(w) if cmp_means(&w.0, w.1, &cand.0, cand.1).is_le() => Some(w),
                _ => Some(cand),
            };
        }
        if let Some(w) = worst {
            best = match best {
                Some(b) if cmp_means(&b.0, b.1, &w.0, w.1).is_ge() => Some(b),
                _ => Some(w),
            };
        }
    }
    let (weight, len) = best.expect("strongly connected block with a cycle");
    weight.root(len)
}

/// Perron root `λ(A)`: the maximal cycle mean, bottom when acyclic.
pub fn perron_root<S: Scalar>(a: &TropMatrix<S>) -> Result<S> {
    a.order()?;
    let adj = a.adjacency();
    let mut root = S::bottom();
    for comp in strongly_connected_components(&adj) {
        if !component_has_cycle(&adj, &comp) {
            continue;
        }
        let r = karp_root(&a.submatrix(&comp, &comp));
        root = root.oplus(&r);
    }
    Ok(root)
}

/// Irreducible: the associated digraph is strongly connected and carries a
/// cycle (a 1x1 bottom matrix does not count).
pub fn is_irreducible<S: Scalar>(a: &TropMatrix<S>) -> Result<bool> {
    let n = a.order()?;
    let adj = a.adjacency();
    let comps = strongly_connected_components(&adj);
    Ok(comps.len() == 1 && (n > 1 || component_has_cycle(&adj, &comps[0])))
}

/// `A ⊘ λ(A)` together with `λ(A)`.
pub fn normalize<S: Scalar>(a: &TropMatrix<S>) -> Result<(TropMatrix<S>, S)> {
    let lambda = perron_root(a)?;
    if lambda.is_bottom() {
        return Err(Error::Acyclic);
    }
    Ok((a.div_scalar(&lambda), lambda))
}

/// `A⁺ = A ⊕ A² ⊕ ...` by an all-pairs closure; assumes `λ(A) <= unit`.
fn closure_plus<S: Scalar>(a: &TropMatrix<S>) -> TropMatrix<S> {
    let n = a.rows();
    let mut s = a.clone();
    for k in 0..n {
        for i in 0..n {
            let sik = s.get(i, k).clone();
            if sik.is_bottom() {
                continue;
            }
            for j in 0..n {
                let cand = sik.otimes(s.get(k, j));
                if cand > *s.get(i, j) {
                    s.set(i, j, cand);
                }
            }
        }
    }
    s
}

fn check_star_converges<S: Scalar>(a: &TropMatrix<S>) -> Result<()> {
    let lambda = perron_root(a)?;
    if lambda.is_bottom() || lambda.approx_le(&S::unit()) {
        Ok(())
    } else {
        Err(Error::DivergentStar)
    }
}

/// Kleene star `A* = I ⊕ A ⊕ ... ⊕ A^{n-1}`; requires `λ(A) <= unit`.
pub fn kleene_star<S: Scalar>(a: &TropMatrix<S>) -> Result<TropMatrix<S>> {
    check_star_converges(a)?;
    let n = a.rows();
    let identity = TropMatrix::identity(n).with_algebra(a.algebra())?;
    mat_add(&identity, &closure_plus(a))
}

/// `A⁺ = A ⊗ A*`; requires `λ(A) <= unit`.
pub fn kleene_plus<S: Scalar>(a: &TropMatrix<S>) -> Result<TropMatrix<S>> {
    check_star_converges(a)?;
    Ok(closure_plus(a))
}

struct Normalized<S> {
    matrix: TropMatrix<S>,
    star: TropMatrix<S>,
    critical: Vec<usize>,
}

fn normalized_analysis<S: Scalar>(a: &TropMatrix<S>) -> Result<(Normalized<S>, S)> {
    let (b, lambda) = normalize(a)?;
    let plus = closure_plus(&b);
    let n = b.rows();
    let critical: Vec<usize> = (0..n).filter(|&i| plus.get(i, i).is_unit()).collect();
    let star = mat_add(&TropMatrix::identity(n).with_algebra(b.algebra())?, &plus)?;
    Ok((
        Normalized {
            matrix: b,
            star,
            critical,
        },
        lambda,
    ))
}

/// Critical digraph: nodes and edges on cycles attaining `λ(A)`.
pub fn critical_digraph<S: Scalar>(a: &TropMatrix<S>) -> Result<CriticalDigraph> {
    a.order()?;
    let (norm, _) = normalized_analysis(a)?;
    let n = norm.matrix.rows();
    let mut is_crit = vec![false; n];
    for &i in &norm.critical {
        is_crit[i] = true;
    }
    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for &i in &norm.critical {
        for &j in &norm.critical {
            let closes = norm.matrix.get(i, j).otimes(norm.star.get(j, i));
            if closes.is_unit() {
                edges.push((i, j));
                adj[i].push(j);
            }
        }
    }
    let components = strongly_connected_components(&adj)
        .into_iter()
        .filter(|c| is_crit[c[0]])
        .collect();
    Ok(CriticalDigraph {
        nodes: norm.critical,
        edges,
        components,
    })
}

/// Principal eigencone `V(A, λ(A))`, generated by the critical columns of
/// `(A ⊘ λ)*`.
pub fn principal_eigencone<S: Scalar>(a: &TropMatrix<S>) -> Result<ConeGenerators<S>> {
    a.order()?;
    let (norm, lambda) = normalized_analysis(a)?;
    let columns = norm.critical.iter().map(|&i| norm.star.column(i));
    ConeGenerators::from_vectors(lambda, columns.collect())
}

fn require_normalized<S: Scalar>(a: &TropMatrix<S>) -> Result<()> {
    a.order()?;
    if perron_root(a)?.is_unit() {
        Ok(())
    } else {
        Err(Error::NotNormalized)
    }
}

/// Spectral projector `Q(A) = ⊕_{i critical} A*_{·i} ⊗ A*_{i·}`; `λ(A)` must
/// be the unit.
pub fn spectral_projector<S: Scalar>(a: &TropMatrix<S>) -> Result<TropMatrix<S>> {
    require_normalized(a)?;
    let (norm, _) = normalized_analysis(a)?;
    let n = a.rows();
    let mut q = TropMatrix::bottom(n, n).with_algebra(a.algebra())?;
    for &k in &norm.critical {
        for i in 0..n {
            let left = norm.star.get(i, k);
            if left.is_bottom() {
                continue;
            }
            for j in 0..n {
                let cand = left.otimes(norm.star.get(k, j));
                if cand > *q.get(i, j) {
                    q.set(i, j, cand);
                }
            }
        }
    }
    Ok(q)
}

/// Default iteration cap for [`projector_limit`]: `n²`.
pub fn default_projector_cap(n: usize) -> usize {
    n * n
}

/// `Q(A) = lim A^p A*`, iterating `P <- A ⊗ P` from `P = A*` until it stops
/// changing (the sequence is entrywise non-increasing).
pub fn projector_limit<S: Scalar>(a: &TropMatrix<S>, cap: usize) -> Result<TropMatrix<S>> {
    require_normalized(a)?;
    let mut p = kleene_star(a)?;
    for _ in 0..cap {
        let next = mat_mul(a, &p)?;
        if next.approx_eq(&p) {
            return Ok(p);
        }
        p = next;
    }
    Err(Error::NoConvergence { cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::is_eigenpair;
    use crate::scalar::TropScalar;

    fn m(text: &str) -> TropMatrix {
        text.parse().unwrap()
    }

    fn s(text: &str) -> TropScalar {
        text.parse().unwrap()
    }

    const A1: &str = "-2 1 -inf; -1 -1 -2; -1 -inf -2";
    const A2: &str = "0 -1 -1; -inf 0 -4; -3 -inf 0";

    #[test]
    fn perron_roots() {
        assert_eq!(perron_root(&m(A1)).unwrap(), s("0"));
        assert_eq!(perron_root(&m(A2)).unwrap(), s("0"));
        assert_eq!(perron_root(&m("3 -inf; -inf -1/2")).unwrap(), s("3"));
        assert_eq!(
            perron_root(&m("-inf 4 1; -inf -inf 2; -inf -inf -inf")).unwrap(),
            TropScalar::Bottom
        );
        // two-cycle of mean 3/2 beats the loop of weight 1
        assert_eq!(perron_root(&m("1 2; 1 -inf")).unwrap(), s("3/2"));
    }

    #[test]
    fn star_of_bottom_matrix_is_identity() {
        let z = TropMatrix::<TropScalar>::bottom(3, 3);
        assert_eq!(kleene_star(&z).unwrap(), TropMatrix::identity(3));
    }

    #[test]
    fn star_diverges_above_unit() {
        assert_eq!(kleene_star(&m("1")), Err(Error::DivergentStar));
    }

    #[test]
    fn critical_digraphs_of_the_irreducible_pair() {
        let c1 = critical_digraph(&m(A1)).unwrap();
        assert_eq!(c1.nodes, vec![0, 1]);
        assert_eq!(c1.edges, vec![(0, 1), (1, 0)]);
        assert_eq!(c1.components, vec![vec![0, 1]]);
        let c2 = critical_digraph(&m(A2)).unwrap();
        assert_eq!(c2.nodes, vec![0, 1, 2]);
        assert_eq!(c2.components, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn critical_digraph_of_unit_diagonal() {
        let c = critical_digraph(&TropMatrix::<TropScalar>::identity(3)).unwrap();
        assert_eq!(c.nodes, vec![0, 1, 2]);
        assert_eq!(c.edges, vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(
            critical_digraph(&m("-inf 1; -inf -inf")),
            Err(Error::Acyclic)
        );
    }

    #[test]
    fn projectors_of_the_irreducible_pair() {
        assert_eq!(
            spectral_projector(&m(A1)).unwrap(),
            m("0 1 -1; -1 0 -2; -1 0 -2")
        );
        assert_eq!(
            spectral_projector(&m(A2)).unwrap(),
            m("0 -1 -1; -7 0 -4; -3 -4 0")
        );
        let id = TropMatrix::<TropScalar>::identity(2);
        assert_eq!(spectral_projector(&id).unwrap(), id);
        assert_eq!(
            spectral_projector(&m("1 -inf; -inf 0")),
            Err(Error::NotNormalized)
        );
    }

    #[test]
    fn projector_limit_agrees_with_closed_form() {
        let a = m(A1);
        assert_eq!(
            projector_limit(&a, default_projector_cap(3)).unwrap(),
            spectral_projector(&a).unwrap()
        );
        let id = TropMatrix::<TropScalar>::identity(3);
        assert_eq!(projector_limit(&id, 1).unwrap(), id);
        assert_eq!(
            projector_limit(&m("-1 0; 0 -1"), 0),
            Err(Error::NoConvergence { cap: 0 })
        );
    }

    #[test]
    fn principal_eigencone_of_a1_contains_common_vector() {
        let cone = principal_eigencone(&m(A1)).unwrap();
        assert_eq!(cone.eigenvalue, s("0"));
        for g in cone.generators() {
            assert!(is_eigenpair(&m(A1), &g, &cone.eigenvalue));
        }
        assert!(cone.contains(&[s("1"), s("0"), s("0")]));
        assert!(!cone.contains(&[s("0"), s("0"), s("0")]));
    }

    #[test]
    fn principal_eigencone_of_unit_diagonal() {
        let cone = principal_eigencone(&TropMatrix::<TropScalar>::identity(2)).unwrap();
        assert_eq!(cone.gens, TropMatrix::identity(2));
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&m(A1)).unwrap());
        assert!(!is_irreducible(&m("-inf")).unwrap());
        assert!(is_irreducible(&m("-3")).unwrap());
        assert!(!is_irreducible(&m("0 -inf; 0 0")).unwrap());
    }
}
