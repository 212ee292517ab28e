//! Digraphs given by Boolean matrices: saturation digraphs of eigenvectors,
//! cycles shared by commuting digraphs and common eigennodes.

use std::collections::BTreeSet;

use crate::commuting::common_eigenvector_pair;
use crate::error::{Error, Result};
use crate::graph::{find_cycle, nontrivial_components, strongly_connected_components};
use crate::matrix::{
    commute_check, is_eigenpair, scale_diag, threshold_unit, Algebra, TropMatrix, Vector,
};
use crate::scalar::Scalar;
use crate::spectral::{critical_digraph, is_irreducible, perron_root};

/// A digraph on `0..n` stored as a Boolean matrix (unit marks an edge).
#[derive(Clone, Debug, PartialEq)]
pub struct BoolDigraph<S = crate::scalar::TropScalar> {
    matrix: TropMatrix<S>,
}

impl<S: Scalar> BoolDigraph<S> {
    pub fn from_matrix(matrix: TropMatrix<S>) -> Result<Self> {
        matrix.order()?;
        let matrix = matrix.with_algebra(Algebra::Boolean)?;
        Ok(BoolDigraph { matrix })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut matrix = TropMatrix::bottom(n, n);
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    len: n,
                });
            }
            matrix.set(i, j, S::unit());
        }
        Self::from_matrix(matrix)
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &TropMatrix<S> {
        &self.matrix
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.matrix.get(i, j).is_unit()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        self.matrix.adjacency()
    }

    pub fn out_degree(&self, i: usize) -> usize {
        (0..self.n()).filter(|&j| self.has_edge(i, j)).count()
    }

    /// Strongly connected components, including trivial ones.
    pub fn components(&self) -> Vec<Vec<usize>> {
        strongly_connected_components(&self.adjacency())
    }

    /// Components that carry a cycle.
    pub fn nontrivial_components(&self) -> Vec<Vec<usize>> {
        nontrivial_components(&self.adjacency())
    }
}

/// Saturation digraph of an eigenvector `u` with no bottom entry: edge
/// `(i, j)` iff `a_ij ⊗ u_j = λ(A) ⊗ u_i`.
pub fn saturation_digraph<S: Scalar>(a: &TropMatrix<S>, u: &[S]) -> Result<BoolDigraph<S>> {
    let lambda = perron_root(a)?;
    if lambda.is_bottom() || u.iter().any(S::is_bottom) || !is_eigenpair(a, u, &lambda) {
        return Err(Error::NotAnEigenvector);
    }
    let scaled = scale_diag(a, u)?.div_scalar(&lambda);
    BoolDigraph::from_matrix(threshold_unit(&scaled)?)
}

/// SCC partition of the saturation digraph of `u`.
pub fn scc_of_saturation<S: Scalar>(a: &TropMatrix<S>, u: &[S]) -> Result<Vec<Vec<usize>>> {
    Ok(saturation_digraph(a, u)?.components())
}

fn nontrivial_nodes<S: Scalar>(g: &BoolDigraph<S>) -> BTreeSet<usize> {
    g.nontrivial_components().into_iter().flatten().collect()
}

/// Critical nodes of two commuting irreducible matrices read off the
/// saturation digraphs of one common positive eigenvector.
#[derive(Clone, Debug, PartialEq)]
pub struct CommonEigennode<S> {
    pub vector: Vector<S>,
    pub critical_a: Vec<usize>,
    pub critical_b: Vec<usize>,
    pub common: Vec<usize>,
}

/// `N_c(A) ∩ N_c(B)` for irreducible commuting `A` and `B`; never empty.
pub fn common_eigennode<S: Scalar>(
    a: &TropMatrix<S>,
    b: &TropMatrix<S>,
) -> Result<CommonEigennode<S>> {
    if !commute_check(a, b)? {
        return Err(Error::NotCommuting(0, 1));
    }
    for (k, m) in [a, b].into_iter().enumerate() {
        if !is_irreducible(m)? {
            return Err(Error::NotIrreducible(k));
        }
    }
    let common = common_eigenvector_pair(a, b, &perron_root(a)?)?;
    let u = common.vector;
    let critical_a = nontrivial_nodes(&saturation_digraph(a, &u)?);
    let critical_b = nontrivial_nodes(&saturation_digraph(b, &u)?);
    let shared: Vec<usize> = critical_a.intersection(&critical_b).copied().collect();
    if shared.is_empty() {
        return Err(Error::InternalInvariantViolation(
            "commuting irreducible matrices without a common critical node".into(),
        ));
    }
    Ok(CommonEigennode {
        vector: u,
        critical_a: critical_a.into_iter().collect(),
        critical_b: critical_b.into_iter().collect(),
        common: shared,
    })
}

/// Cycles `c1` of `G1` and `c2` of `G2` such that every node of `c1` lies
/// in a nontrivial component of `G2` and vice versa. Each cycle is listed
/// as its node sequence; the last node has an edge back to the first.
pub fn cycle_witness<S: Scalar>(
    g1: &BoolDigraph<S>,
    g2: &BoolDigraph<S>,
) -> Result<(Vec<usize>, Vec<usize>)> {
    if !commute_check(g1.matrix(), g2.matrix())? {
        return Err(Error::NotCommuting(0, 1));
    }
    for g in [g1, g2] {
        if let Some(node) = (0..g.n()).find(|&i| g.out_degree(i) == 0) {
            return Err(Error::ZeroOutDegree { node });
        }
    }
    let search = |g: &BoolDigraph<S>, other: &BoolDigraph<S>| {
        let inside = nontrivial_nodes(other);
        let allowed: Vec<bool> = (0..g.n()).map(|i| inside.contains(&i)).collect();
        find_cycle(&g.adjacency(), &allowed).ok_or_else(|| {
            Error::InternalInvariantViolation(
                "no cycle inside the other digraph's components".into(),
            )
        })
    };
    Ok((search(g1, g2)?, search(g2, g1)?))
}

/// For irreducible commuting matrices whose critical digraphs are single
/// cycles, whether the two critical node sets are equal.
pub fn single_cycle_coincidence<S: Scalar>(a: &TropMatrix<S>, b: &TropMatrix<S>) -> Result<bool> {
    if !commute_check(a, b)? {
        return Err(Error::NotCommuting(0, 1));
    }
    let mut node_sets = Vec::with_capacity(2);
    for (k, m) in [a, b].into_iter().enumerate() {
        if !is_irreducible(m)? {
            return Err(Error::NotIrreducible(k));
        }
        let crit = critical_digraph(m)?;
        let single_cycle = crit.components.len() == 1 && crit.edges.len() == crit.nodes.len();
        if !single_cycle {
            return Err(Error::PreconditionViolated(format!(
                "critical digraph of matrix {k} is not a single cycle"
            )));
        }
        node_sets.push(crit.nodes);
    }
    Ok(node_sets[0] == node_sets[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::TropScalar;

    fn m(text: &str) -> TropMatrix {
        text.parse().unwrap()
    }

    fn v(text: &str) -> Vec<TropScalar> {
        text.split_whitespace().map(|x| x.parse().unwrap()).collect()
    }

    const I1: &str = "-2 1 -inf; -1 -1 -2; -1 -inf -2";
    const I2: &str = "0 -1 -1; -inf 0 -4; -3 -inf 0";

    #[test]
    fn saturation_of_irreducible_example() {
        let g = saturation_digraph(&m(I1), &v("1 0 0")).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 0), (2, 0)]);
        assert_eq!(g.nontrivial_components(), vec![vec![0, 1]]);
        assert_eq!(
            scc_of_saturation(&m(I1), &v("1 0 0")).unwrap(),
            vec![vec![0, 1], vec![2]]
        );
        assert_eq!(
            saturation_digraph(&m(I1), &v("0 0 0")),
            Err(Error::NotAnEigenvector)
        );
    }

    #[test]
    fn saturation_of_unit_diagonal() {
        let g = saturation_digraph(&TropMatrix::<TropScalar>::identity(3), &v("0 0 0")).unwrap();
        assert_eq!(g.edges(), vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(g.nontrivial_components().len(), 3);
    }

    #[test]
    fn common_eigennode_of_irreducible_pair() {
        let r = common_eigennode(&m(I1), &m(I2)).unwrap();
        assert_eq!(r.critical_a, vec![0, 1]);
        assert_eq!(r.critical_b, vec![0, 1, 2]);
        assert_eq!(r.common, vec![0, 1]);
        assert_eq!(
            common_eigennode(&m("0 -inf; 0 0"), &m("0 -inf; 0 0")),
            Err(Error::NotIrreducible(0))
        );
    }

    #[test]
    fn cycle_witness_on_saturation_digraphs() {
        let u = v("1 0 0");
        let g1 = saturation_digraph(&m(I1), &u).unwrap();
        let g2 = saturation_digraph(&m(I2), &u).unwrap();
        let (c1, c2) = cycle_witness(&g1, &g2).unwrap();
        assert_eq!(c1, vec![0, 1]);
        assert!(c2.iter().all(|&i| i < 2));
        let lone = BoolDigraph::<TropScalar>::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(cycle_witness(&lone, &lone).unwrap(), (vec![0], vec![0]));
        let stub = BoolDigraph::<TropScalar>::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(
            cycle_witness(&stub, &stub),
            Err(Error::ZeroOutDegree { node: 1 })
        );
    }

    #[test]
    fn single_cycle_critical_digraphs() {
        let a = m(I1);
        assert!(single_cycle_coincidence(&a, &a).unwrap());
        assert!(matches!(
            single_cycle_coincidence(&m(I2), &m(I2)),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
