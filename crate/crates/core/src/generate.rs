//! Seeded random commuting families for experiments and property tests.
//!
//! Commutation comes from construction: `B = q(A)` for a max polynomial
//! `q`, optionally conjugated by a common diagonal similarity. Every
//! generated pair is rechecked before it is returned.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::{classical_commute_check, NonnegMatrix, RealPolynomial, RealTerm};
use crate::error::{Error, Result};
use crate::matrix::{commute_check, scale_diag, TropMatrix};
use crate::poly::{poly_eval, MaxPolynomial, Monomial};
use crate::scalar::{Scalar, TropScalar};
use crate::structure::decompose;

const ATTEMPTS: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Poly,
    ScaledPoly,
    DistinctRootsBlock,
    ClassicalPoly,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Poly,
        FamilyKind::ScaledPoly,
        FamilyKind::DistinctRootsBlock,
        FamilyKind::ClassicalPoly,
    ];
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Poly => "poly",
            FamilyKind::ScaledPoly => "scaled-poly",
            FamilyKind::DistinctRootsBlock => "distinct-roots-block",
            FamilyKind::ClassicalPoly => "classical-poly",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| format!("unknown family kind `{s}`"))
    }
}

/// A generated pair together with the polynomial that produced `B`.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratedPair {
    Tropical {
        a: TropMatrix,
        b: TropMatrix,
        q: MaxPolynomial<TropScalar>,
    },
    Classical {
        a: NonnegMatrix,
        b: NonnegMatrix,
        q: RealPolynomial,
    },
}

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn int(&mut self, lo: i64, hi: i64) -> TropScalar {
        TropScalar::int(self.rng.gen_range(lo..=hi))
    }

    /// Entries in `[-6, 6]`, each finite with probability `density`.
    pub fn matrix(&mut self, n: usize, density: f64) -> TropMatrix {
        let mut m = TropMatrix::bottom(n, n);
        for i in 0..n {
            for j in 0..n {
                if self.rng.gen_bool(density) {
                    let x = self.int(-6, 6);
                    m.set(i, j, x);
                }
            }
        }
        m
    }

    /// Entries in `[-6, 0]` or bottom: a matrix whose entries are at most
    /// the unit.
    pub fn sub_unit_matrix(&mut self, n: usize, density: f64) -> TropMatrix {
        let mut m = TropMatrix::bottom(n, n);
        for i in 0..n {
            for j in 0..n {
                if self.rng.gen_bool(density) {
                    let x = self.int(-6, 0);
                    m.set(i, j, x);
                }
            }
        }
        m
    }

    /// A random matrix with a Hamiltonian cycle forced through finite
    /// entries, hence irreducible.
    pub fn irreducible(&mut self, n: usize, density: f64) -> TropMatrix {
        let mut m = self.matrix(n, density);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut self.rng);
        for k in 0..n {
            let (i, j) = (order[k], order[(k + 1) % n]);
            if m.get(i, j).is_bottom() {
                let x = self.int(-6, 6);
                m.set(i, j, x);
            }
        }
        m
    }

    /// Univariate max polynomial with one to three terms of degree at most
    /// three and coefficients in `[-3, 3]`. With `linear` the term `c ⊗ x`
    /// is always present; with `constant` a constant term may appear.
    pub fn polynomial(&mut self, linear: bool, constant: bool) -> MaxPolynomial<TropScalar> {
        let lowest = if constant { 0 } else { 1 };
        let count = self.rng.gen_range(1..=3);
        let mut terms = Vec::with_capacity(count + 1);
        if linear {
            terms.push(Monomial {
                coeff: self.int(-3, 3),
                exponents: vec![1],
            });
        }
        for _ in 0..count {
            let e = self.rng.gen_range(lowest..=3);
            terms.push(Monomial {
                coeff: self.int(-3, 3),
                exponents: vec![e],
            });
        }
        MaxPolynomial::new(terms).expect("terms share arity one")
    }

    /// `(A, q(A))` for a random `A` and `q`.
    pub fn poly_pair(&mut self, n: usize) -> Result<(TropMatrix, TropMatrix, MaxPolynomial<TropScalar>)> {
        let a = self.matrix(n, 0.6);
        let q = self.polynomial(false, true);
        let b = poly_eval(&q, std::slice::from_ref(&a))?;
        Ok((a, b, q))
    }

    /// A commuting pair conjugated by a random diagonal similarity.
    pub fn scaled_poly_pair(
        &mut self,
        n: usize,
    ) -> Result<(TropMatrix, TropMatrix, MaxPolynomial<TropScalar>)> {
        let (a, b, q) = self.poly_pair(n)?;
        let u: Vec<TropScalar> = (0..n).map(|_| self.int(-4, 4)).collect();
        Ok((scale_diag(&a, &u)?, scale_diag(&b, &u)?, q))
    }

    /// `(A, q(A))` with `A` irreducible and `q` containing a linear term, so
    /// that `q(A)` is irreducible too.
    pub fn irreducible_pair(
        &mut self,
        n: usize,
    ) -> Result<(TropMatrix, TropMatrix, MaxPolynomial<TropScalar>)> {
        let a = self.irreducible(n, 0.5);
        let q = self.polynomial(true, true);
        let b = poly_eval(&q, std::slice::from_ref(&a))?;
        Ok((a, b, q))
    }

    /// `A, q_1(A), ..., q_{r-1}(A)`.
    pub fn family(&mut self, n: usize, r: usize) -> Result<Vec<TropMatrix>> {
        let a = self.matrix(n, 0.6);
        let mut out = vec![a.clone()];
        for _ in 1..r {
            let q = self.polynomial(false, true);
            out.push(poly_eval(&q, std::slice::from_ref(&a))?);
        }
        Ok(out)
    }

    /// Block lower-triangular `A` (after a random permutation) whose
    /// diagonal blocks are irreducible with finite diagonals and pairwise
    /// distinct roots, and `B = q(A)` with `q` free of constant term. Then
    /// `A` and `B` have the same classes and both have distinct roots.
    pub fn distinct_roots_pair(
        &mut self,
        n: usize,
    ) -> Result<(TropMatrix, TropMatrix, MaxPolynomial<TropScalar>)> {
        for _ in 0..ATTEMPTS {
            let blocks = self.block_sizes(n);
            let mut m = TropMatrix::bottom(n, n);
            let mut start = 0;
            let mut starts = Vec::new();
            for (k, &size) in blocks.iter().enumerate() {
                let offset = TropScalar::int(3 * k as i64);
                let block = self.irreducible(size, 0.5);
                for i in 0..size {
                    for j in 0..size {
                        let mut x = block.get(i, j).clone();
                        if i == j && x.is_bottom() {
                            x = self.int(-6, 0);
                        }
                        if !x.is_bottom() {
                            x = x.otimes(&offset);
                        }
                        m.set(start + i, start + j, x);
                    }
                }
                starts.push(start);
                start += size;
            }
            // sparse edges from later blocks into earlier ones
            for i in 0..n {
                for j in 0..n {
                    let (bi, bj) = (block_of(&starts, i), block_of(&starts, j));
                    if bi > bj && self.rng.gen_bool(0.3) {
                        let x = self.int(-6, 6);
                        m.set(i, j, x);
                    }
                }
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut self.rng);
            let a = m.submatrix(&perm, &perm);
            let q = self.polynomial(true, false);
            let b = poly_eval(&q, std::slice::from_ref(&a))?;
            let distinct = |x: &TropMatrix| -> Result<bool> {
                let d = decompose(x)?;
                let mut roots = d.roots.clone();
                roots.sort();
                roots.dedup();
                Ok(roots.len() == d.roots.len())
            };
            if distinct(&a)? && distinct(&b)? {
                return Ok((a, b, q));
            }
        }
        Err(Error::GenerationFailed {
            attempts: ATTEMPTS,
            reason: "class roots did not separate".into(),
        })
    }

    fn block_sizes(&mut self, n: usize) -> Vec<usize> {
        let mut sizes = Vec::new();
        let mut left = n;
        while left > 0 {
            let s = self.rng.gen_range(1..=left.min(3));
            sizes.push(s);
            left -= s;
        }
        sizes
    }

    /// Nonnegative integer `A` and `B = q(A)` for a real polynomial `q`
    /// with nonnegative integer coefficients.
    pub fn classical_poly_pair(&mut self, n: usize) -> Result<(NonnegMatrix, NonnegMatrix, RealPolynomial)> {
        let data: Vec<f64> = (0..n * n)
            .map(|_| {
                if self.rng.gen_bool(0.6) {
                    self.rng.gen_range(0..=5) as f64
                } else {
                    0.0
                }
            })
            .collect();
        let a = NonnegMatrix::new(n, n, data)?;
        let count = self.rng.gen_range(1..=3);
        let terms = (0..count)
            .map(|_| RealTerm {
                coeff: self.rng.gen_range(1..=3) as f64,
                exponents: vec![self.rng.gen_range(0..=3)],
            })
            .collect();
        let q = RealPolynomial::new(terms)?;
        let b = q.eval_nonnegative(std::slice::from_ref(&a), 0.0)?;
        Ok((a, b, q))
    }

    /// A pair of the requested kind, checked to commute.
    pub fn commuting_pair(&mut self, kind: FamilyKind, n: usize) -> Result<GeneratedPair> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let pair = match kind {
            FamilyKind::Poly => self.poly_pair(n),
            FamilyKind::ScaledPoly => self.scaled_poly_pair(n),
            FamilyKind::DistinctRootsBlock => self.distinct_roots_pair(n),
            FamilyKind::ClassicalPoly => {
                let (a, b, q) = self.classical_poly_pair(n)?;
                if !classical_commute_check(&a, &b, crate::classical::CLASSICAL_EPSILON)? {
                    return Err(Error::InternalInvariantViolation(
                        "generated classical pair does not commute".into(),
                    ));
                }
                return Ok(GeneratedPair::Classical { a, b, q });
            }
        };
        let (a, b, q) = pair?;
        if !commute_check(&a, &b)? {
            return Err(Error::InternalInvariantViolation(
                "generated pair does not commute".into(),
            ));
        }
        Ok(GeneratedPair::Tropical { a, b, q })
    }
}

fn block_of(starts: &[usize], i: usize) -> usize {
    starts.iter().rposition(|&s| s <= i).expect("first block starts at 0")
}
