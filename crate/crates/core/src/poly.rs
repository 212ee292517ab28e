//! Max polynomials: a real polynomial with nonnegative coefficients where
//! the sum is replaced by the maximum. In the additive picture a term
//! `c ⊗ x1^e1 ⊗ ... ⊗ xr^er` evaluates to `c + e1*x1 + ... + er*xr`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{check_family_commutes, mat_add, mat_mul, TropMatrix};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Monomial<S> {
    pub coeff: S,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MaxPolynomial<S> {
    terms: Vec<Monomial<S>>,
}

impl<S: Scalar> MaxPolynomial<S> {
    pub fn new(terms: Vec<Monomial<S>>) -> Result<Self> {
        let arity = terms
            .first()
            .map(|t| t.exponents.len())
            .ok_or_else(|| Error::InvalidPolynomial("no terms".into()))?;
        if terms.iter().any(|t| t.exponents.len() != arity) {
            return Err(Error::InvalidPolynomial(
                "exponent vectors differ in length".into(),
            ));
        }
        Ok(MaxPolynomial { terms })
    }

    /// `x_index` in `arity` variables.
    pub fn variable(arity: usize, index: usize) -> Self {
        let mut exponents = vec![0; arity];
        exponents[index] = 1;
        MaxPolynomial {
            terms: vec![Monomial {
                coeff: S::unit(),
                exponents,
            }],
        }
    }

    /// `x1 ⊕ ... ⊕ xr`.
    pub fn sum_of_variables(arity: usize) -> Self {
        MaxPolynomial {
            terms: (0..arity)
                .flat_map(|i| Self::variable(arity, i).terms)
                .collect(),
        }
    }

    /// `x1 ⊗ ... ⊗ xr`.
    pub fn product_of_variables(arity: usize) -> Self {
        MaxPolynomial {
            terms: vec![Monomial {
                coeff: S::unit(),
                exponents: vec![1; arity],
            }],
        }
    }

    pub fn terms(&self) -> &[Monomial<S>] {
        &self.terms
    }

    pub fn arity(&self) -> usize {
        self.terms[0].exponents.len()
    }

    /// Value at a scalar point.
    pub fn eval_scalar(&self, point: &[S]) -> Result<S> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: point.len(),
            });
        }
        Ok(self.terms.iter().fold(S::bottom(), |acc, term| {
            let value = term
                .exponents
                .iter()
                .zip(point)
                .fold(term.coeff.clone(), |v, (&e, x)| v.otimes(&x.pow(e)));
            acc.oplus(&value)
        }))
    }
}

fn eval_in_order<S: Scalar>(
    p: &MaxPolynomial<S>,
    mats: &[TropMatrix<S>],
    order: &[usize],
) -> Result<TropMatrix<S>> {
    let n = mats[0].rows();
    let mut total: Option<TropMatrix<S>> = None;
    for term in &p.terms {
        let mut product = TropMatrix::identity(n)
            .with_algebra(mats[0].algebra())?
            .scale(&term.coeff);
        for &var in order {
            let e = term.exponents[var];
            if e > 0 {
                product = mat_mul(&product, &mats[var].power(e)?)?;
            }
        }
        total = Some(match total {
            None => product,
            Some(t) => mat_add(&t, &product)?,
        });
    }
    Ok(total.expect("polynomial has at least one term"))
}

/// `p(A_1, ..., A_r)`: `⊕` over terms of `c ⊗ A_1^e1 ⊗ ... ⊗ A_r^er`, with
/// `A^0 = I` and monomials expanded in variable-index order.
pub fn poly_eval<S: Scalar>(
    p: &MaxPolynomial<S>,
    mats: &[TropMatrix<S>],
) -> Result<TropMatrix<S>> {
    if mats.len() != p.arity() {
        return Err(Error::ArityMismatch {
            expected: p.arity(),
            found: mats.len(),
        });
    }
    let n = mats[0].order()?;
    for m in mats {
        if m.shape() != (n, n) {
            return Err(Error::ShapeMismatch {
                op: "poly_eval",
                left: mats[0].shape(),
                right: m.shape(),
            });
        }
    }
    let order: Vec<usize> = (0..mats.len()).collect();
    let result = eval_in_order(p, mats, &order)?;
    if cfg!(debug_assertions) && n <= 4 && mats.len() > 1 && check_family_commutes(mats).is_ok() {
        let reversed: Vec<usize> = order.iter().rev().copied().collect();
        debug_assert!(
            eval_in_order(p, mats, &reversed)?.approx_eq(&result),
            "monomial order changed the value of a commuting family"
        );
    }
    Ok(result)
}

impl<S: Scalar> fmt::Display for MaxPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, term) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if !term.coeff.is_unit() || term.exponents.iter().all(|&e| e == 0) {
                factors.push(format!("{}", term.coeff));
            }
            for (i, &e) in term.exponents.iter().enumerate() {
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

/// One parsed term: coefficient factors and `(variable, exponent)` pairs.
pub(crate) type RawTerm = (Vec<String>, Vec<(usize, u32)>);

/// Splits a product `2*x1^2*x3` into coefficient tokens and variable powers
/// (variables are 1-based in the text, 0-based in the result).
pub(crate) fn parse_factors(term: &str) -> std::result::Result<RawTerm, String> {
    let mut coeffs = Vec::new();
    let mut vars = Vec::new();
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(format!("empty factor in `{term}`"));
        }
        if let Some(rest) = factor.strip_prefix('x') {
            let (index, exp) = match rest.split_once('^') {
                Some((i, e)) => (i, e.trim().parse::<u32>().map_err(|_| format!("bad exponent in `{factor}`"))?),
                None => (rest, 1),
            };
            let index: usize = index
                .trim()
                .parse()
                .map_err(|_| format!("bad variable `{factor}`"))?;
            if index == 0 {
                return Err("variables are numbered from x1".into());
            }
            vars.push((index - 1, exp));
        } else {
            coeffs.push(factor.to_string());
        }
    }
    Ok((coeffs, vars))
}

/// Parses `"x1 + 2*x1^2*x2 + -1"` where `+` is `⊕`, `*` is `⊗` and bare
/// numbers are coefficients. The arity is the largest variable index used.
impl<S: Scalar> FromStr for MaxPolynomial<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = s
            .split('+')
            .map(parse_factors)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(Error::InvalidPolynomial)?;
        let arity = raw
            .iter()
            .flat_map(|(_, vars)| vars.iter().map(|(i, _)| i + 1))
            .max()
            .unwrap_or(1);
        let mut terms = Vec::with_capacity(raw.len());
        for (coeffs, vars) in raw {
            let mut coeff = S::unit();
            for c in coeffs {
                let value: S = c
                    .parse()
                    .map_err(|_| Error::InvalidPolynomial(format!("bad coefficient `{c}`")))?;
                coeff = coeff.otimes(&value);
            }
            let mut exponents = vec![0; arity];
            for (i, e) in vars {
                exponents[i] += e;
            }
            terms.push(Monomial { coeff, exponents });
        }
        Self::new(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::TropScalar;

    fn m(text: &str) -> TropMatrix {
        text.parse().unwrap()
    }

    #[test]
    fn identity_polynomial() {
        let a = m("-2 1 -inf; -1 -1 -2; -1 -inf -2");
        let p = MaxPolynomial::<TropScalar>::variable(1, 0);
        assert_eq!(poly_eval(&p, std::slice::from_ref(&a)).unwrap(), a);
    }

    #[test]
    fn square_of_upper_triangular() {
        let a = m("0 1; -inf 0");
        let p: MaxPolynomial<TropScalar> = "x1^2".parse().unwrap();
        assert_eq!(poly_eval(&p, &[a]).unwrap(), m("0 1; -inf 0"));
    }

    #[test]
    fn sum_of_variables_is_entrywise_max() {
        let a1 = m("0 -inf -inf -inf; 1 3 -inf -inf; 2 -inf -1 -inf; -inf -inf 0 2");
        let a2 = m("6 -inf -inf -inf; 5 7 -inf -inf; 8 -inf 5 -inf; 5 -inf 6 8");
        let p = MaxPolynomial::sum_of_variables(2);
        assert_eq!(
            poly_eval(&p, &[a1.clone(), a2.clone()]).unwrap(),
            mat_add(&a1, &a2).unwrap()
        );
    }

    #[test]
    fn constant_term_uses_identity() {
        let a = m("1 2; 3 4");
        let p: MaxPolynomial<TropScalar> = "5 + x1".parse().unwrap();
        assert_eq!(poly_eval(&p, &[a]).unwrap(), m("5 2; 3 5"));
    }

    #[test]
    fn scalar_evaluation() {
        let p: MaxPolynomial<TropScalar> = "x1*x2 + 2*x1^2".parse().unwrap();
        let v = p
            .eval_scalar(&[TropScalar::int(3), TropScalar::int(7)])
            .unwrap();
        assert_eq!(v, TropScalar::int(10));
        assert_eq!(p.to_string(), "x1*x2 + 2*x1^2");
    }

    #[test]
    fn arity_and_shape_errors() {
        let p = MaxPolynomial::<TropScalar>::sum_of_variables(2);
        assert!(matches!(
            poly_eval(&p, &[m("0")]),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(matches!(
            poly_eval(&p, &[m("0"), m("0 0; 0 0")]),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(MaxPolynomial::<TropScalar>::new(vec![]).is_err());
        assert!("x0".parse::<MaxPolynomial<TropScalar>>().is_err());
    }
}
