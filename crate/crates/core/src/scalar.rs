//! Scalars of the max-plus semiring.
//!
//! The canonical scalar is [`TropScalar`]: an exact rational or the bottom
//! element `-inf`, with `max` as addition and `+` as multiplication. The
//! isomorphic max-times picture (nonnegative reals, `max` and `×`) maps onto
//! it through the logarithm; that conversion happens only in float mode,
//! where [`FloatScalar`] carries an `f64` and every equality test is taken
//! within the thread's current epsilon (see [`with_epsilon`]).
//!
//! Algorithms are written once against the [`Scalar`] trait.

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

/// Exact rational backing [`TropScalar`].
pub type Rational = Ratio<i128>;

/// Default tolerance for float mode.
pub const DEFAULT_EPSILON: f64 = 1e-9;

thread_local! {
    static EPSILON: Cell<f64> = const { Cell::new(DEFAULT_EPSILON) };
}

/// Runs `f` with the float-mode tolerance set to `eps` on this thread.
pub fn with_epsilon<R>(eps: f64, f: impl FnOnce() -> R) -> R {
    assert!(eps > 0.0, "epsilon must be positive");
    let previous = EPSILON.with(|cell| cell.replace(eps));
    struct Restore(f64);
    impl Drop for Restore {
        fn drop(&mut self) {
            EPSILON.with(|cell| cell.set(self.0));
        }
    }
    let _restore = Restore(previous);
    f()
}

/// Current float-mode tolerance on this thread.
pub fn float_epsilon() -> f64 {
    EPSILON.with(Cell::get)
}

/// A max-plus scalar: `oplus` is max, `otimes` is addition, `bottom` is the
/// additive identity and `unit` the multiplicative one.
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + PartialEq + PartialOrd + FromStr + Send + Sync + 'static
{
    fn bottom() -> Self;
    fn unit() -> Self;
    fn from_int(value: i64) -> Self;
    fn is_bottom(&self) -> bool;
    fn oplus(&self, other: &Self) -> Self;
    fn otimes(&self, other: &Self) -> Self;
    /// Multiplicative inverse, `None` for bottom.
    fn inverse(&self) -> Option<Self>;
    /// `self` multiplied with itself `k` times (`k * self` in the additive picture).
    fn pow(&self, k: u32) -> Self;
    /// The unique `r` with `r.pow(k) == self`.
    fn root(&self, k: u32) -> Self;
    /// Equality: exact for rationals, within epsilon for floats.
    fn approx_eq(&self, other: &Self) -> bool;
    fn to_f64(&self) -> f64;
    /// Builds a scalar from a classical (additive-picture) float, used when
    /// reading max-times data through the logarithm. Exact scalars refuse.
    fn from_f64(value: f64) -> Option<Self>;

    fn is_finite(&self) -> bool {
        !self.is_bottom()
    }

    fn is_unit(&self) -> bool {
        self.approx_eq(&Self::unit())
    }

    fn approx_le(&self, other: &Self) -> bool {
        self <= other || self.approx_eq(other)
    }

    fn approx_lt(&self, other: &Self) -> bool {
        self < other && !self.approx_eq(other)
    }

    /// `self ⊗ divisor⁻¹`. Panics if `divisor` is bottom.
    fn odiv(&self, divisor: &Self) -> Self {
        let inv = divisor
            .inverse()
            .expect("division by the bottom element");
        self.otimes(&inv)
    }
}

/// Exact extended rational: `Bottom` (= -inf) or a finite rational.
///
/// The derived order puts `Bottom` strictly below every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropScalar {
    Bottom,
    Fin(Rational),
}

impl TropScalar {
    pub fn int(value: i64) -> Self {
        TropScalar::Fin(Rational::from_integer(value as i128))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        TropScalar::Fin(Rational::new(numer as i128, denom as i128))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropScalar::Bottom => None,
            TropScalar::Fin(r) => Some(r),
        }
    }
}

impl Scalar for TropScalar {
    fn bottom() -> Self {
        TropScalar::Bottom
    }

    fn unit() -> Self {
        TropScalar::Fin(Rational::zero())
    }

    fn from_int(value: i64) -> Self {
        TropScalar::int(value)
    }

    fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    fn oplus(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    fn otimes(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::Fin(a), TropScalar::Fin(b)) => TropScalar::Fin(a + b),
            _ => TropScalar::Bottom,
        }
    }

    fn inverse(&self) -> Option<Self> {
        self.finite().map(|r| TropScalar::Fin(-r))
    }

    fn pow(&self, k: u32) -> Self {
        match self {
            TropScalar::Bottom if k == 0 => Self::unit(),
            TropScalar::Bottom => TropScalar::Bottom,
            TropScalar::Fin(r) => TropScalar::Fin(r * Rational::from_integer(k as i128)),
        }
    }

    fn root(&self, k: u32) -> Self {
        assert!(k > 0, "zeroth root");
        match self {
            TropScalar::Bottom => TropScalar::Bottom,
            TropScalar::Fin(r) => TropScalar::Fin(r / Rational::from_integer(k as i128)),
        }
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn to_f64(&self) -> f64 {
        match self {
            TropScalar::Bottom => f64::NEG_INFINITY,
            TropScalar::Fin(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    fn from_f64(_value: f64) -> Option<Self> {
        None
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => f.write_str("-inf"),
            TropScalar::Fin(r) if r.is_integer() => write!(f, "{}", r.numer()),
            TropScalar::Fin(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar `{}`", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

/// Parses `-inf`, integers, decimals (`-1.25`) and fractions (`3/4`) exactly.
impl FromStr for TropScalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let token = s.trim();
        if token == "-inf" {
            return Ok(TropScalar::Bottom);
        }
        parse_rational(token)
            .map(TropScalar::Fin)
            .ok_or_else(|| ParseScalarError(token.to_string()))
    }
}

fn parse_rational(token: &str) -> Option<Rational> {
    if let Some((n, d)) = token.split_once('/') {
        let numer = parse_decimal(n)?;
        let denom = parse_decimal(d)?;
        if denom.is_zero() {
            return None;
        }
        return Some(numer / denom);
    }
    parse_decimal(token)
}

fn parse_decimal(token: &str) -> Option<Rational> {
    let (negative, digits) = match token.as_bytes().first()? {
        b'-' => (true, &token[1..]),
        b'+' => (false, &token[1..]),
        _ => (false, token),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) || frac_part.len() > 30 {
        return None;
    }
    let mut numer: i128 = 0;
    for b in int_part.bytes().chain(frac_part.bytes()) {
        numer = numer.checked_mul(10)?.checked_add((b - b'0') as i128)?;
    }
    let denom = 10i128.checked_pow(frac_part.len() as u32)?;
    let value = Rational::new(numer, denom);
    Some(if negative { -value } else { value })
}

/// Float max-plus scalar; `-inf` is bottom. Equality is approximate.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct FloatScalar(pub f64);

impl Scalar for FloatScalar {
    fn bottom() -> Self {
        FloatScalar(f64::NEG_INFINITY)
    }

    fn unit() -> Self {
        FloatScalar(0.0)
    }

    fn from_int(value: i64) -> Self {
        FloatScalar(value as f64)
    }

    fn is_bottom(&self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    fn oplus(&self, other: &Self) -> Self {
        FloatScalar(self.0.max(other.0))
    }

    fn otimes(&self, other: &Self) -> Self {
        if self.is_bottom() || other.is_bottom() {
            Self::bottom()
        } else {
            FloatScalar(self.0 + other.0)
        }
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_bottom()).then(|| FloatScalar(-self.0))
    }

    fn pow(&self, k: u32) -> Self {
        if k == 0 {
            Self::unit()
        } else if self.is_bottom() {
            *self
        } else {
            FloatScalar(self.0 * k as f64)
        }
    }

    fn root(&self, k: u32) -> Self {
        assert!(k > 0, "zeroth root");
        if self.is_bottom() {
            *self
        } else {
            FloatScalar(self.0 / k as f64)
        }
    }

    fn approx_eq(&self, other: &Self) -> bool {
        match (self.is_bottom(), other.is_bottom()) {
            (true, true) => true,
            (false, false) => {
                let scale = 1.0 + self.0.abs().max(other.0.abs());
                (self.0 - other.0).abs() <= float_epsilon() * scale
            }
            _ => false,
        }
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn from_f64(value: f64) -> Option<Self> {
        (!value.is_nan() && value != f64::INFINITY).then_some(FloatScalar(value))
    }
}

impl fmt::Display for FloatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bottom() {
            f.write_str("-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for FloatScalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let token = s.trim();
        if token == "-inf" {
            return Ok(Self::bottom());
        }
        let value = match token.split_once('/') {
            Some((n, d)) => {
                let n: f64 = n.parse().map_err(|_| ParseScalarError(token.into()))?;
                let d: f64 = d.parse().map_err(|_| ParseScalarError(token.into()))?;
                n / d
            }
            None => token.parse().map_err(|_| ParseScalarError(token.into()))?,
        };
        if value.is_finite() {
            Ok(FloatScalar(value))
        } else {
            Err(ParseScalarError(token.into()))
        }
    }
}

/// Compares two cycle means `w1/k1` and `w2/k2` without dividing.
pub fn cmp_means<S: Scalar>(w1: &S, k1: u32, w2: &S, k2: u32) -> Ordering {
    let left = w1.pow(k2);
    let right = w2.pow(k1);
    if left.approx_eq(&right) {
        Ordering::Equal
    } else if left < right {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> TropScalar {
        text.parse().unwrap()
    }

    #[test]
    fn bottom_is_additive_identity_and_absorbing() {
        let x = s("3/2");
        assert_eq!(TropScalar::bottom().oplus(&x), x);
        assert_eq!(TropScalar::bottom().otimes(&x), TropScalar::Bottom);
        assert_eq!(TropScalar::unit().otimes(&x), x);
    }

    #[test]
    fn order_puts_bottom_first() {
        assert!(TropScalar::Bottom < s("-1000000"));
        assert!(s("-1/3") < s("0"));
    }

    #[test]
    fn parses_decimals_and_fractions() {
        assert_eq!(s("-1.25"), TropScalar::ratio(-5, 4));
        assert_eq!(s("6/4"), TropScalar::ratio(3, 2));
        assert_eq!(s(".5"), TropScalar::ratio(1, 2));
        assert_eq!(s("-inf"), TropScalar::Bottom);
        assert!("inf".parse::<TropScalar>().is_err());
        assert!("1/0".parse::<TropScalar>().is_err());
        assert!("1.2.3".parse::<TropScalar>().is_err());
        assert!("-".parse::<TropScalar>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["-inf", "0", "-7", "3/4", "-1/6"] {
            assert_eq!(s(text).to_string(), text);
        }
    }

    #[test]
    fn powers_and_roots() {
        assert_eq!(s("3/2").pow(4), s("6"));
        assert_eq!(s("6").root(4), s("3/2"));
        assert_eq!(TropScalar::Bottom.pow(0), TropScalar::unit());
    }

    #[test]
    fn mean_comparison_without_division() {
        assert_eq!(cmp_means(&s("3"), 2, &s("4"), 3), Ordering::Greater);
        assert_eq!(cmp_means(&s("2"), 2, &s("3"), 3), Ordering::Equal);
        assert_eq!(
            cmp_means(&TropScalar::Bottom, 1, &s("-5"), 1),
            Ordering::Less
        );
    }

    #[test]
    fn float_equality_uses_scoped_epsilon() {
        let a = FloatScalar(1.0);
        let b = FloatScalar(1.0 + 1e-7);
        assert!(!a.approx_eq(&b));
        with_epsilon(1e-6, || assert!(a.approx_eq(&b)));
        assert!(!a.approx_eq(&b));
        assert!(FloatScalar::bottom().approx_eq(&FloatScalar::bottom()));
    }
}
