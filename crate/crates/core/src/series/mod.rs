//! Exact truncated series and the coefficient rings they live over.
//!
//! [`QSeries`] is the universal carrier: a power series in the Novikov
//! variable `q` truncated at a fixed order. Its coefficients implement
//! [`Ring`], which covers plain rationals, the cyclotomic quotient
//! `Q[H]/(H^n - 1)` ([`CycloElem`]), windowed Laurent data in `z` or `w`
//! ([`ZLaurent`]) and finitely supported Laurent polynomials in `x, y`
//! ([`BiLaurent`]).

mod bilaurent;
mod cyclo;
mod laurent;
mod qseries;
mod ratfn;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use bilaurent::BiLaurent;
pub use cyclo::CycloElem;
pub use laurent::{Truncation, ZLaurent};
pub use qseries::{qs_arith, ArithOp, QSeries};
pub(crate) use ratfn::series_div;
pub use ratfn::{ratfn_expand, ExpandMode};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Shorthand for the rational `num / den`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for the integer `v` as a rational.
pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Output lengths below this are convolved on the calling thread.
const PAR_THRESHOLD: usize = 12;

/// Commutative coefficient ring with a `Q`-algebra structure.
///
/// Elements carry their own shape (cyclotomic dimension, Laurent window),
/// so zero and one are produced from an existing element.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, s: &Rat) -> Self;

    /// `Some(s)` when the element equals `s * 1`.
    fn as_scalar(&self) -> Option<Rat>;

    /// Whether two elements belong to the same ring (dimension, window
    /// direction).
    fn compatible(&self, _other: &Self) -> bool {
        true
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }

    /// Truncated Cauchy product: the first `len` coefficients of `a * b`.
    fn convolve(a: &[Self], b: &[Self], len: usize) -> Vec<Self> {
        let zero = a[0].zero_like();
        let term = |k: usize| {
            let mut acc = zero.clone();
            for i in 0..=k.min(a.len() - 1) {
                if k - i < b.len() && !a[i].vanishes() && !b[k - i].vanishes() {
                    acc.add_assign_ref(&a[i].times(&b[k - i]));
                }
            }
            acc
        };
        if len >= PAR_THRESHOLD {
            (0..len).into_par_iter().map(term).collect()
        } else {
            (0..len).map(term).collect()
        }
    }

    /// Truncated product with a scalar series: the first `len`
    /// coefficients of `a * s`.
    fn convolve_scalar(a: &[Self], s: &[Rat], len: usize) -> Vec<Self> {
        let zero = a[0].zero_like();
        let term = |k: usize| {
            let mut acc = zero.clone();
            for i in 0..=k.min(a.len() - 1) {
                if k - i < s.len() && !s[k - i].vanishes() && !a[i].vanishes() {
                    acc.add_assign_ref(&a[i].scaled(&s[k - i]));
                }
            }
            acc
        };
        if len >= PAR_THRESHOLD {
            (0..len).into_par_iter().map(term).collect()
        } else {
            (0..len).map(term).collect()
        }
    }
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, s: &Rat) -> Self {
        self * s
    }
    fn as_scalar(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn convolve(a: &[Self], b: &[Self], len: usize) -> Vec<Self> {
        convolve_rat(a, b, len)
    }

    fn convolve_scalar(a: &[Self], s: &[Rat], len: usize) -> Vec<Self> {
        convolve_rat(a, s, len)
    }
}

/// Brings a slice of rationals to a common denominator.
fn common_denominator(xs: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let den = xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums = xs.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (nums, den)
}

/// The convolution kernel for scalar series. Both inputs are lifted to
/// integer vectors over a common denominator so the inner loop is pure
/// big-integer multiply-add; each output is reduced once at the end.
fn convolve_rat(a: &[Rat], b: &[Rat], len: usize) -> Vec<Rat> {
    let (an, ad) = common_denominator(a);
    let (bn, bd) = common_denominator(b);
    let den = ad * bd;
    let term = |k: usize| {
        let mut acc = BigInt::zero();
        let lo = k.saturating_sub(bn.len().saturating_sub(1));
        for i in lo..=k.min(an.len().saturating_sub(1)) {
            let (x, y) = (&an[i], &bn[k - i]);
            if !x.is_zero() && !y.is_zero() {
                acc += x * y;
            }
        }
        Rat::new(acc, den.clone())
    };
    if len >= PAR_THRESHOLD {
        (0..len).into_par_iter().map(term).collect()
    } else {
        (0..len).map(term).collect()
    }
}
