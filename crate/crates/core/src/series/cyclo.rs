use std::fmt;

use num_traits::{One, Zero};

use super::{Rat, Ring};
use crate::error::{Error, Result};

/// Element `a_0 + a_1 H + ... + a_{n-1} H^{n-1}` of `Q[H]/(H^n - 1)`.
///
/// This is the equivariant parameter ring after the torus weights are
/// specialized to the `n`-th roots of unity. It has zero divisors, so no
/// general division is offered.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElem {
    comps: Vec<Rat>,
}

impl CycloElem {
    pub fn new(comps: Vec<Rat>) -> Self {
        assert!(!comps.is_empty(), "cyclotomic dimension must be positive");
        Self { comps }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Rat::zero(); n])
    }

    pub fn scalar(n: usize, s: Rat) -> Self {
        let mut e = Self::zero(n);
        e.comps[0] = s;
        e
    }

    /// `s * H^k`, with `k` reduced modulo `n`.
    pub fn h_pow(n: usize, k: usize, s: Rat) -> Self {
        let mut e = Self::zero(n);
        e.comps[k % n] = s;
        e
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Rat] {
        &self.comps
    }

    /// Evaluation at `H = 1`; a ring homomorphism since `1^n = 1`.
    pub fn eval_h1(&self) -> Rat {
        self.comps.iter().sum()
    }

    /// Multiplication by `H^k`, a cyclic shift of the components.
    pub fn mul_h(&self, k: usize) -> Self {
        let n = self.dim();
        let mut comps = vec![Rat::zero(); n];
        for (i, c) in self.comps.iter().enumerate() {
            comps[(i + k) % n] = c.clone();
        }
        Self { comps }
    }

    /// Returns `s` when `self = s * H^k` exactly.
    pub fn multiple_of_h_pow(&self, k: usize) -> Option<Rat> {
        let k = k % self.dim();
        self.comps
            .iter()
            .enumerate()
            .all(|(i, c)| i == k || c.is_zero())
            .then(|| self.comps[k].clone())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::RingMismatch(format!(
                "Q[H]/(H^{} - 1) vs Q[H]/(H^{} - 1)",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.plus(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.minus(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.times(other))
    }
}

impl Ring for CycloElem {
    fn zero_like(&self) -> Self {
        Self::zero(self.dim())
    }
    fn one_like(&self) -> Self {
        Self::scalar(self.dim(), Rat::one())
    }
    fn vanishes(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }
    fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        Self::new(
            self.comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
    fn minus(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        Self::new(
            self.comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
    fn times(&self, rhs: &Self) -> Self {
        let n = self.dim();
        assert_eq!(n, rhs.dim());
        let mut comps = vec![Rat::zero(); n];
        for (i, a) in self.comps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.comps.iter().enumerate() {
                if !b.is_zero() {
                    comps[(i + j) % n] += a * b;
                }
            }
        }
        Self { comps }
    }
    fn negated(&self) -> Self {
        Self::new(self.comps.iter().map(|a| -a).collect())
    }
    fn scaled(&self, s: &Rat) -> Self {
        Self::new(self.comps.iter().map(|a| a * s).collect())
    }
    fn as_scalar(&self) -> Option<Rat> {
        self.multiple_of_h_pow(0)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.dim() == other.dim()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.comps.iter_mut().zip(&rhs.comps) {
            *a += b;
        }
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})H"),
                _ => format!("({c})H^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}
