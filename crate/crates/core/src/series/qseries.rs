use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{Rat, Ring};
use crate::error::{Error, Result};

/// Power series `sum_{d=0}^{order} c_d q^d + O(q^{order+1})`.
#[derive(Clone, PartialEq)]
pub struct QSeries<C> {
    coeffs: Vec<C>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Binary arithmetic; the result is truncated to the smaller order.
pub fn qs_arith<C: Ring>(a: &QSeries<C>, b: &QSeries<C>, op: ArithOp) -> Result<QSeries<C>> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    }
}

impl<C: Ring> QSeries<C> {
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series holds at least q^0");
        Self { coeffs }
    }

    /// The constant `c` to the given order.
    pub fn constant(c: C, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> &C {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Ring::vanishes)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D + Sync + Send) -> QSeries<D> {
        QSeries {
            coeffs: self.coeffs.par_iter().map(f).collect(),
        }
    }

    pub fn try_map<D: Ring>(&self, f: impl Fn(&C) -> Result<D>) -> Result<QSeries<D>> {
        Ok(QSeries {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Coefficient-wise map that also sees the q-degree.
    pub fn map_indexed<D: Ring>(&self, f: impl Fn(usize, &C) -> D + Sync + Send) -> QSeries<D> {
        QSeries {
            coeffs: self
                .coeffs
                .par_iter()
                .enumerate()
                .map(|(d, c)| f(d, c))
                .collect(),
        }
    }

    fn common_order(&self, other: &Self) -> Result<usize> {
        let (a0, b0) = (&self.coeffs[0], &other.coeffs[0]);
        let ok = self.coeffs.iter().all(|c| c.compatible(b0))
            && other.coeffs.iter().all(|c| c.compatible(a0));
        if !ok {
            return Err(Error::RingMismatch(
                "q-series coefficients belong to different rings".into(),
            ));
        }
        Ok(self.order().min(other.order()))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Result<Self> {
        let order = self.common_order(other)?;
        Ok(Self {
            coeffs: (0..=order)
                .map(|d| f(&self.coeffs[d], &other.coeffs[d]))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Ring::plus)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Ring::minus)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.common_order(other)?;
        Ok(Self {
            coeffs: C::convolve(&self.coeffs, &other.coeffs, order + 1),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.scaled(s)).collect(),
        }
    }

    /// Product with a scalar series, truncated to the smaller order.
    pub fn mul_scalar_series(&self, s: &QSeries<Rat>) -> Self {
        let order = self.order().min(s.order());
        Self {
            coeffs: C::convolve_scalar(&self.coeffs, &s.coeffs, order + 1),
        }
    }

    /// Multiplication by `q^k`, keeping the order.
    pub fn shift_q(&self, k: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        let coeffs = (0..=self.order())
            .map(|d| {
                if d >= k {
                    self.coeffs[d - k].clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        Self { coeffs }
    }

    /// The operator `q d/dq`.
    pub fn qddq(&self) -> Self {
        self.map_indexed(|d, c| c.scaled(&Rat::from_integer(d.into())))
    }

    /// Inverse of `q d/dq` on series without constant term.
    pub fn int_dlog(&self) -> Result<Self> {
        if !self.coeffs[0].vanishes() {
            return Err(Error::Precondition(
                "q-integration needs a zero constant term".into(),
            ));
        }
        Ok(self.map_indexed(|d, c| {
            if d == 0 {
                c.clone()
            } else {
                c.scaled(&Rat::new(1.into(), d.into()))
            }
        }))
    }

    /// Multiplicative inverse; the constant term must be a nonzero scalar.
    pub fn inv(&self) -> Result<Self> {
        let a0 = self.coeffs[0]
            .as_scalar()
            .filter(|s| !s.is_zero())
            .ok_or(Error::NonUnit { what: "inverse" })?;
        let a0_inv = a0.recip();
        let neg_inv = -&a0_inv;
        let mut out = vec![self.coeffs[0].one_like().scaled(&a0_inv)];
        for d in 1..=self.order() {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=d {
                if !self.coeffs[k].vanishes() {
                    acc.add_assign_ref(&self.coeffs[k].times(&out[d - k]));
                }
            }
            out.push(acc.scaled(&neg_inv));
        }
        Ok(Self { coeffs: out })
    }

    /// `exp` of a series with zero constant term, via `d E_d = sum k A_k E_{d-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].vanishes() {
            return Err(Error::Precondition("exp needs a zero constant term".into()));
        }
        let mut out = vec![self.coeffs[0].one_like()];
        for d in 1..=self.order() {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=d {
                if !self.coeffs[k].vanishes() {
                    let term = self.coeffs[k].times(&out[d - k]);
                    acc.add_assign_ref(&term.scaled(&Rat::from_integer(k.into())));
                }
            }
            out.push(acc.scaled(&Rat::new(1.into(), d.into())));
        }
        Ok(Self { coeffs: out })
    }

    /// `log` of a series with constant term one.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != self.coeffs[0].one_like() {
            return Err(Error::Precondition("log needs constant term 1".into()));
        }
        let mut out = vec![self.coeffs[0].zero_like()];
        for d in 1..=self.order() {
            let mut acc = self.coeffs[0].zero_like();
            for (k, lk) in out.iter().enumerate().skip(1) {
                if !lk.vanishes() {
                    let term = lk.times(&self.coeffs[d - k]);
                    acc.add_assign_ref(&term.scaled(&Rat::from_integer(k.into())));
                }
            }
            let ld = self.coeffs[d].minus(&acc.scaled(&Rat::new(1.into(), d.into())));
            out.push(ld);
        }
        Ok(Self { coeffs: out })
    }

    /// `a^e` for constant term one, via the recurrence
    /// `d P_d = sum_{k=1}^d ((e + 1) k - d) A_k P_{d-k}`.
    pub fn pow_rat(&self, e: &Rat) -> Result<Self> {
        if self.coeffs[0] != self.coeffs[0].one_like() {
            return Err(Error::NonUnit {
                what: "rational power",
            });
        }
        let e1 = e + Rat::one();
        let mut out = vec![self.coeffs[0].one_like()];
        for d in 1..=self.order() {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=d {
                if self.coeffs[k].vanishes() {
                    continue;
                }
                let w = &e1 * Rat::from_integer(k.into()) - Rat::from_integer(d.into());
                if !w.is_zero() {
                    acc.add_assign_ref(&self.coeffs[k].times(&out[d - k]).scaled(&w));
                }
            }
            out.push(acc.scaled(&Rat::new(1.into(), d.into())));
        }
        Ok(Self { coeffs: out })
    }
}

impl QSeries<Rat> {
    pub fn zero(order: usize) -> Self {
        Self::constant(Rat::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    /// The series `q` itself.
    pub fn q(order: usize) -> Self {
        Self::one(order).shift_q(1)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self::from_coeffs(
            values
                .iter()
                .map(|&v| Rat::from_integer(v.into()))
                .collect(),
        )
    }

    /// `1 - c q` to the given order.
    pub fn one_minus(c: Rat, order: usize) -> Self {
        let mut s = Self::one(order);
        if order >= 1 {
            s.coeffs[1] = -c;
        }
        s
    }

    /// Composition `self(inner(q))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Precondition(
                "inner series of a composition needs a zero constant term".into(),
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.vanishes() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl<C: fmt::Debug> fmt::Debug for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
