use std::fmt;

use super::Ring;
use crate::error::{Error, Result};

/// Which side of the window is unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truncation {
    /// Finite Laurent polynomial; everything outside the window is zero.
    Exact,
    /// Expansion at infinity (in `1/z`): exponents below the window are
    /// unknown, exponents above it are zero.
    Below,
    /// Expansion at zero: exponents above the window are unknown,
    /// exponents below it are zero.
    Above,
}

/// Laurent data in one variable, exact on the window `[e_min, e_max]`.
///
/// Arithmetic tracks which exponents remain determined: adding a series
/// known down to `z^-5` to one known down to `z^-3` gives a result known
/// down to `z^-3`, and multiplying by `z` moves the window up by one.
#[derive(Clone, PartialEq)]
pub struct ZLaurent<R> {
    e_min: i32,
    coeffs: Vec<R>,
    trunc: Truncation,
}

impl<R: Ring> ZLaurent<R> {
    /// Window starting at `e_min`; `coeffs[i]` is the coefficient of
    /// exponent `e_min + i`.
    pub fn new(e_min: i32, coeffs: Vec<R>, trunc: Truncation) -> Self {
        assert!(!coeffs.is_empty(), "window must hold at least one exponent");
        Self {
            e_min,
            coeffs,
            trunc,
        }
    }

    pub fn exact(e_min: i32, coeffs: Vec<R>) -> Self {
        Self::new(e_min, coeffs, Truncation::Exact)
    }

    pub fn monomial(e: i32, c: R) -> Self {
        Self::exact(e, vec![c])
    }

    pub fn e_min(&self) -> i32 {
        self.e_min
    }

    pub fn e_max(&self) -> i32 {
        self.e_min + self.coeffs.len() as i32 - 1
    }

    pub fn window(&self) -> (i32, i32) {
        (self.e_min, self.e_max())
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    fn zero(&self) -> R {
        self.coeffs[0].zero_like()
    }

    pub fn is_known(&self, e: i32) -> bool {
        match self.trunc {
            Truncation::Exact => true,
            Truncation::Below => e >= self.e_min,
            Truncation::Above => e <= self.e_max(),
        }
    }

    /// Coefficient of `z^e`; an error when `e` lies in the unknown region.
    pub fn get(&self, e: i32) -> Result<R> {
        if !self.is_known(e) {
            return Err(Error::WindowTooSmall(format!(
                "exponent {e} outside determined window [{}, {}] ({:?})",
                self.e_min,
                self.e_max(),
                self.trunc
            )));
        }
        Ok(self.get_or_zero(e))
    }

    fn get_or_zero(&self, e: i32) -> R {
        if e < self.e_min || e > self.e_max() {
            self.zero()
        } else {
            self.coeffs[(e - self.e_min) as usize].clone()
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            e_min: self.e_min + k,
            coeffs: self.coeffs.clone(),
            trunc: self.trunc,
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> ZLaurent<S> {
        ZLaurent {
            e_min: self.e_min,
            coeffs: self.coeffs.iter().map(f).collect(),
            trunc: self.trunc,
        }
    }

    /// Restriction to exponents `<= e_max`, marking the rest unknown.
    pub fn truncate_above(&self, e_max: i32) -> Result<Self> {
        if self.trunc == Truncation::Below {
            return Err(Error::RingMismatch(
                "cannot truncate an expansion at infinity from above".into(),
            ));
        }
        if e_max < self.e_min {
            return Err(Error::WindowTooSmall(format!(
                "requested e_max {e_max} below e_min {}",
                self.e_min
            )));
        }
        let keep = ((e_max - self.e_min + 1) as usize).min(self.coeffs.len());
        let trunc = if e_max >= self.e_max() && self.trunc == Truncation::Exact {
            Truncation::Exact
        } else {
            Truncation::Above
        };
        Ok(Self {
            e_min: self.e_min,
            coeffs: self.coeffs[..keep].to_vec(),
            trunc,
        })
    }

    /// Restriction to exponents `>= e_min`, marking the rest unknown.
    pub fn truncate_below(&self, e_min: i32) -> Result<Self> {
        if self.trunc == Truncation::Above {
            return Err(Error::RingMismatch(
                "cannot truncate an expansion at zero from below".into(),
            ));
        }
        if e_min > self.e_max() {
            return Err(Error::WindowTooSmall(format!(
                "requested e_min {e_min} above e_max {}",
                self.e_max()
            )));
        }
        let drop = (e_min - self.e_min).max(0) as usize;
        let trunc = if e_min <= self.e_min && self.trunc == Truncation::Exact {
            Truncation::Exact
        } else {
            Truncation::Below
        };
        Ok(Self {
            e_min: self.e_min + drop as i32,
            coeffs: self.coeffs[drop..].to_vec(),
            trunc,
        })
    }

    /// True when both agree on every exponent determined in both.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let lo = self.e_min.min(other.e_min);
        let hi = self.e_max().max(other.e_max());
        (lo..=hi)
            .filter(|&e| self.is_known(e) && other.is_known(e))
            .all(|e| self.get_or_zero(e) == other.get_or_zero(e))
    }

    fn joint_truncation(&self, other: &Self) -> Result<Truncation> {
        use Truncation::*;
        match (self.trunc, other.trunc) {
            (Below, Above) | (Above, Below) => Err(Error::RingMismatch(
                "mixing an expansion at infinity with an expansion at zero".into(),
            )),
            (Exact, t) | (t, Exact) => Ok(t),
            (t, _) => Ok(t),
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        let trunc = self.joint_truncation(other)?;
        let mut lo = self.e_min.min(other.e_min);
        let mut hi = self.e_max().max(other.e_max());
        for s in [self, other] {
            match (trunc, s.trunc) {
                (Truncation::Below, Truncation::Below) => lo = lo.max(s.e_min),
                (Truncation::Above, Truncation::Above) => hi = hi.min(s.e_max()),
                _ => {}
            }
        }
        let coeffs = (lo..=hi)
            .map(|e| f(&self.get_or_zero(e), &other.get_or_zero(e)))
            .collect();
        Ok(Self {
            e_min: lo,
            coeffs,
            trunc,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.plus(b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.minus(b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let trunc = self.joint_truncation(other)?;
        let (la, ha) = self.window();
        let (lb, hb) = other.window();
        let (mut lo, mut hi) = (la + lb, ha + hb);
        if trunc == Truncation::Below {
            if self.trunc == Truncation::Below {
                lo = lo.max(la + hb);
            }
            if other.trunc == Truncation::Below {
                lo = lo.max(lb + ha);
            }
        }
        if trunc == Truncation::Above {
            if self.trunc == Truncation::Above {
                hi = hi.min(ha + lb);
            }
            if other.trunc == Truncation::Above {
                hi = hi.min(hb + la);
            }
        }
        let mut coeffs = vec![self.zero(); (hi - lo + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.vanishes() {
                continue;
            }
            let ea = la + i as i32;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ea + lb + j as i32;
                if e < lo || e > hi || b.vanishes() {
                    continue;
                }
                coeffs[(e - lo) as usize].add_assign_ref(&a.times(b));
            }
        }
        Ok(Self {
            e_min: lo,
            coeffs,
            trunc,
        })
    }
}

impl<R: Ring> Ring for ZLaurent<R> {
    fn zero_like(&self) -> Self {
        Self::monomial(0, self.zero())
    }
    fn one_like(&self) -> Self {
        Self::monomial(0, self.coeffs[0].one_like())
    }
    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Ring::vanishes)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("incompatible Laurent windows")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("incompatible Laurent windows")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("incompatible Laurent windows")
    }
    fn negated(&self) -> Self {
        self.map(Ring::negated)
    }
    fn scaled(&self, s: &super::Rat) -> Self {
        self.map(|c| c.scaled(s))
    }
    fn as_scalar(&self) -> Option<super::Rat> {
        if self.trunc != Truncation::Exact {
            return None;
        }
        let (lo, hi) = self.window();
        if (lo..=hi).any(|e| e != 0 && !self.get_or_zero(e).vanishes()) {
            return None;
        }
        self.get_or_zero(0).as_scalar()
    }
    fn compatible(&self, other: &Self) -> bool {
        self.joint_truncation(other).is_ok() && self.coeffs[0].compatible(&other.coeffs[0])
    }
}

impl<R: Ring + fmt::Display> fmt::Display for ZLaurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.vanishes() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})z^{}", self.e_min + i as i32)?;
        }
        if first {
            write!(f, "0")?;
        }
        match self.trunc {
            Truncation::Exact => Ok(()),
            Truncation::Below => write!(f, " + O(z^{})", self.e_min - 1),
            Truncation::Above => write!(f, " + O(z^{})", self.e_max() + 1),
        }
    }
}

impl<R: Ring> fmt::Debug for ZLaurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ZLaurent")
            .field("window", &self.window())
            .field("trunc", &self.trunc)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}
