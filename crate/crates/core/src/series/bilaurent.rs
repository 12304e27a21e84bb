use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{Rat, Ring, ZLaurent};
use crate::error::{Error, Result};

/// Finitely supported Laurent polynomial in two variables `x, y`.
///
/// Keys are `(i, j)` for the monomial `x^i y^j`; zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiLaurent {
    terms: BTreeMap<(i32, i32), Rat>,
}

impl BiLaurent {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(i: i32, j: i32, c: Rat) -> Self {
        let mut out = Self::new();
        out.add_term(i, j, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i32, i32), Rat)>) -> Self {
        let mut out = Self::new();
        for ((i, j), c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    /// `f(x) g(y)` for the coefficients stored in the two windows.
    pub fn outer(fx: &ZLaurent<Rat>, gy: &ZLaurent<Rat>) -> Self {
        let mut out = Self::new();
        for (a, cx) in fx.coeffs().iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (b, cy) in gy.coeffs().iter().enumerate() {
                if !cy.is_zero() {
                    out.add_term(fx.e_min() + a as i32, gy.e_min() + b as i32, cx * cy);
                }
            }
        }
        out
    }

    pub fn add_term(&mut self, i: i32, j: i32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: i32, j: i32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn retain(&self, keep: impl Fn(i32, i32) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| keep(*i, *j))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Substitutes `y = c x`, giving a Laurent polynomial in `x`.
    pub fn subst_diag(&self, c: &Rat) -> ZLaurent<Rat> {
        let mut acc: BTreeMap<i32, Rat> = BTreeMap::new();
        for (&(i, j), v) in &self.terms {
            let w = if j >= 0 {
                num_traits::pow(c.clone(), j as usize)
            } else {
                num_traits::pow(c.recip(), (-j) as usize)
            };
            *acc.entry(i + j).or_insert_with(Rat::zero) += v * w;
        }
        acc.retain(|_, v| !v.is_zero());
        match (acc.keys().next(), acc.keys().next_back()) {
            (Some(&lo), Some(&hi)) => {
                let coeffs = (lo..=hi)
                    .map(|e| acc.get(&e).cloned().unwrap_or_else(Rat::zero))
                    .collect();
                ZLaurent::exact(lo, coeffs)
            }
            _ => ZLaurent::monomial(0, Rat::zero()),
        }
    }

    /// Exact quotient by `x + y`. The argument must vanish identically on
    /// the line `y = -x`.
    pub fn div_x_plus_y(&self) -> Result<Self> {
        let on_line = self.subst_diag(&-Rat::one());
        if !on_line.vanishes() {
            return Err(Error::NotDivisible(format!(
                "restriction to y = -x is {on_line}"
            )));
        }
        // Each homogeneous component f_k = sum_a c_a x^a y^(k-a) equals
        // (x + y) sum_a g_a x^a y^(k-1-a) with c_a = g_(a-1) + g_a.
        let mut by_degree: BTreeMap<i32, BTreeMap<i32, &Rat>> = BTreeMap::new();
        for ((i, j), v) in &self.terms {
            by_degree.entry(i + j).or_default().insert(*i, v);
        }
        let mut out = Self::new();
        for (k, comp) in by_degree {
            let lo = *comp.keys().next().unwrap();
            let hi = *comp.keys().next_back().unwrap();
            let mut prev = Rat::zero();
            for a in lo..=hi {
                let c = comp.get(&a).map(|v| (*v).clone()).unwrap_or_else(Rat::zero);
                let g = c - &prev;
                if a == hi {
                    if !g.is_zero() {
                        return Err(Error::NotDivisible(format!(
                            "nonzero remainder in total degree {k}"
                        )));
                    }
                } else {
                    out.add_term(a, k - 1 - a, g.clone());
                }
                prev = g;
            }
        }
        Ok(out)
    }
}

impl Ring for BiLaurent {
    fn zero_like(&self) -> Self {
        Self::new()
    }
    fn one_like(&self) -> Self {
        Self::constant(Rat::one())
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::new();
        for ((i, j), a) in &self.terms {
            for ((k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
    fn negated(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
    fn scaled(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::new();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * s)).collect(),
        }
    }
    fn as_scalar(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for ((i, j), v) in &rhs.terms {
            self.add_term(*i, *j, v.clone());
        }
    }
}

impl fmt::Debug for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), v)| format!("({v})x^{i}y^{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
