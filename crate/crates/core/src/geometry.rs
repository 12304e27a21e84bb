//! Calabi-Yau complete intersections in projective space and their
//! characteristic numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::Rat;

/// A complete intersection `X` of hypersurfaces of degrees `l_1, ..., l_r`
/// in `P^{n-1}` with `sum l_a = n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CIModel {
    n: usize,
    degrees: Vec<usize>,
}

impl CIModel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn r(&self) -> usize {
        self.degrees.len()
    }

    /// Complex dimension `n - 1 - r`.
    pub fn dim(&self) -> usize {
        self.n - 1 - self.r()
    }

    /// `deg X = prod l_a`.
    pub fn deg(&self) -> BigInt {
        self.degrees.iter().map(|&l| BigInt::from(l)).product()
    }

    /// The conifold constant `prod l_a^{l_a}`.
    pub fn conifold(&self) -> Rat {
        let c: BigInt = self
            .degrees
            .iter()
            .map(|&l| num_traits::pow(BigInt::from(l), l))
            .product();
        Rat::from_integer(c)
    }

    /// `sum_a 1/l_a`.
    pub fn inverse_degree_sum(&self) -> Rat {
        self.degrees
            .iter()
            .map(|&l| Rat::new(BigInt::one(), BigInt::from(l)))
            .sum()
    }

    /// Short label such as `X_{3,3} in P^5`.
    pub fn label(&self) -> String {
        let ds: Vec<String> = self.degrees.iter().map(|l| l.to_string()).collect();
        format!("X_{{{}}} in P^{}", ds.join(","), self.n - 1)
    }
}

pub fn validate_model(n: usize, degrees: &[usize]) -> Result<CIModel> {
    if degrees.is_empty() {
        return Err(Error::InvalidModel(
            "at least one degree is required".into(),
        ));
    }
    if let Some(l) = degrees.iter().find(|&&l| l < 2) {
        return Err(Error::InvalidModel(format!(
            "degree {l} is below 2; linear sections reduce the ambient space"
        )));
    }
    let total: usize = degrees.iter().sum();
    if total != n {
        return Err(Error::InvalidModel(format!(
            "degrees sum to {total}, not n = {n}"
        )));
    }
    if n < degrees.len() + 2 {
        return Err(Error::InvalidModel(format!(
            "dimension n - 1 - r = {} is below 1",
            n as i64 - 1 - degrees.len() as i64
        )));
    }
    Ok(CIModel {
        n,
        degrees: degrees.to_vec(),
    })
}

/// Characteristic numbers of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    /// Topological Euler characteristic `int_X c_top(TX)`.
    pub chi_top: Rat,
    /// `int_X H c_{dim X - 1}(TX)`.
    pub lin_c: Rat,
    pub deg_x: BigInt,
}

/// Coefficients of `c(TX) = (1+H)^n / prod (1 + l_a H)` up to `H^dim`.
fn total_chern(m: &CIModel) -> Vec<BigInt> {
    let len = m.dim() + 1;
    let mut c: Vec<BigInt> = (0..len)
        .map(|k| num_integer::binomial(BigInt::from(m.n()), BigInt::from(k)))
        .collect();
    // Division by 1 + l H is the recurrence c_k -= l c_{k-1}.
    for &l in m.degrees() {
        let l = BigInt::from(l);
        for k in 1..len {
            let prev = c[k - 1].clone();
            c[k] -= &l * prev;
        }
    }
    c
}

pub fn chern_data(m: &CIModel) -> ChernData {
    let c = total_chern(m);
    let deg = m.deg();
    let chi = &c[m.dim()] * &deg;
    let lin = &c[m.dim() - 1] * &deg;
    let chern = ChernData {
        chi_top: Rat::from_integer(chi),
        lin_c: Rat::from_integer(lin),
        deg_x: deg,
    };
    assert!(chern.chi_top.is_integer() && chern.lin_c.is_integer());
    assert!(chern.deg_x > BigInt::zero());
    chern
}
