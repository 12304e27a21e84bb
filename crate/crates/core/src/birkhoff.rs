//! Birkhoff normalization of the specialized I-function.
//!
//! Starting from `B_0 = I`, each step divides by the scalar series `C_k`
//! read off the `z^0` part of `B_k` (which must be `C_k H^k`) and applies
//! `H + z q d/dq`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ifunction::IUnderline;
use crate::series::{CycloElem, QSeries, Rat, Ring, Truncation, ZLaurent};

pub type ZSeries = QSeries<ZLaurent<CycloElem>>;

/// The normalization constants `C_0, ..., C_{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BirkhoffData {
    pub c: Vec<QSeries<Rat>>,
    /// Per step, the number of `q`-degrees whose `z^0` part was not a
    /// multiple of `H^k`. Any nonzero entry aborts the computation, so a
    /// returned record is all zeros.
    pub proportionality_residuals: Vec<usize>,
}

impl BirkhoffData {
    pub fn order(&self) -> usize {
        self.c[0].order()
    }
}

/// `(H + z q d/dq)` applied to every `q^d` coefficient.
pub(crate) fn apply_d(f: &ZSeries) -> ZSeries {
    f.map_indexed(|d, c| {
        let h = c.map(|x| x.mul_h(1));
        let zq = c.shift(1).map(|x| x.scaled(&Rat::from_integer(d.into())));
        h.plus(&zq)
    })
}

/// Drops the (vanishing) positive `z` powers of an expansion at infinity.
fn drop_positive(c: &ZLaurent<CycloElem>) -> Option<ZLaurent<CycloElem>> {
    if c.e_max() <= 0 {
        return Some(c.clone());
    }
    let keep = (-c.e_min() + 1) as usize;
    if c.coeffs()[keep..].iter().any(|x| !x.vanishes()) {
        return None;
    }
    Some(ZLaurent::new(
        c.e_min(),
        c.coeffs()[..keep].to_vec(),
        Truncation::Below,
    ))
}

fn strip_positive(f: &ZSeries) -> Result<ZSeries> {
    f.try_map(|c| {
        drop_positive(c).ok_or_else(|| {
            Error::Precondition("positive powers of z survived the normalization".into())
        })
    })
}

/// Scalar series `s` with `z^0`-part of `b` equal to `s H^k`.
fn proportional_part(b: &ZSeries, k: usize) -> Result<(QSeries<Rat>, usize)> {
    let mut out = Vec::with_capacity(b.order() + 1);
    let mut bad = 0;
    let mut first_bad = None;
    for d in 0..=b.order() {
        let z0 = b.coeff(d).get(0)?;
        match z0.multiple_of_h_pow(k) {
            Some(s) => out.push(s),
            None => {
                bad += 1;
                first_bad.get_or_insert(d);
                out.push(Rat::zero());
            }
        }
    }
    if let Some(q_degree) = first_bad {
        return Err(Error::Proportionality { k, q_degree });
    }
    Ok((QSeries::from_coeffs(out), bad))
}

pub fn compute_ck(i: &IUnderline) -> Result<BirkhoffData> {
    let n = i.model.n();
    if i.depth() < n + 1 {
        return Err(Error::WindowTooSmall(format!(
            "Birkhoff recursion needs {} powers of 1/z, have {}",
            n + 1,
            i.depth()
        )));
    }
    let mut b = i.series.clone();
    let mut c = Vec::with_capacity(n);
    let mut residuals = Vec::with_capacity(n);
    for k in 0..n {
        let (ck, bad) = proportional_part(&b, k)?;
        residuals.push(bad);
        if k + 1 < n {
            b = strip_positive(&apply_d(&b.mul_scalar_series(&ck.inv()?)))?;
        }
        c.push(ck);
    }
    Ok(BirkhoffData {
        c,
        proportionality_residuals: residuals,
    })
}

/// One application of the normalized operator: returns
/// `(H + z q d/dq) F / s` together with the normalizer `s`, the value of
/// the `z^0` coefficient at `H = 1`.
pub fn frak_b_step(f: &ZSeries) -> Result<(ZSeries, QSeries<Rat>)> {
    let df = strip_positive(&apply_d(f))?;
    let s = df.try_map(|c| Ok(c.get(0)?.eval_h1()))?;
    if s.coeff(0).is_zero() {
        return Err(Error::VanishingNormalizer);
    }
    Ok((df.mul_scalar_series(&s.inv()?), s))
}

pub fn frak_b(f: &ZSeries) -> Result<ZSeries> {
    Ok(frak_b_step(f)?.0)
}

/// `I / I_0` with `I_0` the `z^0` part of `I`.
pub fn normalized_i(i: &IUnderline) -> Result<ZSeries> {
    let (i0, _) = proportional_part(&i.series, 0)?;
    Ok(i.series.mul_scalar_series(&i0.inv()?))
}

/// The iterate `B^k(I / I_0)`, of shape `H^k + O(1/z)`.
pub fn s_series(i: &IUnderline, k: usize) -> Result<ZSeries> {
    let n = i.model.n();
    if k >= n {
        return Err(Error::Precondition(format!("k = {k} outside 0..{n}")));
    }
    let mut f = normalized_i(i)?;
    for _ in 0..k {
        f = frak_b(&f)?;
    }
    Ok(f)
}
