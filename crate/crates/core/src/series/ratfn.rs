use num_traits::Zero;

use super::{Rat, Ring, Truncation, ZLaurent};
use crate::error::{Error, Result};

/// Where a rational function is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpandMode {
    /// Expansion in `1/z` down to exponent `e_min`.
    InvZ { e_min: i32 },
    /// Expansion about `w = 0` up to exponent `e_max`, the denominator
    /// vanishing to exactly `order` there.
    PoleW { order: usize, e_max: i32 },
}

/// First `prec` coefficients of `a / b`, where `b[0]` is an invertible
/// scalar.
pub(crate) fn series_div<R: Ring>(a: &[R], b: &[R], prec: usize) -> Result<Vec<R>> {
    let b0 = b[0]
        .as_scalar()
        .filter(|s| !s.is_zero())
        .ok_or(Error::NonUnit {
            what: "series division",
        })?;
    let b0_inv = b0.recip();
    let zero = a[0].zero_like();
    let mut out: Vec<R> = Vec::with_capacity(prec);
    for e in 0..prec {
        let mut acc = a.get(e).cloned().unwrap_or_else(|| zero.clone());
        for j in 1..=e.min(b.len() - 1) {
            if !b[j].vanishes() && !out[e - j].vanishes() {
                acc = acc.minus(&b[j].times(&out[e - j]));
            }
        }
        out.push(acc.scaled(&b0_inv));
    }
    Ok(out)
}

fn degree<R: Ring>(p: &[R]) -> Option<usize> {
    p.iter().rposition(|c| !c.vanishes())
}

/// Laurent expansion of `numer(z) / denom(z)` (coefficients listed by
/// ascending power of the variable).
///
/// In `InvZ` mode the degree of the numerator may not exceed that of the
/// denominator and the leading denominator coefficient must be an
/// invertible scalar. In `PoleW` mode the denominator must vanish to
/// exactly the given order at zero, with an invertible scalar as its first
/// nonzero coefficient.
pub fn ratfn_expand<R: Ring>(numer: &[R], denom: &[R], mode: ExpandMode) -> Result<ZLaurent<R>> {
    assert!(!numer.is_empty() && !denom.is_empty());
    let zero = numer[0].zero_like();
    let Some(dd) = degree(denom) else {
        return Err(Error::NonUnit {
            what: "zero denominator",
        });
    };
    match mode {
        ExpandMode::InvZ { e_min } => {
            let dn = degree(numer).unwrap_or(0);
            if dn > dd {
                return Err(Error::Precondition(format!(
                    "numerator degree {dn} exceeds denominator degree {dd}"
                )));
            }
            let e_max = dn as i32 - dd as i32;
            if e_min > e_max {
                return Err(Error::WindowTooSmall(format!(
                    "e_min {e_min} above the leading exponent {e_max}"
                )));
            }
            let rn: Vec<R> = (0..=dn).rev().map(|i| numer[i].clone()).collect();
            let rd: Vec<R> = (0..=dd).rev().map(|i| denom[i].clone()).collect();
            if rd[0].as_scalar().is_none_or(|s| s.is_zero()) {
                return Err(Error::NonUnit {
                    what: "leading denominator coefficient",
                });
            }
            let count = (e_max - e_min + 1) as usize;
            let mut u = series_div(&rn, &rd, count)?;
            u.reverse();
            Ok(ZLaurent::new(e_min, u, Truncation::Below))
        }
        ExpandMode::PoleW { order, e_max } => {
            if denom.iter().take(order).any(|c| !c.vanishes()) || order > dd {
                return Err(Error::Precondition(format!(
                    "denominator does not vanish to order {order} at zero"
                )));
            }
            let lowest = &denom[order];
            if lowest.as_scalar().is_none_or(|s: Rat| s.is_zero()) {
                return Err(Error::NonUnit {
                    what: "lowest denominator coefficient",
                });
            }
            let e_min = -(order as i32);
            if e_max < e_min {
                return Err(Error::WindowTooSmall(format!(
                    "e_max {e_max} below the pole order {order}"
                )));
            }
            let count = (e_max - e_min + 1) as usize;
            let num: Vec<R> = if numer.is_empty() {
                vec![zero]
            } else {
                numer.to_vec()
            };
            let coeffs = series_div(&num, &denom[order..], count)?;
            Ok(ZLaurent::new(e_min, coeffs, Truncation::Above))
        }
    }
}
