//! The loop term at the fixed point `p_n`.
//!
//! With `S_p` the restriction of `B^p(I/I_0)` to `p_n`, expanded about
//! `w = 0`, the bracket
//! `e^{-mu (1/x + 1/y)} V(x, y, q) / n - 1` with
//! `V = sum_{p+p' = n-1-r} S_p(x) S_p'(y) + sum_{p+p' = 2n-1-r, p >= n-r} S_p(x) S_p'(y)`
//! must be divisible by `x + y`, and the value of the quotient at
//! `x = y = 0` must equal `(1/(n L)) q d/dq Loop(q)`.

use super::assembly::loop_series;
use super::roots::tangent_weight;
use super::{stable_inputs, Recorder, Suite, VerifyOutcome};
use crate::asymptotics::{closed_forms, exp_mu_over_w};
use crate::error::Result;
use crate::geometry::CIModel;
use crate::series::{BiLaurent, QSeries, Rat, Ring, ZLaurent};

/// Extra powers of `w` carried beyond `q_max`.
const EXTRA_W: usize = 4;

/// Index pairs `(p, p')` entering `V`.
fn pairs(n: usize, r: usize) -> Vec<(usize, usize)> {
    let low = (0..n - r).map(|p| (p, n - 1 - r - p));
    let high = (n - r..n).map(|p| (p, 2 * n - 1 - r - p));
    low.chain(high).collect()
}

/// The coefficients of `w^0..=w^t` as a Laurent polynomial.
fn head(c: &ZLaurent<Rat>, t: i32) -> Result<ZLaurent<Rat>> {
    let coeffs = (0..=t).map(|e| c.get(e)).collect::<Result<Vec<_>>>()?;
    Ok(ZLaurent::exact(0, coeffs))
}

pub fn loop_limit_check(m: &CIModel, qmax: usize) -> Result<VerifyOutcome> {
    let (n, r) = (m.n(), m.r());
    let w_prec = qmax + EXTRA_W;
    let inp = stable_inputs(m, qmax, w_prec, 0)?;
    let mut rec = Recorder::new(Suite::Loop, m, qmax);

    let mut s: Vec<QSeries<ZLaurent<Rat>>> = Vec::with_capacity(n);
    s.push(inp.fixed.series.mul_scalar_series(&inp.bd.c[0].inv()?));
    for p in 1..n {
        let prev = &s[p - 1];
        let raised = prev.add(&prev.qddq().map(|c| c.shift(1)))?;
        s.push(raised.mul_scalar_series(&inp.bd.c[p].inv()?));
    }
    let x = exp_mu_over_w(&inp.ad.mu, &-Rat::from_integer(1.into()))?;
    let mut e: Vec<QSeries<ZLaurent<Rat>>> = Vec::with_capacity(n);
    for (p, sp) in s.iter().enumerate() {
        let ep = x.mul(sp)?;
        for d in 0..=qmax {
            let c = ep.coeff(d);
            for k in c.e_min()..0 {
                let v = c.get(k)?;
                if !rec.compare(
                    d,
                    format!("S_{p}, w^{k}"),
                    &v,
                    &v.zero_like(),
                    "pole survives the exponential factor",
                ) {
                    return Ok(rec.finish());
                }
            }
        }
        e.push(ep);
    }

    let weight = tangent_weight(n);
    let cf = closed_forms(m, qmax)?;
    let lp = loop_series(m, &inp.bd, &inp.ad.mu, qmax)?;
    let target = lp.qddq().mul(&cf.l.inv()?)?.scale(&weight.recip());
    let prs = pairs(n, r);
    let (one, two) = (Rat::from_integer(1.into()), Rat::from_integer(2.into()));

    for big_d in 0..=qmax {
        let t = (w_prec - big_d) as i32;
        let mut bracket = BiLaurent::new();
        for &(p, pp) in &prs {
            for d1 in 0..=big_d {
                let fx = head(e[p].coeff(d1), t)?;
                let gy = head(e[pp].coeff(big_d - d1), t)?;
                bracket.add_assign_ref(&BiLaurent::outer(&fx, &gy));
            }
        }
        bracket = bracket.scaled(&weight.recip());
        if big_d == 0 {
            bracket.add_term(0, 0, -one.clone());
        }
        let bracket = bracket.retain(|i, j| i + j <= t);
        let quotient = match bracket.div_x_plus_y() {
            Ok(qt) => qt,
            Err(err) => {
                rec.fail(big_d, "division by x + y", err.to_string());
                return Ok(rec.finish());
            }
        };
        let on_diag = quotient.subst_diag(&one);
        let on_ray = quotient.subst_diag(&two);
        for (name, line) in [("y = x", &on_diag), ("y = 2x", &on_ray)] {
            if line.e_min() < 0 {
                rec.fail(
                    big_d,
                    name,
                    format!("negative power x^{} survives", line.e_min()),
                );
                return Ok(rec.finish());
            }
        }
        let (a, b) = (on_diag.get(0)?, on_ray.get(0)?);
        if !rec.compare(
            big_d,
            "limit along y = x vs y = 2x",
            &a,
            &b,
            "direction dependent",
        ) {
            return Ok(rec.finish());
        }
        if !rec.compare(
            big_d,
            "limit vs (1/(nL)) q dLoop/dq",
            &a,
            target.coeff(big_d),
            "limit mismatch",
        ) {
            return Ok(rec.finish());
        }
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_model;

    #[test]
    fn pair_structure() {
        assert_eq!(pairs(5, 1), vec![(0, 3), (1, 2), (2, 1), (3, 0), (4, 4)]);
        assert_eq!(pairs(6, 2).len(), 6);
        for (n, r) in [(5, 1), (6, 2), (6, 3)] {
            assert!(pairs(n, r).iter().all(|&(p, pp)| p < n && pp < n));
        }
    }

    #[test]
    fn low_order_models() {
        for (n, ds) in [(5usize, vec![5usize]), (6, vec![2, 2, 2]), (4, vec![2, 2])] {
            let m = validate_model(n, &ds).unwrap();
            let out = loop_limit_check(&m, 3).unwrap();
            assert!(out.passed(), "{}: {:?}", m.label(), out.first_failure);
        }
    }
}
