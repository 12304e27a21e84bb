//! The asymptotic expansion `I|_{p_n} = e^{mu(q)/w} (R_0(q) + R_1(q) w + ...)`
//! at the fixed point `p_n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::CIModel;
use crate::ifunction::IFixedPoint;
use crate::series::{QSeries, Rat, Ring, ZLaurent};

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticData {
    pub mu: QSeries<Rat>,
    /// `R_0, ..., R_K`.
    pub r: Vec<QSeries<Rat>>,
    pub k_max: usize,
    /// All poles of order two or more cancelled. Extraction fails with
    /// `DeepPole` otherwise, so a returned value always has this set.
    pub clean: bool,
}

/// `exp(sign * mu / w)` as a q-series of Laurent polynomials in `w`.
pub fn exp_mu_over_w(mu: &QSeries<Rat>, sign: &Rat) -> Result<QSeries<ZLaurent<Rat>>> {
    let a = mu.map(|c| ZLaurent::exact(-1, vec![c * sign, Rat::zero()]));
    a.exp()
}

pub fn extract_asymptotics(j: &IFixedPoint, k_max: usize) -> Result<AsymptoticData> {
    let qmax = j.series.order();
    let jc = j.series.coeffs();
    let mut mu = vec![Rat::zero(); qmax + 1];
    // x[d] is the q^d coefficient of exp(-mu/w), built with the recurrence
    // for the exponential as mu is discovered degree by degree.
    let mut x: Vec<ZLaurent<Rat>> = vec![ZLaurent::monomial(0, Rat::one())];
    let mut r: Vec<Vec<Rat>> = vec![Vec::with_capacity(qmax + 1); k_max + 1];
    let e0 = &jc[0];
    for (k, rk) in r.iter_mut().enumerate() {
        rk.push(e0.get(k as i32)?);
    }
    for d in 1..=qmax {
        let mut xd = ZLaurent::monomial(0, Rat::zero());
        for k in 1..d {
            let ak = ZLaurent::monomial(-1, -&mu[k] * Rat::from_integer(BigInt::from(k)));
            xd = xd.plus(&ak.times(&x[d - k]));
        }
        xd = xd.scaled(&Rat::new(BigInt::one(), BigInt::from(d)));
        x.push(xd);
        let mut e = x[0].times(&jc[d]);
        for i in 1..=d {
            e = e.try_add(&x[i].try_mul(&jc[d - i])?)?;
        }
        let mu_d = e.get(-1)?;
        let correction = ZLaurent::monomial(-1, -&mu_d);
        e = e.try_add(&correction.try_mul(&jc[0])?)?;
        x[d] = x[d].plus(&correction);
        mu[d] = mu_d;
        for order in 1..=d {
            if !e.get(-(order as i32))?.is_zero() {
                return Err(Error::DeepPole { q_degree: d, order });
            }
        }
        for (k, rk) in r.iter_mut().enumerate() {
            rk.push(e.get(k as i32)?);
        }
    }
    Ok(AsymptoticData {
        mu: QSeries::from_coeffs(mu),
        r: r.into_iter().map(QSeries::from_coeffs).collect(),
        k_max,
        clean: true,
    })
}

/// `L = (1 - q prod l_a^{l_a})^{-1/n}` and the closed forms of `mu` and
/// `R_0` in terms of it.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForms {
    pub l: QSeries<Rat>,
    pub mu: QSeries<Rat>,
    pub r0: QSeries<Rat>,
}

pub fn closed_forms(m: &CIModel, qmax: usize) -> Result<ClosedForms> {
    let base = QSeries::one_minus(m.conifold(), qmax);
    let l = base.pow_rat(&Rat::new(BigInt::from(-1), BigInt::from(m.n())))?;
    let mu = l.sub(&QSeries::one(qmax))?.int_dlog()?;
    let r0 = l.pow_rat(&Rat::new(BigInt::from(m.r() + 1), BigInt::from(2)))?;
    Ok(ClosedForms { l, mu, r0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_model;
    use crate::ifunction::i_fixed_point;
    use crate::series::{int, rat};

    fn models() -> Vec<CIModel> {
        [
            (5usize, vec![5usize]),
            (6, vec![3, 3]),
            (6, vec![2, 4]),
            (6, vec![2, 2, 2]),
        ]
        .into_iter()
        .map(|(n, ds)| validate_model(n, &ds).unwrap())
        .collect()
    }

    /// `[q^d] (1 - c q)^{-1/n} = c^d prod_{j<d} (1/n + j) / d!`.
    fn binomial_l(c: i64, n: i64, qmax: usize) -> QSeries<Rat> {
        let mut out = vec![int(1)];
        let mut term = int(1);
        for d in 0..qmax {
            term = term * (rat(1, n) + int(d as i64)) * int(c) / int(d as i64 + 1);
            out.push(term.clone());
        }
        QSeries::from_coeffs(out)
    }

    #[test]
    fn quintic_values() {
        let m = validate_model(5, &[5]).unwrap();
        let j = i_fixed_point(&m, 4, 9).unwrap();
        let a = extract_asymptotics(&j, 3).unwrap();
        assert!(a.clean);
        assert_eq!(a.mu.coeff(0), &int(0));
        assert_eq!(a.mu.coeff(1), &int(625));
        assert_eq!(a.mu.coeff(2), &rat(1171875, 2));
        assert_eq!(a.r[0].coeff(0), &int(1));
        let cf = closed_forms(&m, 4).unwrap();
        assert_eq!(cf.l, binomial_l(3125, 5, 4));
        assert_eq!(a.r[0], cf.r0);
        assert_eq!(a.mu, cf.mu);
    }

    #[test]
    fn closed_forms_hold_for_all_test_models() {
        for m in models() {
            let qmax = 7;
            let j = i_fixed_point(&m, qmax, qmax + 5).unwrap();
            let a = extract_asymptotics(&j, 3).unwrap();
            let cf = closed_forms(&m, qmax).unwrap();
            assert_eq!(a.mu, cf.mu, "{}", m.label());
            assert_eq!(a.r[0], cf.r0, "{}", m.label());
            assert_eq!(a.r.len(), 4);
            let lhs = a.mu.qddq().add(&QSeries::one(qmax)).unwrap();
            assert_eq!(lhs, cf.l);
        }
    }

    #[test]
    fn exponent_for_two_cubics() {
        let m = validate_model(6, &[3, 3]).unwrap();
        let cf = closed_forms(&m, 5).unwrap();
        assert_eq!(cf.r0, cf.l.pow_rat(&rat(3, 2)).unwrap());
        assert_eq!(cf.l.coeff(0), &int(1));
    }

    #[test]
    fn exponential_factor_cancels_the_poles() {
        let m = validate_model(6, &[2, 4]).unwrap();
        let j = i_fixed_point(&m, 5, 10).unwrap();
        let a = extract_asymptotics(&j, 3).unwrap();
        let x = exp_mu_over_w(&a.mu, &int(-1)).unwrap();
        let e = x.mul(&j.series).unwrap();
        for d in 0..=5 {
            let c = e.coeff(d);
            for k in c.e_min()..0 {
                assert!(c.get(k).unwrap().is_zero());
            }
            assert_eq!(c.get(0).unwrap(), *a.r[0].coeff(d));
        }
    }

    #[test]
    fn short_window_is_reported() {
        let m = validate_model(5, &[5]).unwrap();
        let j = i_fixed_point(&m, 6, 4).unwrap();
        assert!(matches!(
            extract_asymptotics(&j, 3),
            Err(Error::WindowTooSmall(_))
        ));
    }
}
