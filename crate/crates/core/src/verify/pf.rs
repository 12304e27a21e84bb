//! Annihilation of the specialized I-function by the Picard-Fuchs operator.

use super::{Recorder, Suite, VerifyOutcome};
use crate::birkhoff::{apply_d, ZSeries};
use crate::error::{Error, Result};
use crate::geometry::CIModel;
use crate::ifunction::IUnderline;
use crate::series::{Rat, Ring};

/// `(l D + m z) F` with `D = H + z q d/dq`.
fn linear_factor(f: &ZSeries, l: usize, m: usize) -> ZSeries {
    let df = apply_d(f).scale(&Rat::from_integer(l.into()));
    let zf = f.map(|c| c.shift(1).scaled(&Rat::from_integer(m.into())));
    df.add(&zf)
        .expect("windows of one expansion are compatible")
}

/// Applies `D^n - 1 - q prod_a prod_{m=1}^{l_a} (l_a D + m z)` to `I` and
/// checks that every determined coefficient of the result vanishes.
pub fn pf_check(i: &IUnderline, m: &CIModel) -> Result<VerifyOutcome> {
    let n = m.n();
    if i.model != *m {
        return Err(Error::Precondition(
            "I-function belongs to another model".into(),
        ));
    }
    if i.depth() < n {
        return Err(Error::WindowTooSmall(format!(
            "the operator has order {n} but only {} powers of 1/z are known",
            i.depth()
        )));
    }
    let mut dn = i.series.clone();
    for _ in 0..n {
        dn = apply_d(&dn);
    }
    let mut prod = i.series.clone();
    for &l in m.degrees() {
        for k in 1..=l {
            prod = linear_factor(&prod, l, k);
        }
    }
    let residual = dn.sub(&i.series)?.sub(&prod.shift_q(1))?;
    let order = i.order();
    let mut rec = Recorder::new(Suite::Pf, m, order);
    let zero = i.series.coeff(0).coeffs()[0].zero_like();
    for d in 0..=order {
        let c = residual.coeff(d);
        for e in c.e_min()..=c.e_max() {
            if !rec.compare(d, format!("z^{e}"), &c.get(e)?, &zero, "nonzero residual") {
                return Ok(rec.finish());
            }
        }
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_model;
    use crate::ifunction::i_underline;
    use crate::series::{int, CycloElem, QSeries};

    #[test]
    fn annihilates_small_models() {
        for (n, ds) in [(5usize, vec![5usize]), (6, vec![2, 2, 2]), (4, vec![2, 2])] {
            let m = validate_model(n, &ds).unwrap();
            let i = i_underline(&m, 4, 4 + 2 * n).unwrap();
            let out = pf_check(&i, &m).unwrap();
            assert!(out.passed(), "{:?}", out.first_failure);
            assert!(out.checks > 0);
        }
    }

    #[test]
    fn detects_a_perturbed_coefficient() {
        let m = validate_model(5, &[5]).unwrap();
        let i = i_underline(&m, 3, 10).unwrap();
        let mut coeffs = i.series.clone().into_coeffs();
        let bump = coeffs[2].map(|c| c.clone());
        let mut raw = bump.coeffs().to_vec();
        let last = raw.len() - 1;
        raw[last] = raw[last].plus(&CycloElem::scalar(5, int(1)));
        coeffs[2] = crate::series::ZLaurent::new(bump.e_min(), raw, bump.truncation());
        let bad = IUnderline {
            series: QSeries::from_coeffs(coeffs),
            model: m.clone(),
        };
        let out = pf_check(&bad, &m).unwrap();
        assert!(!out.passed());
        assert!(out.first_failure.unwrap().q_degree >= 2);
    }

    #[test]
    fn shallow_window_is_an_error() {
        let m = validate_model(5, &[5]).unwrap();
        let i = i_underline(&m, 2, 3).unwrap();
        assert!(matches!(pf_check(&i, &m), Err(Error::WindowTooSmall(_))));
    }
}
