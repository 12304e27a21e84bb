//! The closed-form properties of the Birkhoff constants and asymptotics:
//! the product identity, the palindromic symmetry, the trivial tail and
//! the closed forms of `mu` and `R_0`.

use super::{Recorder, Suite, VerifyOutcome};
use crate::asymptotics::{closed_forms, AsymptoticData};
use crate::birkhoff::BirkhoffData;
use crate::error::{Error, Result};
use crate::geometry::CIModel;
use crate::series::QSeries;

pub fn popa_check(bd: &BirkhoffData, ad: &AsymptoticData, m: &CIModel) -> Result<VerifyOutcome> {
    let n = m.n();
    if bd.c.len() != n {
        return Err(Error::Precondition(format!(
            "expected {n} Birkhoff constants, got {}",
            bd.c.len()
        )));
    }
    let order = bd.order().min(ad.mu.order());
    let nr = n - m.r();
    let c: Vec<QSeries<_>> = bd.c.iter().map(|s| s.truncate(order)).collect();
    let mut rec = Recorder::new(Suite::Popa, m, order);

    let mut prod = QSeries::one_minus(m.conifold(), order);
    for ci in &c[..=nr] {
        prod = prod.mul(ci)?;
    }
    rec.compare_series(
        "product of C_0..C_{n-r} times (1 - cq)",
        &prod,
        &QSeries::one(order),
        "product identity",
    );
    for b in 0..=nr {
        rec.compare_series(
            &format!("C_{b} vs C_{}", nr - b),
            &c[b],
            &c[nr - b],
            "symmetry",
        );
    }
    for (b, cb) in c.iter().enumerate().skip(nr + 1) {
        rec.compare_series(&format!("C_{b}"), cb, &QSeries::one(order), "trivial tail");
    }

    let cf = closed_forms(m, order)?;
    let mu = ad.mu.truncate(order);
    rec.compare_series("mu", &mu, &cf.mu, "closed form of mu");
    rec.compare_series("R_0", &ad.r[0].truncate(order), &cf.r0, "R_0 = L^{(r+1)/2}");
    let dmu = mu.qddq().add(&QSeries::one(order))?;
    rec.compare_series("q dmu/dq + 1", &dmu, &cf.l, "derivative of mu");
    if !ad.clean {
        rec.fail(0, "asymptotics", "deep poles did not cancel".into());
    }
    Ok(rec.finish())
}
