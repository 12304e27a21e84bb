//! Vertex and loop contributions summed over the fixed points, compared
//! with the closed quasimap series.

use num_bigint::BigInt;

use super::roots::inverse_root_sum;
use super::{ratio, stable_inputs, Recorder, Suite, VerifyOutcome};
use crate::birkhoff::BirkhoffData;
use crate::elliptic::{log_ck_weights, quasimap_g1};
use crate::error::Result;
use crate::geometry::CIModel;
use crate::series::{QSeries, Rat};

/// `Loop(q) = (n/24)(n - 1 - 2 sum 1/l_a) mu
///   - ((3(n-1-r)^2 + n - 2)/24) log(1 - q prod l^l)
///   - sum_{k=0}^{n-2-r} binom(n-r-k, 2) log C_k`.
pub fn loop_series(
    m: &CIModel,
    bd: &BirkhoffData,
    mu: &QSeries<Rat>,
    qmax: usize,
) -> Result<QSeries<Rat>> {
    let (n, r) = (m.n() as i64, m.r() as i64);
    let two = Rat::from_integer(BigInt::from(2));
    let mu_coeff =
        ratio(n, 24) * (Rat::from_integer(BigInt::from(n - 1)) - two * m.inverse_degree_sum());
    let mut out = mu.truncate(qmax).scale(&mu_coeff);
    let conifold = QSeries::one_minus(m.conifold(), qmax).log()?;
    let c = ratio(3 * (n - 1 - r) * (n - 1 - r) + n - 2, 24);
    out = out.sub(&conifold.scale(&c))?;
    for (k, w) in log_ck_weights(m).iter().enumerate() {
        out = out.sub(&bd.c[k].truncate(qmax).log()?.scale(w))?;
    }
    Ok(out)
}

/// Checks `-(n/24) log R_0 + (1/24)(sum n/l_a - binom(n, 2)) mu + Loop/2`
/// against the quasimap series. The `binom(n, 2)` is produced by the sum of
/// `1/(zeta - 1)` over the nontrivial roots of unity.
pub fn assembly_check(m: &CIModel, qmax: usize) -> Result<VerifyOutcome> {
    let inp = stable_inputs(m, qmax, qmax + 2, 0)?;
    let n = Rat::from_integer(BigInt::from(m.n()));
    let c24 = Rat::from_integer(BigInt::from(24));
    let vertex_r0 = inp.ad.r[0].truncate(qmax).log()?.scale(&(-&n / &c24));
    let hodge = &n * m.inverse_degree_sum() + &n * inverse_root_sum(m.n());
    let vertex_mu = inp.ad.mu.truncate(qmax).scale(&(hodge / &c24));
    let half = ratio(1, 2);
    let lp = loop_series(m, &inp.bd, &inp.ad.mu, qmax)?.scale(&half);
    let lhs = vertex_r0.add(&vertex_mu)?.add(&lp)?;
    let rhs = quasimap_g1(m, &inp.bd, qmax)?;
    let mut rec = Recorder::new(Suite::Assembly, m, qmax);
    rec.compare_series(
        "vertices + loops",
        &lhs,
        &rhs,
        "assembly differs from the closed form",
    );
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_model;

    #[test]
    fn quintic_and_mixed_degrees() {
        for (n, ds) in [(5usize, vec![5usize]), (6, vec![2, 4]), (4, vec![2, 2])] {
            let m = validate_model(n, &ds).unwrap();
            let out = assembly_check(&m, 5).unwrap();
            assert!(out.passed(), "{}: {:?}", m.label(), out.first_failure);
            assert_eq!(out.checks, 6);
        }
    }
}
