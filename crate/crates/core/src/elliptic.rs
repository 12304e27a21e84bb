//! Genus-one generating functions: the quasimap series, the wall-crossing
//! correction, the mirror map and the Gromov-Witten series in the flat
//! coordinate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::birkhoff::{compute_ck, BirkhoffData};
use crate::error::{Error, Result};
use crate::geometry::{chern_data, CIModel, ChernData};
use crate::ifunction::{i_underline, small_i, SmallI, Windows};
use crate::series::{QSeries, Rat};

fn binom2(k: usize) -> Rat {
    Rat::from_integer(BigInt::from(k * k.saturating_sub(1) / 2))
}

/// `(3(n-1-r)^2 + n - r - 3) / 48`, the coefficient of
/// `-log(1 - q prod l_a^{l_a})`.
pub fn conifold_prefactor(m: &CIModel) -> Rat {
    let (n, r) = (m.n() as i64, m.r() as i64);
    Rat::new(
        BigInt::from(3 * (n - 1 - r) * (n - 1 - r) + n - r - 3),
        BigInt::from(48),
    )
}

/// The weights `binom(n - r - k, 2)` of `log C_k`, for `k = 0..=n-2-r`.
pub fn log_ck_weights(m: &CIModel) -> Vec<Rat> {
    let nr = m.n() - m.r();
    (0..=nr - 2).map(|k| binom2(nr - k)).collect()
}

/// The genus-one quasimap series
/// `-c log(1 - q prod l^l) - 1/2 sum_k binom(n-r-k, 2) log C_k`.
pub fn quasimap_g1(m: &CIModel, bd: &BirkhoffData, qmax: usize) -> Result<QSeries<Rat>> {
    if qmax > bd.order() {
        return Err(Error::Precondition(format!(
            "constants known to q^{}, requested q^{qmax}",
            bd.order()
        )));
    }
    let conifold = QSeries::one_minus(m.conifold(), qmax).log()?;
    let mut out = conifold.scale(&-conifold_prefactor(m));
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    for (k, w) in log_ck_weights(m).iter().enumerate() {
        let lc = bd.c[k].truncate(qmax).log()?;
        out = out.sub(&lc.scale(&(w * &half)))?;
    }
    Ok(out)
}

/// `(chi_top / 24) log I_0 + (1/24) (f / I_0) int_X H c_{dim X - 1}(TX)`.
pub fn wall_correction(m: &CIModel, si: &SmallI, cd: &ChernData) -> Result<QSeries<Rat>> {
    if cd.deg_x != m.deg() {
        return Err(Error::Precondition(
            "Chern data belongs to another model".into(),
        ));
    }
    let c24 = Rat::from_integer(BigInt::from(24));
    let log_i0 = si.i0.log()?.scale(&(&cd.chi_top / &c24));
    let g = si.f.mul(&si.i0.inv()?)?;
    log_i0.add(&g.scale(&(&cd.lin_c / &c24)))
}

/// `g = f / I_0` and `Q(q) = q exp(g)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MirrorMap {
    pub g: QSeries<Rat>,
    pub q_of_q: QSeries<Rat>,
}

pub fn mirror_map(si: &SmallI) -> Result<MirrorMap> {
    if !si.f.coeff(0).is_zero() || !si.i0.coeff(0).is_one() {
        return Err(Error::Precondition("need f(0) = 0 and I_0(0) = 1".into()));
    }
    let g = si.f.mul(&si.i0.inv()?)?;
    let q_of_q = g.exp()?.shift_q(1);
    Ok(MirrorMap { g, q_of_q })
}

/// Compositional inverse of `Q(q) = q + O(q^2)`, by the fixed-point
/// iteration `q = Q psi(q)` with `psi = q / Q(q)`; each pass fixes one
/// more coefficient.
pub fn invert_map(q_of_q: &QSeries<Rat>) -> Result<QSeries<Rat>> {
    let order = q_of_q.order();
    if !q_of_q.coeff(0).is_zero() || (order >= 1 && !q_of_q.coeff(1).is_one()) {
        return Err(Error::Precondition(
            "the map must have the form q + O(q^2)".into(),
        ));
    }
    if order == 0 {
        return Ok(q_of_q.clone());
    }
    let phi = QSeries::from_coeffs(q_of_q.coeffs()[1..].to_vec());
    let psi = phi.inv()?;
    let mut q = QSeries::q(order);
    for _ in 0..order {
        let next = psi.compose(&q)?;
        let mut coeffs = vec![Rat::zero()];
        coeffs.extend(next.into_coeffs());
        q = QSeries::from_coeffs(coeffs);
    }
    Ok(q)
}

/// The right-hand side of the genus-one mirror formula, evaluated as one
/// logarithm of a product of rational powers plus the `I_1 / I_0` term.
pub fn zinger_rhs(
    m: &CIModel,
    si: &SmallI,
    bd: &BirkhoffData,
    cd: &ChernData,
    qmax: usize,
) -> Result<QSeries<Rat>> {
    let c24 = Rat::from_integer(BigInt::from(24));
    let mut prod = si.i0.truncate(qmax).pow_rat(&(&cd.chi_top / &c24))?;
    let conifold = QSeries::one_minus(m.conifold(), qmax);
    prod = prod.mul(&conifold.pow_rat(&-conifold_prefactor(m))?)?;
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    for (k, w) in log_ck_weights(m).iter().enumerate() {
        let factor = bd.c[k].truncate(qmax).pow_rat(&-(w * &half))?;
        prod = prod.mul(&factor)?;
    }
    let g = si.f.truncate(qmax).mul(&si.i0.truncate(qmax).inv()?)?;
    prod.log()?.add(&g.scale(&(&cd.lin_c / &c24)))
}

/// The assembled genus-one outputs.
#[derive(Clone, Debug, PartialEq)]
pub struct G1Report {
    pub model: CIModel,
    pub f_quasimap: QSeries<Rat>,
    pub correction: QSeries<Rat>,
    /// The Gromov-Witten series after the substitution `Q = Q(q)`.
    pub f_gw_in_q: QSeries<Rat>,
    pub mirror_q: QSeries<Rat>,
    /// The Gromov-Witten series in the flat coordinate `Q`.
    pub f_gw: QSeries<Rat>,
    /// `(d, N_{1,d})` for `d = 1..=qmax`.
    pub invariants_table: Vec<(usize, Rat)>,
}

pub fn gw_g1(m: &CIModel, qmax: usize) -> Result<G1Report> {
    gw_g1_with(m, qmax, Windows::for_model(m, qmax))
}

/// Full pipeline with explicit windows; the Birkhoff constants are
/// recomputed with every window enlarged by two and must not change.
pub fn gw_g1_with(m: &CIModel, qmax: usize, windows: Windows) -> Result<G1Report> {
    let bd = compute_ck(&i_underline(m, qmax, windows.z_depth)?)?;
    let wider = windows.enlarged(2);
    let bd2 = compute_ck(&i_underline(m, qmax, wider.z_depth)?)?;
    if bd != bd2 {
        return Err(Error::TruncationUnstable(
            "Birkhoff constants depend on the z-window".into(),
        ));
    }
    let si = small_i(m, qmax);
    let cd = chern_data(m);
    let f_quasimap = quasimap_g1(m, &bd, qmax)?;
    let correction = wall_correction(m, &si, &cd)?;
    let f_gw_in_q = f_quasimap.add(&correction)?;
    let mm = mirror_map(&si)?;
    let f_gw = f_gw_in_q.compose(&invert_map(&mm.q_of_q)?)?;
    let invariants_table = (1..=qmax).map(|d| (d, f_gw.coeff(d).clone())).collect();
    Ok(G1Report {
        model: m.clone(),
        f_quasimap,
        correction,
        f_gw_in_q,
        mirror_q: mm.q_of_q,
        f_gw,
        invariants_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_model;
    use crate::series::{int, rat};

    fn quintic() -> CIModel {
        validate_model(5, &[5]).unwrap()
    }

    fn pipeline(m: &CIModel, qmax: usize) -> (BirkhoffData, SmallI, ChernData) {
        let i = i_underline(m, qmax, qmax + m.n()).unwrap();
        (compute_ck(&i).unwrap(), small_i(m, qmax), chern_data(m))
    }

    #[test]
    fn quintic_prefactor_and_first_coefficients() {
        let m = quintic();
        assert_eq!(conifold_prefactor(&m), rat(7, 12));
        assert_eq!(log_ck_weights(&m), vec![int(6), int(3), int(1)]);
        let (bd, si, cd) = pipeline(&m, 3);
        let f = quasimap_g1(&m, &bd, 3).unwrap();
        assert_eq!(f.coeff(0), &int(0));
        let c1 = |k: usize| bd.c[k].coeff(1).clone();
        let expect = rat(7, 12) * int(3125) - rat(1, 2) * (int(6) * c1(0) + int(3) * c1(1) + c1(2));
        assert_eq!(f.coeff(1), &expect);
        assert_eq!(f.coeff(1), &rat(-4375, 12));
        let w = wall_correction(&m, &si, &cd).unwrap();
        assert_eq!(w.coeff(0), &int(0));
        assert_eq!(
            w.coeff(1),
            &((int(-200) * int(120) + int(770) * int(50)) / int(24))
        );
        assert_eq!(w.coeff(1), &rat(3625, 6));
    }

    #[test]
    fn correction_without_the_linear_term() {
        let m = quintic();
        let (_, mut si, cd) = pipeline(&m, 4);
        si.f = QSeries::zero(4);
        let w = wall_correction(&m, &si, &cd).unwrap();
        assert_eq!(w, si.i0.log().unwrap().scale(&(cd.chi_top / int(24))));
    }

    #[test]
    fn mirror_map_and_inverse() {
        let m = quintic();
        let si = small_i(&m, 6);
        let mm = mirror_map(&si).unwrap();
        assert_eq!(mm.q_of_q.coeff(1), &int(1));
        assert_eq!(mm.q_of_q.coeff(2), &int(770));
        let inv = invert_map(&mm.q_of_q).unwrap();
        assert_eq!(inv.compose(&mm.q_of_q).unwrap(), QSeries::q(6));
        assert_eq!(mm.q_of_q.compose(&inv).unwrap(), QSeries::q(6));
        // Lagrange: [Q^k] q(Q) = (1/k) [q^{k-1}] psi^k with psi = exp(-g).
        let psi = mm.g.neg().exp().unwrap();
        let mut pow = QSeries::one(6);
        for k in 1..=6 {
            pow = pow.mul(&psi).unwrap();
            assert_eq!(inv.coeff(k), &(pow.coeff(k - 1) / int(k as i64)));
        }
        let trivial = SmallI {
            i0: QSeries::one(4),
            f: QSeries::zero(4),
        };
        let mm = mirror_map(&trivial).unwrap();
        assert_eq!(mm.q_of_q, QSeries::q(4));
        assert_eq!(invert_map(&mm.q_of_q).unwrap(), QSeries::q(4));
    }

    #[test]
    fn direct_formula_matches_the_sum() {
        for (n, ds) in [(5usize, vec![5usize]), (6, vec![2, 4]), (4, vec![2, 2])] {
            let m = validate_model(n, &ds).unwrap();
            let (bd, si, cd) = pipeline(&m, 6);
            let lhs = zinger_rhs(&m, &si, &bd, &cd, 6).unwrap();
            let rhs = quasimap_g1(&m, &bd, 6)
                .unwrap()
                .add(&wall_correction(&m, &si, &cd).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    /// Genus-one invariants from Gopakumar-Vafa counts:
    /// `N_{1,D} = sum_{d | D} (n1_d sigma(D/d) / (D/d) + n0_d / (12 D/d))`.
    fn gv_oracle(n0: &[i64], n1: &[i64], big_d: usize) -> Rat {
        let mut out = int(0);
        for d in 1..=big_d {
            if !big_d.is_multiple_of(d) {
                continue;
            }
            let k = (big_d / d) as i64;
            let sigma: i64 = (1..=k).filter(|j| k % j == 0).sum();
            out += int(n1[d - 1]) * rat(sigma, k) + rat(n0[d - 1], 12 * k);
        }
        out
    }

    #[test]
    fn quintic_invariants_match_known_counts() {
        let report = gw_g1(&quintic(), 4).unwrap();
        let n0 = [2875, 609250, 317206375, 242467530000];
        let n1 = [0, 0, 609250, 3721431625];
        for (d, v) in &report.invariants_table {
            assert_eq!(v, &gv_oracle(&n0, &n1, *d), "degree {d}");
        }
        assert_eq!(report.invariants_table[0].1, rat(2875, 12));
        assert_eq!(
            report.f_gw.compose(&report.mirror_q).unwrap(),
            report.f_gw_in_q
        );
        assert_eq!(
            report.f_gw_in_q.sub(&report.f_quasimap).unwrap(),
            report.correction
        );
    }
}
