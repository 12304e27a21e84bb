//! The hypergeometric I-function in three forms: specialized to the
//! cyclotomic ring, restricted to the fixed point `p_n`, and the
//! non-equivariant small I-function.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::geometry::CIModel;
use crate::series::{series_div, CycloElem, QSeries, Rat, Ring, Truncation, ZLaurent};

/// Default number of `R_k` beyond `R_0` requested from the asymptotics.
pub const DEFAULT_K: usize = 3;

/// Expansion windows shared by the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Windows {
    /// Number of `1/z` powers kept below `z^0`.
    pub z_depth: usize,
    /// Highest power of `w` kept in the fixed-point expansion.
    pub w_max: usize,
}

impl Windows {
    pub fn for_model(m: &CIModel, qmax: usize) -> Self {
        Self {
            z_depth: qmax + m.n(),
            w_max: qmax + DEFAULT_K + 2,
        }
    }

    pub fn enlarged(&self, by: usize) -> Self {
        Self {
            z_depth: self.z_depth + by,
            w_max: self.w_max + by,
        }
    }
}

/// The specialized I-function: the `q^d` coefficient is
/// `prod_a prod_{k=1}^{l_a d} (l_a H + k z) / prod_{k=1}^d ((H + k z)^n - 1)`
/// in `Q[H]/(H^n - 1)`, expanded in `1/z`.
#[derive(Clone, Debug)]
pub struct IUnderline {
    pub series: QSeries<ZLaurent<CycloElem>>,
    pub model: CIModel,
}

impl IUnderline {
    /// The `z^0` coefficient of every `q^d` term.
    pub fn z0_part(&self) -> Result<QSeries<CycloElem>> {
        self.series.try_map(|c| c.get(0))
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    /// Number of determined `1/z` powers.
    pub fn depth(&self) -> usize {
        (-self.series.coeff(0).e_min()) as usize
    }
}

/// Truncated power series product with a polynomial whose coefficients
/// are given densely; result keeps `a.len()` terms.
fn mul_poly<R: Ring>(a: &mut Vec<R>, p: &[R]) {
    let len = a.len();
    let zero = a[0].zero_like();
    let mut out = vec![zero; len];
    for (i, x) in a.iter().enumerate() {
        if x.vanishes() {
            continue;
        }
        for (j, y) in p.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if !y.vanishes() {
                out[i + j].add_assign_ref(&x.times(y));
            }
        }
    }
    *a = out;
}

fn binom(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn big(v: usize) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn i_underline(m: &CIModel, qmax: usize, z_depth: usize) -> Result<IUnderline> {
    let n = m.n();
    let len = z_depth + 1;
    let h = |k: usize, s: Rat| CycloElem::h_pow(n, k, s);
    let zero = CycloElem::zero(n);
    // T holds the q^d coefficient as a power series in u = 1/z, after
    // dividing numerator and denominator by z^{nd}.
    let mut t: Vec<CycloElem> = vec![zero.clone(); len];
    t[0] = h(0, Rat::one());
    let to_laurent = |t: &[CycloElem]| {
        ZLaurent::new(
            -(z_depth as i32),
            t.iter().rev().cloned().collect(),
            Truncation::Below,
        )
    };
    let mut coeffs = vec![to_laurent(&t)];
    for d in 1..=qmax {
        for &l in m.degrees() {
            for k in l * (d - 1) + 1..=l * d {
                mul_poly(&mut t, &[h(0, big(k)), h(1, big(l))]);
            }
        }
        // (d + H u)^n - u^n, with H^n = 1 folding the last term into u^n.
        let mut den = vec![zero.clone(); (n + 1).min(len).max(1)];
        for (j, slot) in den.iter_mut().enumerate() {
            let c = Rat::from_integer(binom(n, j) * num_traits::pow(BigInt::from(d), n - j));
            *slot = h(j, c);
        }
        if n < len {
            den[n] = den[n].minus(&h(0, Rat::one()));
        }
        t = series_div(&t, &den, len)?;
        coeffs.push(to_laurent(&t));
    }
    Ok(IUnderline {
        series: QSeries::from_coeffs(coeffs),
        model: m.clone(),
    })
}

/// `I` restricted to `p_n` (where `lambda_n = 1`), in `w = z / lambda_n`:
/// the `q^d` coefficient is
/// `prod_a prod_{k=1}^{l_a d} (l_a + k w) / prod_{k=1}^d ((1 + k w)^n - 1)`
/// expanded about `w = 0`.
#[derive(Clone, Debug)]
pub struct IFixedPoint {
    pub series: QSeries<ZLaurent<Rat>>,
    pub model: CIModel,
}

impl IFixedPoint {
    pub fn w_max(&self) -> i32 {
        self.series.coeff(0).e_max()
    }
}

pub fn i_fixed_point(m: &CIModel, qmax: usize, w_max: usize) -> Result<IFixedPoint> {
    let n = m.n();
    // w^d times the q^d coefficient is a power series; it is needed up to
    // w^{w_max + d}.
    let len = w_max + qmax + 1;
    let mut p: Vec<Rat> = vec![Rat::zero(); len];
    p[0] = Rat::one();
    let mut coeffs = vec![ZLaurent::new(0, p[..=w_max].to_vec(), Truncation::Above)];
    for d in 1..=qmax {
        for &l in m.degrees() {
            for k in l * (d - 1) + 1..=l * d {
                mul_poly(&mut p, &[big(l), big(k)]);
            }
        }
        // ((1 + d w)^n - 1) / w
        let den: Vec<Rat> = (0..n)
            .map(|j| Rat::from_integer(binom(n, j + 1) * num_traits::pow(BigInt::from(d), j + 1)))
            .collect();
        p = series_div(&p, &den, len)?;
        coeffs.push(ZLaurent::new(
            -(d as i32),
            p[..=w_max + d].to_vec(),
            Truncation::Above,
        ));
    }
    Ok(IFixedPoint {
        series: QSeries::from_coeffs(coeffs),
        model: m.clone(),
    })
}

/// The non-equivariant limit `I = I_0 + I_1/z + ...` with `I_1 = f H`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmallI {
    pub i0: QSeries<Rat>,
    pub f: QSeries<Rat>,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

pub fn small_i(m: &CIModel, qmax: usize) -> SmallI {
    let mut i0 = vec![Rat::one()];
    let mut f = vec![Rat::zero()];
    for d in 1..=qmax {
        let num: BigInt = m.degrees().iter().map(|&l| factorial(l * d)).product();
        let den = num_traits::pow(factorial(d), m.n());
        let c = Rat::new(num, den);
        let harmonic: Rat = m
            .degrees()
            .iter()
            .flat_map(|&l| (d + 1..=l * d).map(move |k| Rat::new(l.into(), k.into())))
            .sum();
        f.push(&c * harmonic);
        i0.push(c);
    }
    SmallI {
        i0: QSeries::from_coeffs(i0),
        f: QSeries::from_coeffs(f),
    }
}

/// True when two windowed series agree wherever both are determined.
#[cfg(test)]
pub(crate) fn series_agree<R: Ring>(a: &QSeries<ZLaurent<R>>, b: &QSeries<ZLaurent<R>>) -> bool {
    let order = a.order().min(b.order());
    (0..=order).all(|d| a.coeff(d).agrees_with(b.coeff(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::validate_model;
    use crate::series::{int, rat, ratfn_expand, ExpandMode};

    fn quintic() -> CIModel {
        validate_model(5, &[5]).unwrap()
    }

    /// Numerator and denominator of the `q^d` coefficient as polynomials
    /// in `z` over the cyclotomic ring, multiplied out directly.
    fn degree_term_polys(m: &CIModel, d: usize) -> (Vec<CycloElem>, Vec<CycloElem>) {
        let n = m.n();
        let h = |k: usize, s: Rat| CycloElem::h_pow(n, k, s);
        let mul = |a: &[CycloElem], b: &[CycloElem]| {
            let mut out = vec![CycloElem::zero(n); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] = out[i + j].plus(&x.times(y));
                }
            }
            out
        };
        let mut num = vec![h(0, int(1))];
        for &l in m.degrees() {
            for k in 1..=l * d {
                num = mul(&num, &[h(1, big(l)), h(0, big(k))]);
            }
        }
        let mut den = vec![h(0, int(1))];
        for k in 1..=d {
            let mut p = vec![h(0, int(1))];
            for _ in 0..n {
                p = mul(&p, &[h(1, int(1)), h(0, big(k))]);
            }
            p[0] = p[0].minus(&h(0, int(1)));
            den = mul(&den, &p);
        }
        (num, den)
    }

    #[test]
    fn leading_coefficients() {
        let m = quintic();
        let i = i_underline(&m, 3, 8).unwrap();
        let z0 = i.z0_part().unwrap();
        assert_eq!(z0.coeff(0), &CycloElem::scalar(5, int(1)));
        assert_eq!(z0.coeff(1), &CycloElem::scalar(5, int(120)));
        for d in 0..=3 {
            assert!(z0.coeff(d).as_scalar().is_some());
        }
        let j = i_fixed_point(&m, 3, 4).unwrap();
        assert_eq!(j.series.coeff(0).get(0).unwrap(), int(1));
        assert_eq!(j.series.coeff(1).get(-1).unwrap(), int(625));
    }

    #[test]
    fn matches_direct_rational_expansion() {
        for (n, ds) in [(5usize, vec![5usize]), (6, vec![2, 2, 2]), (6, vec![2, 4])] {
            let m = validate_model(n, &ds).unwrap();
            let depth = 9;
            let i = i_underline(&m, 2, depth).unwrap();
            for d in 1..=2 {
                let (num, den) = degree_term_polys(&m, d);
                let e = ratfn_expand(
                    &num,
                    &den,
                    ExpandMode::InvZ {
                        e_min: -(depth as i32),
                    },
                )
                .unwrap();
                assert_eq!(i.series.coeff(d), &e, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn pole_orders() {
        for (n, ds) in [(5usize, vec![5usize]), (6, vec![3, 3]), (6, vec![2, 2, 2])] {
            let m = validate_model(n, &ds).unwrap();
            let j = i_fixed_point(&m, 8, 3).unwrap();
            for d in 0..=8 {
                let c = j.series.coeff(d);
                assert_eq!(c.e_min(), -(d as i32));
                assert!(!c.coeffs()[0].is_zero(), "pole order at d={d}");
                assert_eq!(c.e_max(), 3);
            }
        }
    }

    #[test]
    fn truncation_stability() {
        let m = validate_model(6, &[3, 3]).unwrap();
        let a = i_underline(&m, 5, 8).unwrap();
        let b = i_underline(&m, 5, 11).unwrap();
        assert!(series_agree(&a.series, &b.series));
        let c = i_fixed_point(&m, 5, 4).unwrap();
        let d = i_fixed_point(&m, 6, 7).unwrap();
        assert!(series_agree(&c.series, &d.series));
    }

    #[test]
    fn both_expansions_reconstruct_the_numerator() {
        // At H = 1 the q^d coefficient is num_d(z) / den_d(z); multiplying
        // either expansion by den_d recovers num_d where determined.
        let m = validate_model(6, &[3, 3]).unwrap();
        let qmax = 2;
        let depth = 16;
        let i = i_underline(&m, qmax, depth).unwrap();
        let j = i_fixed_point(&m, qmax, 16).unwrap();
        for d in 1..=qmax {
            let (num, den) = degree_term_polys(&m, d);
            let num1: Vec<Rat> = num.iter().map(CycloElem::eval_h1).collect();
            let den1: Vec<Rat> = den.iter().map(CycloElem::eval_h1).collect();
            let den_z = ZLaurent::exact(0, den1);
            let at_inf = i.series.coeff(d).map(CycloElem::eval_h1);
            let from_inf = den_z.try_mul(&at_inf).unwrap();
            let from_zero = den_z.try_mul(j.series.coeff(d)).unwrap();
            let mut checked = 0;
            for e in 0..num1.len() as i32 {
                let want = &num1[e as usize];
                if from_inf.is_known(e) {
                    assert_eq!(&from_inf.get(e).unwrap(), want, "infinity, z^{e}");
                    checked += 1;
                }
                if from_zero.is_known(e) {
                    assert_eq!(&from_zero.get(e).unwrap(), want, "zero, z^{e}");
                    checked += 1;
                }
            }
            assert!(checked > num1.len());
        }
    }

    #[test]
    fn small_i_values() {
        let s = small_i(&quintic(), 3);
        assert_eq!(s.i0, QSeries::from_ints(&[1, 120, 113400, 168168000]));
        assert_eq!(s.f.coeff(0), &int(0));
        assert_eq!(s.f.coeff(1), &int(770));
        let harmonic = rat(1, 2) + rat(1, 3) + rat(1, 4) + rat(1, 5);
        assert_eq!(s.f.coeff(1), &(int(120) * int(5) * harmonic));
        let s = small_i(&validate_model(6, &[2, 2, 2]).unwrap(), 2);
        assert_eq!(s.i0.coeff(1), &int(8));
        assert_eq!(s.i0.coeff(2), &int(216));
    }
}
