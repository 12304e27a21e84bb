//! Sums over the nontrivial `n`-th roots of unity, evaluated exactly
//! through `P(x) = (x^n - 1)/(x - 1) = prod_{zeta != 1} (x - zeta)`.

use num_bigint::BigInt;

use crate::series::Rat;

/// `P(1)` and `P'(1)` from the coefficients `1, 1, ..., 1` of `P`.
fn p_and_derivative_at_one(n: usize) -> (Rat, Rat) {
    let p: BigInt = (0..n).map(|_| BigInt::from(1)).sum();
    let dp: BigInt = (0..n).map(BigInt::from).sum();
    (Rat::from_integer(p), Rat::from_integer(dp))
}

/// `sum_{zeta^n = 1, zeta != 1} 1 / (zeta - 1) = -P'(1) / P(1)`.
pub fn inverse_root_sum(n: usize) -> Rat {
    let (p, dp) = p_and_derivative_at_one(n);
    -dp / p
}

/// `prod_{zeta^n = 1, zeta != 1} (1 - zeta) = P(1)`, the tangent weight at
/// the fixed point with `lambda = 1`.
pub fn tangent_weight(n: usize) -> Rat {
    p_and_derivative_at_one(n).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;
    use std::f64::consts::PI;

    fn roots(n: usize) -> Vec<(f64, f64)> {
        (1..n)
            .map(|k| {
                let t = 2.0 * PI * k as f64 / n as f64;
                (t.cos(), t.sin())
            })
            .collect()
    }

    fn to_f64(r: &Rat) -> f64 {
        let (p, q) = (r.numer().to_string(), r.denom().to_string());
        p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap()
    }

    #[test]
    fn matches_numerical_roots() {
        for n in 2..12 {
            let (mut re, mut im) = (0.0, 0.0);
            let (mut pr, mut pi) = (1.0, 0.0);
            for (a, b) in roots(n) {
                // 1 / (zeta - 1)
                let (x, y) = (a - 1.0, b);
                let norm = x * x + y * y;
                re += x / norm;
                im -= y / norm;
                // (1 - zeta)
                let (u, v) = (1.0 - a, -b);
                let (npr, npi) = (pr * u - pi * v, pr * v + pi * u);
                pr = npr;
                pi = npi;
            }
            assert!((re - to_f64(&inverse_root_sum(n))).abs() < 1e-9, "n = {n}");
            assert!(im.abs() < 1e-9);
            assert!((pr - to_f64(&tangent_weight(n))).abs() < 1e-9);
            assert!(pi.abs() < 1e-9);
        }
        assert_eq!(inverse_root_sum(5), rat(-2, 1));
        assert_eq!(tangent_weight(6), rat(6, 1));
    }

    #[test]
    fn reproduces_the_binomial_coefficient() {
        for n in 2..20 {
            let b = rat((n * (n - 1) / 2) as i64, 1);
            assert_eq!(-Rat::from_integer(n.into()) * inverse_root_sum(n), b);
        }
    }
}
