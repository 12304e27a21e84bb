//! Inputs shared by the benchmarks.

use ellmirror_core::{validate_model, CIModel, QSeries, Rat};
use num_bigint::BigInt;

pub fn quintic() -> CIModel {
    validate_model(5, &[5]).expect("the quintic is a valid model")
}

pub fn two_cubics() -> CIModel {
    validate_model(6, &[3, 3]).expect("(3,3) is a valid model")
}

/// A dense series with large, non-trivial rational coefficients.
pub fn dense_series(len: usize, seed: i64) -> QSeries<Rat> {
    let coeffs = (0..len as i64)
        .map(|k| {
            let num = BigInt::from(seed + 7 * k).pow(6) - BigInt::from(k);
            Rat::new(num, BigInt::from(3 * k + 1))
        })
        .collect();
    QSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_series_has_requested_order() {
        let s = dense_series(10, 3);
        assert_eq!(s.order(), 9);
        assert_eq!(quintic().n(), 5);
        assert_eq!(two_cubics().degrees(), &[3, 3]);
    }
}
