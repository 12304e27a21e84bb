use ellmirror_core::{CIModel, Rat, VerifyOutcome};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::args::{Format, What};
use crate::CliError;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `r` rounded half away from zero to `digits` places after the point.
pub fn decimal(r: &Rat, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let num: BigInt = r.numer().abs() * &scale * 2 + r.denom();
    let (scaled, _) = num.div_rem(&(r.denom() * 2));
    let sign = if r.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    let s = format!("{:0>width$}", scaled.to_string(), width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

fn model_json(m: &CIModel) -> Value {
    json!({ "n": m.n(), "degrees": m.degrees() })
}

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(Rat::to_string).collect()
}

fn decimals(v: &[Rat], k: usize) -> Vec<String> {
    v.iter().map(|r| decimal(r, k)).collect()
}

fn to_json(v: &Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Encode(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn to_csv(rows: Vec<Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row)
            .map_err(|e| CliError::Encode(e.to_string()))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Encode(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Encode(e.to_string()))
}

/// Series component names: `C_k` for the Birkhoff constants, otherwise the
/// selector itself.
fn component_name(what: What, k: usize) -> String {
    match what {
        What::Ck => format!("C_{k}"),
        _ => what.name().to_string(),
    }
}

pub fn series(
    m: &CIModel,
    qmax: usize,
    what: What,
    comps: &[Vec<Rat>],
    format: Format,
    digits: Option<usize>,
) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let exact: Vec<Value> = comps.iter().map(|c| json!(strings(c))).collect();
            let series = match what {
                What::Ck => Value::Array(exact),
                _ => exact[0].clone(),
            };
            let mut v = json!({
                "model": model_json(m),
                "qmax": qmax,
                "what": what.name(),
                "series": series,
                "version": VERSION,
            });
            if let Some(k) = digits {
                let approx: Vec<Value> = comps.iter().map(|c| json!(decimals(c, k))).collect();
                v["approx_decimal"] = match what {
                    What::Ck => Value::Array(approx),
                    _ => approx[0].clone(),
                };
                v["approx_digits"] = json!(k);
            }
            to_json(&v)
        }
        Format::Csv => {
            let mut header = vec!["series".into(), "degree".into(), "value".into()];
            if digits.is_some() {
                header.push("approx_decimal".into());
            }
            let mut rows = vec![header];
            for (k, c) in comps.iter().enumerate() {
                for (d, r) in c.iter().enumerate() {
                    let mut row = vec![component_name(what, k), d.to_string(), r.to_string()];
                    if let Some(k) = digits {
                        row.push(decimal(r, k));
                    }
                    rows.push(row);
                }
            }
            to_csv(rows)
        }
    }
}

pub fn outcomes(
    m: &CIModel,
    qmax: usize,
    loop_qmax: usize,
    outs: &[VerifyOutcome],
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let list: Vec<Value> = outs
                .iter()
                .map(|o| {
                    let failure = o.first_failure.as_ref().map(|f| {
                        json!({
                            "q_degree": f.q_degree,
                            "location": f.location,
                            "lhs": f.lhs,
                            "rhs": f.rhs,
                            "reason": f.reason,
                        })
                    });
                    json!({
                        "suite": o.suite.name(),
                        "q_order": o.q_order,
                        "passed": o.passed(),
                        "checks": o.checks,
                        "first_failure": failure,
                    })
                })
                .collect();
            let suites: Vec<&str> = outs.iter().map(|o| o.suite.name()).collect();
            to_json(&json!({
                "model": model_json(m),
                "qmax": qmax,
                "loop_qmax": loop_qmax,
                "suites": suites,
                "outcomes": list,
                "passed": outs.iter().all(VerifyOutcome::passed),
                "version": VERSION,
            }))
        }
        Format::Csv => {
            let mut rows = vec![[
                "suite",
                "q_order",
                "passed",
                "checks",
                "failure_q_degree",
                "failure_location",
                "failure_lhs",
                "failure_rhs",
                "failure_reason",
            ]
            .map(String::from)
            .to_vec()];
            for o in outs {
                let mut row = vec![
                    o.suite.name().to_string(),
                    o.q_order.to_string(),
                    o.passed().to_string(),
                    o.checks.to_string(),
                ];
                match &o.first_failure {
                    Some(f) => row.extend([
                        f.q_degree.to_string(),
                        f.location.clone(),
                        f.lhs.clone(),
                        f.rhs.clone(),
                        f.reason.clone(),
                    ]),
                    None => row.extend(std::iter::repeat_n(String::new(), 5)),
                }
                rows.push(row);
            }
            to_csv(rows)
        }
    }
}

pub fn table(
    m: &CIModel,
    qmax: usize,
    entries: &[(usize, Rat)],
    format: Format,
    digits: Option<usize>,
) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let rows: Vec<Value> = entries
                .iter()
                .map(|(d, v)| {
                    let mut row = json!({ "degree": d, "n1": v.to_string() });
                    if let Some(k) = digits {
                        row["approx_decimal"] = json!(decimal(v, k));
                    }
                    row
                })
                .collect();
            to_json(&json!({
                "model": model_json(m),
                "qmax": qmax,
                "what": "n1",
                "table": rows,
                "version": VERSION,
            }))
        }
        Format::Csv => {
            let mut header = vec!["degree".to_string(), "n1".to_string()];
            if digits.is_some() {
                header.push("approx_decimal".into());
            }
            let mut rows = vec![header];
            for (d, v) in entries {
                let mut row = vec![d.to_string(), v.to_string()];
                if let Some(k) = digits {
                    row.push(decimal(v, k));
                }
                rows.push(row);
            }
            to_csv(rows)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rat {
        Rat::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn decimal_rounds_half_away_from_zero() {
        assert_eq!(decimal(&r(2875, 12), 3), "239.583");
        assert_eq!(decimal(&r(1, 8), 2), "0.13");
        assert_eq!(decimal(&r(-1, 8), 2), "-0.13");
        assert_eq!(decimal(&r(-1, 1000), 2), "0.00");
        assert_eq!(decimal(&r(7, 2), 0), "4");
        assert_eq!(decimal(&r(120, 1), 1), "120.0");
    }

    #[test]
    fn csv_quotes_nothing_for_plain_values() {
        let s = to_csv(vec![vec!["a".into(), "1/2".into()]]).unwrap();
        assert_eq!(s, "a,1/2\n");
    }
}
