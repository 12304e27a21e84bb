//! Exact certification of the intermediate identities of the pipeline.
//!
//! Each check returns a [`VerifyOutcome`]; an identity that fails is an
//! outcome with `first_failure` set, while missing precision or malformed
//! input is an [`Error`](crate::Error).

mod assembly;
mod loop_limit;
mod pf;
mod popa;
pub mod roots;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::asymptotics::{extract_asymptotics, AsymptoticData};
use crate::birkhoff::{compute_ck, BirkhoffData};
use crate::error::{Error, Result};
use crate::geometry::CIModel;
use crate::ifunction::{i_fixed_point, i_underline, IFixedPoint, Windows};
use crate::series::{QSeries, Rat};

pub use assembly::{assembly_check, loop_series};
pub use loop_limit::loop_limit_check;
pub use pf::pf_check;
pub use popa::popa_check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Pf,
    Popa,
    Loop,
    Assembly,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Pf, Suite::Popa, Suite::Loop, Suite::Assembly];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Pf => "pf",
            Suite::Popa => "popa",
            Suite::Loop => "loop",
            Suite::Assembly => "assembly",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}` (expected pf, popa, loop or assembly)"))
    }
}

/// The first coefficient at which an identity failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub q_degree: usize,
    /// Which identity and, where relevant, which `z`, `x` or `y` exponent.
    pub location: String,
    pub lhs: String,
    pub rhs: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub suite: Suite,
    pub model: CIModel,
    pub q_order: usize,
    /// Number of individual coefficient identities compared.
    pub checks: usize,
    pub first_failure: Option<Failure>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Collects comparisons, keeping the first failure.
pub(crate) struct Recorder {
    suite: Suite,
    model: CIModel,
    q_order: usize,
    checks: usize,
    first_failure: Option<Failure>,
}

impl Recorder {
    pub(crate) fn new(suite: Suite, model: &CIModel, q_order: usize) -> Self {
        Self {
            suite,
            model: model.clone(),
            q_order,
            checks: 0,
            first_failure: None,
        }
    }

    /// Records one comparison; returns whether it held.
    pub(crate) fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        q_degree: usize,
        location: impl Into<String>,
        lhs: &T,
        rhs: &T,
        reason: &str,
    ) -> bool {
        self.checks += 1;
        let ok = lhs == rhs;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                q_degree,
                location: location.into(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                reason: reason.into(),
            });
        }
        ok
    }

    pub(crate) fn fail(&mut self, q_degree: usize, location: impl Into<String>, reason: String) {
        self.checks += 1;
        if self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                q_degree,
                location: location.into(),
                lhs: String::new(),
                rhs: String::new(),
                reason,
            });
        }
    }

    /// Compares two scalar series coefficient by coefficient up to the
    /// recorder's order.
    pub(crate) fn compare_series(
        &mut self,
        location: &str,
        lhs: &QSeries<Rat>,
        rhs: &QSeries<Rat>,
        reason: &str,
    ) {
        for d in 0..=self.q_order {
            if !self.compare(d, location, lhs.coeff(d), rhs.coeff(d), reason) {
                return;
            }
        }
    }

    pub(crate) fn finish(self) -> VerifyOutcome {
        VerifyOutcome {
            suite: self.suite,
            model: self.model,
            q_order: self.q_order,
            checks: self.checks,
            first_failure: self.first_failure,
        }
    }
}

pub(crate) fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Birkhoff constants and fixed-point asymptotics for one model, computed
/// twice with windows two apart and required to agree.
pub(crate) struct Inputs {
    pub bd: BirkhoffData,
    pub fixed: IFixedPoint,
    pub ad: AsymptoticData,
}

pub(crate) fn stable_inputs(
    m: &CIModel,
    qmax: usize,
    w_max: usize,
    k_max: usize,
) -> Result<Inputs> {
    let base = Windows {
        z_depth: qmax + m.n(),
        w_max,
    };
    let run = |w: Windows| -> Result<Inputs> {
        let bd = compute_ck(&i_underline(m, qmax, w.z_depth)?)?;
        let fixed = i_fixed_point(m, qmax, w.w_max)?;
        let ad = extract_asymptotics(&fixed, k_max)?;
        Ok(Inputs { bd, fixed, ad })
    };
    let a = run(base)?;
    let b = run(base.enlarged(2))?;
    if a.bd != b.bd || a.ad != b.ad {
        return Err(Error::TruncationUnstable(
            "Birkhoff constants or asymptotics depend on the windows".into(),
        ));
    }
    Ok(a)
}

/// Runs the requested suites on one model. `loop_qmax` bounds the order of
/// the loop and assembly checks.
pub fn run_suites(
    m: &CIModel,
    suites: &[Suite],
    qmax: usize,
    loop_qmax: usize,
) -> Result<Vec<VerifyOutcome>> {
    let mut out = Vec::with_capacity(suites.len());
    for &s in suites {
        let outcome = match s {
            Suite::Pf => {
                let i = i_underline(m, qmax, qmax + 2 * m.n())?;
                pf_check(&i, m)?
            }
            Suite::Popa => {
                let inp = stable_inputs(m, qmax, qmax + 2, 0)?;
                popa_check(&inp.bd, &inp.ad, m)?
            }
            Suite::Loop => loop_limit_check(m, loop_qmax)?,
            Suite::Assembly => assembly_check(m, loop_qmax)?,
        };
        out.push(outcome);
    }
    Ok(out)
}
