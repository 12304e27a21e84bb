//! Exact genus-one generating functions for Calabi-Yau complete
//! intersections `X_{l_1,...,l_r}` in `P^{n-1}`.
//!
//! Everything is computed over the rationals with no rounding. The
//! pipeline runs from the hypergeometric I-function through its Birkhoff
//! normalization constants `C_k(q)` and the fixed-point asymptotics
//! `mu(q)`, `R_k(q)` to the elliptic quasimap series, the wall-crossing
//! correction and the Gromov-Witten series in the flat coordinate.
//! The [`verify`] module certifies the intermediate identities as exact
//! series equalities.
//!
//! ```
//! use ellmirror_core::{gw_g1, validate_model};
//!
//! let quintic = validate_model(5, &[5]).unwrap();
//! let report = gw_g1(&quintic, 2).unwrap();
//! assert_eq!(report.invariants_table[0].1.to_string(), "2875/12");
//! ```

pub mod asymptotics;
pub mod birkhoff;
pub mod elliptic;
pub mod error;
pub mod geometry;
pub mod ifunction;
pub mod series;
pub mod verify;

pub use asymptotics::{closed_forms, extract_asymptotics, AsymptoticData, ClosedForms};
pub use birkhoff::{compute_ck, frak_b, s_series, BirkhoffData};
pub use elliptic::{
    gw_g1, gw_g1_with, invert_map, mirror_map, quasimap_g1, wall_correction, zinger_rhs, G1Report,
    MirrorMap,
};
pub use error::{Error, Result};
pub use geometry::{chern_data, validate_model, CIModel, ChernData};
pub use ifunction::{
    i_fixed_point, i_underline, small_i, IFixedPoint, IUnderline, SmallI, Windows,
};
pub use series::{
    qs_arith, ratfn_expand, ArithOp, BiLaurent, CycloElem, ExpandMode, QSeries, Rat, Ring,
    Truncation, ZLaurent,
};
pub use verify::{
    assembly_check, loop_limit_check, pf_check, popa_check, Failure, Suite, VerifyOutcome,
};
