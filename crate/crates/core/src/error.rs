use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),

    #[error("{what}: constant term is not a unit")]
    NonUnit { what: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("z^0 part of B_{k} is not a multiple of H^{k} at q^{q_degree}")]
    Proportionality { k: usize, q_degree: usize },

    #[error("normalizing series has vanishing constant term")]
    VanishingNormalizer,

    #[error("nonvanishing w^-{order} term after removing the exponential factor at q^{q_degree}")]
    DeepPole { q_degree: usize, order: usize },

    #[error("not divisible by (x + y): {0}")]
    NotDivisible(String),

    #[error("result changed when the window was enlarged: {0}")]
    TruncationUnstable(String),
}
