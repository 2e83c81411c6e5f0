use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not an element of the extended rationals")]
    Indeterminate,
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("norm expansion needs p/q > 1 or infinity, got {0}")]
    NormDomain(String),
    #[error("gcd({p}, {q}) = {gcd}, lens space parameters must be coprime")]
    NotCoprime { p: String, q: String, gcd: String },
    #[error("only the last continued-fraction entry may be non-integral")]
    RationalInterior,
    #[error("invalid simple knot K({p},{q},{k}): {reason}")]
    InvalidKnot {
        p: String,
        q: String,
        k: String,
        reason: &'static str,
    },
    #[error("genus undefined for K({p},{q},{k}): {reason}")]
    GenusUndefined {
        p: String,
        q: String,
        k: String,
        reason: &'static str,
    },
    #[error("parameters excluded for {family}: {rule}")]
    Excluded { family: String, rule: String },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
