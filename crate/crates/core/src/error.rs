use thiserror::Error;

/// Errors raised by construction and by operations whose preconditions fail.
///
/// Failures of an identity are never errors: they are reported through
/// [`crate::report::Report`] with `pass = false`.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("cover relation contains a cycle: {}", .0.join(" < "))]
    Cycle(Vec<String>),

    #[error("`{lo}` is not below `{hi}`")]
    NotComparable { lo: String, hi: String },

    #[error("not a lattice: `{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),

    #[error("not ranked: maximal chains from 0 to `{hi}` through `{via}` have unequal lengths")]
    NotRanked { via: String, hi: String },

    #[error("size guard exceeded: {what} would need {estimate} (limit {limit})")]
    SizeGuard {
        what: &'static str,
        estimate: u128,
        limit: u128,
    },

    #[error("{0} out of range")]
    OutOfRange(&'static str),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse {
        line: usize,
        column: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Reads `MOBIUSLAB_MAX_ELEMENTS`, which overrides every size guard.
///
/// Raising it is unsafe in the sense that dense structures grow
/// quadratically and enumeration exponentially.
pub fn guard_override() -> Option<u128> {
    std::env::var("MOBIUSLAB_MAX_ELEMENTS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
}

/// Fails fast when `estimate` exceeds `limit` (or the env override).
pub fn check_guard(what: &'static str, estimate: u128, limit: u128) -> Result<()> {
    let limit = guard_override().unwrap_or(limit);
    if estimate > limit {
        return Err(Error::SizeGuard {
            what,
            estimate,
            limit,
        });
    }
    Ok(())
}
