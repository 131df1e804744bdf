use thiserror::Error;

use crate::order::RuleId;

/// Errors raised by the learners, predictors and experiment harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    /// A precedence query compared a rule with itself. Strict orders have no
    /// reflexive answer.
    #[error("invalid query: rule {0} compared with itself")]
    ReflexiveQuery(RuleId),

    #[error("rule {rule} is outside the universe of {universe} rules")]
    OutOfUniverse { rule: RuleId, universe: usize },

    #[error("rule {0} is already in the learned sequence")]
    DuplicateRule(RuleId),

    #[error("cannot learn an order over an empty universe")]
    EmptyUniverse,

    /// Argument outside the domain of a formula (n = 0, non-positive rate, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// Exhaustive search requested above the enumeration cap.
    #[error("n = {n} exceeds the exhaustive search cap of {cap}{}", if *.vary_presentation { " when presentation orders are also enumerated" } else { "" })]
    SizeCap {
        n: usize,
        cap: usize,
        vary_presentation: bool,
    },
}

pub type Result<T, E = OrderError> = std::result::Result<T, E>;
