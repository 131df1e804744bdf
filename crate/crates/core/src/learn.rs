//! Online learners. Rules arrive one at a time and each is placed into the
//! sequence learned so far by asking the oracle precedence questions.

use crate::error::{OrderError, Result};
use crate::oracle::CountingOracle;
use crate::order::{CostModel, LearnedSequence, RuleId, Strategy};

/// Inserts `x` by scanning from the front and stopping at the first rule it
/// precedes. Rules past that point are known to follow `x` by transitivity
/// and are never queried. If no rule is preceded, `x` is appended.
///
/// Returns the insertion position.
pub fn block_insert(
    seq: &mut LearnedSequence,
    x: RuleId,
    oracle: &mut CountingOracle,
) -> Result<usize> {
    seq.check_insertable(x)?;
    debug_assert!(
        oracle.order().is_sorted(seq.as_slice()),
        "learned sequence is not sorted by rank"
    );
    let mut pos = seq.len();
    for (j, &y) in seq.as_slice().iter().enumerate() {
        if oracle.precedes(x, y)? {
            pos = j;
            break;
        }
    }
    seq.insert_at(pos, x);
    Ok(pos)
}

/// Inserts `x` by binary search over the insertion positions `[lo, hi)`,
/// probing `mid = (lo + hi) / 2`. Inserting into `m` rules costs at most
/// `ceil(log2(m + 1))` queries.
///
/// Returns the insertion position.
pub fn binary_insert(
    seq: &mut LearnedSequence,
    x: RuleId,
    oracle: &mut CountingOracle,
) -> Result<usize> {
    seq.check_insertable(x)?;
    debug_assert!(
        oracle.order().is_sorted(seq.as_slice()),
        "learned sequence is not sorted by rank"
    );
    let (mut lo, mut hi) = (0, seq.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if oracle.precedes(x, seq[mid])? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    seq.insert_at(lo, x);
    Ok(lo)
}

/// Inserts `x` with the given strategy.
pub fn insert(
    strategy: Strategy,
    seq: &mut LearnedSequence,
    x: RuleId,
    oracle: &mut CountingOracle,
) -> Result<usize> {
    match strategy {
        Strategy::Block => block_insert(seq, x, oracle),
        Strategy::Binary => binary_insert(seq, x, oracle),
    }
}

/// Result of learning a full order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Learned {
    pub sequence: LearnedSequence,
    /// Oracle queries consumed by this run.
    pub queries: u64,
    /// Queries converted to steps by the cost model.
    pub steps: u64,
}

/// Learns the oracle's order by inserting the rules of `presentation` one at
/// a time, in the order given.
///
/// Queries are counted from the oracle's state at entry, so a shared oracle
/// does not need resetting between runs.
pub fn learn_order(
    presentation: &[RuleId],
    oracle: &mut CountingOracle,
    strategy: Strategy,
    model: CostModel,
) -> Result<Learned> {
    if presentation.is_empty() {
        return Err(OrderError::EmptyUniverse);
    }
    let start = oracle.query_count();
    let mut sequence = LearnedSequence::new(oracle.universe_len());
    for &rule in presentation {
        insert(strategy, &mut sequence, rule, oracle)?;
    }
    let queries = oracle.query_count() - start;
    Ok(Learned {
        steps: model.steps(queries, presentation.len()),
        sequence,
        queries,
    })
}
