//! Domain types: rule identifiers, the hidden ground-truth order and the
//! sequence a learner builds up.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{OrderError, Result};

/// Index of a rule in the universe `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RuleId(pub usize);

impl RuleId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `0..n` as rule ids, in id order.
pub fn universe(n: usize) -> Vec<RuleId> {
    (0..n).map(RuleId).collect()
}

/// The hidden strict total order: `rank[id]` is the position of rule `id`
/// in the true sequence. Always a bijection on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroundTruthOrder {
    rank: Vec<usize>,
}

impl GroundTruthOrder {
    /// Builds an order from ranks indexed by rule id, rejecting anything that
    /// is not a permutation of `0..n`.
    pub fn from_ranks(rank: Vec<usize>) -> Result<Self> {
        check_permutation(&rank)?;
        Ok(Self { rank })
    }

    /// Rank equals id.
    pub fn identity(n: usize) -> Self {
        Self {
            rank: (0..n).collect(),
        }
    }

    /// Rule `n - 1` comes first.
    pub fn reversed(n: usize) -> Self {
        Self {
            rank: (0..n).rev().collect(),
        }
    }

    /// Builds the order whose true sequence is `sequence` (first element has
    /// rank 0).
    pub fn from_sequence(sequence: &[RuleId]) -> Result<Self> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, rule) in sequence.iter().enumerate() {
            if rule.0 >= n {
                return Err(OrderError::InvalidPermutation(format!(
                    "rule {rule} outside 0..{n}"
                )));
            }
            if rank[rule.0] != usize::MAX {
                return Err(OrderError::InvalidPermutation(format!(
                    "rule {rule} appears twice"
                )));
            }
            rank[rule.0] = pos;
        }
        Ok(Self { rank })
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Rank of `rule`, or an error if it lies outside the universe.
    pub fn rank(&self, rule: RuleId) -> Result<usize> {
        self.rank
            .get(rule.0)
            .copied()
            .ok_or(OrderError::OutOfUniverse {
                rule,
                universe: self.rank.len(),
            })
    }

    /// The true sequence of rules, lowest rank first.
    pub fn sequence(&self) -> Vec<RuleId> {
        let mut seq = vec![RuleId(0); self.rank.len()];
        for (id, &r) in self.rank.iter().enumerate() {
            seq[r] = RuleId(id);
        }
        seq
    }

    /// True when ranks strictly increase along `seq`. Ids outside the
    /// universe make the answer false.
    pub fn is_sorted(&self, seq: &[RuleId]) -> bool {
        seq.windows(2)
            .all(|w| match (self.rank(w[0]), self.rank(w[1])) {
                (Ok(a), Ok(b)) => a < b,
                _ => false,
            })
            && seq.iter().all(|r| r.0 < self.rank.len())
    }
}

/// Checks that `values` is a permutation of `0..values.len()`.
pub fn check_permutation(values: &[usize]) -> Result<()> {
    let n = values.len();
    let mut seen = vec![false; n];
    for (i, &v) in values.iter().enumerate() {
        if v >= n {
            return Err(OrderError::InvalidPermutation(format!(
                "entry {i} is {v}, outside 0..{n}"
            )));
        }
        if seen[v] {
            return Err(OrderError::InvalidPermutation(format!(
                "value {v} appears more than once"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Sequence built up by a learner. Holds no duplicates and only ids from
/// its universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LearnedSequence {
    seq: Vec<RuleId>,
    present: Vec<bool>,
}

impl LearnedSequence {
    /// Empty sequence over a universe of `n` rules.
    pub fn new(n: usize) -> Self {
        Self {
            seq: Vec::with_capacity(n),
            present: vec![false; n],
        }
    }

    pub fn universe_len(&self) -> usize {
        self.present.len()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn as_slice(&self) -> &[RuleId] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<RuleId> {
        self.seq
    }

    pub fn contains(&self, rule: RuleId) -> bool {
        self.present.get(rule.0).copied().unwrap_or(false)
    }

    /// Fails if `rule` cannot be inserted: outside the universe or already
    /// present.
    pub(crate) fn check_insertable(&self, rule: RuleId) -> Result<()> {
        if rule.0 >= self.present.len() {
            return Err(OrderError::OutOfUniverse {
                rule,
                universe: self.present.len(),
            });
        }
        if self.present[rule.0] {
            return Err(OrderError::DuplicateRule(rule));
        }
        Ok(())
    }

    pub(crate) fn insert_at(&mut self, pos: usize, rule: RuleId) {
        self.seq.insert(pos, rule);
        self.present[rule.0] = true;
    }
}

impl std::ops::Index<usize> for LearnedSequence {
    type Output = RuleId;

    fn index(&self, i: usize) -> &RuleId {
        &self.seq[i]
    }
}

/// How a run is converted into a step count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CostModel {
    /// Steps are oracle queries.
    ComparisonsOnly,
    /// Oracle queries plus one placement step for every rule inserted after
    /// the first. This is the count the closed form `(n^2 - n)/2 + n - 1`
    /// describes for the linear scan.
    ComparisonsPlusPlacement,
}

impl CostModel {
    /// Steps charged for a run over `n` rules that consumed `queries` queries.
    pub fn steps(self, queries: u64, n: usize) -> u64 {
        match self {
            CostModel::ComparisonsOnly => queries,
            CostModel::ComparisonsPlusPlacement => queries + n.saturating_sub(1) as u64,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CostModel::ComparisonsOnly => "comparisons_only",
            CostModel::ComparisonsPlusPlacement => "comparisons_plus_placement",
        }
    }
}

/// Insertion strategy used by a learner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Linear scan from the front, stopping at the first later rule.
    Block,
    /// Binary search over insertion positions.
    Binary,
}

impl Strategy {
    pub const ALL: [Strategy; 2] = [Strategy::Block, Strategy::Binary];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Block => "block",
            Strategy::Binary => "binary",
        }
    }

    /// Cost model used for reporting when none is given: the linear scan is
    /// reported with placements, binary insertion with comparisons only.
    pub fn default_cost_model(self) -> CostModel {
        match self {
            Strategy::Block => CostModel::ComparisonsPlusPlacement,
            Strategy::Binary => CostModel::ComparisonsOnly,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
