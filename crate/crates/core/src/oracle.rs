use crate::error::{OrderError, Result};
use crate::order::{GroundTruthOrder, RuleId};

/// Answers "does `a` come before `b`?" against a hidden order and counts
/// every answer it gives.
#[derive(Debug, Clone)]
pub struct CountingOracle {
    order: GroundTruthOrder,
    query_count: u64,
    transcript: Option<Vec<(RuleId, RuleId)>>,
}

impl CountingOracle {
    pub fn new(order: GroundTruthOrder) -> Self {
        Self {
            order,
            query_count: 0,
            transcript: None,
        }
    }

    /// Like [`CountingOracle::new`], but also records every query as an
    /// `(a, b)` pair.
    pub fn with_transcript(order: GroundTruthOrder) -> Self {
        Self {
            transcript: Some(Vec::new()),
            ..Self::new(order)
        }
    }

    /// Returns true iff `a` ranks before `b`. Every successful call counts
    /// as one query; rejected queries are not counted.
    pub fn precedes(&mut self, a: RuleId, b: RuleId) -> Result<bool> {
        if a == b {
            return Err(OrderError::ReflexiveQuery(a));
        }
        let answer = self.order.rank(a)? < self.order.rank(b)?;
        self.query_count += 1;
        if let Some(t) = self.transcript.as_mut() {
            t.push((a, b));
        }
        Ok(answer)
    }

    pub fn query_count(&self) -> u64 {
        self.query_count
    }

    /// Zeroes the counter and clears the transcript, if any.
    pub fn reset(&mut self) {
        self.query_count = 0;
        if let Some(t) = self.transcript.as_mut() {
            t.clear();
        }
    }

    pub fn transcript(&self) -> Option<&[(RuleId, RuleId)]> {
        self.transcript.as_deref()
    }

    /// The hidden order. Learners must not consult it; it is exposed for
    /// verification only.
    pub fn order(&self) -> &GroundTruthOrder {
        &self.order
    }

    pub fn universe_len(&self) -> usize {
        self.order.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_answers_and_counts() {
        let mut oracle = CountingOracle::new(GroundTruthOrder::identity(3));
        assert_eq!(oracle.query_count(), 0);
        assert!(oracle.precedes(RuleId(0), RuleId(1)).unwrap());
        assert_eq!(oracle.query_count(), 1);
        assert!(!oracle.precedes(RuleId(2), RuleId(1)).unwrap());
        assert_eq!(oracle.query_count(), 2);
    }

    #[test]
    fn reversed_order() {
        let mut oracle = CountingOracle::new(GroundTruthOrder::reversed(3));
        assert!(!oracle.precedes(RuleId(0), RuleId(2)).unwrap());
    }

    #[test]
    fn rejects_reflexive_and_foreign_queries_without_counting() {
        let mut oracle = CountingOracle::new(GroundTruthOrder::identity(3));
        assert_eq!(
            oracle.precedes(RuleId(1), RuleId(1)),
            Err(OrderError::ReflexiveQuery(RuleId(1)))
        );
        assert!(matches!(
            oracle.precedes(RuleId(0), RuleId(3)),
            Err(OrderError::OutOfUniverse { .. })
        ));
        assert_eq!(oracle.query_count(), 0);
    }

    #[test]
    fn reset_is_explicit() {
        let mut oracle = CountingOracle::with_transcript(GroundTruthOrder::identity(2));
        oracle.precedes(RuleId(0), RuleId(1)).unwrap();
        oracle.precedes(RuleId(1), RuleId(0)).unwrap();
        assert_eq!(oracle.transcript().unwrap().len(), 2);
        oracle.reset();
        assert_eq!(oracle.query_count(), 0);
        assert!(oracle.transcript().unwrap().is_empty());
    }
}
