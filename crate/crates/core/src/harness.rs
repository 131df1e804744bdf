//! Experiment harness: builds instances, runs the learners against fresh
//! counting oracles and compares what they spend with the predictors.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{OrderError, Result};
use crate::learn::learn_order;
use crate::oracle::CountingOracle;
use crate::order::{check_permutation, universe, CostModel, GroundTruthOrder, RuleId, Strategy};
use crate::predict;

/// Largest `n` for which every ground truth is enumerated.
pub const EXHAUSTIVE_CAP: usize = 8;
/// Largest `n` for which ground truths and presentation orders are both
/// enumerated.
pub const EXHAUSTIVE_CAP_WITH_PRESENTATION: usize = 5;

/// Name of the generator behind seeded instances: ChaCha8 seeded with
/// `seed_from_u64`, ranks then presentation shuffled with rand 0.8's
/// Fisher-Yates `SliceRandom::shuffle`.
pub const GENERATOR: &str = "chacha8-seed_from_u64+fisher-yates(rand-0.8)";

/// Steps per day behind the duration columns of the results table.
pub const STEPS_PER_DAY: f64 = 2.0;

/// Where an instance came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Identity,
    Adversarial,
    Permutation,
    Seeded { seed: u64, trial: u64 },
    Exhaustive { case: u64 },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Identity => f.write_str("identity"),
            Provenance::Adversarial => f.write_str("adversarial"),
            Provenance::Permutation => f.write_str("permutation"),
            Provenance::Seeded { seed, trial } => write!(f, "seed:{seed}:trial:{trial}"),
            Provenance::Exhaustive { case } => write!(f, "case:{case}"),
        }
    }
}

/// One learner run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialResult {
    pub strategy: Strategy,
    pub n: usize,
    pub cost_model: CostModel,
    pub queries: u64,
    pub steps: u64,
    /// Learned sequence equals the ground truth.
    pub correct: bool,
    pub provenance: Provenance,
}

/// Query ceiling for a full run: `n(n-1)/2` for the linear scan, `B(n)` for
/// binary insertion.
pub fn query_ceiling(strategy: Strategy, n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    let n = n as u64;
    match strategy {
        Strategy::Block => predict::block_comparisons(n),
        Strategy::Binary => predict::binary_steps(n),
    }
    .expect("n >= 1")
}

/// Runs one learner against a fresh oracle.
pub fn run_trial(
    strategy: Strategy,
    ground_truth: &GroundTruthOrder,
    presentation: &[RuleId],
    model: CostModel,
    provenance: Provenance,
) -> Result<TrialResult> {
    let n = ground_truth.len();
    if n == 0 {
        return Err(OrderError::EmptyUniverse);
    }
    if presentation.len() != n {
        return Err(OrderError::InvalidPermutation(format!(
            "presentation order has {} rules, ground truth has {n}",
            presentation.len()
        )));
    }
    let ids: Vec<usize> = presentation.iter().map(|r| r.0).collect();
    check_permutation(&ids)?;

    let mut oracle = CountingOracle::new(ground_truth.clone());
    let learned = learn_order(presentation, &mut oracle, strategy, model)?;
    Ok(TrialResult {
        strategy,
        n,
        cost_model: model,
        queries: learned.queries,
        steps: learned.steps,
        correct: learned.sequence.as_slice() == ground_truth.sequence().as_slice(),
        provenance,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Adversarial,
}

impl SearchMode {
    pub fn name(self) -> &'static str {
        match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Adversarial => "adversarial",
        }
    }
}

/// Most expensive instance found for one strategy and size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WorstCaseReport {
    pub strategy: Strategy,
    pub n: usize,
    pub cost_model: CostModel,
    pub mode: SearchMode,
    pub max_queries: u64,
    pub max_steps: u64,
    /// First instance, in lexicographic enumeration order, reaching the
    /// maximum.
    pub ground_truth: GroundTruthOrder,
    pub presentation: Vec<RuleId>,
    pub instances: u64,
    pub all_correct: bool,
}

/// Enumerates every ground truth over `0..n` (and, if `vary_presentation`,
/// every presentation order) and keeps the most expensive run.
pub fn exhaustive_worst_case(
    n: usize,
    strategy: Strategy,
    model: CostModel,
    vary_presentation: bool,
) -> Result<WorstCaseReport> {
    let cap = if vary_presentation {
        EXHAUSTIVE_CAP_WITH_PRESENTATION
    } else {
        EXHAUSTIVE_CAP
    };
    if n > cap {
        return Err(OrderError::SizeCap {
            n,
            cap,
            vary_presentation,
        });
    }
    if n == 0 {
        return Err(OrderError::EmptyUniverse);
    }

    let presentations: Vec<Vec<RuleId>> = if vary_presentation {
        universe(n).into_iter().permutations(n).collect()
    } else {
        vec![universe(n)]
    };

    let mut best: Option<WorstCaseReport> = None;
    let mut case = 0u64;
    let mut all_correct = true;
    for ranks in (0..n).permutations(n) {
        let truth = GroundTruthOrder::from_ranks(ranks)?;
        for presentation in &presentations {
            let trial = run_trial(
                strategy,
                &truth,
                presentation,
                model,
                Provenance::Exhaustive { case },
            )?;
            case += 1;
            all_correct &= trial.correct;
            if best.as_ref().is_none_or(|b| trial.queries > b.max_queries) {
                best = Some(WorstCaseReport {
                    strategy,
                    n,
                    cost_model: model,
                    mode: SearchMode::Exhaustive,
                    max_queries: trial.queries,
                    max_steps: trial.steps,
                    ground_truth: truth.clone(),
                    presentation: presentation.clone(),
                    instances: 0,
                    all_correct: true,
                });
            }
        }
    }
    let mut report = best.expect("n >= 1 yields at least one instance");
    report.instances = case;
    report.all_correct = all_correct;
    Ok(report)
}

/// Comparisons binary insertion spends placing a rule whose true position
/// among `m` sorted rules is `target`.
pub fn binary_search_depth(m: usize, target: usize) -> u32 {
    let (mut lo, mut hi, mut depth) = (0, m, 0);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        depth += 1;
        if target <= mid {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    depth
}

/// Builds an instance on which `strategy` spends its worst-case count.
/// Rules are presented in id order.
///
/// For the linear scan, ground truth equals presentation order so every rule
/// is appended after a full scan. For binary insertion each new rule is given
/// the first position of maximal search depth among the rules placed so far.
pub fn adversarial_ground_truth(n: usize, strategy: Strategy) -> (GroundTruthOrder, Vec<RuleId>) {
    let presentation = universe(n);
    let truth = match strategy {
        Strategy::Block => GroundTruthOrder::identity(n),
        Strategy::Binary => {
            let mut sequence: Vec<RuleId> = Vec::with_capacity(n);
            for id in 0..n {
                let m = sequence.len();
                let target = (0..=m)
                    .rev()
                    .max_by_key(|&p| binary_search_depth(m, p))
                    .expect("m + 1 candidate positions");
                sequence.insert(target, RuleId(id));
            }
            GroundTruthOrder::from_sequence(&sequence).expect("sequence holds 0..n once")
        }
    };
    (truth, presentation)
}

/// Runs the learner on its adversarial instance.
pub fn adversarial_worst_case(
    n: usize,
    strategy: Strategy,
    model: CostModel,
) -> Result<WorstCaseReport> {
    let (truth, presentation) = adversarial_ground_truth(n, strategy);
    let trial = run_trial(
        strategy,
        &truth,
        &presentation,
        model,
        Provenance::Adversarial,
    )?;
    Ok(WorstCaseReport {
        strategy,
        n,
        cost_model: model,
        mode: SearchMode::Adversarial,
        max_queries: trial.queries,
        max_steps: trial.steps,
        ground_truth: truth,
        presentation,
        instances: 1,
        all_correct: trial.correct,
    })
}

/// Settings for a batch of seeded random trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomTrials {
    pub n: usize,
    pub strategy: Strategy,
    pub trials: u64,
    pub seed: u64,
    pub model: CostModel,
    /// Shuffle the presentation order too, instead of presenting in id order.
    pub shuffle_presentation: bool,
}

/// Ground truth and presentation order for one seeded trial. Draws from
/// `rng` in a fixed sequence: ranks first, then (optionally) presentation.
pub fn random_instance(
    n: usize,
    shuffle_presentation: bool,
    rng: &mut ChaCha8Rng,
) -> (GroundTruthOrder, Vec<RuleId>) {
    let mut ranks: Vec<usize> = (0..n).collect();
    ranks.shuffle(rng);
    let mut presentation = universe(n);
    if shuffle_presentation {
        presentation.shuffle(rng);
    }
    (
        GroundTruthOrder::from_ranks(ranks).expect("shuffled identity"),
        presentation,
    )
}

impl RandomTrials {
    /// Runs every trial, in order.
    pub fn run(&self) -> Result<Vec<TrialResult>> {
        if self.trials == 0 {
            return Err(OrderError::Domain("trials must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.trials)
            .map(|trial| {
                let (truth, presentation) =
                    random_instance(self.n, self.shuffle_presentation, &mut rng);
                run_trial(
                    self.strategy,
                    &truth,
                    &presentation,
                    self.model,
                    Provenance::Seeded {
                        seed: self.seed,
                        trial,
                    },
                )
            })
            .collect()
    }

    /// Runs every trial and reduces the results.
    pub fn summarize(&self) -> Result<RandomSummary> {
        let results = self.run()?;
        Ok(RandomSummary::from_results(self, &results))
    }
}

/// Aggregate of a random-trial batch. The reduction does not depend on the
/// order of `results`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandomSummary {
    pub n: usize,
    pub strategy: Strategy,
    pub cost_model: CostModel,
    pub trials: u64,
    pub seed: u64,
    pub generator: &'static str,
    pub min_queries: u64,
    pub max_queries: u64,
    pub mean_queries: f64,
    pub ceiling: u64,
    pub all_correct: bool,
}

impl RandomSummary {
    fn from_results(cfg: &RandomTrials, results: &[TrialResult]) -> Self {
        let total: u64 = results.iter().map(|t| t.queries).sum();
        Self {
            n: cfg.n,
            strategy: cfg.strategy,
            cost_model: cfg.model,
            trials: cfg.trials,
            seed: cfg.seed,
            generator: GENERATOR,
            min_queries: results.iter().map(|t| t.queries).min().unwrap_or(0),
            max_queries: results.iter().map(|t| t.queries).max().unwrap_or(0),
            mean_queries: total as f64 / results.len().max(1) as f64,
            ceiling: query_ceiling(cfg.strategy, cfg.n),
            all_correct: results.iter().all(|t| t.correct),
        }
    }

    pub fn within_ceiling(&self) -> bool {
        self.max_queries <= self.ceiling
    }
}

/// One row of the comparison table: counts for both learners at one `n` and
/// the time they take at [`STEPS_PER_DAY`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PaperTableRow {
    pub n: u64,
    #[serde(serialize_with = "predict::serialize_decimal")]
    pub naive: BigUint,
    pub s_n: u64,
    pub b_n: u64,
    pub speedup: f64,
    pub block_years: f64,
    pub binary_years: f64,
}

/// Sizes shown in the comparison table.
pub const TABLE_SIZES: [u64; 2] = [27, 1000];

pub fn table_row(n: u64) -> Result<PaperTableRow> {
    let s_n = predict::block_steps_exact(n)?;
    let b_n = predict::binary_steps(n)?;
    Ok(PaperTableRow {
        n,
        naive: predict::naive_steps(n)?,
        s_n,
        b_n,
        speedup: predict::speedup(n)?,
        block_years: predict::learning_duration(s_n, STEPS_PER_DAY)?,
        binary_years: predict::learning_duration(b_n, STEPS_PER_DAY)?,
    })
}

/// The comparison table for n = 27 and n = 1000.
pub fn reproduce_paper_table() -> Vec<PaperTableRow> {
    TABLE_SIZES
        .iter()
        .map(|&n| table_row(n).expect("table sizes are >= 2"))
        .collect()
}
