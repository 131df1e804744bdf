//! `rule-order`: step-count predictors, learners, worst-case search and the
//! comparison table.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 internal invariant
//! violation (a learner produced a wrong order, or a report failed its own
//! checks).

mod permutation;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rule_order::harness::{
    self, adversarial_ground_truth, adversarial_worst_case, exhaustive_worst_case, random_instance,
    run_trial, Provenance, TrialResult, WorstCaseReport,
};
use rule_order::predict::{self, format_scientific, ComplexityReport};
use rule_order::{universe, CostModel, GroundTruthOrder, OrderError, RuleId, Strategy};

use crate::render::{Cell, Format, Record};

#[derive(Debug, Parser)]
#[command(
    name = "rule-order",
    version,
    about = "Learn a hidden total order from precedence queries and count the cost"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form step counts for n rules.
    Predict {
        #[arg(long = "n", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Run one learner against a counting oracle.
    Learn {
        #[arg(long = "n", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        /// Shuffle the ground truth with this seed.
        #[arg(long, conflicts_with_all = ["permutation", "adversarial"])]
        seed: Option<u64>,
        /// Ranks by rule id, inline (`2,0,1`) or as a path to a one-line file.
        #[arg(long, conflicts_with = "adversarial")]
        permutation: Option<String>,
        /// Use the strategy's worst-case instance.
        #[arg(long)]
        adversarial: bool,
        /// Also shuffle the presentation order (needs --seed).
        #[arg(long, requires = "seed")]
        shuffle_presentation: bool,
        /// Defaults to comparisons-plus-placement for block, comparisons for binary.
        #[arg(long, value_enum)]
        cost_model: Option<CostModelArg>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Largest step count over all instances, or on the adversarial instance.
    WorstCase {
        #[arg(long = "n", value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Exhaustive mode: also enumerate presentation orders.
        #[arg(long)]
        vary_presentation: bool,
        #[arg(long, value_enum)]
        cost_model: Option<CostModelArg>,
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
    /// Naive, linear-scan and binary counts side by side for n = 27 and 1000.
    Table {
        #[arg(long, value_enum, default_value_t = Format::Human)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Block,
    Binary,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Block => Strategy::Block,
            StrategyArg::Binary => Strategy::Binary,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CostModelArg {
    #[value(name = "comparisons", alias = "comparisons-only")]
    Comparisons,
    ComparisonsPlusPlacement,
}

impl From<CostModelArg> for CostModel {
    fn from(c: CostModelArg) -> Self {
        match c {
            CostModelArg::Comparisons => CostModel::ComparisonsOnly,
            CostModelArg::ComparisonsPlusPlacement => CostModel::ComparisonsPlusPlacement,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Adversarial,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<OrderError> for Failure {
    fn from(e: OrderError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Predict { n, format } => {
            let report = predict::report(n)?;
            report.check().map_err(Failure::Internal)?;
            Ok(render::single(&predict_record(&report), format))
        }
        Command::Learn {
            n,
            strategy,
            seed,
            permutation,
            adversarial,
            shuffle_presentation,
            cost_model,
            format,
        } => {
            let strategy = Strategy::from(strategy);
            let model = cost_model.map_or(strategy.default_cost_model(), CostModel::from);
            let n = to_usize(n)?;
            let (truth, presentation, provenance) = if let Some(seed) = seed {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let (truth, pres) = random_instance(n, shuffle_presentation, &mut rng);
                (truth, pres, Provenance::Seeded { seed, trial: 0 })
            } else if let Some(source) = permutation {
                let ranks = permutation::load(&source, n).map_err(Failure::Input)?;
                (
                    GroundTruthOrder::from_ranks(ranks)?,
                    universe(n),
                    Provenance::Permutation,
                )
            } else if adversarial {
                let (truth, pres) = adversarial_ground_truth(n, strategy);
                (truth, pres, Provenance::Adversarial)
            } else {
                (
                    GroundTruthOrder::identity(n),
                    universe(n),
                    Provenance::Identity,
                )
            };
            let trial = run_trial(strategy, &truth, &presentation, model, provenance)?;
            if !trial.correct {
                return Err(Failure::Internal(format!(
                    "learned order differs from the ground truth ({})",
                    trial.provenance
                )));
            }
            Ok(render::single(&trial_record(&trial), format))
        }
        Command::WorstCase {
            n,
            strategy,
            mode,
            vary_presentation,
            cost_model,
            format,
        } => {
            let strategy = Strategy::from(strategy);
            let model = cost_model.map_or(strategy.default_cost_model(), CostModel::from);
            let n = to_usize(n)?;
            let report = match mode {
                ModeArg::Exhaustive => {
                    exhaustive_worst_case(n, strategy, model, vary_presentation)?
                }
                ModeArg::Adversarial => adversarial_worst_case(n, strategy, model)?,
            };
            if !report.all_correct {
                return Err(Failure::Internal(
                    "a learner produced a wrong order during the search".into(),
                ));
            }
            Ok(render::single(&worst_case_record(&report), format))
        }
        Command::Table { format } => {
            let rows: Vec<Record> = harness::reproduce_paper_table()
                .iter()
                .map(table_record)
                .collect();
            Ok(render::table(&rows, format, |key, cell| {
                match (key, cell) {
                    ("speedup", Cell::Float(v)) => format!("{v:.3}"),
                    ("block_years" | "binary_years", Cell::Float(v)) => format!("{v:.1}"),
                    _ => render::human_cell(cell),
                }
            }))
        }
    }
}

fn to_usize(n: u64) -> Result<usize, Failure> {
    usize::try_from(n).map_err(|_| Failure::Input(format!("n = {n} is too large")))
}

fn big(value: &num_bigint::BigUint) -> Cell {
    Cell::Big {
        decimal: value.to_string(),
        human: format_scientific(value, 6),
    }
}

fn join(values: impl Iterator<Item = usize>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn predict_record(r: &ComplexityReport) -> Record {
    let mut rec = Record::default();
    rec.push("n", Cell::Int(r.n))
        .push("naive", big(&r.naive))
        .push("s_n", Cell::Int(r.s_n))
        .push("b_n", Cell::Int(r.b_n))
        .push("b_f_n", Cell::Int(r.b_f_n))
        .push("log_factorial", Cell::Float(r.log_factorial))
        .push("speedup", r.speedup.map_or(Cell::Null, Cell::Float));
    rec
}

fn trial_record(t: &TrialResult) -> Record {
    let generator = match t.provenance {
        Provenance::Seeded { .. } => Cell::Text(harness::GENERATOR.into()),
        _ => Cell::Null,
    };
    let mut rec = Record::default();
    rec.push("strategy", Cell::Text(t.strategy.name().into()))
        .push("n", Cell::Int(t.n as u64))
        .push("cost_model", Cell::Text(t.cost_model.name().into()))
        .push("queries", Cell::Int(t.queries))
        .push("steps", Cell::Int(t.steps))
        .push("correct", Cell::Bool(t.correct))
        .push("provenance", Cell::Text(t.provenance.to_string()))
        .push("generator", generator);
    rec
}

fn worst_case_record(r: &WorstCaseReport) -> Record {
    let mut rec = Record::default();
    rec.push("strategy", Cell::Text(r.strategy.name().into()))
        .push("n", Cell::Int(r.n as u64))
        .push("mode", Cell::Text(r.mode.name().into()))
        .push("cost_model", Cell::Text(r.cost_model.name().into()))
        .push("max_queries", Cell::Int(r.max_queries))
        .push("max_steps", Cell::Int(r.max_steps))
        .push("instances", Cell::Int(r.instances))
        .push(
            "ranks",
            Cell::Text(join(r.ground_truth.ranks().iter().copied())),
        )
        .push(
            "presentation",
            Cell::Text(join(r.presentation.iter().map(|id: &RuleId| id.index()))),
        );
    rec
}

fn table_record(row: &harness::PaperTableRow) -> Record {
    let mut rec = Record::default();
    rec.push("n", Cell::Int(row.n))
        .push("naive", big(&row.naive))
        .push("s_n", Cell::Int(row.s_n))
        .push("b_n", Cell::Int(row.b_n))
        .push("speedup", Cell::Float(row.speedup))
        .push("block_years", Cell::Float(row.block_years))
        .push("binary_years", Cell::Float(row.binary_years));
    rec
}
