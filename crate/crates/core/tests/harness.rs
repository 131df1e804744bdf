use rule_order::harness::{
    adversarial_worst_case, exhaustive_worst_case, query_ceiling, RandomTrials, SearchMode,
};
use rule_order::predict::{binary_steps, block_comparisons, block_steps_exact};
use rule_order::{CostModel, Strategy};

#[test]
fn exhaustive_maxima_match_formulas() {
    for n in 1..=6usize {
        let nn = n as u64;
        let block =
            exhaustive_worst_case(n, Strategy::Block, CostModel::ComparisonsOnly, false).unwrap();
        assert_eq!(block.max_queries, block_comparisons(nn).unwrap());
        let placed = exhaustive_worst_case(
            n,
            Strategy::Block,
            CostModel::ComparisonsPlusPlacement,
            false,
        )
        .unwrap();
        assert_eq!(placed.max_steps, block_steps_exact(nn).unwrap());
        let binary =
            exhaustive_worst_case(n, Strategy::Binary, CostModel::ComparisonsOnly, false).unwrap();
        assert_eq!(binary.max_queries, binary_steps(nn).unwrap());
        assert!(block.all_correct && placed.all_correct && binary.all_correct);
    }
}

#[test]
fn varying_presentation_does_not_raise_the_maximum() {
    for n in 1..=5usize {
        for strategy in Strategy::ALL {
            let fixed =
                exhaustive_worst_case(n, strategy, CostModel::ComparisonsOnly, false).unwrap();
            let varied =
                exhaustive_worst_case(n, strategy, CostModel::ComparisonsOnly, true).unwrap();
            assert_eq!(fixed.max_queries, varied.max_queries, "n = {n}, {strategy}");
            assert!(varied.all_correct);
        }
    }
}

#[test]
fn greedy_adversary_matches_exhaustive_search() {
    for n in 1..=8usize {
        for strategy in Strategy::ALL {
            let adv = adversarial_worst_case(n, strategy, CostModel::ComparisonsOnly).unwrap();
            let exh =
                exhaustive_worst_case(n, strategy, CostModel::ComparisonsOnly, false).unwrap();
            assert_eq!(adv.max_queries, exh.max_queries, "n = {n}, {strategy}");
            assert_eq!(adv.mode, SearchMode::Adversarial);
        }
    }
}

#[test]
fn adversarial_instances_reach_the_formulas() {
    for n in [27usize, 100] {
        let nn = n as u64;
        let block = adversarial_worst_case(n, Strategy::Block, CostModel::ComparisonsPlusPlacement)
            .unwrap();
        assert_eq!(block.max_steps, block_steps_exact(nn).unwrap());
        let binary =
            adversarial_worst_case(n, Strategy::Binary, CostModel::ComparisonsOnly).unwrap();
        assert_eq!(binary.max_queries, binary_steps(nn).unwrap());
        assert!(block.all_correct && binary.all_correct);
    }
}

#[test]
fn binary_worst_case_never_exceeds_block() {
    // Comparisons only: the two worst cases tie at n <= 3 (0, 1, 3 queries)
    // and binary is strictly cheaper from n = 4 on.
    for n in 1..=2000usize {
        let block = query_ceiling(Strategy::Block, n);
        let binary = query_ceiling(Strategy::Binary, n);
        assert!(binary <= block, "n = {n}");
        assert_eq!(binary == block, n <= 3, "n = {n}");
    }
    // Charging placements, the linear scan is strictly worse from n = 2.
    for n in 2..=2000u64 {
        assert!(binary_steps(n).unwrap() < block_steps_exact(n).unwrap());
    }
}

#[test]
fn random_trials_stay_under_ceilings_and_repeat() {
    for strategy in Strategy::ALL {
        for shuffle_presentation in [false, true] {
            let cfg = RandomTrials {
                n: 50,
                strategy,
                trials: 300,
                seed: 7,
                model: CostModel::ComparisonsOnly,
                shuffle_presentation,
            };
            let first = cfg.run().unwrap();
            let second = cfg.run().unwrap();
            assert_eq!(first, second);
            let summary = cfg.summarize().unwrap();
            assert!(summary.all_correct);
            assert!(summary.within_ceiling());
            assert!(summary.min_queries <= summary.max_queries);
        }
    }
    let a = RandomTrials {
        n: 50,
        strategy: Strategy::Binary,
        trials: 50,
        seed: 1,
        model: CostModel::ComparisonsOnly,
        shuffle_presentation: false,
    };
    let b = RandomTrials { seed: 2, ..a };
    assert_ne!(a.run().unwrap(), b.run().unwrap());
}
