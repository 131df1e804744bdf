use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use rule_order::predict::{
    binary_steps, binary_steps_approx, block_steps_exact, block_steps_sum, log_factorial,
    naive_steps, within_factorial_bounds,
};

/// ceil(log2 k): smallest e with 2^e >= k.
fn ceil_log2_by_doubling(k: u64) -> u64 {
    let mut e = 0;
    while (1u64 << e) < k {
        e += 1;
    }
    e
}

#[test]
fn binary_steps_matches_doubling_oracle() {
    let mut acc = 0;
    for n in 1..=5000u64 {
        acc += ceil_log2_by_doubling(n);
        assert_eq!(binary_steps(n).unwrap(), acc, "n = {n}");
    }
}

#[test]
fn sum_and_closed_form_agree() {
    for n in 1..=5000 {
        assert_eq!(block_steps_sum(n).unwrap(), block_steps_exact(n).unwrap());
    }
}

#[test]
fn factorial_bounds_and_n_log_n() {
    for n in 2..=5000u64 {
        let lf = log_factorial(n).unwrap();
        let b = binary_steps(n).unwrap();
        assert!(within_factorial_bounds(lf, b, n), "n = {n}");
        assert!((b as f64) < n as f64 * (n as f64).log2(), "n = {n}");
    }
}

#[test]
fn log_sum_matches_big_integer_bit_length() {
    for n in 1..=12u64 {
        let fact = naive_steps(n).unwrap();
        // ceil(log2 m) = bits(m - 1) for m >= 1
        let exact = (&fact - BigUint::one()).bits();
        assert_eq!(binary_steps_approx(n).unwrap(), exact, "n = {n}");
    }
}

#[test]
fn log_factorial_tracks_exact_factorial() {
    // Compare against log2 of the exact n! via its top 53 bits.
    let mut fact = BigUint::one();
    for n in 1..=1500u64 {
        fact *= n;
        let bits = fact.bits();
        let shift = bits.saturating_sub(53);
        let top: BigUint = &fact >> shift;
        let top = top.to_u64_digits().first().copied().unwrap_or(0) as f64;
        let exact = top.log2() + shift as f64;
        let lf = log_factorial(n).unwrap();
        assert!(
            (lf - exact).abs() <= 1e-9 * exact.max(1.0),
            "n = {n}: {lf} vs {exact}"
        );
    }
}

#[test]
fn counts_strictly_increase() {
    for n in 2..5000 {
        assert!(block_steps_exact(n + 1).unwrap() > block_steps_exact(n).unwrap());
        assert!(binary_steps(n + 1).unwrap() > binary_steps(n).unwrap());
    }
}

proptest! {
    #[test]
    fn closed_form_agrees_with_sum_beyond_the_table(n in 1u64..200_000) {
        prop_assert_eq!(block_steps_exact(n).unwrap(), block_steps_sum(n).unwrap());
    }
}
