//! Closed-form step counts for the two learners and the quantities derived
//! from them. All integer results are exact.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{OrderError, Result};

/// Relative slack applied to the real-valued side of the `log2(n!)` bounds.
pub const BOUND_REL_TOLERANCE: f64 = 1e-9;

/// Days per year used by [`learning_duration`].
pub const DAYS_PER_YEAR: f64 = 365.25;

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(OrderError::Domain("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn overflow(n: u64) -> OrderError {
    OrderError::Domain(format!("step count for n = {n} overflows u64"))
}

/// `ceil(log2 k)` for `k >= 1`, with `ceil(log2 1) = 0`.
pub fn ceil_log2(k: u64) -> u32 {
    debug_assert!(k >= 1);
    if k <= 1 {
        0
    } else {
        u64::BITS - (k - 1).leading_zeros()
    }
}

/// Linear-scan steps as the running sum `2 + 3 + ... + n`.
pub fn block_steps_sum(n: u64) -> Result<u64> {
    require_positive(n)?;
    (2..=n).try_fold(0u64, |acc, i| acc.checked_add(i).ok_or_else(|| overflow(n)))
}

/// Linear-scan steps in closed form, `(n^2 - n)/2 + n - 1`.
pub fn block_steps_exact(n: u64) -> Result<u64> {
    require_positive(n)?;
    let n2 = u128::from(n);
    let steps = (n2 * n2 - n2) / 2 + n2 - 1;
    u64::try_from(steps).map_err(|_| overflow(n))
}

/// Pure comparison worst case of the linear scan, `n(n - 1)/2`.
pub fn block_comparisons(n: u64) -> Result<u64> {
    require_positive(n)?;
    u64::try_from(u128::from(n) * u128::from(n - 1) / 2).map_err(|_| overflow(n))
}

/// Binary-insertion steps, `sum_{k=1..n} ceil(log2 k)`.
pub fn binary_steps(n: u64) -> Result<u64> {
    require_positive(n)?;
    Ok((1..=n).map(|k| u64::from(ceil_log2(k))).sum())
}

/// `log2(n!)` as a compensated (Neumaier) sum of `log2 k`. Never builds `n!`.
pub fn log_factorial(n: u64) -> Result<f64> {
    require_positive(n)?;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for k in 2..=n {
        let term = (k as f64).log2();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    Ok(sum + comp)
}

/// `ceil(log2(n!))`, the factorial shortcut for [`binary_steps`]. It
/// underestimates the binary count.
pub fn binary_steps_approx(n: u64) -> Result<u64> {
    Ok(log_factorial(n)?.ceil() as u64)
}

/// `n!`, the number of orderings a brute-force learner would have to try.
pub fn naive_steps(n: u64) -> Result<BigUint> {
    require_positive(n)?;
    Ok((1..=n).map(BigUint::from).product())
}

/// How many times fewer steps binary insertion needs than the linear scan
/// with placements, `S(n) / B(n)`.
pub fn speedup(n: u64) -> Result<f64> {
    if n < 2 {
        return Err(OrderError::Domain(
            "speedup needs n >= 2 (binary steps are 0 at n = 1)".into(),
        ));
    }
    Ok(block_steps_exact(n)? as f64 / binary_steps(n)? as f64)
}

/// Years needed to perform `steps` steps at `steps_per_day`.
pub fn learning_duration(steps: u64, steps_per_day: f64) -> Result<f64> {
    if steps_per_day.is_nan() || steps_per_day <= 0.0 || steps_per_day.is_infinite() {
        return Err(OrderError::Domain(format!(
            "steps per day must be a positive finite number, got {steps_per_day}"
        )));
    }
    Ok(steps as f64 / steps_per_day / DAYS_PER_YEAR)
}

/// `log2(n!) < b < log2(n!) + n`, with [`BOUND_REL_TOLERANCE`] of slack on
/// the real-valued sides.
pub fn within_factorial_bounds(log_factorial: f64, b: u64, n: u64) -> bool {
    let b = b as f64;
    let lower = log_factorial * (1.0 - BOUND_REL_TOLERANCE);
    let upper = (log_factorial + n as f64) * (1.0 + BOUND_REL_TOLERANCE);
    lower < b && b < upper
}

/// Renders `value` as `d.ddddde<exp>` with `sig` significant digits,
/// rounding half up. `27!` renders as `1.08889e28`.
pub fn format_scientific(value: &BigUint, sig: usize) -> String {
    let sig = sig.max(1);
    let digits = value.to_str_radix(10);
    let mut exp = digits.len() - 1;
    if digits.len() <= sig {
        let mut mantissa: Vec<u8> = digits.bytes().map(|b| b - b'0').collect();
        mantissa.resize(sig, 0);
        return render_mantissa(&mantissa, exp);
    }
    let mut mantissa: Vec<u8> = digits.bytes().take(sig).map(|b| b - b'0').collect();
    if digits.as_bytes()[sig] >= b'5' {
        let mut i = sig;
        loop {
            if i == 0 {
                mantissa.insert(0, 1);
                mantissa.truncate(sig);
                exp += 1;
                break;
            }
            i -= 1;
            if mantissa[i] == 9 {
                mantissa[i] = 0;
            } else {
                mantissa[i] += 1;
                break;
            }
        }
    }
    render_mantissa(&mantissa, exp)
}

fn render_mantissa(mantissa: &[u8], exp: usize) -> String {
    let mut out = String::with_capacity(mantissa.len() + 6);
    out.push((b'0' + mantissa[0]) as char);
    if mantissa.len() > 1 {
        out.push('.');
        out.extend(mantissa[1..].iter().map(|d| (b'0' + d) as char));
    }
    out.push('e');
    out.push_str(&exp.to_string());
    out
}

/// Serializes a big integer as its full decimal string.
pub fn serialize_decimal<S: serde::Serializer>(
    value: &BigUint,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

/// Every predictor evaluated at one `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexityReport {
    pub n: u64,
    /// Linear scan with placements, `(n^2 - n)/2 + n - 1`.
    pub s_n: u64,
    /// Binary insertion, `sum ceil(log2 k)`.
    pub b_n: u64,
    /// `ceil(log2(n!))`.
    pub b_f_n: u64,
    pub log_factorial: f64,
    /// `s_n / b_n`; absent at `n = 1`.
    pub speedup: Option<f64>,
    #[serde(serialize_with = "serialize_decimal")]
    pub naive: BigUint,
}

impl ComplexityReport {
    /// Checks the report's invariants. The `log2(n!)` and `n log2 n` bounds
    /// only apply from `n = 2`.
    pub fn check(&self) -> std::result::Result<(), String> {
        let expected = block_steps_exact(self.n).map_err(|e| e.to_string())?;
        if self.s_n != expected {
            return Err(format!(
                "s_n = {} but closed form gives {expected}",
                self.s_n
            ));
        }
        if self.n >= 2 {
            if !within_factorial_bounds(self.log_factorial, self.b_n, self.n) {
                return Err(format!(
                    "b_n = {} outside ({}, {} + n)",
                    self.b_n, self.log_factorial, self.log_factorial
                ));
            }
            let n = self.n as f64;
            if self.b_n as f64 >= n * n.log2() {
                return Err(format!("b_n = {} not below n log2 n", self.b_n));
            }
        }
        Ok(())
    }
}

/// Builds the full report for `n`.
pub fn report(n: u64) -> Result<ComplexityReport> {
    require_positive(n)?;
    Ok(ComplexityReport {
        n,
        s_n: block_steps_exact(n)?,
        b_n: binary_steps(n)?,
        b_f_n: binary_steps_approx(n)?,
        log_factorial: log_factorial(n)?,
        speedup: if n >= 2 { Some(speedup(n)?) } else { None },
        naive: naive_steps(n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn domain<T: std::fmt::Debug>(r: Result<T>) -> bool {
        matches!(r, Err(OrderError::Domain(_)))
    }

    #[test]
    fn zero_is_outside_every_domain() {
        assert!(domain(block_steps_sum(0)));
        assert!(domain(block_steps_exact(0)));
        assert!(domain(binary_steps(0)));
        assert!(domain(log_factorial(0)));
        assert!(domain(binary_steps_approx(0)));
        assert!(domain(naive_steps(0)));
        assert!(domain(speedup(0)));
        assert!(domain(speedup(1)));
        assert!(domain(report(0)));
    }

    #[test]
    fn block_counts() {
        assert_eq!(block_steps_sum(1).unwrap(), 0);
        assert_eq!(block_steps_exact(1).unwrap(), 0);
        assert_eq!(block_steps_sum(27).unwrap(), 377);
        assert_eq!(block_steps_exact(27).unwrap(), 377);
        assert_eq!(block_steps_sum(1000).unwrap(), 500_499);
        assert_eq!(block_steps_exact(1000).unwrap(), 500_499);
        assert_eq!(block_comparisons(5).unwrap(), 10);
    }

    #[test]
    fn binary_counts() {
        assert_eq!(binary_steps(1).unwrap(), 0);
        assert_eq!(binary_steps(5).unwrap(), 8);
        assert_eq!(binary_steps(27).unwrap(), 104);
        assert_eq!(binary_steps(50).unwrap(), 237);
        assert_eq!(binary_steps(1000).unwrap(), 8977);
    }

    #[test]
    fn ceil_log2_small_values() {
        let expected = [0, 1, 2, 2, 3, 3, 3, 3, 4];
        for (k, &e) in (1..=9).zip(expected.iter()) {
            assert_eq!(ceil_log2(k), e, "k = {k}");
        }
        assert_eq!(ceil_log2(u64::MAX), 64);
    }

    #[test]
    fn log_factorial_values() {
        assert_eq!(log_factorial(1).unwrap(), 0.0);
        assert_eq!(log_factorial(2).unwrap(), 1.0);
        // log2(27!) with 27! = 10888869450418352160768000000
        let lf = log_factorial(27).unwrap();
        assert!((lf - 93.137).abs() < 0.01, "{lf}");
        assert_eq!(binary_steps_approx(27).unwrap(), 94);
        assert_eq!(binary_steps_approx(1).unwrap(), 0);
    }

    #[test]
    fn factorials() {
        assert_eq!(naive_steps(1).unwrap(), BigUint::from(1u32));
        assert_eq!(naive_steps(5).unwrap(), BigUint::from(120u32));
        assert_eq!(
            naive_steps(27).unwrap().to_string(),
            "10888869450418352160768000000"
        );
    }

    #[test]
    fn scientific_rendering() {
        assert_eq!(
            format_scientific(&naive_steps(27).unwrap(), 6),
            "1.08889e28"
        );
        assert_eq!(format_scientific(&BigUint::from(1u32), 6), "1.00000e0");
        assert_eq!(format_scientific(&BigUint::from(120u32), 2), "1.2e2");
        assert_eq!(
            format_scientific(&BigUint::from(9999999u32), 6),
            "1.00000e7"
        );
        assert_eq!(
            format_scientific(&BigUint::from(1234549u32), 6),
            "1.23455e6"
        );
        assert_eq!(format_scientific(&BigUint::from(7u32), 1), "7e0");
    }

    #[test]
    fn speedups() {
        assert_eq!(speedup(2).unwrap(), 2.0);
        assert_eq!(speedup(27).unwrap(), 3.625);
        assert!(speedup(1000).unwrap() > 55.0);
    }

    #[test]
    fn durations() {
        assert!((learning_duration(500_499, 2.0).unwrap() - 685.2).abs() < 1.0);
        assert!((learning_duration(8977, 2.0).unwrap() - 12.3).abs() < 0.5);
        assert_eq!(learning_duration(0, 2.0).unwrap(), 0.0);
        assert!(domain(learning_duration(10, 0.0)));
        assert!(domain(learning_duration(10, -1.0)));
        assert!(domain(learning_duration(10, f64::NAN)));
    }

    #[test]
    fn reports() {
        let r = report(27).unwrap();
        assert_eq!((r.s_n, r.b_n, r.b_f_n), (377, 104, 94));
        assert_eq!(r.speedup, Some(3.625));
        r.check().unwrap();

        let r = report(1).unwrap();
        assert_eq!((r.s_n, r.b_n, r.b_f_n), (0, 0, 0));
        assert_eq!(r.naive, BigUint::from(1u32));
        assert_eq!(r.speedup, None);
        r.check().unwrap();

        let r = report(1000).unwrap();
        assert_eq!((r.s_n, r.b_n), (500_499, 8977));
        r.check().unwrap();
    }

    #[test]
    fn lower_bound_is_tight_only_at_two() {
        // 2! = 2^1 = 2^B(2): the strict lower bound holds with equality.
        assert_eq!(binary_steps(2).unwrap(), 1);
        assert_eq!(log_factorial(2).unwrap(), 1.0);
        // From n = 3 on, n! < 2^B(n) exactly, i.e. bits(n! - 1) <= B(n) and
        // n! is not a power of two.
        let mut fact = BigUint::from(2u32);
        for n in 3..=600u64 {
            fact *= n;
            let b = binary_steps(n).unwrap();
            assert!(fact.bits() <= b, "n = {n}");
        }
    }
}
