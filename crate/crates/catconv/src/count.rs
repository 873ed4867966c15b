//! Exact closed-form counting: binomials, Catalan numbers, and the
//! convolution sums the identity checks compare against.
//!
//! Everything here is integer arithmetic on [`ExactCount`]
//! (arbitrary-precision, so values never wrap), and floating point is
//! banned. All functions are pure.

use num_integer::Integer;
use num_traits::{CheckedSub, One, Zero};

use crate::error::Error;

/// Arbitrary-size nonnegative integer used for all counting.
pub type ExactCount = num_bigint::BigUint;

/// `base^n` as an exact integer.
pub fn power(base: u32, n: u64) -> ExactCount {
    let exp = u32::try_from(n).expect("exponent too large");
    ExactCount::from(base).pow(exp)
}

/// Binomial coefficient `binom(n, k)`, with the convention that out-of-range
/// `k` (negative or above `n`) gives 0. Computed by the multiplicative
/// recurrence, which stays integral at every step.
pub fn binom(n: u64, k: i64) -> ExactCount {
    if k < 0 || k as u64 > n {
        return ExactCount::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut result = ExactCount::one();
    for i in 0..k {
        result = result * ExactCount::from(n - i) / ExactCount::from(i + 1);
    }
    result
}

/// The `n`th Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> ExactCount {
    let (quotient, remainder) = binom(2 * n, n as i64).div_rem(&ExactCount::from(n + 1));
    debug_assert!(remainder.is_zero());
    quotient
}

/// The `n`th central binomial coefficient `binom(2n, n)`.
pub fn central_binom(n: u64) -> ExactCount {
    binom(2 * n, n as i64)
}

/// `L_n = sum over i+j=n of C_{2i} * C_{2j}`.
pub fn shapiro_lhs(n: u64) -> ExactCount {
    (0..=n)
        .map(|i| catalan(2 * i) * catalan(2 * (n - i)))
        .sum()
}

/// `S_n = sum over i+j=n of C_{2i} * B_{2j}`.
pub fn mixed_lhs(n: u64) -> ExactCount {
    (0..=n)
        .map(|i| catalan(2 * i) * central_binom(2 * (n - i)))
        .sum()
}

/// The alternating central-binomial convolution
/// `sum B_{2i} B_{2j} - sum_{j>=1} B_{2i+1} B_{2j-1}` over `i + j = n`.
/// The difference is never negative — it equals `4^n B_n`.
pub fn alternating_lhs(n: u64) -> ExactCount {
    let plus: ExactCount = (0..=n)
        .map(|i| central_binom(2 * i) * central_binom(2 * (n - i)))
        .sum();
    let minus = odd_pair_sum(n);
    plus.checked_sub(&minus)
        .expect("alternating convolution went negative")
}

/// `sum over i+j=n, j>=1 of B_{2i+1} * B_{2j-1}` — the odd-index side of
/// the alternating convolution, also the size of the odd pair family.
pub fn odd_pair_sum(n: u64) -> ExactCount {
    (0..n)
        .map(|i| central_binom(2 * i + 1) * central_binom(2 * (n - i) - 1))
        .sum()
}

/// `sum over i+j=n of (B_{2i} - C_{2i}) * B_{2j}` — the even pair family
/// with a forced off-grid intercept in the first component.
pub fn even_pair_sum(n: u64) -> ExactCount {
    (0..=n)
        .map(|i| {
            (central_binom(2 * i) - catalan(2 * i)) * central_binom(2 * (n - i))
        })
        .sum()
}

/// `2 * sum over i+j+k=n of C_{2i} * C_{2j} * B_{2k}`.
pub fn triple_conv(n: u64) -> ExactCount {
    let mut total = ExactCount::zero();
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            total += catalan(2 * i) * catalan(2 * j) * central_binom(2 * k);
        }
    }
    total * ExactCount::from(2u32)
}

/// The sequence `Z_0..=Z_n` of the recursion
/// `Z_0 = 1`, `Z_n = 2 * sum_{k=1..n} C_{2k-1} * Z_{n-k}`.
pub fn z_recursion(n: u64) -> Vec<ExactCount> {
    let mut z: Vec<ExactCount> = Vec::with_capacity(n as usize + 1);
    z.push(ExactCount::one());
    for m in 1..=n {
        let sum: ExactCount = (1..=m).map(|k| catalan(2 * k - 1) * &z[(m - k) as usize]).sum();
        z.push(sum * ExactCount::from(2u32));
    }
    z
}

/// The two sides of the paired-binomial identity
/// `sum_{i=1..n} binom(4i, 2i-1) binom(4n-4i, 2n-2i)
///  = sum_{i=0..n-1} binom(4i+2, 2i+1) binom(4n-4i-2, 2n-2i-1)`,
/// defined for `n >= 1` (at `n = 0` both sums are empty and degenerate).
pub fn corollary10_sides(n: u64) -> Result<(ExactCount, ExactCount), Error> {
    if n == 0 {
        return Err(Error::IndexOutOfRange {
            n,
            what: "corollary 10 (requires n >= 1)".to_string(),
        });
    }
    let left: ExactCount = (1..=n)
        .map(|i| binom(4 * i, 2 * i as i64 - 1) * binom(4 * (n - i), 2 * (n - i) as i64))
        .sum();
    let right: ExactCount = (0..n)
        .map(|i| {
            binom(4 * i + 2, 2 * i as i64 + 1)
                * binom(4 * (n - i) - 2, 2 * (n - i) as i64 - 1)
        })
        .sum();
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: binomials through full factorials. Slower than
    /// the multiplicative recurrence but a separate computation route.
    fn factorial(n: u64) -> ExactCount {
        (1..=n).map(ExactCount::from).product()
    }

    fn binom_oracle(n: u64, k: i64) -> ExactCount {
        if k < 0 || k as u64 > n {
            return ExactCount::zero();
        }
        let k = k as u64;
        factorial(n) / (factorial(k) * factorial(n - k))
    }

    fn big(n: u128) -> ExactCount {
        ExactCount::from(n)
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(4, 2), big(6));
        assert_eq!(binom(17, 0), big(1));
        assert_eq!(binom(4, -1), big(0));
        assert_eq!(binom(4, 5), big(0));
    }

    #[test]
    fn binom_matches_factorial_oracle() {
        for n in 0..=40 {
            for k in -1..=n as i64 + 1 {
                assert_eq!(binom(n, k), binom_oracle(n, k), "binom({n},{k})");
            }
        }
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(4), big(14));
        assert_eq!(catalan(10), big(16796));
    }

    #[test]
    fn central_binom_examples() {
        assert_eq!(central_binom(0), big(1));
        assert_eq!(central_binom(2), big(6));
        assert_eq!(central_binom(15), big(155_117_520));
    }

    #[test]
    fn catalan_times_n_plus_one_is_central_binom() {
        for n in 0..=30 {
            assert_eq!(catalan(n) * big((n + 1) as u128), central_binom(n));
        }
    }

    #[test]
    fn shapiro_lhs_examples() {
        assert_eq!(shapiro_lhs(0), big(1));
        assert_eq!(shapiro_lhs(1), big(4));
        assert_eq!(shapiro_lhs(2), big(32));
    }

    #[test]
    fn mixed_lhs_examples() {
        assert_eq!(mixed_lhs(0), big(1));
        assert_eq!(mixed_lhs(1), big(8));
        assert_eq!(mixed_lhs(2), big(96));
    }

    #[test]
    fn alternating_lhs_examples() {
        assert_eq!(alternating_lhs(0), big(1));
        assert_eq!(alternating_lhs(1), big(8));
        assert_eq!(alternating_lhs(2), big(96));
    }

    #[test]
    fn triple_conv_examples() {
        assert_eq!(triple_conv(0), big(2));
        assert_eq!(triple_conv(1), big(20));
        assert_eq!(triple_conv(2), big(252));
    }

    #[test]
    fn triple_conv_is_odd_central_binom() {
        for n in 0..=15 {
            assert_eq!(triple_conv(n), binom(4 * n + 2, 2 * n as i64 + 1));
        }
    }

    #[test]
    fn convolution_identities_hold() {
        for n in 0..=20u64 {
            let four_n = power(4, n);
            assert_eq!(shapiro_lhs(n), &four_n * catalan(n));
            assert_eq!(mixed_lhs(n), &four_n * central_binom(n));
            assert_eq!(mixed_lhs(n), big((n + 1) as u128) * shapiro_lhs(n));
        }
        for n in 0..=15u64 {
            assert_eq!(alternating_lhs(n), power(4, n) * central_binom(n));
        }
    }

    #[test]
    fn mixed_lhs_squares_to_sixteen_powers() {
        for n in 0..=12u64 {
            let conv: ExactCount = (0..=n).map(|i| mixed_lhs(i) * mixed_lhs(n - i)).sum();
            assert_eq!(conv, power(16, n));
        }
    }

    #[test]
    fn z_recursion_matches_even_catalans() {
        let z = z_recursion(12);
        assert_eq!(z[0], big(1));
        assert_eq!(z[1], big(2));
        for (n, value) in z.iter().enumerate() {
            assert_eq!(*value, catalan(2 * n as u64), "Z_{n}");
        }
    }

    #[test]
    fn corollary10_examples() {
        assert_eq!(corollary10_sides(1).unwrap(), (big(4), big(4)));
        // Evaluated independently with the factorial oracle below.
        let (left, right) = corollary10_sides(2).unwrap();
        let oracle_left: ExactCount = (1..=2u64)
            .map(|i| binom_oracle(4 * i, 2 * i as i64 - 1) * binom_oracle(8 - 4 * i, 4 - 2 * i as i64))
            .sum();
        assert_eq!(left, oracle_left);
        assert_eq!(left, big(80));
        assert_eq!(right, big(80));
    }

    #[test]
    fn corollary10_sides_agree() {
        for n in 1..=20 {
            let (left, right) = corollary10_sides(n).unwrap();
            assert_eq!(left, right, "n = {n}");
        }
    }

    #[test]
    fn corollary10_rejects_zero() {
        assert!(matches!(
            corollary10_sides(0),
            Err(Error::IndexOutOfRange { n: 0, .. })
        ));
    }

    #[test]
    fn even_and_odd_pair_sums() {
        // even side: B_{2i} - C_{2i} counts what's missing from the Dyck set
        for n in 0..=10u64 {
            let lhs = even_pair_sum(n);
            let rhs = odd_pair_sum(n);
            assert_eq!(lhs, rhs, "n = {n}");
        }
        assert_eq!(odd_pair_sum(4), big(23808));
    }
}
