//! Factorials, binomials and integer-partition iteration.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n (n-1) ... (n-r+1)`; zero when `r > n`.
pub fn falling_factorial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    ((n - r + 1)..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C(n, r)` for signed arguments, zero outside `0 <= r <= n`.
pub fn binomial(n: i64, r: i64) -> BigInt {
    if n < 0 || r < 0 || r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `total! / prod(parts_i!)`, with `total = sum(parts)`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut remaining: u64 = parts.iter().sum();
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining as i64, p as i64);
        remaining -= p;
    }
    acc
}

/// `prod_j (l_j)!` where `l_j` is the number of parts equal to `j`.
pub fn multiplicity_factorials(parts: &[u64]) -> BigInt {
    let mut acc = BigInt::one();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        acc *= factorial((j - i) as u64);
        i = j;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartParity {
    Any,
    Odd,
    Even,
}

impl PartParity {
    fn admits(self, p: u64) -> bool {
        match self {
            PartParity::Any => true,
            PartParity::Odd => p % 2 == 1,
            PartParity::Even => p.is_multiple_of(2),
        }
    }
}

/// All weakly decreasing sequences of exactly `parts` positive integers,
/// each of the given parity, summing to `total`. The empty sequence is the
/// single partition of 0 into 0 parts.
pub fn integer_partitions(total: u64, parts: usize, parity: PartParity) -> Vec<Vec<u64>> {
    fn rec(
        remaining: u64,
        slots: usize,
        max_part: u64,
        parity: PartParity,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let min_part = if parity == PartParity::Even { 2 } else { 1 };
        if remaining < min_part * slots as u64 {
            return;
        }
        let hi = max_part.min(remaining - min_part * (slots as u64 - 1));
        for p in (min_part..=hi).rev() {
            if !parity.admits(p) {
                continue;
            }
            cur.push(p);
            rec(remaining - p, slots - 1, p, parity, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, total, parity, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(8, 6), BigInt::from(28));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(falling_factorial(3, 2), BigInt::from(6));
        assert_eq!(falling_factorial(3, 0), BigInt::one());
        assert_eq!(multinomial(&[4, 4]), BigInt::from(70));
        assert_eq!(multiplicity_factorials(&[2, 2, 1]), BigInt::from(2));
    }

    #[test]
    fn partitions_of_four_into_two() {
        assert_eq!(integer_partitions(4, 2, PartParity::Any), vec![vec![3, 1], vec![2, 2]]);
        assert_eq!(integer_partitions(4, 2, PartParity::Even), vec![vec![2, 2]]);
        assert_eq!(integer_partitions(4, 2, PartParity::Odd), vec![vec![3, 1]]);
        assert_eq!(integer_partitions(0, 0, PartParity::Any), vec![Vec::<u64>::new()]);
        assert!(integer_partitions(3, 0, PartParity::Any).is_empty());
    }

    #[test]
    fn partition_counts_match_partition_numbers() {
        // p(10) = 42
        let total: usize = (0..=10).map(|r| integer_partitions(10, r, PartParity::Any).len()).sum();
        assert_eq!(total, 42);
    }
}
