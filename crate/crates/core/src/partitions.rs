//! Set partitions of `[1, 2k]` drawn as two-row diagrams, and the counting
//! functions attached to them.
//!
//! A partition is stored as its restricted-growth string: node `l` carries
//! the index of its block, blocks being numbered in order of their smallest
//! element. Nodes `1..=k` form the bottom row and `k+1..=2k` the top row.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial, integer_partitions, multinomial, multiplicity_factorials, PartParity};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    k: usize,
    labels: Vec<usize>,
}

impl SetPartition {
    /// Accepts a restricted-growth string of length `2k` with labels from 1.
    pub fn from_labels(k: usize, labels: Vec<usize>) -> Result<Self> {
        if k == 0 || labels.len() != 2 * k {
            return Err(Error::InvalidPartition(format!("expected {} labels, got {}", 2 * k, labels.len())));
        }
        let mut max = 0;
        for &l in &labels {
            if l == 0 || l > max + 1 {
                return Err(Error::InvalidPartition(format!("{labels:?} is not a restricted-growth string")));
            }
            max = max.max(l);
        }
        Ok(SetPartition { k, labels })
    }

    /// Builds the partition from an arbitrary labelling of the `2k` nodes,
    /// joining nodes with equal labels.
    pub fn from_labelling<T: PartialEq>(k: usize, labelling: &[T]) -> Result<Self> {
        if k == 0 || labelling.len() != 2 * k {
            return Err(Error::InvalidPartition(format!("expected {} labels, got {}", 2 * k, labelling.len())));
        }
        let mut seen: Vec<&T> = Vec::new();
        let labels = labelling
            .iter()
            .map(|x| match seen.iter().position(|s| *s == x) {
                Some(p) => p + 1,
                None => {
                    seen.push(x);
                    seen.len()
                }
            })
            .collect();
        Ok(SetPartition { k, labels })
    }

    /// Builds the partition from blocks of node numbers in `1..=2k`.
    pub fn from_blocks(k: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut owner = vec![0usize; 2 * k];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &node in block {
                if node == 0 || node > 2 * k || owner[node - 1] != 0 {
                    return Err(Error::InvalidPartition(format!("node {node} is missing or repeated")));
                }
                owner[node - 1] = b + 1;
            }
        }
        if owner.contains(&0) {
            return Err(Error::InvalidPartition("blocks do not cover every node".into()));
        }
        Self::from_labelling(k, &owner)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Block index (from 1) of every node, in node order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0)
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_blocks()];
        for &l in &self.labels {
            sizes[l - 1] += 1;
        }
        sizes
    }

    /// Blocks `B_1, B_2, ...` as sorted node lists.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (node, &l) in self.labels.iter().enumerate() {
            blocks[l - 1].push(node + 1);
        }
        blocks
    }

    pub fn all_blocks_even(&self) -> bool {
        self.block_sizes().iter().all(|s| s % 2 == 0)
    }
}

/// Block labels of the bottom row (`zeta`) and top row (`zeta_prime`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaLabels {
    pub zeta: Vec<usize>,
    pub zeta_prime: Vec<usize>,
}

impl ZetaLabels {
    pub fn to_partition(&self) -> Result<SetPartition> {
        if self.zeta.len() != self.zeta_prime.len() {
            return Err(Error::InvalidPartition("rows differ in length".into()));
        }
        let labels = self.zeta.iter().chain(&self.zeta_prime).copied().collect();
        SetPartition::from_labels(self.zeta.len(), labels)
    }
}

pub fn zeta_labels(d: &SetPartition) -> ZetaLabels {
    ZetaLabels { zeta: d.labels[..d.k].to_vec(), zeta_prime: d.labels[d.k..].to_vec() }
}

/// Parity test on label counts: for every `j` in `1..=n`, `j` occurs in
/// `zeta` and `zeta_prime` an equal number of times mod 2.
pub fn tanabe_condition(d: &SetPartition, n: usize) -> bool {
    let z = zeta_labels(d);
    (1..=n).all(|j| {
        let bottom = z.zeta.iter().filter(|&&x| x == j).count();
        let top = z.zeta_prime.iter().filter(|&&x| x == j).count();
        bottom % 2 == top % 2
    })
}

/// Serialized as `bottom|top`, e.g. `1,2,3,1,4|2,4,2,2,3`.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}|{}", join(&self.labels[..self.k]), join(&self.labels[self.k..]))
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (bottom, top) = s.split_once('|').ok_or_else(|| Error::InvalidPartition(s.to_string()))?;
        let parse = |row: &str| -> Result<Vec<usize>> {
            row.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
                .collect()
        };
        ZetaLabels { zeta: parse(bottom)?, zeta_prime: parse(top)? }.to_partition()
    }
}

/// Lazy enumeration of `P(k, n)` (or its even-block subset) in lexicographic
/// order of restricted-growth strings.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    k: usize,
    max_blocks: usize,
    even_only: bool,
    labels: Vec<usize>,
    sizes: Vec<usize>,
    odd_blocks: usize,
    started: bool,
    done: bool,
}

pub fn enumerate_partitions(k: usize, n: usize, even_only: bool) -> PartitionIter {
    PartitionIter {
        k,
        max_blocks: n,
        even_only,
        labels: Vec::with_capacity(2 * k),
        sizes: Vec::new(),
        odd_blocks: 0,
        started: false,
        done: k == 0 || n == 0,
    }
}

impl PartitionIter {
    fn push(&mut self, label: usize) {
        if label > self.sizes.len() {
            self.sizes.push(0);
        }
        let s = &mut self.sizes[label - 1];
        *s += 1;
        if *s % 2 == 1 {
            self.odd_blocks += 1;
        } else {
            self.odd_blocks -= 1;
        }
        self.labels.push(label);
    }

    fn pop(&mut self) -> Option<usize> {
        let label = self.labels.pop()?;
        let s = &mut self.sizes[label - 1];
        if *s % 2 == 1 {
            self.odd_blocks -= 1;
        } else {
            self.odd_blocks += 1;
        }
        *s -= 1;
        if *s == 0 {
            self.sizes.pop();
        }
        Some(label)
    }

    // Odd blocks can only be repaired by the nodes still unplaced.
    fn feasible(&self) -> bool {
        !self.even_only || self.odd_blocks <= 2 * self.k - self.labels.len()
    }

    /// Tries labels `from..` at the next position, keeping the first feasible one.
    fn place_from(&mut self, from: usize) -> bool {
        let limit = (self.sizes.len() + 1).min(self.max_blocks);
        for label in from..=limit {
            self.push(label);
            if self.feasible() {
                return true;
            }
            self.pop();
        }
        false
    }

    fn advance(&mut self) -> bool {
        let len = 2 * self.k;
        let mut descending = !self.started;
        self.started = true;
        loop {
            if descending {
                if self.labels.len() == len {
                    return true;
                }
                if self.place_from(1) {
                    continue;
                }
            }
            // backtrack to the last position with an untried label
            match self.pop() {
                None => return false,
                Some(last) => descending = self.place_from(last + 1),
            }
        }
    }
}

impl Iterator for PartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if self.advance() {
            Some(SetPartition { k: self.k, labels: self.labels.clone() })
        } else {
            self.done = true;
            None
        }
    }
}

/// Stirling number of the second kind `S(m, j)`.
pub fn stirling2(m: usize, j: usize) -> BigInt {
    if j > m {
        return BigInt::zero();
    }
    // row[i] = S(current m, i)
    let mut row = vec![BigInt::zero(); j + 1];
    row[0] = BigInt::one();
    for mm in 1..=m {
        for i in (1..=j.min(mm)).rev() {
            row[i] = &row[i] * i + &row[i - 1];
        }
        row[0] = BigInt::zero();
    }
    row[j].clone()
}

/// `T(k, r)`, partitions of a `2k`-set into `r` blocks of even size, from
/// `(1 / (r! 2^(r-1))) sum_j (-1)^(r-j) C(2r, r-j) j^(2k)`.
pub fn even_block_count_closed(k: usize, r: usize) -> Result<BigInt> {
    if r == 0 {
        return Ok(if k == 0 { BigInt::one() } else { BigInt::zero() });
    }
    let mut total = BigInt::zero();
    for j in 1..=r {
        let term = binomial(2 * r as i64, (r - j) as i64) * num_traits::pow(BigInt::from(j), 2 * k);
        if (r - j).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    let divisor = factorial(r as u64) << (r - 1);
    let (q, rem) = total.div_rem(&divisor);
    if rem.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegral("even-block count"))
    }
}

/// `T(k, r)` summed over integer partitions `lambda` of `k` into `r` parts:
/// `multinomial(2k; 2 lambda) / prod_j l_j!`.
pub fn even_block_count_partitionwise(k: usize, r: usize) -> BigInt {
    integer_partitions(k as u64, r, PartParity::Any)
        .iter()
        .map(|lambda| {
            let doubled: Vec<u64> = lambda.iter().map(|p| 2 * p).collect();
            multinomial(&doubled) / multiplicity_factorials(lambda)
        })
        .sum()
}

/// `dim Z_k(S_n) = |P(k, n)| = sum_{j=1}^{n} S(2k, j)`.
#[allow(non_snake_case)]
pub fn dim_Zk_Sn(k: usize, n: usize) -> BigInt {
    (1..=n).map(|j| stirling2(2 * k, j)).sum()
}

/// `dim Z_k(G(2,1,n)) = sum_{r=1}^{n} T(k, r)`.
#[allow(non_snake_case)]
pub fn dim_Zk_G21n(k: usize, n: usize) -> Result<BigInt> {
    (1..=n).map(|r| even_block_count_closed(k, r)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn running_example() -> SetPartition {
        SetPartition::from_blocks(5, &[vec![1, 4], vec![2, 6, 8, 9], vec![3, 10], vec![5, 7]]).unwrap()
    }

    // Bell numbers by the triangle, independent of stirling2.
    fn bell(m: usize) -> BigInt {
        let mut row = vec![BigInt::one()];
        for _ in 0..m {
            let mut next = vec![row.last().unwrap().clone()];
            for x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            row = next;
        }
        row[0].clone()
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(4, 1), BigInt::from(1));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(4, 3), BigInt::from(6));
        assert_eq!(stirling2(7, 7), BigInt::one());
        assert_eq!(stirling2(4, 5), BigInt::zero());
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 0), BigInt::zero());
        for m in 0..10 {
            let total: BigInt = (0..=m).map(|j| stirling2(m, j)).sum();
            assert_eq!(total, bell(m));
        }
    }

    #[test]
    fn even_block_counts() {
        assert_eq!(even_block_count_closed(4, 2).unwrap(), BigInt::from(63));
        assert_eq!(even_block_count_partitionwise(4, 2), BigInt::from(63));
        assert_eq!(even_block_count_closed(2, 2).unwrap(), BigInt::from(3));
        assert_eq!(even_block_count_partitionwise(2, 1), BigInt::one());
        for k in 1..8 {
            assert_eq!(even_block_count_closed(k, 1).unwrap(), BigInt::one());
            assert_eq!(even_block_count_closed(k, k + 1).unwrap(), BigInt::zero());
            // all parts 1: (2k)! / (2^k k!)
            let pairings = factorial(2 * k as u64) / (factorial(k as u64) << k);
            assert_eq!(even_block_count_partitionwise(k, k), pairings);
        }
    }

    #[test]
    fn counts_match_direct_enumeration() {
        for k in 1..=5 {
            for r in 1..=k {
                let direct = enumerate_partitions(k, r, true).filter(|d| d.num_blocks() == r).count();
                assert_eq!(even_block_count_closed(k, r).unwrap(), BigInt::from(direct), "T({k},{r})");
                assert_eq!(even_block_count_partitionwise(k, r), BigInt::from(direct), "T({k},{r})");
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(2, 3, false).count(), 14);
        assert_eq!(enumerate_partitions(2, 3, true).count(), 4);
        for k in 1..6 {
            assert_eq!(enumerate_partitions(k, 1, true).count(), 1);
        }
        assert_eq!(enumerate_partitions(1, 1, false).count(), 1);
        assert_eq!(enumerate_partitions(1, 2, false).count(), 2);
        assert_eq!(enumerate_partitions(0, 2, false).count(), 0);
    }

    #[test]
    fn dimension_formulas() {
        assert_eq!(dim_Zk_Sn(2, 3), BigInt::from(14));
        assert_eq!(dim_Zk_Sn(1, 5), BigInt::from(2));
        assert_eq!(dim_Zk_Sn(2, 4), bell(4));
        assert_eq!(dim_Zk_Sn(2, 9), BigInt::from(15));
        assert_eq!(dim_Zk_G21n(2, 3).unwrap(), BigInt::from(4));
        assert_eq!(dim_Zk_G21n(1, 4).unwrap(), BigInt::one());
        assert_eq!(dim_Zk_G21n(3, 2).unwrap(), BigInt::from(16));
        assert_eq!(enumerate_partitions(3, 2, true).count(), 16);
        for k in 1..=4 {
            for n in 1..=5 {
                assert_eq!(dim_Zk_Sn(k, n), BigInt::from(enumerate_partitions(k, n, false).count()));
                assert_eq!(dim_Zk_G21n(k, n).unwrap(), BigInt::from(enumerate_partitions(k, n, true).count()));
            }
        }
    }

    #[test]
    fn zeta_of_running_example() {
        let d = running_example();
        let z = zeta_labels(&d);
        assert_eq!(z.zeta, vec![1, 2, 3, 1, 4]);
        assert_eq!(z.zeta_prime, vec![2, 4, 2, 2, 3]);
        assert_eq!(d.to_string(), "1,2,3,1,4|2,4,2,2,3");
        assert_eq!("1,2,3,1,4|2,4,2,2,3".parse::<SetPartition>().unwrap(), d);
        assert_eq!(d.block_sizes(), vec![2, 4, 2, 2]);
        assert!(tanabe_condition(&d, 4));
        assert!(tanabe_condition(&d, 7));
    }

    #[test]
    fn zeta_edge_cases() {
        let single = SetPartition::from_labels(3, vec![1; 6]).unwrap();
        assert_eq!(zeta_labels(&single).zeta, vec![1, 1, 1]);
        assert_eq!(zeta_labels(&single).zeta_prime, vec![1, 1, 1]);
        let identity = SetPartition::from_blocks(3, &[vec![1, 4], vec![2, 5], vec![3, 6]]).unwrap();
        let z = zeta_labels(&identity);
        assert_eq!(z.zeta, vec![1, 2, 3]);
        assert_eq!(z.zeta_prime, vec![1, 2, 3]);
        let split = SetPartition::from_labels(1, vec![1, 2]).unwrap();
        assert!(!tanabe_condition(&split, 2));
    }

    #[test]
    fn malformed_partitions() {
        assert!(SetPartition::from_labels(2, vec![2, 1, 1, 1]).is_err());
        assert!(SetPartition::from_labels(2, vec![1, 3, 1, 1]).is_err());
        assert!(SetPartition::from_labels(2, vec![1, 1]).is_err());
        assert!(SetPartition::from_blocks(2, &[vec![1, 2], vec![2, 3, 4]]).is_err());
        assert!(SetPartition::from_blocks(2, &[vec![1, 2], vec![3]]).is_err());
        assert!("1,2|1".parse::<SetPartition>().is_err());
        assert!("1,x|1,2".parse::<SetPartition>().is_err());
    }

    #[test]
    fn tanabe_equivalence_exhaustive() {
        for k in 1..=4 {
            for n in 1..=4 {
                for d in enumerate_partitions(k, n, false) {
                    assert_eq!(tanabe_condition(&d, n), d.all_blocks_even(), "{d}");
                }
            }
        }
    }

    #[test]
    fn enumeration_is_canonical_sorted_and_distinct() {
        for (k, n, even) in [(3, 3, false), (3, 6, true), (4, 2, false), (4, 4, true)] {
            let all: Vec<_> = enumerate_partitions(k, n, even).collect();
            assert!(all.windows(2).all(|w| w[0].labels() < w[1].labels()));
            for d in &all {
                assert!(SetPartition::from_labels(k, d.labels().to_vec()).is_ok());
                assert!(d.num_blocks() <= n);
                assert!(!even || d.all_blocks_even());
            }
        }
    }

    proptest! {
        #[test]
        fn zeta_round_trip(k in 1usize..6, seed in prop::collection::vec(0usize..4, 12)) {
            let d = SetPartition::from_labelling(k, &seed[..2 * k]).unwrap();
            let z = zeta_labels(&d);
            prop_assert_eq!(z.to_partition().unwrap(), d.clone());
            prop_assert_eq!(d.to_string().parse::<SetPartition>().unwrap(), d);
        }
    }
}
