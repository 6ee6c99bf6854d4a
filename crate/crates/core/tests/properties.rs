use proptest::prelude::*;

use cubewalk::centralizer::{paths_to_diagram, BasisElement, WalkPath};
use cubewalk::combinat::binomial;
use cubewalk::partitions::{
    even_block_count_closed, even_block_count_partitionwise, stirling2, tanabe_condition, zeta_labels, SetPartition,
};
use cubewalk::spectral::{walk_count_bruteforce, walk_count_spectral, StepSet};
use cubewalk::{BigInt, GroupElement, IntPolynomial, Limits, RationalFunction};

fn dfs_walks(steps: &[u64], from: u64, to: u64, k: u32) -> u64 {
    if k == 0 {
        return u64::from(from == to);
    }
    steps.iter().map(|s| dfs_walks(steps, from ^ s, to, k - 1)).sum()
}

/// Counts set partitions of `[1, m]` into `j` blocks by assigning each
/// element to a block, then dividing by `j!` orderings of surjections.
fn surjections_over_factorial(m: u32, j: u32) -> BigInt {
    let surj: BigInt = (0..=j as i64)
        .map(|i| {
            let term = binomial(j as i64, i) * num_traits::pow(BigInt::from(j as i64 - i), m as usize);
            if i % 2 == 0 { term } else { -term }
        })
        .sum();
    surj / (1..=j as u64).fold(BigInt::from(1), |a, x| a * x)
}

fn step_set() -> impl Strategy<Value = (u32, Vec<u64>)> {
    (1u32..=4).prop_flat_map(|n| {
        let size = 1u64 << n;
        (Just(n), proptest::collection::btree_set(0..size, 1..=(size as usize).min(5)))
            .prop_map(|(n, s)| (n, s.into_iter().collect()))
    })
}

proptest! {
    #[test]
    fn general_step_sets((n, raw) in step_set(), b in 0u64..16, c in 0u64..16, k in 0u32..7) {
        let mask = (1u64 << n) - 1;
        let (b, c) = (b & mask, c & mask);
        let steps = StepSet::new(n, raw.iter().map(|&s| GroupElement::new(n, s).unwrap()).collect()).unwrap();
        let (gb, gc) = (GroupElement::new(n, b).unwrap(), GroupElement::new(n, c).unwrap());
        let lim = Limits::default();
        let brute = walk_count_bruteforce(&steps, &gb, &gc, k, &lim).unwrap();
        prop_assert_eq!(&brute, &walk_count_spectral(&steps, &gb, &gc, k, &lim).unwrap());
        prop_assert_eq!(brute, BigInt::from(dfs_walks(&raw, b, c, k)));
    }

    #[test]
    fn stirling_matches_inclusion_exclusion(m in 0u32..14, j in 0u32..14) {
        prop_assume!(j <= m);
        prop_assert_eq!(stirling2(m as usize, j as usize), surjections_over_factorial(m, j));
    }

    #[test]
    fn even_block_routes(k in 1usize..9, r in 1usize..9) {
        prop_assume!(r <= k);
        prop_assert_eq!(even_block_count_closed(k, r).unwrap(), even_block_count_partitionwise(k, r));
    }

    #[test]
    fn tanabe_on_random_labellings(k in 1usize..6, labels in proptest::collection::vec(0u8..6, 2..12), n in 1usize..7) {
        let labels: Vec<u8> = labels.into_iter().cycle().take(2 * k).collect();
        let d = SetPartition::from_labelling(k, &labels).unwrap();
        prop_assume!(d.num_blocks() <= n);
        prop_assert_eq!(tanabe_condition(&d, n), d.all_blocks_even());
        prop_assert_eq!(zeta_labels(&d).to_partition().unwrap(), d);
    }

    #[test]
    fn path_pairs_give_valid_elements(n in 1u32..6, s1 in proptest::collection::vec(1usize..6, 1..7), s2 in proptest::collection::vec(1usize..6, 1..7)) {
        let k = s1.len().min(s2.len());
        let clip = |s: &[usize]| s[..k].iter().map(|&x| (x - 1) % n as usize + 1).collect::<Vec<_>>();
        let rho1 = WalkPath::new(n, clip(&s1)).unwrap();
        let rho2 = WalkPath::new(n, clip(&s2)).unwrap();
        match paths_to_diagram(&rho1, &rho2) {
            Ok(e) => {
                prop_assert_eq!(rho1.endpoint(), rho2.endpoint());
                prop_assert!(BasisElement::new(n, e.alpha().to_vec(), e.beta().to_vec()).is_ok());
                prop_assert!(e.diagram().all_blocks_even());
                prop_assert_eq!(e.endpoint(n).unwrap(), rho1.endpoint());
            }
            Err(_) => prop_assert_ne!(rho1.endpoint(), rho2.endpoint()),
        }
    }

    #[test]
    fn reduction_keeps_series(roots in proptest::collection::vec(-4i64..=4, 0..5), shared in proptest::collection::vec(-4i64..=4, 0..4), extra in -3i64..4) {
        let prod = |ls: &[i64]| ls.iter().fold(IntPolynomial::one(), |acc, &l| acc * IntPolynomial::one_minus(l));
        let common = prod(&shared);
        let num = &IntPolynomial::from_i64s(&[extra, 1]) * &common;
        let den = &prod(&roots) * &common;
        let f = RationalFunction::new(num, den).unwrap();
        let reduced = f.reduce_linear(-4..=4);
        prop_assert_eq!(f.series_expand(12), reduced.series_expand(12));
        prop_assert!(reduced.den().degree() <= f.den().degree());
    }
}
