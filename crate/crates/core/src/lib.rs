//! Exact walk counting on the n-cube and the centralizer algebras of `Z_2^n`.
//!
//! Every quantity is computed with arbitrary-precision integers, usually by
//! more than one route so that results can be cross-checked:
//!
//! * [`spectral`]: adjacency matrices, eigen-data, walk counts by brute force,
//!   by the character sum and by the binomial closed form, minimal polynomials
//!   and the raising/lowering `sl_2` triple.
//! * [`partitions`]: Stirling numbers, even-block counts `T(k, r)`, set
//!   partition enumeration as restricted-growth strings.
//! * [`centralizer`]: the `E_alpha^beta` basis, diagram expansions `T_d`,
//!   dimension formulas, Bratteli multiplicities and the path-pair bijection.
//! * [`genfun`]: Poincare series by Cramer determinants and exponential
//!   generating function coefficients.
//! * [`selftest`]: the fixed verification suite used by the CLI.

pub mod centralizer;
pub mod combinat;
mod error;
pub mod genfun;
pub mod group;
pub mod json;
pub mod matrix;
pub mod partitions;
pub mod poly;
pub mod selftest;
pub mod spectral;

pub use error::{Error, Result};
pub use group::GroupElement;
pub use matrix::IntMatrix;
pub use num_bigint::BigInt;
pub use poly::{IntPolynomial, RationalFunction};

/// Resource caps shared by all operations that build `2^n`-sized objects or
/// scan `n^k` tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest cube dimension for which dense matrices are built.
    pub max_n: u32,
    /// Largest number of tuples an enumeration may scan.
    pub budget: u64,
}

impl Limits {
    pub const DEFAULT_MAX_N: u32 = 12;
    pub const DEFAULT_BUDGET: u64 = 10_000_000;

    pub fn check_n(&self, n: u32) -> Result<()> {
        if n > self.max_n {
            Err(Error::CapExceeded { n, cap: self.max_n })
        } else {
            Ok(())
        }
    }

    pub fn check_budget(&self, required: u128) -> Result<()> {
        if required > self.budget as u128 {
            Err(Error::BudgetExceeded { required, budget: self.budget })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_n: Self::DEFAULT_MAX_N, budget: Self::DEFAULT_BUDGET }
    }
}
