//! Generating functions for the multiplicities `m_k^a`: Poincare series as
//! quotients of polynomial determinants, and exponential generating
//! functions `cosh^(n-h) sinh^h`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial};
use crate::spectral::exact_div_pow2;
use crate::{Error, GroupElement, IntMatrix, IntPolynomial, Limits, RationalFunction, Result};

/// Square matrix over `Z[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, |i, j| if i == j { IntPolynomial::one() } else { IntPolynomial::zero() })
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> IntPolynomial) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { size, entries }
    }

    /// `I - t A` for a square integer matrix `A`.
    pub fn identity_minus_t(a: &IntMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::ShapeMismatch(format!("{}x{} is not square", a.rows(), a.cols())));
        }
        Ok(Self::from_fn(a.rows(), |i, j| {
            let delta = if i == j { 1 } else { 0 };
            IntPolynomial::new(vec![BigInt::from(delta), -a.get(i, j)])
        }))
    }

    /// `I - t A` for the adjacency matrix of the n-cube.
    pub fn cube(n: u32, limits: &Limits) -> Result<Self> {
        limits.check_n(n)?;
        GroupElement::zero(n)?;
        let size = 1usize << n;
        Ok(Self::from_fn(size, |i, j| {
            if i == j {
                IntPolynomial::one()
            } else if (i ^ j).is_power_of_two() {
                IntPolynomial::from_i64s(&[0, -1])
            } else {
                IntPolynomial::zero()
            }
        }))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: IntPolynomial) {
        self.entries[i * self.size + j] = p;
    }

    pub fn replace_column(&self, j: usize, column: &[IntPolynomial]) -> Result<Self> {
        if j >= self.size || column.len() != self.size {
            return Err(Error::ShapeMismatch(format!("column {j} of length {} in size {}", column.len(), self.size)));
        }
        let mut m = self.clone();
        for (i, p) in column.iter().enumerate() {
            m.set(i, j, p.clone());
        }
        Ok(m)
    }

    /// Deletes row and column `v`.
    pub fn remove_index(&self, v: usize) -> Result<Self> {
        if v >= self.size {
            return Err(Error::ShapeMismatch(format!("index {v} in size {}", self.size)));
        }
        let skip = |i: usize| if i < v { i } else { i + 1 };
        Ok(Self::from_fn(self.size - 1, |i, j| self.get(skip(i), skip(j)).clone()))
    }
}

/// Determinant by Bareiss elimination in `Z[t]`; every division is exact.
pub fn det_fraction_free(m: &PolyMatrix) -> Result<IntPolynomial> {
    let n = m.size;
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let mut a = m.entries.clone();
    let idx = |i: usize, j: usize| i * n + j;
    let mut prev = IntPolynomial::one();
    let mut negate = false;
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[idx(i, k)].is_zero()) else {
            return Ok(IntPolynomial::zero());
        };
        if p != k {
            for j in 0..n {
                a.swap(idx(p, j), idx(k, j));
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &(&a[idx(k, k)] * &a[idx(i, j)]) - &(&a[idx(i, k)] * &a[idx(k, j)]);
                a[idx(i, j)] = cross.exact_div(&prev)?;
            }
            a[idx(i, k)] = IntPolynomial::zero();
        }
        prev = a[idx(k, k)].clone();
    }
    let det = a[idx(n - 1, n - 1)].clone();
    Ok(if negate { -&det } else { det })
}

fn cube_eigenvalues(n: u32) -> impl Iterator<Item = i64> {
    (0..=n as i64).map(move |h| n as i64 - 2 * h)
}

/// A Poincare series in the form produced by Cramer's rule and after
/// cancelling shared factors `1 - lambda t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareSeries {
    pub raw: RationalFunction,
    pub reduced: RationalFunction,
}

impl PoincareSeries {
    fn from_raw(n: u32, raw: RationalFunction) -> Self {
        let reduced = raw.reduce_linear(cube_eigenvalues(n));
        PoincareSeries { raw, reduced }
    }

    pub fn coefficients(&self, max_power: usize) -> Vec<BigInt> {
        self.reduced.series_expand(max_power)
    }
}

/// `m^a(t) = det(M^a) / det(I - tA)` where `M^a` is `I - tA` with column `a`
/// replaced by the unit vector at `0`.
pub fn poincare_series(n: u32, a: &GroupElement, limits: &Limits) -> Result<PoincareSeries> {
    if a.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: a.dim() });
    }
    let m = PolyMatrix::cube(n, limits)?;
    let mut delta = vec![IntPolynomial::zero(); m.size()];
    delta[0] = IntPolynomial::one();
    let num = det_fraction_free(&m.replace_column(a.index(), &delta)?)?;
    let den = det_fraction_free(&m)?;
    Ok(PoincareSeries::from_raw(n, RationalFunction::new(num, den)?))
}

/// `m^0(t) = det(I - t A') / det(I - tA)`, with `A'` the adjacency matrix of
/// the cube after deleting vertex `0`.
pub fn invariants_series(n: u32, limits: &Limits) -> Result<PoincareSeries> {
    let m = PolyMatrix::cube(n, limits)?;
    let num = det_fraction_free(&m.remove_index(0)?)?;
    let den = det_fraction_free(&m)?;
    Ok(PoincareSeries::from_raw(n, RationalFunction::new(num, den)?))
}

/// `det(I - tA) = prod_h (1 - (n-2h) t)^C(n,h)` for the n-cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredDenominator {
    pub expanded: IntPolynomial,
    /// `(lambda, multiplicity)` from `lambda = n` down to `-n`; `lambda = 0`
    /// appears for even `n` and contributes the unit factor.
    pub factors: Vec<(i64, u32)>,
}

pub fn denominator_factored(n: u32) -> Result<FactoredDenominator> {
    GroupElement::zero(n)?;
    let factors: Vec<(i64, u32)> = (0..=n as i64)
        .map(|h| {
            let mult = u32::try_from(binomial(n as i64, h)).map_err(|_| Error::CapExceeded { n, cap: 32 })?;
            Ok((n as i64 - 2 * h, mult))
        })
        .collect::<Result<_>>()?;
    let expanded = factors
        .iter()
        .fold(IntPolynomial::one(), |acc, &(l, m)| acc * IntPolynomial::one_minus(l).pow(m));
    Ok(FactoredDenominator { expanded, factors })
}

/// `m_k^a = k! [t^k] cosh(t)^(n-h) sinh(t)^h` for `k = 0..=max_k`.
pub fn egf_coefficients(n: u32, h: u32, max_k: usize) -> Result<Vec<BigInt>> {
    if h > n {
        return Err(Error::InvalidWalk(format!("weight {h} exceeds dimension {n}")));
    }
    let series = |parity: usize| -> Vec<BigRational> {
        (0..=max_k)
            .map(|i| {
                if i % 2 == parity {
                    BigRational::new(BigInt::one(), factorial(i as u64))
                } else {
                    BigRational::zero()
                }
            })
            .collect()
    };
    let mul = |x: &[BigRational], y: &[BigRational]| -> Vec<BigRational> {
        (0..=max_k)
            .map(|k| (0..=k).filter(|&i| !x[i].is_zero() && !y[k - i].is_zero()).map(|i| &x[i] * &y[k - i]).sum())
            .collect()
    };
    let (cosh, sinh) = (series(0), series(1));
    let mut acc: Vec<BigRational> = (0..=max_k).map(|i| if i == 0 { BigRational::one() } else { BigRational::zero() }).collect();
    for _ in 0..n - h {
        acc = mul(&acc, &cosh);
    }
    for _ in 0..h {
        acc = mul(&acc, &sinh);
    }
    acc.into_iter()
        .enumerate()
        .map(|(k, c)| {
            let scaled = c * BigRational::from_integer(factorial(k as u64));
            if scaled.is_integer() {
                Ok(scaled.to_integer())
            } else {
                Err(Error::NonIntegral("exponential generating function coefficient"))
            }
        })
        .collect()
}

/// `m_r^0 = 2^-n sum_i C(n,i) (n-2i)^r`.
pub fn closed_form_m0(n: u32, r: u32) -> Result<BigInt> {
    GroupElement::zero(n)?;
    let total: BigInt = (0..=n as i64)
        .map(|i| binomial(n as i64, i) * num_traits::pow(BigInt::from(n as i64 - 2 * i), r as usize))
        .sum();
    exact_div_pow2(total, n, "closed form for m_r^0")
}
