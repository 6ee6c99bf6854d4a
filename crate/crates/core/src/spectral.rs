//! Representation graphs of `Z_2^n`: adjacency matrices, their exact
//! eigen-structure and walk counts by three independent routes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::binomial;
use crate::{Error, GroupElement, IntMatrix, IntPolynomial, Limits, Result};

/// The set `S` of steps generating the graph `R_{V_S}(Z_2^n)`: vertex `b`
/// is joined to `b + s` for every `s` in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepSet {
    n: u32,
    steps: Vec<GroupElement>,
}

impl StepSet {
    pub fn new(n: u32, steps: Vec<GroupElement>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidStepSet("S must be nonempty".into()));
        }
        if let Some(bad) = steps.iter().find(|s| s.dim() != n) {
            return Err(Error::DimensionMismatch { left: n, right: bad.dim() });
        }
        let mut sorted = steps.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != steps.len() {
            return Err(Error::InvalidStepSet("steps must be distinct".into()));
        }
        Ok(StepSet { n, steps })
    }

    /// The n-cube: `S = {epsilon_1, ..., epsilon_n}`.
    pub fn cube(n: u32) -> Result<Self> {
        let steps = (1..=n).map(|i| GroupElement::unit(n, i)).collect::<Result<_>>()?;
        Self::new(n, steps)
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn steps(&self) -> &[GroupElement] {
        &self.steps
    }

    fn check(&self, limits: &Limits) -> Result<usize> {
        limits.check_n(self.n)?;
        Ok(1usize << self.n)
    }

    fn check_vertex(&self, v: &GroupElement) -> Result<()> {
        if v.dim() != self.n {
            Err(Error::DimensionMismatch { left: self.n, right: v.dim() })
        } else {
            Ok(())
        }
    }

    /// Character value `chi_{V_S}(a) = sum_{s in S} (-1)^(a . s)`.
    pub fn character(&self, a: &GroupElement) -> Result<i64> {
        self.steps.iter().map(|s| a.character_value(s).map(i64::from)).sum()
    }
}

/// Adjacency matrix `A_S`, rows and columns in vertex-index order.
pub fn adjacency_matrix(steps: &StepSet, limits: &Limits) -> Result<IntMatrix> {
    let size = steps.check(limits)?;
    let mut m = IntMatrix::zeros(size, size);
    for b in 0..size {
        for s in &steps.steps {
            let c = b ^ s.index();
            m.set(b, c, m.get(b, c) + 1);
        }
    }
    Ok(m)
}

/// Eigenvalues and the `+-1` eigenvector matrix of `A_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralData {
    n: u32,
    eigenvalues: Vec<i64>,
    eigenvectors: IntMatrix,
}

impl SpectralData {
    /// Eigenvalue `lambda_a` belonging to the eigenvector `E_a`.
    pub fn eigenvalue(&self, a: &GroupElement) -> i64 {
        self.eigenvalues[a.index()]
    }

    /// Eigenvalues in vertex-index order of their labels.
    pub fn eigenvalues(&self) -> &[i64] {
        &self.eigenvalues
    }

    /// Matrix whose column `a` is `E_a`, with entry `(b, a) = (-1)^(a . b)`.
    pub fn eigenvector_matrix(&self) -> &IntMatrix {
        &self.eigenvectors
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    /// Checks `A E_a = lambda_a E_a` for every column.
    pub fn verify_eigenpairs(&self, adjacency: &IntMatrix) -> Result<bool> {
        let prod = adjacency.checked_mul(&self.eigenvectors)?;
        let size = self.eigenvalues.len();
        Ok((0..size).all(|a| {
            let lambda = BigInt::from(self.eigenvalues[a]);
            (0..size).all(|b| prod.get(b, a) == &(self.eigenvectors.get(b, a) * &lambda))
        }))
    }

    /// Checks `E^t E = 2^n I`.
    pub fn verify_orthogonality(&self) -> Result<bool> {
        let gram = self.eigenvectors.transpose().checked_mul(&self.eigenvectors)?;
        let size = self.eigenvalues.len();
        Ok(gram == IntMatrix::identity(size).scale(&BigInt::from(size)))
    }
}

pub fn eigen_data(steps: &StepSet, limits: &Limits) -> Result<SpectralData> {
    let size = steps.check(limits)?;
    let n = steps.n;
    let eigenvalues = GroupElement::all(n)?.map(|a| steps.character(&a)).collect::<Result<Vec<_>>>()?;
    let eigenvectors = IntMatrix::from_fn(size, size, |b, a| {
        if (a & b).count_ones() % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        }
    });
    Ok(SpectralData { n, eigenvalues, eigenvectors })
}

/// `(A_S^k)_{b,c}` by `k` sparse matrix-vector products from the indicator of `b`.
pub fn walk_count_bruteforce(
    steps: &StepSet,
    b: &GroupElement,
    c: &GroupElement,
    k: u32,
    limits: &Limits,
) -> Result<BigInt> {
    let size = steps.check(limits)?;
    steps.check_vertex(b)?;
    steps.check_vertex(c)?;
    let mut v = vec![BigInt::zero(); size];
    v[b.index()] = BigInt::one();
    for _ in 0..k {
        // A_S is symmetric: (vA)_x = sum_s v_{x+s}
        v = (0..size).map(|x| steps.steps.iter().map(|s| &v[x ^ s.index()]).sum()).collect();
    }
    Ok(std::mem::take(&mut v[c.index()]))
}

/// `(A_S^k)_{b,c} = 2^-n sum_a (-1)^(a.(b+c)) lambda_a^k`, evaluated exactly.
pub fn walk_count_spectral(
    steps: &StepSet,
    b: &GroupElement,
    c: &GroupElement,
    k: u32,
    limits: &Limits,
) -> Result<BigInt> {
    steps.check(limits)?;
    steps.check_vertex(b)?;
    steps.check_vertex(c)?;
    let diff = *b + *c;
    let mut total = BigInt::zero();
    for a in GroupElement::all(steps.n)? {
        let term = num_traits::pow(BigInt::from(steps.character(&a)?), k as usize);
        if a.character_value(&diff)? > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    exact_div_pow2(total, steps.n, "spectral walk sum")
}

/// Walks of `k` steps between cube vertices at Hamming distance `h`:
/// `2^-n sum_i sum_j (-1)^j C(h,j) C(n-h,i-j) (n-2i)^k`.
pub fn walk_count_cube_closed(n: u32, h: u32, k: u32) -> Result<BigInt> {
    if n == 0 || n > GroupElement::MAX_DIM {
        return Err(Error::InvalidDimension(n));
    }
    if h > n {
        return Err(Error::InvalidWalk(format!("distance {h} exceeds dimension {n}")));
    }
    let (n, h) = (n as i64, h as i64);
    let mut total = BigInt::zero();
    for i in 0..=n {
        let mut weight = BigInt::zero();
        for j in 0..=h {
            let term = binomial(h, j) * binomial(n - h, i - j);
            if j % 2 == 0 {
                weight += term;
            } else {
                weight -= term;
            }
        }
        if !weight.is_zero() {
            total += weight * num_traits::pow(BigInt::from(n - 2 * i), k as usize);
        }
    }
    exact_div_pow2(total, n as u32, "closed-form walk sum")
}

pub(crate) fn exact_div_pow2(value: BigInt, n: u32, what: &'static str) -> Result<BigInt> {
    let (q, r) = value.div_rem(&(BigInt::one() << n as usize));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegral(what))
    }
}

/// Minimal polynomial of the n-cube adjacency matrix, `prod_h (t - (n - 2h))`.
pub fn min_poly_cube(n: u32) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidDimension(n));
    }
    Ok((0..=n as i64).fold(IntPolynomial::one(), |acc, h| &acc * &IntPolynomial::linear_monic(n as i64 - 2 * h)))
}

/// True when the recurrence with the coefficients of the monic `poly`
/// annihilates every window of `counts`.
pub fn satisfies_recurrence(poly: &IntPolynomial, counts: &[BigInt]) -> Result<bool> {
    let d = poly.degree().max(0) as usize;
    if counts.len() < d + 1 {
        return Err(Error::InsufficientData { needed: d + 1, got: counts.len() });
    }
    Ok(counts.windows(d + 1).all(|w| {
        w.iter().zip(poly.coeffs()).map(|(m, p)| m * p).sum::<BigInt>().is_zero()
    }))
}

/// Checks a stream of cube walk counts against `min_poly_cube(n)`.
pub fn recursion_check(n: u32, counts: &[BigInt]) -> Result<bool> {
    satisfies_recurrence(&min_poly_cube(n)?, counts)
}

/// Raising, lowering and weight operators on the n-cube vertex space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub raising: IntMatrix,
    pub lowering: IntMatrix,
    pub weight: IntMatrix,
}

/// Outcome of checking the four `sl_2` identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sl2Report {
    pub sum_is_adjacency: bool,
    pub lowering_raising: bool,
    pub weight_lowering: bool,
    pub weight_raising: bool,
}

impl Sl2Report {
    pub fn all(&self) -> bool {
        self.sum_is_adjacency && self.lowering_raising && self.weight_lowering && self.weight_raising
    }
}

pub fn sl2_triple(n: u32, limits: &Limits) -> Result<Sl2Triple> {
    limits.check_n(n)?;
    GroupElement::zero(n)?;
    let size = 1usize << n;
    let mut raising = IntMatrix::zeros(size, size);
    let mut lowering = IntMatrix::zeros(size, size);
    let mut weight = IntMatrix::zeros(size, size);
    for b in 0..size {
        for i in 0..n {
            let c = b ^ (1 << i);
            if c > b {
                raising.set(c, b, BigInt::one());
            } else {
                lowering.set(c, b, BigInt::one());
            }
        }
        weight.set(b, b, BigInt::from(n as i64 - 2 * b.count_ones() as i64));
    }
    Ok(Sl2Triple { raising, lowering, weight })
}

impl Sl2Triple {
    /// `R + L = A`, `[L, R] = A*`, `[A*, L] = 2L`, `[A*, R] = -2R`.
    pub fn check(&self, adjacency: &IntMatrix) -> Result<Sl2Report> {
        let two = BigInt::from(2);
        Ok(Sl2Report {
            sum_is_adjacency: &self.raising.checked_add(&self.lowering)? == adjacency,
            lowering_raising: self.lowering.commutator(&self.raising)? == self.weight,
            weight_lowering: self.weight.commutator(&self.lowering)? == self.lowering.scale(&two),
            weight_raising: self.weight.commutator(&self.raising)? == self.raising.scale(&-two),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn adjacency_examples() {
        let a1 = adjacency_matrix(&StepSet::cube(1).unwrap(), &lim()).unwrap();
        assert_eq!(a1, IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap());

        let a3 = adjacency_matrix(&StepSet::cube(3).unwrap(), &lim()).unwrap();
        let ones: Vec<usize> = (0..8).filter(|&c| a3.get(0, c) == &BigInt::one()).collect();
        assert_eq!(ones, vec![g("001").index(), g("010").index(), g("100").index()]);
        assert!(a3.is_symmetric());
        assert!(a3.trace().is_zero());

        let diag = StepSet::new(2, vec![g("11")]).unwrap();
        let p = adjacency_matrix(&diag, &lim()).unwrap();
        let expect = IntMatrix::from_rows(&[vec![0, 0, 0, 1], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![1, 0, 0, 0]]);
        assert_eq!(p, expect.unwrap());
    }

    #[test]
    fn step_set_validation() {
        assert!(StepSet::new(2, vec![]).is_err());
        assert!(StepSet::new(2, vec![g("10"), g("10")]).is_err());
        assert!(StepSet::new(2, vec![g("100")]).is_err());
        let tight = Limits { max_n: 2, ..Limits::default() };
        assert_eq!(
            adjacency_matrix(&StepSet::cube(3).unwrap(), &tight),
            Err(Error::CapExceeded { n: 3, cap: 2 })
        );
    }

    #[test]
    fn cube_eigenvalues() {
        let steps = StepSet::cube(3).unwrap();
        let data = eigen_data(&steps, &lim()).unwrap();
        for a in GroupElement::all(3).unwrap() {
            assert_eq!(data.eigenvalue(&a), 3 - 2 * a.hamming_weight() as i64);
        }
        let mut ev = data.eigenvalues().to_vec();
        ev.sort();
        assert_eq!(ev, vec![-3, -1, -1, -1, 1, 1, 1, 3]);
        let adj = adjacency_matrix(&steps, &lim()).unwrap();
        assert!(data.verify_eigenpairs(&adj).unwrap());
        assert!(data.verify_orthogonality().unwrap());
    }

    #[test]
    fn zero_element_eigenvalue_is_step_count() {
        let steps = StepSet::new(3, vec![g("110"), g("011"), g("111"), g("100")]).unwrap();
        let data = eigen_data(&steps, &lim()).unwrap();
        assert_eq!(data.eigenvalue(&g("000")), 4);
        let adj = adjacency_matrix(&steps, &lim()).unwrap();
        assert!(data.verify_eigenpairs(&adj).unwrap());
    }

    #[test]
    fn walk_count_examples() {
        let cube = StepSet::cube(3).unwrap();
        let z = g("000");
        assert_eq!(walk_count_bruteforce(&cube, &z, &z, 2, &lim()).unwrap(), BigInt::from(3));
        assert_eq!(walk_count_spectral(&cube, &z, &g("110"), 4, &lim()).unwrap(), BigInt::from(20));
        assert_eq!(walk_count_spectral(&cube, &z, &g("111"), 2, &lim()).unwrap(), BigInt::zero());
        assert_eq!(walk_count_spectral(&cube, &z, &g("100"), 5, &lim()).unwrap(), BigInt::from(61));
        assert_eq!(walk_count_cube_closed(3, 0, 6).unwrap(), BigInt::from(183));
        assert_eq!(walk_count_cube_closed(3, 2, 6).unwrap(), BigInt::from(182));
        assert_eq!(walk_count_cube_closed(3, 3, 7).unwrap(), BigInt::from(546));
        assert!(walk_count_cube_closed(3, 4, 7).is_err());

        let diag = StepSet::new(2, vec![g("11")]).unwrap();
        assert_eq!(walk_count_bruteforce(&diag, &g("00"), &g("00"), 3, &lim()).unwrap(), BigInt::zero());
        assert_eq!(walk_count_spectral(&diag, &g("00"), &g("00"), 3, &lim()).unwrap(), BigInt::zero());
        assert_eq!(walk_count_bruteforce(&cube, &z, &z, 0, &lim()).unwrap(), BigInt::one());
        assert_eq!(walk_count_bruteforce(&cube, &z, &g("010"), 0, &lim()).unwrap(), BigInt::zero());
    }

    #[test]
    fn minimal_polynomials() {
        assert_eq!(min_poly_cube(3).unwrap(), IntPolynomial::from_i64s(&[9, 0, -10, 0, 1]));
        assert_eq!(min_poly_cube(1).unwrap(), IntPolynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(min_poly_cube(2).unwrap(), IntPolynomial::from_i64s(&[0, -4, 0, 1]));
        for n in 1..=5 {
            let adj = adjacency_matrix(&StepSet::cube(n).unwrap(), &lim()).unwrap();
            assert!(adj.eval_poly(&min_poly_cube(n).unwrap()).unwrap().is_zero(), "n = {n}");
        }
    }

    #[test]
    fn recursion_examples() {
        let to_big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert!(recursion_check(3, &to_big(&[20, 0, 182, 0, 1640])).unwrap());
        assert!(recursion_check(3, &to_big(&[0; 7])).unwrap());
        assert!(recursion_check(3, &to_big(&[1, 0, 3, 0, 21, 0, 183, 0, 1641])).unwrap());
        assert!(!recursion_check(3, &to_big(&[20, 0, 182, 0, 1641])).unwrap());
        assert_eq!(
            recursion_check(3, &to_big(&[1, 0, 3])),
            Err(Error::InsufficientData { needed: 5, got: 3 })
        );
    }

    #[test]
    fn sl2_examples() {
        let t = sl2_triple(1, &lim()).unwrap();
        assert_eq!(t.raising, IntMatrix::from_rows(&[vec![0, 0], vec![1, 0]]).unwrap());
        assert_eq!(t.lowering, IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap());
        assert_eq!(t.weight, IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]]).unwrap());
        for n in 1..=6 {
            let t = sl2_triple(n, &lim()).unwrap();
            let adj = adjacency_matrix(&StepSet::cube(n).unwrap(), &lim()).unwrap();
            assert!(t.check(&adj).unwrap().all(), "n = {n}");
            assert!(t.weight.trace().is_zero());
        }
    }
}
