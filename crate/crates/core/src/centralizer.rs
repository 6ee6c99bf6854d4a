//! The centralizer algebra `Z_k(Z_2^n)` of `Z_2^n` acting on `V^{(x)k}`:
//! its matrix-unit basis, diagram expansions, dimensions and the Bratteli
//! diagram of its irreducible modules.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial, falling_factorial, integer_partitions, multinomial, multiplicity_factorials, PartParity};
use crate::partitions::{even_block_count_closed, zeta_labels, SetPartition};
use crate::spectral::{exact_div_pow2, walk_count_cube_closed};
use crate::{Error, GroupElement, Limits, Result};

/// Matrix unit `E_alpha^beta`, sending `x_alpha` to `x_beta`, with
/// `sum eps_{alpha_i} = sum eps_{beta_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl BasisElement {
    /// Validates label ranges and the parity condition.
    pub fn new(n: u32, alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        if alpha.len() != beta.len() || alpha.is_empty() {
            return Err(Error::InvalidBasisElement("alpha and beta need the same positive length".into()));
        }
        if alpha.iter().chain(&beta).any(|&x| x == 0 || x > n as usize) {
            return Err(Error::InvalidBasisElement(format!("labels must lie in 1..={n}")));
        }
        if GroupElement::sum_of_units(n, &alpha)? != GroupElement::sum_of_units(n, &beta)? {
            return Err(Error::InvalidBasisElement(format!("{alpha:?} and {beta:?} differ in label parity")));
        }
        Ok(BasisElement { alpha, beta })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn k(&self) -> usize {
        self.alpha.len()
    }

    /// Common endpoint `sum eps_{alpha_i}` in `Z_2^n`.
    pub fn endpoint(&self, n: u32) -> Result<GroupElement> {
        GroupElement::sum_of_units(n, &self.alpha)
    }

    /// Diagram obtained by joining nodes with equal labels, `alpha` on the
    /// bottom row and `beta` on top.
    pub fn diagram(&self) -> SetPartition {
        let labels: Vec<usize> = self.alpha.iter().chain(&self.beta).copied().collect();
        SetPartition::from_labelling(self.k(), &labels).expect("2k labels")
    }

    /// Digit form `E_22333^21213`, available when every label is below 10.
    pub fn compact(&self) -> Option<String> {
        if self.alpha.iter().chain(&self.beta).any(|&x| x > 9) {
            return None;
        }
        let digits = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<String>();
        Some(format!("E_{}^{}", digits(&self.alpha), digits(&self.beta)))
    }
}

/// Bracketed form `E[2,2,3,3,3]^[2,1,2,1,3]`.
impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "E[{}]^[{}]", join(&self.alpha), join(&self.beta))
    }
}

fn tuple_count(n: u32, k: usize) -> u128 {
    (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

fn decode_word(mut index: u64, n: u32, k: usize) -> Vec<usize> {
    let mut word = vec![0; k];
    for slot in word.iter_mut().rev() {
        *slot = (index % n as u64) as usize + 1;
        index /= n as u64;
    }
    word
}

/// Lexicographic stream of the basis of `Z_k(Z_2^n)`, optionally restricted
/// to one endpoint.
pub struct BasisIter {
    n: u32,
    k: usize,
    words: u64,
    endpoints: Vec<u64>,
    buckets: HashMap<u64, Vec<u64>>,
    target: Option<u64>,
    alpha: u64,
    pos: usize,
}

pub fn enumerate_basis(k: usize, n: u32, target: Option<GroupElement>, limits: &Limits) -> Result<BasisIter> {
    GroupElement::zero(n)?;
    if k == 0 {
        return Err(Error::InvalidBasisElement("k must be positive".into()));
    }
    if let Some(t) = target {
        if t.dim() != n {
            return Err(Error::DimensionMismatch { left: n, right: t.dim() });
        }
    }
    limits.check_budget(tuple_count(n, k))?;
    let words = (n as u64).pow(k as u32);
    let mut endpoints = Vec::with_capacity(words as usize);
    let mut buckets: HashMap<u64, Vec<u64>> = HashMap::new();
    for w in 0..words {
        let e = GroupElement::sum_of_units(n, &decode_word(w, n, k))?.bits();
        endpoints.push(e);
        buckets.entry(e).or_default().push(w);
    }
    Ok(BasisIter { n, k, words, endpoints, buckets, target: target.map(|t| t.bits()), alpha: 0, pos: 0 })
}

impl Iterator for BasisIter {
    type Item = BasisElement;

    fn next(&mut self) -> Option<BasisElement> {
        while self.alpha < self.words {
            let e = self.endpoints[self.alpha as usize];
            if self.target.is_some_and(|t| t != e) {
                self.alpha += 1;
                continue;
            }
            let bucket = &self.buckets[&e];
            if let Some(&beta) = bucket.get(self.pos) {
                self.pos += 1;
                return Some(BasisElement {
                    alpha: decode_word(self.alpha, self.n, self.k),
                    beta: decode_word(beta, self.n, self.k),
                });
            }
            self.alpha += 1;
            self.pos = 0;
        }
        None
    }
}

/// `dim Z_k(Z_2^n) = 2^-n sum_i C(n,i) (n-2i)^(2k)`.
#[allow(non_snake_case)]
pub fn dim_Zk_Z2n_spectral(k: usize, n: u32) -> Result<BigInt> {
    GroupElement::zero(n)?;
    let total: BigInt = (0..=n as i64)
        .map(|i| binomial(n as i64, i) * num_traits::pow(BigInt::from(n as i64 - 2 * i), 2 * k))
        .sum();
    exact_div_pow2(total, n, "centralizer dimension")
}

/// `dim Z_k(Z_2^n) = sum_r T(k, r) n!/(n-r)!`: even-block diagrams whose
/// blocks are coloured by distinct labels.
#[allow(non_snake_case)]
pub fn dim_Zk_Z2n_diagrammatic(k: usize, n: u32) -> Result<BigInt> {
    GroupElement::zero(n)?;
    (1..=n as usize)
        .map(|r| Ok(even_block_count_closed(k, r)? * falling_factorial(n as u64, r as u64)))
        .sum()
}

/// Dimension `m_k^a` of the irreducible module labelled by `a`.
pub fn dim_module(k: u32, a: &GroupElement) -> Result<BigInt> {
    walk_count_cube_closed(a.dim(), a.hamming_weight(), k)
}

/// `m_k^a` for `h(a) = h`, counting label multiplicities: `h` odd parts for
/// the coordinates of `a` and up to `n - h` nonzero even parts for the rest.
pub fn multiplicity_multinomial(k: u32, n: u32, h: u32) -> Result<BigInt> {
    GroupElement::zero(n)?;
    if h > n {
        return Err(Error::InvalidWalk(format!("weight {h} exceeds dimension {n}")));
    }
    let (k, n, h) = (k as u64, n as u64, h as u64);
    let mut total = BigInt::zero();
    for r in h..=n {
        let even_parts = (r - h) as usize;
        for odd_total in (0..=k).filter(|t| t % 2 == h % 2) {
            let odd = integer_partitions(odd_total, h as usize, PartParity::Odd);
            if odd.is_empty() {
                continue;
            }
            let even = integer_partitions(k - odd_total, even_parts, PartParity::Even);
            for lo in &odd {
                for le in &even {
                    let parts: Vec<u64> = lo.iter().chain(le).copied().collect();
                    let labelings = factorial(h) * falling_factorial(n - h, r - h);
                    let weight = multinomial(&parts) * labelings;
                    total += weight / (multiplicity_factorials(lo) * multiplicity_factorials(le));
                }
            }
        }
    }
    Ok(total)
}

/// Lazy stream of the summands `E_alpha^alpha'` of `T_d`, one per injective
/// relabelling of the blocks of `d` into `[1, n]`.
pub struct TdIter {
    zeta: Vec<usize>,
    k: usize,
    n: usize,
    selection: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

pub fn expand_td(d: &SetPartition, n: u32) -> Result<TdIter> {
    let r = d.num_blocks();
    if r > n as usize {
        return Err(Error::TooManyBlocks { blocks: r, n });
    }
    let z = zeta_labels(d);
    Ok(TdIter {
        zeta: z.zeta.into_iter().chain(z.zeta_prime).collect(),
        k: d.k(),
        n: n as usize,
        selection: Vec::with_capacity(r),
        used: vec![false; n as usize + 1],
        started: false,
        done: false,
    })
}

impl TdIter {
    fn blocks(&self) -> usize {
        self.zeta.iter().copied().max().unwrap_or(0)
    }

    fn place_from(&mut self, from: usize) -> bool {
        for v in from..=self.n {
            if !self.used[v] {
                self.used[v] = true;
                self.selection.push(v);
                return true;
            }
        }
        false
    }

    fn advance(&mut self) -> bool {
        let r = self.blocks();
        let mut descending = !self.started;
        self.started = true;
        loop {
            if descending {
                if self.selection.len() == r {
                    return true;
                }
                if self.place_from(1) {
                    continue;
                }
            }
            match self.selection.pop() {
                None => return false,
                Some(last) => {
                    self.used[last] = false;
                    descending = self.place_from(last + 1);
                }
            }
        }
    }
}

impl Iterator for TdIter {
    type Item = BasisElement;

    fn next(&mut self) -> Option<BasisElement> {
        if self.done || !self.advance() {
            self.done = true;
            return None;
        }
        let relabelled: Vec<usize> = self.zeta.iter().map(|&j| self.selection[j - 1]).collect();
        Some(BasisElement { alpha: relabelled[..self.k].to_vec(), beta: relabelled[self.k..].to_vec() })
    }
}

/// `p_beta T p_alpha`: the summand `E_alpha^beta` of `T` if present.
pub fn project(
    summands: impl IntoIterator<Item = BasisElement>,
    alpha: &[usize],
    beta: &[usize],
) -> Option<BasisElement> {
    summands.into_iter().find(|e| e.alpha == alpha && e.beta == beta)
}

/// One level of the Bratteli diagram: nonzero multiplicities `m_k^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliLevel {
    pub level: u32,
    pub n: u32,
    pub multiplicities: BTreeMap<GroupElement, BigInt>,
}

impl BratteliLevel {
    pub fn get(&self, a: &GroupElement) -> BigInt {
        self.multiplicities.get(a).cloned().unwrap_or_default()
    }

    /// `sum_a (m_k^a)^2`, which is `dim Z_k(Z_2^n)`.
    pub fn sum_of_squares(&self) -> BigInt {
        self.multiplicities.values().map(|m| m * m).sum()
    }

    /// Vertices ordered by Hamming weight, then with coordinate 1 set first,
    /// e.g. `000, 110, 101, 011`.
    pub fn display_order(&self) -> Vec<(GroupElement, &BigInt)> {
        let mut v: Vec<_> = self.multiplicities.iter().map(|(a, m)| (*a, m)).collect();
        v.sort_by_key(|(a, _)| (a.hamming_weight(), std::cmp::Reverse(a.bits())));
        v
    }
}

/// Levels `0..=k_max`, each obtained from the previous one by summing over
/// the neighbours `a + eps_i`.
pub fn bratteli(n: u32, k_max: u32, limits: &Limits) -> Result<Vec<BratteliLevel>> {
    limits.check_n(n)?;
    GroupElement::zero(n)?;
    let size = 1usize << n;
    let mut current = vec![BigInt::zero(); size];
    current[0] = BigInt::one();
    let mut levels = Vec::with_capacity(k_max as usize + 1);
    for level in 0..=k_max {
        if level > 0 {
            current = (0..size).map(|a| (0..n).map(|i| &current[a ^ (1 << i)]).sum()).collect();
        }
        let multiplicities = current
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(a, m)| Ok((GroupElement::from_index(n, a)?, m.clone())))
            .collect::<Result<_>>()?;
        levels.push(BratteliLevel { level, n, multiplicities });
    }
    Ok(levels)
}

/// A walk on the n-cube from `0`, recorded by the coordinate flipped at each
/// step: vertex `a^j = a^{j-1} + eps_{steps[j]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkPath {
    n: u32,
    steps: Vec<usize>,
}

impl WalkPath {
    pub fn new(n: u32, steps: Vec<usize>) -> Result<Self> {
        GroupElement::zero(n)?;
        if let Some(&bad) = steps.iter().find(|&&s| s == 0 || s > n as usize) {
            return Err(Error::InvalidWalk(format!("step {bad} outside 1..={n}")));
        }
        Ok(WalkPath { n, steps })
    }

    /// Recovers the steps from the visited vertices, which must start at `0`.
    pub fn from_vertices(vertices: &[GroupElement]) -> Result<Self> {
        let first = vertices.first().ok_or_else(|| Error::InvalidWalk("no vertices".into()))?;
        if !first.is_zero() {
            return Err(Error::InvalidWalk(format!("walk starts at {first}, not at 0")));
        }
        let n = first.dim();
        let steps = vertices
            .windows(2)
            .map(|w| {
                let diff = w[0].checked_add(&w[1])?;
                if diff.hamming_weight() != 1 {
                    return Err(Error::InvalidWalk(format!("{} -> {} is not an edge", w[0], w[1])));
                }
                Ok((n - diff.bits().trailing_zeros()) as usize)
            })
            .collect::<Result<_>>()?;
        Self::new(n, steps)
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn vertices(&self) -> Vec<GroupElement> {
        let mut v = GroupElement::zero(self.n).expect("validated dimension");
        let mut out = vec![v];
        for &s in &self.steps {
            v = v + GroupElement::unit(self.n, s as u32).expect("validated step");
            out.push(v);
        }
        out
    }

    pub fn endpoint(&self) -> GroupElement {
        GroupElement::sum_of_units(self.n, &self.steps).expect("validated steps")
    }
}

/// Maps a pair of walks from `0` to a common endpoint to a basis element.
///
/// `alpha` lists the steps of `rho1`; `beta` lists the steps of `rho2` read
/// backwards from the endpoint, so that following `alpha` and then `beta`
/// traces a closed walk at `0`.
pub fn paths_to_diagram(rho1: &WalkPath, rho2: &WalkPath) -> Result<BasisElement> {
    if rho1.n != rho2.n {
        return Err(Error::DimensionMismatch { left: rho1.n, right: rho2.n });
    }
    if rho1.len() != rho2.len() {
        return Err(Error::InvalidWalk(format!("lengths {} and {} differ", rho1.len(), rho2.len())));
    }
    let (e1, e2) = (rho1.endpoint(), rho2.endpoint());
    if e1 != e2 {
        return Err(Error::EndpointMismatch { left: e1.to_string(), right: e2.to_string() });
    }
    let beta = rho2.steps.iter().rev().copied().collect();
    BasisElement::new(rho1.n, rho1.steps.clone(), beta)
}

/// All `n^k` walks of length `k` from `0`, in lexicographic order of steps.
pub fn all_walks(n: u32, k: usize, limits: &Limits) -> Result<impl Iterator<Item = WalkPath>> {
    GroupElement::zero(n)?;
    limits.check_budget(tuple_count(n, k))?;
    let words = (n as u64).pow(k as u32);
    Ok((0..words).map(move |w| WalkPath { n, steps: decode_word(w, n, k) }))
}
