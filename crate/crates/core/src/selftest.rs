//! Fixed verification suite: nine checks against known values and across
//! independent computation routes.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use crate::centralizer::{
    all_walks, bratteli, dim_Zk_Z2n_diagrammatic, dim_Zk_Z2n_spectral, enumerate_basis, expand_td,
    multiplicity_multinomial, paths_to_diagram, WalkPath,
};
use crate::combinat::falling_factorial;
use crate::genfun::{denominator_factored, det_fraction_free, egf_coefficients, invariants_series, poincare_series, PolyMatrix};
use crate::partitions::{
    dim_Zk_G21n, dim_Zk_Sn, enumerate_partitions, even_block_count_closed, even_block_count_partitionwise,
    tanabe_condition,
};
use crate::spectral::{
    adjacency_matrix, min_poly_cube, recursion_check, sl2_triple, walk_count_bruteforce, walk_count_cube_closed,
    walk_count_spectral, StepSet,
};
use crate::{BigInt, GroupElement, IntPolynomial, Limits, Result};

pub const BRATTELI_N3: [&[i64]; 7] = [
    &[1],
    &[1, 1, 1],
    &[3, 2, 2, 2],
    &[7, 7, 7, 6],
    &[21, 20, 20, 20],
    &[61, 61, 61, 60],
    &[183, 182, 182, 182],
];

pub const SUM_OF_SQUARES_N3: [i64; 7] = [1, 3, 21, 183, 1641, 14763, 132861];

/// Coefficients of `t^0..=t^8` for one representative of each weight, n = 3.
pub const SERIES_N3: [(&str, [i64; 9]); 4] = [
    ("000", [1, 0, 3, 0, 21, 0, 183, 0, 1641]),
    ("100", [0, 1, 0, 7, 0, 61, 0, 547, 0]),
    ("110", [0, 0, 2, 0, 20, 0, 182, 0, 1640]),
    ("111", [0, 0, 0, 6, 0, 60, 0, 546, 0]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    /// Largest n in the cross-route sweep.
    pub sweep_max_n: u32,
    /// Alters one expected value so that the Bratteli check must fail.
    pub corrupt_fixture: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { sweep_max_n: 4, corrupt_fixture: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {}. {}: {}", self.id, self.name, self.detail)
    }
}

struct Recorder {
    failures: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { failures: Vec::new() }
    }

    fn expect<T: PartialEq + fmt::Debug>(&mut self, what: impl fmt::Display, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn ok(&mut self, what: impl fmt::Display, cond: bool) {
        if !cond {
            self.failures.push(format!("{what} failed"));
        }
    }

    fn finish(self, id: u8, name: &'static str, summary: String) -> Check {
        let passed = self.failures.is_empty();
        let detail = if passed { summary } else { self.failures.join("; ") };
        Check { id, name, passed, detail }
    }
}

fn wrap(id: u8, name: &'static str, body: impl FnOnce(&mut Recorder) -> Result<String>) -> Check {
    let mut rec = Recorder::new();
    match body(&mut rec) {
        Ok(summary) => rec.finish(id, name, summary),
        Err(e) => Check { id, name, passed: false, detail: format!("error: {e}") },
    }
}

fn ints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn g(s: &str) -> GroupElement {
    s.parse().expect("fixture vertex")
}

pub fn bratteli_reproduction(opts: &Options) -> Check {
    wrap(1, "Bratteli diagram n=3", |rec| {
        let mut squares = SUM_OF_SQUARES_N3;
        if opts.corrupt_fixture {
            squares[6] += 1;
        }
        let levels = bratteli(3, 6, &Limits::default())?;
        for (level, want) in levels.iter().zip(BRATTELI_N3) {
            let got: Vec<BigInt> = level.display_order().into_iter().map(|(_, m)| m.clone()).collect();
            rec.expect(format_args!("level {} multiplicities", level.level), got, ints(want));
        }
        let got: Vec<BigInt> = levels.iter().map(|l| l.sum_of_squares()).collect();
        rec.expect("sums of squares", got, ints(&squares));
        Ok("levels 0..6 and sums of squares 1..132861 exact".into())
    })
}

pub fn dimension_table() -> Check {
    wrap(2, "dimension table", |rec| {
        rec.expect("dim Z_2(Z_2^3) spectral", dim_Zk_Z2n_spectral(2, 3)?, BigInt::from(21));
        rec.expect("dim Z_2(Z_2^3) diagrammatic", dim_Zk_Z2n_diagrammatic(2, 3)?, BigInt::from(21));
        rec.expect("dim Z_2(S_3)", dim_Zk_Sn(2, 3), BigInt::from(14));
        rec.expect("dim Z_2(G(2,1,3))", dim_Zk_G21n(2, 3)?, BigInt::from(4));
        rec.expect("T(4,2) closed", even_block_count_closed(4, 2)?, BigInt::from(63));
        rec.expect("T(4,2) partition-wise", even_block_count_partitionwise(4, 2), BigInt::from(63));
        let t1 = even_block_count_closed(2, 1)?;
        let t2 = even_block_count_closed(2, 2)?;
        rec.expect("T(2,1), T(2,2)", (t1.clone(), t2.clone()), (BigInt::from(1), BigInt::from(3)));
        let decomposition = t1 * falling_factorial(3, 1) + t2 * falling_factorial(3, 2);
        rec.expect("1*3 + 3*6", decomposition, BigInt::from(21));
        Ok("21, 14, 4, T(4,2)=63 twice, 1*3+3*6=21".into())
    })
}

pub fn poincare_n3() -> Check {
    wrap(3, "Poincare series n=3", |rec| {
        let limits = Limits::default();
        let start = Instant::now();
        let det = det_fraction_free(&PolyMatrix::cube(3, &limits)?)?;
        let elapsed = start.elapsed();
        let paper = &IntPolynomial::from_i64s(&[1, 0, -9]) * &IntPolynomial::from_i64s(&[1, 0, -1]).pow(3);
        rec.expect("det(I - tA)", det.clone(), paper);
        rec.expect("det(I - tA) against factored form", det, denominator_factored(3)?.expanded);
        rec.ok(format_args!("determinant in {elapsed:?} under 5 s"), elapsed < Duration::from_secs(5));
        for (a, want) in SERIES_N3 {
            let got = poincare_series(3, &g(a), &limits)?.coefficients(8);
            rec.expect(format_args!("m^({a})(t)"), got, ints(&want));
        }
        Ok("four series through t^8 and det(I - tA) = (1-9t^2)(1-t^2)^3 under 5 s".into())
    })
}

pub fn cross_route_sweep(opts: &Options) -> Check {
    const K: u32 = 8;
    wrap(4, "cross-route sweep", |rec| {
        let limits = Limits::default();
        let start = Instant::now();
        let mut compared = 0u64;
        for n in 1..=opts.sweep_max_n {
            let cube = StepSet::cube(n)?;
            let zero = GroupElement::zero(n)?;
            for a in GroupElement::all(n)? {
                let h = a.hamming_weight();
                let poincare = poincare_series(n, &a, &limits)?.coefficients(K as usize);
                let egf = egf_coefficients(n, h, K as usize)?;
                for k in 0..=K {
                    let routes = [
                        walk_count_bruteforce(&cube, &zero, &a, k, &limits)?,
                        walk_count_spectral(&cube, &zero, &a, k, &limits)?,
                        walk_count_cube_closed(n, h, k)?,
                        multiplicity_multinomial(k, n, h)?,
                        egf[k as usize].clone(),
                        poincare[k as usize].clone(),
                    ];
                    rec.ok(
                        format_args!("n={n} a={a} k={k} routes {routes:?} agree"),
                        routes.iter().all(|r| r == &routes[0]),
                    );
                    compared += 1;
                }
            }
        }
        let elapsed = start.elapsed();
        rec.ok(format_args!("sweep in {elapsed:?} under 60 s"), elapsed < Duration::from_secs(60));
        Ok(format!("{compared} cases over n=1..{}, k<=8, six routes agree under 60 s", opts.sweep_max_n))
    })
}

pub fn recursion() -> Check {
    wrap(5, "minimal polynomial recursion", |rec| {
        rec.expect("min_poly_cube(3)", min_poly_cube(3)?, IntPolynomial::from_i64s(&[9, 0, -10, 0, 1]));
        let limits = Limits::default();
        for (a, _) in SERIES_N3 {
            let stream = poincare_series(3, &g(a), &limits)?.coefficients(16);
            rec.ok(format_args!("recursion for m^({a})"), recursion_check(3, &stream)?);
        }
        let m = |k| walk_count_cube_closed(3, 2, k);
        let (m8, m6, m4) = (m(8)?, m(6)?, m(4)?);
        rec.expect("m_8, 10 m_6, 9 m_4", vec![m8.clone(), &m6 * 10, &m4 * 9], ints(&[1640, 1820, 180]));
        rec.expect("1640 - 1820 + 180", m8 - m6 * 10 + m4 * 9, BigInt::from(0));
        Ok("t^4 - 10t^2 + 9 annihilates all four streams; 1640 - 1820 + 180 = 0".into())
    })
}

pub fn basis_bijection() -> Check {
    wrap(6, "basis and path bijection", |rec| {
        let limits = Limits::default();
        let basis: Vec<_> = enumerate_basis(2, 3, None, &limits)?.collect();
        rec.expect("|basis| for k=2, n=3", basis.len(), 21);

        let mut counts = Vec::new();
        let mut covered = HashSet::new();
        let mut disjoint = true;
        for d in enumerate_partitions(2, 3, true) {
            let summands: Vec<_> = expand_td(&d, 3)?.collect();
            counts.push(summands.len());
            for s in summands {
                disjoint &= covered.insert(s);
            }
        }
        counts.sort_unstable();
        rec.expect("T_d summand counts", counts, vec![3, 6, 6, 6]);
        rec.ok("T_d expansions are disjoint", disjoint);
        rec.ok("T_d expansions cover the basis", covered == basis.iter().cloned().collect());

        let rho1 = WalkPath::new(3, vec![2, 2, 3, 3, 3])?;
        let rho2 = WalkPath::from_vertices(&["000", "001", "101", "111", "011", "001"].map(g))?;
        let image = paths_to_diagram(&rho1, &rho2)?;
        rec.expect("highlighted path pair", image.compact(), Some("E_22333^21213".to_string()));

        let levels = bratteli(3, 5, &limits)?;
        for (k, level) in levels.iter().enumerate().skip(1) {
            let mut by_end: BTreeMap<GroupElement, Vec<WalkPath>> = BTreeMap::new();
            for w in all_walks(3, k, &limits)? {
                by_end.entry(w.endpoint()).or_default().push(w);
            }
            for (end, walks) in &by_end {
                let mut images = HashSet::new();
                for r1 in walks {
                    for r2 in walks {
                        images.insert(paths_to_diagram(r1, r2)?);
                    }
                }
                let m = level.get(end);
                rec.expect(format_args!("pairs ending at {end}, k={k}"), BigInt::from(images.len()), &m * &m);
                let basis_here = enumerate_basis(k, 3, Some(*end), &limits)?.count();
                rec.expect(format_args!("basis elements ending at {end}, k={k}"), images.len(), basis_here);
            }
        }
        Ok("21 elements, 3+6+6+6 disjoint cover, E_22333^21213, (m_k^a)^2 pairs for k<=5".into())
    })
}

pub fn tanabe_equivalence() -> Check {
    wrap(7, "Tanabe parity condition", |rec| {
        let mut total = 0u64;
        for k in 1..=4 {
            for n in 1..=4 {
                for d in enumerate_partitions(k, n, false) {
                    rec.ok(format_args!("k={k} n={n} d={d}"), tanabe_condition(&d, n) == d.all_blocks_even());
                    total += 1;
                }
            }
        }
        Ok(format!("parity condition iff all blocks even on {total} partitions, k,n<=4"))
    })
}

pub fn invariants_shortcut() -> Check {
    wrap(8, "invariants shortcut", |rec| {
        let limits = Limits::default();
        for n in 1..=4 {
            let shortcut = invariants_series(n, &limits)?;
            let cramer = poincare_series(n, &GroupElement::zero(n)?, &limits)?;
            rec.expect(format_args!("n={n}"), shortcut.reduced, cramer.reduced);
        }
        Ok("det(I - tA')/det(I - tA) = m^0(t) for n<=4".into())
    })
}

pub fn sl2_identities() -> Check {
    wrap(9, "sl2 identities", |rec| {
        let limits = Limits::default();
        for n in 1..=6 {
            let adjacency = adjacency_matrix(&StepSet::cube(n)?, &limits)?;
            let report = sl2_triple(n, &limits)?.check(&adjacency)?;
            rec.expect(format_args!("n={n}"), report.all(), true);
        }
        Ok("R+L=A, [L,R]=A*, [A*,L]=2L, [A*,R]=-2R for n<=6".into())
    })
}

/// Runs the nine checks in order.
pub fn run(opts: &Options) -> Vec<Check> {
    vec![
        bratteli_reproduction(opts),
        dimension_table(),
        poincare_n3(),
        cross_route_sweep(opts),
        recursion(),
        basis_bijection(),
        tanabe_equivalence(),
        invariants_shortcut(),
        sl2_identities(),
    ]
}

/// Number of `(n, a, k)` cases the sweep compares.
pub fn sweep_size(max_n: u32) -> u64 {
    (1..=max_n).map(|n| (1u64 << n) * 9).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_fixture_fails() {
        let c = bratteli_reproduction(&Options { corrupt_fixture: true, ..Options::default() });
        assert!(!c.passed);
        assert!(c.detail.contains("132862"));
        assert!(bratteli_reproduction(&Options::default()).passed);
    }

    #[test]
    fn cheap_checks_pass() {
        for c in [dimension_table(), poincare_n3(), recursion(), invariants_shortcut()] {
            assert!(c.passed, "{c}");
        }
    }

    #[test]
    fn small_sweep() {
        let c = cross_route_sweep(&Options { sweep_max_n: 2, ..Options::default() });
        assert!(c.passed, "{c}");
        assert!(c.detail.starts_with(&sweep_size(2).to_string()));
    }
}
