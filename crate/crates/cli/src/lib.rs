//! Command-line front end for `cubewalk`.
//!
//! [`run`] executes a parsed [`Cli`] and returns the text to print with the
//! exit status; `main` only forwards it.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use cubewalk::centralizer::{bratteli, dim_Zk_Z2n_diagrammatic, dim_Zk_Z2n_spectral, expand_td, multiplicity_multinomial, BasisElement};
use cubewalk::genfun::{closed_form_m0, egf_coefficients, poincare_series};
use cubewalk::partitions::{
    dim_Zk_G21n, dim_Zk_Sn, enumerate_partitions, even_block_count_partitionwise, SetPartition,
};
use cubewalk::selftest;
use cubewalk::spectral::{walk_count_bruteforce, walk_count_cube_closed, walk_count_spectral, StepSet};
use cubewalk::{json as enc, Error, GroupElement, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cubewalk", version, about = "Exact walk counts on the n-cube and centralizer algebra data of Z_2^n")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Recompute results by independent routes and report agreement.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Largest n for dense 2^n x 2^n matrices [default: 12]. Memory grows as 4^n.
    #[arg(long, global = true, value_name = "N")]
    pub max_n: Option<u32>,
    /// Largest number of tuples or diagrams an enumeration may visit [default: 10000000].
    #[arg(long, global = true, value_name = "B")]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Spectral,
    Closed,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Z2n,
    Sn,
    G21n,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Poincare,
    Egf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count walks of length k between two cube vertices.
    Walks {
        #[arg(short = 'n')]
        n: u32,
        /// Start vertex as a bit string, coordinate 1 first (e.g. 110).
        #[arg(long)]
        from: String,
        /// End vertex as a bit string.
        #[arg(long)]
        to: String,
        #[arg(short = 'k')]
        k: u32,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Dimension of the centralizer algebra Z_k(G) for G = Z_2^n, S_n or G(2,1,n).
    Dim {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: u32,
        #[arg(long, value_enum, default_value_t = Algebra::Z2n)]
        algebra: Algebra,
    },
    /// Generating function of the multiplicities m_k^a.
    Series {
        #[arg(short = 'n')]
        n: u32,
        /// Module label as a bit string.
        #[arg(short = 'a')]
        a: String,
        #[arg(long, value_enum, default_value_t = SeriesKind::Poincare)]
        kind: SeriesKind,
        /// Highest power of t to expand.
        #[arg(short = 'K', default_value_t = 8)]
        max_power: usize,
    },
    /// List set partition diagrams on 2k nodes; n labels the T_d expansions.
    Diagrams {
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: u32,
        /// Keep only diagrams whose blocks all have even size.
        #[arg(long)]
        even_only: bool,
        /// List the matrix units E_alpha^beta summing to each T_d.
        #[arg(long)]
        expand: bool,
    },
    /// Bratteli diagram levels with multiplicities and sums of squares.
    Bratteli {
        #[arg(short = 'n')]
        n: u32,
        #[arg(long, default_value_t = 6)]
        k_max: u32,
    },
    /// Run the fixed verification suite.
    Selftest {
        #[arg(long, hide = true)]
        corrupt_fixture: bool,
    },
}

/// Text for stdout and stderr, and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_CAP,
        Error::InvalidDimension(_)
        | Error::DimensionMismatch { .. }
        | Error::InvalidBitString(_)
        | Error::BitsOutOfRange { .. }
        | Error::InvalidStepSet(_)
        | Error::InvalidPartition(_)
        | Error::InvalidBasisElement(_)
        | Error::InvalidWalk(_)
        | Error::TooManyBlocks { .. } => EXIT_USAGE,
        _ => EXIT_MISMATCH,
    }
}

struct Verification {
    name: String,
    values: Vec<(String, String)>,
    ok: bool,
}

impl Verification {
    fn equal(name: impl Into<String>, values: Vec<(&str, String)>) -> Self {
        let ok = values.windows(2).all(|w| w[0].1 == w[1].1);
        Verification { name: name.into(), values: values.into_iter().map(|(k, v)| (k.to_string(), v)).collect(), ok }
    }
}

struct Record {
    command: &'static str,
    params: Map<String, Value>,
    result: Map<String, Value>,
    table: Vec<String>,
    checks: Vec<Verification>,
    failed: bool,
}

impl Record {
    fn new(command: &'static str, params: Value) -> Self {
        let params = match params {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Record { command, params, result: Map::new(), table: Vec::new(), checks: Vec::new(), failed: false }
    }

    fn set(&mut self, key: &str, value: Value) {
        self.result.insert(key.to_string(), value);
    }

    fn line(&mut self, s: impl Into<String>) {
        self.table.push(s.into());
    }

    fn all_ok(&self) -> bool {
        !self.failed && self.checks.iter().all(|c| c.ok)
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut out = Map::new();
                out.insert("command".into(), json!(self.command));
                out.insert("params".into(), Value::Object(self.params.clone()));
                out.insert("result".into(), Value::Object(self.result.clone()));
                if !self.checks.is_empty() {
                    let checks: Vec<Value> = self
                        .checks
                        .iter()
                        .map(|c| {
                            let values: Map<String, Value> =
                                c.values.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                            json!({ "name": c.name, "values": values, "match": c.ok })
                        })
                        .collect();
                    out.insert("verification".into(), json!({ "all_match": self.all_ok(), "checks": checks }));
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(out)).expect("serializable");
                s.push('\n');
                s
            }
            Format::Table => {
                let mut s = String::new();
                for l in &self.table {
                    s.push_str(l);
                    s.push('\n');
                }
                if !self.checks.is_empty() {
                    s.push_str("verification:\n");
                    for c in &self.checks {
                        let values: Vec<String> = c.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        let status = if c.ok { "match" } else { "MISMATCH" };
                        if values.is_empty() {
                            s.push_str(&format!("  {} [{status}]\n", c.name));
                        } else {
                            s.push_str(&format!("  {}: {} [{status}]\n", c.name, values.join(", ")));
                        }
                    }
                    let summary = if self.checks.iter().all(|c| c.ok) { "all routes agree" } else { "routes DISAGREE" };
                    s.push_str(summary);
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn vertex(n: u32, s: &str) -> Result<GroupElement, Error> {
    let g: GroupElement = s.parse()?;
    if g.dim() != n {
        return Err(Error::DimensionMismatch { left: n, right: g.dim() });
    }
    Ok(g)
}

fn join(xs: &[BigInt]) -> String {
    xs.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
}

fn element_text(e: &BasisElement) -> String {
    e.compact().unwrap_or_else(|| e.to_string())
}

fn blocks_text(d: &SetPartition) -> String {
    d.blocks()
        .iter()
        .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn limits_of(cli: &Cli) -> Limits {
    let d = Limits::default();
    Limits { max_n: cli.max_n.unwrap_or(d.max_n), budget: cli.budget.unwrap_or(d.budget) }
}

pub fn run(cli: &Cli) -> Outcome {
    let limits = limits_of(cli);
    let record = match &cli.command {
        Command::Walks { n, from, to, k, method } => walks(cli.verify, &limits, *n, from, to, *k, *method),
        Command::Dim { k, n, algebra } => dim(cli.verify, &limits, *k, *n, *algebra),
        Command::Series { n, a, kind, max_power } => series(cli.verify, &limits, *n, a, *kind, *max_power),
        Command::Diagrams { k, n, even_only, expand } => diagrams(cli.verify, &limits, *k, *n, *even_only, *expand),
        Command::Bratteli { n, k_max } => bratteli_cmd(cli.verify, &limits, *n, *k_max),
        Command::Selftest { corrupt_fixture } => Ok(selftest_cmd(cli.max_n, *corrupt_fixture)),
    };
    match record {
        Ok(r) => Outcome {
            stdout: r.render(cli.format),
            stderr: String::new(),
            code: if r.all_ok() { EXIT_OK } else { EXIT_MISMATCH },
        },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: exit_code(&e) },
    }
}

fn walks(verify: bool, limits: &Limits, n: u32, from: &str, to: &str, k: u32, method: Method) -> Result<Record, Error> {
    let b = vertex(n, from)?;
    let c = vertex(n, to)?;
    let mut r = Record::new("walks", json!({ "n": n, "from": from, "to": to, "k": k, "method": format!("{method:?}").to_lowercase() }));
    let cube = StepSet::cube(n)?;
    let h = (b + c).hamming_weight();
    let route = |m: Method| -> Result<BigInt, Error> {
        match m {
            Method::Brute => walk_count_bruteforce(&cube, &b, &c, k, limits),
            Method::Spectral => walk_count_spectral(&cube, &b, &c, k, limits),
            _ => walk_count_cube_closed(n, h, k),
        }
    };
    let names = [("brute", Method::Brute), ("spectral", Method::Spectral), ("closed", Method::Closed)];
    let chosen: Vec<(&str, Method)> = match method {
        Method::All => names.to_vec(),
        m => names.iter().copied().filter(|(_, x)| *x == m).collect(),
    };
    let values: Vec<(&str, BigInt)> = chosen.iter().map(|&(name, m)| Ok((name, route(m)?))).collect::<Result<_, Error>>()?;
    r.set("count", enc::bigint(&values[0].1));
    r.line(format!("walks on the {n}-cube from {b} to {c} in {k} steps: {}", values[0].1));
    if method == Method::All {
        let routes: Map<String, Value> = values.iter().map(|(name, v)| (name.to_string(), enc::bigint(v))).collect();
        r.set("routes", Value::Object(routes));
        for (name, v) in &values {
            r.line(format!("  {name}: {v}"));
        }
    }
    if method == Method::All || verify {
        let all: Vec<(&str, String)> = names.iter().map(|&(name, m)| Ok((name, route(m)?.to_string()))).collect::<Result<_, Error>>()?;
        r.checks.push(Verification::equal("walk count", all));
    }
    Ok(r)
}

fn dim(verify: bool, limits: &Limits, k: usize, n: u32, algebra: Algebra) -> Result<Record, Error> {
    GroupElement::zero(n)?;
    let name = match algebra {
        Algebra::Z2n => "z2n",
        Algebra::Sn => "sn",
        Algebra::G21n => "g21n",
    };
    let mut r = Record::new("dim", json!({ "k": k, "n": n, "algebra": name }));
    let enumerated = |even_only: bool, expected: &BigInt| -> Result<String, Error> {
        limits.check_budget(u128::try_from(expected.clone()).unwrap_or(u128::MAX))?;
        Ok(enumerate_partitions(k, n as usize, even_only).count().to_string())
    };
    match algebra {
        Algebra::Z2n => {
            let spectral = dim_Zk_Z2n_spectral(k, n)?;
            let diagrammatic = dim_Zk_Z2n_diagrammatic(k, n)?;
            r.set("dimension", enc::bigint(&spectral));
            r.set("spectral", enc::bigint(&spectral));
            r.set("diagrammatic", enc::bigint(&diagrammatic));
            r.line(format!("dim Z_{k}(Z_2^{n}) = {spectral}"));
            r.line(format!("  spectral: {spectral}"));
            r.line(format!("  diagrammatic: {diagrammatic}"));
            let mut values = vec![("spectral", spectral.to_string()), ("diagrammatic", diagrammatic.to_string())];
            if verify {
                values.push(("closed_m0", closed_form_m0(n, 2 * k as u32)?.to_string()));
            }
            r.checks.push(Verification::equal("dimension", values));
        }
        Algebra::Sn => {
            let d = dim_Zk_Sn(k, n as usize);
            r.set("dimension", enc::bigint(&d));
            r.line(format!("dim Z_{k}(S_{n}) = {d}"));
            if verify {
                let count = enumerated(false, &d)?;
                r.checks.push(Verification::equal("dimension", vec![("stirling", d.to_string()), ("enumerated", count)]));
            }
        }
        Algebra::G21n => {
            let d = dim_Zk_G21n(k, n as usize)?;
            r.set("dimension", enc::bigint(&d));
            r.line(format!("dim Z_{k}(G(2,1,{n})) = {d}"));
            if verify {
                let partitionwise: BigInt = (1..=k.min(n as usize)).map(|j| even_block_count_partitionwise(k, j)).sum();
                let count = enumerated(true, &d)?;
                r.checks.push(Verification::equal(
                    "dimension",
                    vec![("closed", d.to_string()), ("partitionwise", partitionwise.to_string()), ("enumerated", count)],
                ));
            }
        }
    }
    Ok(r)
}

fn series(verify: bool, limits: &Limits, n: u32, a: &str, kind: SeriesKind, max_power: usize) -> Result<Record, Error> {
    let g = vertex(n, a)?;
    let h = g.hamming_weight();
    let kind_name = match kind {
        SeriesKind::Poincare => "poincare",
        SeriesKind::Egf => "egf",
    };
    let mut r = Record::new("series", json!({ "n": n, "a": a, "kind": kind_name, "K": max_power }));
    let eigen: Vec<i64> = (0..=n as i64).map(|j| n as i64 - 2 * j).collect();
    let mut routes: Vec<(&str, Vec<BigInt>)> = Vec::new();
    let coefficients = match kind {
        SeriesKind::Poincare => {
            let s = poincare_series(n, &g, limits)?;
            r.set("raw", enc::rational_function(&s.raw, eigen.iter().copied()));
            r.set("reduced", enc::rational_function(&s.reduced, eigen.iter().copied()));
            r.line(format!("m^({g})(t) = {}", s.raw));
            r.line(format!("        = {}", s.reduced));
            s.coefficients(max_power)
        }
        SeriesKind::Egf => {
            r.line(format!("m^({g}) exponential generating function: cosh(t)^{} sinh(t)^{h}", n - h));
            egf_coefficients(n, h, max_power)?
        }
    };
    r.set("coefficients", enc::bigints(&coefficients));
    r.line(format!("m_k for k = 0..{max_power}: {}", join(&coefficients)));
    if verify {
        match kind {
            SeriesKind::Poincare => routes.push(("egf", egf_coefficients(n, h, max_power)?)),
            SeriesKind::Egf => routes.push(("poincare", poincare_series(n, &g, limits)?.coefficients(max_power))),
        }
        let closed = (0..=max_power as u32).map(|k| walk_count_cube_closed(n, h, k)).collect::<Result<Vec<_>, _>>()?;
        let multinomial = (0..=max_power as u32).map(|k| multiplicity_multinomial(k, n, h)).collect::<Result<Vec<_>, _>>()?;
        routes.push(("closed", closed));
        routes.push(("multinomial", multinomial));
        let mut values = vec![(kind_name, join(&coefficients))];
        values.extend(routes.iter().map(|(name, v)| (*name, join(v))));
        r.checks.push(Verification::equal("coefficients", values));
    }
    Ok(r)
}

fn diagrams(verify: bool, limits: &Limits, k: usize, n: u32, even_only: bool, expand: bool) -> Result<Record, Error> {
    GroupElement::zero(n)?;
    let mut r = Record::new("diagrams", json!({ "k": k, "n": n, "even_only": even_only, "expand": expand }));
    let expected = if even_only { dim_Zk_G21n(k, k)? } else { dim_Zk_Sn(k, 2 * k) };
    limits.check_budget(u128::try_from(expected.clone()).unwrap_or(u128::MAX))?;
    let expected_summands = match (expand, even_only) {
        (false, _) => None,
        (true, true) => Some(dim_Zk_Z2n_spectral(k, n)?),
        (true, false) => Some(BigInt::from(n).pow(2 * k as u32)),
    };
    if let Some(total) = &expected_summands {
        limits.check_budget(u128::try_from(total.clone()).unwrap_or(u128::MAX))?;
    }
    let mut listed = Vec::new();
    let mut total = 0usize;
    for (i, d) in enumerate_partitions(k, 2 * k, even_only).enumerate() {
        let mut entry = Map::new();
        entry.insert("rgs".into(), json!(d.to_string()));
        entry.insert("blocks".into(), json!(d.blocks()));
        r.line(format!("d{}: {}  {}", i + 1, d, blocks_text(&d)));
        if expand {
            // no injective labelling exists when d has more than n blocks
            let summands: Vec<BasisElement> = match expand_td(&d, n) {
                Ok(iter) => iter.collect(),
                Err(Error::TooManyBlocks { .. }) => Vec::new(),
                Err(e) => return Err(e),
            };
            total += summands.len();
            if summands.is_empty() {
                r.line(format!("    T_d = 0  ({} blocks > n = {n})", d.num_blocks()));
            } else {
                let texts: Vec<String> = summands.iter().map(element_text).collect();
                let noun = if summands.len() == 1 { "summand" } else { "summands" };
                r.line(format!("    T_d = {}  ({} {noun})", texts.join(" + "), summands.len()));
            }
            entry.insert("summands".into(), Value::Array(summands.iter().map(enc::basis_element).collect()));
            entry.insert("summand_count".into(), json!(summands.len()));
        }
        listed.push(Value::Object(entry));
    }
    let count = listed.len();
    r.set("count", json!(count));
    r.set("diagrams", Value::Array(listed));
    r.line(format!("diagrams: {count}"));
    if expand {
        r.set("total_summands", json!(total));
        r.line(format!("total summands: {total}"));
    }
    if verify {
        r.checks.push(Verification::equal("diagram count", vec![("listed", count.to_string()), ("formula", expected.to_string())]));
        if let Some(t) = expected_summands {
            r.checks.push(Verification::equal("summand count", vec![("listed", total.to_string()), ("formula", t.to_string())]));
        }
    }
    Ok(r)
}

fn bratteli_cmd(verify: bool, limits: &Limits, n: u32, k_max: u32) -> Result<Record, Error> {
    let levels = bratteli(n, k_max, limits)?;
    let mut r = Record::new("bratteli", json!({ "n": n, "k_max": k_max }));
    r.set("levels", Value::Array(levels.iter().map(enc::bratteli_level).collect()));
    for level in &levels {
        let cells: Vec<String> = level.display_order().iter().map(|(a, m)| format!("({a})_{m}")).collect();
        r.line(format!("k={}: {} | {}", level.level, cells.join(" "), level.sum_of_squares()));
    }
    if verify {
        let mut squares = Vec::new();
        let mut closed = Vec::new();
        let mut mult_ok = true;
        for level in &levels {
            squares.push(level.sum_of_squares());
            closed.push(closed_form_m0(n, 2 * level.level)?);
            for a in GroupElement::all(n)? {
                mult_ok &= level.get(&a) == walk_count_cube_closed(n, a.hamming_weight(), level.level)?;
            }
        }
        r.checks.push(Verification::equal("sums of squares", vec![("bratteli", join(&squares)), ("closed_m0", join(&closed))]));
        r.checks.push(Verification {
            name: "multiplicities against closed-form walk counts".into(),
            values: Vec::new(),
            ok: mult_ok,
        });
    }
    Ok(r)
}

fn selftest_cmd(max_n: Option<u32>, corrupt_fixture: bool) -> Record {
    let opts = selftest::Options { sweep_max_n: max_n.unwrap_or(4), corrupt_fixture };
    let checks = selftest::run(&opts);
    let mut r = Record::new("selftest", json!({ "sweep_max_n": opts.sweep_max_n }));
    let list: Vec<Value> = checks
        .iter()
        .map(|c| json!({ "id": c.id, "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let passed = checks.iter().filter(|c| c.passed).count();
    r.set("checks", Value::Array(list));
    r.set("passed", json!(passed));
    r.set("total", json!(checks.len()));
    for c in &checks {
        r.line(c.to_string());
    }
    r.line(format!("{passed}/{} checks passed", checks.len()));
    r.failed = passed != checks.len();
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Outcome {
        let mut full = vec!["cubewalk"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn walks_examples() {
        let o = exec(&["walks", "-n", "3", "--from", "000", "--to", "110", "-k", "4"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains(": 20\n"));
        let o = exec(&["walks", "-n", "3", "--from", "000", "--to", "111", "-k", "5", "--method", "all"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("brute=60, spectral=60, closed=60 [match]"));
    }

    #[test]
    fn error_codes() {
        assert_eq!(exec(&["walks", "-n", "3", "--from", "0a0", "--to", "110", "-k", "4"]).code, EXIT_USAGE);
        assert_eq!(exec(&["walks", "-n", "3", "--from", "00", "--to", "110", "-k", "4"]).code, EXIT_USAGE);
        let o = exec(&["--max-n", "2", "walks", "-n", "3", "--from", "000", "--to", "110", "-k", "4", "--method", "brute"]);
        assert_eq!(o.code, EXIT_CAP);
        assert!(o.stderr.contains("--max-n"));
        assert_eq!(exec(&["--budget", "3", "diagrams", "-k", "2", "-n", "3"]).code, EXIT_CAP);
    }

    #[test]
    fn corrupted_selftest_fails() {
        let o = exec(&["selftest", "--corrupt-fixture", "--max-n", "2"]);
        assert_eq!(o.code, EXIT_MISMATCH);
        assert!(o.stdout.contains("[FAIL] 1."));
    }
}
