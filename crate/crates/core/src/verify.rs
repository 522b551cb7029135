//! Batteries of exact identity checks tying the oracle, the closed forms,
//! the series engine, the bijection and the walker probabilities together.
//!
//! Every check produces one [`CheckReport`]. Enumeration order is fixed and
//! the random level sequences come from a seeded generator, so the same
//! configuration always yields identical reports.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{
    binom_general, binom_u, count_to_rat, pow2, rat, rat_int, rat_to_f64, BigCount, Rat,
};
use crate::bijection::verify_bijection;
use crate::error::{Error, Result};
use crate::formulas::{
    avg_crossings, barrier_formula, diag_sum, fnk, mrs0, mrs_checked, nkr_formula_a, nkr_formula_b,
    pnk, pnk_extended, resolve_mrs_reading, same_start_formula, wz_companion,
};
use crate::oracle::{
    barrier_dp, barrier_marginals, barrier_single_walker, enum_fnk, enum_mrs, enum_nkr, enum_phi,
    same_start_dp, BarrierConfig, CountTable, ProbModel, ORACLE_MAX_N,
};
use crate::series::{
    count_coeff, f_residual, fk_series, legendre_identity_check, nkr_via_lagrange,
    proposition_series, uk_series, SeriesRing,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first instance, in scan order, where two computations disagreed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub args: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub status: Status,
    pub instances_checked: u64,
    pub first_failure: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} instances)",
            self.check_id, self.instances_checked
        )?;
        if let Some(c) = &self.first_failure {
            write!(f, ": at {}: {} != {}", c.args, c.left, c.right)?;
        }
        Ok(())
    }
}

/// Accumulates instances for one check and keeps the first failure.
struct Checker {
    id: &'static str,
    instances: u64,
    first_failure: Option<Counterexample>,
}

impl Checker {
    fn new(id: &'static str) -> Self {
        Checker {
            id,
            instances: 0,
            first_failure: None,
        }
    }

    fn fail(&mut self, args: impl FnOnce() -> String, left: String, right: String) {
        if self.first_failure.is_none() {
            self.first_failure = Some(Counterexample {
                args: args(),
                left,
                right,
            });
        }
    }

    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        args: impl FnOnce() -> String,
        left: &T,
        right: &T,
    ) {
        self.instances += 1;
        if left != right {
            self.fail(args, left.to_string(), right.to_string());
        }
    }

    fn holds(
        &mut self,
        args: impl FnOnce() -> String,
        ok: bool,
        detail: impl FnOnce() -> (String, String),
    ) {
        self.instances += 1;
        if !ok {
            let (l, r) = detail();
            self.fail(args, l, r);
        }
    }

    /// Unwraps a computation, recording an error as a failed instance.
    fn ok<T>(&mut self, args: impl FnOnce() -> String, value: Result<T>) -> Option<T> {
        match value {
            Ok(v) => Some(v),
            Err(e) => {
                self.instances += 1;
                self.fail(args, "error".into(), e.to_string());
                None
            }
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            check_id: self.id.to_string(),
            status: if self.first_failure.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            instances_checked: self.instances,
            first_failure: self.first_failure,
        }
    }
}

fn nkr_tables(n_max: usize) -> Result<Vec<Vec<CountTable>>> {
    (0..=n_max)
        .map(|n| (0..=n).map(|r| enum_nkr(n, r)).collect())
        .collect()
}

/// Both same-endpoint formulas agree for `2 <= n <= n_max`, all `r`, `0 <= k <= n-2`.
pub fn check_theorem1(n_max: u64) -> CheckReport {
    let mut c = Checker::new("theorem1");
    for n in 2..=n_max {
        for r in 0..=n {
            for k in 0..=n - 2 {
                let args = || format!("n={n}, r={r}, k={k}");
                let (Some(a), Some(b)) = (
                    c.ok(args, nkr_formula_a(n, r, k)),
                    c.ok(args, nkr_formula_b(n, r, k)),
                ) else {
                    continue;
                };
                c.eq(args, &a, &b);
            }
        }
    }
    c.finish()
}

/// Both formulas against the brute-force count, including the identical-pair
/// entry at `k = n-1`.
pub fn check_nkr_oracle(n_max: u64) -> CheckReport {
    let mut c = Checker::new("nkr-oracle");
    let Some(tables) = c.ok(|| format!("n_max={n_max}"), nkr_tables(n_max as usize)) else {
        return c.finish();
    };
    for n in 2..=n_max {
        for r in 0..=n {
            let table = &tables[n as usize][r as usize];
            for k in 0..=n - 2 {
                let args = || format!("n={n}, r={r}, k={k}");
                let oracle = table.get(k as usize);
                if let Some(a) = c.ok(args, nkr_formula_a(n, r, k)) {
                    c.eq(args, &a, &oracle);
                }
                if let Some(b) = c.ok(args, nkr_formula_b(n, r, k)) {
                    c.eq(args, &b, &oracle);
                }
            }
            c.eq(
                || format!("n={n}, r={r}, k={}", n - 1),
                &table.get(n as usize - 1),
                &binom_u(n, r),
            );
        }
    }
    c.finish()
}

/// `sum_k N_k^{n,r} = C(n,r)^2` on the oracle.
pub fn check_totals(n_max: u64) -> CheckReport {
    let mut c = Checker::new("totals");
    for n in 0..=n_max {
        for r in 0..=n {
            let args = || format!("n={n}, r={r}");
            if let Some(t) = c.ok(args, enum_nkr(n as usize, r as usize)) {
                let b = binom_u(n, r);
                c.eq(args, t.total(), &(&b * &b));
            }
        }
    }
    c.finish()
}

/// `N_1^{n,r} = 2 N_0^{n,r}` for `3 <= n`, `1 <= r <= n-1`, on the formulas and,
/// within its bound, on the oracle.
pub fn check_n1_twice(n_max: u64) -> CheckReport {
    let mut c = Checker::new("n1-twice");
    for n in 3..=n_max {
        for r in 1..n {
            let args = || format!("n={n}, r={r}");
            if let (Some(n1), Some(n0)) = (
                c.ok(args, nkr_formula_a(n, r, 1)),
                c.ok(args, nkr_formula_a(n, r, 0)),
            ) {
                c.eq(args, &n1, &(n0 * 2u32));
            }
            if n as usize <= ORACLE_MAX_N {
                if let Some(t) = c.ok(args, enum_nkr(n as usize, r as usize)) {
                    c.eq(
                        || format!("oracle n={n}, r={r}"),
                        &t.get(1),
                        &(t.get(0) * 2u32),
                    );
                }
            }
        }
    }
    c.finish()
}

/// `N_k^{n,r} = sum_{m,q} N_{k-1}^{m,q} N_0^{n-m,r-q}` on oracle tables.
pub fn check_recurrence(n_max: u64) -> CheckReport {
    let mut c = Checker::new("recurrence");
    let Some(tables) = c.ok(|| format!("n_max={n_max}"), nkr_tables(n_max as usize)) else {
        return c.finish();
    };
    let n_max = n_max as usize;
    for n in 2..=n_max {
        for r in 0..=n {
            for k in 1..n {
                let mut sum = BigCount::zero();
                for m in 1..n {
                    for q in r.saturating_sub(n - m)..=r.min(m) {
                        sum += tables[m][q].get(k - 1) * tables[n - m][r - q].get(0);
                    }
                }
                c.eq(
                    || format!("n={n}, r={r}, k={k}"),
                    &sum,
                    &tables[n][r].get(k),
                );
            }
        }
    }
    c.finish()
}

/// `phi(n, k)` in closed form: the diagonal sum, or `2^n` for identical pairs.
fn phi_closed(n: u64, k: u64) -> Result<BigCount> {
    if n >= 2 && k + 2 <= n {
        diag_sum(n, k)
    } else if k + 1 == n {
        Ok(pow2(n))
    } else {
        Ok(BigCount::zero())
    }
}

/// `sum_j phi(j, k-1) f(n-j, 0) = f(n, k)`, on oracle tables and in closed form.
pub fn check_convolution(n_max: u64) -> CheckReport {
    let mut c = Checker::new("convolution");
    let n_max = n_max as usize;
    let phi: Option<Vec<CountTable>> =
        c.ok(|| "phi tables".into(), (1..=n_max).map(enum_phi).collect());
    let f: Option<Vec<CountTable>> =
        c.ok(|| "f tables".into(), (0..=n_max).map(enum_fnk).collect());
    let (Some(phi), Some(f)) = (phi, f) else {
        return c.finish();
    };
    for n in 1..=n_max {
        for k in 1..=n {
            let args = || format!("n={n}, k={k}");
            let oracle_sum: BigCount = (1..=n)
                .map(|j| phi[j - 1].get(k - 1) * f[n - j].get(0))
                .sum();
            c.eq(args, &oracle_sum, &f[n].get(k));
            let closed: Result<BigCount> = (1..=n as u64)
                .map(|j| Ok(phi_closed(j, k as u64 - 1)? * fnk(n as u64 - j, 0)?))
                .sum();
            if let (Some(closed), Some(rhs)) =
                (c.ok(args, closed), c.ok(args, fnk(n as u64, k as u64)))
            {
                c.eq(args, &closed, &rhs);
            }
        }
    }
    c.finish()
}

/// Telescoping with the companion `g(n,k) = -(k+2) p(n,k) / (2n+1)`,
/// `sum_k p(n,k) = 1` and `p(n,1) = 2 p(n,0)`.
pub fn check_wz(n_max: u64, sum_max: u64, ratio_max: u64) -> CheckReport {
    let mut c = Checker::new("wz");
    for n in 1..=n_max as i64 {
        for k in 0..=n + 1 {
            let lhs = pnk_extended(n + 1, k) - pnk_extended(n, k);
            let rhs = wz_companion(n, k) - wz_companion(n, k - 1);
            c.eq(|| format!("telescoping n={n}, k={k}"), &lhs, &rhs);
        }
    }
    for n in 1..=sum_max as i64 {
        let total: Rat = (0..n).map(|k| pnk_extended(n, k)).sum();
        c.eq(|| format!("sum n={n}"), &total, &Rat::one());
    }
    for n in 2..=ratio_max as i64 {
        c.eq(
            || format!("ratio n={n}"),
            &pnk_extended(n, 1),
            &(pnk_extended(n, 0) * rat_int(2)),
        );
    }
    c.finish()
}

/// `f(n, k)` closed form against the oracle.
pub fn check_fnk(n_max: u64) -> CheckReport {
    let mut c = Checker::new("fnk");
    for n in 0..=n_max {
        let Some(table) = c.ok(|| format!("n={n}"), enum_fnk(n as usize)) else {
            continue;
        };
        for k in 0..=n {
            if let Some(v) = c.ok(|| format!("n={n}, k={k}"), fnk(n, k)) {
                c.eq(|| format!("n={n}, k={k}"), &v, &table.get(k as usize));
            }
        }
    }
    c.finish()
}

/// `sum_k 2^k C(2n-k, n) = 4^n` and `f(n,0) / 4^n = C(2n,n) / 4^n`.
pub fn check_sum_identities(n_max: u64, oracle_max: u64) -> CheckReport {
    let mut c = Checker::new("sum-identities");
    for n in 0..=n_max {
        let sum: BigCount = (0..=n).map(|k| pow2(k) * binom_u(2 * n - k, n)).sum();
        c.eq(|| format!("sum n={n}"), &sum, &pow2(2 * n));
        if let Some(f0) = c.ok(|| format!("n={n}"), fnk(n, 0)) {
            let four_n = count_to_rat(&pow2(2 * n));
            c.eq(
                || format!("f(n,0)/4^n n={n}"),
                &(count_to_rat(&f0) / &four_n),
                &(count_to_rat(&binom_u(2 * n, n)) / &four_n),
            );
        }
    }
    for n in 0..=oracle_max {
        if let Some(t) = c.ok(|| format!("n={n}"), enum_fnk(n as usize)) {
            c.eq(
                || format!("oracle f(n,0) n={n}"),
                &t.get(0),
                &binom_u(2 * n, n),
            );
        }
    }
    c.finish()
}

/// Mean crossings against the oracle, and the asymptotic at a large `n`.
pub fn check_avg(n_max: u64, large_n: u64) -> CheckReport {
    let mut c = Checker::new("avg");
    for n in 0..=n_max {
        let Some(table) = c.ok(|| format!("n={n}"), enum_fnk(n as usize)) else {
            continue;
        };
        let weighted: BigCount = table.entries().iter().map(|(k, v)| v * *k).sum();
        let mean = count_to_rat(&weighted) / count_to_rat(&pow2(2 * n));
        c.eq(|| format!("n={n}"), &mean, &avg_crossings(n));
    }
    if large_n > 0 {
        let exact = rat_to_f64(&avg_crossings(large_n));
        let approx = 2.0 * (large_n as f64 / std::f64::consts::PI).sqrt() - 1.0;
        let rel = ((exact - approx) / approx).abs();
        c.holds(
            || format!("asymptotic n={large_n}"),
            rel <= 0.02,
            || {
                (
                    format!("{exact}"),
                    format!("{approx} (relative error {rel})"),
                )
            },
        );
    }
    c.finish()
}

/// `p(n, k)` against same-endpoint oracle counts divided by `C(2n, n)`.
pub fn check_pnk(n_max: u64) -> CheckReport {
    let mut c = Checker::new("pnk");
    for n in 1..=n_max {
        let Some(table) = c.ok(|| format!("n={n}"), enum_phi(n as usize)) else {
            continue;
        };
        let total = count_to_rat(&binom_u(2 * n, n));
        for k in 0..n {
            let args = || format!("n={n}, k={k}");
            if let Some(p) = c.ok(args, pnk(n, k)) {
                c.eq(args, &p, &(count_to_rat(&table.get(k as usize)) / &total));
            }
        }
    }
    c.finish()
}

/// Different-endpoint counts: the `k = 0` closed form, the full formula
/// under the resolved reading, and the `r = s` reduction to `N_{k-1}`.
pub fn check_mrs(n_max: u64) -> CheckReport {
    let mut c = Checker::new("mrs");
    for n in 1..=n_max {
        for s in 1..=n {
            for r in 0..s {
                let args = || format!("n={n}, r={r}, s={s}");
                let Some(table) = c.ok(args, enum_mrs(n as usize, r as usize, s as usize)) else {
                    continue;
                };
                if let Some(v) = c.ok(args, mrs0(n, r, s)) {
                    c.eq(|| format!("k=0 n={n}, r={r}, s={s}"), &v, &table.get(0));
                }
                for k in 0..=n {
                    // Disagreements surface as a structured discrepancy error.
                    if let Some(v) = c.ok(
                        || format!("n={n}, r={r}, s={s}, k={k}"),
                        mrs_checked(n, r, s, k),
                    ) {
                        c.eq(
                            || format!("n={n}, r={r}, s={s}, k={k}"),
                            &v,
                            &table.get(k as usize),
                        );
                    }
                }
            }
        }
        for r in 0..=n {
            for k in 1..=n {
                let args = || format!("r=s n={n}, r={r}, k={k}");
                let expected = if k < n {
                    c.ok(args, enum_nkr(n as usize, r as usize))
                        .map(|t| t.get(k as usize - 1))
                } else {
                    Some(binom_u(n, r))
                };
                if let (Some(v), Some(e)) = (
                    c.ok(args, crate::formulas::mrs_formula(n, r, r, k)),
                    expected,
                ) {
                    c.eq(args, &v, &e);
                }
            }
        }
    }
    if let Some(report) = c.ok(
        || format!("reading resolution n_max={n_max}"),
        resolve_mrs_reading(n_max),
    ) {
        c.holds(
            || "reading resolution".into(),
            report.accepted == Some(crate::formulas::MrsReading::RESOLVED),
            || {
                (
                    "no reading matches".into(),
                    format!("{:?}", report.outcomes),
                )
            },
        );
    }
    c.finish()
}

/// Diagonal sums against the oracle and against summed formula values.
pub fn check_diag(n_max: u64) -> CheckReport {
    let mut c = Checker::new("diag");
    for n in 2..=n_max {
        let Some(phi) = c.ok(|| format!("n={n}"), enum_phi(n as usize)) else {
            continue;
        };
        for k in 0..=n - 2 {
            let args = || format!("n={n}, k={k}");
            let Some(d) = c.ok(args, diag_sum(n, k)) else {
                continue;
            };
            c.eq(args, &d, &phi.get(k as usize));
            let summed: Result<BigCount> = (0..=n).map(|r| nkr_formula_a(n, r, k)).sum();
            if let Some(s) = c.ok(args, summed) {
                c.eq(args, &d, &s);
            }
        }
    }
    c.finish()
}

/// Probabilities used by the constant-model grids.
pub fn standard_probabilities() -> Vec<Rat> {
    vec![rat(1, 2), rat(1, 3), rat(2, 5)]
}

/// `2 C(a+b, a) p^{a+1} q^{b+1}` against the two-walker DP.
pub fn check_same_start(limit: u32, probs: &[Rat]) -> CheckReport {
    let mut c = Checker::new("same-start");
    for p in probs {
        for a in 0..=limit {
            for b in 0..=limit {
                let args = || format!("a={a}, b={b}, p={p}");
                if let (Some(dp), Some(f)) = (
                    c.ok(args, same_start_dp(a, b, p)),
                    c.ok(args, same_start_formula(u64::from(a), u64::from(b), p)),
                ) {
                    c.eq(args, &dp, &f);
                }
            }
        }
    }
    c.finish()
}

/// Seeded level sequences with denominators at most 16.
pub fn seeded_level_sequences(seed: u64, count: usize, len: usize) -> Vec<ProbModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let levels = (0..len)
                .map(|_| {
                    let den: i64 = rng.gen_range(1..=16);
                    let num: i64 = rng.gen_range(0..=den);
                    rat(num, den)
                })
                .collect();
            ProbModel::ByLevel(levels)
        })
        .collect()
}

/// Settings for the barrier battery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarrierLimits {
    /// `a, b, x` each up to this for the constant-probability grid.
    pub grid: u32,
    /// `a + b + x` up to this for the level-dependent sweep.
    pub level_sum: u32,
    pub sequences: usize,
    pub seed: u64,
}

/// Two-walker DP against the closed form (constant models) or the single
/// walker (level models), plus `B = u + l - 1`.
pub fn check_barrier(limits: &BarrierLimits, probs: &[Rat]) -> CheckReport {
    let mut c = Checker::new("barrier");
    let mut models: Vec<(ProbModel, bool)> = probs
        .iter()
        .map(|p| (ProbModel::Constant(p.clone()), true))
        .collect();
    let len = limits.level_sum as usize + 2;
    models.extend(
        seeded_level_sequences(limits.seed, limits.sequences, len)
            .into_iter()
            .map(|m| (m, false)),
    );
    let mut triples = Vec::new();
    for (mi, (_, constant)) in models.iter().enumerate() {
        for a in 0..=limits.level_sum {
            for b in 0..=limits.level_sum - a {
                for x in 0..=limits.level_sum - a - b {
                    let in_grid = a <= limits.grid && b <= limits.grid && x <= limits.grid;
                    if (*constant && in_grid) || (!*constant && a + b + x <= limits.level_sum) {
                        triples.push((mi, a, b, x));
                    }
                }
            }
        }
    }
    type Labelled = (String, Result<(Rat, Rat)>);
    let outcomes: Vec<Vec<Labelled>> = triples
        .par_iter()
        .map(|&(mi, a, b, x)| {
            let (model, constant) = &models[mi];
            let label = match model {
                ProbModel::Constant(p) => format!("p={p}"),
                ProbModel::ByLevel(_) => format!("sequence {mi}"),
            };
            let args = format!("a={a}, b={b}, x={x}, {label}");
            let run = || -> Result<Vec<(String, (Rat, Rat))>> {
                let config = BarrierConfig::new(a, b, x, model.clone())?;
                let dp = barrier_dp(&config)?;
                let mut out = Vec::new();
                if *constant {
                    let ProbModel::Constant(p) = model else {
                        unreachable!()
                    };
                    let f = barrier_formula(u64::from(a), u64::from(b), u64::from(x), p)?;
                    out.push(("formula".to_string(), (dp.clone(), f)));
                }
                out.push((
                    "single walker".to_string(),
                    (dp.clone(), barrier_single_walker(&config)?),
                ));
                let (u, l) = barrier_marginals(&config)?;
                out.push(("u + l - 1".to_string(), (dp, u + l - Rat::one())));
                Ok(out)
            };
            match run() {
                Ok(pairs) => pairs
                    .into_iter()
                    .map(|(what, v)| (format!("{args}, {what}"), Ok(v)))
                    .collect(),
                Err(e) => vec![(args, Err(e))],
            }
        })
        .collect();
    for (args, outcome) in outcomes.into_iter().flatten() {
        if let Some((l, r)) = c.ok(|| args.clone(), outcome) {
            c.eq(|| args, &l, &r);
        }
    }
    c.finish()
}

/// Both forms of Vandermonde's identity over a grid of small arguments,
/// the second with the generalized binomial.
pub fn check_vandermonde(limit: i64) -> CheckReport {
    let mut c = Checker::new("vandermonde");
    for a in 0..=limit {
        for b in 0..=limit {
            for m in 0..=a + b {
                let lhs: num_bigint::BigInt = (0..=m)
                    .map(|i| binom_general(a, i) * binom_general(b, m - i))
                    .sum();
                c.eq(
                    || format!("first a={a}, b={b}, m={m}"),
                    &lhs,
                    &binom_general(a + b, m),
                );
            }
        }
        for cc in 0..=limit {
            for m in 0..=limit {
                let lhs: num_bigint::BigInt = (0..=m)
                    .map(|i| {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        binom_general(a, i) * binom_general(cc - i, m - i) * sign
                    })
                    .sum();
                c.eq(
                    || format!("second a={a}, c={cc}, m={m}"),
                    &lhs,
                    &binom_general(cc - a, m),
                );
            }
        }
    }
    c.finish()
}

pub fn check_legendre(degree: usize) -> CheckReport {
    let mut c = Checker::new("legendre");
    if let Some(report) = c.ok(
        || format!("degree={degree}"),
        legendre_identity_check(degree),
    ) {
        c.instances += report.coefficients_checked as u64;
        if let Some(m) = report.first_failure {
            c.fail(|| format!("[x^{} y^{}]", m.i, m.j), m.got, m.expected);
        }
    }
    c.finish()
}

/// Three routes to `N_k^{n,r}`: powers of `u_0`, the `f` parametrization and
/// Lagrange inversion, all against the oracle (or formula past its bound).
pub fn check_series(degree: usize) -> CheckReport {
    let mut c = Checker::new("series");
    let reference = |n: usize, r: usize, k: usize| -> Result<BigCount> {
        if n <= ORACLE_MAX_N.min(10) {
            Ok(enum_nkr(n, r)?.get(k))
        } else if k + 2 <= n {
            nkr_formula_a(n as u64, r as u64, k as u64)
        } else if k + 1 == n {
            Ok(binom_u(n as u64, r as u64))
        } else {
            Ok(BigCount::zero())
        }
    };
    let tables: Option<Vec<Vec<CountTable>>> =
        c.ok(|| "oracle tables".into(), nkr_tables(degree.min(10)));
    let Some(tables) = tables else {
        return c.finish();
    };
    let lookup = |n: usize, r: usize, k: usize| -> Result<BigCount> {
        if n < tables.len() {
            Ok(tables[n][r].get(k))
        } else {
            reference(n, r, k)
        }
    };
    // Every (n, r) with n <= 9 needs total degree 2n in the x, y series.
    let u_degree = degree.max(2 * degree.min(9));
    let Some(u0) = c.ok(|| "u_0".into(), uk_series(0, u_degree)) else {
        return c.finish();
    };
    let mut uk = u0.clone();
    for k in 0..degree {
        if k > 0 {
            uk = uk.mul(&u0);
        }
        let Some(prop) = c.ok(
            || format!("proposition k={k}"),
            proposition_series(k as u32, degree),
        ) else {
            continue;
        };
        // u_k has x^n y^r with r <= n and no constant term.
        for t in 1..=u_degree {
            for r in 0..=t / 2 {
                let n = t - r;
                let args = || format!("u_{k} [x^{n} y^{r}]");
                if let (Some(got), Some(want)) = (
                    c.ok(args, count_coeff(&uk, n, r)),
                    c.ok(args, lookup(n, r, k)),
                ) {
                    c.eq(args, &got, &want);
                }
            }
        }
        // The proposition series is in y, z with y^r z^{n-r}.
        for n in 1..=degree {
            for r in 0..=n {
                let args = || format!("proposition k={k} [y^{r} z^{}]", n - r);
                if let (Some(got), Some(want)) = (
                    c.ok(args, count_coeff(&prop, r, n - r)),
                    c.ok(args, lookup(n, r, k)),
                ) {
                    c.eq(args, &got, &want);
                }
            }
        }
    }
    for n in 2..=degree as u64 {
        for k in 0..=n - 2 {
            let Some(values) = c.ok(|| format!("lagrange n={n}, k={k}"), nkr_via_lagrange(n, k))
            else {
                continue;
            };
            for (r, got) in values.iter().enumerate() {
                let args = || format!("lagrange n={n}, r={r}, k={k}");
                if let Some(want) = c.ok(args, lookup(n as usize, r, k as usize)) {
                    c.eq(args, got, &want);
                }
            }
        }
    }
    c.finish()
}

/// `[x^n] F_k = f(n, k)` up to `degree`.
pub fn check_fk(degree: usize) -> CheckReport {
    let mut c = Checker::new("fk-series");
    for k in 0..=degree {
        let Some(s) = c.ok(|| format!("k={k}"), fk_series(k as u32, degree)) else {
            continue;
        };
        for n in 0..=degree {
            let args = || format!("k={k}, n={n}");
            let want = if k <= n {
                fnk(n as u64, k as u64)
            } else {
                Ok(BigCount::zero())
            };
            if let Some(want) = c.ok(args, want) {
                c.eq(args, &s.coeff(n), &count_to_rat(&want));
            }
        }
    }
    c.finish()
}

/// `f - (y + f)(z + f)` vanishes through `degree`.
pub fn check_f_residual(degree: usize) -> CheckReport {
    let mut c = Checker::new("f-residual");
    if let Some(res) = c.ok(|| format!("degree={degree}"), f_residual(degree)) {
        for t in 0..=degree {
            for i in 0..=t {
                let coeff = res.coeff(i, t - i);
                c.eq(|| format!("[y^{i} z^{}]", t - i), &coeff, &Rat::zero());
            }
        }
    }
    c.finish()
}

/// Forward and inverse maps on every rectangle with `r + s <= max_sum`.
pub fn check_bijection(max_sum: u32) -> CheckReport {
    let mut c = Checker::new("bijection");
    let rects: Vec<(u32, u32)> = (1..max_sum)
        .flat_map(|r| (1..=max_sum - r).map(move |s| (r, s)))
        .collect();
    let reports: Vec<_> = rects
        .par_iter()
        .map(|&(r, s)| ((r, s), verify_bijection(r, s)))
        .collect();
    for ((r, s), report) in reports {
        let args = || format!("r={r}, s={s}");
        let Some(report) = c.ok(args, report) else {
            continue;
        };
        c.instances += report.nonintersecting as u64;
        if !report.passed() {
            let detail = report
                .failures
                .first()
                .cloned()
                .unwrap_or_else(|| "count mismatch".into());
            c.fail(
                args,
                format!(
                    "{} nonintersecting, {} one-intersection",
                    report.nonintersecting, report.one_intersection
                ),
                detail,
            );
        }
    }
    c.finish()
}

/// Named groups of checks, selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Theorem1,
    NkrOracle,
    Totals,
    N1Twice,
    Bijection,
    Recurrence,
    Convolution,
    Fnk,
    SumIdentities,
    Avg,
    Pnk,
    Wz,
    Mrs,
    Diag,
    SameStart,
    Barrier,
    Vandermonde,
    Legendre,
    Series,
    FkSeries,
    FResidual,
}

impl Suite {
    pub const ALL: [Suite; 21] = [
        Suite::Theorem1,
        Suite::NkrOracle,
        Suite::Totals,
        Suite::N1Twice,
        Suite::Bijection,
        Suite::Recurrence,
        Suite::Convolution,
        Suite::Fnk,
        Suite::SumIdentities,
        Suite::Avg,
        Suite::Pnk,
        Suite::Wz,
        Suite::Mrs,
        Suite::Diag,
        Suite::SameStart,
        Suite::Barrier,
        Suite::Vandermonde,
        Suite::Legendre,
        Suite::Series,
        Suite::FkSeries,
        Suite::FResidual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::NkrOracle => "nkr-oracle",
            Suite::Totals => "totals",
            Suite::N1Twice => "n1-twice",
            Suite::Bijection => "bijection",
            Suite::Recurrence => "recurrence",
            Suite::Convolution => "convolution",
            Suite::Fnk => "fnk",
            Suite::SumIdentities => "sum-identities",
            Suite::Avg => "avg",
            Suite::Pnk => "pnk",
            Suite::Wz => "wz",
            Suite::Mrs => "mrs",
            Suite::Diag => "diag",
            Suite::SameStart => "same-start",
            Suite::Barrier => "barrier",
            Suite::Vandermonde => "vandermonde",
            Suite::Legendre => "legendre",
            Suite::Series => "series",
            Suite::FkSeries => "fk-series",
            Suite::FResidual => "f-residual",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::OutOfRange {
                what: "suite",
                detail: format!(
                    "unknown suite {s:?}; expected one of {}",
                    Suite::ALL.map(Suite::name).join(", ")
                ),
            })
    }
}

/// Size bounds and suite selection for [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub suites: Vec<Suite>,
    pub theorem1_n: u64,
    pub totals_n: u64,
    pub n1_twice_n: u64,
    pub bijection_sum: u32,
    pub recurrence_n: u64,
    pub convolution_n: u64,
    pub fnk_n: u64,
    pub identity_n: u64,
    pub avg_n: u64,
    /// Size of the asymptotic check; 0 skips it.
    pub avg_large_n: u64,
    pub pnk_n: u64,
    pub wz_n: u64,
    pub psum_n: u64,
    pub ratio_n: u64,
    pub mrs_n: u64,
    pub diag_n: u64,
    pub same_start: u32,
    pub barrier: BarrierLimits,
    pub vandermonde: i64,
    pub legendre_degree: usize,
    pub series_degree: usize,
    pub fk_degree: usize,
    pub residual_degree: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suites: Suite::ALL.to_vec(),
            theorem1_n: 9,
            totals_n: 9,
            n1_twice_n: 10,
            bijection_sum: 9,
            recurrence_n: 9,
            convolution_n: 8,
            fnk_n: 8,
            identity_n: 40,
            avg_n: 8,
            avg_large_n: 1000,
            pnk_n: 8,
            wz_n: 40,
            psum_n: 60,
            ratio_n: 40,
            mrs_n: 8,
            diag_n: 12,
            same_start: 4,
            barrier: BarrierLimits {
                grid: 4,
                level_sum: 10,
                sequences: 20,
                seed: 0x5EED,
            },
            vandermonde: 8,
            legendre_degree: 12,
            series_degree: 12,
            fk_degree: 20,
            residual_degree: 12,
        }
    }
}

impl VerifyConfig {
    pub fn with_suites(mut self, suites: Vec<Suite>) -> Self {
        self.suites = suites;
        self
    }

    /// Sets every size bound to `n`. Bounds fed to the brute-force oracle are
    /// additionally capped at its limit.
    pub fn with_n_max(mut self, n: u64) -> Self {
        let oracle = n.min(ORACLE_MAX_N as u64);
        self.theorem1_n = n;
        self.totals_n = oracle;
        self.n1_twice_n = n;
        self.bijection_sum = oracle as u32;
        self.recurrence_n = oracle;
        self.convolution_n = oracle;
        self.fnk_n = oracle;
        self.identity_n = n;
        self.avg_n = oracle;
        self.pnk_n = oracle;
        self.wz_n = n;
        self.psum_n = n;
        self.ratio_n = n;
        self.mrs_n = oracle;
        self.diag_n = oracle;
        self.same_start = n as u32;
        self.barrier.grid = n as u32;
        self.barrier.level_sum = n as u32;
        self.vandermonde = n as i64;
        self.legendre_degree = n as usize;
        self.series_degree = n as usize;
        self.fk_degree = n as usize;
        self.residual_degree = n as usize;
        self
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> CheckReport {
    let probs = standard_probabilities();
    match suite {
        Suite::Theorem1 => check_theorem1(config.theorem1_n),
        Suite::NkrOracle => check_nkr_oracle(config.theorem1_n.min(ORACLE_MAX_N as u64)),
        Suite::Totals => check_totals(config.totals_n),
        Suite::N1Twice => check_n1_twice(config.n1_twice_n),
        Suite::Bijection => check_bijection(config.bijection_sum),
        Suite::Recurrence => check_recurrence(config.recurrence_n),
        Suite::Convolution => check_convolution(config.convolution_n),
        Suite::Fnk => check_fnk(config.fnk_n),
        Suite::SumIdentities => check_sum_identities(config.identity_n, config.fnk_n),
        Suite::Avg => check_avg(config.avg_n, config.avg_large_n),
        Suite::Pnk => check_pnk(config.pnk_n),
        Suite::Wz => check_wz(config.wz_n, config.psum_n, config.ratio_n),
        Suite::Mrs => check_mrs(config.mrs_n),
        Suite::Diag => check_diag(config.diag_n),
        Suite::SameStart => check_same_start(config.same_start, &probs),
        Suite::Barrier => check_barrier(&config.barrier, &probs),
        Suite::Vandermonde => check_vandermonde(config.vandermonde),
        Suite::Legendre => check_legendre(config.legendre_degree),
        Suite::Series => check_series(config.series_degree),
        Suite::FkSeries => check_fk(config.fk_degree),
        Suite::FResidual => check_f_residual(config.residual_degree),
    }
}

/// Runs the selected suites concurrently and returns their reports in the
/// order of [`Suite::ALL`], one per suite.
pub fn run_all(config: &VerifyConfig) -> Vec<CheckReport> {
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    suites.par_iter().map(|s| run_suite(*s, config)).collect()
}
