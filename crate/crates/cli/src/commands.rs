use num_traits::Zero;
use pathpairs::arith::{binom_u, count_to_rat, parse_probability, pow2, rat_to_count};
use pathpairs::bijection::{verify_bijection, GroupTag};
use pathpairs::formulas::{
    avg_crossings, barrier_formula, diag_sum, fnk as fnk_formula, mrs_formula, nkr_formula_a,
    nkr_formula_b, pnk as pnk_formula,
};
use pathpairs::oracle::{
    barrier_dp, barrier_marginals, barrier_single_walker, enum_fnk, enum_mrs, enum_nkr, enum_phi,
    parse_level_file, BarrierConfig, ProbModel, ORACLE_MAX_N,
};
use pathpairs::series::{count_coeff, fk_series, phi_series, proposition_series};
use pathpairs::verify::{run_all, Suite, VerifyConfig};
use pathpairs::{BigCount, Rat};

use crate::output::{OutputRecord, ResultRow};
use crate::{
    AvgArgs, BarrierArgs, BarrierMethod, BijectionArgs, Global, Method, MrsArgs, NkrArgs,
    NkrMethod, TableArgs, VerifyArgs,
};

/// Default bounds; `--unsafe-nmax` lifts them.
const FORMULA_MAX_N: u64 = 2000;
const SERIES_MAX_N: u64 = 16;
const ORACLE_DEFAULT_N: u64 = 10;
const AVG_MAX_N: u64 = 5000;
const BARRIER_MAX_STEPS: u32 = 40;
const BIJECTION_MAX_SUM: u32 = 10;
const VERIFY_MAX_N: u64 = 12;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] pathpairs::Error),
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use pathpairs::Error as E;
        match self {
            CliError::Lib(
                E::Discrepancy(_) | E::NonIntegral { .. } | E::Bijection { .. } | E::Series(_),
            ) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub struct Outcome {
    pub record: OutputRecord,
    pub passed: bool,
}

impl Outcome {
    fn compared(mut record: OutputRecord, several_routes: bool) -> Self {
        let passed = if several_routes {
            record.settle_consistency()
        } else {
            true
        };
        Outcome { record, passed }
    }
}

fn method_name(m: impl clap::ValueEnum) -> String {
    m.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn bound(g: &Global, what: &str, value: u64, max: u64) -> Result<()> {
    if value > max && !g.unsafe_nmax {
        return Err(usage(format!(
            "{what}={value} exceeds the default bound {max}; pass --unsafe-nmax to override"
        )));
    }
    Ok(())
}

fn oracle_bound(g: &Global, n: u64) -> Result<()> {
    if n > ORACLE_MAX_N as u64 {
        return Err(usage(format!(
            "enumeration is limited to n <= {ORACLE_MAX_N}, got n={n}"
        )));
    }
    bound(g, "n", n, ORACLE_DEFAULT_N)
}

/// The selected `k` or every `k` in `0..=k_max`, after a range check.
fn k_values(k: Option<u64>, k_max: u64) -> Result<Vec<u64>> {
    match k {
        Some(k) if k > k_max => Err(usage(format!("need 0 <= k <= {k_max}, got k={k}"))),
        Some(k) => Ok(vec![k]),
        None => Ok((0..=k_max).collect()),
    }
}

fn idx(k: u64) -> Option<String> {
    Some(k.to_string())
}

pub fn nkr(a: &NkrArgs, g: &Global) -> Result<Outcome> {
    let (n, r) = (a.n, a.r);
    if r > n {
        return Err(usage(format!("need r <= n, got r={r}, n={n}")));
    }
    let ks = k_values(a.k, n.saturating_sub(1))?;
    let mut record = OutputRecord::new("nkr")
        .param("n", n)
        .param("r", r)
        .param("method", method_name(a.method));
    if let Some(k) = a.k {
        record = record.param("k", k);
    }
    let all = a.method == NkrMethod::All;
    type Formula = fn(u64, u64, u64) -> pathpairs::Result<BigCount>;
    let formulas: Vec<(&str, Formula)> = match a.method {
        NkrMethod::FormulaA => vec![("formula-a", nkr_formula_a)],
        NkrMethod::FormulaB => vec![("formula-b", nkr_formula_b)],
        NkrMethod::All => vec![("formula-a", nkr_formula_a), ("formula-b", nkr_formula_b)],
        _ => vec![],
    };
    if !formulas.is_empty() {
        bound(g, "n", n, FORMULA_MAX_N)?;
    }
    let use_series = matches!(a.method, NkrMethod::Series | NkrMethod::All) && !(all && n == 0);
    if use_series {
        if n == 0 {
            return Err(usage("the series route needs n >= 1"));
        }
        bound(g, "n", n, SERIES_MAX_N)?;
    }
    let use_oracle = matches!(a.method, NkrMethod::Oracle | NkrMethod::All);
    let oracle = if use_oracle {
        oracle_bound(g, n)?;
        Some(enum_nkr(n as usize, r as usize)?)
    } else {
        None
    };
    for &k in &ks {
        let covered = n >= 2 && k + 2 <= n;
        for (name, f) in &formulas {
            if covered {
                record.push(ResultRow::exact(idx(k), "N", f(n, r, k)?, name));
            } else if !all {
                // The formulas stop at k = n-2; the last entry counts identical pairs.
                let (value, provenance) = identical_entry(n, r)?;
                record.push(ResultRow::exact(idx(k), "N", value, provenance));
            }
        }
        if use_series {
            let s = proposition_series(k as u32, n as usize)?;
            record.push(ResultRow::exact(
                idx(k),
                "N",
                count_coeff(&s, r as usize, (n - r) as usize)?,
                "series",
            ));
        }
        if let Some(t) = &oracle {
            record.push(ResultRow::exact(idx(k), "N", t.get(k as usize), "oracle"));
        }
    }
    Ok(Outcome::compared(record, all))
}

/// `N_{n-1}^{n,r}`: from enumeration within its bound, otherwise as the
/// complement of the formula entries in `C(n,r)^2`.
fn identical_entry(n: u64, r: u64) -> Result<(BigCount, &'static str)> {
    if n <= ORACLE_DEFAULT_N {
        return Ok((
            enum_nkr(n as usize, r as usize)?.get(n.saturating_sub(1) as usize),
            "oracle",
        ));
    }
    let total = binom_u(n, r) * binom_u(n, r);
    let mut rest = BigCount::zero();
    for k in 0..=n - 2 {
        rest += nkr_formula_a(n, r, k)?;
    }
    Ok((total - rest, "complement"))
}

pub fn mrs(a: &MrsArgs, g: &Global) -> Result<Outcome> {
    let (n, r, s) = (a.n, a.r, a.s);
    if !(r <= s && s <= n) || n == 0 {
        return Err(usage(format!(
            "need r <= s <= n and n >= 1, got r={r}, s={s}, n={n}"
        )));
    }
    let ks = k_values(a.k, n)?;
    let mut record = OutputRecord::new("mrs")
        .param("n", n)
        .param("r", r)
        .param("s", s)
        .param("method", method_name(a.method));
    if let Some(k) = a.k {
        record = record.param("k", k);
    }
    let formula = matches!(a.method, Method::Formula | Method::All);
    let oracle = match a.method {
        Method::Series => return Err(usage("mrs has no series route; use formula or oracle")),
        Method::Oracle | Method::All => {
            oracle_bound(g, n)?;
            Some(if r == s {
                let t = enum_nkr(n as usize, r as usize)?;
                (0..=n)
                    .map(|k| {
                        if k == 0 {
                            BigCount::zero()
                        } else {
                            t.get(k as usize - 1)
                        }
                    })
                    .collect::<Vec<_>>()
            } else {
                let t = enum_mrs(n as usize, r as usize, s as usize)?;
                (0..=n).map(|k| t.get(k as usize)).collect()
            })
        }
        Method::Formula => None,
    };
    if formula {
        bound(g, "n", n, FORMULA_MAX_N)?;
    }
    for &k in &ks {
        if formula {
            record.push(ResultRow::exact(
                idx(k),
                "M",
                mrs_formula(n, r, s, k)?,
                "formula",
            ));
        }
        if let Some(values) = &oracle {
            record.push(ResultRow::exact(idx(k), "M", &values[k as usize], "oracle"));
        }
    }
    Ok(Outcome::compared(record, a.method == Method::All))
}

fn table_record(command: &str, a: &TableArgs) -> OutputRecord {
    let mut record = OutputRecord::new(command)
        .param("n", a.n)
        .param("method", method_name(a.method));
    if let Some(k) = a.k {
        record = record.param("k", k);
    }
    record
}

fn routes(method: Method) -> (bool, bool, bool) {
    let all = method == Method::All;
    (
        method == Method::Formula || all,
        method == Method::Series || all,
        method == Method::Oracle || all,
    )
}

pub fn fnk(a: &TableArgs, g: &Global) -> Result<Outcome> {
    let n = a.n;
    let ks = k_values(a.k, n)?;
    let mut record = table_record("fnk", a);
    let (formula, series, oracle) = routes(a.method);
    if formula {
        bound(g, "n", n, FORMULA_MAX_N)?;
    }
    if series {
        bound(g, "n", n, 4 * SERIES_MAX_N)?;
    }
    let table = if oracle {
        oracle_bound(g, n)?;
        Some(enum_fnk(n as usize)?)
    } else {
        None
    };
    let four_n = count_to_rat(&pow2(2 * n));
    let push = |record: &mut OutputRecord, k: u64, value: BigCount, provenance: &str| {
        let prob = count_to_rat(&value) / &four_n;
        record.push(ResultRow::exact(idx(k), "f", &value, provenance));
        record.push(ResultRow::exact(idx(k), "f/4^n", &prob, provenance).with_float(&prob));
    };
    for &k in &ks {
        if formula {
            push(&mut record, k, fnk_formula(n, k)?, "formula");
        }
        if series {
            let c = fk_series(k as u32, n as usize)?.coeff(n as usize);
            push(
                &mut record,
                k,
                rat_to_count(&c, "series", || format!("n={n}, k={k}"))?,
                "series",
            );
        }
        if let Some(t) = &table {
            push(&mut record, k, t.get(k as usize), "oracle");
        }
    }
    Ok(Outcome::compared(record, a.method == Method::All))
}

pub fn pnk(a: &TableArgs, g: &Global) -> Result<Outcome> {
    let n = a.n;
    if n == 0 {
        return Err(usage("need n >= 1"));
    }
    let ks = k_values(a.k, n - 1)?;
    let mut record = table_record("pnk", a);
    let (formula, series, oracle) = routes(a.method);
    if formula {
        bound(g, "n", n, FORMULA_MAX_N)?;
    }
    if series {
        bound(g, "n", n, 4 * SERIES_MAX_N)?;
    }
    let table = if oracle {
        oracle_bound(g, n)?;
        Some(enum_phi(n as usize)?)
    } else {
        None
    };
    let total = count_to_rat(&binom_u(2 * n, n));
    let push = |record: &mut OutputRecord, k: u64, p: Rat, provenance: &str| -> Result<()> {
        let count = rat_to_count(&(&p * &total), "pnk", || format!("n={n}, k={k}"))?;
        record.push(ResultRow::exact(idx(k), "p", &p, provenance).with_float(&p));
        record.push(ResultRow::exact(idx(k), "count", count, provenance));
        Ok(())
    };
    for &k in &ks {
        if formula {
            push(&mut record, k, pnk_formula(n, k)?, "formula")?;
        }
        if series {
            let c = phi_series(k as u32, n as usize)?.coeff(n as usize);
            push(&mut record, k, c / &total, "series")?;
        }
        if let Some(t) = &table {
            push(
                &mut record,
                k,
                count_to_rat(&t.get(k as usize)) / &total,
                "oracle",
            )?;
        }
    }
    Ok(Outcome::compared(record, a.method == Method::All))
}

pub fn diag(a: &TableArgs, g: &Global) -> Result<Outcome> {
    let n = a.n;
    if n == 0 {
        return Err(usage("need n >= 1"));
    }
    let ks = k_values(a.k, n - 1)?;
    let mut record = table_record("diag", a);
    let (formula, series, oracle) = routes(a.method);
    if formula {
        bound(g, "n", n, FORMULA_MAX_N)?;
    }
    if series {
        bound(g, "n", n, 4 * SERIES_MAX_N)?;
    }
    let table = if oracle {
        oracle_bound(g, n)?;
        Some(enum_phi(n as usize)?)
    } else {
        None
    };
    for &k in &ks {
        if formula {
            if k + 2 <= n {
                record.push(ResultRow::exact(idx(k), "diag", diag_sum(n, k)?, "formula"));
            } else {
                // Only identical pairs share all n-1 interior vertices.
                record.push(ResultRow::exact(idx(k), "diag", pow2(n), "identical-pairs"));
            }
        }
        if series {
            let c = phi_series(k as u32, n as usize)?.coeff(n as usize);
            let v = rat_to_count(&c, "series", || format!("n={n}, k={k}"))?;
            record.push(ResultRow::exact(idx(k), "diag", v, "series"));
        }
        if let Some(t) = &table {
            record.push(ResultRow::exact(
                idx(k),
                "diag",
                t.get(k as usize),
                "oracle",
            ));
        }
    }
    Ok(Outcome::compared(record, a.method == Method::All))
}

pub fn avg(a: &AvgArgs, g: &Global) -> Result<Outcome> {
    let n = a.n;
    let mut record = OutputRecord::new("avg")
        .param("n", n)
        .param("method", method_name(a.method));
    if a.method == Method::Series {
        return Err(usage("avg has no series route; use formula or oracle"));
    }
    let (formula, _, oracle) = routes(a.method);
    if formula {
        bound(g, "n", n, AVG_MAX_N)?;
        let v = avg_crossings(n);
        record.push(ResultRow::exact(None, "avg", &v, "formula").with_float(&v));
    }
    if oracle {
        oracle_bound(g, n)?;
        let t = enum_fnk(n as usize)?;
        let weighted: BigCount = t.entries().iter().map(|(k, c)| c * *k).sum();
        let v = count_to_rat(&weighted) / count_to_rat(&pow2(2 * n));
        record.push(ResultRow::exact(None, "avg", &v, "oracle").with_float(&v));
    }
    if n >= 1 {
        let approx = 2.0 * (n as f64 / std::f64::consts::PI).sqrt() - 1.0;
        record.push(ResultRow {
            index: None,
            quantity: "asymptotic".into(),
            value: approx.to_string(),
            provenance: "asymptotic".into(),
            float: Some(approx),
        });
    }
    Ok(Outcome::compared(record, a.method == Method::All))
}

pub fn barrier(a: &BarrierArgs, g: &Global) -> Result<Outcome> {
    let steps = a.a + a.b + a.x;
    bound(g, "a+b+x", u64::from(steps), u64::from(BARRIER_MAX_STEPS))?;
    let mut record = OutputRecord::new("barrier")
        .param("a", a.a)
        .param("b", a.b)
        .param("x", a.x)
        .param("method", method_name(a.method));
    let model = match (&a.p, &a.level_file) {
        (Some(p), _) => {
            record = record.param("p", p);
            ProbModel::Constant(parse_probability(p)?)
        }
        (None, Some(path)) => {
            record = record.param("level-file", path.display());
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            parse_level_file(&text)?
        }
        (None, None) => return Err(usage("give --p or --level-file")),
    };
    let config = BarrierConfig::new(a.a, a.b, a.x, model)?;
    let all = a.method == BarrierMethod::All;
    let mut push = |value: Rat, provenance: &str| {
        record.push(ResultRow::exact(None, "B", &value, provenance).with_float(&value));
    };
    if matches!(a.method, BarrierMethod::Dp | BarrierMethod::All) {
        push(barrier_dp(&config)?, "dp");
    }
    if matches!(a.method, BarrierMethod::SingleWalker | BarrierMethod::All) {
        push(barrier_single_walker(&config)?, "single-walker");
    }
    match (&config.model, a.method) {
        (ProbModel::Constant(p), BarrierMethod::Formula | BarrierMethod::All) => {
            push(
                barrier_formula(u64::from(a.a), u64::from(a.b), u64::from(a.x), p)?,
                "formula",
            );
        }
        (ProbModel::ByLevel(_), BarrierMethod::Formula) => {
            return Err(usage("the closed form needs a constant --p"));
        }
        _ => {}
    }
    if all {
        let (u, l) = barrier_marginals(&config)?;
        push(u + l - Rat::from_integer(1.into()), "marginals");
    }
    Ok(Outcome::compared(record, all))
}

fn tag_name(tag: GroupTag) -> &'static str {
    match tag {
        GroupTag::I => "I",
        GroupTag::II => "II",
        GroupTag::III { north_first: true } => "III-north",
        GroupTag::III { north_first: false } => "III-east",
    }
}

pub fn bijection(a: &BijectionArgs, g: &Global) -> Result<Outcome> {
    if a.r < 1 || a.s < 1 {
        return Err(usage(format!("need r, s >= 1, got r={}, s={}", a.r, a.s)));
    }
    bound(g, "r+s", u64::from(a.r + a.s), u64::from(BIJECTION_MAX_SUM))?;
    let report = verify_bijection(a.r, a.s)?;
    let mut record = OutputRecord::new("bijection")
        .param("r", a.r)
        .param("s", a.s);
    record.push(ResultRow::exact(
        None,
        "nonintersecting",
        report.nonintersecting,
        "bijection",
    ));
    record.push(ResultRow::exact(
        None,
        "one-intersection",
        report.one_intersection,
        "bijection",
    ));
    record.push(ResultRow::exact(
        None,
        "passed",
        report.passed(),
        "bijection",
    ));
    for c in &report.correspondences {
        let source = format!("{},{}", c.source.upper, c.source.lower);
        for (image, tag) in &c.images {
            record.push(ResultRow::exact(
                Some(source.clone()),
                &format!("image-group-{}", tag_name(*tag)),
                format!("{},{}", image.upper, image.lower),
                &format!("phi-case-{:?}", c.case),
            ));
        }
    }
    let passed = report.passed();
    record.details = Some(serde_json::to_value(&report).expect("report serializes"));
    Ok(Outcome { record, passed })
}

pub fn verify(a: &VerifyArgs, g: &Global) -> Result<Outcome> {
    let suites = if a.all || a.suite.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suite
            .iter()
            .filter(|s| s.as_str() != "none")
            .map(|s| s.parse::<Suite>().map_err(|e| usage(e.to_string())))
            .collect::<Result<Vec<_>>>()?
    };
    let mut config = VerifyConfig::default().with_suites(suites);
    let mut record = OutputRecord::new("verify").param(
        "suites",
        config
            .suites
            .iter()
            .map(|s| s.name())
            .collect::<Vec<_>>()
            .join(","),
    );
    if let Some(n) = a.nmax {
        bound(g, "nmax", n, VERIFY_MAX_N)?;
        config = config.with_n_max(n);
        record = record.param("nmax", n);
    }
    let reports = run_all(&config);
    for r in &reports {
        let id = Some(r.check_id.clone());
        record.push(ResultRow::exact(
            id.clone(),
            "status",
            if r.passed() { "pass" } else { "fail" },
            "verify",
        ));
        record.push(ResultRow::exact(
            id.clone(),
            "instances",
            r.instances_checked,
            "verify",
        ));
        if let Some(c) = &r.first_failure {
            record.push(ResultRow::exact(
                id,
                "first-failure",
                format!("{}: {} != {}", c.args, c.left, c.right),
                "verify",
            ));
        }
    }
    let passed = reports.iter().all(|r| r.passed());
    record.details = Some(serde_json::to_value(&reports).expect("reports serialize"));
    Ok(Outcome { record, passed })
}
