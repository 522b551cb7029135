//! Brute-force enumerators and exact probability dynamic programs.
//!
//! Nothing here uses a closed form: tables are built by listing every pair of
//! paths, and walker probabilities by pushing exact probability mass through
//! the joint state space one time step at a time. These are the ground truth
//! the formula, series and bijection modules are checked against.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{check_probability, parse_probability, BigCount, Rat};
use crate::error::{out_of_range, Error, Result};
use crate::lattice::{shared_vertex_count, PathNE, PathPair, Point};

/// Default upper bound on `n` for the enumerators.
pub const ORACLE_MAX_N: usize = 12;

/// Number of pairs keyed by intersection count.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountTable {
    entries: BTreeMap<usize, BigCount>,
    total: BigCount,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    fn from_counts(counts: BTreeMap<usize, u64>) -> Self {
        let mut table = CountTable::new();
        for (k, c) in counts {
            table.add(k, BigUint::from(c));
        }
        table
    }

    pub fn add(&mut self, k: usize, count: BigCount) {
        if count.is_zero() {
            return;
        }
        self.total += &count;
        *self.entries.entry(k).or_default() += count;
    }

    /// Count at `k`; zero when absent.
    pub fn get(&self, k: usize) -> BigCount {
        self.entries.get(&k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> &BigCount {
        &self.total
    }

    pub fn entries(&self) -> &BTreeMap<usize, BigCount> {
        &self.entries
    }

    pub fn max_key(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }
}

fn check_bound(n: usize) -> Result<()> {
    if n > ORACLE_MAX_N {
        return Err(out_of_range(
            "n",
            format!("enumeration limited to n <= {ORACLE_MAX_N}, got {n}"),
        ));
    }
    Ok(())
}

/// All paths from the origin with `n` steps, `r` of them E, in lexicographic
/// order of the E positions.
pub fn paths_with_e_count(n: usize, r: usize) -> Vec<PathNE> {
    (0..n)
        .combinations(r)
        .map(|pos| PathNE::from_e_positions(n, &pos))
        .collect()
}

/// All `2^n` free walks of `n` steps from the origin.
pub fn all_walks(n: usize) -> Vec<PathNE> {
    (0..=n).flat_map(|r| paths_with_e_count(n, r)).collect()
}

fn tally<'a, F>(firsts: &'a [PathNE], seconds: &'a [PathNE], key: F) -> BTreeMap<usize, u64>
where
    F: Fn(&PathNE, &PathNE) -> Option<usize> + Sync,
{
    firsts
        .par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<usize, u64>, p| {
            for q in seconds {
                if let Some(k) = key(p, q) {
                    *acc.entry(k).or_default() += 1;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_default() += c;
            }
            a
        })
}

/// `N_k^{n,r}`: ordered pairs of corner-to-corner paths on an
/// `r x (n - r)` rectangle by number of shared interior vertices.
pub fn enum_nkr(n: usize, r: usize) -> Result<CountTable> {
    if r > n {
        return Err(out_of_range("r", format!("need r <= n, got r={r}, n={n}")));
    }
    check_bound(n)?;
    let paths = paths_with_e_count(n, r);
    let counts = tally(&paths, &paths, |p, q| {
        let shared = shared_vertex_count(p.steps(), q.steps());
        Some(if n == 0 { 0 } else { shared - 2 })
    });
    Ok(CountTable::from_counts(counts))
}

/// `M_{r,s}^{n,k}`: unordered pairs (r-path, s-path), `r < s`, by shared
/// vertices excluding the start.
pub fn enum_mrs(n: usize, r: usize, s: usize) -> Result<CountTable> {
    if r >= s || s > n {
        return Err(out_of_range(
            "(r, s)",
            format!("need r < s <= n, got r={r}, s={s}, n={n}"),
        ));
    }
    check_bound(n)?;
    let lower = paths_with_e_count(n, r);
    let upper = paths_with_e_count(n, s);
    let counts = tally(&lower, &upper, |p, q| {
        Some(shared_vertex_count(p.steps(), q.steps()) - 1)
    });
    Ok(CountTable::from_counts(counts))
}

/// `f(n, k)`: ordered pairs of free `n`-step walks by shared vertices
/// excluding the origin.
pub fn enum_fnk(n: usize) -> Result<CountTable> {
    check_bound(n)?;
    let walks = all_walks(n);
    let counts = tally(&walks, &walks, |p, q| {
        Some(shared_vertex_count(p.steps(), q.steps()) - 1)
    });
    Ok(CountTable::from_counts(counts))
}

/// `phi(n, k)`: ordered pairs of free `n`-step walks ending at the same
/// point, by shared interior vertices.
pub fn enum_phi(n: usize) -> Result<CountTable> {
    if n == 0 {
        return Err(out_of_range("n", "enum_phi needs n >= 1"));
    }
    check_bound(n)?;
    let mut table = CountTable::new();
    for r in 0..=n {
        for (k, c) in enum_nkr(n, r)?.entries() {
            table.add(*k, c.clone());
        }
    }
    Ok(table)
}

/// Independent check used by tests: a table keyed through [`PathPair`]'s
/// set-based conventions instead of the stepwise counter.
pub fn enum_nkr_via_pairs(n: usize, r: usize) -> Result<CountTable> {
    let paths = paths_with_e_count(n, r);
    let mut table = CountTable::new();
    for p in &paths {
        for q in &paths {
            let pair = PathPair::ordered(p.clone(), q.clone())?;
            table.add(pair.intersections_interior()?, BigUint::one());
        }
    }
    Ok(table)
}

/// Probability of a West step as a function of position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbModel {
    Constant(Rat),
    /// `p_m` for level `m = x + y`, indexed from level 1. Levels past the end
    /// reuse the last value; levels below 1 use the first.
    ByLevel(Vec<Rat>),
}

impl ProbModel {
    pub fn validate(&self) -> Result<()> {
        match self {
            ProbModel::Constant(p) => check_probability(p),
            ProbModel::ByLevel(levels) => {
                if levels.is_empty() {
                    return Err(Error::EmptyLevels);
                }
                levels.iter().try_for_each(check_probability)
            }
        }
    }

    pub fn west_prob(&self, at: Point) -> Rat {
        match self {
            ProbModel::Constant(p) => p.clone(),
            ProbModel::ByLevel(levels) => {
                let m = at.level().max(1) as usize;
                levels[(m - 1).min(levels.len() - 1)].clone()
            }
        }
    }
}

/// One line per level `m = 1, 2, ...`, each an exact rational.
pub fn parse_level_file(text: &str) -> Result<ProbModel> {
    let lines: Vec<&str> = text.trim_end().lines().collect();
    if lines.is_empty() || (lines.len() == 1 && lines[0].trim().is_empty()) {
        return Err(Error::LevelFile {
            line: 1,
            detail: "no probabilities given".into(),
        });
    }
    let levels = lines
        .iter()
        .enumerate()
        .map(|(i, line)| {
            parse_probability(line).map_err(|e| Error::LevelFile {
                line: i + 1,
                detail: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProbModel::ByLevel(levels))
}

/// Two walkers at `(a, b + x + 1)` and `(a + x + 1, b)` moving West/South.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarrierConfig {
    pub a: u32,
    pub b: u32,
    pub x: u32,
    pub model: ProbModel,
}

impl BarrierConfig {
    pub fn new(a: u32, b: u32, x: u32, model: ProbModel) -> Result<Self> {
        model.validate()?;
        Ok(BarrierConfig { a, b, x, model })
    }

    pub fn upper_start(&self) -> Point {
        Point::new(i64::from(self.a), i64::from(self.b + self.x + 1))
    }

    pub fn lower_start(&self) -> Point {
        Point::new(i64::from(self.a + self.x + 1), i64::from(self.b))
    }

    /// Steps until both walkers reach the line `x + y = 1`.
    pub fn steps(&self) -> usize {
        (self.a + self.b + self.x) as usize
    }
}

fn weighted_moves(at: Point, model: &ProbModel, moves: &mut Vec<(Point, Rat)>) {
    let p = model.west_prob(at);
    let q = Rat::one() - &p;
    if !p.is_zero() {
        moves.push((Point::new(at.x - 1, at.y), p));
    }
    if !q.is_zero() {
        moves.push((Point::new(at.x, at.y - 1), q));
    }
}

/// Moves under the barrier rules: free inside the open quadrant, forced
/// toward the origin along an axis, absorbed at the origin.
fn barrier_moves(at: Point, model: &ProbModel) -> Vec<(Point, Rat)> {
    let mut moves = Vec::with_capacity(2);
    match (at.x, at.y) {
        (0, 0) => moves.push((at, Rat::one())),
        (x, 0) => moves.push((Point::new(x - 1, 0), Rat::one())),
        (0, y) => moves.push((Point::new(0, y - 1), Rat::one())),
        _ => weighted_moves(at, model, &mut moves),
    }
    moves
}

fn free_moves(at: Point, model: &ProbModel) -> Vec<(Point, Rat)> {
    let mut moves = Vec::with_capacity(2);
    weighted_moves(at, model, &mut moves);
    moves
}

fn check_quadrant(p: Point) -> Result<()> {
    if p.x < 0 || p.y < 0 {
        return Err(out_of_range(
            "start",
            format!("{p} is outside the quadrant"),
        ));
    }
    Ok(())
}

/// Probability that two synchronous barrier walkers first share a vertex at
/// the origin. A coincident start does not count as a meeting.
pub fn first_meeting_at_origin(upper: Point, lower: Point, model: &ProbModel) -> Result<Rat> {
    model.validate()?;
    check_quadrant(upper)?;
    check_quadrant(lower)?;
    if upper.level() != lower.level() {
        return Err(out_of_range(
            "start",
            format!("walkers must start on the same level, got {upper} and {lower}"),
        ));
    }
    let mut states: BTreeMap<(Point, Point), Rat> = BTreeMap::new();
    states.insert((upper, lower), Rat::one());
    for _ in 0..upper.level() {
        let mut next: BTreeMap<(Point, Point), Rat> = BTreeMap::new();
        for ((pu, pl), w) in states {
            let mu = barrier_moves(pu, model);
            let ml = barrier_moves(pl, model);
            for (nu, wu) in &mu {
                for (nl, wl) in &ml {
                    if nu == nl && *nu != Point::ORIGIN {
                        continue;
                    }
                    *next.entry((*nu, *nl)).or_insert_with(Rat::zero) += &w * wu * wl;
                }
            }
        }
        states = next;
    }
    Ok(states
        .into_iter()
        .filter(|((u, l), _)| *u == Point::ORIGIN && *l == Point::ORIGIN)
        .map(|(_, w)| w)
        .fold(Rat::zero(), |acc, w| acc + w))
}

/// `B(a, b, x)`: probability that the first meeting is at the origin.
pub fn barrier_dp(config: &BarrierConfig) -> Result<Rat> {
    first_meeting_at_origin(config.upper_start(), config.lower_start(), &config.model)
}

/// Both walkers start at `(a + 1, b + 1)`; probability that their first
/// meeting after time zero is at the origin.
pub fn same_start_dp(a: u32, b: u32, p: &Rat) -> Result<Rat> {
    let start = Point::new(i64::from(a) + 1, i64::from(b) + 1);
    first_meeting_at_origin(start, start, &ProbModel::Constant(p.clone()))
}

fn single_walker<F>(
    start: Point,
    steps: usize,
    model: &ProbModel,
    moves: F,
) -> Result<BTreeMap<Point, Rat>>
where
    F: Fn(Point, &ProbModel) -> Vec<(Point, Rat)>,
{
    model.validate()?;
    let mut states: BTreeMap<Point, Rat> = BTreeMap::new();
    states.insert(start, Rat::one());
    for _ in 0..steps {
        let mut next: BTreeMap<Point, Rat> = BTreeMap::new();
        for (at, w) in states {
            for (to, wt) in moves(at, model) {
                *next.entry(to).or_insert_with(Rat::zero) += &w * wt;
            }
        }
        states = next;
    }
    Ok(states)
}

/// Probability that a walker with no axis constraints, stepping West with
/// `model.west_prob` and South otherwise, is in `targets` after `steps` steps.
pub fn unconstrained_endpoint_prob(
    start: Point,
    steps: usize,
    targets: &[Point],
    model: &ProbModel,
) -> Result<Rat> {
    let dist = single_walker(start, steps, model, free_moves)?;
    Ok(dist
        .into_iter()
        .filter(|(p, _)| targets.contains(p))
        .fold(Rat::zero(), |acc, (_, w)| acc + w))
}

/// Same, for one walker obeying the barrier rules.
pub fn barrier_walker_endpoint_prob(
    start: Point,
    steps: usize,
    target: Point,
    model: &ProbModel,
) -> Result<Rat> {
    check_quadrant(start)?;
    let dist = single_walker(start, steps, model, barrier_moves)?;
    Ok(dist.get(&target).cloned().unwrap_or_else(Rat::zero))
}

/// The points `(-t, 1 + t)` for `0 <= t <= x`.
pub fn single_walker_targets(x: u32) -> Vec<Point> {
    (0..=i64::from(x)).map(|t| Point::new(-t, 1 + t)).collect()
}

/// `B` through the single unconstrained walker.
pub fn barrier_single_walker(config: &BarrierConfig) -> Result<Rat> {
    unconstrained_endpoint_prob(
        config.upper_start(),
        config.steps(),
        &single_walker_targets(config.x),
        &config.model,
    )
}

/// `(u, l)`: probabilities that the upper walker stops at `(0, 1)` and the
/// lower at `(1, 0)` after `a + b + x` barrier steps.
pub fn barrier_marginals(config: &BarrierConfig) -> Result<(Rat, Rat)> {
    let u = barrier_walker_endpoint_prob(
        config.upper_start(),
        config.steps(),
        Point::new(0, 1),
        &config.model,
    )?;
    let l = barrier_walker_endpoint_prob(
        config.lower_start(),
        config.steps(),
        Point::new(1, 0),
        &config.model,
    )?;
    Ok((u, l))
}
