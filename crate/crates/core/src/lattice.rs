//! Monotone lattice paths and the three intersection-counting conventions.
//!
//! Two paths with a common start reach every antidiagonal `x + y = c` after
//! the same number of steps, so a shared vertex always occurs at the same
//! step index in both. The counting operations exploit this and compare the
//! paths step by step; [`PathNE::vertex_set`] gives the literal set-based
//! definition for cross-checking.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn level(self) -> i64 {
        self.x + self.y
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// x + 1
    E,
    /// y + 1
    N,
}

impl Step {
    pub fn apply(self, p: Point) -> Point {
        match self {
            Step::E => Point::new(p.x + 1, p.y),
            Step::N => Point::new(p.x, p.y + 1),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

/// A monotone path of unit E/N steps. Vertices are derived on demand.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathNE {
    start: Point,
    steps: Vec<Step>,
}

impl PathNE {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        PathNE { start, steps }
    }

    pub fn from_origin(steps: Vec<Step>) -> Self {
        PathNE::new(Point::ORIGIN, steps)
    }

    /// Path from the origin whose E steps sit at the given (sorted) indices.
    pub fn from_e_positions(n: usize, e_positions: &[usize]) -> Self {
        let mut steps = vec![Step::N; n];
        for &i in e_positions {
            steps[i] = Step::E;
        }
        PathNE::from_origin(steps)
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn e_count(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::E).count()
    }

    pub fn end(&self) -> Point {
        self.steps.iter().fold(self.start, |p, s| s.apply(p))
    }

    /// `vertices()[t]` is the position after `t` steps; length is `len() + 1`.
    pub fn vertices(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for s in &self.steps {
            p = s.apply(p);
            out.push(p);
        }
        out
    }

    pub fn vertex_set(&self) -> BTreeSet<Point> {
        self.vertices().into_iter().collect()
    }

    /// Step index at which the path visits `p`, if it does.
    pub fn index_of(&self, p: Point) -> Option<usize> {
        let t = p.level() - self.start.level();
        if t < 0 || t as usize > self.steps.len() {
            return None;
        }
        let t = t as usize;
        (self.vertices()[t] == p).then_some(t)
    }

    /// The same steps starting from a shifted point.
    pub fn translated(&self, dx: i64, dy: i64) -> Self {
        PathNE::new(
            Point::new(self.start.x + dx, self.start.y + dy),
            self.steps.clone(),
        )
    }
}

impl fmt::Display for PathNE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PathNE {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::E),
                'N' | 'n' => Ok(Step::N),
                other => Err(Error::InvalidPath(format!(
                    "unexpected step {other:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PathNE::from_origin(steps))
    }
}

/// Two paths with equal step counts and a common start.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathPair {
    pub first: PathNE,
    pub second: PathNE,
    pub ordered: bool,
}

impl PathPair {
    pub fn new(first: PathNE, second: PathNE, ordered: bool) -> Result<Self> {
        if first.len() != second.len() {
            return Err(Error::StepCountMismatch(first.len(), second.len()));
        }
        if first.start() != second.start() {
            return Err(Error::StartMismatch(first.start(), second.start()));
        }
        Ok(PathPair {
            first,
            second,
            ordered,
        })
    }

    pub fn ordered(first: PathNE, second: PathNE) -> Result<Self> {
        PathPair::new(first, second, true)
    }

    pub fn swapped(&self) -> Self {
        PathPair {
            first: self.second.clone(),
            second: self.first.clone(),
            ordered: self.ordered,
        }
    }

    /// Shared vertices, start included.
    pub fn shared_vertices(&self) -> usize {
        shared_vertex_count(self.first.steps(), self.second.steps())
    }

    /// Shared vertices listed in step order, start included.
    pub fn shared_points(&self) -> Vec<Point> {
        self.first
            .vertices()
            .into_iter()
            .zip(self.second.vertices())
            .filter(|(a, b)| a == b)
            .map(|(a, _)| a)
            .collect()
    }

    /// Shared vertices excluding both the common start and the common end.
    pub fn intersections_interior(&self) -> Result<usize> {
        let (a, b) = (self.first.end(), self.second.end());
        if a != b {
            return Err(Error::EndpointMismatch(a, b));
        }
        // For an empty pair start and end are the same vertex.
        if self.first.is_empty() {
            return Ok(0);
        }
        Ok(self.shared_vertices() - 2)
    }

    /// Shared vertices excluding the origin; a shared endpoint is counted.
    pub fn intersections_excluding_origin(&self) -> Result<usize> {
        if self.first.start() != Point::ORIGIN {
            return Err(Error::NotAtOrigin(self.first.start()));
        }
        self.intersections_excluding_start()
    }

    /// Shared vertices excluding the common start; a shared endpoint is counted.
    pub fn intersections_excluding_start(&self) -> Result<usize> {
        Ok(self.shared_vertices() - 1)
    }
}

/// Number of indices `t` in `0..=n` at which two equal-length step sequences
/// from a common start occupy the same vertex.
pub fn shared_vertex_count(a: &[Step], b: &[Step]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    let mut diff: i64 = 0;
    let mut count = 1;
    for (sa, sb) in a.iter().zip(b) {
        diff += i64::from(*sa == Step::E) - i64::from(*sb == Step::E);
        if diff == 0 {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: &str, b: &str) -> PathPair {
        PathPair::ordered(a.parse().unwrap(), b.parse().unwrap()).unwrap()
    }

    #[test]
    fn vertices_follow_steps() {
        let p: PathNE = "ENN".parse().unwrap();
        assert_eq!(
            p.vertices(),
            vec![
                Point::new(0, 0),
                Point::new(1, 0),
                Point::new(1, 1),
                Point::new(1, 2)
            ]
        );
        assert_eq!(p.end(), Point::new(1, 2));
        assert_eq!(p.index_of(Point::new(1, 1)), Some(2));
        assert_eq!(p.index_of(Point::new(0, 2)), None);
        assert_eq!(p.to_string(), "ENN");
        let q = p.translated(0, -1);
        assert_eq!(q.vertices()[0], Point::new(0, -1));
        assert!("ENX".parse::<PathNE>().is_err());
    }

    #[test]
    fn interior_examples() {
        assert_eq!(pair("EN", "NE").intersections_interior().unwrap(), 0);
        assert_eq!(pair("EN", "EN").intersections_interior().unwrap(), 1);
        assert_eq!(pair("ENN", "NEN").intersections_interior().unwrap(), 1);
        assert_eq!(pair("", "").intersections_interior().unwrap(), 0);
    }

    #[test]
    fn excluding_origin_examples() {
        assert_eq!(pair("E", "E").intersections_excluding_origin().unwrap(), 1);
        assert_eq!(pair("E", "N").intersections_excluding_origin().unwrap(), 0);
        assert_eq!(
            pair("EN", "NE").intersections_excluding_origin().unwrap(),
            1
        );
        let shifted = PathPair::ordered(
            PathNE::new(Point::new(1, 0), vec![Step::E]),
            PathNE::new(Point::new(1, 0), vec![Step::E]),
        )
        .unwrap();
        assert!(matches!(
            shifted.intersections_excluding_origin(),
            Err(Error::NotAtOrigin(_))
        ));
    }

    #[test]
    fn excluding_start_examples() {
        assert_eq!(pair("NN", "EN").intersections_excluding_start().unwrap(), 0);
        assert_eq!(pair("NN", "NE").intersections_excluding_start().unwrap(), 1);
        for p in ["EE", "EN", "NE", "NN"] {
            assert_eq!(pair(p, p).intersections_excluding_start().unwrap(), 2);
        }
    }

    #[test]
    fn rejects_mismatched_pairs() {
        let a: PathNE = "EN".parse().unwrap();
        let b: PathNE = "ENN".parse().unwrap();
        assert_eq!(
            PathPair::ordered(a.clone(), b).unwrap_err(),
            Error::StepCountMismatch(2, 3)
        );
        let c = PathNE::new(Point::new(0, 1), vec![Step::E, Step::N]);
        assert!(matches!(
            PathPair::ordered(a.clone(), c),
            Err(Error::StartMismatch(..))
        ));
        let d: PathNE = "EE".parse().unwrap();
        assert!(matches!(
            PathPair::ordered(a, d).unwrap().intersections_interior(),
            Err(Error::EndpointMismatch(..))
        ));
    }

    #[test]
    fn degenerate_rectangle_pairs_share_all_interior_vertices() {
        for n in 1..6 {
            let p = PathNE::from_origin(vec![Step::N; n]);
            let pp = PathPair::ordered(p.clone(), p).unwrap();
            assert_eq!(pp.intersections_interior().unwrap(), n - 1);
        }
    }
}
