//! An explicit two-to-one map from nonintersecting pairs of paths on an
//! `r x s` rectangle onto pairs that share exactly one interior vertex, and
//! its inverse.
//!
//! Pairs are unordered. The representative is ordered by the north-of
//! relation: `upper` is the path that takes an N step at the first index
//! where the two step sequences differ. Every construction re-validates its
//! output and reports the case label on failure.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{PathNE, PathPair, Point, Step};
use crate::oracle::paths_with_e_count;

impl Serialize for PathNE {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PairKind {
    NonIntersecting,
    OneIntersection(Point),
}

/// An unordered pair of corner-to-corner paths with at most one shared
/// interior vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RectPair {
    pub upper: PathNE,
    pub lower: PathNE,
    pub kind: PairKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GroupTag {
    /// Meets at `(1, 0)`, or at `(r - 1, s)` as the partner of such a pair.
    I,
    /// Meets at `(0, 1)`, or at `(r, s - 1)` as the partner of such a pair.
    II,
    /// Meets at an interior point. `north_first` is set when the path that is
    /// north before the meeting also leaves it northward.
    III { north_first: bool },
}

/// Which branch of the forward map applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PhiCase {
    /// Every interior column has distance at least 2.
    A,
    /// First distance-1 column meets away from `(1, 0)`.
    B,
    /// First distance-1 column meets at `(1, 0)`.
    C,
}

fn upper_first(a: PathNE, b: PathNE) -> (PathNE, PathNE) {
    let first_diff = a.steps().iter().zip(b.steps()).find(|(x, y)| x != y);
    match first_diff {
        Some((Step::E, _)) => (b, a),
        _ => (a, b),
    }
}

impl RectPair {
    /// Classifies and canonicalizes two paths from the origin to a common
    /// corner. Pairs sharing two or more interior vertices are rejected.
    pub fn new(a: PathNE, b: PathNE) -> Result<Self> {
        if a.start() != Point::ORIGIN {
            return Err(Error::NotAtOrigin(a.start()));
        }
        let pair = PathPair::new(a, b, false)?;
        let k = pair.intersections_interior()?;
        let kind = match k {
            0 => PairKind::NonIntersecting,
            1 => {
                let shared = pair.shared_points();
                PairKind::OneIntersection(shared[1])
            }
            k => {
                return Err(Error::InvalidPath(format!(
                    "pair ({}, {}) has {k} interior intersections",
                    pair.first, pair.second
                )))
            }
        };
        let (upper, lower) = upper_first(pair.first, pair.second);
        Ok(RectPair { upper, lower, kind })
    }

    pub fn from_strs(a: &str, b: &str) -> Result<Self> {
        RectPair::new(a.parse()?, b.parse()?)
    }

    /// Corner `(r, s)`.
    pub fn corner(&self) -> Point {
        self.upper.end()
    }

    pub fn meeting_point(&self) -> Option<Point> {
        match self.kind {
            PairKind::OneIntersection(p) => Some(p),
            PairKind::NonIntersecting => None,
        }
    }
}

/// Lowest and highest `y` of a path's vertices in column `x`.
fn column_span(path: &PathNE, x: i64) -> Option<(i64, i64)> {
    let ys: Vec<i64> = path
        .vertices()
        .into_iter()
        .filter(|v| v.x == x)
        .map(|v| v.y)
        .collect();
    Some((*ys.first()?, *ys.last()?))
}

/// `min |y2 - y1|` over vertices `(x, y1)` of `p` and `(x, y2)` of `q`.
pub fn dist_at_x(p: &PathNE, q: &PathNE, x: i64) -> Result<i64> {
    let r = p.end().x;
    if x < 0 || x > r || q.end().x != r {
        return Err(Error::OutOfRange {
            what: "x",
            detail: format!("need 0 <= x <= {r} on a common rectangle, got {x}"),
        });
    }
    let (plo, phi) = column_span(p, x).expect("monotone path visits every column");
    let (qlo, qhi) = column_span(q, x).expect("monotone path visits every column");
    Ok(if phi < qlo {
        qlo - phi
    } else if qhi < plo {
        plo - qhi
    } else {
        0
    })
}

fn concat(parts: &[&[Step]]) -> Vec<Step> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn build(
    case: &'static str,
    a: Vec<Step>,
    b: Vec<Step>,
    expected: PairKind,
    corner: Point,
) -> Result<RectPair> {
    let fail = |detail: String| Error::Bijection { case, detail };
    let (pa, pb) = (PathNE::from_origin(a), PathNE::from_origin(b));
    if pa.end() != corner || pb.end() != corner {
        return Err(fail(format!("built ({pa}, {pb}) does not end at {corner}")));
    }
    let (sa, sb) = (pa.to_string(), pb.to_string());
    let pair = RectPair::new(pa, pb).map_err(|e| fail(format!("built ({sa}, {sb}): {e}")))?;
    if pair.kind != expected {
        return Err(fail(format!(
            "built ({sa}, {sb}) has kind {:?}, expected {expected:?}",
            pair.kind
        )));
    }
    Ok(pair)
}

/// Output of the forward map on one nonintersecting pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiImages {
    pub case: PhiCase,
    pub first: RectPair,
    pub second: RectPair,
}

/// The forward map with its case label.
pub fn phi_map_detailed(pair: &RectPair) -> Result<PhiImages> {
    let corner = pair.corner();
    let (r, s) = (corner.x, corner.y);
    if pair.kind != PairKind::NonIntersecting {
        return Err(Error::Bijection {
            case: "phi",
            detail: format!("input ({}, {}) intersects", pair.upper, pair.lower),
        });
    }
    if r < 1 || s < 1 {
        return Err(Error::Bijection {
            case: "phi",
            detail: format!("degenerate {r}x{s} rectangle"),
        });
    }
    let p = pair.upper.steps();
    let q = pair.lower.steps();
    let n = p.len();
    let mut x0 = None;
    for x in 1..r {
        if dist_at_x(&pair.upper, &pair.lower, x)? == 1 {
            x0 = Some(x);
            break;
        }
    }
    let Some(x0) = x0 else {
        if p[0] != Step::N || q[n - 1] != Step::N {
            return Err(Error::Bijection {
                case: "A",
                detail: "upper must start with N and lower must end with N".into(),
            });
        }
        let lowered = concat(&[&p[1..], &[Step::N]]);
        let lifted = concat(&[&[Step::N], &q[..n - 1]]);
        let first = build(
            "A",
            lowered,
            q.to_vec(),
            PairKind::OneIntersection(Point::new(r, s - 1)),
            corner,
        )?;
        // The lifted lower path gains the N edge from (0, 0) to (0, 1).
        let second = build(
            "A",
            p.to_vec(),
            lifted,
            PairKind::OneIntersection(Point::new(0, 1)),
            corner,
        )?;
        return Ok(PhiImages {
            case: PhiCase::A,
            first,
            second,
        });
    };
    let (_, y0) = column_span(&pair.lower, x0).expect("column in range");
    let meet = Point::new(x0, y0);
    let idx = (x0 + y0 + 1) as usize;
    let case = if meet == Point::new(1, 0) {
        PhiCase::C
    } else {
        PhiCase::B
    };
    let label = if case == PhiCase::C { "C" } else { "B" };
    if pair.upper.index_of(Point::new(x0, y0 + 1)) != Some(idx) || p[0] != Step::N {
        return Err(Error::Bijection {
            case: label,
            detail: format!("upper path does not start N and pass ({x0}, {})", y0 + 1),
        });
    }
    // Lower the prefix by dropping the first N edge, then re-insert it
    // between (x0, y0) and (x0, y0 + 1).
    let moved = concat(&[&p[1..idx], &[Step::N], &p[idx..]]);
    let first = build(
        label,
        moved.clone(),
        q.to_vec(),
        PairKind::OneIntersection(meet),
        corner,
    )?;
    let second = match case {
        PhiCase::B => {
            let t = idx - 1;
            let a = concat(&[&moved[..t], &q[t..]]);
            let b = concat(&[&q[..t], &moved[t..]]);
            build("B", a, b, PairKind::OneIntersection(meet), corner)?
        }
        _ => {
            // Move the shared first E edge to the end of both paths.
            let a = concat(&[&moved[1..], &[Step::E]]);
            let b = concat(&[&q[1..], &[Step::E]]);
            build(
                "C",
                a,
                b,
                PairKind::OneIntersection(Point::new(r - 1, s)),
                corner,
            )?
        }
    };
    Ok(PhiImages {
        case,
        first,
        second,
    })
}

/// The forward map: two distinct one-intersection pairs per input.
pub fn phi_map(pair: &RectPair) -> Result<(RectPair, RectPair)> {
    let images = phi_map_detailed(pair)?;
    Ok((images.first, images.second))
}

/// Path taking an N step at index `t` among the two; the other second.
fn split_by_step(
    a: &PathNE,
    b: &PathNE,
    t: usize,
    case: &'static str,
) -> Result<(Vec<Step>, Vec<Step>)> {
    match (a.steps()[t], b.steps()[t]) {
        (Step::N, Step::E) => Ok((a.steps().to_vec(), b.steps().to_vec())),
        (Step::E, Step::N) => Ok((b.steps().to_vec(), a.steps().to_vec())),
        _ => Err(Error::Bijection {
            case,
            detail: format!("paths ({a}, {b}) do not separate after index {t}"),
        }),
    }
}

/// Undo the moved-N-edge construction for a pair meeting at step index `t`
/// where `moved` leaves the meeting point northward.
fn unmove(moved: &[Step], t: usize) -> Vec<Step> {
    concat(&[&[Step::N], &moved[..t], &moved[t + 1..]])
}

/// The inverse map: recovers the nonintersecting source and the group.
pub fn psi_map(pair: &RectPair) -> Result<(RectPair, GroupTag)> {
    let Some(m) = pair.meeting_point() else {
        return Err(Error::Bijection {
            case: "psi",
            detail: format!("input ({}, {}) has no intersection", pair.upper, pair.lower),
        });
    };
    let corner = pair.corner();
    let (r, s) = (corner.x, corner.y);
    let u = pair.upper.steps();
    let l = pair.lower.steps();
    let n = u.len();
    let t = (m.x + m.y) as usize;
    let source = |case: &'static str, a: Vec<Step>, b: Vec<Step>| {
        build(case, a, b, PairKind::NonIntersecting, corner)
    };
    let need = |cond: bool, case: &'static str, what: &str| {
        if cond {
            Ok(())
        } else {
            Err(Error::Bijection {
                case,
                detail: format!("({}, {}): {what}", pair.upper, pair.lower),
            })
        }
    };
    if m == Point::new(0, 1) {
        need(l[0] == Step::N, "psi-II", "lower path must start with N")?;
        let q = concat(&[&l[1..], &[Step::N]]);
        return Ok((source("psi-II", u.to_vec(), q)?, GroupTag::II));
    }
    if m == Point::new(1, 0) {
        if r == 1 && s == 1 {
            let p = concat(&[&[Step::N], &u[..n - 1]]);
            return Ok((source("psi-I", p, l.to_vec())?, GroupTag::I));
        }
        let (moved, q) = split_by_step(&pair.upper, &pair.lower, 1, "psi-I")?;
        return Ok((source("psi-I", unmove(&moved, 1), q)?, GroupTag::I));
    }
    if m == Point::new(r - 1, s) {
        need(
            u[n - 1] == Step::E && l[n - 1] == Step::E,
            "psi-I",
            "both paths must end with E",
        )?;
        let a = PathNE::from_origin(concat(&[&[Step::E], &u[..n - 1]]));
        let b = PathNE::from_origin(concat(&[&[Step::E], &l[..n - 1]]));
        let (moved, q) = split_by_step(&a, &b, 1, "psi-I")?;
        return Ok((source("psi-I", unmove(&moved, 1), q)?, GroupTag::I));
    }
    if m == Point::new(r, s - 1) {
        need(
            u[n - 1] == Step::N && l[n - 1] == Step::N,
            "psi-II",
            "both paths must end with N",
        )?;
        let p = concat(&[&[Step::N], &u[..n - 1]]);
        return Ok((source("psi-II", p, l.to_vec())?, GroupTag::II));
    }
    need(
        0 < m.x && m.x < r && 0 < m.y && m.y < s,
        "psi-III",
        "single intersection at an unexpected boundary point",
    )?;
    let north_first = u[t] == Step::N;
    let (moved, q) = if north_first {
        (u.to_vec(), l.to_vec())
    } else {
        (concat(&[&u[..t], &l[t..]]), concat(&[&l[..t], &u[t..]]))
    };
    need(
        moved[t] == Step::N,
        "psi-III",
        "upper path must leave the meeting point northward",
    )?;
    Ok((
        source("psi-III", unmove(&moved, t), q)?,
        GroupTag::III { north_first },
    ))
}

/// Double-edge removal used to pair group I and group II images.
fn reduce_double_edge(pair: &RectPair, rule: GroupTag) -> Option<(Vec<Step>, Vec<Step>)> {
    let corner = pair.corner();
    let m = pair.meeting_point()?;
    let (u, l) = (pair.upper.steps(), pair.lower.steps());
    let n = u.len();
    let (front, back) = match rule {
        GroupTag::I => (Point::new(1, 0), Point::new(corner.x - 1, corner.y)),
        GroupTag::II => (Point::new(0, 1), Point::new(corner.x, corner.y - 1)),
        GroupTag::III { .. } => return None,
    };
    let mut out = if m == front {
        (u[1..].to_vec(), l[1..].to_vec())
    } else if m == back {
        (u[..n - 1].to_vec(), l[..n - 1].to_vec())
    } else {
        return None;
    };
    if out.0 > out.1 {
        std::mem::swap(&mut out.0, &mut out.1);
    }
    Some(out)
}

/// One row of the correspondence table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Correspondence {
    pub source: RectPair,
    pub case: PhiCase,
    pub images: [(RectPair, GroupTag); 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub r: u32,
    pub s: u32,
    pub nonintersecting: usize,
    pub one_intersection: usize,
    pub phi_total: bool,
    pub images_distinct: bool,
    pub exhaustive: bool,
    pub round_trip: bool,
    pub groups_consistent: bool,
    pub twice_count: bool,
    /// First few counterexamples in enumeration order.
    pub failures: Vec<String>,
    pub correspondences: Vec<Correspondence>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.phi_total
            && self.images_distinct
            && self.exhaustive
            && self.round_trip
            && self.groups_consistent
            && self.twice_count
            && self.failures.is_empty()
    }
}

const MAX_FAILURES: usize = 10;

/// Exhaustively checks the map and its inverse on the `r x s` rectangle.
pub fn verify_bijection(r: u32, s: u32) -> Result<BijectionReport> {
    if r < 1 || s < 1 {
        return Err(Error::OutOfRange {
            what: "(r, s)",
            detail: format!("need r, s >= 1, got r={r}, s={s}"),
        });
    }
    let paths = paths_with_e_count((r + s) as usize, r as usize);
    let mut sources = Vec::new();
    let mut targets = BTreeSet::new();
    for (i, a) in paths.iter().enumerate() {
        for b in &paths[i..] {
            let shared = crate::lattice::shared_vertex_count(a.steps(), b.steps()) - 2;
            if shared > 1 || (shared == 0 && a == b) {
                continue;
            }
            let pair = RectPair::new(a.clone(), b.clone())?;
            match pair.kind {
                PairKind::NonIntersecting => sources.push(pair),
                PairKind::OneIntersection(_) => {
                    targets.insert(pair);
                }
            }
        }
    }

    let mut report = BijectionReport {
        r,
        s,
        nonintersecting: sources.len(),
        one_intersection: targets.len(),
        phi_total: true,
        images_distinct: true,
        exhaustive: true,
        round_trip: true,
        groups_consistent: true,
        twice_count: targets.len() == 2 * sources.len(),
        failures: Vec::new(),
        correspondences: Vec::new(),
    };
    let fail = |report: &mut BijectionReport, msg: String| {
        if report.failures.len() < MAX_FAILURES {
            report.failures.push(msg);
        }
    };

    let mut seen: BTreeMap<RectPair, usize> = BTreeMap::new();
    for source in &sources {
        let images = match phi_map_detailed(source) {
            Ok(images) => images,
            Err(e) => {
                report.phi_total = false;
                fail(
                    &mut report,
                    format!("phi({}, {}): {e}", source.upper, source.lower),
                );
                continue;
            }
        };
        let mut tagged = Vec::with_capacity(2);
        for image in [&images.first, &images.second] {
            *seen.entry(image.clone()).or_default() += 1;
            match psi_map(image) {
                Ok((back, tag)) => {
                    if back != *source {
                        report.round_trip = false;
                        fail(
                            &mut report,
                            format!(
                                "psi(phi({}, {})) = ({}, {})",
                                source.upper, source.lower, back.upper, back.lower
                            ),
                        );
                    }
                    tagged.push((image.clone(), tag));
                }
                Err(e) => {
                    report.round_trip = false;
                    fail(
                        &mut report,
                        format!("psi({}, {}): {e}", image.upper, image.lower),
                    );
                }
            }
        }
        if let [(a, ta), (b, tb)] = tagged.as_slice() {
            let consistent = match ta {
                GroupTag::III { north_first } => {
                    matches!(tb, GroupTag::III { north_first: other } if other != north_first)
                        && a.meeting_point() == b.meeting_point()
                }
                rule => {
                    let ra = reduce_double_edge(a, *rule);
                    ra.is_some() && ra == reduce_double_edge(b, *rule)
                }
            };
            if !consistent {
                report.groups_consistent = false;
                fail(
                    &mut report,
                    format!(
                        "images of ({}, {}) tagged {ta:?}/{tb:?} are not group partners",
                        source.upper, source.lower
                    ),
                );
            }
            report.correspondences.push(Correspondence {
                source: source.clone(),
                case: images.case,
                images: [tagged[0].clone(), tagged[1].clone()],
            });
        }
    }

    for (image, count) in &seen {
        if *count > 1 {
            report.images_distinct = false;
            fail(
                &mut report,
                format!("({}, {}) is hit {count} times", image.upper, image.lower),
            );
        }
        if !targets.contains(image) {
            report.exhaustive = false;
            fail(
                &mut report,
                format!(
                    "({}, {}) is not a one-intersection pair",
                    image.upper, image.lower
                ),
            );
        }
    }
    for target in &targets {
        if !seen.contains_key(target) {
            report.exhaustive = false;
            fail(
                &mut report,
                format!("({}, {}) is never hit", target.upper, target.lower),
            );
        }
    }
    if seen.values().sum::<usize>() != 2 * sources.len() {
        report.images_distinct = false;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> PathNE {
        s.parse().unwrap()
    }

    #[test]
    fn distance_examples() {
        // Column 1 of NNE is {2}; of ENN is {0, 1, 2}. Column 0 overlaps at 0.
        assert_eq!(dist_at_x(&path("NNE"), &path("ENN"), 1).unwrap(), 0);
        assert_eq!(dist_at_x(&path("NNE"), &path("ENN"), 0).unwrap(), 0);
        // Column 1 vertices {3, 4} against {1}.
        assert_eq!(dist_at_x(&path("NNNENE"), &path("ENNNNE"), 1).unwrap(), 0);
        assert_eq!(dist_at_x(&path("NNNENEE"), &path("ENEENNN"), 1).unwrap(), 2);
        for p in ["NNE", "ENN", "NEN"] {
            assert_eq!(dist_at_x(&path(p), &path(p), 1).unwrap(), 0);
        }
        assert!(dist_at_x(&path("NNE"), &path("ENN"), 2).is_err());
        assert!(dist_at_x(&path("NNE"), &path("ENN"), -1).is_err());
    }

    #[test]
    fn canonical_orientation() {
        let p = RectPair::from_strs("EN", "NE").unwrap();
        assert_eq!(p.upper, path("NE"));
        assert_eq!(p.kind, PairKind::NonIntersecting);
        let q = RectPair::from_strs("ENN", "NEN").unwrap();
        assert_eq!(q.kind, PairKind::OneIntersection(Point::new(1, 1)));
        assert!(RectPair::from_strs("EN", "EN").is_ok());
        assert!(RectPair::from_strs("ENN", "ENN").is_err());
    }

    #[test]
    fn phi_on_unit_square() {
        let src = RectPair::from_strs("NE", "EN").unwrap();
        let images = phi_map_detailed(&src).unwrap();
        assert_eq!(images.case, PhiCase::A);
        assert_eq!(images.first, RectPair::from_strs("EN", "EN").unwrap());
        assert_eq!(
            images.first.kind,
            PairKind::OneIntersection(Point::new(1, 0))
        );
        assert_eq!(images.second, RectPair::from_strs("NE", "NE").unwrap());
        assert_eq!(
            images.second.kind,
            PairKind::OneIntersection(Point::new(0, 1))
        );
    }

    #[test]
    fn phi_on_one_by_two() {
        let src = RectPair::from_strs("NNE", "ENN").unwrap();
        let (a, b) = phi_map(&src).unwrap();
        assert_eq!(a, RectPair::from_strs("NEN", "ENN").unwrap());
        assert_eq!(a.kind, PairKind::OneIntersection(Point::new(1, 1)));
        assert_eq!(b, RectPair::from_strs("NNE", "NEN").unwrap());
        assert_eq!(b.kind, PairKind::OneIntersection(Point::new(0, 1)));
    }

    #[test]
    fn psi_inverts_examples() {
        let (src, tag) = psi_map(&RectPair::from_strs("EN", "EN").unwrap()).unwrap();
        assert_eq!(src, RectPair::from_strs("NE", "EN").unwrap());
        assert_eq!(tag, GroupTag::I);
        let (src, tag) = psi_map(&RectPair::from_strs("NEN", "ENN").unwrap()).unwrap();
        assert_eq!(src, RectPair::from_strs("NNE", "ENN").unwrap());
        assert_eq!(tag, GroupTag::II);
    }

    #[test]
    fn phi_case_b_and_c_examples() {
        // Distance 1 at column 1 with meeting (1, 1): case B.
        let src = RectPair::from_strs("NNENE", "ENENN").unwrap();
        let images = phi_map_detailed(&src).unwrap();
        assert_eq!(images.case, PhiCase::B);
        assert_eq!(
            images.first.kind,
            PairKind::OneIntersection(Point::new(1, 1))
        );
        assert_eq!(
            images.second.kind,
            PairKind::OneIntersection(Point::new(1, 1))
        );
        // Upper passes (1, 1) and lower (1, 0): case C.
        let src = RectPair::from_strs("NENE", "EENN").unwrap();
        let images = phi_map_detailed(&src).unwrap();
        assert_eq!(images.case, PhiCase::C);
        assert_eq!(
            images.first.kind,
            PairKind::OneIntersection(Point::new(1, 0))
        );
        assert_eq!(
            images.second.kind,
            PairKind::OneIntersection(Point::new(1, 2))
        );
        for image in [&images.first, &images.second] {
            assert_eq!(psi_map(image).unwrap().0, src);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let one = RectPair::from_strs("EN", "EN").unwrap();
        assert!(matches!(phi_map(&one), Err(Error::Bijection { .. })));
        let none = RectPair::from_strs("NE", "EN").unwrap();
        assert!(matches!(psi_map(&none), Err(Error::Bijection { .. })));
        let flat = RectPair::from_strs("EE", "EE").unwrap();
        assert!(phi_map(&flat).is_err());
        assert!(verify_bijection(0, 3).is_err());
    }

    #[test]
    fn small_rectangles_verify() {
        let r = verify_bijection(1, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!((r.nonintersecting, r.one_intersection), (1, 2));
        let r = verify_bijection(2, 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!((r.nonintersecting, r.one_intersection), (3, 6));
        let r = verify_bijection(1, 1).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!((r.nonintersecting, r.one_intersection), (1, 2));
    }

    #[test]
    fn all_rectangles_up_to_seven_verify() {
        for r in 1..7 {
            for s in 1..=7 - r {
                let report = verify_bijection(r, s).unwrap();
                assert!(report.passed(), "{r}x{s}: {:?}", report.failures);
            }
        }
    }
}
