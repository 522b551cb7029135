use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use pathpairs::arith::{binom_u, parse_rat, pow2, rat, Rat};
use pathpairs::bijection::{phi_map, psi_map, PairKind, RectPair};
use pathpairs::formulas::{nkr_formula_a, nkr_formula_b};
use pathpairs::lattice::{PathNE, PathPair, Point, Step};
use pathpairs::oracle::{
    barrier_dp, barrier_single_walker, enum_fnk, enum_nkr, enum_phi, BarrierConfig, ProbModel,
};
use pathpairs::series::{series_inverse, series_sqrt, BiSeries, SeriesRing, UniSeries};

fn steps(len: usize) -> impl Strategy<Value = Vec<Step>> {
    prop::collection::vec(prop_oneof![Just(Step::E), Just(Step::N)], len)
}

/// Two walks of equal length from a common (possibly shifted) start.
fn walk_pair() -> impl Strategy<Value = PathPair> {
    (0usize..14, -3i64..4, -3i64..4).prop_flat_map(|(len, x, y)| {
        (steps(len), steps(len)).prop_map(move |(a, b)| {
            let start = Point::new(x, y);
            PathPair::ordered(PathNE::new(start, a), PathNE::new(start, b)).unwrap()
        })
    })
}

/// A corner-to-corner path on an `r x s` rectangle.
fn rect_path(r: usize, s: usize) -> impl Strategy<Value = PathNE> {
    prop::sample::subsequence((0..r + s).collect::<Vec<_>>(), r)
        .prop_map(move |pos| PathNE::from_e_positions(r + s, &pos))
}

fn rect_pair() -> impl Strategy<Value = (PathNE, PathNE)> {
    (1usize..9, 1usize..9).prop_flat_map(|(r, s)| (rect_path(r, s), rect_path(r, s)))
}

/// Steps of the path whose E count after each step is the pointwise
/// minimum (or maximum) of the two inputs.
fn envelope(a: &[Step], b: &[Step], upper: bool) -> Vec<Step> {
    let (mut ea, mut eb, mut prev) = (0, 0, 0);
    let mut out = Vec::with_capacity(a.len());
    for (sa, sb) in a.iter().zip(b) {
        ea += usize::from(*sa == Step::E);
        eb += usize::from(*sb == Step::E);
        let e = if upper { ea.min(eb) } else { ea.max(eb) };
        out.push(if e > prev { Step::E } else { Step::N });
        prev = e;
    }
    out
}

/// `N + A + E` over `E + B + N` with `A` weakly north of `B` never meet
/// away from the corners; every nonintersecting pair has this shape.
fn nonintersecting_pair() -> impl Strategy<Value = (PathNE, PathNE)> {
    (1usize..10, 1usize..10).prop_flat_map(|(r, s)| {
        (rect_path(r - 1, s - 1), rect_path(r - 1, s - 1)).prop_map(|(x, y)| {
            let a = envelope(x.steps(), y.steps(), true);
            let b = envelope(x.steps(), y.steps(), false);
            let upper = [&[Step::N][..], &a, &[Step::E]].concat();
            let lower = [&[Step::E][..], &b, &[Step::N]].concat();
            (PathNE::from_origin(upper), PathNE::from_origin(lower))
        })
    })
}

proptest! {
    #[test]
    fn counting_is_symmetric(pair in walk_pair()) {
        let swapped = pair.swapped();
        prop_assert_eq!(
            pair.intersections_excluding_start().unwrap(),
            swapped.intersections_excluding_start().unwrap()
        );
        prop_assert_eq!(
            pair.intersections_interior().ok(),
            swapped.intersections_interior().ok()
        );
        prop_assert_eq!(
            pair.intersections_excluding_origin().ok(),
            swapped.intersections_excluding_origin().ok()
        );
    }

    #[test]
    fn shared_vertices_match_set_intersection(pair in walk_pair()) {
        let a = pair.first.vertex_set();
        let b = pair.second.vertex_set();
        prop_assert_eq!(a.intersection(&b).count(), pair.shared_vertices());
    }

    #[test]
    fn interior_is_excluding_start_minus_one((a, b) in rect_pair()) {
        let pair = PathPair::ordered(a, b).unwrap();
        prop_assert_eq!(
            pair.intersections_interior().unwrap() + 1,
            pair.intersections_excluding_start().unwrap()
        );
    }

    #[test]
    fn bijection_round_trips_on_random_pairs((a, b) in nonintersecting_pair()) {
        let pair = RectPair::new(a, b).unwrap();
        prop_assert_eq!(pair.kind, PairKind::NonIntersecting);
        let (x, y) = phi_map(&pair).unwrap();
        prop_assert_ne!(&x, &y);
        for image in [x, y] {
            prop_assert!(matches!(image.kind, PairKind::OneIntersection(_)));
            prop_assert_eq!(psi_map(&image).unwrap().0, pair.clone());
        }
    }

    #[test]
    fn formulas_agree_and_reflect(n in 2u64..60, r_frac in 0.0f64..=1.0, k_frac in 0.0f64..=1.0) {
        let r = (r_frac * n as f64) as u64;
        let k = (k_frac * (n - 2) as f64) as u64;
        let a = nkr_formula_a(n, r, k).unwrap();
        prop_assert_eq!(&a, &nkr_formula_b(n, r, k).unwrap());
        prop_assert_eq!(&a, &nkr_formula_a(n, n - r, k).unwrap());
        if n >= 3 && 1 <= r && r < n {
            prop_assert_eq!(nkr_formula_a(n, r, 1).unwrap(), nkr_formula_a(n, r, 0).unwrap() * 2u32);
        }
    }

    #[test]
    fn sqrt_and_inverse_of_random_series(
        tail in prop::collection::vec(-5i64..6, 0..8),
        degree in 0usize..10,
    ) {
        let mut coeffs = vec![1i64];
        coeffs.extend(tail);
        let s = UniSeries::from_ints(&coeffs, degree);
        let root = series_sqrt(&s).unwrap();
        prop_assert_eq!(root.mul(&root), s.clone());
        prop_assert_eq!(series_inverse(&s).unwrap().mul(&s), s.one_like());
    }

    #[test]
    fn bivariate_sqrt_squares_back(
        terms in prop::collection::vec((0usize..4, 0usize..4, -4i64..5), 0..6),
        degree in 0usize..7,
    ) {
        let mut all = vec![(0, 0, Rat::one())];
        all.extend(terms.into_iter().filter(|(i, j, _)| i + j > 0).map(|(i, j, c)| (i, j, rat(c, 1))));
        let s = BiSeries::from_terms(&all, degree);
        let root = series_sqrt(&s).unwrap();
        prop_assert_eq!(root.mul(&root), s);
    }

    #[test]
    fn rationals_round_trip(num in -1000i64..1000, den in 1i64..1000) {
        let v = rat(num, den);
        prop_assert_eq!(parse_rat(&v.to_string()).unwrap(), v);
    }

    #[test]
    fn level_models_match_single_walker(
        levels in prop::collection::vec((0i64..=8, 1i64..=8), 1..6),
        a in 0u32..4,
        b in 0u32..4,
        x in 0u32..4,
    ) {
        let model = ProbModel::ByLevel(
            levels.into_iter().map(|(n, d)| rat(n.min(d), d)).collect(),
        );
        let config = BarrierConfig::new(a, b, x, model).unwrap();
        prop_assert_eq!(barrier_dp(&config).unwrap(), barrier_single_walker(&config).unwrap());
    }
}

#[test]
fn oracle_reflection_and_totals() {
    for n in 0..=8usize {
        for r in 0..=n {
            assert_eq!(enum_nkr(n, r).unwrap(), enum_nkr(n, n - r).unwrap());
        }
        assert_eq!(enum_fnk(n).unwrap().total(), &pow2(2 * n as u64));
        if n >= 1 {
            assert_eq!(
                enum_phi(n).unwrap().total(),
                &binom_u(2 * n as u64, n as u64)
            );
        }
    }
    assert_eq!(enum_fnk(0).unwrap().get(0), BigUint::one());
}
