//! Truncated power series with exact rational coefficients.
//!
//! [`UniSeries`] is truncated at degree `D`; [`BiSeries`] keeps every
//! coefficient of total degree at most `D`. Both implement [`SeriesRing`],
//! over which inversion and square roots are computed by Newton iteration.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binom_u, count_to_rat, rat_int, rat_pow, rat_to_count, BigCount, Rat};
use crate::error::{out_of_range, Error, Result};

/// Ring operations on a truncated series; coefficients past the truncation
/// degree are never formed.
pub trait SeriesRing: Clone + PartialEq + fmt::Debug {
    fn truncation(&self) -> usize;
    fn constant(c: Rat, degree: usize) -> Self;
    fn constant_term(&self) -> &Rat;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rat) -> Self;

    fn one_like(&self) -> Self {
        Self::constant(Rat::one(), self.truncation())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Newton steps needed so that precision `2^steps` exceeds `degree`.
fn newton_steps(degree: usize) -> usize {
    let mut steps = 0;
    while (1usize << steps) <= degree {
        steps += 1;
    }
    steps
}

/// Multiplicative inverse by Newton iteration `g <- g (2 - s g)`.
pub fn series_inverse<S: SeriesRing>(s: &S) -> Result<S> {
    let c0 = s.constant_term();
    if c0.is_zero() {
        return Err(Error::Series(
            "inverse needs a nonzero constant term".into(),
        ));
    }
    let two = s.one_like().scale(&rat_int(2));
    let mut g = S::constant(c0.recip(), s.truncation());
    for _ in 0..newton_steps(s.truncation()) {
        g = g.mul(&two.sub(&s.mul(&g)));
    }
    Ok(g)
}

/// Square root with constant term 1, by Newton iteration `t <- (t + s/t) / 2`.
pub fn series_sqrt<S: SeriesRing>(s: &S) -> Result<S> {
    if !s.constant_term().is_one() {
        return Err(Error::Series(format!(
            "square root needs constant term 1, got {}",
            s.constant_term()
        )));
    }
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let mut t = s.one_like();
    for _ in 0..newton_steps(s.truncation()) {
        t = t.add(&s.mul(&series_inverse(&t)?)).scale(&half);
    }
    Ok(t)
}

/// Univariate series `sum_{d <= D} c_d x^d`.
#[derive(Clone, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<Rat>,
}

impl UniSeries {
    pub fn zero(degree: usize) -> Self {
        UniSeries {
            coeffs: vec![Rat::zero(); degree + 1],
        }
    }

    /// From leading coefficients; missing ones are zero, extra ones dropped.
    pub fn from_coeffs(coeffs: &[Rat], degree: usize) -> Self {
        let mut s = UniSeries::zero(degree);
        for (d, c) in coeffs.iter().enumerate().take(degree + 1) {
            s.coeffs[d] = c.clone();
        }
        s
    }

    pub fn from_ints(coeffs: &[i64], degree: usize) -> Self {
        let coeffs: Vec<Rat> = coeffs.iter().map(|&c| rat_int(c)).collect();
        UniSeries::from_coeffs(&coeffs, degree)
    }

    /// Coefficient of `x^d`; zero beyond the truncation.
    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn derivative(&self) -> Self {
        let degree = self.truncation();
        let coeffs: Vec<Rat> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, c)| c * rat_int(d as i64))
            .collect();
        UniSeries::from_coeffs(&coeffs, degree)
    }
}

impl fmt::Debug for UniSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| format!("{c}*x^{d}"))
            .collect();
        write!(f, "UniSeries[{}]({})", self.truncation(), terms.join(" + "))
    }
}

impl SeriesRing for UniSeries {
    fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn constant(c: Rat, degree: usize) -> Self {
        let mut s = UniSeries::zero(degree);
        s.coeffs[0] = c;
        s
    }

    fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.truncation(), other.truncation());
        UniSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.truncation(), other.truncation());
        UniSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.truncation(), other.truncation());
        let degree = self.truncation();
        let mut out = UniSeries::zero(degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(degree + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    fn scale(&self, c: &Rat) -> Self {
        UniSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// Bivariate series `sum_{i + j <= D} c_{ij} x^i y^j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    degree: usize,
    coeffs: Vec<Rat>,
}

fn tri_index(i: usize, j: usize) -> usize {
    let t = i + j;
    t * (t + 1) / 2 + j
}

impl BiSeries {
    pub fn zero(degree: usize) -> Self {
        BiSeries {
            degree,
            coeffs: vec![Rat::zero(); tri_index(0, degree) + 1],
        }
    }

    /// Polynomial from `(i, j, c)` terms; terms above the truncation are dropped.
    pub fn from_terms(terms: &[(usize, usize, Rat)], degree: usize) -> Self {
        let mut s = BiSeries::zero(degree);
        for (i, j, c) in terms {
            if i + j <= degree {
                s.coeffs[tri_index(*i, *j)] += c;
            }
        }
        s
    }

    pub fn x(degree: usize) -> Self {
        BiSeries::from_terms(&[(1, 0, Rat::one())], degree)
    }

    pub fn y(degree: usize) -> Self {
        BiSeries::from_terms(&[(0, 1, Rat::one())], degree)
    }

    /// Coefficient of `x^i y^j`; zero beyond the truncation.
    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        if i + j > self.degree {
            return Rat::zero();
        }
        self.coeffs[tri_index(i, j)].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero terms in order of total degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        (0..=self.degree)
            .flat_map(|t| (0..=t).map(move |j| (t - j, j)))
            .map(|(i, j)| (i, j, &self.coeffs[tri_index(i, j)]))
            .filter(|(_, _, c)| !c.is_zero())
    }
}

impl fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms()
            .map(|(i, j, c)| format!("{c}*x^{i}y^{j}"))
            .collect();
        write!(f, "BiSeries[{}]({})", self.degree, terms.join(" + "))
    }
}

impl SeriesRing for BiSeries {
    fn truncation(&self) -> usize {
        self.degree
    }

    fn constant(c: Rat, degree: usize) -> Self {
        let mut s = BiSeries::zero(degree);
        s.coeffs[0] = c;
        s
    }

    fn constant_term(&self) -> &Rat {
        &self.coeffs[0]
    }

    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        BiSeries {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        BiSeries {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree, other.degree);
        let d = self.degree;
        let mut out = BiSeries::zero(d);
        let rhs: Vec<(usize, usize, &Rat)> = other.terms().collect();
        for (i, j, a) in self.terms() {
            for &(k, l, b) in &rhs {
                if i + j + k + l > d {
                    break;
                }
                out.coeffs[tri_index(i + k, j + l)] += a * b;
            }
        }
        out
    }

    fn scale(&self, c: &Rat) -> Self {
        BiSeries {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// `1 - 2x(y+1) + x^2 (y-1)^2`, the radicand shared by `u_0` and the
/// Legendre generating function.
fn legendre_radicand(degree: usize) -> BiSeries {
    let terms = [
        (0, 0, rat_int(1)),
        (1, 0, rat_int(-2)),
        (1, 1, rat_int(-2)),
        (2, 0, rat_int(1)),
        (2, 1, rat_int(-2)),
        (2, 2, rat_int(1)),
    ];
    BiSeries::from_terms(&terms, degree)
}

/// `u_0(x, y) = 1 - sqrt(1 - 2x(y+1) + x^2 (y-1)^2)`.
pub fn u0_series(degree: usize) -> Result<BiSeries> {
    let root = series_sqrt(&legendre_radicand(degree))?;
    Ok(BiSeries::constant(Rat::one(), degree).sub(&root))
}

/// `u_k = u_0^{k+1}`; the coefficient of `x^n y^r` is `N_k^{n,r}`.
pub fn uk_series(k: u32, degree: usize) -> Result<BiSeries> {
    Ok(u0_series(degree)?.pow(k + 1))
}

/// Extracts `[x^n y^r]` of a series as a count.
pub fn count_coeff(s: &BiSeries, i: usize, j: usize) -> Result<BigCount> {
    rat_to_count(&s.coeff(i, j), "series", || format!("[x^{i} y^{j}]"))
}

/// First coefficient at which a generating-function identity failed.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CoefficientMismatch {
    pub i: usize,
    pub j: usize,
    pub got: String,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LegendreReport {
    pub degree: usize,
    pub coefficients_checked: usize,
    pub first_failure: Option<CoefficientMismatch>,
}

impl LegendreReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks `1 / sqrt(1 - 2x(y+1) + x^2 (y-1)^2) = sum C(n,r)^2 x^n y^r`
/// coefficient by coefficient up to total degree `degree`.
pub fn legendre_identity_check(degree: usize) -> Result<LegendreReport> {
    let lhs = series_inverse(&series_sqrt(&legendre_radicand(degree))?)?;
    let mut checked = 0;
    for t in 0..=degree {
        for r in 0..=t {
            let n = t - r;
            let c = binom_u(n as u64, r as u64);
            let expected = count_to_rat(&(&c * &c));
            checked += 1;
            let got = lhs.coeff(n, r);
            if got != expected {
                return Ok(LegendreReport {
                    degree,
                    coefficients_checked: checked,
                    first_failure: Some(CoefficientMismatch {
                        i: n,
                        j: r,
                        got: got.to_string(),
                        expected: expected.to_string(),
                    }),
                });
            }
        }
    }
    Ok(LegendreReport {
        degree,
        coefficients_checked: checked,
        first_failure: None,
    })
}

/// `f(y, z) = ((1 - y - z) - sqrt((1 - y - z)^2 - 4yz)) / 2`, with `y`
/// in the first slot of the [`BiSeries`] and `z` in the second.
pub fn f_series(degree: usize) -> Result<BiSeries> {
    let one = BiSeries::constant(Rat::one(), degree);
    let y = BiSeries::x(degree);
    let z = BiSeries::y(degree);
    let lin = one.sub(&y).sub(&z);
    let radicand = lin.mul(&lin).sub(&y.mul(&z).scale(&rat_int(4)));
    let root = series_sqrt(&radicand)?;
    Ok(lin
        .sub(&root)
        .scale(&Rat::new(BigInt::one(), BigInt::from(2))))
}

/// `f - (y + f)(z + f)`, which vanishes up to the truncation.
pub fn f_residual(degree: usize) -> Result<BiSeries> {
    let f = f_series(degree)?;
    let y = BiSeries::x(degree);
    let z = BiSeries::y(degree);
    Ok(f.sub(&y.add(&f).mul(&z.add(&f))))
}

/// `(y + z + 2f)^{k+1}`; the coefficient of `y^r z^{n-r}` is `N_k^{n,r}`.
pub fn proposition_series(k: u32, degree: usize) -> Result<BiSeries> {
    let f = f_series(degree)?;
    let base = BiSeries::x(degree)
        .add(&BiSeries::y(degree))
        .add(&f.scale(&rat_int(2)));
    Ok(base.pow(k + 1))
}

fn sqrt_one_minus_4x(degree: usize) -> Result<UniSeries> {
    series_sqrt(&UniSeries::from_ints(&[1, -4], degree))
}

/// `F_k(x) = (1 - sqrt(1-4x))^k / sqrt(1-4x)`; `[x^n]` is `f(n, k)`.
pub fn fk_series(k: u32, degree: usize) -> Result<UniSeries> {
    let root = sqrt_one_minus_4x(degree)?;
    let one = root.one_like();
    Ok(one.sub(&root).pow(k).mul(&series_inverse(&root)?))
}

/// `Phi_k(x) = (1 - sqrt(1-4x))^{k+1}`; `[x^n]` counts same-endpoint pairs
/// with `k` interior intersections.
pub fn phi_series(k: u32, degree: usize) -> Result<UniSeries> {
    let root = sqrt_one_minus_4x(degree)?;
    Ok(root.one_like().sub(&root).pow(k + 1))
}

/// `[x^n] phi(f)` for `f = x g(f)`, as `(1/n) [t^{n-1}] phi'(t) g(t)^n`.
/// Both arguments are polynomial coefficient lists in `t`.
pub fn lagrange_extract(phi: &[Rat], g: &[Rat], n: usize) -> Result<Rat> {
    if n == 0 {
        return Err(out_of_range("n", "coefficient extraction needs n >= 1"));
    }
    if g.first().is_none_or(Zero::is_zero) {
        return Err(Error::Series("g(0) must be nonzero".into()));
    }
    let d = n - 1;
    let dphi = UniSeries::from_coeffs(phi, d + 1).derivative();
    let dphi = UniSeries::from_coeffs(dphi.coeffs(), d);
    let gn = UniSeries::from_coeffs(g, d).pow(n as u32);
    Ok(dphi.mul(&gn).coeff(d) / rat_int(n as i64))
}

/// Coefficients (lowest degree first) of the unique polynomial of degree
/// `< xs.len()` through the given points, by divided differences.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Vec<Rat> {
    assert_eq!(xs.len(), ys.len());
    let m = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Expand the Newton form with Horner's scheme.
    let mut coeffs = vec![Rat::zero(); m];
    for i in (0..m).rev() {
        let mut next = vec![Rat::zero(); m];
        for (d, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < m {
                next[d + 1] += c;
            }
            next[d] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// `N_k^{n,r}` for all `r` through Lagrange inversion of
/// `f = x (y + f)(z + f)` with `phi(t) = (y + z + 2t)^{k+1}`.
///
/// `y` is specialized to `1, 2, ..., n+1` with `z = 1`, and the counts are
/// recovered by interpolating the resulting degree-`n` polynomial in `y`.
pub fn nkr_via_lagrange(n: u64, k: u64) -> Result<Vec<BigCount>> {
    if n < 2 || k > n - 2 {
        return Err(out_of_range(
            "k",
            format!("Lagrange route covers 0 <= k <= n-2, got k={k}, n={n}"),
        ));
    }
    let m = (n - k - 1) as usize;
    let ys: Vec<Rat> = (1..=n as i64 + 1).map(rat_int).collect();
    let mut values = Vec::with_capacity(ys.len());
    for y in &ys {
        let z = Rat::one();
        let lin = y + &z;
        let phi: Vec<Rat> = (0..=k)
            .map(|i| {
                count_to_rat(&binom_u(k + 1, i))
                    * rat_pow(&rat_int(2), i)
                    * rat_pow(&lin, k + 1 - i)
            })
            .chain(std::iter::once(rat_pow(&rat_int(2), k + 1)))
            .collect();
        let g = vec![y * &z, lin.clone(), Rat::one()];
        values.push(lagrange_extract(&phi, &g, m)?);
    }
    interpolate(&ys, &values)
        .iter()
        .enumerate()
        .map(|(r, c)| rat_to_count(c, "lagrange", || format!("n={n}, r={r}, k={k}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    /// `C(1/2, m)` from its product definition.
    fn half_binomial(m: u32) -> Rat {
        let mut acc = Rat::one();
        for i in 0..m {
            acc = acc * (rat(1, 2) - rat_int(i as i64)) / rat_int(i as i64 + 1);
        }
        acc
    }

    #[test]
    fn sqrt_of_one_is_one() {
        let one = UniSeries::constant(Rat::one(), 6);
        assert_eq!(series_sqrt(&one).unwrap(), one);
        let one = BiSeries::constant(Rat::one(), 6);
        assert_eq!(series_sqrt(&one).unwrap(), one);
    }

    #[test]
    fn sqrt_one_minus_4x_matches_binomial_series() {
        let s = sqrt_one_minus_4x(3).unwrap();
        assert_eq!(s, UniSeries::from_ints(&[1, -2, -2, -4], 3));
        let s = sqrt_one_minus_4x(15).unwrap();
        for m in 0..=15u32 {
            let expected = half_binomial(m) * rat_pow(&rat_int(-4), m as u64);
            assert_eq!(s.coeff(m as usize), expected);
        }
    }

    #[test]
    fn sqrt_rejects_bad_constant_term() {
        let s = UniSeries::from_ints(&[4, 1], 3);
        assert!(series_sqrt(&s).is_err());
        let z = UniSeries::zero(3);
        assert!(series_inverse(&z).is_err());
    }

    #[test]
    fn inverse_of_one_minus_x_is_geometric() {
        let s = UniSeries::from_ints(&[1, -1], 10);
        let inv = series_inverse(&s).unwrap();
        assert_eq!(inv, UniSeries::from_ints(&[1; 11], 10));
        let b = BiSeries::from_terms(
            &[(0, 0, rat(2, 1)), (1, 0, rat(-1, 1)), (0, 1, rat(-1, 1))],
            7,
        );
        let inv = series_inverse(&b).unwrap();
        assert_eq!(inv.mul(&b), BiSeries::constant(Rat::one(), 7));
    }

    #[test]
    fn u0_low_coefficients() {
        let u0 = u0_series(8).unwrap();
        assert_eq!(u0.coeff(2, 1), rat(2, 1));
        assert_eq!(u0.coeff(3, 1), rat(2, 1));
        assert_eq!(u0.coeff(1, 0), rat(1, 1));
        for n in 2..=8 {
            assert_eq!(u0.coeff(n, 0), Rat::zero());
        }
    }

    #[test]
    fn u1_low_coefficients() {
        let u1 = uk_series(1, 6).unwrap();
        assert_eq!(u1.coeff(3, 1), rat(4, 1));
        assert_eq!(u1.coeff(3, 2), rat(4, 1));
    }

    #[test]
    fn legendre_small() {
        let report = legendre_identity_check(8).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.coefficients_checked, 45);
    }

    #[test]
    fn f_series_low_terms() {
        let f = f_series(8).unwrap();
        assert_eq!(f.coeff(1, 1), rat(1, 1));
        assert_eq!(f.coeff(0, 0), Rat::zero());
        assert!(f_residual(8).unwrap().is_zero());
    }

    #[test]
    fn fk_low_terms() {
        let f0 = fk_series(0, 10).unwrap();
        for n in 0..=10u64 {
            assert_eq!(f0.coeff(n as usize), count_to_rat(&binom_u(2 * n, n)));
        }
        assert_eq!(fk_series(1, 4).unwrap().coeff(1), rat(2, 1));
        assert_eq!(fk_series(2, 4).unwrap().coeff(2), rat(4, 1));
    }

    #[test]
    fn lagrange_examples() {
        let t = [rat(0, 1), rat(1, 1)];
        let one_plus_t = [rat(1, 1), rat(1, 1)];
        assert_eq!(lagrange_extract(&t, &one_plus_t, 3).unwrap(), rat(1, 1));
        let sq = [rat(1, 1), rat(2, 1), rat(1, 1)];
        assert_eq!(lagrange_extract(&t, &sq, 2).unwrap(), rat(2, 1));
        let constant = [rat(1, 1)];
        for n in 1..5 {
            assert_eq!(lagrange_extract(&constant, &sq, n).unwrap(), Rat::zero());
        }
        assert!(lagrange_extract(&t, &[rat(0, 1), rat(1, 1)], 2).is_err());
        assert!(lagrange_extract(&t, &sq, 0).is_err());
    }

    #[test]
    fn catalan_numbers_by_lagrange() {
        // f = x (1 + f)^2 counts binary trees: [x^n] f = C(2n, n) / (n + 1).
        let t = [rat(0, 1), rat(1, 1)];
        let sq = [rat(1, 1), rat(2, 1), rat(1, 1)];
        for n in 1..10u64 {
            let expected = count_to_rat(&binom_u(2 * n, n)) / rat_int(n as i64 + 1);
            assert_eq!(lagrange_extract(&t, &sq, n as usize).unwrap(), expected);
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let coeffs = [rat(3, 1), rat(-1, 2), rat(0, 1), rat(5, 1)];
        let xs: Vec<Rat> = (0..4).map(|v| rat_int(v * 2 + 1)).collect();
        let ys: Vec<Rat> = xs
            .iter()
            .map(|x| coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c))
            .collect();
        assert_eq!(interpolate(&xs, &ys), coeffs.to_vec());
    }

    #[test]
    fn lagrange_route_small() {
        let v = nkr_via_lagrange(3, 0).unwrap();
        let v: Vec<u64> = v.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(v, vec![0, 2, 2, 0]);
        assert!(nkr_via_lagrange(3, 2).is_err());
    }
}
