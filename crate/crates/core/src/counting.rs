//! Exact counting formulas: binomials, totients, Fuss–Catalan numbers, and
//! the closed-form count of coloured-quiver mutation classes of type A.
//!
//! Everything is computed in arbitrary precision. Several of the formulas are
//! rational expressions that happen to take integer values; those divisions
//! are *asserted* exact — a non-zero remainder is an implementation bug, not
//! a recoverable condition, so these functions panic rather than return an
//! error.

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

/// Arbitrary-precision non-negative count.
pub type Count = BigUint;

/// Arbitrary-precision rational, used for intermediate sums that must come
/// out integral.
pub type ExactRational = BigRational;

/// Binomial coefficient C(a, b). Returns 0 when `b` is negative or exceeds
/// `a`, which lets callers write shifted formulas without special-casing.
pub fn binomial(a: u64, b: i64) -> Count {
    if b < 0 || b as u64 > a {
        return Count::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut result = Count::one();
    for i in 0..b {
        result *= a - i;
        result /= i + 1; // exact at every step: result is C(a, i+1)
    }
    result
}

/// Euler's totient, by trial-division factorisation.
pub fn euler_phi(d: u64) -> u64 {
    assert!(d >= 1, "euler_phi is defined for positive arguments");
    let mut n = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// Catalan number C(i) = binom(2i, i) / (i + 1).
pub fn catalan(i: u64) -> Count {
    exact_div(binomial(2 * i, i as i64), i + 1)
}

/// Number of indecomposable objects attached to the rank-n, modulus-m setting:
/// (m·n·(n+1) + 2n) / 2. Equals the number of m-diagonals of the polygon with
/// n+1 cells.
pub fn num_indecomposables(n: u64, m: u64) -> Count {
    assert!(n >= 1 && m >= 1);
    let numerator = Count::from(m) * n * (n + 1) + Count::from(2u32) * n;
    exact_div(numerator, 2)
}

/// Number of tilting objects (equivalently, of (m+2)-angulations of the
/// polygon with n+1 cells): the Fuss–Catalan number
/// binom((n+1)(m+1), n) / (n+1).
pub fn fuss_catalan_tilting(n: u64, m: u64) -> Count {
    assert!(n >= 1 && m >= 1);
    exact_div(binomial((n + 1) * (m + 1), n as i64), n + 1)
}

/// Coefficient of x^i in U_s(x)^t, where U_s is the generating function for
/// clusters rooted at an edge: (t/i)·binom(i(s−1), i−t) for i ≥ t, else 0.
pub fn u_power_coeff(s: u64, t: u64, i: u64) -> Count {
    assert!(s >= 3 && t >= 1 && i >= 1);
    if i < t {
        return Count::zero();
    }
    exact_div(Count::from(t) * binomial(i * (s - 1), (i - t) as i64), i)
}

/// Coefficient of x^k in F_s(x), the generating function for clusters of
/// s-gons rooted at a cell (cyclic symmetry of the root cell quotiented out):
///
///   k = 1: 1
///   k ≥ 2: Σ_{d | gcd(s, k−1)} Σ_{t=1}^{min(s/d, (k−1)/d)}
///            φ(d)·d·t/(s(k−1)) · binom(s/d, t) · binom((s−1)(k−1)/d, (k−1)/d − t)
pub fn f_coeff(s: u64, k: u64) -> Count {
    assert!(s >= 3 && k >= 1);
    if k == 1 {
        return Count::one();
    }
    let km1 = k - 1;
    let mut total = ExactRational::zero();
    for d in divisors(gcd(s, km1)) {
        for t in 1..=(s / d).min(km1 / d) {
            let num = Count::from(euler_phi(d)) * d * t;
            let term = ratio(num, s * km1)
                * ratio(binomial(s / d, t as i64), 1)
                * ratio(binomial((s - 1) * km1 / d, (km1 / d - t) as i64), 1);
            total += term;
        }
    }
    rational_to_count(total)
}

/// Coefficient of x^k in the symmetry correction ½(U_s(x)² − U_s(x²)):
/// (1/k)·binom((s−1)k, k−2), minus (1/k)·binom((s−1)(k/2), k/2 − 1) when k is
/// even. Unlike the other formulas this one is not integral on its own, only
/// the difference F_s − correction is.
pub fn h_correction_coeff(s: u64, k: u64) -> ExactRational {
    assert!(s >= 3 && k >= 1);
    let mut total = ratio(binomial((s - 1) * k, k as i64 - 2), k);
    if k.is_multiple_of(2) {
        total -= ratio(binomial((s - 1) * (k / 2), (k / 2) as i64 - 1), k);
    }
    total
}

/// Number of coloured quivers in the m-mutation class of A_n up to
/// isomorphism (equivalently, of (m+2)-angulations of the polygon with n+1
/// cells up to rotation):
///
///   Σ_{d | gcd(n, m+2)} Σ_{t=1}^{min((m+2)/d, n/d)}
///       φ(d)·d·t/((m+2)n) · binom((m+2)/d, t) · binom((m+1)n/d, n/d − t)
///   − 1/(n+1) · binom((m+1)(n+1), n−1)
///   + 1/(n+1) · binom((m+1)(n+1)/2, (n+1)/2 − 1)   (only when n+1 is even)
///
/// This expands the (s, k) = (m+2, n+1) instance of `f_coeff` minus
/// `h_correction_coeff` with its own literal loops; the two routes are kept
/// as independent code paths and cross-checked in the tests.
pub fn count_coloured_quivers(n: u64, m: u64) -> Count {
    assert!(n >= 1 && m >= 1);
    let s = m + 2;
    let mut total = ExactRational::zero();
    for d in divisors(gcd(n, s)) {
        for t in 1..=(s / d).min(n / d) {
            let num = Count::from(euler_phi(d)) * d * t;
            let term = ratio(num, s * n)
                * ratio(binomial(s / d, t as i64), 1)
                * ratio(binomial((m + 1) * n / d, (n / d - t) as i64), 1);
            total += term;
        }
    }
    total -= ratio(binomial((m + 1) * (n + 1), n as i64 - 1), n + 1);
    if (n + 1).is_multiple_of(2) {
        total += ratio(
            binomial((m + 1) * (n + 1) / 2, (n + 1) as i64 / 2 - 1),
            n + 1,
        );
    }
    rational_to_count(total)
}

/// The m = 1 specialisation in closed Catalan form:
/// C(n+1)/(n+3) + C((n+1)/2)/2 + (2/3)·C(n/3), where a term is omitted
/// whenever its Catalan argument is not an integer.
pub fn count_m1_specialization(n: u64) -> Count {
    assert!(n >= 2);
    let mut total = ratio(catalan(n + 1), n + 3);
    if (n + 1).is_multiple_of(2) {
        total += ratio(catalan(n.div_ceil(2)), 2);
    }
    if n.is_multiple_of(3) {
        total += ratio(Count::from(2u32) * catalan(n / 3), 3);
    }
    rational_to_count(total)
}

/// List of divisors of `x`, ascending.
pub fn divisors(x: u64) -> Vec<u64> {
    assert!(x >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= x {
        if x.is_multiple_of(d) {
            small.push(d);
            if d != x / d {
                large.push(x / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn gcd(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

fn ratio(num: Count, den: u64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact division; panics on a non-zero remainder (implementation bug).
fn exact_div(num: Count, den: u64) -> Count {
    let den = Count::from(den);
    let (q, r) = num::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "exact division left remainder {r} (by {den})");
    q
}

/// Converts a rational that must be a non-negative integer; panics otherwise.
fn rational_to_count(r: ExactRational) -> Count {
    assert!(r.is_integer(), "expected an integer, got {r}");
    let int = r.to_integer();
    assert!(!int.is_negative(), "expected a non-negative value, got {int}");
    int.to_biguint().expect("non-negative BigInt converts")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> Count {
        Count::from(x)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(10, 3), n(120));
        assert_eq!(binomial(12, 0), n(1));
        assert_eq!(binomial(5, 9), n(0));
        assert_eq!(binomial(5, -1), n(0));
        assert_eq!(binomial(0, 0), n(1));
        // symmetric form, larger value
        assert_eq!(binomial(40, 20), "137846528820".parse().unwrap());
    }

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(10), 4);
        assert_eq!(euler_phi(97), 96);
        // brute-force oracle on a small range
        for d in 1..=200u64 {
            let brute = (1..=d).filter(|&x| num::integer::gcd(x, d) == 1).count() as u64;
            assert_eq!(euler_phi(d), brute, "phi({d})");
        }
    }

    #[test]
    fn divisors_ascending() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn indecomposables_values() {
        assert_eq!(num_indecomposables(3, 1), n(9));
        assert_eq!(num_indecomposables(3, 2), n(15));
        assert_eq!(num_indecomposables(1, 4), n(5));
    }

    #[test]
    fn tilting_counts() {
        assert_eq!(fuss_catalan_tilting(2, 2), n(12));
        assert_eq!(fuss_catalan_tilting(3, 1), n(14));
        assert_eq!(fuss_catalan_tilting(1, 5), n(6));
        assert_eq!(fuss_catalan_tilting(6, 4), n(231880));
    }

    #[test]
    fn u_power_values() {
        assert_eq!(u_power_coeff(3, 1, 2), n(2));
        assert_eq!(u_power_coeff(4, 2, 3), n(6));
        // i == t gives exactly one cluster arrangement
        for s in 3..=6 {
            for t in 1..=5 {
                assert_eq!(u_power_coeff(s, t, t), n(1), "s={s} t={t}");
            }
        }
        // i < t is zero
        assert_eq!(u_power_coeff(5, 4, 2), n(0));
    }

    #[test]
    fn f_values() {
        assert_eq!(f_coeff(4, 3), n(5));
        assert_eq!(f_coeff(3, 3), n(3));
        assert_eq!(f_coeff(5, 1), n(1));
        assert_eq!(f_coeff(3, 4), n(10));
        assert_eq!(f_coeff(3, 2), n(1));
    }

    #[test]
    fn h_values() {
        assert_eq!(h_correction_coeff(4, 3), ratio(n(3), 1));
        assert_eq!(h_correction_coeff(3, 2), ExactRational::zero());
        assert_eq!(h_correction_coeff(5, 1), ExactRational::zero());
        assert_eq!(h_correction_coeff(3, 4), ratio(n(6), 1));
    }

    #[test]
    fn class_counts() {
        assert_eq!(count_coloured_quivers(1, 1), n(1));
        assert_eq!(count_coloured_quivers(2, 2), n(2));
        assert_eq!(count_coloured_quivers(4, 2), n(25));
        assert_eq!(count_coloured_quivers(5, 3), n(366));
        assert_eq!(
            count_coloured_quivers(20, 4),
            "873654669882574580".parse().unwrap()
        );
    }

    #[test]
    fn m1_specialization_values() {
        assert_eq!(count_m1_specialization(2), n(1));
        assert_eq!(count_m1_specialization(3), n(4));
        assert_eq!(count_m1_specialization(7), n(150));
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), n(1));
        assert_eq!(catalan(5), n(42));
        assert_eq!(catalan(10), n(16796));
    }
}
