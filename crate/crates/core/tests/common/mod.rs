//! Test-only oracles and generators.
//!
//! The oracles here work on bare coefficient vectors and never call into
//! `powerseries::series`, so they can check it independently.

#![allow(dead_code)]

use powerseries::{Rational, Series};
use rand::Rng;

/// Schoolbook product: every pair `(i, j)` with `i + j <= n` scattered into
/// slot `i + j`.
pub fn schoolbook_mul(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Solves `A = x * phi(A)` one coefficient at a time:
/// `a_n = sum_r c_r [x^(n-1)] A^r`, where only `a_1..a_(n-1)` are needed.
pub fn solve_by_recursion(phi: &[Rational], precision: usize) -> Vec<Rational> {
    let mut a = vec![Rational::zero(); precision + 1];
    for n in 1..=precision {
        let target = n - 1;
        let mut power = vec![Rational::zero(); target + 1];
        power[0] = Rational::one();
        let mut acc = Rational::zero();
        for (r, c) in phi.iter().enumerate().take(target + 1) {
            if r > 0 {
                power = schoolbook_mul(&power, &a[..=target], target);
            }
            acc += c * &power[target];
        }
        a[n] = acc;
    }
    a
}

/// A rational `p/q` with `|p| <= 9` and `1 <= q <= 9`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=9)).unwrap()
}

pub fn nonzero_small_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A random polynomial of degree at most `max_degree`, as a series of the
/// given precision.
pub fn random_poly<R: Rng>(rng: &mut R, max_degree: usize, precision: usize) -> Series {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree).map(|_| small_rational(rng)).collect();
    Series::from_polynomial(coeffs, precision)
}

/// A random series with every known coefficient drawn independently.
pub fn random_series<R: Rng>(rng: &mut R, precision: usize) -> Series {
    Series::from_coeffs((0..=precision).map(|_| small_rational(rng)).collect())
}

pub fn with_constant(s: &Series, c: Rational) -> Series {
    let mut coeffs = s.coeffs().to_vec();
    coeffs[0] = c;
    Series::from_coeffs(coeffs)
}
