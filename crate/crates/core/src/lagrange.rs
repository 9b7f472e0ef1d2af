//! Lagrange inversion over truncated series.
//!
//! For `A(x) = x * phi(A(x))` and any series `H`,
//!
//! ```text
//! n [x^n] H(A(x)) = [z^(n-1)] H'(z) phi(z)^n        (n >= 1)
//! ```
//!
//! This module solves the functional equation directly, extracts
//! coefficients through the right-hand side, checks the identity in its
//! division-free form, and builds compositional inverses on top of the
//! solver.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::series::Series;

/// The equation `A = x * phi(A)`, to be solved up to `x^precision`.
#[derive(Debug, Clone)]
pub struct FunctionalEquation {
    phi: Series,
    precision: usize,
}

impl FunctionalEquation {
    /// `phi` must know at least `precision - 1` coefficients, which is all
    /// that `a_1 ..= a_precision` depend on.
    pub fn new(phi: Series, precision: usize) -> Result<Self> {
        let need = precision.saturating_sub(1);
        if phi.precision() < need {
            return Err(Error::InsufficientPrecision {
                what: "phi",
                need,
                have: phi.precision(),
            });
        }
        Ok(FunctionalEquation { phi, precision })
    }

    pub fn phi(&self) -> &Series {
        &self.phi
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Applies `A -> x * phi(A)`, truncated to `precision`.
    fn step(&self, a: &Series, precision: usize) -> Result<Series> {
        self.phi.compose(a)?.mul_by_x().truncate(precision)
    }

    /// Solves by fixed-point iteration from `A = 0`.
    ///
    /// If `A` is correct through degree `i`, then `x * phi(A)` is correct
    /// through degree `i + 1`, so pass `i` only computes that far. After
    /// `precision` passes the iterate is complete; one more pass at full
    /// precision must reproduce it exactly.
    pub fn solve(&self) -> Result<Series> {
        let mut a = Series::zero(0);
        for i in 0..self.precision {
            a = self.step(&a, i + 1)?;
        }
        let check = self.step(&a, self.precision)?;
        if let Some(degree) = (0..=self.precision).find(|&i| a.coeffs()[i] != check.coeffs()[i]) {
            return Err(Error::FixpointFailed { degree });
        }
        Ok(a)
    }
}

/// Solves `A = x * phi(A)` up to `x^precision`.
pub fn solve_functional_equation(phi: &Series, precision: usize) -> Result<Series> {
    FunctionalEquation::new(phi.clone(), precision)?.solve()
}

fn require(what: &'static str, series: &Series, need: usize) -> Result<()> {
    if series.precision() < need {
        return Err(Error::InsufficientPrecision {
            what,
            need,
            have: series.precision(),
        });
    }
    Ok(())
}

/// `[z^(n-1)] H'(z) phi(z)^n` for `n >= 1`, and `0` for `n = 0`.
///
/// This is `n [x^n] H(A(x))` computed without solving for `A` and without
/// dividing by `n`.
pub fn lif_rhs(h: &Series, phi: &Series, n: usize) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::zero());
    }
    require("h", h, n)?;
    require("phi", phi, n - 1)?;
    let dh = h.derivative()?.truncate(n - 1)?;
    let phi_n = phi.truncate(n - 1)?.pow(n as u64);
    let dh = dh.coeffs();
    let phi_n = phi_n.coeffs();
    Ok(Rational::dot((0..n).map(|i| (&dh[i], &phi_n[n - 1 - i]))))
}

/// `[x^n] H(A(x))` where `A = x * phi(A)`, via the inversion formula.
///
/// For `n = 0` the formula is vacuous; since `a_0 = 0` the answer is `h_0`.
pub fn lif_coefficient(h: &Series, phi: &Series, n: usize) -> Result<Rational> {
    LagrangeFormula.coefficient(h, phi, n)
}

/// A way of computing `[x^n] H(A(x))` from `H` and `phi`.
///
/// [`lif_verify_with`] compares `scaled_coefficient` against the value
/// obtained by actually solving for `A`, so alternative or broken
/// implementations can be checked through the same pipeline.
pub trait CoefficientFormula {
    /// `[x^n] H(A(x))`.
    fn coefficient(&self, h: &Series, phi: &Series, n: usize) -> Result<Rational>;

    /// `n [x^n] H(A(x))`.
    fn scaled_coefficient(&self, h: &Series, phi: &Series, n: usize) -> Result<Rational> {
        Ok(&Rational::from(n as i64) * &self.coefficient(h, phi, n)?)
    }
}

/// The inversion formula over the rationals.
#[derive(Debug, Clone, Copy, Default)]
pub struct LagrangeFormula;

impl CoefficientFormula for LagrangeFormula {
    fn coefficient(&self, h: &Series, phi: &Series, n: usize) -> Result<Rational> {
        if n == 0 {
            return Ok(h.constant_term().clone());
        }
        lif_rhs(h, phi, n)?.checked_div(&Rational::from(n as i64))
    }

    fn scaled_coefficient(&self, h: &Series, phi: &Series, n: usize) -> Result<Rational> {
        lif_rhs(h, phi, n)
    }
}

/// One degree of the division-free identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LifReport {
    pub n: usize,
    /// `n [x^n] H(A(x))`, from the solved `A`.
    pub lhs_times_n: Rational,
    /// `[z^(n-1)] H'(z) phi(z)^n`.
    pub rhs: Rational,
    pub holds: bool,
}

impl LifReport {
    fn new(n: usize, lhs_times_n: Rational, rhs: Rational) -> Self {
        let holds = lhs_times_n == rhs;
        LifReport {
            n,
            lhs_times_n,
            rhs,
            holds,
        }
    }
}

/// Checks `n [x^n] H(A) = [z^(n-1)] H' phi^n` for every `0 <= n <= max_n`.
///
/// The left side comes from solving `A = x phi(A)` and composing; neither
/// side divides by `n`.
pub fn lif_verify(h: &Series, phi: &Series, max_n: usize) -> Result<Vec<LifReport>> {
    lif_verify_with(&LagrangeFormula, h, phi, max_n)
}

pub fn lif_verify_with(
    formula: &dyn CoefficientFormula,
    h: &Series,
    phi: &Series,
    max_n: usize,
) -> Result<Vec<LifReport>> {
    require("h", h, max_n)?;
    require("phi", phi, max_n)?;
    let a = solve_functional_equation(phi, max_n)?;
    let h_of_a = h.truncate(max_n)?.compose(&a)?;
    (0..=max_n)
        .map(|n| {
            let lhs = &Rational::from(n as i64) * h_of_a.coeff(n)?;
            let rhs = formula.scaled_coefficient(h, phi, n)?;
            Ok(LifReport::new(n, lhs, rhs))
        })
        .collect()
}

/// `[x^n] A(x)^k` where `A = x * phi(A)`.
///
/// For `1 <= k <= n` this is `(k/n) [z^(n-k)] phi(z)^n`; the remaining cases
/// follow from `A` having zero constant term.
pub fn power_coefficient(k: usize, phi: &Series, n: usize) -> Result<Rational> {
    require("phi", phi, n)?;
    if n == 0 {
        return Ok(if k == 0 {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    if k == 0 || k > n {
        return Ok(Rational::zero());
    }
    let phi_n = phi.truncate(n - k)?.pow(n as u64);
    let scale = Rational::new(k as i64, n as i64)?;
    Ok(&scale * phi_n.coeff(n - k)?)
}

/// The series `G` with `F(G(x)) = x = G(F(x))`.
///
/// Requires `f_0 = 0` and `f_1 != 0`. `G` solves `G = x * phi(G)` with
/// `phi(x) = x / F(x)`.
pub fn compositional_inverse(f: &Series) -> Result<Series> {
    if !f.constant_term().is_zero() {
        return Err(Error::NoCompositionalInverse("constant term is nonzero"));
    }
    match f.coeff(1) {
        Ok(f1) if !f1.is_zero() => {}
        Ok(_) => return Err(Error::NoCompositionalInverse("linear coefficient is zero")),
        Err(_) => {
            return Err(Error::NoCompositionalInverse(
                "precision 0 does not determine the linear coefficient",
            ))
        }
    }
    let phi = f.div_by_x()?.recip()?;
    solve_functional_equation(&phi, f.precision())
}
