//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of precision `N` knows the coefficients of `x^0 ..= x^N` and
//! nothing beyond. Binary operations return the smaller of the two
//! precisions, and asking for a coefficient past the known precision is an
//! error rather than an implicit zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    // invariant: non-empty, len = precision + 1
    coeffs: Vec<Rational>,
}

impl Series {
    /// Builds a series from its full coefficient list; the precision is
    /// `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least one coefficient"
        );
        Series { coeffs }
    }

    /// Interprets a finite polynomial as a series of the given precision,
    /// padding with zeros or dropping terms above `precision`.
    pub fn from_polynomial(mut coeffs: Vec<Rational>, precision: usize) -> Self {
        coeffs.resize(precision + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn from_integers(coeffs: &[i64], precision: usize) -> Self {
        Self::from_polynomial(
            coeffs.iter().map(|&c| Rational::from(c)).collect(),
            precision,
        )
    }

    pub fn zero(precision: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); precision + 1],
        }
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Rational::one(), precision)
    }

    pub fn constant(c: Rational, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^power`, or the zero series if `power > precision`.
    pub fn monomial(c: Rational, power: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if power <= precision {
            s.coeffs[power] = c;
        }
        s
    }

    /// The indeterminate `x` itself. Requires `precision >= 1` to be visible.
    pub fn x(precision: usize) -> Self {
        Self::monomial(Rational::one(), 1, precision)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `[x^n] self`.
    pub fn coeff(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::OutOfPrecision {
            index: n,
            precision: self.precision(),
        })
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Index of the first nonzero coefficient, or `None` if every known
    /// coefficient is zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Index of the last nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Forgets every coefficient above `precision`.
    pub fn truncate(&self, precision: usize) -> Result<Series> {
        if precision > self.precision() {
            return Err(Error::InsufficientPrecision {
                what: "series",
                need: precision,
                have: self.precision(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..=precision].to_vec(),
        })
    }

    /// True when both series agree on every coefficient they both know.
    pub fn agrees_with(&self, other: &Series) -> bool {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .all(|(a, b)| a == b)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Formal derivative; the result has precision one lower.
    pub fn derivative(&self) -> Result<Series> {
        if self.precision() == 0 {
            return Err(Error::DerivativeOfPrecisionZero);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(r, c)| c * &Rational::from(r as i64))
            .collect();
        Ok(Series { coeffs })
    }

    /// Multiplication by the indeterminate: shifts every coefficient up by
    /// one, which raises the precision by one.
    pub fn mul_by_x(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Division by the indeterminate: drops the constant term, which must be
    /// zero, and lowers the precision by one.
    pub fn div_by_x(&self) -> Result<Series> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        if self.precision() == 0 {
            return Err(Error::InsufficientPrecision {
                what: "series",
                need: 1,
                have: 0,
            });
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `self^m` by binary exponentiation, truncating after every product.
    pub fn pow(&self, m: u64) -> Series {
        let mut acc = Series::one(self.precision());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse, defined when the constant term is nonzero.
    pub fn recip(&self) -> Result<Series> {
        let inv0 = self
            .constant_term()
            .inv()
            .map_err(|_| Error::NotInvertible)?;
        let neg_inv0 = -&inv0;
        let n = self.precision();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0);
        for k in 1..=n {
            let acc = Rational::dot((1..=k).map(|i| (&self.coeffs[i], &out[k - i])));
            out.push(&acc * &neg_inv0);
        }
        Ok(Series { coeffs: out })
    }

    /// `self(inner(x))`, evaluated by truncated Horner's rule.
    ///
    /// `inner` must have zero constant term, so coefficient `n` of the result
    /// only depends on coefficients `0..=n` of `self`.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let precision = self.precision().min(inner.precision());
        let inner = inner.truncate(precision)?;
        let outer = &self.coeffs[..=precision];
        let top = match outer.iter().rposition(|c| !c.is_zero()) {
            Some(top) => top,
            None => return Ok(Series::zero(precision)),
        };
        let mut acc = Series::constant(outer[top].clone(), precision);
        for c in outer[..top].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

fn zip_with(a: &Series, b: &Series, f: impl Fn(&Rational, &Rational) -> Rational) -> Series {
    Series {
        coeffs: a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| f(x, y))
            .collect(),
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated to the smaller precision.
impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let n = self.precision().min(rhs.precision());
        let coeffs = (0..=n)
            .map(|r| Rational::dot((0..=r).map(|s| (&self.coeffs[s], &rhs.coeffs[r - s]))))
            .collect();
        Series { coeffs }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Canonical text form `[c0, c1, ..., cN]`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series(N={}, {})", self.precision(), self)
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}
