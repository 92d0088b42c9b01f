use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntVec, LinAlgError, Rational};

/// A point or covector with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec(Vec<Rational>);

impl RatVec {
    pub fn new(coords: Vec<Rational>) -> Self {
        RatVec(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        RatVec(alloc::vec![Rational::zero(); dim])
    }

    /// The `i`-th standard basis vector of length `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec(
            coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_bigints(coords: &[BigInt]) -> Self {
        RatVec(coords.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Standard dot product. Lengths must agree.
    pub fn dot(&self, other: &RatVec) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn checked_dot(&self, other: &RatVec) -> Result<Rational, LinAlgError> {
        if self.dim() != other.dim() {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self.dot(other))
    }

    pub fn scale(&self, k: &Rational) -> RatVec {
        RatVec(self.0.iter().map(|c| c * k).collect())
    }

    /// Largest absolute coordinate, zero for the zero vector.
    pub fn max_abs(&self) -> Rational {
        self.0
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Positive rescaling so that the largest absolute coordinate is one.
    /// The zero vector is returned unchanged.
    pub fn normalize_max_abs(&self) -> RatVec {
        let m = self.max_abs();
        if m.is_zero() {
            self.clone()
        } else {
            self.scale(&m.recip())
        }
    }

    /// Primitive integer vector on the same ray (see [`primitive_integer`]).
    pub fn to_primitive(&self) -> IntVec {
        primitive_integer(&self.0)
    }

    /// Whether every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

/// Scale a rational vector by a positive factor so that it becomes an integer
/// vector with coprime entries. The zero vector maps to the zero vector.
pub fn primitive_integer(coords: &[Rational]) -> IntVec {
    let lcm = coords
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coords
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &gcd).collect()
}

impl Index<usize> for RatVec {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &RatVec {
    type Output = RatVec;

    fn add(self, rhs: &RatVec) -> RatVec {
        debug_assert_eq!(self.dim(), rhs.dim());
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVec {
    type Output = RatVec;

    fn sub(self, rhs: &RatVec) -> RatVec {
        debug_assert_eq!(self.dim(), rhs.dim());
        RatVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVec {
    type Output = RatVec;

    fn neg(self) -> RatVec {
        RatVec(self.0.iter().map(|c| -c).collect())
    }
}

impl FromIterator<Rational> for RatVec {
    fn from_iter<T: IntoIterator<Item = Rational>>(iter: T) -> Self {
        RatVec(iter.into_iter().collect())
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, rat};
    use alloc::vec;

    #[test]
    fn primitive_clears_denominators_and_gcd() {
        let v = vec![frac(1, 2), frac(-3, 4), rat(0)];
        let p = primitive_integer(&v);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        let w = vec![rat(4), rat(6)];
        assert_eq!(
            primitive_integer(&w),
            vec![BigInt::from(2), BigInt::from(3)]
        );
    }

    #[test]
    fn normalize_keeps_direction() {
        let v = RatVec::from_ints(&[3, -6, 2]);
        let n = v.normalize_max_abs();
        assert_eq!(n, RatVec::new(vec![frac(1, 2), rat(-1), frac(1, 3)]));
        assert_eq!(RatVec::zeros(2).normalize_max_abs(), RatVec::zeros(2));
    }

    #[test]
    fn dot_mismatch_is_reported() {
        let a = RatVec::from_ints(&[1, 2]);
        let b = RatVec::from_ints(&[1]);
        assert_eq!(
            a.checked_dot(&b),
            Err(LinAlgError::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }
}
