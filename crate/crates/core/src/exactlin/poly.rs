use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{LinAlgError, RatMat, Rational};

/// Univariate rational polynomial, coefficients lowest degree first.
///
/// The coefficient list never ends in a zero; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(alloc::vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// `∏ (z − r)` over the given roots (monic; `1` for no roots).
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots
            .iter()
            .fold(Self::constant(Rational::one()), |acc, r| {
                &acc * &Self::new(alloc::vec![-r.clone(), Rational::one()])
            })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn derivative(&self) -> RatPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + c)
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = rem[rem.len() - 1].clone() / &lc;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &f * c;
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lc = a.leading().recip();
        Self::new(a.coeffs.iter().map(|c| c * &lc).collect())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·z")?,
                _ => write!(f, "{c}·z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Determinant of the Sylvester matrix of `f` (degree m) and `g` (degree n).
///
/// Rows `0..n` hold shifted copies of `f`'s coefficients (highest degree
/// first), rows `n..n+m` shifted copies of `g`'s.
pub fn resultant(f: &RatPoly, g: &RatPoly) -> Result<Rational, LinAlgError> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(LinAlgError::ZeroPolynomial);
    };
    let size = m + n;
    if size == 0 {
        return Ok(Rational::one());
    }
    let mut syl = RatMat::zeros(size, size);
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            syl.set(row, row + k, c.clone());
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            syl.set(n + row, row + k, c.clone());
        }
    }
    syl.determinant()
}

/// `(−1)^{n(n−1)/2} · res(f, f′) / lc(f)` with `n = deg f`.
pub fn poly_discriminant(f: &RatPoly) -> Result<Rational, LinAlgError> {
    let n = f.degree().ok_or(LinAlgError::ZeroPolynomial)?;
    if n < 1 {
        return Err(LinAlgError::DegreeTooSmall { degree: n, min: 1 });
    }
    let res = resultant(f, &f.derivative())?;
    let value = res / f.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        -value
    } else {
        value
    })
}
