use num_traits::{Signed, Zero};

use super::{LinAlgError, RatMat, RatVec, Rational};

/// Inertia of a symmetric form: counts of positive, negative and zero squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.zero == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.positive == 0 && self.zero == 0
    }
}

/// Symmetric bilinear form given by its Gram matrix; the signature is
/// computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    gram: RatMat,
    signature: Signature,
}

impl BilinearForm {
    pub fn new(gram: RatMat) -> Result<Self, LinAlgError> {
        if !gram.is_square() {
            return Err(LinAlgError::DimensionMismatch {
                expected: gram.rows(),
                found: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(LinAlgError::NotSymmetric);
        }
        let signature = inertia(&gram);
        Ok(BilinearForm { gram, signature })
    }

    pub fn gram(&self) -> &RatMat {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    /// `xᵀ·G·y`.
    pub fn eval(&self, x: &RatVec, y: &RatVec) -> Result<Rational, LinAlgError> {
        let gy = self.gram.mul_vec(y)?;
        x.checked_dot(&gy)
    }

    /// The same form with every value negated.
    pub fn negated(&self) -> BilinearForm {
        let s = self.signature;
        BilinearForm {
            gram: self.gram.scale(&-Rational::from_integer(1.into())),
            signature: Signature {
                positive: s.negative,
                negative: s.positive,
                zero: s.zero,
            },
        }
    }
}

/// Returns `Mᵀ·G·M`.
pub fn gram_conjugate(m: &RatMat, form: &BilinearForm) -> Result<RatMat, LinAlgError> {
    let gm = form.gram().checked_mul(m)?;
    m.transpose().checked_mul(&gm)
}

/// Sylvester inertia by symmetric Gaussian elimination (congruence).
fn inertia(gram: &RatMat) -> Signature {
    let n = gram.rows();
    let mut a = gram.clone();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    let mut active: alloc::vec::Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a.get(i, i).is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish. Find an off-diagonal
                // entry and replace row/column i by (i + j), which makes the
                // diagonal entry 2·a_ij nonzero.
                let pair = active.iter().copied().find_map(|i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| j != i && !a.get(i, j).is_zero())
                        .map(|j| (i, j))
                });
                match pair {
                    Some((i, j)) => {
                        for k in 0..n {
                            let v = a.get(i, k) + a.get(j, k);
                            a.set(i, k, v);
                        }
                        for k in 0..n {
                            let v = a.get(k, i) + a.get(k, j);
                            a.set(k, i, v);
                        }
                        i
                    }
                    None => {
                        sig.zero += active.len();
                        break;
                    }
                }
            }
        };
        let d = a.get(p, p).clone();
        if d.is_positive() {
            sig.positive += 1;
        } else {
            sig.negative += 1;
        }
        active.retain(|&i| i != p);
        for &r in &active {
            let f = a.get(r, p) / &d;
            if f.is_zero() {
                continue;
            }
            for &c in &active {
                let v = a.get(r, c) - &f * a.get(p, c);
                a.set(r, c, v);
            }
        }
        for &r in &active {
            a.set(r, p, Rational::zero());
            a.set(p, r, Rational::zero());
        }
    }
    sig
}
