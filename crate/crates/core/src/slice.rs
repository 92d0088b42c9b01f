//! The `A_{n-1}` surface family `x² + y² + ∏(z − s_i) = 0` over
//! `V = {s ∈ Qⁿ : Σ s_i = 0}`.
//!
//! The fiber over `s` is singular exactly when two `s_i` collide, so the
//! discriminant locus is the union of the hyperplanes `L_ij = {s_i = s_j}`,
//! which is the `A_{n-1}` reflection arrangement with `W = S_n` permuting
//! coordinates. The map `α` identifies the exceptional curve classes of the
//! minimal resolution of the central fiber with the simple roots
//! `e_i − e_{i+1}`; it reverses the sign of the symmetric forms.
//!
//! The `x`, `y` variables never appear: every fiber is carried by its
//! `z`-polynomial.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arrangement::{
    build_arrangement, Arrangement, ArrangementError, ChamberComplex, Cone, ConeError,
};
use crate::exactlin::{poly_discriminant, LinAlgError, RatMat, RatPoly, RatVec, Rational};
use crate::movcone::{mov_decomposition, GroupAction, MovDecomposition, MovError, WallOrder};
use crate::rootsys::{ambient_realization_a, CartanType, Letter, RootSystemError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SliceError {
    #[error("family needs n >= 2, got {0}")]
    TooSmall(usize),
    #[error("coordinates of a point of V must sum to zero")]
    NotInV,
    #[error("orbit tag {tag} does not apply to {ambient}")]
    UnknownTag { ambient: CartanType, tag: OrbitTag },
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Mov(#[from] MovError),
}

fn check_n(n: usize) -> Result<(), SliceError> {
    if n < 2 {
        Err(SliceError::TooSmall(n))
    } else {
        Ok(())
    }
}

/// A point of `V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlicePoint(RatVec);

impl SlicePoint {
    pub fn new(s: RatVec) -> Result<Self, SliceError> {
        if s.dim() < 2 {
            return Err(SliceError::TooSmall(s.dim()));
        }
        let sum = s.coords().iter().fold(Rational::zero(), |a, b| a + b);
        if !sum.is_zero() {
            return Err(SliceError::NotInV);
        }
        Ok(SlicePoint(s))
    }

    pub fn from_ints(s: &[i64]) -> Result<Self, SliceError> {
        Self::new(RatVec::from_ints(s))
    }

    pub fn coords(&self) -> &RatVec {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.dim()
    }

    /// `∏ (z − s_i)`.
    pub fn fiber_polynomial(&self) -> RatPoly {
        RatPoly::from_roots(self.0.coords())
    }
}

/// `(σ_1, …, σ_n)` with `∏(z − s_i) = zⁿ + σ_1 zⁿ⁻¹ + … + σ_n`.
pub fn elementary_symmetric_coeffs(p: &SlicePoint) -> Vec<Rational> {
    let f = p.fiber_polynomial();
    let n = p.n();
    (1..=n).map(|i| f.coeff(n - i)).collect()
}

/// Singularity data of one fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub singular: bool,
    /// One-based index pairs `(i, j)`, `i < j`, with `s_i = s_j`.
    pub pairs: Vec<(usize, usize)>,
    /// Repeated values `z_0`, ascending; the singular points are `(0, 0, z_0)`.
    pub singular_values: Vec<Rational>,
    pub discriminant: Rational,
}

/// Decide singularity by the discriminant of the `z`-polynomial.
pub fn fiber_is_singular(p: &SlicePoint) -> Result<FiberReport, SliceError> {
    let discriminant = poly_discriminant(&p.fiber_polynomial())?;
    let s = p.coords().coords();
    let mut pairs = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] == s[j] {
                pairs.push((i + 1, j + 1));
            }
        }
    }
    let singular_values: Vec<Rational> = multiplicities(p)
        .into_iter()
        .filter(|(_, m)| *m >= 2)
        .map(|(z, _)| z)
        .collect();
    Ok(FiberReport {
        singular: discriminant.is_zero(),
        pairs,
        singular_values,
        discriminant,
    })
}

fn multiplicities(p: &SlicePoint) -> BTreeMap<Rational, usize> {
    let mut counts = BTreeMap::new();
    for v in p.coords().coords() {
        *counts.entry(v.clone()).or_insert(0) += 1;
    }
    counts
}

/// A singular point of a fiber and its type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularPoint {
    pub z: Rational,
    pub kind: CartanType,
}

/// One `A_{m−1}` point for each value of multiplicity `m ≥ 2`, by ascending `z`.
pub fn singularity_types(p: &SlicePoint) -> Vec<SingularPoint> {
    multiplicities(p)
        .into_iter()
        .filter(|(_, m)| *m >= 2)
        .map(|(z, m)| SingularPoint {
            z,
            kind: CartanType::new(Letter::A, m - 1).expect("rank at least one"),
        })
        .collect()
}

/// `α`: the `n × (n−1)` matrix sending `[E_i]` to `e_i − e_{i+1}`.
pub fn alpha_map(n: usize) -> Result<RatMat, SliceError> {
    check_n(n)?;
    Ok(ambient_realization_a(n)?)
}

/// Intersection matrix of the exceptional curves: `−2` on the diagonal,
/// `1` for adjacent curves.
pub fn intersection_gram(n: usize) -> Result<RatMat, SliceError> {
    check_n(n)?;
    let k = n - 1;
    let mut g = RatMat::zeros(k, k);
    for i in 0..k {
        g.set(i, i, Rational::from_integer((-2).into()));
        if i + 1 < k {
            g.set(i, i + 1, Rational::one());
            g.set(i + 1, i, Rational::one());
        }
    }
    Ok(g)
}

/// `αᵀα` (the standard dot product pulled back by `α`).
pub fn alpha_gram(n: usize) -> Result<RatMat, SliceError> {
    let a = alpha_map(n)?;
    Ok(a.transpose().checked_mul(&a)?)
}

/// Whether `α` reverses the sign of the forms and has full rank.
pub fn gram_check(n: usize) -> Result<bool, SliceError> {
    let pulled = alpha_gram(n)?;
    let negated = intersection_gram(n)?.scale(&-Rational::one());
    Ok(pulled == negated && alpha_map(n)?.rank() == n - 1)
}

/// `r_i = (−n+i, …, −n+i, i, …, i)` with `−n+i` repeated `i` times.
pub fn ample_chamber_rays(n: usize) -> Result<Vec<RatVec>, SliceError> {
    check_n(n)?;
    Ok((1..n)
        .map(|i| {
            let coords: Vec<i64> = (0..n)
                .map(|k| if k < i { i as i64 - n as i64 } else { i as i64 })
                .collect();
            RatVec::from_ints(&coords)
        })
        .collect())
}

fn sum_row(n: usize) -> RatVec {
    RatVec::from_ints(&alloc::vec![1; n])
}

/// The cone spanned by the rays `r_i`.
pub fn ray_cone(n: usize) -> Result<Cone, SliceError> {
    let eq = Cone::canonical_equalities(&[sum_row(n)], n);
    Ok(Cone::from_generators(&ample_chamber_rays(n)?, &eq, n)?)
}

/// `{v ∈ V : v_1 ≤ … ≤ v_n}`, the closure of `{⟨v, α(E_j)⟩ < 0 ∀ j}`.
pub fn antidominant_cone(n: usize) -> Result<Cone, SliceError> {
    let a = alpha_map(n)?;
    let ineq: Vec<RatVec> = (0..n - 1).map(|j| -&a.column(j)).collect();
    let eq = Cone::canonical_equalities(&[sum_row(n)], n);
    Ok(Cone::from_inequalities(&ineq, &eq, n)?)
}

/// The arrangement `{L_ij}` on `V`.
pub fn lij_arrangement(n: usize) -> Result<Arrangement, SliceError> {
    check_n(n)?;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = alloc::vec![0i64; n];
            v[i] = 1;
            v[j] = -1;
            rows.push(RatVec::from_ints(&v));
        }
    }
    Ok(build_arrangement(&rows, &[sum_row(n)], n)?)
}

/// Index of `L_ij` (zero-based `i < j`) in [`lij_arrangement`].
pub fn lij_index(arr: &Arrangement, i: usize, j: usize) -> Option<usize> {
    let mut v = alloc::vec![Rational::zero(); arr.dim()];
    v[i] = Rational::one();
    v[j] = -Rational::one();
    arr.position_of_covector(&RatVec::new(v)).ok().flatten()
}

/// `S_n` permuting coordinates, generated by adjacent transpositions.
pub fn symmetric_group(n: usize, cap: usize) -> Result<GroupAction, SliceError> {
    check_n(n)?;
    let gens = (0..n - 1)
        .map(|i| {
            let mut m = RatMat::identity(n);
            m.set(i, i, Rational::zero());
            m.set(i + 1, i + 1, Rational::zero());
            m.set(i, i + 1, Rational::one());
            m.set(i + 1, i, Rational::one());
            m
        })
        .collect();
    Ok(GroupAction::generated_by(n, gens, cap)?)
}

/// A point inside the image of the ample cone: `v_i = 2i − (n+1)`.
pub fn ample_class(n: usize) -> RatVec {
    RatVec::from_ints(
        &(1..=n as i64)
            .map(|i| 2 * i - (n as i64 + 1))
            .collect::<Vec<_>>(),
    )
}

/// The whole family for one `n`.
#[derive(Debug, Clone)]
pub struct SliceFamily {
    pub n: usize,
    pub arrangement: Arrangement,
    pub alpha: RatMat,
    /// Weight of the symplectic form under the scaling action.
    pub weight: usize,
}

impl SliceFamily {
    pub fn new(n: usize) -> Result<Self, SliceError> {
        Ok(SliceFamily {
            n,
            arrangement: lij_arrangement(n)?,
            alpha: alpha_map(n)?,
            weight: 2,
        })
    }

    /// Movable-cone decomposition of `V` under `S_n` from the ample class.
    pub fn mov(&self, cap: usize) -> Result<MovDecomposition, SliceError> {
        let complex = ChamberComplex::new(self.arrangement.clone());
        let group = symmetric_group(self.n, cap)?;
        Ok(mov_decomposition(
            complex,
            group,
            &ample_class(self.n),
            WallOrder::Ascending,
        )?)
    }
}

/// Which nilpotent orbit the Slodowy slice is transverse to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitTag {
    /// Any orbit outside the exceptional list.
    Default,
    Subregular,
    /// `O_{[n,n]} ⊂ C_n`.
    CPairEqual,
    /// `O_{[2n−2i, 2i]} ⊂ C_n` with `1 < i ≤ n/2`.
    CPairSplit(usize),
    /// The 8-dimensional orbit in `G_2`.
    G2EightDim,
}

impl fmt::Display for OrbitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitTag::Default => f.write_str("default"),
            OrbitTag::Subregular => f.write_str("subregular"),
            OrbitTag::CPairEqual => f.write_str("c-pair-equal"),
            OrbitTag::CPairSplit(i) => write!(f, "c-pair-split-{i}"),
            OrbitTag::G2EightDim => f.write_str("g2-8dim"),
        }
    }
}

impl core::str::FromStr for OrbitTag {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "default" | "regular" => Ok(OrbitTag::Default),
            "subregular" => Ok(OrbitTag::Subregular),
            "c-pair-equal" => Ok(OrbitTag::CPairEqual),
            "g2-8dim" => Ok(OrbitTag::G2EightDim),
            _ => s
                .strip_prefix("c-pair-split-")
                .and_then(|i| i.parse().ok())
                .map(OrbitTag::CPairSplit)
                .ok_or(()),
        }
    }
}

/// `D_{n+1}`, written `A_3` when `n = 2`.
fn d_next(n: usize) -> CartanType {
    if n == 2 {
        CartanType::new(Letter::A, 3).expect("valid")
    } else {
        CartanType::new(Letter::D, n + 1).expect("valid")
    }
}

/// Cartan type whose Weyl chambers give the chamber structure of the
/// resolution of the slice's null fiber.
pub fn slodowy_h2_type(ambient: CartanType, tag: OrbitTag) -> Result<CartanType, SliceError> {
    let n = ambient.rank();
    let unknown = Err(SliceError::UnknownTag { ambient, tag });
    let ty = |l, r| CartanType::new(l, r).expect("valid");
    match (ambient.letter(), tag) {
        (_, OrbitTag::Default) => Ok(ambient),
        (Letter::B, OrbitTag::Subregular) => Ok(ty(Letter::A, 2 * n - 1)),
        (Letter::C, OrbitTag::Subregular) => Ok(d_next(n)),
        (Letter::G, OrbitTag::Subregular) => Ok(ty(Letter::D, 4)),
        (Letter::F, OrbitTag::Subregular) => Ok(ty(Letter::E, 6)),
        (Letter::C, OrbitTag::CPairEqual) => Ok(d_next(n)),
        (Letter::C, OrbitTag::CPairSplit(i)) if 1 < i && 2 * i <= n => Ok(d_next(n)),
        (Letter::G, OrbitTag::G2EightDim) => Ok(ty(Letter::C, 3)),
        _ => unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{locate, Location};
    use crate::exactlin::{frac, rat};
    use alloc::vec;

    #[test]
    fn points_must_lie_in_v() {
        assert_eq!(SlicePoint::from_ints(&[1, 1]), Err(SliceError::NotInV));
        assert_eq!(SlicePoint::from_ints(&[0]), Err(SliceError::TooSmall(1)));
    }

    #[test]
    fn symmetric_coefficients() {
        let p = SlicePoint::from_ints(&[0, 0, 0]).unwrap();
        assert!(elementary_symmetric_coeffs(&p).iter().all(Zero::is_zero));
        let p = SlicePoint::from_ints(&[1, -1]).unwrap();
        assert_eq!(elementary_symmetric_coeffs(&p), vec![rat(0), rat(-1)]);
        let p = SlicePoint::from_ints(&[1, 2, -3]).unwrap();
        assert_eq!(
            elementary_symmetric_coeffs(&p),
            vec![rat(0), rat(-7), rat(6)]
        );
    }

    #[test]
    fn singular_fibers() {
        let r = fiber_is_singular(&SlicePoint::from_ints(&[1, 1, -2]).unwrap()).unwrap();
        assert!(r.singular);
        assert_eq!(r.pairs, vec![(1, 2)]);
        assert_eq!(r.singular_values, vec![rat(1)]);
        let r = fiber_is_singular(&SlicePoint::from_ints(&[0, 1, -1]).unwrap()).unwrap();
        assert!(!r.singular);
        assert!(r.pairs.is_empty());
        // (1-0)²(−1−0)²(−1−1)² = 4.
        assert_eq!(r.discriminant, rat(4));
    }

    #[test]
    fn singularity_kinds() {
        let types = |s: &[i64]| -> Vec<(Rational, CartanType)> {
            singularity_types(&SlicePoint::from_ints(s).unwrap())
                .into_iter()
                .map(|p| (p.z, p.kind))
                .collect()
        };
        assert_eq!(types(&[0, 0, 0, 0]), vec![(rat(0), "A3".parse().unwrap())]);
        let a1: CartanType = "A1".parse().unwrap();
        assert_eq!(types(&[1, 1, -1, -1]), vec![(rat(-1), a1), (rat(1), a1)]);
        assert!(types(&[3, 1, -4]).is_empty());
        let half = SlicePoint::new(RatVec::new(vec![frac(1, 2), frac(1, 2), rat(-1)])).unwrap();
        assert_eq!(singularity_types(&half)[0].z, frac(1, 2));
    }

    #[test]
    fn alpha_reverses_forms() {
        let a = alpha_map(2).unwrap();
        assert_eq!(a.column(0), RatVec::from_ints(&[1, -1]));
        assert_eq!(alpha_gram(2).unwrap().get(0, 0), &rat(2));
        assert_eq!(alpha_gram(3).unwrap().get(0, 1), &rat(-1));
        for n in 2..=8 {
            assert!(gram_check(n).unwrap());
        }
    }

    #[test]
    fn rays_span_the_antidominant_chamber() {
        assert_eq!(
            ample_chamber_rays(2).unwrap(),
            vec![RatVec::from_ints(&[-1, 1])]
        );
        assert_eq!(
            ample_chamber_rays(3).unwrap(),
            vec![
                RatVec::from_ints(&[-2, 1, 1]),
                RatVec::from_ints(&[-1, -1, 2])
            ]
        );
        for n in 2..=6 {
            let a = alpha_map(n).unwrap();
            for (i, r) in ample_chamber_rays(n).unwrap().iter().enumerate() {
                for j in 0..n - 1 {
                    let expected = if i == j { rat(-(n as i64)) } else { rat(0) };
                    assert_eq!(r.dot(&a.column(j)), expected);
                }
            }
            assert_eq!(ray_cone(n).unwrap(), antidominant_cone(n).unwrap());
        }
    }

    #[test]
    fn discriminant_matches_walls() {
        let arr = lij_arrangement(3).unwrap();
        assert_eq!(arr.len(), 3);
        let complex = ChamberComplex::new(arr.clone());
        assert_eq!(complex.len(), 6);
        let p = SlicePoint::from_ints(&[1, 1, -2]).unwrap();
        assert_eq!(
            locate(&arr, complex.chambers(), p.coords()).unwrap(),
            Location::OnWall(vec![lij_index(&arr, 0, 1).unwrap()])
        );
    }

    #[test]
    fn unique_resolution() {
        for n in 2..=4 {
            let fam = SliceFamily::new(n).unwrap();
            let dec = fam.mov(1000).unwrap();
            assert_eq!(dec.resolution_count(), 1);
            assert!(dec.tiles());
            assert_eq!(
                dec.group().order() * dec.resolution_count(),
                dec.complex().len()
            );
            // The ample class lies in the open ray cone.
            assert!(ray_cone(n).unwrap().contains_in_interior(&ample_class(n)));
        }
    }

    #[test]
    fn exceptional_table() {
        let t = |s: &str| -> CartanType { s.parse().unwrap() };
        assert_eq!(
            slodowy_h2_type(t("B3"), OrbitTag::Subregular).unwrap(),
            t("A5")
        );
        assert_eq!(
            slodowy_h2_type(t("C4"), OrbitTag::Subregular).unwrap(),
            t("D5")
        );
        assert_eq!(
            slodowy_h2_type(t("C2"), OrbitTag::Subregular).unwrap(),
            t("A3")
        );
        assert_eq!(
            slodowy_h2_type(t("G2"), OrbitTag::Subregular).unwrap(),
            t("D4")
        );
        assert_eq!(
            slodowy_h2_type(t("F4"), OrbitTag::Subregular).unwrap(),
            t("E6")
        );
        assert_eq!(
            slodowy_h2_type(t("G2"), OrbitTag::G2EightDim).unwrap(),
            t("C3")
        );
        assert_eq!(
            slodowy_h2_type(t("A4"), OrbitTag::Default).unwrap(),
            t("A4")
        );
        assert_eq!(
            slodowy_h2_type(t("C4"), OrbitTag::CPairSplit(2)).unwrap(),
            t("D5")
        );
        assert!(slodowy_h2_type(t("C4"), OrbitTag::CPairSplit(1)).is_err());
        assert!(slodowy_h2_type(t("A4"), OrbitTag::Subregular).is_err());
        assert!(slodowy_h2_type(t("B3"), OrbitTag::G2EightDim).is_err());
        for tag in [
            "default",
            "subregular",
            "c-pair-equal",
            "c-pair-split-3",
            "g2-8dim",
        ] {
            let parsed: OrbitTag = tag.parse().unwrap();
            assert_eq!(alloc::string::ToString::to_string(&parsed), tag);
        }
    }
}
