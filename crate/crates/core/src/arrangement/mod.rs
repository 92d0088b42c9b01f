//! Central rational hyperplane arrangements.
//!
//! An [`Arrangement`] lives in an ambient subspace `L ⊆ Qᵈ` cut out by
//! integer equalities. Each hyperplane is stored by a canonical normal: the
//! orthogonal projection of the input covector onto `L`, scaled to a
//! primitive integer vector whose first nonzero entry is positive. Two
//! covectors that agree on `L` up to a positive or negative factor therefore
//! give the same [`Hyperplane`].
//!
//! Chambers are enumerated by inserting hyperplanes one at a time and
//! splitting every chamber the new hyperplane cuts; each chamber carries an
//! exact interior witness.

mod cone;
mod fan;
mod walls;

pub use cone::{Cone, ConeError};
pub use fan::{chamber_fan, is_arrangement_induced, Fan, InducedReport};
pub use walls::{wall_graph, WallEdge, WallGraph};

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};

use crate::exactlin::{
    primitive_integer, solve_strict_feasible, IntVec, LinAlgError, RatMat, RatVec, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArrangementError {
    #[error("covector {index} vanishes on the ambient subspace")]
    DegenerateHyperplane { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point does not satisfy the ambient equalities")]
    OffAmbient,
    #[error("chamber list does not match the arrangement: {0}")]
    InconsistentInput(String),
    #[error("malformed fan: {0}")]
    MalformedFan(String),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// Sign of a covector on a chamber. `Plus` sorts before `Minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    /// Multiply a value by `±1`.
    pub fn apply(self, x: Rational) -> Rational {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// One sign per hyperplane, written `"+-+"`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn flipped(&self, i: usize) -> SignVector {
        let mut s = self.0.clone();
        s[i] = s[i].flip();
        SignVector(s)
    }

    /// Positions where `self` and `other` disagree.
    pub fn differences(&self, other: &SignVector) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.0[i] != other.0[i])
            .collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = ArrangementError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                _ => Err(ArrangementError::InconsistentInput(alloc::format!(
                    "bad sign character {c:?}"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(SignVector)
    }
}

/// A hyperplane through the origin, given by its canonical normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    normal: IntVec,
}

impl Hyperplane {
    pub fn normal(&self) -> &IntVec {
        &self.normal
    }

    pub fn covector(&self) -> RatVec {
        RatVec::from_bigints(&self.normal)
    }

    pub fn normal_i64(&self) -> Vec<i64> {
        self.normal
            .iter()
            .map(|c| i64::try_from(c).expect("normal entry fits in i64"))
            .collect()
    }
}

/// Scale to primitive integers with the first nonzero entry positive.
pub fn canonical_direction(v: &[Rational]) -> IntVec {
    let mut p = primitive_integer(v);
    if p.iter()
        .find(|c| !c.is_zero())
        .is_some_and(Signed::is_negative)
    {
        p.iter_mut().for_each(|c| *c = -c.clone());
    }
    p
}

/// A deduplicated, canonically ordered set of hyperplanes inside the
/// subspace cut out by `equalities`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    equalities: Vec<IntVec>,
    hyperplanes: Vec<Hyperplane>,
    covectors: Vec<RatVec>,
    equality_rows: Vec<RatVec>,
    projector: Option<RatMat>,
}

/// Orthogonal projection onto `{x : E·x = 0}` as a matrix.
fn projector(equality_rows: &[RatVec], dim: usize) -> Result<Option<RatMat>, LinAlgError> {
    if equality_rows.is_empty() {
        return Ok(None);
    }
    let e = RatMat::from_vecs(equality_rows, dim)?;
    let basis = e.kernel();
    if basis.is_empty() {
        return Ok(Some(RatMat::zeros(dim, dim)));
    }
    let b = RatMat::from_columns(&basis, dim)?;
    let bt = b.transpose();
    let inner = (&bt * &b).inverse()?;
    Ok(Some(&(&b * &inner) * &bt))
}

/// Canonical integer rows spanning the same space as `rows`.
fn canonical_equalities(rows: &[RatVec], dim: usize) -> Result<Vec<IntVec>, LinAlgError> {
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    let m = RatMat::from_vecs(rows, dim)?;
    Ok(m.row_space_basis()
        .iter()
        .map(|r| canonical_direction(r.coords()))
        .collect())
}

/// Build an arrangement from covectors on the subspace `{x : e·x = 0}`.
///
/// The result does not depend on the order, sign or positive scaling of the
/// inputs.
pub fn build_arrangement(
    covectors: &[RatVec],
    equalities: &[RatVec],
    dim: usize,
) -> Result<Arrangement, ArrangementError> {
    for v in covectors.iter().chain(equalities) {
        if v.dim() != dim {
            return Err(ArrangementError::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
    }
    let equalities = canonical_equalities(equalities, dim)?;
    let equality_rows: Vec<RatVec> = equalities.iter().map(|e| RatVec::from_bigints(e)).collect();
    let proj = projector(&equality_rows, dim)?;
    let mut normals = BTreeSet::new();
    for (index, c) in covectors.iter().enumerate() {
        let p = match &proj {
            Some(p) => p.mul_vec(c)?,
            None => c.clone(),
        };
        if p.is_zero() {
            return Err(ArrangementError::DegenerateHyperplane { index });
        }
        normals.insert(canonical_direction(p.coords()));
    }
    let hyperplanes: Vec<Hyperplane> = normals
        .into_iter()
        .map(|normal| Hyperplane { normal })
        .collect();
    let covectors = hyperplanes.iter().map(Hyperplane::covector).collect();
    Ok(Arrangement {
        dim,
        equalities,
        hyperplanes,
        covectors,
        equality_rows,
        projector: proj,
    })
}

impl Arrangement {
    /// Convenience constructor from integer rows.
    pub fn from_int_rows(
        normals: &[&[i64]],
        equalities: &[&[i64]],
        dim: usize,
    ) -> Result<Arrangement, ArrangementError> {
        let n: Vec<RatVec> = normals.iter().map(|r| RatVec::from_ints(r)).collect();
        let e: Vec<RatVec> = equalities.iter().map(|r| RatVec::from_ints(r)).collect();
        build_arrangement(&n, &e, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the ambient subspace.
    pub fn ambient_rank(&self) -> usize {
        self.dim - self.equalities.len()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Canonical equality rows (primitive rows of the reduced echelon form).
    pub fn equalities(&self) -> &[IntVec] {
        &self.equalities
    }

    pub fn equality_rows(&self) -> &[RatVec] {
        &self.equality_rows
    }

    pub fn covector(&self, i: usize) -> &RatVec {
        &self.covectors[i]
    }

    pub fn covectors(&self) -> &[RatVec] {
        &self.covectors
    }

    /// Index of the hyperplane with the given canonical normal.
    pub fn position(&self, h: &Hyperplane) -> Option<usize> {
        self.hyperplanes.binary_search(h).ok()
    }

    /// Index of the hyperplane `{c·x = 0}` for an arbitrary covector `c`.
    pub fn position_of_covector(&self, c: &RatVec) -> Result<Option<usize>, ArrangementError> {
        let h = self
            .canonical_hyperplane(c)?
            .ok_or(ArrangementError::DegenerateHyperplane { index: 0 })?;
        Ok(self.position(&h))
    }

    /// The hyperplane `{c·x = 0}` of the ambient subspace in canonical form,
    /// or `None` when `c` vanishes on the subspace.
    pub fn canonical_hyperplane(&self, c: &RatVec) -> Result<Option<Hyperplane>, ArrangementError> {
        if c.dim() != self.dim {
            return Err(ArrangementError::DimensionMismatch {
                expected: self.dim,
                found: c.dim(),
            });
        }
        let p = match &self.projector {
            Some(m) => m.mul_vec(c)?,
            None => c.clone(),
        };
        Ok((!p.is_zero()).then(|| Hyperplane {
            normal: canonical_direction(p.coords()),
        }))
    }

    pub fn on_ambient(&self, p: &RatVec) -> bool {
        p.dim() == self.dim && self.equality_rows.iter().all(|e| e.dot(p).is_zero())
    }

    /// Signs of every hyperplane at `p`; `None` entries are zero.
    pub fn sign_pattern(&self, p: &RatVec) -> Vec<Option<Sign>> {
        self.covectors
            .iter()
            .map(|c| {
                let v = c.dot(p);
                if v.is_positive() {
                    Some(Sign::Plus)
                } else if v.is_negative() {
                    Some(Sign::Minus)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Strict rows `sign_i · cᵢ` for a sign vector.
    pub fn oriented_rows(&self, signs: &SignVector) -> Vec<RatVec> {
        self.covectors
            .iter()
            .zip(signs.signs())
            .map(|(c, s)| match s {
                Sign::Plus => c.clone(),
                Sign::Minus => -c,
            })
            .collect()
    }

    /// Some point in the interior of the ambient subspace.
    fn ambient_point(&self) -> RatVec {
        if self.equality_rows.is_empty() {
            return RatVec::zeros(self.dim);
        }
        let e = RatMat::from_vecs(&self.equality_rows, self.dim).expect("shape");
        e.kernel()
            .into_iter()
            .next()
            .map(|v| v.normalize_max_abs())
            .unwrap_or_else(|| RatVec::zeros(self.dim))
    }
}

/// An open chamber: a realizable sign vector and an interior point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chamber {
    pub signs: SignVector,
    pub witness: RatVec,
}

/// Enumerate all chambers, sorted by sign vector.
///
/// Hyperplanes are inserted in order. The chambers cut by a new hyperplane
/// `H` are exactly those met by chambers of the previous arrangement
/// restricted to `H`, which are computed recursively (one dimension lower).
/// A restricted witness `p` lies on `H` and strictly off every earlier
/// hyperplane, so `p ± ε·n_H` for a small exact `ε` witnesses both halves.
/// Chambers not cut keep their witness. No linear programs are solved.
pub fn chambers(arr: &Arrangement) -> Vec<Chamber> {
    finish(insert_all(arr))
}

fn finish(raw: Vec<(Vec<Sign>, RatVec)>) -> Vec<Chamber> {
    let mut out: Vec<Chamber> = raw
        .into_iter()
        .map(|(s, witness)| Chamber {
            signs: SignVector(s),
            witness: witness.normalize_max_abs(),
        })
        .collect();
    out.sort();
    out
}

fn sign_of(v: &Rational) -> Option<Sign> {
    if v.is_positive() {
        Some(Sign::Plus)
    } else if v.is_negative() {
        Some(Sign::Minus)
    } else {
        None
    }
}

fn insert_all(arr: &Arrangement) -> Vec<(Vec<Sign>, RatVec)> {
    let mut current = alloc::vec![(Vec::<Sign>::new(), arr.ambient_point())];
    for (k, c) in arr.covectors.iter().enumerate() {
        let old = &arr.covectors[..k];
        // Chambers of the earlier hyperplanes restricted to H_k, keyed by
        // their signs on the earlier hyperplanes.
        let mut eqs = arr.equality_rows.clone();
        eqs.push(c.clone());
        let restricted = build_arrangement(old, &eqs, arr.dim)
            .expect("distinct hyperplanes restrict to nonzero covectors");
        let mut cut: BTreeMap<Vec<Sign>, RatVec> = BTreeMap::new();
        for (_, p) in insert_all(&restricted) {
            let signs: Vec<Sign> = old
                .iter()
                .map(|o| {
                    sign_of(&o.dot(&p)).expect("restricted witness avoids earlier hyperplanes")
                })
                .collect();
            cut.insert(signs, p);
        }
        let mut next = Vec::with_capacity(current.len() + cut.len());
        for (signs, witness) in current {
            match cut.get(&signs) {
                Some(p) => {
                    let eps = safe_step(old, p, c);
                    let step = c.scale(&eps);
                    for (side, w) in [(Sign::Plus, p + &step), (Sign::Minus, p - &step)] {
                        let mut s = signs.clone();
                        s.push(side);
                        next.push((s, w));
                    }
                }
                None => {
                    let side = sign_of(&c.dot(&witness))
                        .expect("an uncut chamber lies strictly on one side");
                    let mut s = signs;
                    s.push(side);
                    next.push((s, witness));
                }
            }
        }
        current = next;
    }
    current
}

/// A step `ε > 0` with `|ε·(o·u)| < |o·p|` for every `o`, so moving from `p`
/// along `±u` by `ε` changes none of the signs of `old`.
fn safe_step(old: &[RatVec], p: &RatVec, u: &RatVec) -> Rational {
    let mut eps: Option<Rational> = None;
    for o in old {
        let du = o.dot(u);
        if du.is_zero() {
            continue;
        }
        let bound = (o.dot(p) / du).abs() / Rational::from_integer(2.into());
        eps = Some(match eps {
            Some(e) if e <= bound => e,
            _ => bound,
        });
    }
    eps.unwrap_or_else(|| Rational::from_integer(1.into()))
}

/// The same enumeration with one strict feasibility problem per potential
/// split, as in the textbook insertion algorithm. Much slower; kept as an
/// independent reference for testing [`chambers`].
pub fn chambers_by_feasibility(arr: &Arrangement) -> Vec<Chamber> {
    let mut current = alloc::vec![(Vec::<Sign>::new(), arr.ambient_point())];
    for (k, c) in arr.covectors.iter().enumerate() {
        let mut next = Vec::with_capacity(current.len() * 2);
        for (signs, witness) in current {
            let v = c.dot(&witness);
            let mut rows = arr.oriented_rows(&SignVector(signs.clone()));
            rows.truncate(k);
            for side in [Sign::Plus, Sign::Minus] {
                let w = if sign_of(&v) == Some(side) {
                    Some(witness.clone())
                } else {
                    rows.push(match side {
                        Sign::Plus => c.clone(),
                        Sign::Minus => -c,
                    });
                    let res = solve_strict_feasible(&rows, &arr.equality_rows, arr.dim)
                        .expect("rows have the arrangement dimension");
                    rows.pop();
                    res.into_witness()
                };
                if let Some(w) = w {
                    let mut s = signs.clone();
                    s.push(side);
                    next.push((s, w));
                }
            }
        }
        current = next;
    }
    finish(current)
}

/// Where a point sits relative to the arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Chamber(usize),
    /// Indices of every hyperplane containing the point.
    OnWall(Vec<usize>),
}

/// Classify `p` against a chamber list produced by [`chambers`].
pub fn locate(
    arr: &Arrangement,
    chs: &[Chamber],
    p: &RatVec,
) -> Result<Location, ArrangementError> {
    if p.dim() != arr.dim {
        return Err(ArrangementError::DimensionMismatch {
            expected: arr.dim,
            found: p.dim(),
        });
    }
    if !arr.on_ambient(p) {
        return Err(ArrangementError::OffAmbient);
    }
    let pattern = arr.sign_pattern(p);
    let zeros: Vec<usize> = (0..pattern.len())
        .filter(|&i| pattern[i].is_none())
        .collect();
    if !zeros.is_empty() {
        return Ok(Location::OnWall(zeros));
    }
    let signs = SignVector(pattern.into_iter().map(Option::unwrap).collect());
    chs.binary_search_by(|c| c.signs.cmp(&signs))
        .map(Location::Chamber)
        .map_err(|_| {
            ArrangementError::InconsistentInput(alloc::format!("no chamber with signs {signs}"))
        })
}

/// Arrangement, chambers and a sign-vector index bundled together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberComplex {
    arrangement: Arrangement,
    chambers: Vec<Chamber>,
    index: BTreeMap<SignVector, usize>,
}

impl ChamberComplex {
    pub fn new(arrangement: Arrangement) -> Self {
        let chambers = chambers(&arrangement);
        let index = chambers
            .iter()
            .enumerate()
            .map(|(i, c)| (c.signs.clone(), i))
            .collect();
        ChamberComplex {
            arrangement,
            chambers,
            index,
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn find(&self, signs: &SignVector) -> Option<usize> {
        self.index.get(signs).copied()
    }

    pub fn locate(&self, p: &RatVec) -> Result<Location, ArrangementError> {
        locate(&self.arrangement, &self.chambers, p)
    }

    /// Chamber across hyperplane `h`, if `h` is a wall of chamber `c`.
    pub fn neighbor(&self, c: usize, h: usize) -> Option<usize> {
        self.find(&self.chambers[c].signs.flipped(h))
    }

    /// Hyperplanes spanning a facet of chamber `c`, ascending.
    pub fn facet_hyperplanes(&self, c: usize) -> Vec<usize> {
        (0..self.arrangement.len())
            .filter(|&h| self.neighbor(c, h).is_some())
            .collect()
    }

    /// Inward primitive facet normals of chamber `c`, sorted.
    pub fn facet_normals(&self, c: usize) -> Vec<IntVec> {
        let signs = &self.chambers[c].signs;
        let mut out: Vec<IntVec> = self
            .facet_hyperplanes(c)
            .into_iter()
            .map(|h| {
                let n = self.arrangement.hyperplanes[h].normal.clone();
                match signs.get(h) {
                    Sign::Plus => n,
                    Sign::Minus => n.into_iter().map(|x| -x).collect(),
                }
            })
            .collect();
        out.sort();
        out
    }

    pub fn wall_graph(&self) -> WallGraph {
        walls::graph_from_index(&self.arrangement, &self.chambers, &self.index)
    }
}

/// Renders a rational as `num/den` (always with a denominator).
pub fn rational_fraction(r: &Rational) -> String {
    alloc::format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, rat};
    use alloc::string::ToString;
    use alloc::vec;

    fn arr(normals: &[&[i64]], eqs: &[&[i64]], dim: usize) -> Arrangement {
        Arrangement::from_int_rows(normals, eqs, dim).unwrap()
    }

    fn a_type(n: usize) -> Arrangement {
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[j] = -1;
                rows.push(v);
            }
        }
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let ones = vec![1i64; n];
        arr(&refs, &[&ones], n)
    }

    #[test]
    fn proportional_inputs_dedupe() {
        let a = arr(&[&[1, -1], &[-1, 1], &[2, -2]], &[], 2);
        assert_eq!(a.len(), 1);
        assert_eq!(a.hyperplanes()[0].normal_i64(), vec![1, -1]);
    }

    #[test]
    fn projection_onto_ambient_subspace() {
        // On x + y + z = 0 the covectors (1,0,0) and (0,-1,-1) agree.
        let a = arr(&[&[1, 0, 0], &[0, -1, -1]], &[&[1, 1, 1]], 3);
        assert_eq!(a.len(), 1);
        assert_eq!(a.hyperplanes()[0].normal_i64(), vec![2, -1, -1]);
        assert_eq!(
            Arrangement::from_int_rows(&[&[1, 1, 1]], &[&[1, 1, 1]], 3),
            Err(ArrangementError::DegenerateHyperplane { index: 0 })
        );
    }

    #[test]
    fn input_order_is_irrelevant() {
        let a = arr(&[&[1, 0], &[0, 1], &[1, 1]], &[], 2);
        let b = arr(&[&[-3, -3], &[0, 2], &[1, 0]], &[], 2);
        assert_eq!(a, b);
        assert_eq!(chambers(&a), chambers(&b));
    }

    #[test]
    fn empty_arrangement_has_one_chamber() {
        let a = arr(&[], &[], 3);
        let c = chambers(&a);
        assert_eq!(c.len(), 1);
        assert!(c[0].signs.is_empty());
    }

    #[test]
    fn a_type_chamber_counts() {
        for (n, expected) in [(2, 2), (3, 6), (4, 24)] {
            let a = a_type(n);
            assert_eq!(a.len(), n * (n - 1) / 2);
            let chs = chambers(&a);
            assert_eq!(chs.len(), expected);
            for ch in &chs {
                assert!(a.on_ambient(&ch.witness));
                let pattern = a.sign_pattern(&ch.witness);
                assert!(pattern
                    .iter()
                    .zip(ch.signs.signs())
                    .all(|(p, s)| *p == Some(*s)));
            }
        }
    }

    #[test]
    fn three_lines_give_six_chambers_sorted() {
        let a = arr(&[&[1, 0], &[0, 1], &[1, 1]], &[], 2);
        let chs = chambers(&a);
        let names: Vec<String> = chs.iter().map(|c| alloc::format!("{}", c.signs)).collect();
        // Normals sort as (0,1), (1,0), (1,1); the two unrealizable patterns
        // are (v>0, u>0, u+v<0) and (v<0, u<0, u+v>0).
        assert_eq!(names, ["+++", "+-+", "+--", "-++", "-+-", "---"]);
    }

    #[test]
    fn locate_points() {
        let a = arr(&[&[1, 0], &[0, 1], &[1, 1]], &[], 2);
        let chs = chambers(&a);
        for (k, c) in chs.iter().enumerate() {
            assert_eq!(locate(&a, &chs, &c.witness).unwrap(), Location::Chamber(k));
        }
        assert_eq!(
            locate(&a, &chs, &RatVec::zeros(2)).unwrap(),
            Location::OnWall(vec![0, 1, 2])
        );
        let p = RatVec::new(vec![rat(1), frac(-1, 1)]);
        assert_eq!(locate(&a, &chs, &p).unwrap(), Location::OnWall(vec![2]));

        let a3 = a_type(3);
        let c3 = chambers(&a3);
        assert_eq!(
            locate(&a3, &c3, &RatVec::from_ints(&[1, 1, 1])),
            Err(ArrangementError::OffAmbient)
        );
        // (1, 1, −2) is orthogonal to α_1 = e_1 − e_2 and to no other root.
        let loc = locate(&a3, &c3, &RatVec::from_ints(&[1, 1, -2])).unwrap();
        let on: Vec<Vec<i64>> = match loc {
            Location::OnWall(ix) => ix
                .iter()
                .map(|&i| a3.hyperplanes()[i].normal_i64())
                .collect(),
            Location::Chamber(_) => panic!("expected a wall"),
        };
        assert_eq!(on, vec![vec![1, -1, 0]]);
        // α_1 itself pairs nonzero with every root of A_2.
        assert!(matches!(
            locate(&a3, &c3, &RatVec::from_ints(&[1, -1, 0])).unwrap(),
            Location::Chamber(_)
        ));
    }

    #[test]
    fn insertion_matches_feasibility_reference() {
        let cases: Vec<Arrangement> = vec![
            a_type(4),
            arr(
                &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, -1, 2]],
                &[],
                3,
            ),
            arr(
                &[&[1, 2, 0, -1], &[0, 1, 1, 1], &[3, 0, -1, 0], &[1, 1, 1, 1]],
                &[&[1, 0, 1, 0]],
                4,
            ),
            arr(&[&[1, 0], &[0, 1]], &[], 2),
        ];
        for a in cases {
            let fast = chambers(&a);
            let slow = chambers_by_feasibility(&a);
            let fs: Vec<_> = fast.iter().map(|c| c.signs.clone()).collect();
            let ss: Vec<_> = slow.iter().map(|c| c.signs.clone()).collect();
            assert_eq!(fs, ss);
            for c in &fast {
                assert_eq!(c.witness.max_abs(), rat(1));
            }
        }
    }

    #[test]
    fn sign_vector_round_trip() {
        let s: SignVector = "+-+".parse().unwrap();
        assert_eq!(s.to_string(), "+-+");
        assert_eq!(s.flipped(1).to_string(), "+++");
        assert!("+x".parse::<SignVector>().is_err());
    }
}
