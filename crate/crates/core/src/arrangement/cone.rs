//! Full-dimensional polyhedral cones in an ambient subspace.
//!
//! A [`Cone`] is stored both ways: by generators (extreme rays plus a
//! lineality basis and its negatives) and by its canonical facet normals.
//! Facet normals are primitive integer covectors lying in the ambient
//! subspace, pointing inward, and sorted; two cones are equal exactly when
//! these lists are.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::canonical_direction;
use crate::exactlin::{primitive_integer, IntVec, RatMat, RatVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("generator {0} does not lie in the ambient subspace")]
    OffAmbient(usize),
    #[error("cone spans {found} dimensions, ambient subspace has {expected}")]
    NotFullDimensional { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    dim: usize,
    equalities: Vec<IntVec>,
    generators: Vec<IntVec>,
    facets: Vec<IntVec>,
}

/// Visit every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn rat_rows(rows: &[IntVec]) -> Vec<RatVec> {
    rows.iter().map(|r| RatVec::from_bigints(r)).collect()
}

fn rank_of(rows: &[RatVec], dim: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    RatMat::from_vecs(rows, dim).expect("shape").rank()
}

/// Kernel of the stacked rows, or the whole space when there are none.
fn kernel_of(rows: &[RatVec], dim: usize) -> Vec<RatVec> {
    if rows.is_empty() {
        return (0..dim).map(|i| RatVec::unit(dim, i)).collect();
    }
    RatMat::from_vecs(rows, dim).expect("shape").kernel()
}

/// Orient `v` so every row pairs nonnegatively with it, if possible.
fn orient(v: &RatVec, rows: &[RatVec]) -> Option<RatVec> {
    let vals: Vec<_> = rows.iter().map(|r| r.dot(v)).collect();
    if vals.iter().all(|x| !x.is_negative()) {
        Some(v.clone())
    } else if vals.iter().all(|x| !x.is_positive()) {
        Some(-v)
    } else {
        None
    }
}

fn check_dims(rows: &[RatVec], dim: usize) -> Result<(), ConeError> {
    match rows.iter().find(|r| r.dim() != dim) {
        Some(r) => Err(ConeError::DimensionMismatch {
            expected: dim,
            found: r.dim(),
        }),
        None => Ok(()),
    }
}

impl Cone {
    /// The cone generated by `generators` inside `{x : E·x = 0}`.
    ///
    /// `equalities` must already be canonical (see
    /// [`Arrangement::equalities`](super::Arrangement::equalities)) for
    /// comparisons between cones to be meaningful; [`Cone::canonical_equalities`]
    /// produces that form.
    pub fn from_generators(
        generators: &[RatVec],
        equalities: &[IntVec],
        dim: usize,
    ) -> Result<Cone, ConeError> {
        check_dims(generators, dim)?;
        let eq = rat_rows(equalities);
        check_dims(&eq, dim)?;
        for (i, g) in generators.iter().enumerate() {
            if eq.iter().any(|e| !e.dot(g).is_zero()) {
                return Err(ConeError::OffAmbient(i));
            }
        }
        let ambient = dim - rank_of(&eq, dim);
        let found = rank_of(generators, dim);
        if found != ambient {
            return Err(ConeError::NotFullDimensional {
                expected: ambient,
                found,
            });
        }
        let gens: BTreeSet<IntVec> = generators
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| primitive_integer(g.coords()))
            .collect();
        let gens: Vec<IntVec> = gens.into_iter().collect();
        let facets = facets_from_generators(&gens, &eq, dim, ambient);
        Ok(Cone {
            dim,
            equalities: equalities.to_vec(),
            generators: gens,
            facets,
        })
    }

    /// The cone `{x : f·x ≥ 0 for all f, E·x = 0}`; fails unless it is
    /// full-dimensional in the subspace.
    pub fn from_inequalities(
        inequalities: &[RatVec],
        equalities: &[IntVec],
        dim: usize,
    ) -> Result<Cone, ConeError> {
        check_dims(inequalities, dim)?;
        let eq = rat_rows(equalities);
        let ineq: Vec<RatVec> = inequalities
            .iter()
            .filter(|f| !f.is_zero())
            .cloned()
            .collect();
        let mut stacked = eq.clone();
        stacked.extend(ineq.iter().cloned());
        let lineality = kernel_of(&stacked, dim);
        let mut pointed_eq = eq.clone();
        pointed_eq.extend(lineality.iter().cloned());
        let pointed_dim = dim - rank_of(&pointed_eq, dim);

        let mut rays: BTreeSet<IntVec> = BTreeSet::new();
        if pointed_dim > 0 {
            for_each_subset(ineq.len(), pointed_dim - 1, |s| {
                let mut rows = pointed_eq.clone();
                rows.extend(s.iter().map(|&i| ineq[i].clone()));
                let k = kernel_of(&rows, dim);
                if k.len() != 1 {
                    return;
                }
                if let Some(r) = orient(&k[0], &ineq) {
                    rays.insert(primitive_integer(r.coords()));
                }
            });
        }
        let mut gens: Vec<RatVec> = rays.iter().map(|r| RatVec::from_bigints(r)).collect();
        for l in &lineality {
            gens.push(l.clone());
            gens.push(-l);
        }
        Cone::from_generators(&gens, equalities, dim)
    }

    /// Canonical integer form of equality rows (primitive reduced echelon rows).
    pub fn canonical_equalities(rows: &[RatVec], dim: usize) -> Vec<IntVec> {
        if rows.is_empty() {
            return Vec::new();
        }
        RatMat::from_vecs(rows, dim)
            .expect("shape")
            .row_space_basis()
            .iter()
            .map(|r| canonical_direction(r.coords()))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> &[IntVec] {
        &self.equalities
    }

    /// Sorted primitive generators (extreme rays and ± lineality basis for
    /// cones built from inequalities; the deduplicated input otherwise).
    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    /// Sorted primitive inward facet normals.
    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    pub fn facet_rows(&self) -> Vec<RatVec> {
        rat_rows(&self.facets)
    }

    pub fn equality_rows(&self) -> Vec<RatVec> {
        rat_rows(&self.equalities)
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        self.equality_rows().iter().all(|e| e.dot(x).is_zero())
            && self.facet_rows().iter().all(|f| !f.dot(x).is_negative())
    }

    pub fn contains_in_interior(&self, x: &RatVec) -> bool {
        self.equality_rows().iter().all(|e| e.dot(x).is_zero())
            && self.facet_rows().iter().all(|f| f.dot(x).is_positive())
    }
}

fn facets_from_generators(
    gens: &[IntVec],
    eq: &[RatVec],
    dim: usize,
    ambient: usize,
) -> Vec<IntVec> {
    if ambient == 0 {
        return Vec::new();
    }
    let g: Vec<RatVec> = rat_rows(gens);
    let mut facets: BTreeSet<IntVec> = BTreeSet::new();
    for_each_subset(g.len(), ambient - 1, |s| {
        let mut rows = eq.to_vec();
        rows.extend(s.iter().map(|&i| g[i].clone()));
        let k = kernel_of(&rows, dim);
        if k.len() != 1 {
            return;
        }
        if let Some(f) = orient(&k[0], &g) {
            // A normal vanishing on every generator would mean the cone is
            // not full-dimensional; that was ruled out by the caller.
            facets.insert(primitive_integer(f.coords()));
        }
    });
    facets.into_iter().collect()
}
