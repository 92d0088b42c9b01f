use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{RootSystem, RootSystemError};
use crate::exactlin::{IntMat, RatMat, RatVec, Rational};

/// Largest group enumerated by default (the order of `W(E_6)`).
pub const DEFAULT_ORDER_CAP: usize = 51_840;

/// A Weyl group as an explicit list of integer matrices acting on
/// simple-root coordinates.
///
/// In generators-only mode `elements` holds just the identity and the
/// simple reflections and `is_complete` is false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylGroup {
    elements: Vec<IntMat>,
    generators: Vec<IntMat>,
    complete: bool,
}

impl WeylGroup {
    /// Simple reflections only; useful for types too large to enumerate.
    pub fn generators_only(rs: &RootSystem) -> Self {
        let generators = simple_reflections(rs);
        let mut elements = alloc::vec![IntMat::identity(rs.rank())];
        elements.extend(generators.iter().cloned());
        WeylGroup {
            elements,
            generators,
            complete: false,
        }
    }

    /// Elements in BFS order over the simple reflections; identity first.
    pub fn elements(&self) -> &[IntMat] {
        &self.elements
    }

    pub fn generators(&self) -> &[IntMat] {
        &self.generators
    }

    /// Number of enumerated elements (the group order when complete).
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, IntMat::n)
    }

    pub fn rational_elements(&self) -> Vec<RatMat> {
        self.elements.iter().map(IntMat::to_rat).collect()
    }
}

fn simple_reflections(rs: &RootSystem) -> Vec<IntMat> {
    rs.simple_roots()
        .iter()
        .map(|a| rs.reflection_int(a).expect("simple roots are roots"))
        .collect()
}

/// Reflection in `root` as a rational matrix on simple-root coordinates.
pub fn reflection(rs: &RootSystem, root: &RatVec) -> Result<RatMat, RootSystemError> {
    let ints = integral_root(rs, root)?;
    Ok(rs.reflection_int(&ints)?.to_rat())
}

fn integral_root(rs: &RootSystem, root: &RatVec) -> Result<Vec<i64>, RootSystemError> {
    if root.dim() != rs.rank() {
        return Err(RootSystemError::DimensionMismatch {
            expected: rs.rank(),
            found: root.dim(),
        });
    }
    root.coords()
        .iter()
        .map(|c| {
            if c.is_integer() {
                i64::try_from(c.to_integer()).map_err(|_| RootSystemError::NotARoot)
            } else {
                Err(RootSystemError::NotARoot)
            }
        })
        .collect()
}

/// Close a set of generators under multiplication, breadth first.
///
/// Within each BFS layer new elements are sorted by their entry lists, so
/// the output order depends only on the generating set. Fails once more
/// than `cap` elements have been found.
pub fn enumerate_group<T, F>(
    identity: T,
    generators: &[T],
    mul: F,
    cap: usize,
) -> Result<Vec<T>, RootSystemError>
where
    T: Ord + Clone,
    F: Fn(&T, &T) -> T,
{
    let mut seen: BTreeSet<T> = BTreeSet::new();
    seen.insert(identity.clone());
    let mut out = alloc::vec![identity.clone()];
    let mut layer = alloc::vec![identity];
    while !layer.is_empty() {
        let mut next: BTreeSet<T> = BTreeSet::new();
        for w in &layer {
            for g in generators {
                let p = mul(g, w);
                if !seen.contains(&p) {
                    next.insert(p);
                }
            }
        }
        if out.len() + next.len() > cap {
            return Err(RootSystemError::OrderCapExceeded { cap });
        }
        seen.extend(next.iter().cloned());
        layer = next.into_iter().collect();
        out.extend(layer.iter().cloned());
    }
    Ok(out)
}

/// Enumerate the whole Weyl group, refusing groups larger than `order_cap`.
pub fn weyl_group(rs: &RootSystem, order_cap: usize) -> Result<WeylGroup, RootSystemError> {
    let classical = rs.cartan_type().weyl_order();
    if classical > order_cap as u128 {
        return Err(RootSystemError::OrderCapExceeded { cap: order_cap });
    }
    let generators = simple_reflections(rs);
    let elements = enumerate_group(
        IntMat::identity(rs.rank()),
        &generators,
        |a, b| a * b,
        order_cap,
    )?;
    Ok(WeylGroup {
        elements,
        generators,
        complete: true,
    })
}

/// The orbit `{w·v}` as a sorted set. Requires a complete group.
pub fn weyl_orbit(w: &WeylGroup, v: &RatVec) -> Result<Vec<RatVec>, RootSystemError> {
    if v.dim() != w.dim() {
        return Err(RootSystemError::DimensionMismatch {
            expected: w.dim(),
            found: v.dim(),
        });
    }
    let mut orbit = BTreeSet::new();
    for m in &w.elements {
        orbit.insert(apply_int(m, v));
    }
    Ok(orbit.into_iter().collect())
}

/// `M·v` for an integer matrix and a rational vector.
pub fn apply_int(m: &IntMat, v: &RatVec) -> RatVec {
    let n = m.n();
    (0..n)
        .map(|i| {
            let mut s = Rational::zero();
            for j in 0..n {
                let e = m.get(i, j);
                if e != 0 {
                    s += Rational::from_integer(e.into()) * &v[j];
                }
            }
            s
        })
        .collect()
}

/// Index of each element's inverse in the element list.
pub fn inverse_table(w: &WeylGroup) -> Vec<usize> {
    let index: BTreeMap<&IntMat, usize> =
        w.elements.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let id = IntMat::identity(w.dim());
    w.elements
        .iter()
        .map(|m| {
            w.elements
                .iter()
                .position(|x| (m * x) == id)
                .map(|p| index[&w.elements[p]])
                .expect("group is closed under inverses")
        })
        .collect()
}

impl RootSystem {
    /// `True` when `x` pairs positively with every simple root.
    pub fn is_dominant_regular(&self, x: &RatVec) -> bool {
        let g = self.form().gram();
        let gx = g.mul_vec(x).expect("dimension");
        gx.coords().iter().all(|c| c > &Rational::zero())
    }

    /// A vector pairing to one with every simple root.
    pub fn rho_dual(&self) -> RatVec {
        let ginv = self.form().gram().inverse().expect("nondegenerate");
        ginv.mul_vec(&RatVec::new(alloc::vec![Rational::one(); self.rank()]))
            .expect("dimension")
    }
}
