//! The movable cone as a fundamental domain of a finite group acting on the
//! chambers of an invariant arrangement.
//!
//! Given an arrangement, a finite linear group `W` that permutes its
//! hyperplanes, and a generic "ample" class, [`mov_decomposition`] picks a
//! connected set of chambers containing the ample chamber that meets every
//! `W`-orbit exactly once. Walls between two selected chambers are flops;
//! walls on the boundary are crossed only by applying an element of `W`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::arrangement::{
    Arrangement, ArrangementError, ChamberComplex, Hyperplane, Location, SignVector, WallEdge,
    WallGraph,
};
use crate::exactlin::{RatMat, RatVec};
use crate::rootsys::{RootSystem, RootSystemError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MovError {
    #[error("group element {element} does not preserve the arrangement")]
    NotInvariant { element: usize },
    #[error("ample class lies on hyperplanes {0:?}")]
    OnWall(Vec<usize>),
    #[error("group element {element} fixes chamber {chamber}")]
    FixedChamber { element: usize, chamber: usize },
    #[error("hyperplane {hyperplane} is not a facet of chamber {chamber}")]
    NotAFacet { chamber: usize, hyperplane: usize },
    #[error("hyperplane {hyperplane} is on the boundary of the movable cone at chamber {chamber}")]
    BoundaryWall { chamber: usize, hyperplane: usize },
    #[error("chamber {0} is not in the movable cone")]
    NotInMov(usize),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
}

/// A finite group of matrices acting on the arrangement's ambient space by
/// `x ↦ M·x`. The identity comes first.
///
/// When built by closure, each non-identity element records a factorization
/// `generator · earlier element`, which lets chamber permutations be
/// composed instead of recomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    dim: usize,
    elements: Vec<RatMat>,
    factors: Option<Vec<(usize, usize)>>,
    generators: Vec<RatMat>,
}

impl GroupAction {
    pub fn trivial(dim: usize) -> Self {
        GroupAction {
            dim,
            elements: alloc::vec![RatMat::identity(dim)],
            factors: Some(Vec::new()),
            generators: Vec::new(),
        }
    }

    /// An explicitly listed group. The list must contain the identity and be
    /// closed under multiplication; duplicates are removed and the identity
    /// moved to the front.
    pub fn from_elements(dim: usize, elements: Vec<RatMat>) -> Result<Self, MovError> {
        let id = RatMat::identity(dim);
        let mut set = BTreeSet::new();
        for m in &elements {
            if m.rows() != dim || m.cols() != dim {
                return Err(MovError::InvalidGroup(alloc::format!(
                    "element of shape {}×{} in dimension {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            set.insert(m.clone());
        }
        if !set.contains(&id) {
            return Err(MovError::InvalidGroup("identity missing".into()));
        }
        for a in &set {
            for b in &set {
                if !set.contains(&(a * b)) {
                    return Err(MovError::InvalidGroup("not closed under products".into()));
                }
            }
        }
        set.remove(&id);
        let mut list = alloc::vec![id];
        list.extend(set);
        Ok(GroupAction {
            dim,
            generators: list[1..].to_vec(),
            elements: list,
            factors: None,
        })
    }

    /// The group generated by `generators`, breadth first (elements within a
    /// layer sorted), failing beyond `cap` elements.
    pub fn generated_by(dim: usize, generators: Vec<RatMat>, cap: usize) -> Result<Self, MovError> {
        let id = RatMat::identity(dim);
        let mut index: BTreeMap<RatMat, usize> = BTreeMap::new();
        index.insert(id.clone(), 0);
        let mut elements = alloc::vec![id];
        let mut factors = Vec::new();
        let mut layer = alloc::vec![0usize];
        while !layer.is_empty() {
            let mut next: BTreeMap<RatMat, (usize, usize)> = BTreeMap::new();
            for &w in &layer {
                for (g, gen) in generators.iter().enumerate() {
                    let p = gen * &elements[w];
                    if !index.contains_key(&p) {
                        next.entry(p).or_insert((g, w));
                    }
                }
            }
            if elements.len() + next.len() > cap {
                return Err(MovError::RootSystem(RootSystemError::OrderCapExceeded {
                    cap,
                }));
            }
            layer = Vec::with_capacity(next.len());
            for (m, f) in next {
                index.insert(m.clone(), elements.len());
                layer.push(elements.len());
                elements.push(m);
                factors.push(f);
            }
        }
        Ok(GroupAction {
            dim,
            elements,
            factors: Some(factors),
            generators,
        })
    }

    /// The Weyl group of `rs` acting on pairing coordinates
    /// `u_j = (x, α_j)`.
    pub fn weyl_pairing(rs: &RootSystem, cap: usize) -> Result<Self, MovError> {
        let classical = rs.cartan_type().weyl_order();
        if classical > cap as u128 {
            return Err(RootSystemError::OrderCapExceeded { cap }.into());
        }
        let gens = rs
            .simple_roots()
            .iter()
            .map(|a| Ok(rs.pairing_action(&rs.reflection_int(a)?.to_rat())))
            .collect::<Result<Vec<_>, RootSystemError>>()?;
        Self::generated_by(rs.rank(), gens, cap)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[RatMat] {
        &self.elements
    }

    pub fn generators(&self) -> &[RatMat] {
        &self.generators
    }

    pub fn apply(&self, w: usize, x: &RatVec) -> RatVec {
        self.elements[w].mul_vec(x).expect("dimension checked")
    }
}

/// Index of the chamber containing `ample_class`.
pub fn ample_chamber(complex: &ChamberComplex, ample_class: &RatVec) -> Result<usize, MovError> {
    match complex.locate(ample_class)? {
        Location::Chamber(c) => Ok(c),
        Location::OnWall(hs) => Err(MovError::OnWall(hs)),
    }
}

/// Check that every element maps the ambient subspace and the hyperplane set
/// to themselves.
pub fn check_invariant(arr: &Arrangement, group: &GroupAction) -> Result<(), MovError> {
    if group.dim() != arr.dim() {
        return Err(ArrangementError::DimensionMismatch {
            expected: arr.dim(),
            found: group.dim(),
        }
        .into());
    }
    let target: BTreeSet<&Hyperplane> = arr.hyperplanes().iter().collect();
    let ambient_basis = if arr.equality_rows().is_empty() {
        (0..arr.dim()).map(|i| RatVec::unit(arr.dim(), i)).collect()
    } else {
        RatMat::from_vecs(arr.equality_rows(), arr.dim())
            .expect("shape")
            .kernel()
    };
    for (w, m) in group.elements().iter().enumerate() {
        for b in &ambient_basis {
            if !arr.on_ambient(&m.mul_vec(b).expect("dimension")) {
                return Err(MovError::NotInvariant { element: w });
            }
        }
        // {c·x = 0} pulls back to {c·M·x = 0}; over a group, checking the
        // pullbacks for every element is the same as checking images.
        let mut image = BTreeSet::new();
        for c in arr.covectors() {
            let pulled = m.vec_mul(c).expect("dimension");
            match arr.canonical_hyperplane(&pulled)? {
                Some(h) => {
                    image.insert(h);
                }
                None => return Err(MovError::NotInvariant { element: w }),
            }
        }
        if image.len() != target.len() || !image.iter().all(|h| target.contains(h)) {
            return Err(MovError::NotInvariant { element: w });
        }
    }
    Ok(())
}

/// `table[w][c]` is the chamber containing `w·(witness of c)`.
pub fn weyl_chamber_action(
    complex: &ChamberComplex,
    group: &GroupAction,
) -> Result<Vec<Vec<usize>>, MovError> {
    check_invariant(complex.arrangement(), group)?;
    let n = complex.len();
    let locate_image = |m: &RatMat| -> Result<Vec<usize>, MovError> {
        (0..n)
            .map(|c| {
                let x = m
                    .mul_vec(&complex.chambers()[c].witness)
                    .expect("dimension");
                match complex.locate(&x)? {
                    Location::Chamber(d) => Ok(d),
                    Location::OnWall(_) => Err(MovError::NotInvariant { element: 0 }),
                }
            })
            .collect()
    };
    let mut table: Vec<Vec<usize>> = Vec::with_capacity(group.order());
    table.push((0..n).collect());
    match &group.factors {
        Some(factors) => {
            let gens = group
                .generators
                .iter()
                .map(locate_image)
                .collect::<Result<Vec<_>, _>>()?;
            for &(g, parent) in factors {
                let row: Vec<usize> = table[parent].iter().map(|&c| gens[g][c]).collect();
                table.push(row);
            }
        }
        None => {
            for m in &group.elements[1..] {
                table.push(locate_image(m)?);
            }
        }
    }
    Ok(table)
}

/// Order in which walls are tried during the flood fill.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WallOrder {
    #[default]
    Ascending,
    Descending,
}

/// The movable cone and its decomposition into chambers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovDecomposition {
    complex: ChamberComplex,
    graph: WallGraph,
    group: GroupAction,
    table: Vec<Vec<usize>>,
    ample: usize,
    mov: Vec<usize>,
    flop_edges: Vec<WallEdge>,
    tiling: Vec<(usize, usize)>,
    order: WallOrder,
}

/// Select the movable cone by flood fill from the ample chamber.
///
/// Chambers are visited breadth first; at each chamber the walls are tried
/// by hyperplane index (in `order`) and a neighbor is taken whenever no
/// chamber of its orbit has been taken yet. Because `W` preserves the wall
/// graph and the graph is connected, the result meets every orbit once.
pub fn mov_decomposition(
    complex: ChamberComplex,
    group: GroupAction,
    ample_class: &RatVec,
    order: WallOrder,
) -> Result<MovDecomposition, MovError> {
    let table = weyl_chamber_action(&complex, &group)?;
    let n = complex.len();
    for (w, row) in table.iter().enumerate().skip(1) {
        if let Some(c) = (0..n).find(|&c| row[c] == c) {
            return Err(MovError::FixedChamber {
                element: w,
                chamber: c,
            });
        }
    }
    let ample = ample_chamber(&complex, ample_class)?;
    let graph = complex.wall_graph();
    let orbit_id: Vec<usize> = (0..n)
        .map(|c| {
            table
                .iter()
                .map(|row| row[c])
                .min()
                .expect("identity present")
        })
        .collect();

    let mut taken_orbits = BTreeSet::from([orbit_id[ample]]);
    let mut selected = BTreeSet::from([ample]);
    let mut queue = VecDeque::from([ample]);
    while let Some(c) = queue.pop_front() {
        let mut nbrs = graph.neighbors(c);
        if order == WallOrder::Descending {
            nbrs.reverse();
        }
        for (d, _) in nbrs {
            if taken_orbits.insert(orbit_id[d]) {
                selected.insert(d);
                queue.push_back(d);
            }
        }
    }
    let mov: Vec<usize> = selected.iter().copied().collect();
    let flop_edges = graph.restricted(&selected);

    let mut tiling = alloc::vec![(usize::MAX, usize::MAX); n];
    for (w, row) in table.iter().enumerate() {
        for &m in &mov {
            tiling[row[m]] = (w, m);
        }
    }
    debug_assert!(tiling.iter().all(|t| t.0 != usize::MAX));
    Ok(MovDecomposition {
        complex,
        graph,
        group,
        table,
        ample,
        mov,
        flop_edges,
        tiling,
        order,
    })
}

impl MovDecomposition {
    pub fn complex(&self) -> &ChamberComplex {
        &self.complex
    }

    pub fn arrangement(&self) -> &Arrangement {
        self.complex.arrangement()
    }

    pub fn wall_graph(&self) -> &WallGraph {
        &self.graph
    }

    pub fn group(&self) -> &GroupAction {
        &self.group
    }

    /// `chamber_action()[w][c]`: image of chamber `c` under element `w`.
    pub fn chamber_action(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn ample_chamber(&self) -> usize {
        self.ample
    }

    /// Chambers of the movable cone, ascending.
    pub fn mov_chambers(&self) -> &[usize] {
        &self.mov
    }

    pub fn resolution_count(&self) -> usize {
        self.mov.len()
    }

    /// Walls between two chambers of the movable cone.
    pub fn flop_edges(&self) -> &[WallEdge] {
        &self.flop_edges
    }

    /// For every chamber, the `(w, m)` with `w·m` equal to it and `m` in Mov.
    pub fn tiling(&self) -> &[(usize, usize)] {
        &self.tiling
    }

    pub fn wall_order(&self) -> WallOrder {
        self.order
    }

    /// Number of chambers covered by the translates `w(Mov)`, counting
    /// repeats. Equals the chamber count exactly when the translates tile.
    pub fn translate_count(&self) -> usize {
        self.table.len() * self.mov.len()
    }

    /// Whether `{w·m}` hits every chamber exactly once.
    pub fn tiles(&self) -> bool {
        let mut hit = alloc::vec![0usize; self.complex.len()];
        for row in &self.table {
            for &m in &self.mov {
                hit[row[m]] += 1;
            }
        }
        hit.iter().all(|&h| h == 1)
    }

    pub fn flop_graph_connected(&self) -> bool {
        let set: BTreeSet<usize> = self.mov.iter().copied().collect();
        self.graph.is_connected_on(&set)
    }

    /// The hyperplanes of the arrangement (the discriminant), in order.
    pub fn discriminant_hyperplanes(&self) -> &[Hyperplane] {
        self.arrangement().hyperplanes()
    }

    pub fn signs(&self, c: usize) -> &SignVector {
        &self.complex.chambers()[c].signs
    }
}

/// Cross the wall `hyperplane` of a Mov chamber, staying inside Mov.
pub fn flop(dec: &MovDecomposition, chamber: usize, hyperplane: usize) -> Result<usize, MovError> {
    if dec.mov.binary_search(&chamber).is_err() {
        return Err(MovError::NotInMov(chamber));
    }
    let next = dec
        .graph
        .cross(chamber, hyperplane)
        .ok_or(MovError::NotAFacet {
            chamber,
            hyperplane,
        })?;
    if dec.mov.binary_search(&next).is_ok() {
        Ok(next)
    } else {
        Err(MovError::BoundaryWall {
            chamber,
            hyperplane,
        })
    }
}

/// The reflection arrangement of `rs` in pairing coordinates: one
/// hyperplane per positive root `β`, with covector the coefficients of `β`.
pub fn reflection_arrangement(rs: &RootSystem) -> Arrangement {
    let rows: Vec<RatVec> = rs
        .positive_roots()
        .iter()
        .map(|r| RatVec::from_ints(r))
        .collect();
    crate::arrangement::build_arrangement(&rows, &[], rs.rank()).expect("roots are nonzero")
}

/// Whether `x` avoids every hyperplane.
pub fn is_generic(arr: &Arrangement, x: &RatVec) -> bool {
    arr.covectors().iter().all(|c| !c.dot(x).is_zero())
}
