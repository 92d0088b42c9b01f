//! Parabolic subgroups with a fixed Levi part, as chambers of a
//! Levi-restricted arrangement.
//!
//! Fix a root system `Φ` with simple roots `α_1, …, α_n` and a proper subset
//! `I` of vertices (the white vertices of a marked Dynkin diagram). The
//! subspace `K = {x : (x, α_i) = 0 for i ∈ I}` is coordinatized by the
//! pairings `u_j = (x, α_j)` for `j ∉ I`. Every positive root outside the
//! Levi subsystem `Φ_I` restricts to a nonzero functional on `K`; these
//! functionals form the restricted arrangement.
//!
//! A [`ParabolicDiagram`] is a base of `Φ` whose white positions form a base
//! of `Φ_I`; its black roots are positive exactly on one chamber. Twisting at
//! a black vertex applies the longest element of the parabolic subgroup
//! generated by that vertex and the white vertices of its component, which
//! moves the diagram across one wall.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::Signed;

use crate::arrangement::{build_arrangement, Arrangement, ChamberComplex};
use crate::exactlin::{RatMat, RatVec, Rational};
use crate::movcone::{GroupAction, MovError};
use crate::rootsys::{weyl_group, CartanType, Root, RootSystem, RootSystemError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParabolicError {
    #[error("Levi set must be a proper subset of 1..={rank}")]
    ImproperLevi { rank: usize },
    #[error("vertex {vertex} is not a black vertex of the diagram")]
    NotAWall { vertex: usize },
    #[error("diagram does not correspond to a chamber")]
    NoChamber,
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error(transparent)]
    Mov(#[from] MovError),
}

/// A Dynkin diagram with white (Levi) vertices; stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedDynkin {
    cartan_type: CartanType,
    levi: BTreeSet<usize>,
}

impl MarkedDynkin {
    /// `levi` holds zero-based vertex indices.
    pub fn new(cartan_type: CartanType, levi: &[usize]) -> Result<Self, ParabolicError> {
        let rank = cartan_type.rank();
        let levi: BTreeSet<usize> = levi.iter().copied().collect();
        if levi.len() >= rank || levi.iter().any(|&i| i >= rank) {
            return Err(ParabolicError::ImproperLevi { rank });
        }
        Ok(MarkedDynkin { cartan_type, levi })
    }

    /// `labels` holds one-based Bourbaki vertex labels.
    pub fn from_labels(cartan_type: CartanType, labels: &[usize]) -> Result<Self, ParabolicError> {
        if labels.contains(&0) {
            return Err(ParabolicError::ImproperLevi {
                rank: cartan_type.rank(),
            });
        }
        let zero: Vec<usize> = labels.iter().map(|l| l - 1).collect();
        Self::new(cartan_type, &zero)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn levi(&self) -> &BTreeSet<usize> {
        &self.levi
    }

    /// The black vertices, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.cartan_type.rank())
            .filter(|i| !self.levi.contains(i))
            .collect()
    }
}

/// A base of `Φ` with the positions of its Levi roots and its chamber.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicDiagram {
    pub base: Vec<Root>,
    pub white: Vec<usize>,
    pub chamber: usize,
}

impl ParabolicDiagram {
    pub fn black(&self) -> Vec<usize> {
        (0..self.base.len())
            .filter(|p| !self.white.contains(p))
            .collect()
    }

    pub fn black_roots(&self) -> Vec<Root> {
        self.black()
            .into_iter()
            .map(|p| self.base[p].clone())
            .collect()
    }

    pub fn white_roots(&self) -> Vec<Root> {
        self.white.iter().map(|&p| self.base[p].clone()).collect()
    }
}

/// Basis (in simple-root coordinates) of `K = {x : (x, α_i) = 0, i ∈ I}`.
pub fn levi_subspace(rs: &RootSystem, levi: &BTreeSet<usize>) -> Vec<RatVec> {
    let n = rs.rank();
    if levi.is_empty() {
        return (0..n).map(|i| RatVec::unit(n, i)).collect();
    }
    let rows: Vec<RatVec> = levi
        .iter()
        .map(|&i| RatVec::from_ints(&rs.gram_ints()[i]))
        .collect();
    RatMat::from_vecs(&rows, n).expect("shape").kernel()
}

/// Whether a root lies in the Levi subsystem `Φ_I`.
pub fn in_levi(root: &[i64], levi: &BTreeSet<usize>) -> bool {
    root.iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || levi.contains(&i))
}

/// `β` restricted to `K` in the coordinates `u_j, j ∉ I`.
pub fn restrict_root(root: &[i64], levi: &BTreeSet<usize>) -> RatVec {
    RatVec::from_ints(
        &root
            .iter()
            .enumerate()
            .filter(|(i, _)| !levi.contains(i))
            .map(|(_, &c)| c)
            .collect::<Vec<_>>(),
    )
}

/// The arrangement on `K` of all positive roots outside `Φ_I`.
pub fn restricted_arrangement(rs: &RootSystem, levi: &BTreeSet<usize>) -> Arrangement {
    let rows: Vec<RatVec> = rs
        .positive_roots()
        .iter()
        .filter(|r| !in_levi(r, levi))
        .map(|r| restrict_root(r, levi))
        .collect();
    build_arrangement(&rows, &[], rs.rank() - levi.len())
        .expect("roots outside the Levi subsystem restrict to nonzero functionals")
}

/// Connected component of `vertex` in the Dynkin diagram induced on `subset`.
fn component(t: &CartanType, subset: &BTreeSet<usize>, vertex: usize) -> BTreeSet<usize> {
    let edges = t.dynkin_edges();
    let mut seen = BTreeSet::from([vertex]);
    let mut stack = alloc::vec![vertex];
    while let Some(v) = stack.pop() {
        for &(a, b) in &edges {
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if subset.contains(&other) && seen.insert(other) {
                stack.push(other);
            }
        }
    }
    seen
}

fn reflect(rs: &RootSystem, root: &[i64], x: &[i64]) -> Root {
    let c = rs.cartan_integer(x, root);
    x.iter().zip(root).map(|(a, b)| a - c * b).collect()
}

/// Apply the longest element of the reflection group generated by the roots
/// `gens` (a base of a finite root subsystem) to every vector in `targets`.
///
/// Starting from a vector pairing to one with every generator, reflect in
/// any generator it pairs positively with until it pairs negatively with
/// all of them; the product of those reflections is the longest element.
fn apply_longest(rs: &RootSystem, gens: &[Root], targets: &[Root]) -> Vec<Root> {
    let k = gens.len();
    // y = Σ c_a gens[a] with (y, gens[b]) = 1 for all b.
    let gram = RatMat::from_rows(
        (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| Rational::from_integer(rs.pairing(&gens[a], &gens[b]).into()))
                    .collect()
            })
            .collect(),
        k,
    )
    .expect("square");
    let coeffs = gram
        .inverse()
        .expect("a base is linearly independent")
        .mul_vec(&RatVec::new(
            alloc::vec![Rational::from_integer(1.into()); k],
        ))
        .expect("shape");
    let n = rs.rank();
    let mut y: Vec<Rational> = alloc::vec![Rational::from_integer(0.into()); n];
    for (a, g) in gens.iter().enumerate() {
        for i in 0..n {
            y[i] += &coeffs[a] * Rational::from_integer(g[i].into());
        }
    }
    let gram_rows = rs.gram_ints();
    let pair = |y: &[Rational], g: &[i64]| -> Rational {
        let mut s = Rational::from_integer(0.into());
        for i in 0..n {
            for j in 0..n {
                if g[j] != 0 && gram_rows[i][j] != 0 {
                    s += &y[i] * Rational::from_integer((gram_rows[i][j] * g[j]).into());
                }
            }
        }
        s
    };
    let mut out = targets.to_vec();
    while let Some(a) = (0..k).find(|&a| pair(&y, &gens[a]).is_positive()) {
        let g = &gens[a];
        let coeff = pair(&y, g) * Rational::new(2.into(), rs.pairing(g, g).into());
        for i in 0..n {
            y[i] -= &coeff * Rational::from_integer(g[i].into());
        }
        for t in &mut out {
            *t = reflect(rs, g, t);
        }
    }
    out
}

/// Chamber whose witness makes every black root positive.
fn chamber_of(
    complex: &ChamberComplex,
    levi: &BTreeSet<usize>,
    base: &[Root],
    white: &[usize],
) -> Result<usize, ParabolicError> {
    let black: Vec<RatVec> = (0..base.len())
        .filter(|p| !white.contains(p))
        .map(|p| restrict_root(&base[p], levi))
        .collect();
    complex
        .chambers()
        .iter()
        .position(|c| black.iter().all(|b| b.dot(&c.witness).is_positive()))
        .ok_or(ParabolicError::NoChamber)
}

/// Everything needed to enumerate and twist diagrams for one `(Φ, I)`.
#[derive(Debug, Clone)]
pub struct LeviSetting {
    rs: RootSystem,
    marked: MarkedDynkin,
    complex: ChamberComplex,
}

impl LeviSetting {
    pub fn new(rs: RootSystem, levi: &[usize]) -> Result<Self, ParabolicError> {
        let marked = MarkedDynkin::new(rs.cartan_type(), levi)?;
        let complex = ChamberComplex::new(restricted_arrangement(&rs, marked.levi()));
        Ok(LeviSetting {
            rs,
            marked,
            complex,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn marked(&self) -> &MarkedDynkin {
        &self.marked
    }

    pub fn complex(&self) -> &ChamberComplex {
        &self.complex
    }

    pub fn arrangement(&self) -> &Arrangement {
        self.complex.arrangement()
    }

    /// The standard diagram: simple roots, white = `I`.
    pub fn standard(&self) -> Result<ParabolicDiagram, ParabolicError> {
        let base = self.rs.simple_roots();
        let white: Vec<usize> = self.marked.levi().iter().copied().collect();
        let chamber = chamber_of(&self.complex, self.marked.levi(), &base, &white)?;
        Ok(ParabolicDiagram {
            base,
            white,
            chamber,
        })
    }

    /// Twist `d` at the black position `vertex` (zero-based).
    pub fn twist(
        &self,
        d: &ParabolicDiagram,
        vertex: usize,
    ) -> Result<ParabolicDiagram, ParabolicError> {
        if vertex >= d.base.len() || d.white.contains(&vertex) {
            return Err(ParabolicError::NotAWall { vertex });
        }
        let mut subset: BTreeSet<usize> = d.white.iter().copied().collect();
        subset.insert(vertex);
        let comp = component(&self.marked.cartan_type, &subset, vertex);
        let gens: Vec<Root> = comp.iter().map(|&p| d.base[p].clone()).collect();
        let base = apply_longest(&self.rs, &gens, &d.base);
        let levi = self.marked.levi();
        let white: Vec<usize> = (0..base.len())
            .filter(|&p| in_levi(&base[p], levi))
            .collect();
        let chamber = chamber_of(&self.complex, levi, &base, &white)?;
        let before = &self.complex.chambers()[d.chamber].signs;
        let after = &self.complex.chambers()[chamber].signs;
        if before.differences(after).len() != 1 {
            return Err(ParabolicError::NotAWall { vertex });
        }
        Ok(ParabolicDiagram {
            base,
            white,
            chamber,
        })
    }

    /// One diagram per chamber, found by twisting outward from the standard
    /// diagram (breadth first, black vertices in order); sorted by chamber.
    pub fn parabolics(&self) -> Result<Vec<ParabolicDiagram>, ParabolicError> {
        let start = self.standard()?;
        let mut found: BTreeMap<usize, ParabolicDiagram> = BTreeMap::new();
        found.insert(start.chamber, start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some(d) = queue.pop_front() {
            for v in d.black() {
                let t = self.twist(&d, v)?;
                if let alloc::collections::btree_map::Entry::Vacant(slot) = found.entry(t.chamber) {
                    slot.insert(t.clone());
                    queue.push_back(t);
                }
            }
        }
        Ok(found.into_values().collect())
    }

    /// Weyl group elements preserving `span{α_i : i ∈ I}`, acting on the
    /// coordinates `u_j, j ∉ I` of `K` (distinct actions only).
    pub fn restricted_weyl(&self, order_cap: usize) -> Result<GroupAction, ParabolicError> {
        let w = weyl_group(&self.rs, order_cap)?;
        let levi = self.marked.levi();
        let j = self.marked.complement();
        let mut blocks = BTreeSet::new();
        for m in w.elements() {
            let preserves = levi.iter().all(|&i| {
                let image = m.mul_vec(&self.rs.simple_root(i));
                in_levi(&image, levi)
            });
            if !preserves {
                continue;
            }
            let action = self.rs.pairing_action(&m.to_rat());
            blocks.insert(action.select(&j, &j));
        }
        Ok(GroupAction::from_elements(
            j.len(),
            blocks.into_iter().collect(),
        )?)
    }

    /// Whether `d` satisfies the structural conditions of a diagram.
    pub fn is_valid(&self, d: &ParabolicDiagram) -> bool {
        let rs = &self.rs;
        let n = rs.rank();
        if d.base.len() != n || d.base.iter().any(|r| !rs.is_root(r)) {
            return false;
        }
        for a in 0..n {
            for b in 0..n {
                let e = rs.simple_root(a);
                let f = rs.simple_root(b);
                if rs.cartan_integer(&d.base[a], &d.base[b]) != rs.cartan_integer(&e, &f) {
                    return false;
                }
            }
        }
        // White roots generate exactly Φ_I under their reflections.
        let levi = self.marked.levi();
        let whites = d.white_roots();
        if whites.len() != levi.len() || whites.iter().any(|r| !in_levi(r, levi)) {
            return false;
        }
        let mut closure: BTreeSet<Root> = whites.iter().cloned().collect();
        let mut frontier: Vec<Root> = whites.clone();
        while let Some(r) = frontier.pop() {
            for g in &whites {
                let s = reflect(rs, g, &r);
                if closure.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        let levi_roots: BTreeSet<Root> = rs
            .roots()
            .into_iter()
            .filter(|r| in_levi(r, levi))
            .collect();
        if closure != levi_roots {
            return false;
        }
        let witness = &self.complex.chambers()[d.chamber].witness;
        d.black_roots()
            .iter()
            .all(|r| restrict_root(r, levi).dot(witness).is_positive())
    }
}

/// All parabolic diagrams with Levi set `levi` (zero-based).
pub fn parabolics_with_levi(
    rs: &RootSystem,
    levi: &[usize],
) -> Result<Vec<ParabolicDiagram>, ParabolicError> {
    LeviSetting::new(rs.clone(), levi)?.parabolics()
}

/// `α1+α2+α3`, `-α1-α2`, `2α1+α2`.
pub fn root_label(root: &[i64]) -> String {
    let mut s = String::new();
    for (i, &c) in root.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            let _ = write!(s, "{}", c.abs());
        }
        let _ = write!(s, "α{}", i + 1);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Text picture of a marked diagram: `○` white, `●` black.
///
/// Diagrams whose edges join consecutive vertices are drawn on one line with
/// `—`, `=` or `≡` for single, double and triple bonds; others are drawn as
/// a vertex list followed by the edges.
pub fn render_diagram(t: &CartanType, d: &ParabolicDiagram) -> String {
    let edges = t.dynkin_edges();
    let gram = t.gram_ints();
    let vertex = |p: usize| {
        let mark = if d.white.contains(&p) { '○' } else { '●' };
        alloc::format!("{mark} {}", root_label(&d.base[p]))
    };
    let bond = |a: usize, b: usize| {
        let lace = (gram[a][b] * gram[a][b]) / (gram[a][a] * gram[b][b] / 4);
        match lace {
            1 => "—",
            2 => "=",
            _ => "≡",
        }
    };
    let chain = edges.iter().all(|&(a, b)| b == a + 1) && edges.len() + 1 == d.base.len();
    let mut out = String::new();
    if chain {
        for p in 0..d.base.len() {
            if p > 0 {
                let _ = write!(out, " {} ", bond(p - 1, p));
            }
            out.push_str(&vertex(p));
        }
    } else {
        for p in 0..d.base.len() {
            let _ = writeln!(out, "{}: {}", p + 1, vertex(p));
        }
        let list: Vec<String> = edges
            .iter()
            .map(|&(a, b)| alloc::format!("{}{}{}", a + 1, bond(a, b), b + 1))
            .collect();
        let _ = write!(out, "edges: {}", list.join(" "));
    }
    out
}
