//! Root systems of types A–G and their Weyl groups.
//!
//! Everything is expressed in simple-root coordinates: the `i`-th simple
//! root is the `i`-th standard basis vector and a root is an integer vector
//! of coefficients. The bilinear form is the Cartan matrix symmetrized with
//! the smallest positive integer symmetrizer, so in simply-laced types it is
//! the Cartan matrix itself.
//!
//! Simple roots follow Bourbaki numbering.

mod weyl;

pub use weyl::{
    apply_int, enumerate_group, inverse_table, reflection, weyl_group, weyl_orbit, WeylGroup,
    DEFAULT_ORDER_CAP,
};

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::str::FromStr;

use crate::exactlin::{BilinearForm, IntMat, RatMat, RatVec, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSystemError {
    #[error("invalid Cartan type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },
    #[error("cannot parse Cartan type {0:?}")]
    Unparsable(alloc::string::String),
    #[error("vector is not a root of the system")]
    NotARoot,
    #[error("group order exceeds the enumeration cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("A-type realization needs n >= 2, got {0}")]
    RealizationTooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        Some(match c.to_ascii_uppercase() {
            'A' => Letter::A,
            'B' => Letter::B,
            'C' => Letter::C,
            'D' => Letter::D,
            'E' => Letter::E,
            'F' => Letter::F,
            'G' => Letter::G,
            _ => return None,
        })
    }
}

/// A Cartan type `X_n`.
///
/// Admissible ranks: A ≥ 1, B ≥ 2, C ≥ 2, D ≥ 4, E 6–8, F 4, G 2.
/// `D_3` is not accepted as an alias of `A_3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    letter: Letter,
    rank: usize,
}

impl CartanType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::B | Letter::C => rank >= 2,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if ok {
            Ok(CartanType { letter, rank })
        } else {
            Err(RootSystemError::InvalidType {
                letter: letter.as_char(),
                rank,
            })
        }
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.letter, Letter::A | Letter::D | Letter::E)
    }

    /// Half squared lengths `(α_i, α_i)/2` of the simple roots.
    fn half_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.letter {
            Letter::A | Letter::D | Letter::E => alloc::vec![1; n],
            Letter::B => (0..n).map(|i| if i + 1 < n { 2 } else { 1 }).collect(),
            Letter::C => (0..n).map(|i| if i + 1 < n { 1 } else { 2 }).collect(),
            Letter::F => alloc::vec![2, 2, 1, 1],
            Letter::G => alloc::vec![1, 3],
        }
    }

    /// Dynkin diagram edges `(i, j)` with `i < j`, zero-based.
    pub fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.letter {
            Letter::A | Letter::B | Letter::C | Letter::F | Letter::G => {
                (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
            }
            Letter::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Letter::E => {
                let mut e = alloc::vec![(0, 2), (1, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// Symmetrized Cartan matrix `(α_i, α_j)`.
    pub fn gram_ints(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let d = self.half_lengths();
        let mut g = alloc::vec![alloc::vec![0i64; n]; n];
        for i in 0..n {
            g[i][i] = 2 * d[i];
        }
        for (i, j) in self.dynkin_edges() {
            // Adjacent simple roots pair to −max(d_i, d_j) in every type.
            let v = -d[i].max(d[j]);
            g[i][j] = v;
            g[j][i] = v;
        }
        g
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.letter {
            Letter::A => n * (n + 1) / 2,
            Letter::B | Letter::C => n * n,
            Letter::D => n * (n - 1),
            Letter::E => [36, 63, 120][n - 6],
            Letter::F => 24,
            Letter::G => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.letter {
            Letter::A => fact(n + 1),
            Letter::B | Letter::C => (1u128 << n) * fact(n),
            Letter::D => (1u128 << (n - 1)) * fact(n),
            Letter::E => [51_840, 2_903_040, 696_729_600][self.rank - 6],
            Letter::F => 1152,
            Letter::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = RootSystemError;

    /// Accepts `A4`, `a4`, `A_4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootSystemError::Unparsable(s.into());
        let mut chars = s.trim().chars();
        let letter = chars.next().and_then(Letter::from_char).ok_or_else(bad)?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        CartanType::new(letter, rank)
    }
}

/// A root as integer coefficients in the simple-root basis.
pub type Root = Vec<i64>;

/// A crystallographic root system in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    gram: Vec<Vec<i64>>,
    cartan: RatMat,
    form: BilinearForm,
    positive_roots: Vec<Root>,
}

/// Build the root system of type `t` by closing the simple roots under
/// simple reflections. Positive roots are ordered by height, then with
/// larger leading coefficients first (so `α_1` precedes `α_2`).
pub fn build_root_system(t: CartanType) -> RootSystem {
    let n = t.rank();
    let gram = t.gram_ints();
    let cartan_rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::new((2 * gram[i][j]).into(), gram[i][i].into()))
                .collect()
        })
        .collect();
    let cartan = RatMat::from_rows(cartan_rows, n).expect("square Cartan matrix");
    let gram_rows: Vec<&[i64]> = gram.iter().map(Vec::as_slice).collect();
    let form = BilinearForm::new(RatMat::from_int_rows(&gram_rows)).expect("symmetric form");

    let simple: Vec<Root> = (0..n)
        .map(|i| {
            let mut r = alloc::vec![0; n];
            r[i] = 1;
            r
        })
        .collect();
    let mut seen: BTreeSet<Root> = simple.iter().cloned().collect();
    let mut frontier = simple;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                let image = simple_reflect(&gram, i, beta);
                if seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    let mut positive: Vec<Root> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .collect();
    positive.sort_by_key(|r| (r.iter().sum::<i64>(), Reverse(r.clone())));

    RootSystem {
        cartan_type: t,
        gram,
        cartan,
        form,
        positive_roots: positive,
    }
}

/// `s_i(β) = β − ⟨β, α_i^∨⟩ α_i`.
fn simple_reflect(gram: &[Vec<i64>], i: usize, beta: &[i64]) -> Root {
    let pairing: i64 = beta.iter().enumerate().map(|(k, b)| b * gram[k][i]).sum();
    let coeff = 2 * pairing / gram[i][i];
    let mut out = beta.to_vec();
    out[i] -= coeff;
    out
}

impl RootSystem {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    /// Cartan matrix with entries `2(α_i, α_j)/(α_i, α_i)`.
    pub fn cartan_matrix(&self) -> &RatMat {
        &self.cartan
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    /// `(α_i, α_j)` as integers.
    pub fn gram_ints(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = alloc::vec![0; self.rank()];
        r[i] = 1;
        r
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Positive roots followed by their negatives in the same order.
    pub fn roots(&self) -> Vec<Root> {
        let mut all = self.positive_roots.clone();
        all.extend(
            self.positive_roots
                .iter()
                .map(|r| r.iter().map(|c| -c).collect()),
        );
        all
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        if v.len() != self.rank() {
            return false;
        }
        let pos = v.iter().all(|&c| c >= 0);
        let key: Root = if pos {
            v.to_vec()
        } else {
            v.iter().map(|c| -c).collect()
        };
        self.positive_roots
            .binary_search_by(|r| {
                let a = (r.iter().sum::<i64>(), Reverse(r.clone()));
                let b = (key.iter().sum::<i64>(), Reverse(key.clone()));
                a.cmp(&b)
            })
            .is_ok()
            && (pos || v.iter().all(|&c| c <= 0))
    }

    /// Integer form value `(a, b)`.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for (ai, row) in a.iter().zip(&self.gram) {
            if *ai == 0 {
                continue;
            }
            for (g, bj) in row.iter().zip(b) {
                s += ai * g * bj;
            }
        }
        s
    }

    /// Cartan integer `⟨a, b^∨⟩ = 2(a, b)/(b, b)`.
    pub fn cartan_integer(&self, a: &[i64], b: &[i64]) -> i64 {
        2 * self.pairing(a, b) / self.pairing(b, b)
    }

    /// Integer reflection matrix of a root in simple-root coordinates.
    pub fn reflection_int(&self, root: &[i64]) -> Result<IntMat, RootSystemError> {
        if !self.is_root(root) {
            return Err(RootSystemError::NotARoot);
        }
        let n = self.rank();
        let mut data = alloc::vec![0i64; n * n];
        for j in 0..n {
            let e = self.simple_root(j);
            let c = self.cartan_integer(&e, root);
            for i in 0..n {
                data[i * n + j] = e[i] - c * root[i];
            }
        }
        Ok(IntMat::from_data(n, data))
    }

    /// Matrix taking simple-root coordinates `c` to pairing coordinates
    /// `((x, α_1), …, (x, α_n))`: this is the Gram matrix.
    pub fn to_pairing(&self) -> &RatMat {
        self.form.gram()
    }

    /// The action of a simple-root-coordinate matrix `M` on pairing
    /// coordinates: `G·M·G⁻¹`.
    pub fn pairing_action(&self, m: &RatMat) -> RatMat {
        let g = self.form.gram();
        let ginv = g.inverse().expect("root system form is nondegenerate");
        &(g * m) * &ginv
    }

    /// Sum of the fundamental weights in pairing coordinates: `(x, α_j) = (α_j, α_j)/2`.
    pub fn weight_sum_pairing(&self) -> RatVec {
        RatVec::from_ints(
            &(0..self.rank())
                .map(|i| self.gram[i][i] / 2)
                .collect::<Vec<_>>(),
        )
    }
}

/// The map from simple-root coordinates of `A_{n−1}` to
/// `V = {s ∈ Qⁿ : Σ sᵢ = 0}` sending `α_i ↦ e_i − e_{i+1}`, as an
/// `n × (n−1)` matrix.
pub fn ambient_realization_a(n: usize) -> Result<RatMat, RootSystemError> {
    if n < 2 {
        return Err(RootSystemError::RealizationTooSmall(n));
    }
    let mut m = RatMat::zeros(n, n - 1);
    for i in 0..n - 1 {
        m.set(i, i, Rational::from_integer(1.into()));
        m.set(i + 1, i, Rational::from_integer((-1).into()));
    }
    Ok(m)
}
