//! Adjacency of chambers through codimension-one walls.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Zero;

use super::{Arrangement, ArrangementError, Chamber, Sign, SignVector};
use crate::exactlin::RatVec;

/// Two chambers sharing the facet spanned by hyperplane `hyperplane`.
/// `plus` is the chamber on the positive side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WallEdge {
    pub plus: usize,
    pub minus: usize,
    pub hyperplane: usize,
}

impl WallEdge {
    /// The endpoint opposite `c`, if `c` is an endpoint.
    pub fn other(&self, c: usize) -> Option<usize> {
        if c == self.plus {
            Some(self.minus)
        } else if c == self.minus {
            Some(self.plus)
        } else {
            None
        }
    }
}

/// Chambers as nodes, shared facets as edges (sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallGraph {
    nodes: usize,
    edges: Vec<WallEdge>,
}

impl WallGraph {
    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edges(&self) -> &[WallEdge] {
        &self.edges
    }

    /// `(neighbor, hyperplane)` pairs of chamber `c`, by hyperplane index.
    pub fn neighbors(&self, c: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|e| e.other(c).map(|o| (o, e.hyperplane)))
            .collect();
        out.sort_by_key(|&(o, h)| (h, o));
        out
    }

    /// Cross hyperplane `h` from chamber `c`.
    pub fn cross(&self, c: usize, h: usize) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| e.hyperplane == h && e.other(c).is_some())
            .and_then(|e| e.other(c))
    }

    pub fn degree(&self, c: usize) -> usize {
        self.edges.iter().filter(|e| e.other(c).is_some()).count()
    }

    /// Whether the subgraph induced on `subset` is connected.
    pub fn is_connected_on(&self, subset: &BTreeSet<usize>) -> bool {
        let Some(&start) = subset.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = alloc::vec![start];
        while let Some(c) = stack.pop() {
            for (o, _) in self.neighbors(c) {
                if subset.contains(&o) && seen.insert(o) {
                    stack.push(o);
                }
            }
        }
        seen.len() == subset.len()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_on(&(0..self.nodes).collect())
    }

    /// Edges with both endpoints in `subset`.
    pub fn restricted(&self, subset: &BTreeSet<usize>) -> Vec<WallEdge> {
        self.edges
            .iter()
            .filter(|e| subset.contains(&e.plus) && subset.contains(&e.minus))
            .copied()
            .collect()
    }
}

/// Build the wall graph of a chamber list produced by `chambers(arr)`.
pub fn wall_graph(arr: &Arrangement, chs: &[Chamber]) -> Result<WallGraph, ArrangementError> {
    let mut index = BTreeMap::new();
    for (i, c) in chs.iter().enumerate() {
        if c.signs.len() != arr.len() {
            return Err(ArrangementError::InconsistentInput(alloc::format!(
                "chamber {i} has {} signs for {} hyperplanes",
                c.signs.len(),
                arr.len()
            )));
        }
        let pattern = arr.sign_pattern(&c.witness);
        if !arr.on_ambient(&c.witness)
            || pattern
                .iter()
                .zip(c.signs.signs())
                .any(|(p, s)| *p != Some(*s))
        {
            return Err(ArrangementError::InconsistentInput(alloc::format!(
                "witness of chamber {i} does not realize {}",
                c.signs
            )));
        }
        if index.insert(c.signs.clone(), i).is_some() {
            return Err(ArrangementError::InconsistentInput(alloc::format!(
                "duplicate sign vector {}",
                c.signs
            )));
        }
    }
    Ok(graph_from_index(arr, chs, &index))
}

pub(super) fn graph_from_index(
    arr: &Arrangement,
    chs: &[Chamber],
    index: &BTreeMap<SignVector, usize>,
) -> WallGraph {
    let mut edges = Vec::new();
    for (i, c) in chs.iter().enumerate() {
        for h in 0..arr.len() {
            if c.signs.get(h) != Sign::Plus {
                continue;
            }
            let Some(&j) = index.get(&c.signs.flipped(h)) else {
                continue;
            };
            // The shared facet is full-dimensional inside the hyperplane iff
            // the segment between the witnesses crosses it away from every
            // other hyperplane; this holds for any pair that differs in one
            // sign, and is checked exactly here.
            if facet_point(arr, &c.witness, &chs[j].witness, h).is_none() {
                continue;
            }
            edges.push(WallEdge {
                plus: i,
                minus: j,
                hyperplane: h,
            });
        }
    }
    edges.sort();
    WallGraph {
        nodes: chs.len(),
        edges,
    }
}

/// A point in the relative interior of the shared facet of two chambers
/// whose sign vectors differ only at `h`: the crossing point of the segment
/// between their witnesses. Every other covector keeps its sign along the
/// segment, so the point is strictly on the correct side of all of them.
pub fn facet_point(arr: &Arrangement, a: &RatVec, b: &RatVec, h: usize) -> Option<RatVec> {
    let c = arr.covector(h);
    let (va, vb) = (c.dot(a), c.dot(b));
    let denom = &va - &vb;
    if denom.is_zero() {
        return None;
    }
    let t = va / denom;
    let p = a + &(b - a).scale(&t);
    let pattern = arr.sign_pattern(&p);
    let sa = arr.sign_pattern(a);
    let ok = (0..arr.len()).all(|k| {
        if k == h {
            pattern[k].is_none()
        } else {
            pattern[k].is_some() && pattern[k] == sa[k]
        }
    });
    ok.then_some(p)
}
