//! Fans of full-dimensional cones and the "induced by full hyperplanes" test.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::{build_arrangement, Arrangement, ArrangementError, ChamberComplex, Cone};
use crate::exactlin::{solve_strict_feasible, IntVec, LinearSystem, RatVec};

/// A finite set of full-dimensional cones meeting along common faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    equalities: Vec<IntVec>,
    cones: Vec<Cone>,
}

fn malformed(msg: String) -> ArrangementError {
    ArrangementError::MalformedFan(msg)
}

impl Fan {
    /// Build and validate a fan from generator lists.
    pub fn from_rays(
        dim: usize,
        equalities: &[RatVec],
        cones: &[Vec<RatVec>],
    ) -> Result<Fan, ArrangementError> {
        let equalities = Cone::canonical_equalities(equalities, dim);
        let cones = cones
            .iter()
            .enumerate()
            .map(|(i, rays)| {
                Cone::from_generators(rays, &equalities, dim)
                    .map_err(|e| malformed(alloc::format!("cone {i}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let fan = Fan {
            dim,
            equalities,
            cones,
        };
        fan.validate()?;
        Ok(fan)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equalities(&self) -> &[IntVec] {
        &self.equalities
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    fn equality_rows(&self) -> Vec<RatVec> {
        self.equalities
            .iter()
            .map(|e| RatVec::from_bigints(e))
            .collect()
    }

    /// Check that interiors are pairwise disjoint and that every pairwise
    /// intersection is a face of both cones.
    pub fn validate(&self) -> Result<(), ArrangementError> {
        let eq = self.equality_rows();
        let facet_rows: Vec<Vec<RatVec>> = self.cones.iter().map(Cone::facet_rows).collect();
        let mut seen = BTreeSet::new();
        for (i, c) in self.cones.iter().enumerate() {
            if !seen.insert(c.facets().to_vec()) {
                return Err(malformed(alloc::format!("cone {i} is listed twice")));
            }
        }
        for a in 0..self.cones.len() {
            for b in a + 1..self.cones.len() {
                let mut strict = facet_rows[a].clone();
                strict.extend(facet_rows[b].iter().cloned());
                if solve_strict_feasible(&strict, &eq, self.dim)?.is_feasible() {
                    return Err(malformed(alloc::format!(
                        "cones {a} and {b} have overlapping interiors"
                    )));
                }
                if !self.meets_in_face(a, b, &facet_rows)?
                    || !self.meets_in_face(b, a, &facet_rows)?
                {
                    return Err(malformed(alloc::format!(
                        "cones {a} and {b} do not meet in a common face"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether `A ∩ B` is a face of `A`.
    ///
    /// The smallest face of `A` containing `A ∩ B` lies on exactly those
    /// facets of `A` that vanish identically on `A ∩ B`; it is generated by
    /// the generators of `A` on all of them, and `A ∩ B` is a face iff that
    /// face is contained in `B`.
    fn meets_in_face(
        &self,
        a: usize,
        b: usize,
        facet_rows: &[Vec<RatVec>],
    ) -> Result<bool, ArrangementError> {
        let eq = self.equality_rows();
        let mut tight = Vec::new();
        for f in &facet_rows[a] {
            let sys = LinearSystem::new(self.dim)
                .with_strict([f.clone()])
                .with_nonstrict(facet_rows[a].iter().cloned())
                .with_nonstrict(facet_rows[b].iter().cloned())
                .with_equalities(eq.iter().cloned());
            if !sys.solve()?.is_feasible() {
                tight.push(f);
            }
        }
        let cone_b = &self.cones[b];
        Ok(self.cones[a]
            .generators()
            .iter()
            .map(|g| RatVec::from_bigints(g))
            .filter(|g| tight.iter().all(|f| f.dot(g) == num_traits::Zero::zero()))
            .all(|g| cone_b.contains(&g)))
    }
}

/// The fan of all chambers of an arrangement (closures of chambers, in
/// chamber order). Valid by construction.
pub fn chamber_fan(complex: &ChamberComplex) -> Fan {
    let arr = complex.arrangement();
    let cones = (0..complex.len())
        .map(|c| {
            let rows: Vec<RatVec> = complex
                .facet_normals(c)
                .iter()
                .map(|n| RatVec::from_bigints(n))
                .collect();
            Cone::from_inequalities(&rows, arr.equalities(), arr.dim())
                .expect("chambers are full-dimensional")
        })
        .collect();
    Fan {
        dim: arr.dim(),
        equalities: arr.equalities().to_vec(),
        cones,
    }
}

/// Outcome of [`is_arrangement_induced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedReport {
    pub induced: bool,
    /// The arrangement of all hyperplanes spanned by facets of the fan.
    pub arrangement: Arrangement,
    /// Indices (into `arrangement`) of hyperplanes passing through the
    /// interior of some cone: walls that are only half-lines/half-spaces.
    pub offending: Vec<usize>,
    /// Chambers of `arrangement` that are not cones of the fan.
    pub missing_chambers: usize,
}

/// Decide whether a fan is the chamber fan of the hyperplanes spanned by its
/// own facets.
pub fn is_arrangement_induced(fan: &Fan) -> Result<InducedReport, ArrangementError> {
    let eq = fan.equality_rows();
    let covectors: Vec<RatVec> = fan.cones.iter().flat_map(Cone::facet_rows).collect();
    let arrangement = build_arrangement(&covectors, &eq, fan.dim)?;

    let mut offending = Vec::new();
    for (h, c) in arrangement.covectors().iter().enumerate() {
        let mut eqs = eq.clone();
        eqs.push(c.clone());
        for cone in &fan.cones {
            if solve_strict_feasible(&cone.facet_rows(), &eqs, fan.dim)?.is_feasible() {
                offending.push(h);
                break;
            }
        }
    }

    let complex = ChamberComplex::new(arrangement);
    let fan_cones: BTreeSet<Vec<IntVec>> = fan.cones.iter().map(|c| c.facets().to_vec()).collect();
    let chamber_cones: BTreeSet<Vec<IntVec>> = (0..complex.len())
        .map(|c| complex.facet_normals(c))
        .collect();
    let missing_chambers = chamber_cones.difference(&fan_cones).count();
    let induced = fan_cones == chamber_cones;
    Ok(InducedReport {
        induced,
        arrangement: complex.arrangement().clone(),
        offending,
        missing_chambers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rays(list: &[&[i64]]) -> Vec<RatVec> {
        list.iter().map(|r| RatVec::from_ints(r)).collect()
    }

    /// Three cones bounded by the half-lines through (0,1), (1,−1), (−1,−1).
    fn three_sectors() -> Fan {
        Fan::from_rays(
            2,
            &[],
            &[
                rays(&[&[0, 1], &[1, -1]]),
                rays(&[&[-1, -1], &[0, 1]]),
                rays(&[&[1, -1], &[-1, -1]]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn half_line_fan_is_not_induced() {
        let report = is_arrangement_induced(&three_sectors()).unwrap();
        assert!(!report.induced);
        assert_eq!(report.arrangement.len(), 3);
        assert_eq!(report.offending, vec![0, 1, 2]);
        assert_eq!(report.missing_chambers, 6);
    }

    #[test]
    fn single_line_fan_is_induced() {
        let fan = Fan::from_rays(
            2,
            &[],
            &[
                rays(&[&[1, 0], &[-1, 0], &[0, 1]]),
                rays(&[&[1, 0], &[-1, 0], &[0, -1]]),
            ],
        )
        .unwrap();
        let report = is_arrangement_induced(&fan).unwrap();
        assert!(report.induced);
        assert!(report.offending.is_empty());
    }

    #[test]
    fn three_lines_fan_is_induced() {
        let fan = Fan::from_rays(
            2,
            &[],
            &[
                rays(&[&[1, 0], &[1, -1]]),
                rays(&[&[1, 0], &[0, 1]]),
                rays(&[&[0, 1], &[-1, 1]]),
                rays(&[&[-1, 1], &[-1, 0]]),
                rays(&[&[-1, 0], &[0, -1]]),
                rays(&[&[0, -1], &[1, -1]]),
            ],
        )
        .unwrap();
        assert!(is_arrangement_induced(&fan).unwrap().induced);
    }

    #[test]
    fn overlapping_and_non_facial_fans_rejected() {
        let overlap = Fan::from_rays(
            2,
            &[],
            &[rays(&[&[1, 0], &[0, 1]]), rays(&[&[1, 1], &[-1, 1]])],
        );
        assert!(matches!(overlap, Err(ArrangementError::MalformedFan(_))));
        // The upper half-plane meets the fourth quadrant in a ray: a face of
        // the quadrant but not of the half-plane.
        let non_face = Fan::from_rays(
            2,
            &[],
            &[
                rays(&[&[1, 0], &[-1, 0], &[0, 1]]),
                rays(&[&[1, 0], &[0, -1]]),
            ],
        );
        assert!(matches!(non_face, Err(ArrangementError::MalformedFan(_))));
        let flat = Fan::from_rays(2, &[], &[rays(&[&[1, 0]])]);
        assert!(matches!(flat, Err(ArrangementError::MalformedFan(_))));
    }

    #[test]
    fn closure_on_small_arrangements() {
        for normals in [
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]],
            vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]],
        ] {
            let dim = normals[0].len();
            let rows: Vec<RatVec> = normals.iter().map(|r| RatVec::from_ints(r)).collect();
            let arr = build_arrangement(&rows, &[], dim).unwrap();
            let complex = ChamberComplex::new(arr);
            let fan = chamber_fan(&complex);
            fan.validate().unwrap();
            let report = is_arrangement_induced(&fan).unwrap();
            assert!(report.induced);
            assert_eq!(&report.arrangement, complex.arrangement());
        }
    }
}
