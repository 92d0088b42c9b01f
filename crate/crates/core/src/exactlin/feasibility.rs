//! Exact feasibility of homogeneous linear systems
//!
//! ```text
//!   c·x > 0   (strict rows)
//!   d·x ≥ 0   (non-strict rows)
//!   e·x = 0   (equalities)
//! ```
//!
//! Because the system is homogeneous, `c·x > 0` can be rescaled to
//! `c·x ≥ 1`, which turns the question into an ordinary phase-one simplex
//! problem. The simplex runs on a dense rational tableau with Bland's rule,
//! so it terminates and is deterministic for a fixed row order.
//!
//! When the system is infeasible the final dual values form a certificate
//! `y` with `Σ yᵢ·rowᵢ = 0`, `y ≥ 0` on inequality rows and `y > 0` on at
//! least one strict row (Motzkin's transposition theorem).

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::{LinAlgError, RatVec, Rational};

/// A homogeneous system of strict inequalities, non-strict inequalities and
/// equalities in a fixed ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearSystem {
    dim: usize,
    strict: Vec<RatVec>,
    nonstrict: Vec<RatVec>,
    equalities: Vec<RatVec>,
}

/// Dual multipliers proving a [`LinearSystem`] has no solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub strict: Vec<Rational>,
    pub nonstrict: Vec<Rational>,
    pub equalities: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A solution, rescaled so its largest absolute coordinate is one.
    Feasible(RatVec),
    Infeasible(Certificate),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&RatVec> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible(_) => None,
        }
    }

    pub fn into_witness(self) -> Option<RatVec> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible(_) => None,
        }
    }
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem {
            dim,
            ..Default::default()
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn strict_rows(&self) -> &[RatVec] {
        &self.strict
    }

    pub fn nonstrict_rows(&self) -> &[RatVec] {
        &self.nonstrict
    }

    pub fn equality_rows(&self) -> &[RatVec] {
        &self.equalities
    }

    pub fn push_strict(&mut self, row: RatVec) -> &mut Self {
        self.strict.push(row);
        self
    }

    pub fn push_nonstrict(&mut self, row: RatVec) -> &mut Self {
        self.nonstrict.push(row);
        self
    }

    pub fn push_equality(&mut self, row: RatVec) -> &mut Self {
        self.equalities.push(row);
        self
    }

    pub fn with_strict(mut self, rows: impl IntoIterator<Item = RatVec>) -> Self {
        self.strict.extend(rows);
        self
    }

    pub fn with_nonstrict(mut self, rows: impl IntoIterator<Item = RatVec>) -> Self {
        self.nonstrict.extend(rows);
        self
    }

    pub fn with_equalities(mut self, rows: impl IntoIterator<Item = RatVec>) -> Self {
        self.equalities.extend(rows);
        self
    }

    fn check_dims(&self) -> Result<(), LinAlgError> {
        for row in self
            .strict
            .iter()
            .chain(&self.nonstrict)
            .chain(&self.equalities)
        {
            if row.dim() != self.dim {
                return Err(LinAlgError::DimensionMismatch {
                    expected: self.dim,
                    found: row.dim(),
                });
            }
        }
        Ok(())
    }

    /// Whether `x` satisfies every row exactly.
    pub fn is_satisfied_by(&self, x: &RatVec) -> bool {
        x.dim() == self.dim
            && self.strict.iter().all(|c| c.dot(x).is_positive())
            && self.nonstrict.iter().all(|d| !d.dot(x).is_negative())
            && self.equalities.iter().all(|e| e.dot(x).is_zero())
    }

    /// Check a certificate against this system.
    pub fn is_refuted_by(&self, cert: &Certificate) -> bool {
        if cert.strict.len() != self.strict.len()
            || cert.nonstrict.len() != self.nonstrict.len()
            || cert.equalities.len() != self.equalities.len()
        {
            return false;
        }
        if cert
            .strict
            .iter()
            .chain(&cert.nonstrict)
            .any(Signed::is_negative)
        {
            return false;
        }
        if !cert.strict.iter().any(Signed::is_positive) {
            return false;
        }
        let mut combo = RatVec::zeros(self.dim);
        let rows = self
            .strict
            .iter()
            .chain(&self.nonstrict)
            .chain(&self.equalities);
        let mults = cert
            .strict
            .iter()
            .chain(&cert.nonstrict)
            .chain(&cert.equalities);
        for (row, y) in rows.zip(mults) {
            combo = &combo + &row.scale(y);
        }
        combo.is_zero()
    }

    pub fn solve(&self) -> Result<Feasibility, LinAlgError> {
        self.check_dims()?;
        Ok(Tableau::build(self).run(self))
    }
}

/// Find `x` with `c·x > 0` for every strict covector and `e·x = 0` for every
/// equality covector, or certify that none exists.
pub fn solve_strict_feasible(
    strict: &[RatVec],
    equalities: &[RatVec],
    dim: usize,
) -> Result<Feasibility, LinAlgError> {
    LinearSystem::new(dim)
        .with_strict(strict.iter().cloned())
        .with_equalities(equalities.iter().cloned())
        .solve()
}

/// Phase-one tableau.
///
/// Column layout: `x⁺ (dim) | x⁻ (dim) | surplus (inequality rows) | artificial (all rows)`.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    reduced: Vec<Rational>,
    neg_objective: Rational,
    basis: Vec<usize>,
    dim: usize,
    first_artificial: usize,
}

impl Tableau {
    fn build(sys: &LinearSystem) -> Self {
        let dim = sys.dim;
        let n_ineq = sys.strict.len() + sys.nonstrict.len();
        let m = n_ineq + sys.equalities.len();
        let first_artificial = 2 * dim + n_ineq;
        let width = first_artificial + m;

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let all = sys
            .strict
            .iter()
            .chain(&sys.nonstrict)
            .chain(&sys.equalities);
        for (i, cov) in all.enumerate() {
            let mut row = alloc::vec![Rational::zero(); width];
            for (j, c) in cov.coords().iter().enumerate() {
                row[j] = c.clone();
                row[dim + j] = -c.clone();
            }
            if i < n_ineq {
                row[2 * dim + i] = -Rational::one();
            }
            row[first_artificial + i] = Rational::one();
            rows.push(row);
            rhs.push(if i < sys.strict.len() {
                Rational::one()
            } else {
                Rational::zero()
            });
        }

        let mut reduced = alloc::vec![Rational::zero(); width];
        for (j, r) in reduced.iter_mut().enumerate().take(first_artificial) {
            *r = -rows.iter().fold(Rational::zero(), |acc, row| acc + &row[j]);
        }
        let neg_objective = -rhs.iter().fold(Rational::zero(), |acc, b| acc + b);
        let basis = (0..m).map(|i| first_artificial + i).collect();

        Tableau {
            rows,
            rhs,
            reduced,
            neg_objective,
            basis,
            dim,
            first_artificial,
        }
    }

    fn run(mut self, sys: &LinearSystem) -> Feasibility {
        while let Some(enter) = (0..self.first_artificial).find(|&j| self.reduced[j].is_negative())
        {
            let leave = self.ratio_test(enter);
            // Phase one is bounded below by zero, so some row always qualifies.
            let leave = leave.expect("phase-one simplex cannot be unbounded");
            self.pivot(leave, enter);
        }
        if self.neg_objective.is_zero() {
            let mut x = RatVec::zeros(self.dim).into_coords();
            for (row, &var) in self.basis.iter().enumerate() {
                if var < self.dim {
                    x[var] += &self.rhs[row];
                } else if var < 2 * self.dim {
                    x[var - self.dim] -= &self.rhs[row];
                }
            }
            Feasibility::Feasible(RatVec::new(x).normalize_max_abs())
        } else {
            let mut y: Vec<Rational> = (0..self.rows.len())
                .map(|i| Rational::one() - &self.reduced[self.first_artificial + i])
                .collect();
            let eq = y.split_off(sys.strict.len() + sys.nonstrict.len());
            let nonstrict = y.split_off(sys.strict.len());
            Feasibility::Infeasible(Certificate {
                strict: y,
                nonstrict,
                equalities: eq,
            })
        }
    }

    /// Minimum-ratio row for the entering column; ties go to the smallest basic index.
    fn ratio_test(&self, enter: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &self.rhs[i] / &row[enter];
            let better = match &best {
                None => true,
                Some((b, r)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*b]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (v, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        let f = self.reduced[c].clone();
        if !f.is_zero() {
            for (v, p) in self.reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.neg_objective -= &f * &pivot_rhs;
        }
        self.basis[r] = c;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(x: &[i64]) -> RatVec {
        RatVec::from_ints(x)
    }

    #[test]
    fn half_line_is_feasible() {
        let res = solve_strict_feasible(&[v(&[1])], &[], 1).unwrap();
        assert_eq!(res, Feasibility::Feasible(v(&[1])));
    }

    #[test]
    fn opposite_half_lines_are_infeasible() {
        let sys = LinearSystem::new(1).with_strict([v(&[1]), v(&[-1])]);
        match sys.solve().unwrap() {
            Feasibility::Infeasible(cert) => assert!(sys.is_refuted_by(&cert)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn a2_sign_pattern_with_negative_sum_is_infeasible() {
        // (x,α1) > 0, (x,α2) > 0, (x,α1+α2) < 0 in pairing coordinates.
        let sys = LinearSystem::new(2).with_strict([v(&[1, 0]), v(&[0, 1]), v(&[-1, -1])]);
        let res = sys.solve().unwrap();
        let Feasibility::Infeasible(cert) = res else {
            panic!("expected infeasible")
        };
        assert!(sys.is_refuted_by(&cert));
    }

    #[test]
    fn equalities_restrict_the_witness() {
        let sys = LinearSystem::new(3)
            .with_strict([v(&[1, -1, 0]), v(&[0, 1, -1])])
            .with_equalities([v(&[1, 1, 1])]);
        let x = sys.solve().unwrap().into_witness().unwrap();
        assert!(sys.is_satisfied_by(&x));
        assert_eq!(x.max_abs(), Rational::one());
    }

    #[test]
    fn nonstrict_rows_allow_boundary() {
        // x ≥ 0, -x ≥ 0, y > 0
        let sys = LinearSystem::new(2)
            .with_nonstrict([v(&[1, 0]), v(&[-1, 0])])
            .with_strict([v(&[0, 1])]);
        let x = sys.solve().unwrap().into_witness().unwrap();
        assert!(sys.is_satisfied_by(&x));
        assert!(x[0].is_zero());
    }

    #[test]
    fn empty_system_is_feasible_at_origin() {
        let res = LinearSystem::new(2).solve().unwrap();
        assert_eq!(res, Feasibility::Feasible(RatVec::zeros(2)));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let err = solve_strict_feasible(&[v(&[1, 2])], &[], 3).unwrap_err();
        assert_eq!(
            err,
            LinAlgError::DimensionMismatch {
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn deterministic_output() {
        let rows = vec![v(&[2, -1, 3]), v(&[-1, 4, 1]), v(&[1, 1, -5])];
        let a = solve_strict_feasible(&rows, &[], 3).unwrap();
        let b = solve_strict_feasible(&rows, &[], 3).unwrap();
        assert_eq!(a, b);
    }
}
