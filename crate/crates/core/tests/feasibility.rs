//! The strict-feasibility solver against a planar enumeration oracle and
//! its own certificates.

use chamberwalk_core::exactlin::{Feasibility, LinearSystem, RatVec};
use proptest::prelude::*;

/// In the plane, a nonempty open cone cut out by finitely many strict
/// inequalities contains one of: a row itself, a perpendicular of a row,
/// or the sum of two perpendiculars (its boundary rays lie on those).
fn planar_oracle(rows: &[[i64; 2]]) -> bool {
    let mut candidates: Vec<[i64; 2]> = vec![[1, 0]];
    let mut perps = Vec::new();
    for r in rows {
        candidates.push(*r);
        perps.push([-r[1], r[0]]);
        perps.push([r[1], -r[0]]);
    }
    for a in &perps {
        candidates.push(*a);
        for b in &perps {
            candidates.push([a[0] + b[0], a[1] + b[1]]);
        }
    }
    candidates
        .iter()
        .any(|p| rows.iter().all(|r| r[0] * p[0] + r[1] * p[1] > 0))
}

fn row() -> impl Strategy<Value = [i64; 2]> {
    (-3i64..=3, -3i64..=3)
        .prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
        .prop_map(|(a, b)| [a, b])
}

proptest! {
    #[test]
    fn planar_strict_systems(rows in prop::collection::vec(row(), 1..6)) {
        let sys = LinearSystem::new(2).with_strict(rows.iter().map(|r| RatVec::from_ints(r)));
        let result = sys.solve().unwrap();
        prop_assert_eq!(result.is_feasible(), planar_oracle(&rows));
        match result {
            Feasibility::Feasible(x) => prop_assert!(sys.is_satisfied_by(&x)),
            Feasibility::Infeasible(cert) => prop_assert!(sys.is_refuted_by(&cert)),
        }
    }

    #[test]
    fn mixed_systems_are_certified(
        strict in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..4),
        nonstrict in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..3),
        equalities in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 0..2),
    ) {
        let sys = LinearSystem::new(3)
            .with_strict(strict.iter().map(|r| RatVec::from_ints(r)))
            .with_nonstrict(nonstrict.iter().map(|r| RatVec::from_ints(r)))
            .with_equalities(equalities.iter().map(|r| RatVec::from_ints(r)));
        match sys.solve().unwrap() {
            Feasibility::Feasible(x) => prop_assert!(sys.is_satisfied_by(&x)),
            Feasibility::Infeasible(cert) => prop_assert!(sys.is_refuted_by(&cert)),
        }
    }
}
