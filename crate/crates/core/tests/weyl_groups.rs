//! Weyl group orders and orbit sizes.

use chamberwalk_core::exactlin::RatVec;
use chamberwalk_core::rootsys::{build_root_system, weyl_group, weyl_orbit, DEFAULT_ORDER_CAP};

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn type_a_order_is_factorial() {
    for n in 2..=6 {
        let rs = build_root_system(format!("A{}", n - 1).parse().unwrap());
        let w = weyl_group(&rs, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(w.order(), factorial(n), "A{}", n - 1);
    }
}

#[test]
fn orbit_stabilizer() {
    for (ty, v) in [
        ("A3", vec![1, 0, 0]),
        ("A3", vec![1, 1, 0]),
        ("B3", vec![0, 0, 1]),
        ("G2", vec![1, 0]),
        ("F4", vec![1, 0, 0, 0]),
        ("D4", vec![0, 1, 0, 0]),
    ] {
        let rs = build_root_system(ty.parse().unwrap());
        let w = weyl_group(&rs, DEFAULT_ORDER_CAP).unwrap();
        let v = RatVec::from_ints(&v);
        let orbit = weyl_orbit(&w, &v).unwrap();
        let stabilizer = w
            .rational_elements()
            .iter()
            .filter(|m| m.mul_vec(&v).unwrap() == v)
            .count();
        assert_eq!(orbit.len() * stabilizer, w.order(), "{ty}");
    }
}
