//! Built-in input documents.
//!
//! - `a4-levi`: the arrangement of three lines `u = 0`, `v = 0`,
//!   `u + v = 0` cut out on the Levi subspace of `A_4` with white vertices
//!   1 and 4, in coordinates `u = (x, α_2)`, `v = (x, α_3)`, with its group
//!   of order two.
//! - `half-lines`: three planar cones whose walls are half-lines.
//! - `a2` … `a6`: the hyperplanes `s_i = s_j` in `{s : Σ s_i = 0} ⊂ Qⁿ`
//!   with the symmetric group permuting coordinates.

use crate::docs::{ints, ArrangementDoc, Document, FanDoc};
use crate::error::CliError;

pub const NAMES: &[&str] = &["a4-levi", "half-lines", "a2", "a3", "a4", "a5", "a6"];

fn a4_levi() -> Document {
    Document::Arrangement(ArrangementDoc {
        description: Some(
            "A4 with white vertices 1,4: lines u=0, v=0, u+v=0 in u=(x,a2), v=(x,a3); W = Z/2 acting by (u,v) -> (-v,-u)"
                .into(),
        ),
        dim: 2,
        equalities: Vec::new(),
        hyperplanes: vec![ints(&[1, 0]), ints(&[0, 1]), ints(&[1, 1])],
        group: vec![vec![ints(&[0, -1]), ints(&[-1, 0])]],
        ample: Some(ints(&[1, 1])),
    })
}

fn half_lines() -> Document {
    Document::Fan(FanDoc {
        description: Some(
            "three planar cones bounded by the half-lines through (0,1), (1,-1), (-1,-1)".into(),
        ),
        dim: 2,
        equalities: Vec::new(),
        cones: vec![
            vec![ints(&[0, 1]), ints(&[1, -1])],
            vec![ints(&[-1, -1]), ints(&[0, 1])],
            vec![ints(&[1, -1]), ints(&[-1, -1])],
        ],
    })
}

fn symmetric(n: usize) -> Document {
    let mut hyperplanes = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[j] = -1;
            hyperplanes.push(ints(&v));
        }
    }
    let group = (0..n - 1)
        .map(|k| {
            (0..n)
                .map(|r| {
                    let c = if r == k {
                        k + 1
                    } else if r == k + 1 {
                        k
                    } else {
                        r
                    };
                    let mut row = vec![0i64; n];
                    row[c] = 1;
                    ints(&row)
                })
                .collect()
        })
        .collect();
    let ample: Vec<i64> = (1..=n as i64).map(|i| 2 * i - (n as i64 + 1)).collect();
    Document::Arrangement(ArrangementDoc {
        description: Some(format!(
            "hyperplanes s_i = s_j in the sum-zero subspace of Q^{n}, symmetric group S_{n} permuting coordinates"
        )),
        dim: n,
        equalities: vec![ints(&vec![1; n])],
        hyperplanes,
        group,
        ample: Some(ints(&ample)),
    })
}

pub fn fixture(name: &str) -> Result<Document, CliError> {
    match name {
        "a4-levi" => Ok(a4_levi()),
        "half-lines" => Ok(half_lines()),
        _ => match name.strip_prefix('a').and_then(|n| n.parse::<usize>().ok()) {
            Some(n @ 2..=6) if name == format!("a{n}") => Ok(symmetric(n)),
            _ => Err(CliError::UnknownFixture(name.to_owned())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chamberwalk_core::exactlin::RatMat;
    use chamberwalk_core::parabolic::LeviSetting;
    use chamberwalk_core::rootsys::{build_root_system, DEFAULT_ORDER_CAP};

    #[test]
    fn every_name_resolves() {
        for name in NAMES {
            fixture(name).unwrap();
        }
        assert!(fixture("a7").is_err());
        assert!(fixture("a02").is_err());
    }

    #[test]
    fn levi_fixture_matches_the_library() {
        let Document::Arrangement(doc) = fixture("a4-levi").unwrap() else {
            panic!()
        };
        let setting = LeviSetting::new(build_root_system("A4".parse().unwrap()), &[0, 3]).unwrap();
        assert_eq!(&doc.arrangement().unwrap(), setting.arrangement());
        let group = setting.restricted_weyl(DEFAULT_ORDER_CAP).unwrap();
        let gens: Vec<RatMat> = doc.generators().unwrap();
        assert_eq!(group.elements()[1..], gens[..]);
    }

    #[test]
    fn fan_fixture_is_a_valid_fan() {
        let Document::Fan(doc) = fixture("half-lines").unwrap() else {
            panic!()
        };
        assert_eq!(doc.fan().unwrap().cones().len(), 3);
    }
}
