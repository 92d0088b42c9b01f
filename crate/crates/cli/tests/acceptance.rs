//! Acceptance criteria, one line each: `criterion N: PASS|FAIL — detail (time)`.
//!
//! Runs without the libtest harness so the lines always reach the output;
//! exits non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use chamberwalk_core::arrangement::{
    build_arrangement, chamber_fan, is_arrangement_induced, Arrangement, ChamberComplex, Location,
};
use chamberwalk_core::exactlin::{frac, poly_discriminant, RatVec, Rational};
use chamberwalk_core::movcone::{
    mov_decomposition, reflection_arrangement, GroupAction, MovDecomposition, WallOrder,
};
use chamberwalk_core::parabolic::{LeviSetting, ParabolicDiagram};
use chamberwalk_core::rootsys::{build_root_system, DEFAULT_ORDER_CAP};
use chamberwalk_core::slice::{
    alpha_map, ample_chamber_rays, antidominant_cone, fiber_is_singular, gram_check,
    lij_arrangement, lij_index, ray_cone, SlicePoint,
};
use num_traits::{One, Signed};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Name, check and optional time limit.
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `A_{n−1}` chambers on the sum-zero subspace, both as the `L_ij`
/// arrangement and as the root-system arrangement in pairing coordinates.
fn weyl_chamber_counts() -> Outcome {
    let mut counts = Vec::new();
    for n in 2..=6 {
        let on_v = ChamberComplex::new(lij_arrangement(n).map_err(|e| e.to_string())?);
        ensure(on_v.len() == factorial(n), || {
            format!("L_ij, n = {n}: {} chambers", on_v.len())
        })?;
        let rs = build_root_system(
            format!("A{}", n - 1)
                .parse()
                .map_err(|e| format!("{e:?}"))?,
        );
        let roots = ChamberComplex::new(reflection_arrangement(&rs));
        ensure(roots.len() == factorial(n), || {
            format!("A{}: {} chambers", n - 1, roots.len())
        })?;
        counts.push(on_v.len().to_string());
    }
    Ok(format!("chambers for n = 2..6: {}", counts.join(", ")))
}

fn black(d: &ParabolicDiagram) -> BTreeSet<Vec<i64>> {
    d.black_roots().into_iter().collect()
}

/// The `A_4` example with white vertices 1 and 4.
fn levi_pipeline() -> Outcome {
    let setting = LeviSetting::new(build_root_system("A4".parse().unwrap()), &[0, 3])
        .map_err(|e| e.to_string())?;
    let arr = setting.arrangement();
    let normals: BTreeSet<Vec<i64>> = arr.hyperplanes().iter().map(|h| h.normal_i64()).collect();
    let expected: BTreeSet<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![1, 1]].into_iter().collect();
    ensure(normals == expected, || {
        format!("restricted normals {normals:?}")
    })?;
    ensure(setting.complex().len() == 6, || {
        format!("{} chambers", setting.complex().len())
    })?;

    let diagrams = setting.parabolics().map_err(|e| e.to_string())?;
    ensure(diagrams.len() == 6, || {
        format!("{} diagrams", diagrams.len())
    })?;
    let sets = |list: &[[[i64; 4]; 2]]| -> BTreeSet<BTreeSet<Vec<i64>>> {
        list.iter()
            .map(|pair| pair.iter().map(|r| r.to_vec()).collect())
            .collect()
    };
    let p = [
        [[0, 1, 0, 0], [0, 0, 1, 0]],
        [[0, -1, 0, 0], [1, 1, 1, 0]],
        [[0, 0, 1, 1], [-1, -1, -1, 0]],
        [[0, 0, -1, -1], [-1, -1, 0, 0]],
        [[0, -1, -1, -1], [1, 1, 0, 0]],
        [[0, 1, 1, 1], [0, 0, -1, 0]],
    ];
    let found: BTreeSet<BTreeSet<Vec<i64>>> = diagrams.iter().map(black).collect();
    ensure(found == sets(&p), || format!("black labels {found:?}"))?;

    let group = setting
        .restricted_weyl(DEFAULT_ORDER_CAP)
        .map_err(|e| e.to_string())?;
    ensure(group.order() == 2, || format!("|W| = {}", group.order()))?;
    let dec = mov_decomposition(
        setting.complex().clone(),
        group,
        &RatVec::from_ints(&[1, 1]),
        WallOrder::Ascending,
    )
    .map_err(|e| e.to_string())?;
    ensure(dec.resolution_count() == 3, || {
        format!("{} resolutions", dec.resolution_count())
    })?;
    let mov: BTreeSet<BTreeSet<Vec<i64>>> = dec
        .mov_chambers()
        .iter()
        .map(|&c| black(&diagrams[c]))
        .collect();
    ensure(mov == sets(&[p[0], p[1], p[5]]), || {
        format!("Mov chambers {mov:?}")
    })?;
    // A path on three nodes: two edges sharing the middle node P_0.
    let p0 = diagrams
        .iter()
        .position(|d| black(d) == sets(&[p[0]]).into_iter().next().unwrap())
        .unwrap();
    let edges = dec.flop_edges();
    ensure(
        edges.len() == 2
            && edges.iter().all(|e| e.plus == p0 || e.minus == p0)
            && dec.flop_graph_connected(),
        || format!("flop edges {edges:?}"),
    )?;
    Ok("3 lines, 6 chambers, all six black-label sets, |W| = 2, 3 resolutions on a path".into())
}

fn random_arrangement(rng: &mut ChaCha8Rng, max_dim: usize, max_h: usize) -> Arrangement {
    loop {
        let dim = rng.gen_range(2..=max_dim);
        let count = rng.gen_range(1..=max_h);
        let row = |rng: &mut ChaCha8Rng| -> RatVec {
            RatVec::from_ints(&(0..dim).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>())
        };
        let rows: Vec<RatVec> = (0..count).map(|_| row(rng)).collect();
        let equalities: Vec<RatVec> = if dim >= 3 && rng.gen_bool(0.3) {
            vec![row(rng)]
        } else {
            Vec::new()
        };
        if rows.iter().chain(&equalities).any(RatVec::is_zero) {
            continue;
        }
        if let Ok(arr) = build_arrangement(&rows, &equalities, dim) {
            if !arr.is_empty() {
                return arr;
            }
        }
    }
}

/// The half-line fan is not induced; chamber fans of arrangements are.
fn fan_criterion() -> Outcome {
    let report = common::run_json(&["fan", "check", "--fixture", "half-lines"]);
    ensure(report["arrangement_induced"] == false, || {
        format!("half-lines fixture: {report}")
    })?;
    ensure(report["cone_count"] == 3, || {
        format!("half-lines fixture: {report}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let trials = 12;
    for t in 0..trials {
        let complex = ChamberComplex::new(random_arrangement(&mut rng, 3, 5));
        let induced = is_arrangement_induced(&chamber_fan(&complex)).map_err(|e| e.to_string())?;
        ensure(
            induced.induced && &induced.arrangement == complex.arrangement(),
            || format!("chamber fan of arrangement {t} not recognized"),
        )?;
    }
    Ok(format!(
        "half-line fan rejected; {trials} chamber fans accepted"
    ))
}

fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    // Few distinct values, so that coincidences (walls) occur often.
    let mut s: Vec<Rational> = (0..n - 1)
        .map(|_| frac(rng.gen_range(-3..=3), rng.gen_range(1..=2)))
        .collect();
    let total: Rational = s.iter().sum();
    s.push(-total);
    s
}

/// `disc ∏(z − s_i) = ∏_{i<j} (s_i − s_j)²`, and singular fibers are the walls.
fn discriminant_identity() -> Outcome {
    let per_n = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut singular = 0;
    for n in 2..=6 {
        let complex = ChamberComplex::new(lij_arrangement(n).map_err(|e| e.to_string())?);
        for _ in 0..per_n {
            let s = random_point(&mut rng, n);
            let p = SlicePoint::new(RatVec::new(s.clone())).map_err(|e| e.to_string())?;
            let disc = poly_discriminant(&p.fiber_polynomial()).map_err(|e| e.to_string())?;
            let mut vandermonde = Rational::one();
            for i in 0..n {
                for j in i + 1..n {
                    let d = &s[i] - &s[j];
                    vandermonde *= &d * &d;
                }
            }
            ensure(disc == vandermonde, || {
                format!("discriminant mismatch at {s:?}")
            })?;
            let report = fiber_is_singular(&p).map_err(|e| e.to_string())?;
            let walls: BTreeSet<usize> =
                match complex.locate(p.coords()).map_err(|e| e.to_string())? {
                    Location::Chamber(_) => BTreeSet::new(),
                    Location::OnWall(w) => w.into_iter().collect(),
                };
            let pairs: BTreeSet<usize> = report
                .pairs
                .iter()
                .map(|&(i, j)| {
                    lij_index(complex.arrangement(), i - 1, j - 1).expect("L_ij present")
                })
                .collect();
            ensure(
                report.singular == !walls.is_empty() && pairs == walls,
                || format!("singularity disagrees with walls at {s:?}"),
            )?;
            singular += usize::from(report.singular);
        }
    }
    Ok(format!(
        "{} points for n = 2..6 ({singular} on walls)",
        5 * per_n
    ))
}

/// Gram reversal for n ≤ 8; rays dual to the simple roots and spanning the
/// anti-dominant chamber for n ≤ 6.
fn alpha_and_rays() -> Outcome {
    for n in 2..=8 {
        ensure(gram_check(n).map_err(|e| e.to_string())?, || {
            format!("Gram(α) ≠ −Gram(E) for n = {n}")
        })?;
    }
    for n in 2..=6 {
        let rays = ample_chamber_rays(n).map_err(|e| e.to_string())?;
        let alpha = alpha_map(n).map_err(|e| e.to_string())?;
        for (i, r) in rays.iter().enumerate() {
            for j in 0..n - 1 {
                let expected = if i == j {
                    frac(-(n as i64), 1)
                } else {
                    frac(0, 1)
                };
                ensure(r.dot(&alpha.column(j)) == expected, || {
                    format!("⟨r_{i}, α(E_{j})⟩ wrong for n = {n}")
                })?;
            }
        }
        let cones_equal = ray_cone(n).map_err(|e| e.to_string())?
            == antidominant_cone(n).map_err(|e| e.to_string())?;
        ensure(cones_equal, || {
            format!("ray cone differs from the anti-dominant chamber for n = {n}")
        })?;
    }
    Ok("Gram reversal n = 2..8; ray pairings and cone n = 2..6".into())
}

/// Check independently that the group translates of Mov partition the chambers.
fn verify_tiling(dec: &MovDecomposition) -> Result<(), String> {
    let complex = dec.complex();
    let group = dec.group();
    let mut hit = vec![0usize; complex.len()];
    for w in 0..group.order() {
        for &m in dec.mov_chambers() {
            let image = group.apply(w, &complex.chambers()[m].witness);
            match complex.locate(&image).map_err(|e| e.to_string())? {
                Location::Chamber(c) => hit[c] += 1,
                Location::OnWall(_) => return Err("a translate of a witness lies on a wall".into()),
            }
        }
    }
    ensure(hit.iter().all(|&h| h == 1), || {
        format!("chamber multiplicities {hit:?}")
    })?;
    ensure(dec.tiles(), || "decomposition reports no tiling".into())?;
    ensure(
        dec.resolution_count() * group.order() == complex.len(),
        || {
            format!(
                "{} × {} ≠ {}",
                dec.resolution_count(),
                group.order(),
                complex.len()
            )
        },
    )
}

fn tiling() -> Outcome {
    let mut summary = Vec::new();
    for t in ["A2", "A3", "B2", "G2"] {
        let rs = build_root_system(t.parse().unwrap());
        let group = GroupAction::weyl_pairing(&rs, DEFAULT_ORDER_CAP).map_err(|e| e.to_string())?;
        let dec = mov_decomposition(
            ChamberComplex::new(reflection_arrangement(&rs)),
            group,
            &rs.weight_sum_pairing(),
            WallOrder::Ascending,
        )
        .map_err(|e| format!("{t}: {e}"))?;
        verify_tiling(&dec).map_err(|e| format!("{t}: {e}"))?;
        summary.push(format!(
            "{t} {}×{}",
            dec.resolution_count(),
            dec.group().order()
        ));
    }
    let setting = LeviSetting::new(build_root_system("A4".parse().unwrap()), &[0, 3])
        .map_err(|e| e.to_string())?;
    let group = setting
        .restricted_weyl(DEFAULT_ORDER_CAP)
        .map_err(|e| e.to_string())?;
    let dec = mov_decomposition(
        setting.complex().clone(),
        group,
        &RatVec::from_ints(&[1, 1]),
        WallOrder::Ascending,
    )
    .map_err(|e| e.to_string())?;
    verify_tiling(&dec).map_err(|e| format!("A4 Levi {{1,4}}: {e}"))?;
    summary.push(format!(
        "A4 Levi {{1,4}} {}×{}",
        dec.resolution_count(),
        dec.group().order()
    ));
    Ok(summary.join(", "))
}

/// Crossing a wall twice returns, crossings flip exactly one sign, and the
/// chambers are connected through walls.
fn wall_crossing() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let trials = 60;
    for t in 0..trials {
        let arr = random_arrangement(&mut rng, 4, 8);
        let complex = ChamberComplex::new(arr.clone());
        let graph = complex.wall_graph();
        for c in 0..complex.len() {
            for h in complex.facet_hyperplanes(c) {
                let d = graph
                    .cross(c, h)
                    .ok_or_else(|| format!("arrangement {t}: no chamber across wall {h} of {c}"))?;
                ensure(graph.cross(d, h) == Some(c), || {
                    format!("arrangement {t}: crossing {h} twice leaves {c}")
                })?;
                let diff = complex.chambers()[c]
                    .signs
                    .differences(&complex.chambers()[d].signs);
                ensure(diff == vec![h], || {
                    format!("arrangement {t}: crossing {h} flips {diff:?}")
                })?;
            }
            // Every point just across a facet is in the neighbor.
            for (d, h) in graph.neighbors(c) {
                let wc = &complex.chambers()[c].witness;
                let wd = &complex.chambers()[d].witness;
                let sc = arr.covector(h).dot(wc);
                let sd = arr.covector(h).dot(wd);
                ensure(sc.is_positive() != sd.is_positive(), || {
                    format!("arrangement {t}: edge {c}–{d} does not cross {h}")
                })?;
            }
        }
        ensure(graph.is_connected(), || {
            format!("arrangement {t}: wall graph disconnected")
        })?;
        let dec = mov_decomposition(
            complex.clone(),
            GroupAction::trivial(arr.dim()),
            &complex.chambers()[0].witness,
            WallOrder::Ascending,
        )
        .map_err(|e| e.to_string())?;
        ensure(
            dec.flop_graph_connected() && dec.resolution_count() == complex.len(),
            || format!("arrangement {t}: flop graph"),
        )?;
    }
    Ok(format!(
        "{trials} random arrangements, ≤ 8 hyperplanes, dim ≤ 4"
    ))
}

/// Two consecutive runs of every fixture command are byte-identical.
fn determinism() -> Outcome {
    for case in common::CASES {
        let first = common::run(case.args);
        let second = common::run(case.args);
        ensure(first.status.success(), || format!("{} failed", case.name))?;
        ensure(
            first.stdout == second.stdout && first.stderr == second.stderr,
            || format!("{} ({}) differs between runs", case.name, case.extension()),
        )?;
    }
    Ok(format!("{} fixture commands", common::CASES.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "Weyl-chamber counts",
            weyl_chamber_counts,
            Some(Duration::from_secs(30)),
        ),
        (
            "A4 Levi {1,4} pipeline",
            levi_pipeline,
            Some(Duration::from_secs(1)),
        ),
        ("half-line fan", fan_criterion, None),
        (
            "discriminant identity",
            discriminant_identity,
            Some(Duration::from_secs(60)),
        ),
        ("α isometry and rays", alpha_and_rays, None),
        ("tiling", tiling, None),
        ("wall crossing", wall_crossing, None),
        ("determinism", determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > *limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS — {name}: {detail} ({elapsed:.2?})",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL — {name}: {detail} ({elapsed:.2?})",
                    i + 1
                );
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
