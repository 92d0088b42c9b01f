//! Running one command and rendering its result.

use std::collections::BTreeSet;

use chamberwalk_core::arrangement::{
    is_arrangement_induced, rational_fraction, Arrangement, ChamberComplex, Location,
};
use chamberwalk_core::exactlin::{IntVec, RatMat, RatVec, Rational};
use chamberwalk_core::movcone::{
    flop, mov_decomposition, reflection_arrangement, GroupAction, MovDecomposition, MovError,
    WallOrder,
};
use chamberwalk_core::parabolic::{render_diagram, root_label, LeviSetting, MarkedDynkin};
use chamberwalk_core::rootsys::{build_root_system, weyl_group, CartanType, Letter, RootSystem};
use chamberwalk_core::slice::{
    alpha_gram, alpha_map, ample_chamber_rays, antidominant_cone, elementary_symmetric_coeffs,
    fiber_is_singular, gram_check, intersection_gram, ray_cone, singularity_types, slodowy_h2_type,
    OrbitTag, SlicePoint,
};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::args::{
    ChambersArgs, Command, FanCommand, FanSource, FixturesCommand, Format, MovArgs, OrderArg,
    ParabolicArgs, SliceCommand, SourceArgs, TypeArgs, WeylArgs,
};
use crate::docs::{load_document, parse_vector, Document};
use crate::emit::{dot, svg, DotGraph, Figure, Plane};
use crate::error::CliError;
use crate::fixtures::{fixture, NAMES};
use crate::slodowy;

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn big_ints(v: &IntVec) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_i64().expect("coordinate fits in i64"))
        .collect()
}

fn fractions(v: &RatVec) -> Vec<String> {
    v.coords().iter().map(rational_fraction).collect()
}

fn int_matrix(m: &RatMat) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| {
                    let x = m.get(r, c);
                    assert!(x.is_integer(), "integral matrix expected");
                    x.to_integer().to_i64().expect("entry fits in i64")
                })
                .collect()
        })
        .collect()
}

fn cartan_type(t: &TypeArgs) -> Result<CartanType, CliError> {
    let mut chars = t.letter.trim().chars();
    let letter = match (chars.next(), chars.next()) {
        (Some(c), None) => Letter::from_char(c),
        _ => None,
    }
    .ok_or_else(|| CliError::Usage(format!("unknown Cartan type letter {:?}", t.letter)))?;
    Ok(CartanType::new(letter, t.rank)?)
}

enum GroupSource {
    Weyl(Box<RootSystem>),
    Generators(Vec<RatMat>),
}

/// An arrangement with the group acting on it and a preferred ample class.
struct Setting {
    name: String,
    arrangement: Arrangement,
    group: GroupSource,
    ample: Option<RatVec>,
}

impl Setting {
    fn from_source(src: &SourceArgs) -> Result<Setting, CliError> {
        let typed = src.letter.is_some() || src.rank.is_some();
        let given = [typed, src.fixture.is_some(), src.file.is_some()];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(CliError::Usage(
                "give exactly one of --type/--rank, --fixture or --file".into(),
            ));
        }
        if typed {
            let (Some(letter), Some(rank)) = (&src.letter, src.rank) else {
                return Err(CliError::Usage("--type and --rank go together".into()));
            };
            let t = cartan_type(&TypeArgs {
                letter: letter.clone(),
                rank,
            })?;
            let rs = build_root_system(t);
            return Ok(Setting {
                name: t.to_string(),
                arrangement: reflection_arrangement(&rs),
                ample: Some(rs.weight_sum_pairing()),
                group: GroupSource::Weyl(Box::new(rs)),
            });
        }
        let (name, doc) = match (&src.fixture, &src.file) {
            (Some(f), _) => (f.clone(), fixture(f)?),
            (_, Some(p)) => (p.display().to_string(), load_document(p)?),
            _ => unreachable!("one source is present"),
        };
        let Document::Arrangement(doc) = doc else {
            return Err(CliError::InvalidInput(format!(
                "{name} is a fan, not an arrangement"
            )));
        };
        Ok(Setting {
            name,
            arrangement: doc.arrangement()?,
            group: GroupSource::Generators(doc.generators()?),
            ample: doc.ample()?,
        })
    }

    fn group(&self, cap: usize) -> Result<GroupAction, CliError> {
        Ok(match &self.group {
            GroupSource::Weyl(rs) => GroupAction::weyl_pairing(rs, cap)?,
            GroupSource::Generators(g) if g.is_empty() => {
                GroupAction::trivial(self.arrangement.dim())
            }
            GroupSource::Generators(g) => {
                GroupAction::generated_by(self.arrangement.dim(), g.clone(), cap)?
            }
        })
    }
}

fn hyperplanes(arr: &Arrangement) -> Vec<Vec<i64>> {
    arr.hyperplanes()
        .iter()
        .map(|h| big_ints(h.normal()))
        .collect()
}

fn figure(
    complex: &ChamberComplex,
    title: &str,
    label: impl Fn(usize) -> String,
) -> Result<Figure, CliError> {
    let arr = complex.arrangement();
    let plane = Plane::new(arr.dim(), arr.equality_rows())?;
    Ok(Figure {
        title: title.to_owned(),
        lines: arr
            .covectors()
            .iter()
            .enumerate()
            .map(|(h, c)| (format!("H{h}"), plane.kernel_direction(c)))
            .collect(),
        rays: Vec::new(),
        labels: complex
            .chambers()
            .iter()
            .enumerate()
            .map(|(i, c)| (label(i), plane.point(&c.witness)))
            .collect(),
    })
}

fn wall_dot(
    complex: &ChamberComplex,
    name: &str,
    label: impl Fn(usize) -> String,
    highlight: &BTreeSet<usize>,
) -> DotGraph {
    let graph = complex.wall_graph();
    DotGraph {
        name: name.to_owned(),
        nodes: (0..complex.len())
            .map(|c| (label(c), highlight.contains(&c)))
            .collect(),
        edges: graph
            .edges()
            .iter()
            .map(|e| {
                let hl = highlight.contains(&e.plus) && highlight.contains(&e.minus);
                (
                    e.plus.min(e.minus),
                    e.plus.max(e.minus),
                    format!("H{}", e.hyperplane),
                    hl,
                )
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct RootsReport {
    cartan_type: String,
    rank: usize,
    gram: Vec<Vec<i64>>,
    cartan_matrix: Vec<Vec<i64>>,
    positive_root_count: usize,
    positive_roots: Vec<Vec<i64>>,
    labels: Vec<String>,
}

fn roots(t: &TypeArgs) -> Result<String, CliError> {
    let rs = build_root_system(cartan_type(t)?);
    Ok(json(&RootsReport {
        cartan_type: rs.cartan_type().to_string(),
        rank: rs.rank(),
        gram: rs.gram_ints().to_vec(),
        cartan_matrix: int_matrix(rs.cartan_matrix()),
        positive_root_count: rs.positive_roots().len(),
        positive_roots: rs.positive_roots().to_vec(),
        labels: rs.positive_roots().iter().map(|r| root_label(r)).collect(),
    }))
}

#[derive(Serialize)]
struct WeylReport {
    cartan_type: String,
    order: usize,
    generators: Vec<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<Vec<Vec<i64>>>>,
}

fn weyl(a: &WeylArgs) -> Result<String, CliError> {
    let rs = build_root_system(cartan_type(&a.ty)?);
    let w = weyl_group(&rs, a.cap)?;
    Ok(json(&WeylReport {
        cartan_type: rs.cartan_type().to_string(),
        order: w.order(),
        generators: w.generators().iter().map(|g| g.rows()).collect(),
        elements: a
            .elements
            .then(|| w.elements().iter().map(|g| g.rows()).collect()),
    }))
}

#[derive(Serialize)]
struct ChamberOut {
    index: usize,
    signs: String,
    witness: Vec<String>,
    walls: Vec<usize>,
}

#[derive(Serialize)]
struct WallOut {
    plus: usize,
    minus: usize,
    hyperplane: usize,
}

#[derive(Serialize)]
struct LocationOut {
    point: Vec<String>,
    chamber: Option<usize>,
    on_walls: Vec<usize>,
}

#[derive(Serialize)]
struct ChambersReport {
    source: String,
    dim: usize,
    equalities: Vec<Vec<i64>>,
    hyperplanes: Vec<Vec<i64>>,
    chamber_count: usize,
    chambers: Vec<ChamberOut>,
    walls: Vec<WallOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    location: Option<LocationOut>,
}

fn chambers(a: &ChambersArgs, format: Format) -> Result<String, CliError> {
    let setting = Setting::from_source(&a.source)?;
    let complex = ChamberComplex::new(setting.arrangement.clone());
    let label = |c: usize| format!("C{c}");
    match format {
        Format::Svg => return Ok(svg(&figure(&complex, &setting.name, label)?)),
        Format::Dot => {
            let g = wall_dot(
                &complex,
                &setting.name,
                |c| format!("C{c} {}", complex.chambers()[c].signs),
                &BTreeSet::new(),
            );
            return Ok(dot(&g));
        }
        Format::Json => {}
    }
    let location = match &a.locate {
        None => None,
        Some(p) => {
            let p = parse_vector(p)?;
            let loc = complex.locate(&p)?;
            let (chamber, on_walls) = match loc {
                Location::Chamber(c) => (Some(c), Vec::new()),
                Location::OnWall(w) => (None, w),
            };
            Some(LocationOut {
                point: fractions(&p),
                chamber,
                on_walls,
            })
        }
    };
    let arr = complex.arrangement();
    Ok(json(&ChambersReport {
        source: setting.name.clone(),
        dim: arr.dim(),
        equalities: arr.equalities().iter().map(big_ints).collect(),
        hyperplanes: hyperplanes(arr),
        chamber_count: complex.len(),
        chambers: complex
            .chambers()
            .iter()
            .enumerate()
            .map(|(i, c)| ChamberOut {
                index: i,
                signs: c.signs.to_string(),
                witness: fractions(&c.witness),
                walls: complex.facet_hyperplanes(i),
            })
            .collect(),
        walls: complex
            .wall_graph()
            .edges()
            .iter()
            .map(|e| WallOut {
                plus: e.plus,
                minus: e.minus,
                hyperplane: e.hyperplane,
            })
            .collect(),
        location,
    }))
}

fn decomposition(a: &MovArgs) -> Result<(Setting, RatVec, MovDecomposition), CliError> {
    let setting = Setting::from_source(&a.source)?;
    let complex = ChamberComplex::new(setting.arrangement.clone());
    let ample = match (&a.ample, &setting.ample) {
        (Some(s), _) => parse_vector(s)?,
        (None, Some(v)) => v.clone(),
        (None, None) => complex.chambers()[0].witness.clone(),
    };
    let group = setting.group(a.source.cap)?;
    let order = match a.order {
        OrderArg::Ascending => WallOrder::Ascending,
        OrderArg::Descending => WallOrder::Descending,
    };
    let dec = mov_decomposition(complex, group, &ample, order)?;
    Ok((setting, ample, dec))
}

fn mov_graphics(
    setting: &Setting,
    dec: &MovDecomposition,
    format: Format,
) -> Result<Option<String>, CliError> {
    let mov: BTreeSet<usize> = dec.mov_chambers().iter().copied().collect();
    let label = |c: usize| {
        if mov.contains(&c) {
            format!("C{c}*")
        } else {
            format!("C{c}")
        }
    };
    Ok(match format {
        Format::Svg => Some(svg(&figure(dec.complex(), &setting.name, label)?)),
        Format::Dot => Some(dot(&wall_dot(
            dec.complex(),
            &setting.name,
            |c| format!("C{c} {}", dec.signs(c)),
            &mov,
        ))),
        Format::Json => None,
    })
}

#[derive(Serialize)]
struct TileOut {
    chamber: usize,
    element: usize,
    mov_chamber: usize,
}

#[derive(Serialize)]
struct MovReport {
    source: String,
    chamber_count: usize,
    hyperplanes: Vec<Vec<i64>>,
    group_order: usize,
    wall_order: &'static str,
    ample_class: Vec<String>,
    ample_chamber: usize,
    mov: Vec<usize>,
    mov_signs: Vec<String>,
    resolution_count: usize,
    flop_edges: Vec<WallOut>,
    flop_graph_connected: bool,
    tiles: bool,
    tiling: Vec<TileOut>,
}

fn wall_order_name(o: WallOrder) -> &'static str {
    match o {
        WallOrder::Ascending => "ascending",
        WallOrder::Descending => "descending",
    }
}

fn mov(a: &MovArgs, format: Format) -> Result<String, CliError> {
    let (setting, ample, dec) = decomposition(a)?;
    if let Some(g) = mov_graphics(&setting, &dec, format)? {
        return Ok(g);
    }
    Ok(json(&MovReport {
        source: setting.name.clone(),
        chamber_count: dec.complex().len(),
        hyperplanes: hyperplanes(dec.arrangement()),
        group_order: dec.group().order(),
        wall_order: wall_order_name(dec.wall_order()),
        ample_class: fractions(&ample),
        ample_chamber: dec.ample_chamber(),
        mov: dec.mov_chambers().to_vec(),
        mov_signs: dec
            .mov_chambers()
            .iter()
            .map(|&c| dec.signs(c).to_string())
            .collect(),
        resolution_count: dec.resolution_count(),
        flop_edges: dec
            .flop_edges()
            .iter()
            .map(|e| WallOut {
                plus: e.plus,
                minus: e.minus,
                hyperplane: e.hyperplane,
            })
            .collect(),
        flop_graph_connected: dec.flop_graph_connected(),
        tiles: dec.tiles(),
        tiling: dec
            .tiling()
            .iter()
            .enumerate()
            .map(|(c, &(w, m))| TileOut {
                chamber: c,
                element: w,
                mov_chamber: m,
            })
            .collect(),
    }))
}

#[derive(Serialize)]
struct FlopOut {
    from: usize,
    to: usize,
    hyperplane: usize,
    normal: Vec<i64>,
    from_signs: String,
    to_signs: String,
}

#[derive(Serialize)]
struct BoundaryOut {
    chamber: usize,
    hyperplane: usize,
    normal: Vec<i64>,
}

#[derive(Serialize)]
struct FlopsReport {
    source: String,
    resolution_count: usize,
    mov: Vec<usize>,
    flops: Vec<FlopOut>,
    boundary: Vec<BoundaryOut>,
}

fn flops(a: &MovArgs, format: Format) -> Result<String, CliError> {
    let (setting, _, dec) = decomposition(a)?;
    if let Some(g) = mov_graphics(&setting, &dec, format)? {
        return Ok(g);
    }
    let normal = |h: usize| big_ints(dec.arrangement().hyperplanes()[h].normal());
    let mut flops = Vec::new();
    let mut boundary = Vec::new();
    for &c in dec.mov_chambers() {
        for (_, h) in dec.wall_graph().neighbors(c) {
            match flop(&dec, c, h) {
                Ok(d) if c < d => flops.push(FlopOut {
                    from: c,
                    to: d,
                    hyperplane: h,
                    normal: normal(h),
                    from_signs: dec.signs(c).to_string(),
                    to_signs: dec.signs(d).to_string(),
                }),
                Ok(_) => {}
                Err(MovError::BoundaryWall { .. }) => boundary.push(BoundaryOut {
                    chamber: c,
                    hyperplane: h,
                    normal: normal(h),
                }),
                Err(e) => return Err(e.into()),
            }
        }
    }
    Ok(json(&FlopsReport {
        source: setting.name.clone(),
        resolution_count: dec.resolution_count(),
        mov: dec.mov_chambers().to_vec(),
        flops,
        boundary,
    }))
}

#[derive(Serialize)]
struct DiagramOut {
    chamber: usize,
    signs: String,
    base: Vec<Vec<i64>>,
    white: Vec<usize>,
    black_labels: Vec<String>,
    white_labels: Vec<String>,
    picture: String,
}

#[derive(Serialize)]
struct MovablePart {
    ample_class: Vec<String>,
    mov: Vec<usize>,
    resolution_count: usize,
    flop_edges: Vec<WallOut>,
}

#[derive(Serialize)]
struct ParabolicReport {
    cartan_type: String,
    levi: Vec<usize>,
    coordinates: Vec<String>,
    hyperplanes: Vec<Vec<i64>>,
    chamber_count: usize,
    diagrams: Vec<DiagramOut>,
    weyl_order: usize,
    /// Absent when some group element fixes a chamber.
    movable: Option<MovablePart>,
}

fn parabolic(a: &ParabolicArgs, format: Format) -> Result<String, CliError> {
    let t = cartan_type(&a.ty)?;
    let marked = MarkedDynkin::from_labels(t, &a.levi)?;
    let levi: Vec<usize> = marked.levi().iter().copied().collect();
    let setting = LeviSetting::new(build_root_system(t), &levi)?;
    let diagrams = setting.parabolics()?;
    let complex = setting.complex();
    let name = format!("{t} levi {:?}", a.levi);
    let black = |c: usize| {
        let labels: Vec<String> = diagrams[c]
            .black_roots()
            .iter()
            .map(|r| root_label(r))
            .collect();
        format!("C{c} {{{}}}", labels.join(", "))
    };
    match format {
        Format::Svg => return Ok(svg(&figure(complex, &name, |c| format!("C{c}"))?)),
        Format::Dot => return Ok(dot(&wall_dot(complex, &name, black, &BTreeSet::new()))),
        Format::Json => {}
    }
    let group = setting.restricted_weyl(a.cap)?;
    let weyl_order = group.order();
    let ample = RatVec::new(vec![
        Rational::from_integer(1.into());
        complex.arrangement().dim()
    ]);
    let movable = match mov_decomposition(complex.clone(), group, &ample, WallOrder::Ascending) {
        Ok(dec) => Some(MovablePart {
            ample_class: fractions(&ample),
            mov: dec.mov_chambers().to_vec(),
            resolution_count: dec.resolution_count(),
            flop_edges: dec
                .flop_edges()
                .iter()
                .map(|e| WallOut {
                    plus: e.plus,
                    minus: e.minus,
                    hyperplane: e.hyperplane,
                })
                .collect(),
        }),
        Err(MovError::FixedChamber { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(json(&ParabolicReport {
        cartan_type: t.to_string(),
        levi: marked.levi().iter().map(|i| i + 1).collect(),
        coordinates: marked
            .complement()
            .iter()
            .map(|j| format!("(x,α{})", j + 1))
            .collect(),
        hyperplanes: hyperplanes(complex.arrangement()),
        chamber_count: complex.len(),
        diagrams: diagrams
            .iter()
            .map(|d| DiagramOut {
                chamber: d.chamber,
                signs: complex.chambers()[d.chamber].signs.to_string(),
                base: d.base.clone(),
                white: d.white.clone(),
                black_labels: d.black_roots().iter().map(|r| root_label(r)).collect(),
                white_labels: d.white_roots().iter().map(|r| root_label(r)).collect(),
                picture: render_diagram(&t, d),
            })
            .collect(),
        weyl_order,
        movable,
    }))
}

#[derive(Serialize)]
struct DiscReport {
    point: Vec<String>,
    sigma: Vec<String>,
    discriminant: String,
    singular: bool,
    pairs: Vec<[usize; 2]>,
    singular_values: Vec<String>,
    types: Vec<String>,
}

#[derive(Serialize)]
struct SingularOut {
    z: String,
    #[serde(rename = "type")]
    kind: String,
}

#[derive(Serialize)]
struct TypesReport {
    point: Vec<String>,
    types: Vec<SingularOut>,
}

#[derive(Serialize)]
struct RaysReport {
    n: usize,
    rays: Vec<Vec<i64>>,
    pairings: Vec<Vec<i64>>,
    facets: Vec<Vec<i64>>,
    equals_antidominant_chamber: bool,
}

#[derive(Serialize)]
struct AlphaReport {
    n: usize,
    alpha: Vec<Vec<i64>>,
    alpha_gram: Vec<Vec<i64>>,
    intersection_gram: Vec<Vec<i64>>,
    reverses_sign: bool,
}

#[derive(Serialize)]
struct H2Report {
    ambient: String,
    tag: String,
    h2_type: String,
    table_version: u32,
}

fn slice(cmd: &SliceCommand) -> Result<String, CliError> {
    match cmd {
        SliceCommand::Disc(p) => {
            let p = SlicePoint::new(parse_vector(&p.point)?)?;
            let report = fiber_is_singular(&p)?;
            Ok(json(&DiscReport {
                point: fractions(p.coords()),
                sigma: elementary_symmetric_coeffs(&p)
                    .iter()
                    .map(rational_fraction)
                    .collect(),
                discriminant: rational_fraction(&report.discriminant),
                singular: report.singular,
                pairs: report.pairs.iter().map(|&(i, j)| [i, j]).collect(),
                singular_values: report
                    .singular_values
                    .iter()
                    .map(rational_fraction)
                    .collect(),
                types: singularity_types(&p)
                    .iter()
                    .map(|s| s.kind.to_string())
                    .collect(),
            }))
        }
        SliceCommand::Types(p) => {
            let p = SlicePoint::new(parse_vector(&p.point)?)?;
            Ok(json(&TypesReport {
                point: fractions(p.coords()),
                types: singularity_types(&p)
                    .iter()
                    .map(|s| SingularOut {
                        z: rational_fraction(&s.z),
                        kind: s.kind.to_string(),
                    })
                    .collect(),
            }))
        }
        SliceCommand::Rays(s) => {
            let rays = ample_chamber_rays(s.n)?;
            let alpha = alpha_map(s.n)?;
            let int = |v: &RatVec| -> Vec<i64> {
                v.coords()
                    .iter()
                    .map(|x| x.to_integer().to_i64().expect("small"))
                    .collect()
            };
            let cone = ray_cone(s.n)?;
            Ok(json(&RaysReport {
                n: s.n,
                rays: rays.iter().map(int).collect(),
                pairings: rays
                    .iter()
                    .map(|r| {
                        (0..s.n - 1)
                            .map(|j| {
                                r.dot(&alpha.column(j))
                                    .to_integer()
                                    .to_i64()
                                    .expect("small")
                            })
                            .collect()
                    })
                    .collect(),
                facets: cone.facets().iter().map(big_ints).collect(),
                equals_antidominant_chamber: cone == antidominant_cone(s.n)?,
            }))
        }
        SliceCommand::Alpha(s) => Ok(json(&AlphaReport {
            n: s.n,
            alpha: int_matrix(&alpha_map(s.n)?),
            alpha_gram: int_matrix(&alpha_gram(s.n)?),
            intersection_gram: int_matrix(&intersection_gram(s.n)?),
            reverses_sign: gram_check(s.n)?,
        })),
        SliceCommand::H2(h) => {
            let ambient = cartan_type(&h.ty)?;
            let tag: OrbitTag = h
                .tag
                .parse()
                .map_err(|_| CliError::Usage(format!("unknown orbit tag {:?}", h.tag)))?;
            let result = slodowy_h2_type(ambient, tag)?;
            Ok(json(&H2Report {
                ambient: ambient.to_string(),
                tag: tag.to_string(),
                h2_type: result.to_string(),
                table_version: slodowy::table().version,
            }))
        }
    }
}

#[derive(Serialize)]
struct FanReport {
    source: String,
    arrangement_induced: bool,
    cone_count: usize,
    hyperplanes: Vec<Vec<i64>>,
    offending: Vec<usize>,
    missing_chambers: usize,
}

fn fan_check(src: &FanSource, format: Format) -> Result<String, CliError> {
    let (name, doc) = match (&src.fixture, &src.file) {
        (Some(f), None) => (f.clone(), fixture(f)?),
        (None, Some(p)) => (p.display().to_string(), load_document(p)?),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --fixture or --file".into(),
            ))
        }
    };
    let Document::Fan(doc) = doc else {
        return Err(CliError::InvalidInput(format!(
            "{name} is an arrangement, not a fan"
        )));
    };
    let fan = doc.fan()?;
    if format == Format::Svg {
        let eqs: Vec<RatVec> = fan
            .equalities()
            .iter()
            .map(|e| RatVec::from_bigints(e))
            .collect();
        let plane = Plane::new(fan.dim(), &eqs)?;
        let mut rays: Vec<[f64; 2]> = Vec::new();
        let mut seen = BTreeSet::new();
        let mut labels = Vec::new();
        for (i, cone) in fan.cones().iter().enumerate() {
            let mut sum = [0.0, 0.0];
            for g in cone.generators() {
                let p = plane.point(&RatVec::from_bigints(g));
                let n = (p[0] * p[0] + p[1] * p[1]).sqrt();
                sum = [sum[0] + p[0] / n, sum[1] + p[1] / n];
                if seen.insert(g.clone()) {
                    rays.push(p);
                }
            }
            labels.push((format!("K{i}"), sum));
        }
        return Ok(svg(&Figure {
            title: name,
            lines: Vec::new(),
            rays,
            labels,
        }));
    }
    let report = is_arrangement_induced(&fan)?;
    Ok(json(&FanReport {
        source: name,
        arrangement_induced: report.induced,
        cone_count: fan.cones().len(),
        hyperplanes: hyperplanes(&report.arrangement),
        offending: report.offending,
        missing_chambers: report.missing_chambers,
    }))
}

#[derive(Serialize)]
struct FixtureOut {
    name: &'static str,
    kind: &'static str,
    description: String,
}

#[derive(Serialize)]
struct FixtureList {
    fixtures: Vec<FixtureOut>,
}

fn fixtures(cmd: &FixturesCommand) -> Result<String, CliError> {
    match cmd {
        FixturesCommand::List => Ok(json(&FixtureList {
            fixtures: NAMES
                .iter()
                .map(|&name| {
                    let doc = fixture(name).expect("listed fixtures exist");
                    FixtureOut {
                        name,
                        kind: doc.kind(),
                        description: doc.description().to_owned(),
                    }
                })
                .collect(),
        })),
        FixturesCommand::Emit(e) => Ok(json(&fixture(&e.name)?)),
    }
}

/// Run `cmd`, producing the text to emit.
pub fn execute(cmd: &Command, format: Format) -> Result<String, CliError> {
    if !cmd.formats().contains(&format) {
        return Err(CliError::FormatUnavailable {
            format: format.name().to_owned(),
            command: cmd.name().to_owned(),
        });
    }
    match cmd {
        Command::Roots(t) => roots(t),
        Command::Weyl(w) => weyl(w),
        Command::Chambers(c) => chambers(c, format),
        Command::Mov(m) => mov(m, format),
        Command::Flops(m) => flops(m, format),
        Command::Parabolic(p) => parabolic(p, format),
        Command::Slice(s) => slice(s),
        Command::Fan(FanCommand::Check(f)) => fan_check(f, format),
        Command::Fixtures(f) => fixtures(f),
    }
}
