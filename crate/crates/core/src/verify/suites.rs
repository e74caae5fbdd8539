//! Named invariant suites. Each check carries a short detail string so that
//! failures are self-explaining.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::convex::{inradius, ratio_scan_convex, solve_convex, ConvexRegion};
use crate::error::{Error, Result};
use crate::gallery::{self, BowTie, PinocchioShape, TwoEars};
use crate::geom::{offset_outward_disk, Arc, ArcPolygon, BoundaryPiece, Orientation, Point2, Vec2};
use crate::math::{cos, sin, sqrt, FRAC_PI_2, PI, TAU};
use crate::solver::{check_free_boundary, ratio_scan_oracle, solve_strip, CheegerSolution};
use crate::spine::{SpinePiece, Strip};
use crate::verify::continuity::{continuity_test, Domain};
use crate::verify::families::{StripFamily, LADDER};
use crate::verify::minkowski::minkowski_content;
use crate::verify::raster::{grid_area, grid_perimeter, rasterize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass, detail: detail.into() }
    }

    fn err(name: impl Into<String>, e: &Error) -> Self {
        Check::new(name, false, format!("error: {e}"))
    }
}

pub const SUITES: [&str; 6] = ["steiner", "bounds", "asymptotic", "gallery", "continuity", "oracle"];

pub fn run_suite(name: &str) -> Result<Vec<Check>> {
    let lad = || ladder();
    Ok(match name {
        "steiner" => {
            let l = lad()?;
            let mut v = random_steiner_checks(50, 0x5bd1_e995);
            v.extend(minkowski_checks());
            v.extend(strip_measure_checks(&l));
            v.extend(steiner_ratio_checks(&l));
            v
        }
        "bounds" => bounds_checks(&lad()?),
        "asymptotic" => asymptotic_checks(&lad()?),
        "gallery" => {
            let mut v = pinocchio_checks();
            v.extend(two_balls_checks());
            v.extend(two_ears_checks());
            v.extend(bowtie_checks());
            v
        }
        "continuity" => {
            let mut v = continuity_checks();
            v.extend(scaling_checks());
            v.extend(monotonicity_checks());
            v
        }
        "oracle" => {
            let l = lad()?;
            let mut v = disk_checks();
            v.extend(square_checks());
            v.extend(straight_oracle_checks());
            v.extend(scan_checks(&l));
            v.extend(raster_checks());
            v
        }
        other => return Err(Error::domain(format!("unknown suite '{other}'"))),
    })
}

/// One solved strip of the ladder.
#[derive(Clone, Debug)]
pub struct LadderEntry {
    pub family: StripFamily,
    pub length: f64,
    pub strip: Strip,
    pub solution: CheegerSolution,
}

impl LadderEntry {
    pub fn label(&self) -> String {
        format!("{} L={:.4}", self.family.name(), self.length)
    }
}

/// Every family at every ladder length, solved.
pub fn ladder() -> Result<Vec<LadderEntry>> {
    let mut out = Vec::new();
    for fam in StripFamily::all() {
        for &l in LADDER.iter() {
            let strip = fam.strip(l)?;
            let solution = solve_strip(&strip)?;
            out.push(LadderEntry { family: fam, length: l, strip, solution });
        }
    }
    Ok(out)
}

fn unit_square() -> ConvexRegion {
    ConvexRegion::new(ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0).expect("square")).expect("convex")
}

fn rectangle(w: f64, h: f64) -> ConvexRegion {
    ConvexRegion::new(ArcPolygon::rectangle(0.0, 0.0, w, h).expect("rectangle")).expect("convex")
}

fn stadium() -> ArcPolygon {
    ArcPolygon::new(alloc::vec![
        BoundaryPiece::segment(Vec2::new(-1.0, -1.0), Vec2::new(1.0, -1.0)),
        BoundaryPiece::Arc(Arc::new(Vec2::new(1.0, 0.0), 1.0, -FRAC_PI_2, PI, Orientation::Ccw)),
        BoundaryPiece::segment(Vec2::new(1.0, 1.0), Vec2::new(-1.0, 1.0)),
        BoundaryPiece::Arc(Arc::new(Vec2::new(-1.0, 0.0), 1.0, FRAC_PI_2, PI, Orientation::Ccw)),
    ])
    .expect("stadium")
}

/// Vertices on a random ellipse, sorted by angle.
pub fn random_convex_polygon(rng: &mut ChaCha8Rng) -> Result<ConvexRegion> {
    let n = rng.gen_range(3..=12);
    let (a, b) = (rng.gen_range(0.5..2.0), rng.gen_range(0.5..2.0));
    let rot: f64 = rng.gen_range(0.0..TAU);
    let c = Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
    angles.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let pts: Vec<Point2> = angles
        .iter()
        .map(|&t| {
            let (x, y) = (a * cos(t), b * sin(t));
            c + Vec2::new(x * cos(rot) - y * sin(rot), x * sin(rot) + y * cos(rot))
        })
        .collect();
    ConvexRegion::from_vertices(&pts)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

/// Steiner's area and perimeter identities under outward offsets.
pub fn random_steiner_checks(count: usize, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut made = 0;
    while made < count {
        let c = match random_convex_polygon(&mut rng) {
            Ok(c) => c,
            Err(_) => continue,
        };
        made += 1;
        let p = c.region();
        let (a, per) = (p.area(), p.perimeter());
        let mut worst: f64 = 0.0;
        let mut failure = None;
        for rho in [0.05, 0.3, 1.5] {
            match offset_outward_disk(p, rho) {
                Ok(q) => {
                    worst = worst.max(rel(q.area(), a + rho * per + PI * rho * rho));
                    worst = worst.max(rel(q.perimeter(), per + TAU * rho));
                }
                Err(e) => failure = Some(e),
            }
        }
        let name = format!("steiner random polygon #{made} ({} vertices)", p.len());
        out.push(match failure {
            Some(e) => Check::err(name, &e),
            None => Check::new(name, worst <= 1e-9, format!("max relative error {worst:.2e}")),
        });
    }
    out
}

/// Minkowski content against perimeter on positive-reach regions.
pub fn minkowski_checks() -> Vec<Check> {
    let mut regions: Vec<(String, Result<ArcPolygon>)> = alloc::vec![
        ("unit square".into(), ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0)),
        ("unit disk".into(), ArcPolygon::disk(Vec2::ZERO, 1.0)),
        ("stadium".into(), Ok(stadium())),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..5 {
        regions.push((format!("random polygon #{}", i + 1), random_convex_polygon(&mut rng).map(|c| c.into_region())));
    }
    for fam in StripFamily::all() {
        regions.push((format!("{} strip L=20", fam.name()), fam.strip(20.0).map(|s| s.boundary().clone())));
    }
    regions
        .into_iter()
        .map(|(name, p)| {
            let name = format!("minkowski content {name}");
            match p.and_then(|p| Ok((minkowski_content(&p)?, p.perimeter()))) {
                Ok((m, per)) => Check::new(name, rel(m, per) <= 1e-6, format!("M = {m:.12}, P = {per:.12}")),
                Err(e) => Check::err(name, &e),
            }
        })
        .collect()
}

/// Area `2L` and perimeter `2L + 4` for every ladder strip.
pub fn strip_measure_checks(ladder: &[LadderEntry]) -> Vec<Check> {
    ladder
        .iter()
        .map(|e| {
            let b = e.strip.boundary();
            let (a, p) = (b.area(), b.perimeter());
            let l = e.strip.length();
            let ok = (a - 2.0 * l).abs() <= 1e-9 * 2.0 * l && (p - (2.0 * l + 4.0)).abs() <= 1e-9 * (2.0 * l + 4.0);
            Check::new(format!("strip measures {}", e.label()), ok, format!("area {a:.12}, perimeter {p:.12}"))
        })
        .collect()
}

fn ratio_check(name: String, sol: &CheegerSolution) -> Check {
    let q = sol.steiner_ratio();
    let geo = sol.cheeger_ratio();
    let ok = rel(q, 1.0 / sol.r) <= 1e-9 && rel(geo, 1.0 / sol.r) <= 1e-9;
    Check::new(name, ok, format!("steiner {q:.12}, geometric {geo:.12}, 1/r {:.12}", 1.0 / sol.r))
}

/// `P(E)/|E| = 1/r` at the solved radius, for strips and convex bodies.
pub fn steiner_ratio_checks(ladder: &[LadderEntry]) -> Vec<Check> {
    let mut out: Vec<Check> =
        ladder.iter().map(|e| ratio_check(format!("inner formula ratio {}", e.label()), &e.solution)).collect();
    let mut bodies: Vec<(String, Result<ConvexRegion>)> = alloc::vec![
        ("unit square".into(), Ok(unit_square())),
        ("unit disk".into(), ConvexRegion::disk(Vec2::ZERO, 1.0)),
        ("unit triangle".into(), gallery::unit_triangle()),
        ("stadium".into(), ConvexRegion::new(stadium())),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..5 {
        bodies.push((format!("random polygon #{}", i + 1), random_convex_polygon(&mut rng)));
    }
    for (name, c) in bodies {
        let name = format!("inner formula ratio {name}");
        out.push(match c.and_then(|c| solve_convex(&c)) {
            Ok(sol) => ratio_check(name, &sol),
            Err(e) => Check::err(name, &e),
        });
    }
    out
}

pub fn bounds_checks(ladder: &[LadderEntry]) -> Vec<Check> {
    ladder
        .iter()
        .map(|e| {
            let b = e.solution.bounds.expect("strip solutions carry bounds");
            let h = e.solution.h;
            Check::new(
                format!("bounds {}", e.label()),
                b.contains(h),
                format!("{:.9} ≤ {h:.12} ≤ {:.9}", b.krepra_lower, b.krepra_upper),
            )
        })
        .collect()
}

/// `L²|h − 1 − π/(2L)| ≤ 5`, and the observed order of that deviation
/// between consecutive lengths is at least 1.9.
pub fn asymptotic_checks(ladder: &[LadderEntry]) -> Vec<Check> {
    let mut out = Vec::new();
    for fam in StripFamily::all() {
        let rows: Vec<&LadderEntry> = ladder.iter().filter(|e| e.family == fam).collect();
        let dev = |e: &LadderEntry| (e.solution.h - 1.0 - PI / (2.0 * e.length)).abs();
        for e in &rows {
            let c = e.length * e.length * dev(e);
            out.push(Check::new(format!("asymptotic constant {}", e.label()), c <= 5.0, format!("L²·|dev| = {c:.6}")));
        }
        for w in rows.windows(2) {
            let order = libm::log(dev(w[0]) / dev(w[1])) / libm::log(w[1].length / w[0].length);
            out.push(Check::new(
                format!("asymptotic order {} L={:.4}→{:.4}", fam.name(), w[0].length, w[1].length),
                order >= 1.9,
                format!("observed order {order:.4}"),
            ));
        }
    }
    out
}

pub fn disk_checks() -> Vec<Check> {
    [0.5, 1.0, 3.0]
        .iter()
        .map(|&r| {
            let name = format!("disk R={r}");
            match ConvexRegion::disk(Vec2::new(0.25, -0.5), r).and_then(|d| solve_convex(&d)) {
                Ok(s) => Check::new(name, (s.h - 2.0 / r).abs() <= 1e-10, format!("h = {:.15}", s.h)),
                Err(e) => Check::err(name, &e),
            }
        })
        .collect()
}

pub fn square_checks() -> Vec<Check> {
    let sq = unit_square();
    let exact = 2.0 + sqrt(PI);
    let mut out = Vec::new();
    match solve_convex(&sq) {
        Ok(s) => {
            out.push(Check::new("unit square h", (s.h - exact).abs() <= 1e-9, format!("h = {:.15}", s.h)));
            out.push(Check::new(
                "unit square r",
                (s.r - 1.0 / exact).abs() <= 1e-9,
                format!("r = {:.15}", s.r),
            ));
            match ratio_scan_convex(&sq, 200) {
                Ok(sc) => out.push(Check::new(
                    "unit square scan",
                    (sc.r - s.r).abs() <= 1e-5,
                    format!("scan r = {:.9}", sc.r),
                )),
                Err(e) => out.push(Check::err("unit square scan", &e)),
            }
        }
        Err(e) => out.push(Check::err("unit square h", &e)),
    }
    out
}

/// Smaller root of `(4 − π)r² − (2L + 4)r + 2L = 0`.
pub fn straight_strip_r(l: f64) -> f64 {
    let (a, b, c) = (4.0 - PI, -(2.0 * l + 4.0), 2.0 * l);
    2.0 * c / (-b + sqrt(b * b - 4.0 * a * c))
}

pub fn straight_oracle_checks() -> Vec<Check> {
    let l = 4.5 * PI;
    let name = "straight strip L=9π/2";
    match StripFamily::Straight.strip(l).and_then(|s| solve_strip(&s)) {
        Ok(s) => {
            let h = 1.0 / straight_strip_r(l);
            alloc::vec![Check::new(name, (s.h - h).abs() <= 1e-9, format!("h = {:.12}, closed form {h:.12}", s.h))]
        }
        Err(e) => alloc::vec![Check::err(name, &e)],
    }
}

pub fn scan_checks(ladder: &[LadderEntry]) -> Vec<Check> {
    ladder
        .iter()
        .map(|e| {
            let name = format!("scan vs bisection {}", e.label());
            match ratio_scan_oracle(&e.strip, 100) {
                Ok(sc) => {
                    let d = (sc.r - e.solution.r).abs();
                    Check::new(name, d <= 1e-5, format!("|Δr| = {d:.2e}"))
                }
                Err(err) => Check::err(name, &err),
            }
        })
        .collect()
}

fn raster_check(name: &str, p: &ArcPolygon) -> Check {
    let name = format!("raster {name}");
    let cell = p.diameter() / 500.0;
    let res = rasterize(p, cell).and_then(|m| Ok((grid_area(&m)?, grid_perimeter(&m)?)));
    match res {
        Ok((a, per)) => {
            let (ea, ep) = (rel(a, p.area()), rel(per, p.perimeter()));
            Check::new(name, ea <= 1e-2 && ep <= 2e-2, format!("area error {ea:.2e}, perimeter error {ep:.2e}"))
        }
        Err(e) => Check::err(name, &e),
    }
}

/// Pixel oracle against exact measures on gallery shapes and solver output.
pub fn raster_checks() -> Vec<Check> {
    let mut shapes: Vec<(String, Result<ArcPolygon>)> = alloc::vec![
        ("unit square".into(), ArcPolygon::rectangle(0.0, 0.0, 1.0, 1.0)),
        ("unit disk".into(), ArcPolygon::disk(Vec2::ZERO, 1.0)),
        ("unit triangle".into(), gallery::unit_triangle().map(|c| c.into_region())),
    ];
    let th = gallery::solve_pinocchio_theta();
    shapes.push(("pinocchio P0".into(), PinocchioShape::new(th, 0.0).map(|p| p.region().clone())));
    shapes.push(("pinocchio P(θ0, 0.3)".into(), PinocchioShape::new(th, 0.3).map(|p| p.region().clone())));
    shapes.push(("pinocchio P_2".into(), PinocchioShape::with_nose(th, 2.0).map(|p| p.region().clone())));
    shapes.push((
        "pinocchio bent nose".into(),
        PinocchioShape::with_bent_nose(th, &[SpinePiece::arc(1.0, 0.8), SpinePiece::arc(1.0, -0.8)])
            .map(|p| p.region().clone()),
    ));
    if let Ok(t1) = gallery::two_ears_theta() {
        shapes.push(("two ears".into(), TwoEars::new(t1).map(|q| q.region().clone())));
    }
    match BowTie::tight() {
        Ok(b) => {
            shapes.push(("bow-tie".into(), Ok(b.region().clone())));
            shapes.push(("bow-tie cheeger candidate".into(), b.cheeger_candidate().map(|c| c.set)));
        }
        Err(e) => shapes.push(("bow-tie".into(), Err(e))),
    }
    shapes.push(("unit square cheeger set".into(), solve_convex(&unit_square()).map(|s| s.cheeger_set)));
    for fam in StripFamily::all() {
        let st = fam.strip(4.5 * PI);
        shapes.push((format!("{} strip L=9π/2", fam.name()), st.clone().map(|s| s.boundary().clone())));
        shapes.push((
            format!("{} cheeger set L=9π/2", fam.name()),
            st.and_then(|s| solve_strip(&s)).map(|s| s.cheeger_set),
        ));
    }
    shapes
        .into_iter()
        .map(|(name, p)| match p {
            Ok(p) => raster_check(&name, &p),
            Err(e) => Check::err(format!("raster {name}"), &e),
        })
        .collect()
}

pub fn pinocchio_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let th = gallery::solve_pinocchio_theta();
    out.push(Check::new("pinocchio θ0", (th - 0.531).abs() <= 5e-3, format!("θ0 = {th:.12}")));
    let (g0, g1) = (gallery::pinocchio_g(0.0), gallery::pinocchio_g(FRAC_PI_2));
    out.push(Check::new(
        "pinocchio g endpoints",
        (g0 + PI).abs() <= 1e-12 && (g1 - PI).abs() <= 1e-12,
        format!("g(0) = {g0}, g(π/2) = {g1}"),
    ));
    out.push(Check::new("pinocchio g increasing", gallery::g_monotone_samples(1000), "g' > 0 at 1000 samples"));
    out.push(match gallery::verify_self_cheeger(th) {
        Ok(r) => Check::new(
            "pinocchio self-cheeger inequality",
            true,
            format!("{} samples, min margins {:.3e} / {:.3e}", r.samples, r.min_trig_margin, r.min_ratio_margin),
        ),
        Err(e) => Check::err("pinocchio self-cheeger inequality", &e),
    });
    let family: Result<Vec<(f64, f64, f64)>> = (0..=100).map(|i| gallery::pinocchio_family(0.1 * i as f64)).collect();
    out.push(match family {
        Ok(v) => {
            let q0 = v[0].2;
            let spread = v.iter().map(|x| (x.2 - q0).abs()).fold(0.0, f64::max);
            let r0 = sin(th);
            Check::new(
                "pinocchio family ratio",
                spread <= 1e-12 && (q0 - 1.0 / r0).abs() <= 1e-12,
                format!("max |q(t) − q(0)| = {spread:.2e} on t ∈ [0, 10]"),
            )
        }
        Err(e) => Check::err("pinocchio family ratio", &e),
    });
    let mut geo = |name: &str, shape: Result<PinocchioShape>, exp: Result<(f64, f64)>| {
        let res = shape.and_then(|s| Ok((s, exp?)));
        out.push(match res {
            Ok((s, (a, p))) => {
                let (da, dp) = ((s.region().area() - a).abs(), (s.region().perimeter() - p).abs());
                Check::new(format!("pinocchio geometry {name}"), da <= 1e-9 && dp <= 1e-9, format!("|Δarea| {da:.1e}, |Δperimeter| {dp:.1e}"))
            }
            Err(e) => Check::err(format!("pinocchio geometry {name}"), &e),
        });
    };
    let swap = |r: Result<(f64, f64)>| r.map(|(p, a)| (a, p));
    geo("θ0 α=0.2", PinocchioShape::new(0.531, 0.2), swap(gallery::pinocchio_measures(0.531, 0.2)));
    geo("P0", PinocchioShape::new(th, 0.0), swap(gallery::pinocchio_measures(th, 0.0)));
    let fam2 = gallery::pinocchio_family(2.0).map(|(a, p, _)| (a, p));
    geo("nose t=2", PinocchioShape::with_nose(th, 2.0), fam2.clone());
    geo(
        "bent nose t=2",
        PinocchioShape::with_bent_nose(th, &[SpinePiece::arc(1.0, 0.8), SpinePiece::arc(1.0, -0.8)]),
        fam2,
    );
    out
}

pub fn two_balls_checks() -> Vec<Check> {
    match gallery::two_balls_example() {
        Ok(r) => alloc::vec![
            Check::new(
                "two balls union ratio",
                (r.union_ratio - 30.0 / 13.0).abs() <= 1e-12,
                format!("P/A = {:.15}", r.union_ratio),
            ),
            Check::new(
                "two balls component ratios",
                (r.component_ratios[0] - 2.0).abs() <= 1e-12 && (r.component_ratios[1] - 3.0).abs() <= 1e-12,
                format!("{:?}", r.component_ratios),
            ),
            Check::new(
                "two balls cheeger set is B1",
                r.cheeger_component == 0 && (r.h - 2.0).abs() <= 1e-12 && r.union_of_balls_area > r.cheeger_area,
                format!("h = {}, union of r-balls area {:.6} > {:.6}", r.h, r.union_of_balls_area, r.cheeger_area),
            ),
        ],
        Err(e) => alloc::vec![Check::err("two balls", &e)],
    }
}

pub fn two_ears_checks() -> Vec<Check> {
    let mut out = Vec::new();
    match gallery::two_ears_theta() {
        Ok(th) => {
            let res = gallery::two_ears_measures(th).and_then(|m| Ok((m, TwoEars::new(th)?)));
            match res {
                Ok(((p, a), q)) => {
                    out.push(Check::new(
                        "two ears root",
                        (p / a - 1.0 / sin(th)).abs() <= 1e-10,
                        format!("θ1 = {th:.12}"),
                    ));
                    let (da, dp) = ((q.region().area() - a).abs(), (q.region().perimeter() - p).abs());
                    out.push(Check::new("two ears geometry", da <= 1e-9 && dp <= 1e-9, format!("|Δarea| {da:.1e}, |Δperimeter| {dp:.1e}")));
                    let q0 = p / a;
                    let spread = [(0.5, 0.0), (0.0, 1.5), (2.0, 0.7)]
                        .iter()
                        .map(|&(l, r)| {
                            TwoEars::stretched(th, l, r)
                                .map(|s| (s.region().perimeter() / s.region().area() - q0).abs())
                                .unwrap_or(f64::INFINITY)
                        })
                        .fold(0.0, f64::max);
                    out.push(Check::new("two ears stretched ratio", spread <= 1e-9, format!("max deviation {spread:.2e}")));
                }
                Err(e) => out.push(Check::err("two ears", &e)),
            }
        }
        Err(e) => out.push(Check::err("two ears root", &e)),
    }
    out
}

pub fn bowtie_checks() -> Vec<Check> {
    let mut out = Vec::new();
    match BowTie::tight().and_then(|b| Ok((b.cheeger_candidate()?, b))) {
        Ok((c, b)) => {
            out.push(Check::new(
                "bow-tie candidate ratio",
                rel(c.set.perimeter() / c.set.area(), c.h) <= 1e-9,
                format!("h = {:.9}", c.h),
            ));
            out.push(Check::new(
                "bow-tie symmetry and tangency",
                c.arcs.len() == 4 && c.symmetry_defect <= 1e-9 && c.max_tangent_jump <= 1e-9,
                format!("{} arcs, symmetry {:.1e}, tangent jump {:.1e}", c.arcs.len(), c.symmetry_defect, c.max_tangent_jump),
            ));
            out.push(Check::new(
                "bow-tie below triangle",
                c.h < b.h_triangle,
                format!("{:.9} < {:.9}", c.h, b.h_triangle),
            ));
        }
        Err(e) => out.push(Check::err("bow-tie", &e)),
    }
    match gallery::loose_bowtie_witness() {
        Ok(w) => {
            out.push(Check::new(
                "loose bow-tie reach below r",
                w.union_reach < w.r,
                format!("reach {:.6} < r {:.6}", w.union_reach, w.r),
            ));
            out.push(Check::new(
                "loose bow-tie inner set exceeds πr²",
                w.inner_area > PI * w.r * w.r,
                format!("|E_r| = {:.9}, πr² = {:.9}, 2αr² = {:.9}", w.inner_area, PI * w.r * w.r, w.formula_area),
            ));
        }
        Err(e) => out.push(Check::err("loose bow-tie", &e)),
    }
    out
}

fn square(a: f64) -> Domain {
    Domain::Convex(rectangle(a, a))
}

fn straight(l: f64) -> Result<Domain> {
    StripFamily::Straight.strip(l).map(Domain::Strip)
}

fn continuity_check(name: &str, target: Result<Domain>, seq: Result<Vec<Domain>>, inner: Option<bool>) -> Check {
    let res = target.and_then(|t| Ok((t, seq?))).and_then(|(t, s)| continuity_test(&t, &s));
    match res {
        Ok(r) => {
            let side = match inner {
                Some(true) => r.min_excess >= -1e-12,
                Some(false) => r.h.iter().all(|&h| h <= r.h_target + 1e-12),
                None => true,
            };
            let last = r.deviations.last().copied().unwrap_or(0.0);
            Check::new(
                format!("continuity {name}"),
                r.strictly_decreasing && side,
                format!("h = {:.12}, last deviation {last:.3e}", r.h_target),
            )
        }
        Err(e) => Check::err(format!("continuity {name}"), &e),
    }
}

pub fn continuity_checks() -> Vec<Check> {
    let pow2 = |j: i32| libm::pow(2.0, -(j as f64));
    let mut out = Vec::new();
    out.push(continuity_check(
        "squares 1 − 2^-j",
        Ok(square(1.0)),
        Ok((1..=8).map(|j| square(1.0 - pow2(j))).collect()),
        Some(true),
    ));
    out.push(continuity_check(
        "strips 20(1 − 2^-j)",
        straight(20.0),
        (2..=8).map(|j| straight(20.0 * (1.0 - pow2(j)))).collect(),
        Some(true),
    ));
    out.push(continuity_check(
        "strips 20(1 + 2^-j)",
        straight(20.0),
        (1..=8).map(|j| straight(20.0 * (1.0 + pow2(j)))).collect(),
        Some(false),
    ));
    let meander = |l: f64| StripFamily::Meander(0.5).strip(l).map(Domain::Strip);
    out.push(continuity_check(
        "curved strips 20(1 + 2^-j)",
        meander(20.0),
        (1..=8).map(|j| meander(20.0 * (1.0 + pow2(j)))).collect(),
        None,
    ));
    let name = "continuity constant sequence";
    out.push(match continuity_test(&square(1.0), &[square(1.0), square(1.0), square(1.0)]) {
        Ok(r) => Check::new(name, r.deviations.iter().all(|&d| d == 0.0), format!("{:?}", r.deviations)),
        Err(e) => Check::err(name, &e),
    });
    out
}

/// `h(λΩ) = h(Ω)/λ`.
pub fn scaling_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let convex: Vec<(&str, Result<ConvexRegion>)> = alloc::vec![
        ("unit square", Ok(unit_square())),
        ("unit triangle", gallery::unit_triangle()),
        ("stadium", ConvexRegion::new(stadium())),
    ];
    for (name, c) in convex {
        for lambda in [0.5, 2.0] {
            let label = format!("scaling {name} λ={lambda}");
            let res = c.clone().and_then(|c| Ok((solve_convex(&c)?.h, solve_convex(&c.scaled(lambda)?)?.h)));
            out.push(match res {
                Ok((h, hl)) => Check::new(label, (hl * lambda - h).abs() <= 1e-8, format!("λ·h(λΩ) − h(Ω) = {:.2e}", hl * lambda - h)),
                Err(e) => Check::err(label, &e),
            });
        }
    }
    for fam in StripFamily::all() {
        for lambda in [0.5, 2.0] {
            let label = format!("scaling {} strip L=20 λ={lambda}", fam.name());
            let res = fam.strip(20.0).and_then(|s| Ok((solve_strip(&s)?.h, solve_strip(&s.scaled(lambda)?)?.h)));
            out.push(match res {
                Ok((h, hl)) => Check::new(label, (hl * lambda - h).abs() <= 1e-8, format!("λ·h(λΩ) − h(Ω) = {:.2e}", hl * lambda - h)),
                Err(e) => Check::err(label, &e),
            });
        }
    }
    out
}

/// `Ω₁ ⊂ Ω₂ ⇒ h(Ω₁) ≥ h(Ω₂)` on nested rectangles and strips.
pub fn monotonicity_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let rects = [(1.0, 1.0), (2.0, 1.0), (2.0, 2.0), (3.0, 2.0), (3.0, 3.0)];
    let hs: Result<Vec<f64>> = rects.iter().map(|&(w, h)| solve_convex(&rectangle(w, h)).map(|s| s.h)).collect();
    out.push(match hs {
        Ok(h) => Check::new(
            "monotonicity nested rectangles",
            h.windows(2).all(|w| w[1] <= w[0]),
            format!("{h:.9?}"),
        ),
        Err(e) => Check::err("monotonicity nested rectangles", &e),
    });
    let hs: Result<Vec<f64>> = LADDER.iter().map(|&l| StripFamily::Straight.strip(l).and_then(|s| solve_strip(&s)).map(|s| s.h)).collect();
    out.push(match hs {
        Ok(h) => Check::new("monotonicity nested strips", h.windows(2).all(|w| w[1] <= w[0]), format!("{h:.9?}")),
        Err(e) => Check::err("monotonicity nested strips", &e),
    });
    // A strip of half-width 1 contains the inner set ratio's unit disk and
    // sits inside its bounding rectangle.
    let name = "monotonicity disk ⊂ strip ⊂ box";
    let res = StripFamily::Straight.strip(20.0).and_then(|s| {
        let hs = solve_strip(&s)?.h;
        let hd = solve_convex(&ConvexRegion::disk(Vec2::new(10.0, 0.0), 1.0)?)?.h;
        let bb = s.boundary().bbox();
        let hb = solve_convex(&rectangle(bb.width(), bb.height() + 1.0))?.h;
        Ok((hd, hs, hb))
    });
    out.push(match res {
        Ok((hd, hs, hb)) => Check::new(name, hd >= hs && hs >= hb, format!("{hd:.9} ≥ {hs:.9} ≥ {hb:.9}")),
        Err(e) => Check::err(name, &e),
    });
    out
}

/// Free-boundary structure of the ladder Cheeger sets.
pub fn free_boundary_checks(ladder: &[LadderEntry]) -> Vec<Check> {
    ladder
        .iter()
        .map(|e| {
            let name = format!("free boundary {}", e.label());
            match check_free_boundary(&e.solution, &e.strip) {
                Ok(r) => Check::new(name, r.arcs.len() == 4, format!("{} arcs of radius r", r.arcs.len())),
                Err(err) => Check::err(name, &err),
            }
        })
        .collect()
}

#[allow(dead_code)]
fn inradius_of(c: &ConvexRegion) -> f64 {
    inradius(c)
}
