//! Lozenge tilings and tropical pseudoline arrangements of trianguloids
//! with three left vertices, plus an SVG renderer.
//!
//! Lattice points are projected to the plane by `p ↦ Σ p_i u_i` with unit
//! vectors `u_1, u_2, u_3` at 120° apart. A point `p` of `(n−1)Δ` then lands
//! on the centroid of the upright unit triangle with corners `p + e_i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::TilingError;
use crate::graph::DisjointSets;
use crate::lattice::{plus, points_pg_minus, simplex_points, Point};
use crate::trianguloid::{check_axioms, Trianguloid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SegmentKind {
    /// An edge of the lozenge tiling, between points of coordinate sum `n`.
    Solid,
    /// A piece of a pseudoline, between points of coordinate sum `n − 1`.
    Dashed,
}

/// A segment with sorted endpoints. Dashed segments carry a 0-based right
/// vertex label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TilingSegment {
    pub kind: SegmentKind,
    pub from: Point,
    pub to: Point,
    pub label: Option<usize>,
}

impl TilingSegment {
    fn new(kind: SegmentKind, a: Point, b: Point, label: Option<usize>) -> Self {
        let (from, to) = if a <= b { (a, b) } else { (b, a) };
        TilingSegment {
            kind,
            from,
            to,
            label,
        }
    }
}

/// One hexagon `c` with its distinguished direction `j` and the two
/// remaining directions `i < k`.
struct Hexagon {
    c: Point,
    i: usize,
    j: usize,
    k: usize,
}

fn hexagons(t: &Trianguloid) -> Result<Vec<Hexagon>, TilingError> {
    if t.m() != 3 {
        return Err(TilingError::NotThreeRows(t.m()));
    }
    if !check_axioms(t).is_trianguloid {
        return Err(TilingError::NotTrianguloid);
    }
    let n = t.n();
    if n < 2 {
        return Ok(Vec::new());
    }
    let pgm = points_pg_minus(t.graph());
    let from = |b: Point, i: usize| t.entry_from(&b, i).expect("edge of Γ");
    let mut out = Vec::new();
    for c in simplex_points(3, n as u32 - 2) {
        if (0..3).any(|x| !pgm.contains(&plus(&c, x))) {
            continue;
        }
        let differing: Vec<usize> = (0..3)
            .filter(|&j| {
                let (i, k) = others(j);
                from(plus(&c, i), j) != from(plus(&c, k), j)
            })
            .collect();
        let [j] = differing[..] else {
            return Err(TilingError::Degenerate { c });
        };
        let (i, k) = others(j);
        let holds = from(plus(&c, i), k) == from(plus(&c, j), k)
            && from(plus(&c, j), i) == from(plus(&c, k), i);
        if !holds {
            return Err(TilingError::Degenerate { c });
        }
        out.push(Hexagon { c, i, j, k });
    }
    Ok(out)
}

fn others(j: usize) -> (usize, usize) {
    match j {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Edges of the lozenge tiling: two edges per hexagon plus the unit
/// segments of the boundary of `nΔ`.
pub fn tiling_segments(t: &Trianguloid) -> Result<Vec<TilingSegment>, TilingError> {
    let hex = hexagons(t)?;
    let n = t.n() as u32;
    let mut out = BTreeSet::new();
    for h in &hex {
        let corner = plus(&plus(&h.c, h.i), h.k);
        for x in [h.i, h.k] {
            let end = plus(&plus(&h.c, x), h.j);
            out.insert(TilingSegment::new(
                SegmentKind::Solid,
                corner.clone(),
                end,
                None,
            ));
        }
    }
    for p in simplex_points(3, n - 1) {
        for z in 0..3 {
            if p[z] == 0 {
                let (a, b) = others(z);
                out.insert(TilingSegment::new(
                    SegmentKind::Solid,
                    plus(&p, a),
                    plus(&p, b),
                    None,
                ));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Pieces of the pseudolines: per hexagon, `c+e_i to c+e_j` labeled by the
/// element of `𝕋(c+e_i →_j) ∖ 𝕋(c+e_k →_j)` and `c+e_k to c+e_j` by the
/// reverse difference.
pub fn pseudoline_segments(t: &Trianguloid) -> Result<Vec<TilingSegment>, TilingError> {
    let hex = hexagons(t)?;
    let mut out = BTreeSet::new();
    for h in &hex {
        let (bi, bj, bk) = (plus(&h.c, h.i), plus(&h.c, h.j), plus(&h.c, h.k));
        let si = t.entry_from(&bi, h.j).expect("edge of Γ");
        let sk = t.entry_from(&bk, h.j).expect("edge of Γ");
        let single = |mask: u32| -> Result<usize, TilingError> {
            if mask.count_ones() == 1 {
                Ok(mask.trailing_zeros() as usize)
            } else {
                Err(TilingError::Degenerate { c: h.c.clone() })
            }
        };
        let x = single(si & !sk)?;
        let y = single(sk & !si)?;
        out.insert(TilingSegment::new(
            SegmentKind::Dashed,
            bi,
            bj.clone(),
            Some(x),
        ));
        out.insert(TilingSegment::new(SegmentKind::Dashed, bk, bj, Some(y)));
    }
    Ok(out.into_iter().collect())
}

/// Faces of the subdivision of `nΔ` cut out by a set of solid segments.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FaceCensus {
    pub lozenges: usize,
    pub upright: usize,
    /// Faces that are neither a lozenge nor a single upright triangle.
    pub other: usize,
    /// Segments that are not unit edges of the triangular grid.
    pub stray: usize,
}

/// Merges unit triangles across every grid edge missing from `segments`
/// and classifies the resulting faces.
pub fn face_census(segments: &[TilingSegment], n: usize) -> FaceCensus {
    let mut census = FaceCensus::default();
    if n == 0 {
        return census;
    }
    let solid: BTreeSet<(Point, Point)> = segments
        .iter()
        .filter(|s| s.kind == SegmentKind::Solid)
        .map(|s| (s.from.clone(), s.to.clone()))
        .collect();
    let ups = simplex_points(3, n as u32 - 1);
    let downs = if n >= 2 {
        simplex_points(3, n as u32 - 2)
    } else {
        Vec::new()
    };
    let up_index: BTreeMap<&Point, usize> = ups.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut grid = BTreeSet::new();
    for p in &ups {
        for z in 0..3 {
            let (a, b) = others(z);
            grid.insert(sorted_pair(plus(p, a), plus(p, b)));
        }
    }
    census.stray = solid.iter().filter(|e| !grid.contains(*e)).count();
    let mut sets = DisjointSets::new(ups.len() + downs.len());
    for (d, c) in downs.iter().enumerate() {
        for j in 0..3 {
            let (i, k) = others(j);
            let up = plus(c, j);
            let edge = sorted_pair(plus(&up, i), plus(&up, k));
            if !solid.contains(&edge) {
                sets.union(ups.len() + d, up_index[&up]);
            }
        }
    }
    let mut faces: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for x in 0..ups.len() + downs.len() {
        let f = faces.entry(sets.find(x)).or_default();
        if x < ups.len() {
            f.0 += 1;
        } else {
            f.1 += 1;
        }
    }
    for (u, d) in faces.values() {
        match (u, d) {
            (1, 0) => census.upright += 1,
            (1, 1) => census.lozenges += 1,
            _ => census.other += 1,
        }
    }
    census
}

fn sorted_pair(a: Point, b: Point) -> (Point, Point) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Checks that dashed segments form a pseudoline arrangement on the points
/// of `(n−1)Δ`: each label's arcs form a tree with at most one vertex of
/// degree three, any two labels share exactly one point, and no point lies
/// on three labels. Returns the problems found.
pub fn pseudoline_problems(segments: &[TilingSegment], n: usize) -> Vec<String> {
    let mut problems = Vec::new();
    let mut arcs: Vec<Vec<(&Point, &Point)>> = vec![Vec::new(); n];
    for s in segments.iter().filter(|s| s.kind == SegmentKind::Dashed) {
        match s.label {
            Some(x) if x < n => arcs[x].push((&s.from, &s.to)),
            _ => problems.push(format!(
                "dashed segment {:?}-{:?} has a bad label",
                s.from, s.to
            )),
        }
    }
    let mut vertex_sets: Vec<BTreeSet<&Point>> = Vec::with_capacity(n);
    for (x, list) in arcs.iter().enumerate() {
        let mut degree: BTreeMap<&Point, usize> = BTreeMap::new();
        for &(a, b) in list {
            *degree.entry(a).or_default() += 1;
            *degree.entry(b).or_default() += 1;
        }
        let verts: Vec<&Point> = degree.keys().copied().collect();
        let index: BTreeMap<&Point, usize> =
            verts.iter().enumerate().map(|(k, p)| (*p, k)).collect();
        let mut sets = DisjointSets::new(verts.len());
        let mut acyclic = true;
        for &(a, b) in list {
            acyclic &= sets.union(index[a], index[b]);
        }
        let connected = (0..verts.len()).all(|v| sets.find(v) == sets.find(0));
        if !acyclic || !connected {
            problems.push(format!("label {} does not form a tree", x + 1));
        }
        let trivalent = degree.values().filter(|&&d| d == 3).count();
        if trivalent > 1 || degree.values().any(|&d| d > 3) {
            problems.push(format!("label {} has more than one branch point", x + 1));
        }
        vertex_sets.push(verts.into_iter().collect());
    }
    if n >= 2 {
        for x in 0..n {
            for y in x + 1..n {
                let shared = vertex_sets[x].intersection(&vertex_sets[y]).count();
                if shared != 1 {
                    problems.push(format!(
                        "labels {} and {} meet {shared} times",
                        x + 1,
                        y + 1
                    ));
                }
            }
        }
    }
    let mut load: BTreeMap<&Point, usize> = BTreeMap::new();
    for set in &vertex_sets {
        for p in set {
            *load.entry(p).or_default() += 1;
        }
    }
    for (p, k) in load {
        if k > 2 {
            problems.push(format!("{k} labels pass through {p:?}"));
        }
    }
    problems
}

/// Which layers to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Layers {
    pub tiling: bool,
    pub pseudolines: bool,
    pub trianguloid: bool,
}

impl Default for Layers {
    fn default() -> Self {
        Layers {
            tiling: true,
            pseudolines: true,
            trianguloid: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Style {
    /// Length of a unit lattice step in SVG units.
    pub unit: f64,
    pub margin: f64,
    pub layers: Layers,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            unit: 60.0,
            margin: 30.0,
            layers: Layers::default(),
        }
    }
}

const SQRT3_2: f64 = 0.866_025_403_784_438_6;
const DIRECTIONS: [(f64, f64); 3] = [(0.0, 1.0), (-SQRT3_2, -0.5), (SQRT3_2, -0.5)];

fn project(p: &[u32]) -> (f64, f64) {
    p.iter()
        .zip(DIRECTIONS)
        .fold((0.0, 0.0), |(x, y), (&c, (dx, dy))| {
            (x + c as f64 * dx, y + c as f64 * dy)
        })
}

fn num(v: f64) -> String {
    let r = (v * 1000.0).round() / 1000.0;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r:.3}")
}

fn label_text(mask: u32) -> String {
    crate::graph::bits(mask)
        .map(|j| format!("{}\u{0304}", j + 1))
        .collect::<Vec<_>>()
        .join("")
}

/// Renders the requested layers as a standalone SVG document. White nodes
/// are the points of `P_G⁻`, black nodes those of `P_G`.
pub fn render_svg(t: &Trianguloid, style: &Style) -> Result<String, TilingError> {
    let solid = tiling_segments(t)?;
    let dashed = pseudoline_segments(t)?;
    let n = t.n() as f64;
    let u = style.unit;
    let half_width = n * SQRT3_2 * u;
    let width = 2.0 * (half_width + style.margin);
    let height = 1.5 * n * u + 2.0 * style.margin;
    let to_svg = |p: &[u32]| {
        let (x, y) = project(p);
        (
            x * u + half_width + style.margin,
            (n - y) * u + style.margin,
        )
    };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(width),
        num(height),
        num(width),
        num(height)
    );
    s.push_str(concat!(
        "<style>",
        ".tiling{stroke:#000;stroke-width:2;fill:none}",
        ".pseudoline{stroke:#c03;stroke-width:1.5;stroke-dasharray:6 4;fill:none}",
        ".arrow{stroke:#36c;stroke-width:1}",
        ".arrow-label{font:11px sans-serif;fill:#36c}",
        ".node-white{fill:#fff;stroke:#000}",
        ".node-black{fill:#000}",
        "</style>\n"
    ));
    let line = |s: &mut String, class: &str, a: &[u32], b: &[u32], extra: &str| {
        let (x1, y1) = to_svg(a);
        let (x2, y2) = to_svg(b);
        let _ = writeln!(
            s,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"{extra}/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    };
    if style.layers.tiling {
        s.push_str("<g id=\"tiling\">\n");
        for seg in &solid {
            line(&mut s, "tiling", &seg.from, &seg.to, "");
        }
        s.push_str("</g>\n");
    }
    if style.layers.pseudolines {
        s.push_str("<g id=\"pseudolines\">\n");
        for seg in &dashed {
            let label = seg
                .label
                .map(|x| format!(r#" data-label="{}""#, x + 1))
                .unwrap_or_default();
            line(&mut s, "pseudoline", &seg.from, &seg.to, &label);
        }
        s.push_str("</g>\n");
    }
    if style.layers.trianguloid {
        s.push_str("<g id=\"trianguloid\">\n");
        for (from, dir, mask) in t.entries() {
            let to = plus(&from, dir);
            line(&mut s, "arrow", &from, &to, "");
            let (x1, y1) = to_svg(&from);
            let (x2, y2) = to_svg(&to);
            let _ = writeln!(
                s,
                r#"<text class="arrow-label" x="{}" y="{}">{}</text>"#,
                num((x1 + x2) / 2.0),
                num((y1 + y2) / 2.0),
                label_text(mask)
            );
        }
        s.push_str("</g>\n");
    }
    s.push_str("<g id=\"nodes\">\n");
    for p in points_pg_minus(t.graph()).iter() {
        let (x, y) = to_svg(p);
        let _ = writeln!(
            s,
            r#"<circle class="node-white" cx="{}" cy="{}" r="4"/>"#,
            num(x),
            num(y)
        );
    }
    for p in t.pg_points().iter() {
        let (x, y) = to_svg(p);
        let _ = writeln!(
            s,
            r#"<circle class="node-black" cx="{}" cy="{}" r="3"/>"#,
            num(x),
            num(y)
        );
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}
