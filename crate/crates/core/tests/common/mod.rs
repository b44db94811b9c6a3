//! Fixtures and brute-force reference implementations shared by the
//! integration tests. The oracles here avoid the library's fast paths:
//! lattice points come from explicit sums, spanning trees from edge
//! subsets, compatibility from partial matchings.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use trianguloid_core::compat::is_compatible_oracle;
use trianguloid_core::graph::{BipartiteGraph, Edge, Subgraph};
use trianguloid_core::io;
use trianguloid_core::lattice::Point;
use trianguloid_core::triangulation::{validate, Triangulation};
use trianguloid_core::trianguloid::Trianguloid;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

pub fn data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn graph(name: &str) -> BipartiteGraph {
    io::read_graph(&data(&format!("{name}_graph.json"))).unwrap()
}

/// The graph with `m = 3`, `n = 5` whose triangulation is given by right
/// semi-matchings in the fixtures.
pub fn g35() -> BipartiteGraph {
    graph("g35")
}

pub fn k34_triangulation() -> Triangulation {
    let (g, trees) = io::read_triangulation(&data("k34_triangulation.json")).unwrap();
    validate(&g, trees).unwrap()
}

pub fn k34_trianguloid() -> Trianguloid {
    io::read_trianguloid(&data("k34_trianguloid.json")).unwrap()
}

pub fn k32_pretrianguloid() -> Trianguloid {
    io::read_trianguloid(&data("k32_pretrianguloid.json")).unwrap()
}

/// Every connected spanning subgraph of `K_{m,n}` without isolated
/// vertices, as graphs.
pub fn connected_subgraphs(m: usize, n: usize) -> Vec<BipartiteGraph> {
    let edges: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 1u32..1 << edges.len() {
        let mut nb = vec![Vec::new(); n];
        for (k, &(i, j)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                nb[j].push(i);
            }
        }
        if let Ok(g) = BipartiteGraph::new(m, n, &nb) {
            out.push(g);
        }
    }
    out
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn join(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
        a != b
    }
}

fn acyclic(m: usize, edges: &[Edge]) -> bool {
    let n = edges.iter().map(|e| e.right + 1).max().unwrap_or(0);
    let mut d = Dsu::new(m + n);
    edges.iter().all(|e| d.join(e.left, m + e.right))
}

/// All forests of `g`, by filtering every edge subset.
pub fn all_forests(g: &BipartiteGraph) -> Vec<Subgraph> {
    let edges = g.edges();
    assert!(edges.len() <= 16, "oracle limited to 16 edges");
    (0u32..1 << edges.len())
        .filter_map(|mask| {
            let pick: Vec<Edge> = (0..edges.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| edges[k])
                .collect();
            acyclic(g.m(), &pick).then(|| Subgraph::new(g, &pick).unwrap())
        })
        .collect()
}

/// Spanning trees of `g`: acyclic edge subsets of size `m + n − 1`.
pub fn brute_spanning_trees(g: &BipartiteGraph) -> Vec<Subgraph> {
    let size = g.m() + g.n() - 1;
    let mut out: Vec<Subgraph> = all_forests(g)
        .into_iter()
        .filter(|f| f.len() == size)
        .collect();
    out.sort();
    out
}

/// Lattice points of `P_G`: all sums `Σ_j e_{f(j)}` with `f(j) ∈ N_j`.
pub fn brute_pg(g: &BipartiteGraph) -> BTreeSet<Point> {
    let nb = g.right_neighborhoods();
    let mut points = BTreeSet::from([vec![0u32; g.m()]]);
    for list in nb {
        let mut next = BTreeSet::new();
        for p in &points {
            for &i in &list {
                let mut q = p.clone();
                q[i] += 1;
                next.insert(q);
            }
        }
        points = next;
    }
    points
}

/// Lattice points `b` with `b + e_i ∈ P_G` for every `i`.
pub fn brute_pg_minus(g: &BipartiteGraph) -> BTreeSet<Point> {
    let pg = brute_pg(g);
    let mut out = BTreeSet::new();
    for a in &pg {
        for i in 0..g.m() {
            if a[i] == 0 {
                continue;
            }
            let mut b = a.clone();
            b[i] -= 1;
            let all = (0..g.m()).all(|k| {
                let mut c = b.clone();
                c[k] += 1;
                pg.contains(&c)
            });
            if all {
                out.insert(b);
            }
        }
    }
    out
}

/// 0/1 degree vectors `(LD, RD)` of every partial matching of `g`.
pub fn brute_ij(g: &BipartiteGraph) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let edges = g.edges();
    assert!(edges.len() <= 20);
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << edges.len() {
        let mut ld = vec![0u32; g.m()];
        let mut rd = vec![0u32; g.n()];
        for (k, e) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                ld[e.left] += 1;
                rd[e.right] += 1;
            }
        }
        if ld.iter().chain(&rd).all(|&d| d <= 1) {
            out.insert((ld, rd));
        }
    }
    out
}

/// All triangulations of `Q_G` as sorted tree families: one tree per point
/// of `P_G⁻`, pairwise compatible by the partial-matching criterion.
pub fn brute_triangulations(g: &BipartiteGraph) -> Vec<Vec<Subgraph>> {
    let trees = brute_spanning_trees(g);
    let points: Vec<Point> = brute_pg_minus(g).into_iter().collect();
    let mut buckets: BTreeMap<Point, Vec<usize>> =
        points.iter().map(|p| (p.clone(), Vec::new())).collect();
    for (k, t) in trees.iter().enumerate() {
        let mut d = t.left_degrees();
        d.iter_mut().for_each(|x| *x -= 1);
        buckets.get_mut(&d).expect("LD⁻ in P_G⁻").push(k);
    }
    let n = trees.len();
    let mut ok = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let c = is_compatible_oracle(&trees[a], &trees[b]).unwrap();
            ok[a][b] = c;
            ok[b][a] = c;
        }
    }
    let lists: Vec<&Vec<usize>> = buckets.values().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        lists: &[&Vec<usize>],
        ok: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == lists.len() {
            out.push(chosen.clone());
            return;
        }
        for &t in lists[chosen.len()] {
            if chosen.iter().all(|&c| ok[c][t]) {
                chosen.push(t);
                rec(lists, ok, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&lists, &ok, &mut chosen, &mut out);
    let mut families: Vec<Vec<Subgraph>> = out
        .into_iter()
        .map(|f| f.into_iter().map(|k| trees[k].clone()).collect())
        .collect();
    families.sort();
    families
}

/// Simple paths `j̄_1, i_1, …, j̄_r, i_r` in `t`, as `(j̄_s, i_s)` pairs.
pub fn simple_paths(t: &Subgraph) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    fn extend(
        t: &Subgraph,
        path: &mut Vec<(usize, usize)>,
        used_l: u32,
        used_r: u32,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let (_, i) = *path.last().unwrap();
        for j2 in (0..t.n()).filter(|&j2| t.contains(Edge::new(i, j2)) && used_r >> j2 & 1 == 0) {
            for i2 in
                (0..t.m()).filter(|&i2| t.contains(Edge::new(i2, j2)) && used_l >> i2 & 1 == 0)
            {
                path.push((j2, i2));
                out.push(path.clone());
                extend(t, path, used_l | 1 << i2, used_r | 1 << j2, out);
                path.pop();
            }
        }
    }
    for j in 0..t.n() {
        for i in (0..t.m()).filter(|&i| t.contains(Edge::new(i, j))) {
            let mut path = vec![(j, i)];
            out.push(path.clone());
            extend(t, &mut path, 1 << i, 1 << j, &mut out);
        }
    }
    out
}

/// Number of `(b, path, s, t)` instances where `j̄_s ∉ 𝕋(→_{i_s} b + e_{i_t})`,
/// and the number of instances checked.
pub fn path_property_check(t: &Trianguloid, trees: &[(Point, Subgraph)]) -> (usize, usize) {
    let (mut bad, mut checked) = (0, 0);
    for (b, tree) in trees {
        for path in simple_paths(tree) {
            for tt in 0..path.len() {
                let mut a = b.clone();
                a[path[tt].1] += 1;
                for &(j, i) in &path[..=tt] {
                    checked += 1;
                    match t.entry_into(&a, i) {
                        Some(set) if set >> j & 1 == 1 => {}
                        _ => bad += 1,
                    }
                }
            }
        }
    }
    (bad, checked)
}

/// For `m = 3`: hexagons where both `T4` equalities hold yet the two
/// `j`-entries agree.
pub fn hexagon_converse_failures(t: &Trianguloid) -> usize {
    assert_eq!(t.m(), 3);
    let n = t.n() as u32;
    if n < 2 {
        return 0;
    }
    let from = |c: &[u32], x: usize, y: usize| {
        let mut b = c.to_vec();
        b[x] += 1;
        t.entry_from(&b, y)
    };
    let mut bad = 0;
    for c0 in 0..=n - 2 {
        for c1 in 0..=n - 2 - c0 {
            let c = [c0, c1, n - 2 - c0 - c1];
            for (i, j, k) in [
                (0, 1, 2),
                (1, 0, 2),
                (0, 2, 1),
                (2, 0, 1),
                (1, 2, 0),
                (2, 1, 0),
            ] {
                let eq1 = from(&c, i, k) == from(&c, j, k);
                let eq2 = from(&c, j, i) == from(&c, k, i);
                if eq1 && eq2 && from(&c, i, j) == from(&c, k, j) {
                    bad += 1;
                }
            }
        }
    }
    bad
}

/// A random forest of `g`: edges in random order, each kept with
/// probability `keep` when it closes no cycle.
pub fn random_forest(g: &BipartiteGraph, rng: &mut impl Rng, keep: f64) -> Subgraph {
    let mut edges = g.edges();
    edges.shuffle(rng);
    let mut d = Dsu::new(g.m() + g.n());
    let pick: Vec<Edge> = edges
        .into_iter()
        .filter(|e| rng.gen_bool(keep) && d.join(e.left, g.m() + e.right))
        .collect();
    Subgraph::new(g, &pick).unwrap()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, x| acc * (n - x) / (x + 1))
}

/// `(lozenges, upright triangles)` of a subdivision of `nΔ` given by unit
/// grid segments, from Euler's formula and area: with `F` bounded faces,
/// `F = E − V + C` and `n² = 2·lozenges + upright`. `None` if a segment is
/// not a unit grid edge of the sum-`n` layer.
pub fn euler_faces(segments: &[(Point, Point)], n: u32) -> Option<(i64, i64)> {
    let mut verts: BTreeMap<&Point, usize> = BTreeMap::new();
    for (a, b) in segments {
        if a.iter().sum::<u32>() != n || b.iter().sum::<u32>() != n {
            return None;
        }
        let diff: Vec<i64> = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| x as i64 - y as i64)
            .collect();
        let mut sorted = diff.clone();
        sorted.sort();
        if sorted != [-1, 0, 1] {
            return None;
        }
        let k = verts.len();
        verts.entry(a).or_insert(k);
        let k = verts.len();
        verts.entry(b).or_insert(k);
    }
    let mut d = Dsu::new(verts.len());
    let mut components = verts.len() as i64;
    for (a, b) in segments {
        if d.join(verts[a], verts[b]) {
            components -= 1;
        }
    }
    let faces = segments.len() as i64 - verts.len() as i64 + components;
    let n2 = (n * n) as i64;
    Some((n2 - faces, 2 * faces - n2))
}
