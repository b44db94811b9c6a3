//! Trianguloids: maps from the edges `a − e_i → a` of `Γ_G` to subsets of
//! `[n̄]`, the axioms they satisfy, and the conversions to and from
//! triangulations and edge colorings.
//!
//! Entries are stored per lattice point `a ∈ P_G` and direction `i` as a
//! mask over right vertices. Entries with `a_i = 0` are empty.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{TriangulationError, TrianguloidError};
use crate::graph::{bits, low_mask, BipartiteGraph, Edge, Subgraph};
use crate::lattice::{
    minus, plus, points_pg, points_pg_minus, shift, simplex_points, Point, PointSet,
};
use crate::triangulation::{rsm_by_point, validate, Triangulation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trianguloid {
    graph: BipartiteGraph,
    pg: PointSet,
    entries: Vec<u32>,
}

impl Trianguloid {
    pub(crate) fn from_raw(graph: BipartiteGraph, pg: PointSet, entries: Vec<u32>) -> Self {
        debug_assert_eq!(entries.len(), pg.len() * graph.m());
        Trianguloid { graph, pg, entries }
    }

    /// Builds a map from `(from, dir, set)` triples, where the edge is
    /// `from → from + e_dir` and `set` is a mask over right vertices.
    /// Edges not listed get the empty set.
    pub fn from_entries(
        g: &BipartiteGraph,
        list: &[(Point, usize, u32)],
    ) -> Result<Self, TrianguloidError> {
        let pg = points_pg(g);
        let m = g.m();
        let mut entries = vec![0u32; pg.len() * m];
        let mut seen = vec![false; entries.len()];
        for (from, dir, set) in list {
            let bad = || TrianguloidError::BadEntry {
                from: from.clone(),
                dir: *dir,
            };
            if *dir >= m || from.len() != m {
                return Err(bad());
            }
            let k = pg.index_of(&plus(from, *dir)).ok_or_else(bad)?;
            if set & !low_mask(g.n()) != 0 {
                return Err(TrianguloidError::LabelOutOfRange {
                    label: 32 - set.leading_zeros() as usize,
                    n: g.n(),
                });
            }
            if std::mem::replace(&mut seen[k * m + dir], true) {
                return Err(TrianguloidError::DuplicateEntry {
                    from: from.clone(),
                    dir: *dir,
                });
            }
            entries[k * m + dir] = *set;
        }
        Ok(Trianguloid {
            graph: g.clone(),
            pg,
            entries,
        })
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    /// Lattice points of `P_G`, the heads of `Γ_G` edges.
    pub fn pg_points(&self) -> &PointSet {
        &self.pg
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `𝕋(→_i a)` for the point with index `k` in [`Trianguloid::pg_points`].
    pub fn entry(&self, k: usize, i: usize) -> u32 {
        self.entries[k * self.m() + i]
    }

    /// `𝕋(→_i a)`, or `None` when `a ∉ P_G`.
    pub fn entry_into(&self, a: &[u32], i: usize) -> Option<u32> {
        self.pg.index_of(a).map(|k| self.entry(k, i))
    }

    /// `𝕋(b →_i ·)`, or `None` when `b + e_i ∉ P_G`.
    pub fn entry_from(&self, b: &[u32], i: usize) -> Option<u32> {
        self.entry_into(&plus(b, i), i)
    }

    /// All `Γ_G` edges with their sets, sorted by `(from, dir)`.
    pub fn entries(&self) -> Vec<(Point, usize, u32)> {
        let mut out: Vec<(Point, usize, u32)> = self
            .pg
            .iter()
            .enumerate()
            .flat_map(|(k, a)| {
                (0..self.m())
                    .filter_map(move |i| minus(a, i).map(|from| (from, i, self.entry(k, i))))
            })
            .collect();
        out.sort();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Cardinality,
    Covering,
    Partition,
    Containment,
    Hexagon,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Cardinality => "t1",
            Axiom::Covering => "t2",
            Axiom::Partition => "partition",
            Axiom::Containment => "t3",
            Axiom::Hexagon => "t4",
        })
    }
}

/// One failed instance of an axiom. `point` is the lattice point the axiom
/// is stated at (`a` for the first three, `c` for the hexagon axiom);
/// `dirs` are the 0-based indices involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub point: Point,
    pub dirs: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub t4: bool,
    pub partition: bool,
    pub is_pre: bool,
    pub is_trianguloid: bool,
    pub violations: Vec<Violation>,
}

fn fmt_set(mask: u32) -> String {
    let items: Vec<String> = bits(mask).map(|j| (j + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

struct Checker<'a> {
    t: &'a Trianguloid,
    violations: Vec<Violation>,
}

impl Checker<'_> {
    fn fail(&mut self, axiom: Axiom, point: &[u32], dirs: Vec<usize>, detail: String) {
        self.violations.push(Violation {
            axiom,
            point: point.to_vec(),
            dirs,
            detail,
        });
    }

    fn cardinality(&mut self) {
        let t = self.t;
        for (k, a) in t.pg.iter().enumerate() {
            for i in 0..t.m() {
                let size = t.entry(k, i).count_ones();
                if size != a[i] {
                    self.fail(
                        Axiom::Cardinality,
                        a,
                        vec![i],
                        format!("|{}| = {size}, expected {}", fmt_set(t.entry(k, i)), a[i]),
                    );
                }
            }
        }
    }

    fn covering(&mut self) {
        let t = self.t;
        for (k, a) in t.pg.iter().enumerate() {
            for j in 0..t.n() {
                let covered = bits(t.graph.col(j)).any(|i| t.entry(k, i) >> j & 1 == 1);
                if !covered {
                    self.fail(
                        Axiom::Covering,
                        a,
                        vec![],
                        format!("label {} not covered", j + 1),
                    );
                }
            }
        }
    }

    fn partition(&mut self) {
        let t = self.t;
        for (k, a) in t.pg.iter().enumerate() {
            let mut union = 0u32;
            let mut overlap = false;
            for i in 0..t.m() {
                let e = t.entry(k, i);
                overlap |= union & e != 0;
                union |= e;
            }
            if overlap || union != low_mask(t.n()) {
                self.fail(
                    Axiom::Partition,
                    a,
                    vec![],
                    "entries do not partition the labels".into(),
                );
            }
        }
    }

    fn containment(&mut self) {
        let t = self.t;
        for (k, a) in t.pg.iter().enumerate() {
            for i in 0..t.m() {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..t.m() {
                    if j == i {
                        continue;
                    }
                    let Some(a2) = shift(a, i, j) else { continue };
                    let Some(k2) = t.pg.index_of(&a2) else {
                        continue;
                    };
                    let (small, big) = (t.entry(k, i), t.entry(k2, i));
                    if small & !big != 0 {
                        self.fail(
                            Axiom::Containment,
                            a,
                            vec![i, j],
                            format!("{} not inside {} at {:?}", fmt_set(small), fmt_set(big), a2),
                        );
                    }
                }
            }
        }
    }

    fn hexagon(&mut self) {
        let t = self.t;
        let m = t.m();
        if t.n() < 2 || m < 3 {
            return;
        }
        let pgm = points_pg_minus(&t.graph);
        let from = |c: &[u32], x: usize, y: usize| -> u32 {
            t.entry_from(&plus(c, x), y)
                .expect("both summands lie in P_G⁻")
        };
        for c in simplex_points(m, t.n() as u32 - 2) {
            for i in 0..m {
                for k in i + 1..m {
                    if !pgm.contains(&plus(&c, i)) || !pgm.contains(&plus(&c, k)) {
                        continue;
                    }
                    for j in 0..m {
                        if j == i || j == k || from(&c, i, j) == from(&c, k, j) {
                            continue;
                        }
                        let ok = pgm.contains(&plus(&c, j))
                            && from(&c, i, k) == from(&c, j, k)
                            && from(&c, j, i) == from(&c, k, i);
                        if !ok {
                            self.fail(
                                Axiom::Hexagon,
                                &c,
                                vec![i, j, k],
                                format!("hexagon ({}, {}, {}) at {:?}", i + 1, j + 1, k + 1, c),
                            );
                        }
                    }
                }
            }
        }
    }
}

/// Evaluates every axiom independently and collects the violations.
pub fn check_axioms(t: &Trianguloid) -> AxiomReport {
    let mut ch = Checker {
        t,
        violations: Vec::new(),
    };
    let mut marks = [0usize; 6];
    ch.cardinality();
    marks[1] = ch.violations.len();
    ch.covering();
    marks[2] = ch.violations.len();
    ch.partition();
    marks[3] = ch.violations.len();
    ch.containment();
    marks[4] = ch.violations.len();
    ch.hexagon();
    marks[5] = ch.violations.len();
    let flags: [bool; 5] = std::array::from_fn(|k| marks[k] == marks[k + 1]);
    let [t1, t2, partition, t3, t4] = flags;
    let is_pre = t1 && t2 && t3;
    AxiomReport {
        t1,
        t2,
        t3,
        t4,
        partition,
        is_pre,
        is_trianguloid: is_pre && t4,
        violations: ch.violations,
    }
}

/// True when the map satisfies the cardinality, covering, and containment
/// axioms.
pub fn is_pre_trianguloid(t: &Trianguloid) -> bool {
    let mut ch = Checker {
        t,
        violations: Vec::new(),
    };
    ch.cardinality();
    ch.covering();
    ch.containment();
    ch.violations.is_empty()
}

/// `𝕋_τ(→_i a) = N_i(F_τ(a))`.
pub fn from_triangulation(tau: &Triangulation) -> Trianguloid {
    let g = tau.graph().clone();
    let pg = points_pg(&g);
    let m = g.m();
    let mut entries = vec![0u32; pg.len() * m];
    for (k, f) in rsm_by_point(tau).iter().enumerate() {
        entries[k * m..(k + 1) * m].copy_from_slice(f.rows());
    }
    Trianguloid::from_raw(g, pg, entries)
}

pub(crate) fn tree_of_unchecked(t: &Trianguloid, b: &[u32]) -> Subgraph {
    let rows = (0..t.m())
        .map(|i| t.entry_from(b, i).expect("b lies in P_G⁻"))
        .collect();
    Subgraph::from_rows(t.n(), rows)
}

/// `T_𝕋(b) = {(i, j̄) : j̄ ∈ 𝕋(b →_i ·)}`.
pub fn tree_of(t: &Trianguloid, b: &[u32]) -> Result<Subgraph, TrianguloidError> {
    if !is_pre_trianguloid(t) {
        return Err(TrianguloidError::NotPreTrianguloid);
    }
    if !points_pg_minus(t.graph()).contains(b) {
        return Err(TrianguloidError::ValidationFailed(Box::new(
            TriangulationError::PointOutsidePolytope(b.to_vec()),
        )));
    }
    let tree = tree_of_unchecked(t, b);
    debug_assert!(tree.is_spanning_tree());
    Ok(tree)
}

/// The triangulation whose trees are `T_𝕋(b)` for `b ∈ P_G⁻`.
pub fn to_triangulation(t: &Trianguloid) -> Result<Triangulation, TrianguloidError> {
    if !check_axioms(t).is_trianguloid {
        return Err(TrianguloidError::NotTrianguloid);
    }
    let trees = points_pg_minus(t.graph())
        .iter()
        .map(|b| tree_of_unchecked(t, b))
        .collect();
    let fail = |e| TrianguloidError::ValidationFailed(Box::new(e));
    let tau = validate(t.graph(), trees).map_err(fail)?;
    if from_triangulation(&tau) != *t {
        return Err(fail(TriangulationError::CollectionMismatch));
    }
    Ok(tau)
}

/// One colored edge `b → b + e_i − e_j` of `Λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorEntry {
    pub from: Point,
    pub i: usize,
    pub j: usize,
    pub color: usize,
}

/// The edge coloring `ℰ_𝕋` of a pre-trianguloid on `K_{m,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    pub graph: BipartiteGraph,
    pub colors: Vec<ColorEntry>,
}

/// Colors each `Λ` edge `b → b'` by the label added to `𝕋(· →_i ·)`.
pub fn encode_coloring(t: &Trianguloid) -> Result<EdgeColoring, TrianguloidError> {
    if !t.graph().is_complete() {
        return Err(TrianguloidError::NotComplete);
    }
    let mut colors = Vec::new();
    for e in crate::lattice::lambda_edges(t.graph()) {
        let before = t.entry_from(&e.from, e.i).expect("Λ endpoints lie in P_G⁻");
        let after = t.entry_from(&e.to, e.i).expect("Λ endpoints lie in P_G⁻");
        let added = after & !before;
        if before & !after != 0 || added.count_ones() != 1 {
            return Err(TrianguloidError::NotPreTrianguloid);
        }
        colors.push(ColorEntry {
            from: e.from,
            i: e.i,
            j: e.j,
            color: added.trailing_zeros() as usize,
        });
    }
    colors.sort();
    Ok(EdgeColoring {
        graph: t.graph().clone(),
        colors,
    })
}

/// Rebuilds a pre-trianguloid from its edge coloring. Direction `i` is
/// anchored at the corner `(n−1)e_i`, where `𝕋(· →_i ·)` is all of `[n̄]`,
/// and labels are peeled off along `Λ` edges walked backwards.
pub fn decode_coloring(
    g: &BipartiteGraph,
    coloring: &EdgeColoring,
) -> Result<Trianguloid, TrianguloidError> {
    if !g.is_complete() {
        return Err(TrianguloidError::NotComplete);
    }
    let (m, n) = (g.m(), g.n());
    let pgm = points_pg_minus(g);
    let mut color: HashMap<(&[u32], usize, usize), usize> = HashMap::new();
    for c in &coloring.colors {
        let bad = || TrianguloidError::InconsistentColoring {
            point: c.from.clone(),
            dir: c.i,
        };
        let valid = c.i < m && c.j < m && c.i != c.j && c.color < n && pgm.contains(&c.from);
        let to = shift(&c.from, c.i, c.j)
            .filter(|p| valid && pgm.contains(p))
            .ok_or_else(bad)?;
        debug_assert!(pgm.contains(&to));
        if color
            .insert((c.from.as_slice(), c.i, c.j), c.color)
            .is_some()
        {
            return Err(bad());
        }
    }
    let pg = points_pg(g);
    let mut entries = vec![0u32; pg.len() * m];
    for i in 0..m {
        let mut value: Vec<Option<u32>> = vec![None; pgm.len()];
        let mut corner = vec![0u32; m];
        corner[i] = n as u32 - 1;
        let start = pgm.index_of(&corner).expect("corner of the simplex");
        value[start] = Some(low_mask(n));
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            let b = pgm.get(k);
            let set = value[k].expect("queued points have values");
            if b[i] == 0 {
                continue;
            }
            for j in (0..m).filter(|&j| j != i) {
                let prev = shift(b, j, i).expect("b_i > 0");
                let inconsistent = || TrianguloidError::InconsistentColoring {
                    point: prev.clone(),
                    dir: i,
                };
                let &label = color
                    .get(&(prev.as_slice(), i, j))
                    .ok_or_else(inconsistent)?;
                if set >> label & 1 == 0 {
                    return Err(inconsistent());
                }
                let reduced = set & !(1 << label);
                let kp = pgm.index_of(&prev).expect("simplex point");
                match value[kp] {
                    None => {
                        value[kp] = Some(reduced);
                        queue.push_back(kp);
                    }
                    Some(v) if v != reduced => return Err(inconsistent()),
                    Some(_) => {}
                }
            }
        }
        for (k, b) in pgm.iter().enumerate() {
            let a = pg.index_of(&plus(b, i)).expect("b + e_i lies in P_G");
            entries[a * m + i] = value[k].expect("every point is reached from the corner");
        }
    }
    Ok(Trianguloid::from_raw(g.clone(), pg, entries))
}

/// Lattice points `a ∈ P_G` with `j̄ ∈ 𝕋(b →_i ·)` for some `b ∈ P_G⁻`,
/// `a = b + e_i`.
pub fn label_support(t: &Trianguloid, j: usize) -> Vec<Point> {
    let mut out = BTreeSet::new();
    for b in points_pg_minus(t.graph()).iter() {
        for i in 0..t.m() {
            if t.entry_from(b, i).is_some_and(|s| s >> j & 1 == 1) {
                out.insert(plus(b, i));
            }
        }
    }
    out.into_iter().collect()
}

/// Edges of `T_𝕋(b)` as an edge list, for display.
pub fn tree_edges(t: &Trianguloid, b: &[u32]) -> Vec<Edge> {
    tree_of_unchecked(t, b).edges()
}
