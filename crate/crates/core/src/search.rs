//! Exhaustive enumeration of triangulations (by compatible spanning trees)
//! and of trianguloids (by the local axioms), plus derived checks.
//!
//! Both searches split the top two levels of their backtracking tree into
//! prefixes that run on a rayon pool of `jobs` threads. Prefix results are
//! concatenated in prefix order, so the output never depends on the worker
//! count. With a limit, prefixes are processed in batches and the search
//! stops once enough results are in hand.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::compat;
use crate::error::SearchError;
use crate::graph::{bits, enumerate_spanning_trees, low_mask, BipartiteGraph, Edge, Subgraph};
use crate::lattice::{plus, points_pg, points_pg_minus, shift, simplex_points, Point, PointSet};
use crate::triangulation::{flip, is_replaceable, phi, Triangulation};
use crate::trianguloid::Trianguloid;

/// What to do when a search finds more than `limit` results.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitPolicy {
    /// Fail with [`SearchError::LimitExceeded`].
    Error,
    /// Keep the first `limit` results in search order.
    Truncate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub limit: Option<usize>,
    pub policy: LimitPolicy,
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            limit: None,
            policy: LimitPolicy::Error,
            jobs: 1,
        }
    }
}

/// Results of a search, sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome<T> {
    pub items: Vec<T>,
    pub truncated: bool,
    pub elapsed: Duration,
}

/// Runs `f` over prefixes in batches on a pool of `jobs` threads and
/// concatenates results in prefix order, stopping once `cap` are collected.
fn run_prefixes<P, R, F>(prefixes: &[P], jobs: usize, cap: Option<usize>, f: F) -> Vec<R>
where
    P: Sync,
    R: Send,
    F: Fn(&P, Option<usize>) -> Vec<R> + Sync,
{
    let jobs = jobs.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let batch = match cap {
        Some(_) => jobs * 4,
        None => prefixes.len().max(1),
    };
    let mut out = Vec::new();
    for chunk in prefixes.chunks(batch) {
        let parts: Vec<Vec<R>> = pool.install(|| chunk.par_iter().map(|p| f(p, cap)).collect());
        for part in parts {
            out.extend(part);
        }
        if cap.is_some_and(|c| out.len() >= c) {
            break;
        }
    }
    if let Some(c) = cap {
        out.truncate(c);
    }
    out
}

/// Applies the limit policy and sorts the raw results canonically.
fn finish(
    mut raw: Vec<Vec<u32>>,
    opts: &SearchOptions,
) -> Result<(Vec<Vec<u32>>, bool), SearchError> {
    let mut truncated = false;
    if let Some(limit) = opts.limit {
        if raw.len() > limit {
            match opts.policy {
                LimitPolicy::Error => return Err(SearchError::LimitExceeded(limit)),
                LimitPolicy::Truncate => {
                    raw.truncate(limit);
                    truncated = true;
                }
            }
        }
    }
    raw.sort();
    Ok((raw, truncated))
}

/// One search beyond the limit tells the two policies apart.
fn cap_for(opts: &SearchOptions) -> Option<usize> {
    opts.limit.map(|l| l + 1)
}

/// Memoized pairwise compatibility over a fixed list of trees, shared by
/// all workers.
struct CompatMemo<'a> {
    trees: &'a [Subgraph],
    known: Vec<AtomicU64>,
    value: Vec<AtomicU64>,
}

const MEMO_MAX_TREES: usize = 8192;

impl<'a> CompatMemo<'a> {
    fn new(trees: &'a [Subgraph]) -> Self {
        let words = if trees.len() <= MEMO_MAX_TREES {
            (trees.len() * trees.len()).div_ceil(64)
        } else {
            0
        };
        CompatMemo {
            trees,
            known: (0..words).map(|_| AtomicU64::new(0)).collect(),
            value: (0..words).map(|_| AtomicU64::new(0)).collect(),
        }
    }

    fn compatible(&self, a: u32, b: u32) -> bool {
        let (a, b) = (a as usize, b as usize);
        if self.known.is_empty() {
            return compat::long_cycle(&self.trees[a], &self.trees[b]).is_none();
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let idx = lo * self.trees.len() + hi;
        let (w, bit) = (idx / 64, 1u64 << (idx % 64));
        if self.known[w].load(Ordering::Acquire) & bit != 0 {
            return self.value[w].load(Ordering::Acquire) & bit != 0;
        }
        let ok = compat::long_cycle(&self.trees[lo], &self.trees[hi]).is_none();
        if ok {
            self.value[w].fetch_or(bit, Ordering::Release);
        }
        self.known[w].fetch_or(bit, Ordering::Release);
        ok
    }
}

const UNSET: u32 = u32::MAX;

struct TreeSearch<'a> {
    memo: CompatMemo<'a>,
    buckets: Vec<Vec<u32>>,
}

impl TreeSearch<'_> {
    /// Picks the unassigned point with the fewest candidates.
    fn next_point(assigned: &[u32], domains: &[Vec<u32>]) -> Option<usize> {
        (0..assigned.len())
            .filter(|&p| assigned[p] == UNSET)
            .min_by_key(|&p| (domains[p].len(), p))
    }

    /// Domains after fixing tree `t` at point `p`, or `None` on a wipe-out.
    fn restrict(
        &self,
        assigned: &[u32],
        domains: &[Vec<u32>],
        p: usize,
        t: u32,
    ) -> Option<Vec<Vec<u32>>> {
        let mut next = Vec::with_capacity(domains.len());
        for (q, d) in domains.iter().enumerate() {
            if q == p || assigned[q] != UNSET {
                next.push(Vec::new());
                continue;
            }
            let kept: Vec<u32> = d
                .iter()
                .copied()
                .filter(|&x| self.memo.compatible(t, x))
                .collect();
            if kept.is_empty() {
                return None;
            }
            next.push(kept);
        }
        Some(next)
    }

    fn dfs(
        &self,
        assigned: &mut Vec<u32>,
        domains: &[Vec<u32>],
        cap: Option<usize>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if cap.is_some_and(|c| out.len() >= c) {
            return;
        }
        let Some(p) = Self::next_point(assigned, domains) else {
            out.push(assigned.clone());
            return;
        };
        for &t in &domains[p] {
            if let Some(next) = self.restrict(assigned, domains, p, t) {
                assigned[p] = t;
                self.dfs(assigned, &next, cap, out);
                assigned[p] = UNSET;
                if cap.is_some_and(|c| out.len() >= c) {
                    return;
                }
            }
        }
    }

    /// Replays a prefix of `(point, tree)` choices.
    fn replay(&self, prefix: &[(usize, u32)]) -> Option<(Vec<u32>, Vec<Vec<u32>>)> {
        let mut assigned = vec![UNSET; self.buckets.len()];
        let mut domains = self.buckets.clone();
        for &(p, t) in prefix {
            domains = self.restrict(&assigned, &domains, p, t)?;
            assigned[p] = t;
        }
        Some((assigned, domains))
    }

    fn prefixes(&self) -> Vec<Vec<(usize, u32)>> {
        let mut level: Vec<Vec<(usize, u32)>> = vec![Vec::new()];
        for _ in 0..2 {
            let mut next = Vec::new();
            for pre in &level {
                let Some((assigned, domains)) = self.replay(pre) else {
                    continue;
                };
                let Some(p) = Self::next_point(&assigned, &domains) else {
                    next.push(pre.clone());
                    continue;
                };
                for &t in &domains[p] {
                    if self.restrict(&assigned, &domains, p, t).is_some() {
                        let mut longer = pre.clone();
                        longer.push((p, t));
                        next.push(longer);
                    }
                }
            }
            level = next;
        }
        level
    }
}

/// All triangulations of `Q_G`, found as families of pairwise compatible
/// spanning trees with one tree per lattice point of `P_G⁻`.
pub fn enumerate_triangulations(
    g: &BipartiteGraph,
    opts: &SearchOptions,
) -> Result<SearchOutcome<Triangulation>, SearchError> {
    let started = Instant::now();
    let points = points_pg_minus(g);
    let trees = enumerate_spanning_trees(g);
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); points.len()];
    for (k, t) in trees.iter().enumerate() {
        let b = t.ld_minus().expect("spanning tree");
        let p = points
            .index_of(&b)
            .expect("LD⁻ of a spanning tree lies in P_G⁻");
        buckets[p].push(k as u32);
    }
    let search = TreeSearch {
        memo: CompatMemo::new(&trees),
        buckets,
    };
    let cap = cap_for(opts);
    let prefixes = search.prefixes();
    let found = run_prefixes(&prefixes, opts.jobs, cap, |pre, cap| {
        let mut out = Vec::new();
        if let Some((mut assigned, domains)) = search.replay(pre) {
            search.dfs(&mut assigned, &domains, cap, &mut out);
        }
        out
    });
    // Trees are sorted, so index order is the canonical order.
    let (raw, truncated) = finish(found, opts)?;
    let items = raw
        .into_iter()
        .map(|choice| {
            let family = choice.iter().map(|&k| trees[k as usize].clone()).collect();
            Triangulation::from_parts(g.clone(), points.clone(), family)
        })
        .collect();
    Ok(SearchOutcome {
        items,
        truncated,
        elapsed: started.elapsed(),
    })
}

/// A `T4` instance `(c; i, j, k)` with the entries it compares, each given
/// as (point index in `P_G`, direction).
struct Hexagon {
    differ: [(usize, usize); 2],
    /// `None` when `c + e_j ∉ P_G⁻`; then the two `differ` entries must agree.
    equal: Option<[[(usize, usize); 2]; 2]>,
}

struct AxiomSearch {
    m: usize,
    n: usize,
    pg: PointSet,
    /// Per point, for each direction, the labels allowed by the covering axiom.
    allowed: Vec<Vec<u32>>,
    /// Per point: `(i, earlier point)` pairs whose entry must contain ours.
    uppers: Vec<Vec<(usize, usize)>>,
    /// Per point: `(i, earlier point)` pairs whose entry ours must contain.
    lowers: Vec<Vec<(usize, usize)>>,
    /// Hexagons checked once the given point is assigned.
    hexagons: Vec<Vec<Hexagon>>,
}

impl AxiomSearch {
    fn new(g: &BipartiteGraph) -> Self {
        let (m, n) = (g.m(), g.n());
        let pg = points_pg(g);
        let pgm = points_pg_minus(g);
        let mut allowed = Vec::with_capacity(pg.len());
        let mut uppers = vec![Vec::new(); pg.len()];
        let mut lowers = vec![Vec::new(); pg.len()];
        for (k, a) in pg.iter().enumerate() {
            allowed.push(
                (0..m)
                    .map(|i| if a[i] == 0 { 0 } else { g.row(i) })
                    .collect::<Vec<u32>>(),
            );
            for i in (0..m).filter(|&i| a[i] > 0) {
                for j in (0..m).filter(|&j| j != i) {
                    if let Some(k2) = shift(a, i, j).and_then(|p| pg.index_of(&p)) {
                        if k2 < k {
                            uppers[k].push((i, k2));
                        } else {
                            lowers[k2].push((i, k));
                        }
                    }
                }
            }
        }
        let mut hexagons: Vec<Vec<Hexagon>> = (0..pg.len()).map(|_| Vec::new()).collect();
        if m >= 3 && n >= 2 {
            let at = |c: &[u32], x: usize, y: usize| pg.index_of(&plus(&plus(c, x), y));
            for c in simplex_points(m, n as u32 - 2) {
                for i in 0..m {
                    for k in i + 1..m {
                        if !pgm.contains(&plus(&c, i)) || !pgm.contains(&plus(&c, k)) {
                            continue;
                        }
                        for j in (0..m).filter(|&j| j != i && j != k) {
                            let a = at(&c, i, j).expect("in P_G");
                            let b = at(&c, k, j).expect("in P_G");
                            let differ = [(a, j), (b, j)];
                            let (equal, last) = if pgm.contains(&plus(&c, j)) {
                                let cc = at(&c, i, k).expect("in P_G");
                                let d = at(&c, j, k).expect("in P_G");
                                let eq = [[(cc, k), (d, k)], [(a, i), (cc, i)]];
                                (Some(eq), a.max(b).max(cc).max(d))
                            } else {
                                (None, a.max(b))
                            };
                            hexagons[last].push(Hexagon { differ, equal });
                        }
                    }
                }
            }
        }
        AxiomSearch {
            m,
            n,
            pg,
            allowed,
            uppers,
            lowers,
            hexagons,
        }
    }

    fn hexagons_hold(&self, k: usize, entries: &[u32]) -> bool {
        let e = |(p, i): (usize, usize)| entries[p * self.m + i];
        self.hexagons[k].iter().all(|h| {
            if e(h.differ[0]) == e(h.differ[1]) {
                return true;
            }
            match &h.equal {
                None => false,
                Some(eqs) => eqs.iter().all(|[x, y]| e(*x) == e(*y)),
            }
        })
    }

    /// Ordered partitions of the labels for point `k` compatible with the
    /// entries already fixed at earlier points.
    fn partitions(&self, k: usize, entries: &[u32]) -> Vec<Vec<u32>> {
        let m = self.m;
        let a = self.pg.get(k);
        let mut may = self.allowed[k].clone();
        let mut must = vec![0u32; m];
        for &(i, k2) in &self.uppers[k] {
            may[i] &= entries[k2 * m + i];
        }
        for &(i, k2) in &self.lowers[k] {
            must[i] |= entries[k2 * m + i];
        }
        for i in 0..m {
            if must[i] & !may[i] != 0 || must[i].count_ones() > a[i] || may[i].count_ones() < a[i] {
                return Vec::new();
            }
        }
        let mut out = Vec::new();
        let mut blocks = must.clone();
        let forced = must.iter().fold(0u32, |x, y| x | y);
        if must.iter().map(|x| x.count_ones()).sum::<u32>() != forced.count_ones() {
            return Vec::new();
        }
        let free: Vec<usize> = bits(low_mask(self.n) & !forced).collect();
        self.fill(&free, 0, a, &may, &mut blocks, &mut out);
        out
    }

    fn fill(
        &self,
        free: &[usize],
        t: usize,
        a: &[u32],
        may: &[u32],
        blocks: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if t == free.len() {
            if (0..self.m).all(|i| blocks[i].count_ones() == a[i]) {
                out.push(blocks.clone());
            }
            return;
        }
        let j = free[t];
        for i in 0..self.m {
            if may[i] >> j & 1 == 1 && blocks[i].count_ones() < a[i] {
                blocks[i] |= 1 << j;
                self.fill(free, t + 1, a, may, blocks, out);
                blocks[i] &= !(1 << j);
            }
        }
    }

    fn dfs(&self, k: usize, entries: &mut Vec<u32>, cap: Option<usize>, out: &mut Vec<Vec<u32>>) {
        if cap.is_some_and(|c| out.len() >= c) {
            return;
        }
        if k == self.pg.len() {
            out.push(entries.clone());
            return;
        }
        for blocks in self.partitions(k, entries) {
            entries[k * self.m..(k + 1) * self.m].copy_from_slice(&blocks);
            if self.hexagons_hold(k, entries) {
                self.dfs(k + 1, entries, cap, out);
                if cap.is_some_and(|c| out.len() >= c) {
                    break;
                }
            }
        }
        entries[k * self.m..(k + 1) * self.m].fill(0);
    }

    fn prefixes(&self) -> Vec<Vec<u32>> {
        let mut level = vec![vec![0u32; self.pg.len() * self.m]];
        for k in 0..self.pg.len().min(2) {
            let mut next = Vec::new();
            for entries in &level {
                for blocks in self.partitions(k, entries) {
                    let mut e = entries.clone();
                    e[k * self.m..(k + 1) * self.m].copy_from_slice(&blocks);
                    if self.hexagons_hold(k, &e) {
                        next.push(e);
                    }
                }
            }
            level = next;
        }
        level
    }
}

/// All trianguloids on `G`, found by assigning entries point by point with
/// the local axioms as constraints.
pub fn enumerate_trianguloids(
    g: &BipartiteGraph,
    opts: &SearchOptions,
) -> Result<SearchOutcome<Trianguloid>, SearchError> {
    let started = Instant::now();
    let search = AxiomSearch::new(g);
    let depth = search.pg.len().min(2);
    let cap = cap_for(opts);
    let prefixes = search.prefixes();
    let found = run_prefixes(&prefixes, opts.jobs, cap, |pre, cap| {
        let mut out = Vec::new();
        search.dfs(depth, &mut pre.clone(), cap, &mut out);
        out
    });
    let (raw, truncated) = finish(found, opts)?;
    let items = raw
        .into_iter()
        .map(|e| Trianguloid::from_raw(g.clone(), search.pg.clone(), e))
        .collect();
    Ok(SearchOutcome {
        items,
        truncated,
        elapsed: started.elapsed(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TreeSearch,
    AxiomSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub m: usize,
    pub n: usize,
    pub edges: usize,
    pub spanning_trees: usize,
    pub pg_points: usize,
    pub pg_minus_points: usize,
}

impl GraphSummary {
    pub fn of(g: &BipartiteGraph) -> Self {
        GraphSummary {
            m: g.m(),
            n: g.n(),
            edges: g.edge_count(),
            spanning_trees: enumerate_spanning_trees(g).len(),
            pg_points: points_pg(g).len(),
            pg_minus_points: points_pg_minus(g).len(),
        }
    }
}

/// Summary of one enumeration run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub graph: GraphSummary,
    pub method: Method,
    pub count: usize,
    pub truncated: bool,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub items: Option<Vec<serde_json::Value>>,
}

impl EnumerationReport {
    pub fn new<T>(g: &BipartiteGraph, method: Method, outcome: &SearchOutcome<T>) -> Self {
        EnumerationReport {
            graph: GraphSummary::of(g),
            method,
            count: outcome.items.len(),
            truncated: outcome.truncated,
            elapsed_ms: outcome.elapsed.as_secs_f64() * 1e3,
            items: None,
        }
    }
}

/// Outcome of comparing the maps `φ_τ` across triangulations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiInjectivity {
    pub injective: bool,
    /// Indices of two triangulations with the same map.
    pub witness: Option<(usize, usize)>,
}

pub fn phi_injectivity(tris: &[Triangulation]) -> PhiInjectivity {
    let mut maps: Vec<(crate::triangulation::PhiMap, usize)> =
        tris.iter().enumerate().map(|(k, t)| (phi(t), k)).collect();
    maps.sort();
    for w in maps.windows(2) {
        if w[0].0 == w[1].0 {
            return PhiInjectivity {
                injective: false,
                witness: Some((w[0].1.min(w[1].1), w[0].1.max(w[1].1))),
            };
        }
    }
    PhiInjectivity {
        injective: true,
        witness: None,
    }
}

/// Flip data gathered over a list of triangulations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlipProbe {
    pub trees: usize,
    pub replaceable_edges: usize,
    pub flips: usize,
    /// Per triangulation, how many of its trees are reachable from the
    /// first one by repeated flips.
    pub reached: Vec<usize>,
    /// `(triangulation index, point, edge)` where no flip partner exists.
    pub not_found: Vec<(usize, Point, Edge)>,
}

/// Flips every replaceable edge of every tree and records the outcome,
/// together with how many trees of each triangulation are reachable from
/// its first tree by repeated flips.
pub fn flip_probe(tris: &[Triangulation]) -> FlipProbe {
    let mut probe = FlipProbe::default();
    for (ti, tau) in tris.iter().enumerate() {
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); tau.len()];
        for (k, (b, t)) in tau.iter().enumerate() {
            probe.trees += 1;
            for e in t.edges() {
                if !is_replaceable(tau.graph(), t, e).expect("edge of the tree") {
                    continue;
                }
                probe.replaceable_edges += 1;
                match flip(tau, b, e) {
                    Ok(b2) => {
                        probe.flips += 1;
                        adjacency[k].push(tau.points().index_of(&b2).expect("point of τ"));
                    }
                    Err(_) => probe.not_found.push((ti, b.clone(), e)),
                }
            }
        }
        let mut seen = vec![false; tau.len()];
        let mut stack = vec![0usize];
        if !tau.is_empty() {
            seen[0] = true;
        }
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        probe.reached.push(seen.iter().filter(|&&s| s).count());
    }
    probe
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trianguloid::{check_axioms, from_triangulation};

    fn opts(limit: Option<usize>, policy: LimitPolicy, jobs: usize) -> SearchOptions {
        SearchOptions {
            limit,
            policy,
            jobs,
        }
    }

    #[test]
    fn small_complete_counts() {
        for (m, n, want) in [(1, 3, 1), (2, 2, 2), (2, 3, 6), (3, 2, 6), (3, 3, 108)] {
            let g = BipartiteGraph::complete(m, n).unwrap();
            let trees = enumerate_triangulations(&g, &SearchOptions::default()).unwrap();
            let axioms = enumerate_trianguloids(&g, &SearchOptions::default()).unwrap();
            assert_eq!(trees.items.len(), want, "trees K{m},{n}");
            assert_eq!(axioms.items.len(), want, "axioms K{m},{n}");
        }
    }

    #[test]
    fn methods_agree_elementwise() {
        let g = BipartiteGraph::new(3, 3, &[vec![0, 1, 2], vec![0, 1], vec![1, 2]]).unwrap();
        let trees = enumerate_triangulations(&g, &SearchOptions::default()).unwrap();
        let axioms = enumerate_trianguloids(&g, &SearchOptions::default()).unwrap();
        let mut from_trees: Vec<Trianguloid> = trees.items.iter().map(from_triangulation).collect();
        from_trees.sort_by_key(|t| t.entries());
        let mut direct = axioms.items.clone();
        direct.sort_by_key(|t| t.entries());
        assert_eq!(from_trees, direct);
        assert!(direct.iter().all(|t| check_axioms(t).is_trianguloid));
    }

    #[test]
    fn limit_policies() {
        let g = BipartiteGraph::complete(3, 3).unwrap();
        let err = enumerate_triangulations(&g, &opts(Some(10), LimitPolicy::Error, 1));
        assert_eq!(err.unwrap_err(), SearchError::LimitExceeded(10));
        let cut = enumerate_triangulations(&g, &opts(Some(10), LimitPolicy::Truncate, 1)).unwrap();
        assert!(cut.truncated);
        assert_eq!(cut.items.len(), 10);
        let exact = enumerate_trianguloids(&g, &opts(Some(108), LimitPolicy::Error, 1)).unwrap();
        assert!(!exact.truncated);
        assert_eq!(exact.items.len(), 108);
    }

    #[test]
    fn jobs_do_not_change_output() {
        let g = BipartiteGraph::complete(3, 3).unwrap();
        let one = enumerate_triangulations(&g, &opts(Some(40), LimitPolicy::Truncate, 1)).unwrap();
        let four = enumerate_triangulations(&g, &opts(Some(40), LimitPolicy::Truncate, 4)).unwrap();
        assert_eq!(one.items, four.items);
        let one = enumerate_trianguloids(&g, &opts(None, LimitPolicy::Error, 1)).unwrap();
        let four = enumerate_trianguloids(&g, &opts(None, LimitPolicy::Error, 4)).unwrap();
        assert_eq!(one.items, four.items);
    }

    #[test]
    fn phi_and_flips_on_k23() {
        let g = BipartiteGraph::complete(2, 3).unwrap();
        let tris = enumerate_triangulations(&g, &SearchOptions::default())
            .unwrap()
            .items;
        assert!(phi_injectivity(&tris).injective);
        let probe = flip_probe(&tris);
        assert!(probe.not_found.is_empty());
        assert_eq!(probe.trees, 6 * 3);
        assert_eq!(probe.reached, vec![3; 6]);
        let dup = vec![tris[0].clone(), tris[0].clone()];
        assert_eq!(phi_injectivity(&dup).witness, Some((0, 1)));
    }
}
