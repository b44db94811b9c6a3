//! Compatibility of forests.
//!
//! `F` and `F'` are compatible when the digraph `U(F, F')` (arcs `i → j̄`
//! for edges of `F`, `j̄ → i` for edges of `F'`) has no simple directed
//! cycle on three or more vertices. The fast test contracts the shared
//! forest `F ∩ F'` and looks for any directed cycle among the components.
//! Every long cycle of `U` uses an unshared edge, and a cycle of components
//! lifts to a long cycle by joining consecutive arcs with paths inside the
//! shared forest, where arcs run both ways.

use std::collections::HashMap;

use crate::error::CompatError;
use crate::graph::{bits, DisjointSets, Edge, Subgraph, Supports, Vertex};

/// The directed union graph `U(F, F')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionDigraph {
    forward: Subgraph,
    backward: Subgraph,
}

impl UnionDigraph {
    pub fn new(f: &Subgraph, f2: &Subgraph) -> Self {
        UnionDigraph {
            forward: f.clone(),
            backward: f2.clone(),
        }
    }

    pub fn m(&self) -> usize {
        self.forward.m()
    }

    pub fn n(&self) -> usize {
        self.forward.n()
    }

    /// Arcs, left-to-right ones first, each group in canonical edge order.
    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        let fwd = self
            .forward
            .edges()
            .into_iter()
            .map(|e| (Vertex::Left(e.left), Vertex::Right(e.right)));
        let bwd = self
            .backward
            .edges()
            .into_iter()
            .map(|e| (Vertex::Right(e.right), Vertex::Left(e.left)));
        fwd.chain(bwd).collect()
    }

    fn successors(&self, v: usize) -> Vec<usize> {
        let m = self.m();
        if v < m {
            bits(self.forward.row(v)).map(|j| m + j).collect()
        } else {
            bits(self.backward.col(v - m)).collect()
        }
    }
}

fn check_shapes(f: &Subgraph, f2: &Subgraph) -> Result<(), CompatError> {
    if f.m() != f2.m() || f.n() != f2.n() {
        return Err(CompatError::ShapeMismatch);
    }
    if !f.is_forest() || !f2.is_forest() {
        return Err(CompatError::NotAForest);
    }
    Ok(())
}

/// True when the forests are compatible.
pub fn is_compatible(f: &Subgraph, f2: &Subgraph) -> Result<bool, CompatError> {
    check_shapes(f, f2)?;
    Ok(long_cycle(f, f2).is_none())
}

/// A simple directed cycle of length at least four in `U(F, F')`, if any.
pub fn incompatibility_witness(
    f: &Subgraph,
    f2: &Subgraph,
) -> Result<Option<Vec<Vertex>>, CompatError> {
    check_shapes(f, f2)?;
    Ok(long_cycle(f, f2))
}

fn to_vertex(v: usize, m: usize) -> Vertex {
    if v < m {
        Vertex::Left(v)
    } else {
        Vertex::Right(v - m)
    }
}

/// Long-cycle search without the forest precondition check. Callers must
/// pass forests of the same shape.
pub(crate) fn long_cycle(f: &Subgraph, f2: &Subgraph) -> Option<Vec<Vertex>> {
    let m = f.m();
    let total = m + f.n();
    let shared = f.intersection(f2);
    let mut ds = DisjointSets::new(total);
    for e in shared.edges() {
        ds.union(e.left, m + e.right);
    }
    // Arcs between components, as (from vertex, to vertex).
    let mut out_arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); total];
    let mut any = false;
    for e in f.difference(f2).edges() {
        let (u, v) = (e.left, m + e.right);
        out_arcs[ds.find(u)].push((u, v));
        any = true;
    }
    for e in f2.difference(f).edges() {
        let (u, v) = (m + e.right, e.left);
        out_arcs[ds.find(u)].push((u, v));
        any = true;
    }
    if !any {
        return None;
    }
    let arcs = component_cycle(&mut ds, &out_arcs, total)?;
    Some(lift(&shared, m, &arcs))
}

/// A simple directed cycle in the component digraph, returned as the list
/// of vertex-level arcs realizing it.
fn component_cycle(
    ds: &mut DisjointSets,
    out_arcs: &[Vec<(usize, usize)>],
    total: usize,
) -> Option<Vec<(usize, usize)>> {
    const WHITE: u8 = 0;
    const GRAY: u8 = 1;
    const BLACK: u8 = 2;
    let comp: Vec<usize> = (0..total).map(|v| ds.find(v)).collect();
    let mut color = vec![WHITE; total];
    let mut via: Vec<Option<(usize, usize)>> = vec![None; total];
    for root in 0..total {
        if comp[root] != root || color[root] != WHITE || out_arcs[root].is_empty() {
            continue;
        }
        // Iterative DFS over component representatives.
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        color[root] = GRAY;
        while let Some(&mut (c, ref mut k)) = stack.last_mut() {
            if *k == out_arcs[c].len() {
                color[c] = BLACK;
                stack.pop();
                continue;
            }
            let arc = out_arcs[c][*k];
            *k += 1;
            let d = comp[arc.1];
            match color[d] {
                WHITE => {
                    color[d] = GRAY;
                    via[d] = Some(arc);
                    stack.push((d, 0));
                }
                GRAY => {
                    let mut cycle = vec![arc];
                    let mut x = c;
                    while x != d {
                        let a = via[x].expect("gray component reached by an arc");
                        cycle.push(a);
                        x = comp[a.0];
                    }
                    cycle.reverse();
                    return Some(cycle);
                }
                _ => {}
            }
        }
    }
    None
}

/// Joins consecutive inter-component arcs by tree paths inside the shared
/// forest.
fn lift(shared: &Subgraph, m: usize, arcs: &[(usize, usize)]) -> Vec<Vertex> {
    let mut seq = Vec::new();
    for (t, &(u, v)) in arcs.iter().enumerate() {
        let next_start = arcs[(t + 1) % arcs.len()].0;
        seq.push(u);
        let path = tree_path(shared, m, v, next_start);
        seq.extend_from_slice(&path[..path.len() - 1]);
    }
    seq.into_iter().map(|v| to_vertex(v, m)).collect()
}

/// Vertices of the path from `a` to `b` in a forest, both ends included.
fn tree_path(forest: &Subgraph, m: usize, a: usize, b: usize) -> Vec<usize> {
    let total = m + forest.n();
    let mut prev = vec![usize::MAX; total];
    prev[a] = a;
    let mut queue = std::collections::VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        let nbrs: Vec<usize> = if x < m {
            bits(forest.row(x)).map(|j| m + j).collect()
        } else {
            bits(forest.col(x - m)).collect()
        };
        for y in nbrs {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Reference test: enumerates simple directed cycles of `U` from each start
/// vertex and reports whether one has three or more vertices.
pub fn has_long_cycle_naive(u: &UnionDigraph) -> bool {
    let total = u.m() + u.n();
    fn dfs(u: &UnionDigraph, start: usize, v: usize, depth: usize, on_path: &mut [bool]) -> bool {
        for w in u.successors(v) {
            if w == start && depth >= 3 {
                return true;
            }
            if w > start && !on_path[w] {
                on_path[w] = true;
                let found = dfs(u, start, w, depth + 1, on_path);
                on_path[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    (0..total).any(|s| {
        let mut on_path = vec![false; total];
        on_path[s] = true;
        dfs(u, s, s, 1, &mut on_path)
    })
}

/// Reference test: enumerates simple undirected cycles of the graph
/// `F ∪ F'` and reports whether one can be traversed with every edge in an
/// allowed direction (shared edges both ways, `F` edges left to right,
/// `F'` edges right to left).
pub fn has_orientable_cycle(f: &Subgraph, f2: &Subgraph) -> bool {
    let m = f.m();
    let total = m + f.n();
    let both = f.union(f2);
    let nbrs = |x: usize| -> Vec<usize> {
        if x < m {
            bits(both.row(x)).map(|j| m + j).collect()
        } else {
            bits(both.col(x - m)).collect()
        }
    };
    let allowed = |x: usize, y: usize| -> bool {
        if x < m {
            f.contains(Edge::new(x, y - m))
        } else {
            f2.contains(Edge::new(y, x - m))
        }
    };
    let orientable = |cyc: &[usize]| -> bool {
        let k = cyc.len();
        let fwd = (0..k).all(|t| allowed(cyc[t], cyc[(t + 1) % k]));
        let bwd = (0..k).all(|t| allowed(cyc[(t + 1) % k], cyc[t]));
        fwd || bwd
    };
    fn rec(
        path: &mut Vec<usize>,
        on: &mut [bool],
        start: usize,
        nbrs: &dyn Fn(usize) -> Vec<usize>,
        test: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        let x = *path.last().unwrap();
        for y in nbrs(x) {
            if y == start && path.len() >= 4 && test(path) {
                return true;
            }
            if y > start && !on[y] {
                on[y] = true;
                path.push(y);
                if rec(path, on, start, nbrs, test) {
                    return true;
                }
                path.pop();
                on[y] = false;
            }
        }
        false
    }
    (0..total).any(|s| {
        let mut on = vec![false; total];
        on[s] = true;
        rec(&mut vec![s], &mut on, s, &nbrs, &orientable)
    })
}

/// Largest forest size accepted by [`is_compatible_oracle`].
pub const ORACLE_MAX_EDGES: usize = 16;

/// Brute-force compatibility: no partial matchings `M ⊆ F`, `M' ⊆ F'` with
/// `M ≠ M'` and equal degree profiles.
pub fn is_compatible_oracle(f: &Subgraph, f2: &Subgraph) -> Result<bool, CompatError> {
    for s in [f, f2] {
        if s.len() > ORACLE_MAX_EDGES {
            return Err(CompatError::TooLarge(s.len()));
        }
    }
    check_shapes(f, f2)?;
    let mut by_support: HashMap<Supports, Vec<Subgraph>> = HashMap::new();
    for mt in partial_matchings(f) {
        let s = mt.supports().expect("partial matching");
        by_support.entry(s).or_default().push(mt);
    }
    for mt in partial_matchings(f2) {
        let s = mt.supports().expect("partial matching");
        if let Some(list) = by_support.get(&s) {
            if list.iter().any(|x| *x != mt) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All partial matchings contained in `f`, the empty one included.
pub fn partial_matchings(f: &Subgraph) -> Vec<Subgraph> {
    let edges = f.edges();
    let mut out = Vec::new();
    fn rec(
        edges: &[Edge],
        k: usize,
        used_l: u32,
        used_r: u32,
        cur: &mut Subgraph,
        out: &mut Vec<Subgraph>,
    ) {
        if k == edges.len() {
            out.push(cur.clone());
            return;
        }
        rec(edges, k + 1, used_l, used_r, cur, out);
        let e = edges[k];
        if used_l >> e.left & 1 == 0 && used_r >> e.right & 1 == 0 {
            cur.insert(e);
            rec(
                edges,
                k + 1,
                used_l | 1 << e.left,
                used_r | 1 << e.right,
                cur,
                out,
            );
            cur.remove(e);
        }
    }
    rec(
        &edges,
        0,
        0,
        0,
        &mut Subgraph::empty(f.m(), f.n()),
        &mut out,
    );
    out
}
