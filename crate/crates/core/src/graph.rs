//! Bipartite graphs `G ⊆ K_{m,n}`, their edge subsets, and degree data.
//!
//! Vertices are 0-based in the Rust API. Left vertex `i` and right vertex
//! `j` are printed 1-based (`i+1`, `j+1`) and the JSON layer converts.
//! Edge sets are stored as one `u32` mask per left vertex.

use std::fmt;

use crate::error::GraphError;

/// Largest supported side size.
pub const MAX_SIDE: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Left(usize),
    Right(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Left(i) => write!(f, "{}", i + 1),
            Vertex::Right(j) => write!(f, "{}'", j + 1),
        }
    }
}

/// An edge `(i, j̄)`; ordering is lexicographic by `(left, right)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub left: usize,
    pub right: usize,
}

impl Edge {
    pub const fn new(left: usize, right: usize) -> Self {
        Edge { left, right }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}')", self.left + 1, self.right + 1)
    }
}

pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

pub(crate) fn low_mask(k: usize) -> u32 {
    if k >= 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

/// Union-find over `0..len` with path halving.
#[derive(Clone, Debug)]
pub(crate) struct DisjointSets {
    parent: Vec<u16>,
}

impl DisjointSets {
    pub fn new(len: usize) -> Self {
        debug_assert!(len <= 1 << 16);
        DisjointSets {
            parent: (0..len).map(|x| x as u16).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb) as u16;
        true
    }
}

/// A connected bipartite graph with left side `[m]` and right side `[n̄]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    m: usize,
    n: usize,
    rows: Vec<u32>,
    cols: Vec<u32>,
}

impl BipartiteGraph {
    /// Builds a graph from the neighborhoods `N_j̄` of the right vertices
    /// (0-based left indices).
    pub fn new(m: usize, n: usize, right_neighborhoods: &[Vec<usize>]) -> Result<Self, GraphError> {
        if m == 0 || n == 0 || m > MAX_SIDE || n > MAX_SIDE {
            return Err(GraphError::OutOfRange { m, n });
        }
        if right_neighborhoods.len() != n {
            return Err(GraphError::NeighborhoodCount {
                expected: n,
                got: right_neighborhoods.len(),
            });
        }
        let mut cols = vec![0u32; n];
        for (j, nb) in right_neighborhoods.iter().enumerate() {
            for &i in nb {
                if i >= m {
                    return Err(GraphError::LeftIndexOutOfRange { index: i + 1, m });
                }
                cols[j] |= 1 << i;
            }
        }
        Self::from_cols(m, n, cols)
    }

    /// The complete bipartite graph `K_{m,n}`.
    pub fn complete(m: usize, n: usize) -> Result<Self, GraphError> {
        if m == 0 || n == 0 || m > MAX_SIDE || n > MAX_SIDE {
            return Err(GraphError::OutOfRange { m, n });
        }
        Self::from_cols(m, n, vec![low_mask(m); n])
    }

    fn from_cols(m: usize, n: usize, cols: Vec<u32>) -> Result<Self, GraphError> {
        let mut rows = vec![0u32; m];
        for (j, &c) in cols.iter().enumerate() {
            for i in bits(c) {
                rows[i] |= 1 << j;
            }
        }
        for (j, &c) in cols.iter().enumerate() {
            if c == 0 {
                return Err(GraphError::IsolatedVertex(Vertex::Right(j)));
            }
        }
        for (i, &r) in rows.iter().enumerate() {
            if r == 0 {
                return Err(GraphError::IsolatedVertex(Vertex::Left(i)));
            }
        }
        let g = BipartiteGraph { m, n, rows, cols };
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    fn is_connected(&self) -> bool {
        let (mut left, mut right) = (1u32, 0u32);
        loop {
            let new_right = bits(left).fold(right, |acc, i| acc | self.rows[i]);
            let new_left = bits(new_right).fold(left, |acc, j| acc | self.cols[j]);
            if new_left == left && new_right == right {
                break;
            }
            left = new_left;
            right = new_right;
        }
        left == low_mask(self.m) && right == low_mask(self.n)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask of right neighbors of left vertex `i`.
    pub fn row(&self, i: usize) -> u32 {
        self.rows[i]
    }

    /// Mask of left neighbors of right vertex `j` (the set `N_j̄`).
    pub fn col(&self, j: usize) -> u32 {
        self.cols[j]
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.left < self.m && e.right < self.n && self.rows[e.left] >> e.right & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        self.as_subgraph().edges()
    }

    pub fn is_complete(&self) -> bool {
        self.cols.iter().all(|&c| c == low_mask(self.m))
    }

    /// Right neighborhoods as sorted 0-based index lists.
    pub fn right_neighborhoods(&self) -> Vec<Vec<usize>> {
        self.cols.iter().map(|&c| bits(c).collect()).collect()
    }

    /// The whole edge set as a subgraph.
    pub fn as_subgraph(&self) -> Subgraph {
        Subgraph {
            n: self.n,
            rows: self.rows.clone(),
        }
    }

    /// The graph with the two sides exchanged.
    pub fn dual(&self) -> BipartiteGraph {
        BipartiteGraph {
            m: self.n,
            n: self.m,
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }
}

/// Degree vector of a subgraph on one side, optionally with 1 subtracted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeVector {
    pub entries: Vec<i32>,
    pub side: Side,
    pub trimmed: bool,
}

impl DegreeVector {
    /// The entries as a lattice point, if all are nonnegative.
    pub fn to_point(&self) -> Option<Vec<u32>> {
        self.entries
            .iter()
            .map(|&x| u32::try_from(x).ok())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    pub is_forest: bool,
    pub is_spanning_tree: bool,
    pub is_rsm: bool,
    pub is_lsm: bool,
    pub is_pm: bool,
}

/// Left and right supports of a partial matching, as masks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Supports {
    pub left: u32,
    pub right: u32,
}

/// An edge subset of some `K_{m,n}`; membership in a particular graph is
/// checked by [`Subgraph::new`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgraph {
    n: usize,
    rows: Vec<u32>,
}

impl Subgraph {
    /// Validates `edges` against `g`.
    pub fn new(g: &BipartiteGraph, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut s = Subgraph::empty(g.m(), g.n());
        for &e in edges {
            if e.left >= g.m() {
                return Err(GraphError::LeftIndexOutOfRange {
                    index: e.left + 1,
                    m: g.m(),
                });
            }
            if e.right >= g.n() {
                return Err(GraphError::RightIndexOutOfRange {
                    index: e.right + 1,
                    n: g.n(),
                });
            }
            if !g.has_edge(e) {
                return Err(GraphError::EdgeNotInGraph(e));
            }
            if !s.insert(e) {
                return Err(GraphError::DuplicateEdge(e));
            }
        }
        Ok(s)
    }

    pub fn empty(m: usize, n: usize) -> Self {
        Subgraph {
            n,
            rows: vec![0; m],
        }
    }

    /// Builds a subgraph from per-left-vertex masks over `n` right vertices.
    pub fn from_rows(n: usize, rows: Vec<u32>) -> Self {
        debug_assert!(rows.iter().all(|&r| r & !low_mask(n) == 0));
        Subgraph { n, rows }
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> u32 {
        self.rows[i]
    }

    pub fn col(&self, j: usize) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r >> j & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn contains(&self, e: Edge) -> bool {
        e.left < self.m() && self.rows[e.left] >> e.right & 1 == 1
    }

    /// Adds an edge; returns false when it was already present.
    pub fn insert(&mut self, e: Edge) -> bool {
        let had = self.contains(e);
        self.rows[e.left] |= 1 << e.right;
        !had
    }

    /// Removes an edge; returns false when it was absent.
    pub fn remove(&mut self, e: Edge) -> bool {
        let had = self.contains(e);
        self.rows[e.left] &= !(1 << e.right);
        had
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| bits(r).map(move |j| Edge::new(i, j)))
            .collect()
    }

    pub fn is_subset(&self, other: &Subgraph) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Subgraph) -> Subgraph {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Subgraph) -> Subgraph {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Subgraph) -> Subgraph {
        self.zip_with(other, |a, b| a & !b)
    }

    fn zip_with(&self, other: &Subgraph, f: impl Fn(u32, u32) -> u32) -> Subgraph {
        debug_assert_eq!((self.m(), self.n), (other.m(), other.n));
        Subgraph {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn left_degrees(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.count_ones()).collect()
    }

    pub fn right_degrees(&self) -> Vec<u32> {
        let mut d = vec![0u32; self.n];
        for &r in &self.rows {
            for j in bits(r) {
                d[j] += 1;
            }
        }
        d
    }

    pub fn degree_vector(&self, side: Side, trimmed: bool) -> DegreeVector {
        let raw = match side {
            Side::Left => self.left_degrees(),
            Side::Right => self.right_degrees(),
        };
        let shift = i32::from(trimmed);
        DegreeVector {
            entries: raw.into_iter().map(|d| d as i32 - shift).collect(),
            side,
            trimmed,
        }
    }

    /// `LD(F)`.
    pub fn ld(&self) -> Vec<u32> {
        self.left_degrees()
    }

    /// `RD(F)`.
    pub fn rd(&self) -> Vec<u32> {
        self.right_degrees()
    }

    /// `LD⁻(F)`, or `None` when some left vertex is uncovered.
    pub fn ld_minus(&self) -> Option<Vec<u32>> {
        self.left_degrees()
            .into_iter()
            .map(|d| d.checked_sub(1))
            .collect()
    }

    /// `RD⁻(F)`, or `None` when some right vertex is uncovered.
    pub fn rd_minus(&self) -> Option<Vec<u32>> {
        self.right_degrees()
            .into_iter()
            .map(|d| d.checked_sub(1))
            .collect()
    }

    /// Neighbors of left vertex `i` in this subgraph.
    pub fn left_neighbors(&self, i: usize) -> u32 {
        self.rows[i]
    }

    pub fn is_forest(&self) -> bool {
        let m = self.m();
        let mut ds = DisjointSets::new(m + self.n);
        self.edges()
            .into_iter()
            .all(|e| ds.union(e.left, m + e.right))
    }

    /// True when the subgraph is a forest touching all `m + n` vertices in
    /// one component.
    pub fn is_spanning_tree(&self) -> bool {
        self.len() + 1 == self.m() + self.n && self.is_forest()
    }

    pub fn classify(&self) -> Classification {
        let is_forest = self.is_forest();
        let ld = self.left_degrees();
        let rd = self.right_degrees();
        Classification {
            is_forest,
            is_spanning_tree: is_forest && self.len() + 1 == self.m() + self.n,
            is_rsm: is_forest && rd.iter().all(|&d| d == 1),
            is_lsm: is_forest && ld.iter().all(|&d| d == 1),
            is_pm: ld.iter().chain(&rd).all(|&d| d <= 1),
        }
    }

    /// Supports `(I(M), J(M))` of a partial matching.
    pub fn supports(&self) -> Result<Supports, GraphError> {
        let mut left = 0u32;
        let mut right = 0u32;
        for (i, &r) in self.rows.iter().enumerate() {
            if r.count_ones() > 1 || right & r != 0 {
                return Err(GraphError::NotPartialMatching);
            }
            if r != 0 {
                left |= 1 << i;
                right |= r;
            }
        }
        Ok(Supports { left, right })
    }

    /// Connected components, isolated vertices included, each sorted and
    /// listed by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let m = self.m();
        let mut ds = DisjointSets::new(m + self.n);
        for e in self.edges() {
            ds.union(e.left, m + e.right);
        }
        let mut groups: Vec<Vec<Vertex>> = Vec::new();
        let mut slot = vec![usize::MAX; m + self.n];
        for v in 0..m + self.n {
            let r = ds.find(v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            let vertex = if v < m {
                Vertex::Left(v)
            } else {
                Vertex::Right(v - m)
            };
            groups[slot[r]].push(vertex);
        }
        groups
    }

    /// The same edges viewed in the dual graph.
    pub fn transpose(&self) -> Subgraph {
        let mut rows = vec![0u32; self.n];
        for e in self.edges() {
            rows[e.right] |= 1 << e.left;
        }
        Subgraph { n: self.m(), rows }
    }
}

/// All spanning trees of `g` in sorted order.
pub fn enumerate_spanning_trees(g: &BipartiteGraph) -> Vec<Subgraph> {
    let edges = g.edges();
    let m = g.m();
    let target = g.m() + g.n() - 1;
    let mut out = Vec::new();
    let mut chosen = Subgraph::empty(g.m(), g.n());
    let ds = DisjointSets::new(g.m() + g.n());

    fn connected_with_rest(ds: &DisjointSets, rest: &[Edge], m: usize, total: usize) -> bool {
        let mut ds = ds.clone();
        let mut comps = (0..total).filter(|&v| ds.find(v) == v).count();
        for e in rest {
            if ds.union(e.left, m + e.right) {
                comps -= 1;
            }
        }
        comps == 1
    }

    struct Walk<'a> {
        edges: &'a [Edge],
        m: usize,
        total: usize,
        target: usize,
    }

    fn rec(w: &Walk, k: usize, chosen: &mut Subgraph, ds: &DisjointSets, out: &mut Vec<Subgraph>) {
        let Walk {
            edges,
            m,
            total,
            target,
        } = *w;
        if chosen.len() == target {
            out.push(chosen.clone());
            return;
        }
        if k == edges.len() {
            return;
        }
        let e = edges[k];
        let mut with = ds.clone();
        if with.union(e.left, m + e.right) {
            chosen.insert(e);
            rec(w, k + 1, chosen, &with, out);
            chosen.remove(e);
        }
        if connected_with_rest(ds, &edges[k + 1..], m, total) {
            rec(w, k + 1, chosen, ds, out);
        }
    }

    let total = g.m() + g.n();
    if connected_with_rest(&ds, &edges, m, total) {
        let w = Walk {
            edges: &edges,
            m,
            total,
            target,
        };
        rec(&w, 0, &mut chosen, &ds, &mut out);
    }
    out.sort();
    debug_assert!(spanning_tree_count(g).is_none_or(|c| c == out.len() as u128));
    out
}

/// Number of spanning trees by the matrix-tree theorem, or `None` on
/// overflow.
pub fn spanning_tree_count(g: &BipartiteGraph) -> Option<u128> {
    let (m, n) = (g.m(), g.n());
    let size = m + n - 1;
    if size == 0 {
        return Some(1);
    }
    // Laplacian with the last right vertex removed.
    let mut a = vec![vec![0i128; size]; size];
    for (i, r) in a.iter_mut().enumerate().take(m) {
        r[i] = g.row(i).count_ones() as i128;
    }
    for j in 0..n {
        if m + j < size {
            a[m + j][m + j] = g.col(j).count_ones() as i128;
        }
    }
    for e in g.edges() {
        if m + e.right < size {
            a[e.left][m + e.right] = -1;
            a[m + e.right][e.left] = -1;
        }
    }
    bareiss_determinant(a).and_then(|d| u128::try_from(d).ok())
}

fn bareiss_determinant(mut a: Vec<Vec<i128>>) -> Option<i128> {
    let size = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..size {
        if a[k][k] == 0 {
            let swap = (k + 1..size).find(|&r| a[r][k] != 0)?;
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = a[i][j]
                    .checked_mul(a[k][k])?
                    .checked_sub(a[i][k].checked_mul(a[k][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    Some(sign * a[size - 1][size - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(g: &BipartiteGraph, edges: &[(usize, usize)]) -> Subgraph {
        let e: Vec<Edge> = edges
            .iter()
            .map(|&(i, j)| Edge::new(i - 1, j - 1))
            .collect();
        Subgraph::new(g, &e).unwrap()
    }

    fn sixth_graph() -> BipartiteGraph {
        BipartiteGraph::new(
            3,
            5,
            &[
                vec![0, 1, 2],
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![1, 2],
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            BipartiteGraph::new(2, 2, &[vec![0], vec![1]]),
            Err(GraphError::Disconnected)
        );
        assert_eq!(
            BipartiteGraph::new(2, 1, &[vec![0]]),
            Err(GraphError::IsolatedVertex(Vertex::Left(1)))
        );
        assert_eq!(
            BipartiteGraph::new(2, 2, &[vec![0, 1], vec![]]),
            Err(GraphError::IsolatedVertex(Vertex::Right(1)))
        );
        assert!(matches!(
            BipartiteGraph::new(2, 1, &[vec![0, 2]]),
            Err(GraphError::LeftIndexOutOfRange { .. })
        ));
        assert!(matches!(
            BipartiteGraph::complete(33, 1),
            Err(GraphError::OutOfRange { .. })
        ));
        assert!(BipartiteGraph::complete(32, 32).is_ok());
    }

    #[test]
    fn dual_examples() {
        let k34 = BipartiteGraph::complete(3, 4).unwrap();
        assert_eq!(k34.dual(), BipartiteGraph::complete(4, 3).unwrap());
        let g = sixth_graph();
        let d = g.dual();
        assert_eq!(d.m(), 5);
        assert_eq!(
            d.right_neighborhoods(),
            vec![vec![0, 1, 3], vec![0, 1, 2, 4], vec![0, 2, 3, 4]]
        );
        assert_eq!(d.dual(), g);
    }

    #[test]
    fn degree_vectors_of_center_tree() {
        let k34 = BipartiteGraph::complete(3, 4).unwrap();
        let t = sub(&k34, &[(1, 1), (1, 4), (2, 2), (2, 3), (3, 3), (3, 4)]);
        assert_eq!(t.degree_vector(Side::Left, true).entries, vec![1, 1, 1]);
        assert_eq!(
            t.degree_vector(Side::Right, false).entries,
            vec![1, 1, 2, 2]
        );
        assert_eq!(
            Subgraph::empty(3, 4)
                .degree_vector(Side::Left, false)
                .entries,
            vec![0, 0, 0]
        );
        assert_eq!(Subgraph::empty(3, 4).ld_minus(), None);
        let c = t.classify();
        assert!(c.is_spanning_tree && c.is_forest && !c.is_rsm && !c.is_pm);
        assert_eq!(t.supports(), Err(GraphError::NotPartialMatching));
    }

    #[test]
    fn classify_small_cases() {
        let k22 = BipartiteGraph::complete(2, 2).unwrap();
        let pm = sub(&k22, &[(1, 1), (2, 2)]);
        let c = pm.classify();
        assert!(c.is_pm && c.is_forest && c.is_rsm && c.is_lsm && !c.is_spanning_tree);
        let square = sub(&k22, &[(1, 1), (2, 1), (1, 2), (2, 2)]);
        assert!(!square.classify().is_forest);
    }

    #[test]
    fn supports_examples() {
        let k32 = BipartiteGraph::complete(3, 2).unwrap();
        let m = sub(&k32, &[(1, 2), (3, 1)]);
        assert_eq!(
            m.supports(),
            Ok(Supports {
                left: 0b101,
                right: 0b11
            })
        );
        assert_eq!(
            Subgraph::empty(3, 2).supports(),
            Ok(Supports { left: 0, right: 0 })
        );
    }

    #[test]
    fn components_examples() {
        let k22 = BipartiteGraph::complete(2, 2).unwrap();
        assert_eq!(Subgraph::empty(2, 2).components().len(), 4);
        let one = sub(&k22, &[(1, 1)]);
        assert_eq!(
            one.components(),
            vec![
                vec![Vertex::Left(0), Vertex::Right(0)],
                vec![Vertex::Left(1)],
                vec![Vertex::Right(1)]
            ]
        );
        let tree = sub(&k22, &[(1, 1), (1, 2), (2, 2)]);
        assert_eq!(tree.components().len(), 1);
    }

    #[test]
    fn spanning_tree_counts() {
        for (m, n, count) in [(2, 2, 4), (2, 3, 12), (3, 3, 81), (3, 4, 432), (1, 5, 1)] {
            let g = BipartiteGraph::complete(m, n).unwrap();
            let trees = enumerate_spanning_trees(&g);
            assert_eq!(trees.len(), count);
            assert_eq!(spanning_tree_count(&g), Some(count as u128));
            assert!(trees.iter().all(Subgraph::is_spanning_tree));
        }
        let g = sixth_graph();
        assert_eq!(
            enumerate_spanning_trees(&g).len() as u128,
            spanning_tree_count(&g).unwrap()
        );
    }

    #[test]
    fn transpose_swaps_degrees() {
        let k34 = BipartiteGraph::complete(3, 4).unwrap();
        let t = sub(&k34, &[(1, 1), (1, 4), (2, 2), (2, 3), (3, 3), (3, 4)]);
        let tt = t.transpose();
        assert_eq!(tt.ld(), t.rd());
        assert_eq!(tt.rd(), t.ld());
        assert_eq!(tt.transpose(), t);
    }
}
