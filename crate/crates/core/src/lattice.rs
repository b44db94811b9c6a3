//! Lattice points of `P_G`, `P_G⁻`, `P_G±`, matching supports, and the
//! directed graphs `Γ_G` and `Λ_G`.
//!
//! Membership uses the Hall-type inequalities `Σ_{i∈I} a_i ≤ |N_I(G)|`
//! (minus one for `P_G⁻`) with a precomputed table of `|N_I(G)|` for
//! `m ≤ 20`; larger left sides fall back to the direct image of
//! `Σ_j e_{f(j)}` over choices `f(j) ∈ N_j`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::graph::{bits, BipartiteGraph, Supports};

/// A lattice point; coordinates are indexed by left vertices.
pub type Point = Vec<u32>;

/// Which polytope a point set was drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    #[serde(rename = "pg")]
    PG,
    #[serde(rename = "pgminus")]
    PGMinus,
    #[serde(rename = "pgpm")]
    PGPm,
    Other,
}

/// Sorted lattice points tagged with their ambient polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    ambient: Ambient,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(ambient: Ambient, mut points: Vec<Point>) -> Self {
        points.sort();
        points.dedup();
        PointSet { ambient, points }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: &[u32]) -> Option<usize> {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).ok()
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.index_of(p).is_some()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn get(&self, index: usize) -> &Point {
        &self.points[index]
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// `p + e_i`.
pub fn plus(p: &[u32], i: usize) -> Point {
    let mut q = p.to_vec();
    q[i] += 1;
    q
}

/// `p - e_i`, or `None` when `p_i = 0`.
pub fn minus(p: &[u32], i: usize) -> Option<Point> {
    let mut q = p.to_vec();
    q[i] = q[i].checked_sub(1)?;
    Some(q)
}

/// `p + e_i - e_j`, or `None` when `p_j = 0`.
pub fn shift(p: &[u32], i: usize, j: usize) -> Option<Point> {
    let mut q = minus(p, j)?;
    q[i] += 1;
    Some(q)
}

/// All nonnegative integer vectors of length `dim` with coordinate sum
/// `sum`, in lexicographic order.
pub fn simplex_points(dim: usize, sum: u32) -> Vec<Point> {
    fn rec(dim: usize, left: u32, cur: &mut Point, out: &mut Vec<Point>) {
        if cur.len() + 1 == dim {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(dim, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if dim > 0 {
        rec(dim, sum, &mut Vec::with_capacity(dim), &mut out);
    }
    out
}

const HALL_MAX_M: usize = 20;

/// Membership oracle for `P_G` and `P_G⁻`.
#[derive(Clone, Debug)]
pub struct Membership {
    m: usize,
    n: usize,
    kind: MembershipKind,
}

#[derive(Clone, Debug)]
enum MembershipKind {
    /// `|N_I(G)|` for every subset mask `I`.
    Hall(Vec<u8>),
    /// Lattice points of `P_G`.
    Image(HashSet<Point>),
}

impl Membership {
    pub fn new(g: &BipartiteGraph) -> Self {
        let kind = if g.m() <= HALL_MAX_M {
            MembershipKind::Hall(neighborhood_sizes(g))
        } else {
            MembershipKind::Image(image_points(g).into_iter().collect())
        };
        Membership {
            m: g.m(),
            n: g.n(),
            kind,
        }
    }

    fn hall_ok(table: &[u8], p: &[u32], slack: u32) -> bool {
        (1..table.len()).all(|mask| {
            let s: u32 = bits(mask as u32).map(|i| p[i]).sum();
            s + slack <= table[mask] as u32
        })
    }

    pub fn in_pg(&self, a: &[u32]) -> bool {
        if a.len() != self.m || a.iter().sum::<u32>() != self.n as u32 {
            return false;
        }
        match &self.kind {
            MembershipKind::Hall(t) => Self::hall_ok(t, a, 0),
            MembershipKind::Image(s) => s.contains(a),
        }
    }

    /// Hall-type test `Σ_{i∈I} b_i ≤ |N_I| − 1`.
    pub fn in_pg_minus(&self, b: &[u32]) -> bool {
        if b.len() != self.m || b.iter().sum::<u32>() + 1 != self.n as u32 {
            return false;
        }
        match &self.kind {
            MembershipKind::Hall(t) => Self::hall_ok(t, b, 1),
            MembershipKind::Image(_) => self.in_pg_minus_by_difference(b),
        }
    }

    /// Minkowski-difference test `b + e_i ∈ P_G` for all `i`.
    pub fn in_pg_minus_by_difference(&self, b: &[u32]) -> bool {
        b.len() == self.m && (0..self.m).all(|i| self.in_pg(&plus(b, i)))
    }
}

fn neighborhood_sizes(g: &BipartiteGraph) -> Vec<u8> {
    let m = g.m();
    let mut table = vec![0u32; 1 << m];
    for mask in 1..table.len() {
        let low = mask.trailing_zeros() as usize;
        table[mask] = table[mask & (mask - 1)] | g.row(low);
    }
    table.into_iter().map(|x| x.count_ones() as u8).collect()
}

/// Lattice points of `P_G` by direct expansion of the Minkowski sum.
pub fn image_points(g: &BipartiteGraph) -> Vec<Point> {
    let mut layer: HashSet<Point> = HashSet::from([vec![0; g.m()]]);
    for j in 0..g.n() {
        let mut next = HashSet::with_capacity(layer.len() * 2);
        for p in &layer {
            for i in bits(g.col(j)) {
                next.insert(plus(p, i));
            }
        }
        layer = next;
    }
    let mut out: Vec<Point> = layer.into_iter().collect();
    out.sort();
    out
}

fn small_enough_to_cross_check(g: &BipartiteGraph) -> bool {
    cfg!(debug_assertions) && g.m() <= 6 && g.n() <= 8
}

/// Lattice points of `P_G`.
pub fn points_pg(g: &BipartiteGraph) -> PointSet {
    let pts = if g.m() <= HALL_MAX_M {
        let mem = Membership::new(g);
        simplex_points(g.m(), g.n() as u32)
            .into_iter()
            .filter(|a| mem.in_pg(a))
            .collect()
    } else {
        image_points(g)
    };
    if small_enough_to_cross_check(g) {
        debug_assert_eq!(pts, image_points(g));
    }
    PointSet::new(Ambient::PG, pts)
}

/// Lattice points of `P_G⁻`.
pub fn points_pg_minus(g: &BipartiteGraph) -> PointSet {
    let mem = Membership::new(g);
    let pts: Vec<Point> = simplex_points(g.m(), g.n() as u32 - 1)
        .into_iter()
        .filter(|b| mem.in_pg_minus(b))
        .collect();
    if small_enough_to_cross_check(g) {
        for b in simplex_points(g.m(), g.n() as u32 - 1) {
            debug_assert_eq!(mem.in_pg_minus(&b), mem.in_pg_minus_by_difference(&b));
        }
    }
    PointSet::new(Ambient::PGMinus, pts)
}

/// Lattice points of `P_G±`, i.e. `a − e_i` for `a ∈ P_G`, `a_i > 0`.
pub fn points_pg_pm(g: &BipartiteGraph) -> PointSet {
    let pts = points_pg(g)
        .iter()
        .flat_map(|a| (0..g.m()).filter_map(move |i| minus(a, i)))
        .collect();
    PointSet::new(Ambient::PGPm, pts)
}

/// Supports `(I(M), J(M))` of all partial matchings `M ⊆ G`, sorted.
pub fn ij_supports(g: &BipartiteGraph) -> Vec<Supports> {
    let mut states: HashSet<(u32, u32)> = HashSet::from([(0, 0)]);
    for j in 0..g.n() {
        let mut next = states.clone();
        for &(left, right) in &states {
            for i in bits(g.col(j) & !left) {
                next.insert((left | 1 << i, right | 1 << j));
            }
        }
        states = next;
    }
    let mut out: Vec<Supports> = states
        .into_iter()
        .map(|(left, right)| Supports { left, right })
        .collect();
    out.sort();
    out
}

/// An edge `a − e_i → a` of `Γ_G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaEdge {
    pub from: Point,
    pub dir: usize,
    pub to: Point,
}

/// An edge `b → b + e_i − e_j` of `Λ_G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaEdge {
    pub from: Point,
    pub i: usize,
    pub j: usize,
    pub to: Point,
}

/// Edges of `Γ_G` sorted by `(from, dir)`.
pub fn gamma_edges(g: &BipartiteGraph) -> Vec<GammaEdge> {
    let mut out: Vec<GammaEdge> = points_pg(g)
        .iter()
        .flat_map(|a| {
            (0..g.m()).filter_map(move |i| {
                minus(a, i).map(|from| GammaEdge {
                    from,
                    dir: i,
                    to: a.clone(),
                })
            })
        })
        .collect();
    out.sort();
    out
}

/// Edges of `Λ_G` sorted by `(from, i, j)`.
pub fn lambda_edges(g: &BipartiteGraph) -> Vec<LambdaEdge> {
    let pm = points_pg_minus(g);
    let mut out = Vec::new();
    for b in &pm {
        for i in 0..g.m() {
            for j in 0..g.m() {
                if i == j {
                    continue;
                }
                if let Some(to) = shift(b, i, j) {
                    if pm.contains(&to) {
                        out.push(LambdaEdge {
                            from: b.clone(),
                            i,
                            j,
                            to,
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn path() -> BipartiteGraph {
        BipartiteGraph::new(2, 1, &[vec![0, 1]]).unwrap()
    }

    #[test]
    fn simplex_points_are_lex_sorted() {
        let pts = simplex_points(3, 2);
        assert_eq!(pts.len(), 6);
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
        assert_eq!(simplex_points(1, 4), vec![vec![4]]);
    }

    #[test]
    fn pg_counts() {
        let k34 = BipartiteGraph::complete(3, 4).unwrap();
        assert_eq!(points_pg(&k34).len(), 15);
        assert_eq!(points_pg(&sixth_graph()).len(), 16);
        assert_eq!(points_pg(&path()).points(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn pg_minus_counts() {
        let k34 = BipartiteGraph::complete(3, 4).unwrap();
        assert_eq!(points_pg_minus(&k34).len(), 10);
        assert_eq!(points_pg_minus(&sixth_graph()).len(), 10);
        let k22 = BipartiteGraph::complete(2, 2).unwrap();
        assert_eq!(points_pg_minus(&k22).points(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn pg_pm_examples() {
        let k34 = BipartiteGraph::complete(3, 4).unwrap();
        assert_eq!(points_pg_pm(&k34).points(), points_pg_minus(&k34).points());
        let g = sixth_graph();
        let pm = points_pg_pm(&g);
        assert!(points_pg_minus(&g).iter().all(|b| pm.contains(b)));
        assert_eq!(points_pg_pm(&path()).points(), &[vec![0, 0]]);
    }

    #[test]
    fn ij_support_counts() {
        let k22 = BipartiteGraph::complete(2, 2).unwrap();
        assert_eq!(ij_supports(&k22).len(), 6);
        let k33 = BipartiteGraph::complete(3, 3).unwrap();
        assert_eq!(ij_supports(&k33).len(), 20);
        assert!(ij_supports(&sixth_graph()).contains(&Supports { left: 0, right: 0 }));
    }

    #[test]
    fn gamma_and_lambda() {
        let k22 = BipartiteGraph::complete(2, 2).unwrap();
        let gamma = gamma_edges(&k22);
        assert_eq!(gamma.len(), 4);
        assert_eq!(
            gamma[0],
            GammaEdge {
                from: vec![0, 1],
                dir: 0,
                to: vec![1, 1]
            }
        );
        assert_eq!(lambda_edges(&k22).len(), 2);
        let k34 = BipartiteGraph::complete(3, 4).unwrap();
        assert_eq!(gamma_edges(&k34).len(), 30);
        assert_eq!(lambda_edges(&k34).len(), 36);
    }

    #[test]
    fn membership_via_image_for_wide_left_side() {
        let g = BipartiteGraph::complete(21, 1).unwrap();
        let mem = Membership::new(&g);
        let mut a = vec![0; 21];
        a[20] = 1;
        assert!(mem.in_pg(&a));
        assert!(mem.in_pg_minus(&[0; 21]));
        assert_eq!(points_pg(&g).len(), 21);
    }
}
