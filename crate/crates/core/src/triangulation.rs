//! Triangulations of `Q_G` as families of pairwise compatible spanning
//! trees indexed by the lattice points of `P_G⁻`.

use std::collections::BTreeSet;
use std::str::FromStr;

use crate::compat;
use crate::error::TriangulationError;
use crate::graph::{bits, enumerate_spanning_trees, BipartiteGraph, Edge, Subgraph, Vertex};
use crate::lattice::{points_pg, points_pg_minus, Point, PointSet};

/// A validated triangulation: `trees[k]` is the tree with `LD⁻ = points[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    graph: BipartiteGraph,
    points: PointSet,
    trees: Vec<Subgraph>,
}

impl Triangulation {
    /// Assembles a triangulation whose trees are already known to be
    /// aligned with `points` and pairwise compatible.
    pub(crate) fn from_parts(
        graph: BipartiteGraph,
        points: PointSet,
        trees: Vec<Subgraph>,
    ) -> Self {
        debug_assert_eq!(points.len(), trees.len());
        Triangulation {
            graph,
            points,
            trees,
        }
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    /// Lattice points of `P_G⁻`, sorted.
    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// Trees aligned with [`Triangulation::points`].
    pub fn trees(&self) -> &[Subgraph] {
        &self.trees
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// `T_τ(b)`.
    pub fn tree_at(&self, b: &[u32]) -> Option<&Subgraph> {
        self.points.index_of(b).map(|k| &self.trees[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &Subgraph)> {
        self.points.iter().zip(&self.trees)
    }
}

/// Checks that `trees` form a triangulation of `Q_G` and indexes them.
pub fn validate(
    g: &BipartiteGraph,
    trees: Vec<Subgraph>,
) -> Result<Triangulation, TriangulationError> {
    let full = g.as_subgraph();
    let mut keyed: Vec<(Point, Subgraph)> = Vec::with_capacity(trees.len());
    for (index, t) in trees.into_iter().enumerate() {
        let fits = t.m() == g.m() && t.n() == g.n() && t.is_subset(&full);
        if !fits || !t.is_spanning_tree() {
            return Err(TriangulationError::NotSpanningTree { index });
        }
        let b = t
            .ld_minus()
            .expect("spanning trees cover every left vertex");
        keyed.push((b, t));
    }
    keyed.sort();
    for w in keyed.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(TriangulationError::DuplicateDegreeVector {
                point: w[0].0.clone(),
            });
        }
    }
    let expected = points_pg_minus(g);
    let got: BTreeSet<&Point> = keyed.iter().map(|(b, _)| b).collect();
    let want: BTreeSet<&Point> = expected.iter().collect();
    if got != want {
        return Err(TriangulationError::CoverageMismatch {
            missing: want.difference(&got).map(|p| (*p).clone()).collect(),
            extra: got.difference(&want).map(|p| (*p).clone()).collect(),
        });
    }
    for x in 0..keyed.len() {
        for y in x + 1..keyed.len() {
            if let Some(cycle) = compat::long_cycle(&keyed[x].1, &keyed[y].1) {
                return Err(TriangulationError::IncompatiblePair {
                    first: keyed[x].0.clone(),
                    second: keyed[y].0.clone(),
                    cycle,
                });
            }
        }
    }
    let trees = keyed.into_iter().map(|(_, t)| t).collect();
    Ok(Triangulation::from_parts(g.clone(), expected, trees))
}

/// All subforests of the trees of `τ`, i.e. the forests `ℱ(τ)`.
pub fn forests(tau: &Triangulation) -> BTreeSet<Subgraph> {
    let mut out = BTreeSet::new();
    for t in tau.trees() {
        let edges = t.edges();
        for mask in 0u64..1 << edges.len() {
            let mut f = Subgraph::empty(t.m(), t.n());
            for (k, &e) in edges.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    f.insert(e);
                }
            }
            out.insert(f);
        }
    }
    out
}

/// Right semi-matchings of `τ`.
pub fn rsm_set(tau: &Triangulation) -> BTreeSet<Subgraph> {
    let mut out = BTreeSet::new();
    for t in tau.trees() {
        // One edge per right vertex.
        let choices: Vec<Vec<Edge>> = (0..t.n())
            .map(|j| bits(t.col(j)).map(|i| Edge::new(i, j)).collect())
            .collect();
        product(&choices, t.m(), t.n(), &mut out);
    }
    out
}

/// Left semi-matchings of `τ`.
pub fn lsm_set(tau: &Triangulation) -> BTreeSet<Subgraph> {
    let mut out = BTreeSet::new();
    for t in tau.trees() {
        let choices: Vec<Vec<Edge>> = (0..t.m())
            .map(|i| bits(t.row(i)).map(|j| Edge::new(i, j)).collect())
            .collect();
        product(&choices, t.m(), t.n(), &mut out);
    }
    out
}

fn product(choices: &[Vec<Edge>], m: usize, n: usize, out: &mut BTreeSet<Subgraph>) {
    fn rec(choices: &[Vec<Edge>], k: usize, cur: &mut Subgraph, out: &mut BTreeSet<Subgraph>) {
        if k == choices.len() {
            out.insert(cur.clone());
            return;
        }
        for &e in &choices[k] {
            cur.insert(e);
            rec(choices, k + 1, cur, out);
            cur.remove(e);
        }
    }
    rec(choices, 0, &mut Subgraph::empty(m, n), out);
}

/// Partial matchings of `τ`.
pub fn pm_set(tau: &Triangulation) -> BTreeSet<Subgraph> {
    tau.trees()
        .iter()
        .flat_map(compat::partial_matchings)
        .collect()
}

/// `F_τ(a)`: the right semi-matching of `τ` with left degree vector `a`.
pub fn rsm_at(tau: &Triangulation, a: &[u32]) -> Result<Subgraph, TriangulationError> {
    if !points_pg(tau.graph()).contains(a) {
        return Err(TriangulationError::PointOutsidePolytope(a.to_vec()));
    }
    rsm_by_point(tau)
        .into_iter()
        .find(|f| f.ld() == a)
        .ok_or_else(|| TriangulationError::PointOutsidePolytope(a.to_vec()))
}

/// `F_τ(a)` for every `a ∈ P_G ∩ ℤ^m`, aligned with `points_pg(G)`.
pub fn rsm_by_point(tau: &Triangulation) -> Vec<Subgraph> {
    let pg = points_pg(tau.graph());
    let mut slots: Vec<Option<Subgraph>> = vec![None; pg.len()];
    for f in rsm_set(tau) {
        let k = pg
            .index_of(&f.ld())
            .expect("left degrees of a semi-matching lie in P_G");
        debug_assert!(
            slots[k].is_none(),
            "two semi-matchings share a left degree vector"
        );
        slots[k] = Some(f);
    }
    slots
        .into_iter()
        .map(|s| s.expect("every lattice point of P_G has a semi-matching"))
        .collect()
}

/// The map `φ_τ : b ↦ RD⁻(T_τ(b))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhiMap {
    pub entries: Vec<(Point, Point)>,
}

pub fn phi(tau: &Triangulation) -> PhiMap {
    let entries: Vec<(Point, Point)> = tau
        .iter()
        .map(|(b, t)| (b.clone(), t.rd_minus().expect("spanning tree")))
        .collect();
    let image: BTreeSet<&Point> = entries.iter().map(|(_, y)| y).collect();
    let target = points_pg_minus(&tau.graph().dual());
    assert!(
        image.len() == entries.len() && image.into_iter().eq(target.iter()),
        "φ_τ is not a bijection onto the lattice points of the dual polytope"
    );
    PhiMap { entries }
}

/// Which kind of collection is handed to [`reconstruct`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CollectionKind {
    Trees,
    Rsm,
    Lsm,
    Pm,
}

impl FromStr for CollectionKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "trees" => Ok(CollectionKind::Trees),
            "rsm" => Ok(CollectionKind::Rsm),
            "lsm" => Ok(CollectionKind::Lsm),
            "pm" => Ok(CollectionKind::Pm),
            other => Err(format!("unknown collection kind {other:?}")),
        }
    }
}

/// The collection of the given kind derived from `τ`.
pub fn collection(tau: &Triangulation, kind: CollectionKind) -> BTreeSet<Subgraph> {
    match kind {
        CollectionKind::Trees => tau.trees().iter().cloned().collect(),
        CollectionKind::Rsm => rsm_set(tau),
        CollectionKind::Lsm => lsm_set(tau),
        CollectionKind::Pm => pm_set(tau),
    }
}

/// Rebuilds `τ` from one of its collections: the trees of `τ` are the
/// spanning trees compatible with every member.
pub fn reconstruct(
    g: &BipartiteGraph,
    members: &[Subgraph],
    kind: CollectionKind,
) -> Result<Triangulation, TriangulationError> {
    let full = g.as_subgraph();
    for (index, f) in members.iter().enumerate() {
        let c = f.classify();
        let kind_ok = match kind {
            CollectionKind::Trees => c.is_spanning_tree,
            CollectionKind::Rsm => c.is_rsm,
            CollectionKind::Lsm => c.is_lsm,
            CollectionKind::Pm => c.is_pm,
        };
        let shape_ok = f.m() == g.m() && f.n() == g.n() && f.is_subset(&full);
        if !kind_ok || !shape_ok {
            return Err(TriangulationError::CollectionKindMismatch { index });
        }
    }
    let candidates: Vec<Subgraph> = enumerate_spanning_trees(g)
        .into_iter()
        .filter(|t| members.iter().all(|f| compat::long_cycle(t, f).is_none()))
        .collect();
    let fail = |e| TriangulationError::ReconstructionFailed(Box::new(e));
    let tau = validate(g, candidates).map_err(fail)?;
    let input: BTreeSet<Subgraph> = members.iter().cloned().collect();
    if collection(&tau, kind) != input {
        return Err(fail(TriangulationError::CollectionMismatch));
    }
    Ok(tau)
}

/// Whether removing `edge` from the spanning tree `t` leaves a forest that
/// some other edge of `G` reconnects across the cut.
pub fn is_replaceable(
    g: &BipartiteGraph,
    t: &Subgraph,
    edge: Edge,
) -> Result<bool, TriangulationError> {
    if !t.contains(edge) {
        return Err(TriangulationError::EdgeNotInTree(edge));
    }
    let mut f = t.clone();
    f.remove(edge);
    let comps = f.components();
    let find = |v: Vertex| {
        comps
            .iter()
            .position(|c| c.contains(&v))
            .expect("vertex in some component")
    };
    let side_of_u = &comps[find(Vertex::Right(edge.right))];
    let side_of_v = &comps[find(Vertex::Left(edge.left))];
    let lefts: u32 = side_of_u
        .iter()
        .filter_map(|v| match v {
            Vertex::Left(i) => Some(1u32 << i),
            Vertex::Right(_) => None,
        })
        .fold(0, |a, b| a | b);
    let rights: u32 = side_of_v
        .iter()
        .filter_map(|v| match v {
            Vertex::Right(j) => Some(1u32 << j),
            Vertex::Left(_) => None,
        })
        .fold(0, |a, b| a | b);
    Ok(bits(lefts).any(|i| g.row(i) & rights != 0))
}

/// The point `b'` whose tree differs from `T_τ(b)` by removing exactly
/// `edge`.
pub fn flip(tau: &Triangulation, b: &[u32], edge: Edge) -> Result<Point, TriangulationError> {
    let t = tau
        .tree_at(b)
        .ok_or_else(|| TriangulationError::PointOutsidePolytope(b.to_vec()))?;
    if !is_replaceable(tau.graph(), t, edge)? {
        return Err(TriangulationError::NotReplaceable(edge));
    }
    let mut target = Subgraph::empty(t.m(), t.n());
    target.insert(edge);
    tau.iter()
        .find(|(p, t2)| p.as_slice() != b && t.difference(t2) == target)
        .map(|(p, _)| p.clone())
        .ok_or(TriangulationError::NotFound {
            point: b.to_vec(),
            edge,
        })
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

    fn k22_tau() -> Triangulation {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let a = sub(&g, &[(1, 1), (1, 2), (2, 2)]);
        let b = sub(&g, &[(1, 1), (2, 1), (2, 2)]);
        validate(&g, vec![b, a]).unwrap()
    }

    #[test]
    fn k22_triangulation_basics() {
        let tau = k22_tau();
        assert_eq!(tau.points().points(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(rsm_set(&tau).len(), 3);
        assert!(pm_set(&tau).contains(&Subgraph::empty(2, 2)));
        let g = tau.graph().clone();
        assert_eq!(rsm_at(&tau, &[2, 0]).unwrap(), sub(&g, &[(1, 1), (1, 2)]));
        assert!(matches!(
            rsm_at(&tau, &[3, 0]),
            Err(TriangulationError::PointOutsidePolytope(_))
        ));
    }

    #[test]
    fn validate_rejections() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let a = sub(&g, &[(1, 1), (1, 2), (2, 2)]);
        let a2 = sub(&g, &[(1, 1), (1, 2), (2, 1)]);
        let b = sub(&g, &[(1, 1), (2, 1), (2, 2)]);
        let path = sub(&g, &[(1, 1), (2, 2)]);
        assert_eq!(
            validate(&g, vec![a.clone(), path]),
            Err(TriangulationError::NotSpanningTree { index: 1 })
        );
        assert!(matches!(
            validate(&g, vec![a.clone(), a2.clone()]),
            Err(TriangulationError::DuplicateDegreeVector { .. })
        ));
        assert!(matches!(
            validate(&g, vec![a.clone()]),
            Err(TriangulationError::CoverageMismatch { .. })
        ));
        assert!(matches!(
            validate(&g, vec![a2, b]),
            Err(TriangulationError::IncompatiblePair { .. })
        ));
    }

    #[test]
    fn single_point_triangulation() {
        let g = BipartiteGraph::new(2, 1, &[vec![0, 1]]).unwrap();
        let t = g.as_subgraph();
        let tau = validate(&g, vec![t]).unwrap();
        assert_eq!(phi(&tau).entries, vec![(vec![0, 0], vec![1])]);
    }

    #[test]
    fn replaceable_examples() {
        let g = BipartiteGraph::complete(2, 2).unwrap();
        let t = sub(&g, &[(1, 1), (1, 2), (2, 2)]);
        assert_eq!(is_replaceable(&g, &t, Edge::new(0, 1)), Ok(true));
        assert_eq!(is_replaceable(&g, &t, Edge::new(0, 0)), Ok(false));
        assert_eq!(
            is_replaceable(&g, &t, Edge::new(1, 0)),
            Err(TriangulationError::EdgeNotInTree(Edge::new(1, 0)))
        );
        let path = BipartiteGraph::new(3, 2, &[vec![0, 1], vec![1, 2]]).unwrap();
        let whole = path.as_subgraph();
        for e in whole.edges() {
            assert_eq!(is_replaceable(&path, &whole, e), Ok(false));
        }
    }

    #[test]
    fn flips_in_k22() {
        let tau = k22_tau();
        assert_eq!(flip(&tau, &[1, 0], Edge::new(0, 1)), Ok(vec![0, 1]));
        assert_eq!(flip(&tau, &[0, 1], Edge::new(1, 0)), Ok(vec![1, 0]));
        assert_eq!(
            flip(&tau, &[1, 0], Edge::new(0, 0)),
            Err(TriangulationError::NotReplaceable(Edge::new(0, 0)))
        );
    }

    #[test]
    fn reconstruct_round_trips_in_k22() {
        let tau = k22_tau();
        for kind in [
            CollectionKind::Trees,
            CollectionKind::Rsm,
            CollectionKind::Lsm,
            CollectionKind::Pm,
        ] {
            let members: Vec<Subgraph> = collection(&tau, kind).into_iter().collect();
            assert_eq!(reconstruct(tau.graph(), &members, kind).unwrap(), tau);
        }
        let g = tau.graph().clone();
        let err = reconstruct(
            &g,
            &[sub(&g, &[(1, 1), (1, 2), (2, 2)])],
            CollectionKind::Trees,
        );
        assert!(matches!(
            err,
            Err(TriangulationError::ReconstructionFailed(_))
        ));
    }
}
