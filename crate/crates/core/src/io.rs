//! JSON formats. All indices in files are 1-based; in-memory values are
//! 0-based. Writers emit compact JSON with a fixed field order and sorted
//! contents, so equal values serialize to identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::FormatError;
use crate::graph::{BipartiteGraph, Edge, Subgraph};
use crate::lattice::Point;
use crate::triangulation::Triangulation;
use crate::trianguloid::{AxiomReport, ColorEntry, EdgeColoring, Trianguloid};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub m: usize,
    pub n: usize,
    pub neighborhoods: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphJson {
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ld_minus: Option<Point>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub graph: GraphJson,
    pub trees: Vec<TreeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub from: Point,
    pub dir: usize,
    pub set: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrianguloidJson {
    pub graph: GraphJson,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorJson {
    pub from: Point,
    pub i: usize,
    pub j: usize,
    pub color: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub graph: GraphJson,
    pub colors: Vec<ColorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestsJson {
    pub forests: Vec<SubgraphJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationJson {
    pub axiom: String,
    pub point: Point,
    pub dirs: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReportJson {
    pub t1: bool,
    pub t2: bool,
    pub t3: bool,
    pub t4: bool,
    pub partition: bool,
    pub is_pre_trianguloid: bool,
    pub is_trianguloid: bool,
    pub violations: Vec<ViolationJson>,
}

fn invalid(msg: impl Into<String>) -> FormatError {
    FormatError::Invalid(msg.into())
}

fn one_based(x: usize, bound: usize, what: &str) -> Result<usize, FormatError> {
    if x == 0 || x > bound {
        Err(invalid(format!("{what} {x} out of range 1..={bound}")))
    } else {
        Ok(x - 1)
    }
}

fn mask_to_list(mask: u32) -> Vec<usize> {
    crate::graph::bits(mask).map(|j| j + 1).collect()
}

/// Compact JSON followed by a newline.
pub fn to_canonical_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn graph_to_json(g: &BipartiteGraph) -> GraphJson {
    GraphJson {
        m: g.m(),
        n: g.n(),
        neighborhoods: g
            .right_neighborhoods()
            .into_iter()
            .map(|nb| nb.into_iter().map(|i| i + 1).collect())
            .collect(),
    }
}

pub fn graph_from_json(j: &GraphJson) -> Result<BipartiteGraph, FormatError> {
    let mut zero = Vec::with_capacity(j.neighborhoods.len());
    for nb in &j.neighborhoods {
        let mut list = Vec::with_capacity(nb.len());
        for &i in nb {
            if i == 0 {
                return Err(invalid(
                    "left vertex 0 in a neighborhood; indices are 1-based",
                ));
            }
            list.push(i - 1);
        }
        zero.push(list);
    }
    Ok(BipartiteGraph::new(j.m, j.n, &zero)?)
}

pub fn read_graph(text: &str) -> Result<BipartiteGraph, FormatError> {
    graph_from_json(&serde_json::from_str(text)?)
}

pub fn write_graph(g: &BipartiteGraph) -> String {
    to_canonical_string(&graph_to_json(g))
}

fn edges_to_json(edges: &[Edge]) -> Vec<[usize; 2]> {
    edges.iter().map(|e| [e.left + 1, e.right + 1]).collect()
}

fn edges_from_json(g: &BipartiteGraph, pairs: &[[usize; 2]]) -> Result<Subgraph, FormatError> {
    let mut edges = Vec::with_capacity(pairs.len());
    for &[i, j] in pairs {
        edges.push(Edge::new(
            one_based(i, g.m(), "left vertex")?,
            one_based(j, g.n(), "right vertex")?,
        ));
    }
    Ok(Subgraph::new(g, &edges)?)
}

pub fn subgraph_to_json(s: &Subgraph) -> SubgraphJson {
    SubgraphJson {
        edges: edges_to_json(&s.edges()),
    }
}

pub fn read_subgraph(g: &BipartiteGraph, text: &str) -> Result<Subgraph, FormatError> {
    let j: SubgraphJson = serde_json::from_str(text)?;
    edges_from_json(g, &j.edges)
}

pub fn write_subgraph(s: &Subgraph) -> String {
    to_canonical_string(&subgraph_to_json(s))
}

pub fn read_forests(g: &BipartiteGraph, text: &str) -> Result<Vec<Subgraph>, FormatError> {
    let j: ForestsJson = serde_json::from_str(text)?;
    j.forests
        .iter()
        .map(|f| edges_from_json(g, &f.edges))
        .collect()
}

pub fn write_forests<'a>(forests: impl IntoIterator<Item = &'a Subgraph>) -> String {
    to_canonical_string(&ForestsJson {
        forests: forests.into_iter().map(subgraph_to_json).collect(),
    })
}

/// Reads a triangulation file into its graph and tree list without
/// validating the family. A listed `ld_minus` must match the tree.
pub fn read_triangulation(text: &str) -> Result<(BipartiteGraph, Vec<Subgraph>), FormatError> {
    let j: TriangulationJson = serde_json::from_str(text)?;
    let g = graph_from_json(&j.graph)?;
    let mut trees = Vec::with_capacity(j.trees.len());
    for (k, t) in j.trees.iter().enumerate() {
        let tree = edges_from_json(&g, &t.edges)?;
        if let Some(listed) = &t.ld_minus {
            if tree.ld_minus().as_ref() != Some(listed) {
                return Err(invalid(format!(
                    "tree #{} does not have ld_minus {listed:?}",
                    k + 1
                )));
            }
        }
        trees.push(tree);
    }
    Ok((g, trees))
}

pub fn triangulation_to_json(tau: &Triangulation) -> TriangulationJson {
    TriangulationJson {
        graph: graph_to_json(tau.graph()),
        trees: tau
            .iter()
            .map(|(b, t)| TreeJson {
                ld_minus: Some(b.clone()),
                edges: edges_to_json(&t.edges()),
            })
            .collect(),
    }
}

pub fn write_triangulation(tau: &Triangulation) -> String {
    to_canonical_string(&triangulation_to_json(tau))
}

pub fn trianguloid_to_json(t: &Trianguloid) -> TrianguloidJson {
    TrianguloidJson {
        graph: graph_to_json(t.graph()),
        entries: t
            .entries()
            .into_iter()
            .map(|(from, dir, mask)| EntryJson {
                from,
                dir: dir + 1,
                set: mask_to_list(mask),
            })
            .collect(),
    }
}

pub fn trianguloid_from_json(j: &TrianguloidJson) -> Result<Trianguloid, FormatError> {
    let g = graph_from_json(&j.graph)?;
    let mut list = Vec::with_capacity(j.entries.len());
    for e in &j.entries {
        let dir = one_based(e.dir, g.m(), "direction")?;
        let mut mask = 0u32;
        for &x in &e.set {
            let x = one_based(x, g.n(), "label")?;
            if mask >> x & 1 == 1 {
                return Err(invalid(format!("label {} repeated in a set", x + 1)));
            }
            mask |= 1 << x;
        }
        list.push((e.from.clone(), dir, mask));
    }
    Ok(Trianguloid::from_entries(&g, &list)?)
}

pub fn read_trianguloid(text: &str) -> Result<Trianguloid, FormatError> {
    trianguloid_from_json(&serde_json::from_str(text)?)
}

pub fn write_trianguloid(t: &Trianguloid) -> String {
    to_canonical_string(&trianguloid_to_json(t))
}

pub fn coloring_to_json(c: &EdgeColoring) -> ColoringJson {
    ColoringJson {
        graph: graph_to_json(&c.graph),
        colors: c
            .colors
            .iter()
            .map(|e| ColorJson {
                from: e.from.clone(),
                i: e.i + 1,
                j: e.j + 1,
                color: e.color + 1,
            })
            .collect(),
    }
}

pub fn read_coloring(text: &str) -> Result<EdgeColoring, FormatError> {
    let j: ColoringJson = serde_json::from_str(text)?;
    let graph = graph_from_json(&j.graph)?;
    let mut colors = Vec::with_capacity(j.colors.len());
    for c in &j.colors {
        if c.from.len() != graph.m() {
            return Err(invalid(format!("point {:?} has the wrong length", c.from)));
        }
        colors.push(ColorEntry {
            from: c.from.clone(),
            i: one_based(c.i, graph.m(), "direction")?,
            j: one_based(c.j, graph.m(), "direction")?,
            color: one_based(c.color, graph.n(), "color")?,
        });
    }
    colors.sort();
    Ok(EdgeColoring { graph, colors })
}

pub fn write_coloring(c: &EdgeColoring) -> String {
    to_canonical_string(&coloring_to_json(c))
}

pub fn axiom_report_to_json(r: &AxiomReport) -> AxiomReportJson {
    AxiomReportJson {
        t1: r.t1,
        t2: r.t2,
        t3: r.t3,
        t4: r.t4,
        partition: r.partition,
        is_pre_trianguloid: r.is_pre,
        is_trianguloid: r.is_trianguloid,
        violations: r
            .violations
            .iter()
            .map(|v| ViolationJson {
                axiom: v.axiom.to_string(),
                point: v.point.clone(),
                dirs: v.dirs.iter().map(|d| d + 1).collect(),
                detail: v.detail.clone(),
            })
            .collect(),
    }
}

/// `1,0,2` style rendering of a lattice point.
pub fn point_to_string(p: &[u32]) -> String {
    p.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{enumerate_triangulations, SearchOptions};
    use crate::trianguloid::{encode_coloring, from_triangulation};

    #[test]
    fn graph_round_trip_and_errors() {
        let text = r#"{"m":3,"n":2,"neighborhoods":[[1,3],[2,3]]}"#;
        let g = read_graph(text).unwrap();
        assert_eq!(write_graph(&g), format!("{text}\n"));
        assert!(matches!(read_graph("{"), Err(FormatError::Json(_))));
        assert!(matches!(
            read_graph(r#"{"m":2,"n":1,"neighborhoods":[[0,1]]}"#),
            Err(FormatError::Invalid(_))
        ));
        assert!(matches!(
            read_graph(r#"{"m":2,"n":1,"neighborhoods":[[1]]}"#),
            Err(FormatError::Graph(_))
        ));
    }

    #[test]
    fn objects_round_trip() {
        let g = BipartiteGraph::complete(2, 3).unwrap();
        for tau in enumerate_triangulations(&g, &SearchOptions::default())
            .unwrap()
            .items
        {
            let text = write_triangulation(&tau);
            let (g2, trees) = read_triangulation(&text).unwrap();
            assert_eq!(g2, g);
            assert_eq!(trees, tau.trees());
            let t = from_triangulation(&tau);
            let text = write_trianguloid(&t);
            assert_eq!(read_trianguloid(&text).unwrap(), t);
            assert_eq!(write_trianguloid(&read_trianguloid(&text).unwrap()), text);
            let c = encode_coloring(&t).unwrap();
            assert_eq!(read_coloring(&write_coloring(&c)).unwrap(), c);
            let forests = write_forests(tau.trees());
            assert_eq!(read_forests(&g, &forests).unwrap(), tau.trees());
        }
    }

    #[test]
    fn mismatched_ld_minus_is_rejected() {
        let text = r#"{"graph":{"m":2,"n":2,"neighborhoods":[[1,2],[1,2]]},"trees":[{"ld_minus":[1,0],"edges":[[1,1],[2,1],[2,2]]}]}"#;
        assert!(matches!(
            read_triangulation(text),
            Err(FormatError::Invalid(_))
        ));
    }
}
