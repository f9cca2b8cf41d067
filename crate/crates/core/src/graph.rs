//! Immutable simple graphs and the distance-based invariants computed on them.
//!
//! Vertices are `0..order`. Every index is an exact `u64`; graphs are capped at
//! [`MAX_ORDER`] vertices, which keeps the Szeged index below `V^4 / 8 < 2^61`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 1 << 16;

/// Undirected simple graph on vertices `0..order`.
///
/// Neighbor lists are sorted and symmetric; `edges` holds each edge once as
/// `(u, v)` with `u < v`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Wire form: `{"order": n, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    order: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        SimpleGraph::from_edge_list(json.order, json.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<SimpleGraph> for GraphJson {
    fn from(g: SimpleGraph) -> Self {
        GraphJson {
            order: g.order(),
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::EmptyGraph);
    }
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

impl SimpleGraph {
    /// The complete graph `K_k`.
    pub fn complete(k: usize) -> Result<Self> {
        check_order(k)?;
        let adjacency = (0..k)
            .map(|v| (0..k).filter(|&u| u != v).collect())
            .collect();
        let edges = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .collect();
        Ok(SimpleGraph { adjacency, edges })
    }

    pub fn edgeless(order: usize) -> Result<Self> {
        Self::from_edge_list(order, std::iter::empty())
    }

    /// Builds a graph from unordered vertex pairs. Duplicates and reversed
    /// duplicates collapse to one edge.
    pub fn from_edge_list<I>(order: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(order)?;
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(SimpleGraph { adjacency, edges })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    /// Lowest-indexed vertex adjacent to every other vertex, if any.
    pub fn universal_vertex(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&v| self.degree(v) == n - 1)
    }

    /// Edge count of the complement.
    pub fn non_edge_count(&self) -> usize {
        let n = self.order();
        n * (n - 1) / 2 - self.size()
    }

    pub fn is_complete(&self) -> bool {
        self.non_edge_count() == 0
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    /// Unweighted shortest-path distances from `source`.
    pub fn bfs_distances(&self, source: usize) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d: u32| d + 1);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        Ok(DistanceRow { source, dist })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.order()
    }

    /// All-pairs distances. Fails on disconnected graphs.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.order();
        let mut data = vec![0u32; n * n];
        data.par_chunks_mut(n).enumerate().for_each_init(
            || (vec![false; n], VecDeque::with_capacity(n)),
            |(seen, queue), (source, row)| {
                seen.iter_mut().for_each(|s| *s = false);
                seen[source] = true;
                queue.push_back(source);
                while let Some(u) = queue.pop_front() {
                    let next = row[u] + 1;
                    for &w in &self.adjacency[u] {
                        if !seen[w] {
                            seen[w] = true;
                            row[w] = next;
                            queue.push_back(w);
                        }
                    }
                }
            },
        );
        Ok(DistanceMatrix { order: n, data })
    }

    /// Longest shortest path. Fails on disconnected graphs.
    pub fn diameter(&self) -> Result<u32> {
        let m = self.distance_matrix()?;
        Ok(m.data.iter().copied().max().unwrap_or(0))
    }

    /// Sum of `d(a, b)` over unordered vertex pairs.
    pub fn wiener_index(&self) -> Result<u64> {
        let m = self.distance_matrix()?;
        let total: u64 = m.data.par_iter().map(|&d| u64::from(d)).sum();
        Ok(total / 2)
    }

    /// `(n1, n2)` for edge `(a, b)`: vertices strictly closer to `a`, and
    /// strictly closer to `b`.
    pub fn edge_side_counts(&self, a: usize, b: usize) -> Result<(usize, usize)> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if !self.has_edge(a, b) {
            return Err(Error::NotAnEdge(a, b));
        }
        let m = self.distance_matrix()?;
        Ok(m.side_counts(a, b))
    }

    /// Szeged index by direct distance counting over every edge.
    pub fn szeged_index(&self) -> Result<u64> {
        let m = self.distance_matrix()?;
        Ok(self
            .edges
            .par_iter()
            .map(|&(a, b)| {
                let (n1, n2) = m.side_counts(a, b);
                (n1 * n2) as u64
            })
            .sum())
    }

    /// Subgraph induced on `keep`, re-indexed in ascending order of the kept
    /// vertices. The second value maps new indices to old ones.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(SimpleGraph, Vec<usize>)> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut old_of_new = keep.to_vec();
        old_of_new.sort_unstable();
        old_of_new.dedup();
        let mut new_of_old = vec![None; self.order()];
        for (new, &old) in old_of_new.iter().enumerate() {
            self.check_vertex(old)?;
            new_of_old[old] = Some(new);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((new_of_old[u]?, new_of_old[v]?)));
        let g = SimpleGraph::from_edge_list(old_of_new.len(), edges)?;
        Ok((g, old_of_new))
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimpleGraph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::LabelCount {
                expected: n,
                got: perm.len(),
            });
        }
        let mut hit = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::VertexOutOfRange {
                    vertex: p,
                    order: n,
                });
            }
        }
        SimpleGraph::from_edge_list(n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Graphviz `graph` document: one node line per vertex, then one `--`
    /// line per edge in canonical order.
    pub fn to_dot<S: AsRef<str>>(&self, labels: Option<&[S]>) -> Result<String> {
        if let Some(labels) = labels {
            if labels.len() != self.order() {
                return Err(Error::LabelCount {
                    expected: self.order(),
                    got: labels.len(),
                });
            }
        }
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            match labels {
                Some(labels) => {
                    let escaped = labels[v]
                        .as_ref()
                        .replace('\\', "\\\\")
                        .replace('"', "\\\"");
                    writeln!(out, "    {v} [label=\"{escaped}\"];").unwrap();
                }
                None => writeln!(out, "    {v};").unwrap(),
            }
        }
        for &(u, v) in &self.edges {
            writeln!(out, "    {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Distances from one source; `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<Option<u32>>,
}

/// All-pairs distances of a connected graph, row-major.
#[derive(Debug, Clone)]
pub struct DistanceMatrix {
    order: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.order + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.order..(u + 1) * self.order]
    }

    pub fn side_counts(&self, a: usize, b: usize) -> (usize, usize) {
        // The matrix is symmetric, so row a holds d(x, a) for every x.
        self.row(a)
            .iter()
            .zip(self.row(b))
            .fold((0, 0), |(n1, n2), (da, db)| {
                (n1 + usize::from(da < db), n2 + usize::from(db < da))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SimpleGraph {
        SimpleGraph::from_edge_list(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> SimpleGraph {
        SimpleGraph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    #[test]
    fn complete_graph_sizes() {
        for (k, m) in [(1, 0), (3, 3), (4, 6)] {
            let g = SimpleGraph::complete(k).unwrap();
            assert_eq!((g.order(), g.size()), (k, m));
        }
        assert!(matches!(SimpleGraph::complete(0), Err(Error::EmptyGraph)));
    }

    #[test]
    fn edge_list_construction() {
        let p = SimpleGraph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(SimpleGraph::from_edge_list(2, []).unwrap().size(), 0);
        let dup = SimpleGraph::from_edge_list(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(dup.edges(), &[(0, 1)]);
        assert_eq!(dup.neighbors(0), &[1]);
        assert_eq!(dup.neighbors(1), &[0]);
        assert!(matches!(
            SimpleGraph::from_edge_list(3, [(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
        assert!(matches!(
            SimpleGraph::from_edge_list(3, [(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(matches!(
            SimpleGraph::from_edge_list(MAX_ORDER + 1, []),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn bfs_examples() {
        let d = path(3).bfs_distances(0).unwrap().dist;
        assert_eq!(d, vec![Some(0), Some(1), Some(2)]);
        let d = SimpleGraph::complete(4)
            .unwrap()
            .bfs_distances(2)
            .unwrap()
            .dist;
        assert_eq!(d, vec![Some(1), Some(1), Some(0), Some(1)]);
        let d = SimpleGraph::edgeless(2)
            .unwrap()
            .bfs_distances(0)
            .unwrap()
            .dist;
        assert_eq!(d, vec![Some(0), None]);
        assert!(path(3).bfs_distances(3).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(SimpleGraph::complete(3).unwrap().is_connected());
        assert!(!SimpleGraph::edgeless(2).unwrap().is_connected());
        assert!(path(5).is_connected());
        assert!(SimpleGraph::complete(1).unwrap().is_connected());
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(SimpleGraph::complete(4).unwrap().wiener_index().unwrap(), 6);
        assert_eq!(path(3).wiener_index().unwrap(), 4);
        assert_eq!(cycle(4).wiener_index().unwrap(), 8);
        assert_eq!(SimpleGraph::complete(1).unwrap().wiener_index().unwrap(), 0);
        assert!(matches!(
            SimpleGraph::edgeless(2).unwrap().wiener_index(),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn side_count_examples() {
        let k5 = SimpleGraph::complete(5).unwrap();
        for &(a, b) in k5.edges() {
            assert_eq!(k5.edge_side_counts(a, b).unwrap(), (1, 1));
        }
        assert_eq!(path(3).edge_side_counts(0, 1).unwrap(), (1, 2));
        let c4 = cycle(4);
        for &(a, b) in c4.edges() {
            assert_eq!(c4.edge_side_counts(a, b).unwrap(), (2, 2));
        }
        assert!(matches!(
            path(3).edge_side_counts(0, 2),
            Err(Error::NotAnEdge(0, 2))
        ));
        let split = SimpleGraph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            split.edge_side_counts(0, 1),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn szeged_examples() {
        assert_eq!(SimpleGraph::complete(4).unwrap().szeged_index().unwrap(), 6);
        assert_eq!(path(3).szeged_index().unwrap(), 4);
        // C4: four edges at (2, 2).
        assert_eq!(cycle(4).szeged_index().unwrap(), 16);
        assert!(SimpleGraph::edgeless(3).unwrap().szeged_index().is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k3, map) = SimpleGraph::complete(4)
            .unwrap()
            .induced_subgraph(&[3, 0, 2])
            .unwrap();
        assert_eq!(k3, SimpleGraph::complete(3).unwrap());
        assert_eq!(map, vec![0, 2, 3]);
        let (g, _) = path(3).induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(g, SimpleGraph::edgeless(2).unwrap());
        assert!(matches!(
            path(3).induced_subgraph(&[]),
            Err(Error::EmptySelection)
        ));
        assert!(path(3).induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn dot_export() {
        let k2 = SimpleGraph::complete(2)
            .unwrap()
            .to_dot::<&str>(None)
            .unwrap();
        assert_eq!(k2.matches("--").count(), 1);
        assert_eq!(k2, "graph G {\n    0;\n    1;\n    0 -- 1;\n}\n");
        let k1 = SimpleGraph::complete(1)
            .unwrap()
            .to_dot::<&str>(None)
            .unwrap();
        assert_eq!(k1, "graph G {\n    0;\n}\n");
        let labelled = path(2).to_dot(Some(&["a\"b", "c"])).unwrap();
        assert!(labelled.contains("0 [label=\"a\\\"b\"];"));
        assert!(matches!(
            path(2).to_dot(Some(&["x"])),
            Err(Error::LabelCount {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn json_format() {
        let g = SimpleGraph::from_edge_list(3, [(2, 1), (0, 1)]).unwrap();
        assert_eq!(g.to_json(), r#"{"order":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(SimpleGraph::from_json(&g.to_json()).unwrap(), g);
        assert!(SimpleGraph::from_json(r#"{"order":0,"edges":[]}"#).is_err());
        assert!(SimpleGraph::from_json(r#"{"order":2,"edges":[[0,2]]}"#).is_err());
        assert!(SimpleGraph::from_json(r#"{"order":2,"edges":[[1,1]]}"#).is_err());
        assert!(SimpleGraph::from_json(r#"{"order":2,"edges":[],"x":1}"#).is_err());
        assert!(SimpleGraph::from_json(r#"{"order":2,"edges":[[0]]}"#).is_err());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = path(3);
        assert!(g.relabel(&[0, 0, 1]).is_err());
        assert!(g.relabel(&[0, 1]).is_err());
        assert_eq!(g.relabel(&[2, 1, 0]).unwrap(), g);
    }
}
