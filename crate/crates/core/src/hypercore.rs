//! Hypergraph and shadow-graph data model.
//!
//! Vertices are dense integers `0..n`. A [`UniformHypergraph`] keeps its
//! hyperedges sorted, both within an edge and across the edge list, so two
//! hypergraphs with the same edge set compare and serialize identically.
//! The structural accessors here (link, co-link, distance layers, edge
//! levels and the far-side subgraph of an edge) are the vocabulary used by
//! the outerplanar and verification modules.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An `r`-uniform hypergraph on the vertex set `0..n`.
///
/// Edges are stored flat with stride `r`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    edges: Vec<usize>,
}

impl UniformHypergraph {
    /// Builds a hypergraph, sorting vertices within each edge and the edges
    /// themselves. Rejects out-of-range vertices, wrong edge sizes, repeated
    /// vertices and duplicate edges.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if r < 2 {
            return Err(Error::UniformityTooSmall(r));
        }
        let mut list: Vec<Vec<usize>> = Vec::new();
        for edge in edges {
            let edge = edge.as_ref();
            if edge.len() != r {
                return Err(Error::WrongEdgeSize {
                    edge: edge.to_vec(),
                    expected: r,
                    got: edge.len(),
                });
            }
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            let mut sorted = edge.to_vec();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex(edge.to_vec()));
            }
            list.push(sorted);
        }
        list.sort();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].clone()));
        }
        Ok(Self {
            n,
            r,
            edges: list.into_iter().flatten().collect(),
        })
    }

    /// Hypergraph on `n` vertices with no edges.
    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, Vec::<Vec<usize>>::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len() / self.r
    }

    /// Iterates the hyperedges in canonical order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.edges.chunks_exact(self.r)
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index * self.r..(index + 1) * self.r]
    }

    /// Owned copy of the edge list.
    pub fn edge_list(&self) -> Vec<Vec<usize>> {
        self.edges().map(<[usize]>::to_vec).collect()
    }

    /// Membership test; `edge` need not be sorted.
    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        if edge.len() != self.r {
            return false;
        }
        let mut key = edge.to_vec();
        key.sort_unstable();
        let (mut lo, mut hi) = (0, self.edge_count());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(key.as_slice()) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges().filter(|e| e.contains(&v)).count()
    }

    /// Returns a copy with one extra hyperedge.
    pub fn with_edge(&self, edge: &[usize]) -> Result<Self> {
        let mut list = self.edge_list();
        list.push(edge.to_vec());
        Self::new(self.n, self.r, list)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowGraph {
    adj: Vec<Vec<usize>>,
}

impl ShadowGraph {
    /// Builds a graph from an edge list. Loops are rejected, repeated pairs
    /// collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::RepeatedVertex(vec![u, v]));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &v in removed {
            seen[v] = true;
        }
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Biconnected components (blocks) with at least one edge. Each block
    /// lists its edges as `(u, v)` with `u < v`, sorted.
    pub fn blocks(&self) -> Vec<Block> {
        const UNSET: usize = usize::MAX;
        let n = self.n();
        let mut disc = vec![UNSET; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks = Vec::new();
        // (vertex, parent, next neighbor index)
        let mut frames: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != UNSET {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            frames.push((root, UNSET, 0));
            while let Some(top) = frames.last_mut() {
                let (v, parent, i) = *top;
                if i < self.adj[v].len() {
                    top.2 += 1;
                    let u = self.adj[v][i];
                    if disc[u] == UNSET {
                        edge_stack.push((v, u));
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        frames.push((u, v, 0));
                    } else if u != parent && disc[u] < disc[v] {
                        edge_stack.push((v, u));
                        low[v] = low[v].min(disc[u]);
                    }
                    continue;
                }
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut edges = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            edges.push((a.min(b), a.max(b)));
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        blocks.push(Block::from_edges(edges));
                    }
                }
            }
        }
        blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        blocks
    }

    /// Connected, at least three vertices, no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        if self.n() < 3 || !self.is_connected() {
            return false;
        }
        let blocks = self.blocks();
        blocks.len() == 1 && blocks[0].vertices.len() == self.n()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    fn check_edge(&self, (u, w): (usize, usize)) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if self.has_edge(u, w) {
            Ok(())
        } else {
            Err(Error::NotAnEdge(u.min(w), u.max(w)))
        }
    }
}

/// A biconnected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    fn from_edges(mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        Self { vertices, edges }
    }
}

/// Hop distances from a source vertex. `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    pub source: usize,
    pub dist: Vec<Option<usize>>,
}

impl DistanceMap {
    pub fn get(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }

    /// Vertices at exactly distance `k` from the source.
    pub fn layer(&self, k: usize) -> Vec<usize> {
        (0..self.dist.len())
            .filter(|&v| self.dist[v] == Some(k))
            .collect()
    }
}

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger(pub usize);

impl HalfInteger {
    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Part of a host graph: a vertex subset plus edges. Edge endpoints are in
/// `vertices` or are one of the two `anchors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphView {
    pub anchors: (usize, usize),
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl SubgraphView {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty() && self.edges.is_empty()
    }
}

/// The shadow graph: `uv` is an edge iff some hyperedge contains both.
pub fn shadow(h: &UniformHypergraph) -> ShadowGraph {
    let pairs = h.edges().flat_map(|e| {
        (0..e.len()).flat_map(move |i| ((i + 1)..e.len()).map(move |j| (e[i], e[j])))
    });
    ShadowGraph::from_edges(h.n(), pairs).expect("hypergraph vertices are in range")
}

/// The link of `v`: every hyperedge through `v` with `v` removed.
pub fn link(h: &UniformHypergraph, v: usize) -> Result<Vec<Vec<usize>>> {
    h.check_vertex(v)?;
    Ok(h
        .edges()
        .filter(|e| e.contains(&v))
        .map(|e| e.iter().copied().filter(|&u| u != v).collect())
        .collect())
}

/// Vertices that complete the shadow edge `{u, w}` to a hyperedge. For
/// `r > 3` this is the union of the remaining vertices of hyperedges that
/// contain both endpoints.
pub fn co_link(h: &UniformHypergraph, (u, w): (usize, usize)) -> Result<Vec<usize>> {
    h.check_vertex(u)?;
    h.check_vertex(w)?;
    let mut found = false;
    let mut out = Vec::new();
    for e in h.edges().filter(|e| u != w && e.contains(&u) && e.contains(&w)) {
        found = true;
        out.extend(e.iter().copied().filter(|&x| x != u && x != w));
    }
    if !found {
        return Err(Error::NotAnEdge(u.min(w), u.max(w)));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Breadth-first hop distances from `v`.
pub fn distances(g: &ShadowGraph, v: usize) -> Result<DistanceMap> {
    g.check_vertex(v)?;
    let mut dist = vec![None; g.n()];
    dist[v] = Some(0);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].expect("queued vertices have a distance");
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    Ok(DistanceMap { source: v, dist })
}

/// Level of the edge `{u, w}` relative to `v`: `(dist(u,v) + dist(w,v)) / 2`.
pub fn edge_level(g: &ShadowGraph, e: (usize, usize), v: usize) -> Result<HalfInteger> {
    g.check_edge(e)?;
    let dm = distances(g, v)?;
    let du = dm.get(e.0).ok_or(Error::Unreachable(e.0))?;
    let dw = dm.get(e.1).ok_or(Error::Unreachable(e.1))?;
    Ok(HalfInteger(du + dw))
}

/// The subgraph on the far side of the edge `{u, w}` from `v`.
///
/// Components of `G - {u, w}` other than the one holding `v` are collected
/// together with every edge joining them to `u` or `w`. When `{u, w}` is an
/// outer edge of a 2-connected outerplanar graph, `G - {u, w}` stays
/// connected and the view is empty. On graphs with more than two components
/// after the deletion all far components are returned together.
pub fn phi(g: &ShadowGraph, e: (usize, usize), v: usize) -> Result<SubgraphView> {
    let (u, w) = (e.0.min(e.1), e.0.max(e.1));
    g.check_edge((u, w))?;
    g.check_vertex(v)?;
    if v == u || v == w {
        return Err(Error::VertexOnEdge { vertex: v, u, w });
    }
    if !g.is_two_connected() {
        return Err(Error::NotTwoConnected);
    }
    let mut far = vec![false; g.n()];
    let mut vertices = Vec::new();
    for comp in g.components_avoiding(&[u, w]) {
        if !comp.contains(&v) {
            for &x in &comp {
                far[x] = true;
            }
            vertices.extend(comp);
        }
    }
    vertices.sort_unstable();
    let edges = g
        .edges()
        .filter(|&(a, b)| {
            (far[a] || far[b]) && (far[a] || a == u || a == w) && (far[b] || b == u || b == w)
        })
        .collect();
    Ok(SubgraphView {
        anchors: (u, w),
        vertices,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::{fan, Triangulation};

    fn graph(n: usize, edges: &[(usize, usize)]) -> ShadowGraph {
        ShadowGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            UniformHypergraph::new(3, 3, [[0, 1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            UniformHypergraph::new(4, 3, [vec![0, 1]]),
            Err(Error::WrongEdgeSize { .. })
        ));
        assert!(matches!(
            UniformHypergraph::new(4, 3, [[0, 1, 1]]),
            Err(Error::RepeatedVertex(_))
        ));
        assert!(matches!(
            UniformHypergraph::new(4, 3, [[0, 1, 2], [2, 1, 0]]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            UniformHypergraph::new(4, 1, [[0]]),
            Err(Error::UniformityTooSmall(1))
        ));
    }

    #[test]
    fn edges_are_canonical() {
        let h = UniformHypergraph::new(5, 3, [[4, 2, 3], [2, 1, 0]]).unwrap();
        assert_eq!(h.edge_list(), vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert!(h.contains_edge(&[3, 4, 2]));
        assert!(!h.contains_edge(&[0, 1, 3]));
    }

    #[test]
    fn shadow_examples() {
        let single = UniformHypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(shadow(&single).edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);

        let f4 = fan(4).unwrap();
        assert_eq!(
            shadow(&f4).edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]
        );

        let empty = UniformHypergraph::empty(5, 3).unwrap();
        let g = shadow(&empty);
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn fan_shadow_degree_sequence() {
        for n in 4..12 {
            let g = shadow(&fan(n).unwrap());
            assert_eq!(g.degree(0), n - 1);
            assert_eq!(g.degree(1), 2);
            assert_eq!(g.degree(n - 1), 2);
            for v in 2..n - 1 {
                assert_eq!(g.degree(v), 3);
            }
        }
    }

    #[test]
    fn link_examples() {
        let f4 = fan(4).unwrap();
        assert_eq!(link(&f4, 0).unwrap(), vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(link(&f4, 1).unwrap(), vec![vec![0, 2]]);
        let h = UniformHypergraph::new(4, 3, [[0, 1, 2]]).unwrap();
        assert!(link(&h, 3).unwrap().is_empty());
        assert!(link(&h, 4).is_err());
    }

    #[test]
    fn co_link_examples() {
        let f4 = fan(4).unwrap();
        assert_eq!(co_link(&f4, (0, 2)).unwrap(), vec![1, 3]);
        assert_eq!(co_link(&f4, (1, 2)).unwrap(), vec![0]);
        // fan(5) edges: 012, 023, 034
        let f5 = fan(5).unwrap();
        assert_eq!(co_link(&f5, (0, 2)).unwrap(), vec![1, 3]);
        assert_eq!(co_link(&f5, (2, 0)).unwrap(), vec![1, 3]);
        assert_eq!(co_link(&f5, (1, 3)), Err(Error::NotAnEdge(1, 3)));
    }

    #[test]
    fn distance_examples() {
        let g = shadow(&fan(6).unwrap());
        let dm = distances(&g, 0).unwrap();
        assert_eq!(dm.get(0), Some(0));
        assert!((1..6).all(|v| dm.get(v) == Some(1)));
        assert_eq!(dm.layer(1), vec![1, 2, 3, 4, 5]);

        let path = graph(3, &[(0, 1), (1, 2)]);
        let dm = distances(&path, 0).unwrap();
        assert_eq!(dm.dist, vec![Some(0), Some(1), Some(2)]);

        let g = graph(3, &[(0, 1)]);
        assert_eq!(distances(&g, 0).unwrap().get(2), None);
    }

    #[test]
    fn edge_level_examples() {
        let g = shadow(&fan(5).unwrap());
        assert_eq!(edge_level(&g, (0, 2), 0).unwrap(), HalfInteger(1));
        assert_eq!(edge_level(&g, (0, 2), 0).unwrap().to_string(), "1/2");
        assert_eq!(edge_level(&g, (1, 2), 0).unwrap(), HalfInteger(2));
        let tri = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(edge_level(&tri, (1, 2), 0).unwrap().as_f64(), 1.0);

        let g = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(edge_level(&g, (2, 3), 0), Err(Error::Unreachable(2)));
        assert_eq!(edge_level(&g, (1, 2), 0), Err(Error::NotAnEdge(1, 2)));
    }

    #[test]
    fn star_and_link_levels_in_triangulations() {
        for t in crate::outerplanar::enumerate_triangulations(8, false) {
            let h = t.to_hypergraph();
            let g = shadow(&h);
            for v in 0..8 {
                for &u in g.neighbors(v) {
                    assert_eq!(edge_level(&g, (v, u), v).unwrap(), HalfInteger(1));
                }
                for pair in link(&h, v).unwrap() {
                    assert_eq!(edge_level(&g, (pair[0], pair[1]), v).unwrap(), HalfInteger(2));
                }
            }
        }
    }

    #[test]
    fn phi_examples() {
        let g = shadow(&fan(5).unwrap());
        assert!(phi(&g, (1, 2), 0).unwrap().is_empty());

        let t = Triangulation::new(5, [(0, 2), (0, 3)]).unwrap();
        let g = shadow(&t.to_hypergraph());
        let view = phi(&g, (0, 2), 4).unwrap();
        assert_eq!(view.vertices, vec![1]);
        assert_eq!(view.edges, vec![(0, 1), (1, 2)]);
        let view = phi(&g, (0, 3), 1).unwrap();
        assert_eq!(view.vertices, vec![4]);
        assert_eq!(view.edges, vec![(0, 4), (3, 4)]);
    }

    #[test]
    fn phi_errors() {
        let g = shadow(&fan(5).unwrap());
        assert!(matches!(phi(&g, (0, 2), 0), Err(Error::VertexOnEdge { .. })));
        assert_eq!(phi(&g, (1, 3), 0), Err(Error::NotAnEdge(1, 3)));
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(phi(&path, (0, 1), 2), Err(Error::NotTwoConnected));
    }

    #[test]
    fn phi_partitions_vertex_set() {
        for t in crate::outerplanar::enumerate_triangulations(8, false) {
            let g = shadow(&t.to_hypergraph());
            for (u, w) in g.edges() {
                for v in (0..8).filter(|&v| v != u && v != w) {
                    let view = phi(&g, (u, w), v).unwrap();
                    let near = g.components_avoiding(&[u, w]);
                    let near = near.iter().find(|c| c.contains(&v)).unwrap();
                    let mut all: Vec<usize> = view.vertices.clone();
                    all.extend([u, w]);
                    all.extend(near.iter().copied());
                    all.sort_unstable();
                    assert_eq!(all, (0..8).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn blocks_of_bowtie() {
        let g = graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let blocks = g.blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].vertices, vec![0, 1, 2]);
        assert_eq!(blocks[1].vertices, vec![2, 3, 4]);
        assert!(!g.is_two_connected());
        let bridge = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(bridge.blocks().len(), 2);
        assert!(shadow(&fan(7).unwrap()).is_two_connected());
    }
}
