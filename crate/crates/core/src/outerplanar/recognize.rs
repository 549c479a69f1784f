//! Recognition of outerplanar 3-uniform hypergraphs.
//!
//! The shadow is split into blocks. Each block with a cycle is reduced by
//! series reductions (delete a degree-2 vertex, join its two neighbors) down
//! to one edge; replaying the reductions backwards inserts every vertex
//! between its two recorded neighbors and yields the candidate outer cycle.
//! The candidate is accepted only if every block edge is a cycle edge or a
//! chord and the chords are pairwise non-crossing, so a successful result is
//! a checked outerplanar embedding. Interior faces of the embedding are then
//! traced and every hyperedge must be one of the triangular faces.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypercore::{shadow, Block, UniformHypergraph};

/// Why a hypergraph failed recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    /// The block on these vertices has no outerplanar embedding.
    ShadowNotOuterplanar { block: Vec<usize> },
    /// A hyperedge is not an interior triangular face of the embedding.
    HyperedgeNotFace { edge: [usize; 3] },
}

/// Outcome of [`is_outerplanar_hypergraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub ok: bool,
    /// Hamilton outer cycle, starting at the smallest vertex, when the shadow
    /// is 2-connected and the embedding exists.
    pub outer_cycle: Option<Vec<usize>>,
    /// Outer cycle of every block (a bridge is listed as its two endpoints).
    pub block_cycles: Vec<Vec<usize>>,
    /// Interior triangular faces of the embedding, each sorted.
    pub triangular_faces: Vec<[usize; 3]>,
    /// Shadow is 2-connected with `2n - 3` edges, i.e. a maximal
    /// outerplanar graph (only meaningful when `ok`).
    pub maximal: bool,
    pub failure_reason: Option<FailureReason>,
}

/// Decides whether the shadow of `h` has an outerplanar embedding in which
/// every hyperedge is an interior triangular face.
pub fn is_outerplanar_hypergraph(h: &UniformHypergraph) -> Result<EmbeddingReport> {
    if h.r() != 3 {
        return Err(Error::UnsupportedUniformity {
            expected: 3,
            got: h.r(),
        });
    }
    let g = shadow(h);
    let blocks = g.blocks();
    let mut block_cycles = Vec::with_capacity(blocks.len());
    let mut faces: Vec<[usize; 3]> = Vec::new();
    for block in &blocks {
        let Some(cycle) = block_outer_cycle(block) else {
            return Ok(EmbeddingReport {
                ok: false,
                outer_cycle: None,
                block_cycles,
                triangular_faces: Vec::new(),
                maximal: false,
                failure_reason: Some(FailureReason::ShadowNotOuterplanar {
                    block: block.vertices.clone(),
                }),
            });
        };
        faces.extend(
            interior_faces(&cycle, &block.edges)
                .into_iter()
                .filter(|f| f.len() == 3)
                .map(|f| {
                    let mut t = [f[0], f[1], f[2]];
                    t.sort_unstable();
                    t
                }),
        );
        block_cycles.push(cycle);
    }
    faces.sort_unstable();

    let failure_reason = h
        .edges()
        .map(|e| [e[0], e[1], e[2]])
        .find(|e| faces.binary_search(e).is_err())
        .map(|edge| FailureReason::HyperedgeNotFace { edge });
    let ok = failure_reason.is_none();
    let spanning = g.is_two_connected();
    let outer_cycle = (ok && spanning).then(|| block_cycles[0].clone());
    let maximal = ok && spanning && g.edge_count() == 2 * g.n() - 3;
    Ok(EmbeddingReport {
        ok,
        outer_cycle,
        block_cycles,
        triangular_faces: faces,
        maximal,
        failure_reason,
    })
}

/// Outer cycle of a block, or `None` if the block is not outerplanar.
fn block_outer_cycle(block: &Block) -> Option<Vec<usize>> {
    let verts = &block.vertices;
    if verts.len() == 2 {
        return Some(verts.clone());
    }
    let index = |v: usize| verts.binary_search(&v).expect("edge endpoint in block");
    let m = verts.len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
    for &(a, b) in &block.edges {
        let (a, b) = (index(a), index(b));
        adj[a].insert(b);
        adj[b].insert(a);
    }

    let mut removed = vec![false; m];
    let mut pending: Vec<usize> = (0..m).rev().filter(|&v| adj[v].len() == 2).collect();
    let mut reductions: Vec<(usize, usize, usize)> = Vec::with_capacity(m);
    let mut remaining = m;
    while remaining > 2 {
        let v = loop {
            let v = pending.pop()?;
            if !removed[v] && adj[v].len() == 2 {
                break v;
            }
        };
        let mut it = adj[v].iter().copied();
        let (a, b) = (it.next()?, it.next()?);
        removed[v] = true;
        adj[a].remove(&v);
        adj[b].remove(&v);
        adj[v].clear();
        adj[a].insert(b);
        adj[b].insert(a);
        for x in [a, b] {
            if adj[x].len() == 2 {
                pending.push(x);
            }
        }
        reductions.push((v, a, b));
        remaining -= 1;
    }

    let left: Vec<usize> = (0..m).filter(|&v| !removed[v]).collect();
    let (x, y) = (left[0], left[1]);
    let mut next = vec![usize::MAX; m];
    let mut prev = vec![usize::MAX; m];
    next[x] = y;
    next[y] = x;
    prev[x] = y;
    prev[y] = x;
    for &(v, a, b) in reductions.iter().rev() {
        let (from, to) = if next[a] == b {
            (a, b)
        } else if next[b] == a {
            (b, a)
        } else {
            return None;
        };
        next[from] = v;
        prev[v] = from;
        next[v] = to;
        prev[to] = v;
    }

    let mut cycle = Vec::with_capacity(m);
    let mut cur = 0;
    for _ in 0..m {
        cycle.push(cur);
        cur = next[cur];
    }
    if cur != 0 || {
        let mut seen = cycle.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() != m
    } {
        return None;
    }
    // orient so the walk from vertex 0 goes to its smaller-labelled neighbor
    if cycle[1] > cycle[m - 1] {
        cycle[1..].reverse();
    }

    let mut pos = vec![0; m];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &block.edges {
        let (p, q) = (pos[index(a)], pos[index(b)]);
        let (p, q) = (p.min(q), p.max(q));
        if q - p == 1 || (p == 0 && q == m - 1) {
            continue;
        }
        chords.push((p, q));
    }
    if !laminar(&mut chords) {
        return None;
    }
    Some(cycle.into_iter().map(|v| verts[v]).collect())
}

/// True when no two intervals properly cross (touching endpoints allowed).
fn laminar(intervals: &mut [(usize, usize)]) -> bool {
    intervals.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &(lo, hi) in intervals.iter() {
        while stack.last().is_some_and(|top| top.1 <= lo) {
            stack.pop();
        }
        if stack.last().is_some_and(|top| hi > top.1) {
            return false;
        }
        stack.push((lo, hi));
    }
    true
}

/// Interior faces of a polygon (vertices in `cycle` order) dissected by
/// non-crossing chords, traced through the convex-position rotation system.
fn interior_faces(cycle: &[usize], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let m = cycle.len();
    if m < 3 {
        return Vec::new();
    }
    let mut pos = std::collections::HashMap::with_capacity(m);
    for (i, &v) in cycle.iter().enumerate() {
        pos.insert(v, i);
    }
    // neighbors of each position sorted by counter-clockwise offset
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(a, b) in edges {
        let (p, q) = (pos[&a], pos[&b]);
        rot[p].push(q);
        rot[q].push(p);
    }
    for (p, list) in rot.iter_mut().enumerate() {
        list.sort_unstable_by_key(|&q| (q + m - p) % m);
    }
    let mut visited: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut starts: Vec<(usize, usize)> = (0..m).map(|p| (p, (p + 1) % m)).collect();
    for &(a, b) in edges {
        let (p, q) = (pos[&a], pos[&b]);
        if (p + 1) % m != q && (q + 1) % m != p {
            starts.push((p, q));
            starts.push((q, p));
        }
    }
    let mut faces = Vec::new();
    for start in starts {
        if visited.contains(&start) {
            continue;
        }
        let mut face = Vec::new();
        let (mut p, mut q) = start;
        loop {
            visited.insert((p, q));
            face.push(cycle[p]);
            // next vertex: neighbor of q just before p in q's rotation
            let list = &rot[q];
            let at = list.iter().position(|&x| x == p).expect("rotation holds both ends");
            let r = list[(at + list.len() - 1) % list.len()];
            (p, q) = (q, r);
            if (p, q) == start || face.len() > m {
                break;
            }
        }
        faces.push(face);
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::{enumerate_triangulations, fan};

    #[test]
    fn fan7_is_outerplanar() {
        let report = is_outerplanar_hypergraph(&fan(7).unwrap()).unwrap();
        assert!(report.ok);
        assert!(report.maximal);
        assert_eq!(report.outer_cycle, Some((0..7).collect()));
        assert_eq!(report.triangular_faces.len(), 5);
    }

    #[test]
    fn k4_triples_are_not() {
        let h = UniformHypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap();
        let report = is_outerplanar_hypergraph(&h).unwrap();
        assert!(!report.ok);
        assert!(matches!(
            report.failure_reason,
            Some(FailureReason::ShadowNotOuterplanar { .. })
        ));
    }

    #[test]
    fn disjoint_triples_are_outerplanar() {
        let h = UniformHypergraph::new(6, 3, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let report = is_outerplanar_hypergraph(&h).unwrap();
        assert!(report.ok);
        assert_eq!(report.outer_cycle, None);
        assert!(!report.maximal);
        assert_eq!(report.block_cycles, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn k23_shadow_is_rejected() {
        // K_{2,3} on {0,1} x {2,3,4} plus the edge 01 arises from three
        // triples sharing the pair 01
        let h = UniformHypergraph::new(5, 3, [[0, 1, 2], [0, 1, 3], [0, 1, 4]]).unwrap();
        assert!(!is_outerplanar_hypergraph(&h).unwrap().ok);
    }

    #[test]
    fn non_maximal_and_cut_vertices() {
        // two triangles sharing vertex 2, plus a pendant triangle on 4-5
        let h = UniformHypergraph::new(7, 3, [[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
        let report = is_outerplanar_hypergraph(&h).unwrap();
        assert!(report.ok);
        assert_eq!(report.block_cycles.len(), 3);
        // a sub-hypergraph of a triangulation is outerplanar
        let t = crate::outerplanar::Triangulation::new(6, [(1, 3), (3, 5), (1, 5)]).unwrap();
        let h = UniformHypergraph::new(6, 3, [[1, 2, 3], [3, 4, 5]]).unwrap();
        assert!(is_outerplanar_hypergraph(&h).unwrap().ok);
        assert!(is_outerplanar_hypergraph(&t.to_hypergraph()).unwrap().ok);
    }

    #[test]
    fn wrong_uniformity_is_an_error() {
        let h = UniformHypergraph::new(4, 4, [[0, 1, 2, 3]]).unwrap();
        assert!(matches!(
            is_outerplanar_hypergraph(&h),
            Err(Error::UnsupportedUniformity { got: 4, .. })
        ));
    }

    #[test]
    fn every_triangulation_is_recognized() {
        for n in 3..=10 {
            for t in enumerate_triangulations(n, false) {
                let report = is_outerplanar_hypergraph(&t.to_hypergraph()).unwrap();
                assert!(report.ok && report.maximal, "{t}");
                assert_eq!(report.outer_cycle, Some((0..n).collect()));
                assert_eq!(report.triangular_faces, t.triangles());
            }
        }
    }

    #[test]
    fn relabeled_triangulations_are_recognized() {
        // relabel by a fixed permutation so the outer cycle is not 0..n
        let perm = [3, 0, 6, 1, 5, 2, 4];
        for t in enumerate_triangulations(7, true) {
            let edges: Vec<Vec<usize>> = t
                .triangles()
                .iter()
                .map(|tri| tri.iter().map(|&v| perm[v]).collect())
                .collect();
            let h = UniformHypergraph::new(7, 3, edges).unwrap();
            let report = is_outerplanar_hypergraph(&h).unwrap();
            assert!(report.ok);
            let cycle = report.outer_cycle.unwrap();
            for i in 0..7 {
                let (a, b) = (cycle[i], cycle[(i + 1) % 7]);
                let inv = |x: usize| perm.iter().position(|&p| p == x).unwrap();
                assert!(t.is_outer_edge(inv(a), inv(b)));
            }
        }
    }

    #[test]
    fn laminar_check() {
        assert!(laminar(&mut [(0, 4), (1, 3), (4, 6)]));
        assert!(!laminar(&mut [(0, 3), (1, 4)]));
    }
}
