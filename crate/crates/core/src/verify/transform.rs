//! The two local moves that push an outerplanar hypergraph towards the fan,
//! and the entry-swap comparison used alongside them.
//!
//! Both moves keep the hyperedge count and produce a new outer cycle. The
//! result is rebuilt as a [`Triangulation`] over positions along that cycle,
//! which doubles as a check that the move preserved maximal
//! outerplanarity.

use crate::error::{Error, Result};
use crate::hypercore::{phi, shadow, UniformHypergraph};
use crate::outerplanar::{dual_tree, Triangulation};
use crate::spectral::poly_eval;

/// Output of a move: the hypergraph in the original labels, its new outer
/// cycle, and the triangulation obtained by relabeling each vertex with its
/// position on that cycle.
#[derive(Debug, Clone, PartialEq)]
pub struct Reembedding {
    pub hypergraph: UniformHypergraph,
    pub outer_cycle: Vec<usize>,
    pub triangulation: Triangulation,
}

impl Reembedding {
    /// The hypergraph relabeled along the outer cycle; isomorphic to
    /// `hypergraph`.
    pub fn relabeled(&self) -> UniformHypergraph {
        self.triangulation.to_hypergraph()
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn check_pair(h: &UniformHypergraph, t: &Triangulation) -> Result<()> {
    if *h != t.to_hypergraph() {
        return Err(precondition("hypergraph is not the triangle set of the triangulation"));
    }
    Ok(())
}

fn reembed(n: usize, edges: Vec<Vec<usize>>, outer_cycle: Vec<usize>) -> Result<Reembedding> {
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in outer_cycle.iter().enumerate() {
        pos[v] = i;
    }
    debug_assert!(pos.iter().all(|&p| p != usize::MAX));
    let hypergraph = UniformHypergraph::new(n, 3, &edges)?;
    let relabeled =
        UniformHypergraph::new(n, 3, edges.iter().map(|e| e.iter().map(|&v| pos[v]).collect::<Vec<_>>()))?;
    let diagonals: Vec<(usize, usize)> = shadow(&relabeled)
        .edges()
        .filter(|&(a, b)| b - a >= 2 && !(a == 0 && b == n - 1))
        .collect();
    let triangulation = Triangulation::new(n, diagonals)?;
    if triangulation.to_hypergraph() != relabeled {
        return Err(Error::InvalidTriangulation(
            "moved hyperedges are not the faces of the new embedding".into(),
        ));
    }
    Ok(Reembedding {
        hypergraph,
        outer_cycle,
        triangulation,
    })
}

/// Reflects the far side of the diagonal `v1 v2` from `v0` across the outer
/// edge `v0 v1`: every hyperedge `{v2, u, w}` with `u, w` on the far side
/// (or `u = v1`) becomes `{v0, u, w}`.
///
/// Requires `{v0, v1, v2}` to be a hyperedge, `v0 v1` to be an outer edge,
/// and the far side of `v1 v2` to be non-empty.
pub fn flip_transform(
    h: &UniformHypergraph,
    t: &Triangulation,
    v0: usize,
    v1: usize,
    v2: usize,
) -> Result<Reembedding> {
    check_pair(h, t)?;
    let n = t.n();
    for v in [v0, v1, v2] {
        h.check_vertex(v)?;
    }
    if !h.contains_edge(&[v0, v1, v2]) {
        return Err(precondition(format!("{{{v0}, {v1}, {v2}}} is not a hyperedge")));
    }
    if !t.is_outer_edge(v0, v1) {
        return Err(precondition(format!("{v0}-{v1} is not an outer edge")));
    }
    let far = phi(&shadow(h), (v1, v2), v0)?;
    if far.is_empty() {
        return Err(precondition(format!(
            "far side of {v1}-{v2} from {v0} is empty, nothing to flip"
        )));
    }
    let mut moving = vec![false; n];
    moving[v1] = true;
    for &u in &far.vertices {
        moving[u] = true;
    }
    let edges: Vec<Vec<usize>> = h
        .edges()
        .map(|e| {
            let others: Vec<usize> = e.iter().copied().filter(|&u| u != v2).collect();
            if others.len() == 2 && others.iter().all(|&u| moving[u]) {
                vec![v0, others[0], others[1]]
            } else {
                e.to_vec()
            }
        })
        .collect();

    // walk the cycle from v0 through v1; the vertices strictly between v1
    // and v2 are the far side and get reversed in front of v1
    let step = if (v0 + 1) % n == v1 { 1 } else { n - 1 };
    let walk: Vec<usize> = (0..n).map(|i| (v0 + i * step) % n).collect();
    let j = walk.iter().position(|&v| v == v2).expect("v2 is on the cycle");
    debug_assert_eq!(
        {
            let mut s = walk[2..j].to_vec();
            s.sort_unstable();
            s
        },
        far.vertices
    );
    let mut cycle = Vec::with_capacity(n);
    cycle.push(v0);
    cycle.extend(walk[2..j].iter().rev());
    cycle.push(v1);
    cycle.extend(&walk[j..]);
    reembed(n, edges, cycle)
}

/// Moves the ear `leaf = [w, s, t]` (tip `w`) onto the outer edge `v0 v1`:
/// the hyperedge `{w, s, t}` is replaced by `{w, v0, v1}`.
///
/// Requires the leaf to be a dual-tree leaf not containing `v0`, `w` to have
/// shadow degree 2 and hypergraph degree 1, and `v1` to lie in exactly one
/// hyperedge, which contains `v0`.
pub fn leaf_reattach(
    h: &UniformHypergraph,
    t: &Triangulation,
    leaf: [usize; 3],
    v0: usize,
    v1: usize,
) -> Result<Reembedding> {
    check_pair(h, t)?;
    let n = t.n();
    let [w, s, u] = leaf;
    for v in [w, s, u, v0, v1] {
        h.check_vertex(v)?;
    }
    if !h.contains_edge(&leaf) {
        return Err(precondition(format!("{{{w}, {s}, {u}}} is not a hyperedge")));
    }
    let dual = dual_tree(t);
    let node = dual.node_of(leaf).expect("hyperedges are dual nodes");
    if dual.degree(node) > 1 {
        return Err(precondition(format!("{{{w}, {s}, {u}}} is not a leaf of the dual tree")));
    }
    if leaf.contains(&v0) {
        return Err(precondition(format!(
            "leaf {{{w}, {s}, {u}}} contains v0 = {v0}, so it ends the path of hyperedges at v0"
        )));
    }
    if t.shadow().degree(w) != 2 || h.degree(w) != 1 {
        return Err(precondition(format!("{w} is not the tip of the ear")));
    }
    let v1_edges: Vec<&[usize]> = h.edges().filter(|e| e.contains(&v1)).collect();
    if v1_edges.len() != 1 || !v1_edges[0].contains(&v0) {
        return Err(precondition(format!(
            "{v1} must lie in exactly one hyperedge, and that hyperedge must contain {v0}"
        )));
    }

    let mut edges: Vec<Vec<usize>> = h
        .edges()
        .filter(|e| !is_same_triple(e, leaf))
        .map(<[usize]>::to_vec)
        .collect();
    edges.push(vec![w, v0, v1]);

    let mut cycle: Vec<usize> = (0..n).filter(|&v| v != w).collect();
    let m = cycle.len();
    let i0 = cycle.iter().position(|&v| v == v0).expect("v0 is on the cycle");
    let at = if cycle[(i0 + 1) % m] == v1 {
        i0 + 1
    } else {
        debug_assert_eq!(cycle[(i0 + m - 1) % m], v1);
        i0
    };
    cycle.insert(at, w);
    reembed(n, edges, cycle)
}

fn is_same_triple(e: &[usize], triple: [usize; 3]) -> bool {
    let mut key = triple;
    key.sort_unstable();
    e == key
}

/// `P_H(x') - P_H(x)` where `x'` swaps the entries at `a` and `b`.
pub fn entry_swap_check(h: &UniformHypergraph, x: &[f64], a: usize, b: usize) -> Result<f64> {
    h.check_vertex(a)?;
    h.check_vertex(b)?;
    let before = poly_eval(h, x)?;
    let mut swapped = x.to_vec();
    swapped.swap(a, b);
    Ok(poly_eval(h, &swapped)? - before)
}
