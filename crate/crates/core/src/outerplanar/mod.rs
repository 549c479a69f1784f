//! Maximal outerplanar 3-uniform hypergraphs as triangulations of a convex
//! polygon.
//!
//! A maximal outerplanar graph has a unique outer Hamilton cycle, so after
//! relabeling along that cycle every edge-maximal outerplanar 3-uniform
//! hypergraph is the triangle set of some [`Triangulation`] of the polygon
//! `0, 1, ..., n-1`.

mod dual;
mod enumerate;
mod recognize;

use std::fmt;
use std::str::FromStr;

pub use dual::{dual_tree, DualTree};
pub use enumerate::{
    catalan, enumerate_triangulations, random_triangulation, triangulation_count, Triangulations,
};
pub use recognize::{is_outerplanar_hypergraph, EmbeddingReport, FailureReason};

use crate::error::{Error, Result};
use crate::hypercore::{ShadowGraph, UniformHypergraph};

/// The fan hypergraph on `n` vertices: hub `0` and hyperedges `{0, i, i+1}`.
pub fn fan(n: usize) -> Result<UniformHypergraph> {
    if n < 3 {
        return Err(Error::InvalidSize { what: "fan", n, min: 3 });
    }
    UniformHypergraph::new(n, 3, (1..n - 1).map(|i| [0, i, i + 1]))
}

/// A set of `n - 3` pairwise non-crossing diagonals of the convex polygon
/// with vertices `0..n` in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

/// Chords `{a, b}` and `{c, d}` (each with the smaller endpoint first) cross
/// iff exactly one of `c, d` lies strictly between `a` and `b`.
fn chords_cross((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let inside = |x: usize| a < x && x < b;
    let shared = a == c || a == d || b == c || b == d;
    !shared && (inside(c) != inside(d))
}

impl Triangulation {
    pub fn new<I>(n: usize, diagonals: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n < 3 {
            return Err(Error::InvalidSize {
                what: "triangulation",
                n,
                min: 3,
            });
        }
        let mut list: Vec<(usize, usize)> = diagonals
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        list.sort_unstable();
        for &(a, b) in &list {
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if b - a < 2 || (a == 0 && b == n - 1) {
                return Err(Error::InvalidTriangulation(format!(
                    "{a}-{b} is not a diagonal of the {n}-gon"
                )));
            }
        }
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidTriangulation(format!(
                "diagonal {}-{} repeated",
                w[0].0, w[0].1
            )));
        }
        if list.len() != n - 3 {
            return Err(Error::InvalidTriangulation(format!(
                "{} diagonals, expected {}",
                list.len(),
                n - 3
            )));
        }
        for (i, &p) in list.iter().enumerate() {
            if let Some(&q) = list[i + 1..].iter().find(|&&q| chords_cross(p, q)) {
                return Err(Error::InvalidTriangulation(format!(
                    "diagonals {}-{} and {}-{} cross",
                    p.0, p.1, q.0, q.1
                )));
            }
        }
        Ok(Self { n, diagonals: list })
    }

    /// The fan triangulation with every diagonal at `hub`.
    pub fn fan(n: usize, hub: usize) -> Result<Self> {
        if hub >= n.max(3) {
            return Err(Error::VertexOutOfRange { vertex: hub, n });
        }
        Self::new(n, (2..n.saturating_sub(1)).map(|k| (hub, (hub + k) % n)))
    }

    pub(crate) fn from_sorted_unchecked(n: usize, diagonals: Vec<(usize, usize)>) -> Self {
        Self { n, diagonals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Diagonals with the smaller endpoint first, sorted.
    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    /// True when `{a, b}` is a side of the polygon.
    pub fn is_outer_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && ((a + 1) % self.n == b || (b + 1) % self.n == a)
    }

    /// Shadow graph: polygon sides plus diagonals.
    pub fn shadow(&self) -> ShadowGraph {
        let n = self.n;
        let sides = (0..n).map(|i| (i, (i + 1) % n));
        ShadowGraph::from_edges(n, sides.chain(self.diagonals.iter().copied()))
            .expect("triangulation vertices are in range")
    }

    /// The `n - 2` triangles, each sorted, in lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let g = self.shadow();
        let mut out = Vec::with_capacity(self.n - 2);
        for (u, v) in g.edges() {
            for &w in g.neighbors(v) {
                if w > v && g.has_edge(u, w) {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    /// The hypergraph whose hyperedges are the triangles.
    pub fn to_hypergraph(&self) -> UniformHypergraph {
        UniformHypergraph::new(self.n, 3, self.triangles()).expect("triangles are valid hyperedges")
    }

    /// Image under the polygon symmetry `v -> (offset + sign * v) mod n`.
    pub fn transformed(&self, offset: usize, reflect: bool) -> Self {
        let n = self.n;
        let map = |v: usize| {
            if reflect {
                (offset + n - v) % n
            } else {
                (v + offset) % n
            }
        };
        let mut diagonals: Vec<(usize, usize)> = self
            .diagonals
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map(a), map(b));
                (x.min(y), x.max(y))
            })
            .collect();
        diagonals.sort_unstable();
        Self { n, diagonals }
    }

    /// Lexicographically least diagonal set over the 2n rotations and
    /// reflections of the polygon.
    pub fn canonical_form(&self) -> Self {
        let mut best = self.clone();
        for offset in 0..self.n {
            for reflect in [false, true] {
                let image = self.transformed(offset, reflect);
                if image.diagonals < best.diagonals {
                    best = image;
                }
            }
        }
        best
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical_form()
    }

    /// True when some vertex is incident to every diagonal, i.e. the
    /// triangulation is a fan.
    pub fn is_fan(&self) -> bool {
        self.canonical_form() == Self::fan(self.n, 0).expect("n >= 3")
    }
}

/// Free-function form of [`Triangulation::canonical_form`].
pub fn canonical_form(t: &Triangulation) -> Triangulation {
    t.canonical_form()
}

/// Free-function form of [`Triangulation::to_hypergraph`].
pub fn to_hypergraph(t: &Triangulation) -> UniformHypergraph {
    t.to_hypergraph()
}

/// Text form `n; a-b, c-d, ...` with diagonals sorted.
impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for (i, (a, b)) in self.diagonals.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidTriangulation(msg);
        let (head, rest) = s
            .split_once(';')
            .ok_or_else(|| bad(format!("missing `;` in {s:?}")))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad vertex count {head:?}")))?;
        let mut diagonals = Vec::new();
        for item in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| bad(format!("bad diagonal {item:?}")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad diagonal {item:?}")))
            };
            diagonals.push((parse(a)?, parse(b)?));
        }
        Self::new(n, diagonals)
    }
}
