use super::Triangulation;

/// Adjacency of a triangulation's triangles across shared diagonals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    /// Triangles in lexicographic order.
    pub nodes: Vec<[usize; 3]>,
    /// Node index pairs `(i, j)` with `i < j`, one per diagonal.
    pub links: Vec<(usize, usize)>,
}

impl DualTree {
    pub fn degree(&self, node: usize) -> usize {
        self.links
            .iter()
            .filter(|&&(a, b)| a == node || b == node)
            .count()
    }

    pub fn neighbors(&self, node: usize) -> Vec<usize> {
        self.links
            .iter()
            .filter_map(|&(a, b)| match (a == node, b == node) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
            .collect()
    }

    /// Nodes of degree at most one: the ears of the triangulation.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.degree(i) <= 1).collect()
    }

    pub fn is_tree(&self) -> bool {
        let k = self.nodes.len();
        if k == 0 || self.links.len() != k - 1 {
            return false;
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == k
    }

    pub fn is_path(&self) -> bool {
        self.is_tree() && (0..self.nodes.len()).all(|i| self.degree(i) <= 2)
    }

    /// Index of the node with the given (unsorted) vertex triple.
    pub fn node_of(&self, triangle: [usize; 3]) -> Option<usize> {
        let mut key = triangle;
        key.sort_unstable();
        self.nodes.binary_search(&key).ok()
    }
}

/// Builds the dual tree of `t`.
pub fn dual_tree(t: &Triangulation) -> DualTree {
    let nodes = t.triangles();
    let mut links = Vec::with_capacity(t.diagonals().len());
    for &(a, b) in t.diagonals() {
        let sharing: Vec<usize> = nodes
            .iter()
            .enumerate()
            .filter(|(_, tri)| tri.contains(&a) && tri.contains(&b))
            .map(|(i, _)| i)
            .collect();
        debug_assert_eq!(sharing.len(), 2, "a diagonal borders two triangles");
        links.push((sharing[0], sharing[1]));
    }
    links.sort_unstable();
    DualTree { nodes, links }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outerplanar::enumerate_triangulations;

    #[test]
    fn fan5_dual_is_a_path() {
        let d = dual_tree(&Triangulation::fan(5, 0).unwrap());
        assert_eq!(d.nodes, vec![[0, 1, 2], [0, 2, 3], [0, 3, 4]]);
        assert_eq!(d.links, vec![(0, 1), (1, 2)]);
        assert!(d.is_path());
    }

    #[test]
    fn square_has_one_link() {
        let d = dual_tree(&Triangulation::new(4, [(1, 3)]).unwrap());
        assert_eq!(d.nodes.len(), 2);
        assert_eq!(d.links, vec![(0, 1)]);
    }

    #[test]
    fn central_triangle_dual_is_a_star() {
        let d = dual_tree(&Triangulation::new(6, [(1, 3), (3, 5), (1, 5)]).unwrap());
        let centre = d.node_of([1, 3, 5]).unwrap();
        assert_eq!(d.degree(centre), 3);
        assert_eq!(d.leaves().len(), 3);
        assert!(d.is_tree());
        assert!(!d.is_path());
    }

    #[test]
    fn every_dual_is_a_tree() {
        for n in 3..=10 {
            for t in enumerate_triangulations(n, false) {
                let d = dual_tree(&t);
                assert!(d.is_tree(), "{t}");
                assert_eq!(d.links.len(), n - 3);
                let g = t.shadow();
                for leaf in d.leaves() {
                    // an ear has a tip of degree 2 unless n = 3
                    assert!(n == 3 || d.nodes[leaf].iter().any(|&v| g.degree(v) == 2));
                }
            }
        }
    }
}
