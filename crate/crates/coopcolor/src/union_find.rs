//! Disjoint-set structure used for acyclicity checks on edge subsets.

pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        // path compression
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Unites the two classes; returns false when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.rank[ra] < self.rank[rb] {
            self.parent[ra] = rb;
        } else if self.rank[ra] > self.rank[rb] {
            self.parent[rb] = ra;
        } else {
            self.parent[rb] = ra;
            self.rank[ra] += 1;
        }
        true
    }
}

/// True when the edge list indexed by `edges` restricted to the chosen ids is
/// acyclic, i.e. a forest.
pub fn is_forest(vertices: usize, edges: &[(usize, usize)], chosen: impl Iterator<Item = usize>) -> bool {
    let mut uf = UnionFind::new(vertices);
    for e in chosen {
        let (u, v) = edges[e];
        if !uf.union(u, v) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_cycle() {
        let edges = [(0, 1), (1, 2), (2, 0)];
        assert!(is_forest(3, &edges, [0, 1].into_iter()));
        assert!(!is_forest(3, &edges, [0, 1, 2].into_iter()));
    }

    #[test]
    fn self_loop_is_a_cycle() {
        assert!(!is_forest(2, &[(1, 1)], [0].into_iter()));
    }
}
