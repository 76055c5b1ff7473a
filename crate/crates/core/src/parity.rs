//! Union-find that also tracks the parity of the path between each element
//! and its root, so "same class" and "opposite class" questions are answered
//! in near-constant time.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    /// Parity of the edge to `parent`.
    parity: Vec<bool>,
}

impl ParityUnionFind {
    pub fn new(n: usize) -> Self {
        ParityUnionFind { parent: (0..n).collect(), rank: vec![0; n], parity: vec![false; n] }
    }

    /// Adds a new singleton and returns its index.
    pub fn push(&mut self) -> usize {
        let i = self.parent.len();
        self.parent.push(i);
        self.rank.push(0);
        self.parity.push(false);
        i
    }

    /// Root of `x` and the parity of the path from `x` to it.
    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, up) = self.find(p);
        self.parity[x] ^= up;
        self.parent[x] = root;
        (root, self.parity[x])
    }

    /// Parity between `a` and `b` if they are already connected.
    pub fn relation(&mut self, a: usize, b: usize) -> Option<bool> {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        (ra == rb).then_some(pa ^ pb)
    }

    /// Records that `a` and `b` differ by `odd`. Returns `false` when this
    /// contradicts what is already known; the structure is left unchanged in
    /// that case.
    pub fn union(&mut self, a: usize, b: usize, odd: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == odd;
        }
        let (child, root) = if self.rank[ra] < self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[child] = root;
        self.parity[child] = pa ^ pb ^ odd;
        if self.rank[ra] == self.rank[rb] {
            self.rank[root] += 1;
        }
        true
    }
}
