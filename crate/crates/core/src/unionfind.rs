/// Union-find over `0..n` with path compression. The representative of a
/// class is always its smallest element.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns the surviving representative.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        let ra = self.find(a);
        let rb = self.find(b);
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        lo
    }

    /// Dense renumbering of the classes, ordered by representative.
    /// Returns the class index of each element and the number of classes.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut index = vec![usize::MAX; n];
        let mut count = 0;
        for x in 0..n {
            if self.find(x) == x {
                index[x] = count;
                count += 1;
            }
        }
        let out = (0..n).map(|x| index[self.find(x)]).collect();
        (out, count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_is_representative() {
        let mut uf = UnionFind::new(5);
        uf.union(4, 2);
        uf.union(2, 3);
        assert_eq!(uf.find(4), 2);
        uf.union(3, 0);
        assert_eq!(uf.find(4), 0);
        let (cls, n) = uf.classes();
        assert_eq!(n, 2);
        assert_eq!(cls, vec![0, 1, 0, 0, 0]);
    }
}
