use super::graph::SimpleGraph;

/// Whether `set` induces a connected subgraph, by bit-parallel flood fill from
/// its lowest vertex.
pub fn is_connected_subset(g: &SimpleGraph, set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut reached = set & set.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            next |= g.neighbors(f.trailing_zeros() as usize);
            f &= f - 1;
        }
        frontier = next & set & !reached;
        reached |= frontier;
    }
    reached == set
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Same predicate as [`is_connected_subset`], computed with a disjoint-set forest.
pub fn is_connected_subset_union_find(g: &SimpleGraph, set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut uf = UnionFind::new(g.vertices());
    let mut components = set.count_ones() as usize;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let mut nbrs = g.neighbors(v) & set & !((2u64 << v).wrapping_sub(1));
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            if uf.union(u, v) {
                components -= 1;
            }
        }
    }
    components == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::build_km_pn;
    use rand::{Rng, SeedableRng};

    #[test]
    fn square() {
        let g = build_km_pn(2, 2).unwrap().graph().clone();
        // 0-1 rung, 0-2 and 1-3 rails, 2-3 rung
        assert!(is_connected_subset(&g, 0b0011));
        assert!(is_connected_subset(&g, 0b0101));
        assert!(!is_connected_subset(&g, 0b1001));
        assert!(!is_connected_subset(&g, 0));
        assert!(is_connected_subset(&g, 0b1111));
        assert!(!is_connected_subset_union_find(&g, 0b1001));
        assert!(is_connected_subset_union_find(&g, 0b1000));
    }

    #[test]
    fn flood_fill_agrees_with_union_find_on_random_graphs() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        let mut checked = 0;
        while checked < 1000 {
            let v = rng.gen_range(1..=40);
            let mut g = SimpleGraph::new(v).unwrap();
            let p: f64 = rng.gen_range(0.02..0.4);
            for a in 0..v {
                for b in a + 1..v {
                    if rng.gen_bool(p) {
                        g.add_edge(a, b).unwrap();
                    }
                }
            }
            for _ in 0..50 {
                let set = rng.gen::<u64>() & g.all_vertices();
                assert_eq!(
                    is_connected_subset(&g, set),
                    is_connected_subset_union_find(&g, set),
                    "set {set:#x}"
                );
                checked += 1;
            }
        }
    }
}
