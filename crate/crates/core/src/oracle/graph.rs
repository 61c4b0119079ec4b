use crate::error::{Error, Result};

/// Largest vertex count a packed adjacency row can hold.
pub const MAX_VERTICES: usize = 64;

/// Undirected simple graph on at most 64 vertices, one `u64` adjacency row per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(vertices: usize) -> Result<Self> {
        if vertices == 0 || vertices > MAX_VERTICES {
            return Err(Error::Graph(format!(
                "vertex count must be in 1..={MAX_VERTICES}, got {vertices}"
            )));
        }
        Ok(SimpleGraph {
            adj: vec![0; vertices],
        })
    }

    pub fn vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertices();
        if u >= n || v >= n {
            return Err(Error::Graph(format!(
                "edge {u}-{v} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::Graph(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn all_vertices(&self) -> u64 {
        if self.vertices() == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertices()) - 1
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.vertices();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Graph("relabeling is not a permutation".into()));
        }
        let mut g = SimpleGraph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if self.has_edge(u, v) {
                    g.add_edge(perm[u], perm[v])?;
                }
            }
        }
        Ok(g)
    }

    /// Parses `u v` pairs, one per line, with 0-based vertex ids. Blank lines and
    /// lines starting with `#` are skipped. The vertex count is one more than the
    /// largest id mentioned.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.ok_or_else(|| {
                    Error::Graph(format!("line {}: expected two vertex ids", lineno + 1))
                })?
                .parse::<usize>()
                .map_err(|e| Error::Graph(format!("line {}: {e}", lineno + 1)))
            };
            let u = parse(parts.next())?;
            let v = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(Error::Graph(format!(
                    "line {}: trailing tokens",
                    lineno + 1
                )));
            }
            edges.push((u, v));
        }
        let vertices = edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .ok_or_else(|| Error::Graph("edge list is empty".into()))?;
        let mut g = SimpleGraph::new(vertices)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

/// A graph made of `n` layers of `m` vertices each. Vertex `(layer - 1) * m + pos`
/// sits at position `pos` (0-based) of layer `layer` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    graph: SimpleGraph,
    m: usize,
    n: usize,
}

impl LayeredGraph {
    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn layers(&self) -> usize {
        self.n
    }

    pub fn vertex(&self, layer: usize, pos: usize) -> usize {
        debug_assert!((1..=self.n).contains(&layer) && pos < self.m);
        (layer - 1) * self.m + pos
    }

    /// 1-based layer of vertex `v`.
    pub fn layer_of(&self, v: usize) -> usize {
        v / self.m + 1
    }

    pub fn layer_mask(&self, layer: usize) -> u64 {
        let row = if self.m == 64 {
            u64::MAX
        } else {
            (1u64 << self.m) - 1
        };
        row << ((layer - 1) * self.m)
    }
}

/// `K_m × P_n`: complete layers joined position-by-position to their neighbours.
pub fn build_km_pn(m: usize, n: usize) -> Result<LayeredGraph> {
    if m == 0 || n == 0 {
        return Err(Error::Domain(format!(
            "m and n must be at least 1 (got m={m}, n={n})"
        )));
    }
    let vertices = m
        .checked_mul(n)
        .filter(|&v| v <= MAX_VERTICES)
        .ok_or_else(|| {
            Error::Graph(format!(
                "K_{m} x P_{n} has more than {MAX_VERTICES} vertices"
            ))
        })?;
    let mut graph = SimpleGraph::new(vertices)?;
    for layer in 0..n {
        for a in 0..m {
            for b in a + 1..m {
                graph.add_edge(layer * m + a, layer * m + b)?;
            }
            if layer + 1 < n {
                graph.add_edge(layer * m + a, (layer + 1) * m + a)?;
            }
        }
    }
    Ok(LayeredGraph { graph, m, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        let c4 = build_km_pn(2, 2).unwrap();
        assert_eq!(c4.graph().vertices(), 4);
        assert_eq!(c4.graph().edge_count(), 4);
        assert!((0..4).all(|v| c4.graph().neighbors(v).count_ones() == 2));

        let prism = build_km_pn(3, 2).unwrap();
        assert_eq!(prism.graph().edge_count(), 9);

        let h = build_km_pn(3, 3).unwrap();
        assert_eq!(h.graph().vertices(), 9);
        assert_eq!(h.graph().edge_count(), 15);
        assert_eq!(h.layer_of(h.vertex(3, 2)), 3);
        assert_eq!(h.layer_mask(2), 0b111_000);
    }

    #[test]
    fn edge_counts_formula() {
        for m in 1..=6 {
            for n in 1..=6 {
                let g = build_km_pn(m, n).unwrap();
                assert_eq!(g.graph().edge_count(), n * m * (m - 1) / 2 + (n - 1) * m);
            }
        }
        assert!(build_km_pn(0, 1).is_err());
        assert!(build_km_pn(9, 8).is_err());
    }

    #[test]
    fn edge_list_parsing() {
        let g = SimpleGraph::from_edge_list("# square\n0 1\n1 2\n\n2 3\n3 0\n").unwrap();
        assert_eq!(g.vertices(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!(SimpleGraph::from_edge_list("0 0\n").is_err());
        assert!(SimpleGraph::from_edge_list("0\n").is_err());
        assert!(SimpleGraph::from_edge_list("0 1 2\n").is_err());
        assert!(SimpleGraph::from_edge_list("a b\n").is_err());
        assert!(SimpleGraph::from_edge_list("\n# nothing\n").is_err());
        assert!(SimpleGraph::from_edge_list("0 70\n").is_err());
    }

    #[test]
    fn relabel_preserves_edges() {
        let g = build_km_pn(2, 3).unwrap().graph().clone();
        let h = g.relabel(&[5, 4, 3, 2, 1, 0]).unwrap();
        assert_eq!(h.edge_count(), g.edge_count());
        assert!(h.has_edge(5, 4));
        assert!(g.relabel(&[0, 0, 1, 2, 3, 4]).is_err());
    }
}
