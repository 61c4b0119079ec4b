use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::connectivity::{is_connected_subset, is_connected_subset_union_find};
use super::graph::{LayeredGraph, SimpleGraph};
use crate::error::{Error, Result};

/// Upper bound on the number of vertices the exhaustive enumeration will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleCap(usize);

impl OracleCap {
    pub const DEFAULT: usize = 22;
    pub const MAX: usize = 26;

    pub fn new(cap: usize) -> Result<Self> {
        if cap == 0 || cap > Self::MAX {
            return Err(Error::Domain(format!(
                "oracle cap must be in 1..={}, got {cap}",
                Self::MAX
            )));
        }
        Ok(OracleCap(cap))
    }

    pub fn get(self) -> usize {
        self.0
    }

    fn admit(self, vertices: usize) -> Result<()> {
        if vertices > self.0 {
            Err(Error::OracleCap {
                vertices,
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for OracleCap {
    fn default() -> Self {
        OracleCap(Self::DEFAULT)
    }
}

const CHUNK_BITS: u32 = 14;

/// Folds `visit` over every nonempty subset of the low `bits` bits, split into
/// chunks that run on the rayon pool.
fn par_subsets<A, I, F, M>(bits: usize, init: I, visit: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, u64) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let total: u64 = 1u64 << bits;
    let chunk = 1u64 << CHUNK_BITS.min(bits as u32);
    let chunks = total / chunk;
    (0..chunks)
        .into_par_iter()
        .fold(&init, |mut acc, c| {
            let lo = (c * chunk).max(1);
            for set in lo..(c + 1) * chunk {
                visit(&mut acc, set);
            }
            acc
        })
        .reduce(&init, &merge)
}

fn add_vectors(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Sequential recount of [`census`] using the union-find connectivity test.
pub fn census_union_find(g: &SimpleGraph, cap: OracleCap) -> Result<CensusReport> {
    let v = g.vertices();
    cap.admit(v)?;
    let mut counts = vec![0u64; v];
    for set in 1..(1u64 << v) {
        if is_connected_subset_union_find(g, set) {
            counts[set.count_ones() as usize - 1] += 1;
        }
    }
    Ok(CensusReport::from_counts(&counts))
}

/// Connected-set counts of a graph, by size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    /// `by_size[t - 1]` is the number of connected sets with `t` vertices.
    pub by_size: Vec<BigInt>,
    pub count: BigInt,
    pub total_order: BigInt,
    pub average: BigRational,
}

impl CensusReport {
    fn from_counts(counts: &[u64]) -> Self {
        let by_size: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
        let count: BigInt = by_size.iter().sum();
        let total_order: BigInt = by_size
            .iter()
            .enumerate()
            .map(|(t, c)| c * BigInt::from(t + 1))
            .sum();
        let average = BigRational::new(total_order.clone(), count.clone());
        CensusReport {
            by_size,
            count,
            total_order,
            average,
        }
    }

    pub fn vertices(&self) -> usize {
        self.by_size.len()
    }

    /// Density `A / v`.
    pub fn density(&self) -> BigRational {
        &self.average / BigInt::from(self.vertices())
    }
}

/// Counts connected sets of `g` by checking every nonempty vertex subset.
pub fn census(g: &SimpleGraph, cap: OracleCap) -> Result<CensusReport> {
    let v = g.vertices();
    cap.admit(v)?;
    let counts = par_subsets(
        v,
        || vec![0u64; v],
        |acc, set| {
            if is_connected_subset(g, set) {
                acc[set.count_ones() as usize - 1] += 1;
            }
        },
        add_vectors,
    );
    Ok(CensusReport::from_counts(&counts))
}

/// Counts and order sums of connected sets of a layered graph, keyed by the
/// contiguous run of layers each set meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanCensus {
    layers: usize,
    counts: Vec<u64>,
    orders: Vec<u64>,
}

impl SpanCensus {
    fn index(&self, first: usize, len: usize) -> usize {
        assert!(first >= 1 && len >= 1 && first + len - 1 <= self.layers);
        (first - 1) * self.layers + (len - 1)
    }

    /// Number of connected sets meeting exactly layers `first..first+len`.
    pub fn count(&self, first: usize, len: usize) -> BigInt {
        BigInt::from(self.counts[self.index(first, len)])
    }

    /// Sum of orders of the sets counted by [`SpanCensus::count`].
    pub fn order_sum(&self, first: usize, len: usize) -> BigInt {
        BigInt::from(self.orders[self.index(first, len)])
    }

    pub fn layers(&self) -> usize {
        self.layers
    }
}

pub fn span_census(g: &LayeredGraph, cap: OracleCap) -> Result<SpanCensus> {
    let v = g.graph().vertices();
    cap.admit(v)?;
    let n = g.layers();
    let m = g.m();
    let graph = g.graph();
    let (counts, orders) = par_subsets(
        v,
        || (vec![0u64; n * n], vec![0u64; n * n]),
        |(counts, orders), set| {
            if is_connected_subset(graph, set) {
                let lo = set.trailing_zeros() as usize / m;
                let hi = (63 - set.leading_zeros() as usize) / m;
                let idx = lo * n + (hi - lo);
                counts[idx] += 1;
                orders[idx] += set.count_ones() as u64;
            }
        },
        |(a, b), (c, d)| (add_vectors(a, c), add_vectors(b, d)),
    );
    Ok(SpanCensus {
        layers: n,
        counts,
        orders,
    })
}

/// Count and order sum of the connected sets of layers `1..=k` that meet every
/// layer before `k` and meet layer `k` in exactly `footprint` (0-based positions).
pub fn footprint_census(
    g: &LayeredGraph,
    k: usize,
    footprint: &[usize],
    cap: OracleCap,
) -> Result<(BigInt, BigInt)> {
    let m = g.m();
    if k == 0 || k > g.layers() {
        return Err(Error::IndexOutOfRange {
            index: k,
            bound: g.layers(),
        });
    }
    if footprint.is_empty() {
        return Err(Error::Graph("footprint must be nonempty".into()));
    }
    let mut fp_mask = 0u64;
    for &pos in footprint {
        if pos >= m {
            return Err(Error::Graph(format!(
                "footprint position {pos} outside layer of size {m}"
            )));
        }
        let bit = 1u64 << g.vertex(k, pos);
        if fp_mask & bit != 0 {
            return Err(Error::Graph(format!("footprint position {pos} repeated")));
        }
        fp_mask |= bit;
    }
    cap.admit(k * m)?;

    let graph = g.graph();
    let below = (k - 1) * m;
    let layer_masks: Vec<u64> = (1..k).map(|l| g.layer_mask(l)).collect();
    let check = |lower: u64| -> Option<u32> {
        if !layer_masks.iter().all(|&lm| lower & lm != 0) {
            return None;
        }
        let set = lower | fp_mask;
        is_connected_subset(graph, set).then(|| set.count_ones())
    };

    let (count, orders) = if below == 0 {
        check(0).map_or((0, 0), |o| (1, o as u64))
    } else {
        par_subsets(
            below,
            || (0u64, 0u64),
            |acc, lower| {
                if let Some(o) = check(lower) {
                    acc.0 += 1;
                    acc.1 += o as u64;
                }
            },
            |a, b| (a.0 + b.0, a.1 + b.1),
        )
    };
    Ok((BigInt::from(count), BigInt::from(orders)))
}
