//! The cycle power `C_n^s`: vertices `Z/nZ`, edges between residues at cyclic
//! distance at most `s`.

use crate::error::{Error, Result};
use crate::subset::VertexSubset;

/// Parameters `(n, s)` of `C_n^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    n: usize,
    s: usize,
}

impl GraphSpec {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if n < 3 || s < 1 {
            return Err(Error::InvalidGraph { n, s });
        }
        Ok(Self { n, s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// Every cyclic distance is at most `s`, so the graph is `K_n`.
    pub fn is_complete(&self) -> bool {
        self.s >= self.n / 2
    }

    /// `n >= 2s + 2`: the clockwise and counterclockwise neighbourhoods of a
    /// vertex are disjoint and the clique number is `s + 1`.
    pub fn strict_regime(&self) -> bool {
        self.n >= 2 * self.s + 2
    }

    /// Common degree of every vertex.
    pub fn degree(&self) -> usize {
        if self.is_complete() {
            self.n - 1
        } else {
            2 * self.s
        }
    }

    /// Number of edges of the whole graph.
    pub fn edge_total(&self) -> u64 {
        self.n as u64 * self.degree() as u64 / 2
    }

    fn check_subset(&self, u: &VertexSubset) -> Result<()> {
        if u.n() != self.n {
            return Err(Error::LengthMismatch {
                subset_n: u.n(),
                graph_n: self.n,
            });
        }
        Ok(())
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        let d = d_cyclic(u, v, self.n);
        d >= 1 && d <= self.s
    }

    /// `N_+^U(u) = { v in U, v != u : d_plus(u, v) <= s }`.
    pub fn neighbors_plus(&self, u_set: &VertexSubset, u: usize) -> Result<VertexSubset> {
        self.neighbors_by(u_set, u, d_plus)
    }

    /// `N_-^U(u) = { v in U, v != u : d_minus(u, v) <= s }`.
    pub fn neighbors_minus(&self, u_set: &VertexSubset, u: usize) -> Result<VertexSubset> {
        self.neighbors_by(u_set, u, d_minus)
    }

    /// `N^U(u) = N_-^U(u) ∪ N_+^U(u)`.
    pub fn neighbors(&self, u_set: &VertexSubset, u: usize) -> Result<VertexSubset> {
        let mut out = self.neighbors_plus(u_set, u)?;
        for v in self.neighbors_minus(u_set, u)?.iter() {
            out.insert(v);
        }
        Ok(out)
    }

    fn neighbors_by(
        &self,
        u_set: &VertexSubset,
        u: usize,
        dist: fn(usize, usize, usize) -> usize,
    ) -> Result<VertexSubset> {
        self.check_subset(u_set)?;
        let u = u % self.n;
        if !u_set.contains(u) {
            return Err(Error::NotAMember { vertex: u });
        }
        Ok(VertexSubset::from_members(
            self.n,
            u_set
                .iter()
                .filter(|&v| v != u && dist(u, v, self.n) <= self.s),
        ))
    }

    /// Number of edges of the subgraph induced by `u_set`.
    ///
    /// Outside the complete regime the offsets `1..=s` and `n-s..n` are
    /// disjoint, so each edge `{u, u+t}` is counted once from its lower
    /// endpoint in the clockwise window of width `s`.
    pub fn edge_count(&self, u_set: &VertexSubset) -> Result<u64> {
        self.check_subset(u_set)?;
        let k = u_set.len() as u64;
        if self.is_complete() {
            return Ok(k * k.saturating_sub(1) / 2);
        }
        Ok(u_set
            .iter()
            .map(|u| u_set.count_window(u + 1, self.s) as u64)
            .sum())
    }

    /// `{start, start+1, ..., start+k-1} mod n`.
    pub fn interval(&self, start: usize, k: usize) -> Result<VertexSubset> {
        if k < 1 || k > self.n {
            return Err(Error::CardinalityOutOfRange { k, n: self.n });
        }
        Ok(VertexSubset::from_members(self.n, (0..k).map(|i| start % self.n + i)))
    }
}

/// `|i - j|` on canonical representatives in `[0, n)`.
pub fn d_plus(i: usize, j: usize, n: usize) -> usize {
    (i % n).abs_diff(j % n)
}

/// `n - |i - j|`; only meaningful for `i != j`.
pub fn d_minus(i: usize, j: usize, n: usize) -> usize {
    n - d_plus(i, j, n)
}

pub fn d_cyclic(i: usize, j: usize, n: usize) -> usize {
    let d = d_plus(i, j, n);
    d.min(n - d)
}
