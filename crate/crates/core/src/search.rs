//! Exhaustive maximiser search over `k`-subsets of `C_n^s`.
//!
//! Subsets are 64-bit masks. Vertices are added in increasing order and the
//! running edge count is updated with one masked popcount per vertex, so a
//! leaf costs O(1). With symmetry reduction vertex 0 is pinned: every subset
//! has a rotation containing 0 and edge counts are rotation invariant.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::GraphSpec;
use crate::subset::VertexSubset;

/// Widest cycle the mask-based enumerator supports.
pub const MAX_SEARCH_N: usize = 64;

/// Default cap on the number of subsets a search may visit: `C(31, 15)`,
/// i.e. every `k` is allowed for `n <= 32` with symmetry reduction.
pub const DEFAULT_BUDGET: u128 = 300_540_195;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "CYCLEPOW_BUDGET";

pub fn budget_from_env() -> u128 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of leaves the enumeration will visit (before any pruning).
pub fn projected_subsets(n: usize, k: usize, reduce_symmetry: bool) -> u128 {
    if reduce_symmetry {
        binomial(n.saturating_sub(1), k.saturating_sub(1))
    } else {
        binomial(n, k)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub reduce_symmetry: bool,
    /// Also count maximisers over all `C(n, k)` subsets.
    pub count_maximizers: bool,
    /// Skip branches that provably cannot reach the best value found so far.
    pub prune: bool,
    /// Worker cap; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub budget: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            reduce_symmetry: true,
            count_maximizers: false,
            prune: false,
            jobs: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub max_edges: u64,
    /// Lexicographically smallest maximiser in the enumerated space.
    pub witness: VertexSubset,
    /// Number of maximisers among all `C(n, k)` subsets, when requested.
    pub maximizer_count: Option<u64>,
    pub subsets_examined: u64,
    pub used_symmetry: bool,
}

pub fn brute_force_max(spec: &GraphSpec, k: usize, reduce_symmetry: bool) -> Result<SearchResult> {
    search(
        spec,
        k,
        &SearchOptions {
            reduce_symmetry,
            ..SearchOptions::default()
        },
    )
}

/// Number of `k`-subsets attaining the maximum, by full enumeration without
/// symmetry reduction.
pub fn count_maximizers(spec: &GraphSpec, k: usize) -> Result<u64> {
    let options = SearchOptions {
        reduce_symmetry: false,
        count_maximizers: true,
        ..SearchOptions::default()
    };
    Ok(search(spec, k, &options)?.maximizer_count.expect("requested"))
}

pub fn search(spec: &GraphSpec, k: usize, options: &SearchOptions) -> Result<SearchResult> {
    let n = spec.n();
    if k < 1 || k > n {
        return Err(Error::CardinalityOutOfRange { k, n });
    }
    if n > MAX_SEARCH_N {
        return Err(Error::SearchTooWide {
            n,
            limit: MAX_SEARCH_N,
        });
    }
    let projected = projected_subsets(n, k, options.reduce_symmetry);
    if projected > options.budget {
        return Err(Error::BudgetExceeded {
            projected,
            budget: options.budget,
        });
    }

    let run = || run_chunks(spec, k, options);
    let merged = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };

    let maximizer_count = options.count_maximizers.then(|| {
        if options.reduce_symmetry {
            // k·M = n·M0 by double counting (maximiser, member) pairs, since
            // each vertex lies in the same number M0 of maximisers.
            let total = merged.count * n as u64;
            debug_assert_eq!(total % k as u64, 0);
            total / k as u64
        } else {
            merged.count
        }
    });

    Ok(SearchResult {
        max_edges: merged.best,
        witness: VertexSubset::from_mask(n, merged.witness),
        maximizer_count,
        subsets_examined: merged.examined,
        used_symmetry: options.reduce_symmetry,
    })
}

/// Partial subset from which one worker enumerates all completions.
#[derive(Debug, Clone, Copy)]
struct Chunk {
    mask: u64,
    size: usize,
    edges: u64,
    next: usize,
}

#[derive(Debug, Clone, Copy, Default)]
struct ChunkOutcome {
    best: u64,
    witness: u64,
    count: u64,
    examined: u64,
    found: bool,
}

struct Enumerator<'a> {
    spec: &'a GraphSpec,
    neighbors: Vec<u64>,
    n: usize,
    k: usize,
    /// Upper bound on the edges any single vertex can add.
    per_vertex_cap: u64,
    prune: bool,
}

fn run_chunks(spec: &GraphSpec, k: usize, options: &SearchOptions) -> ChunkOutcome {
    let n = spec.n();
    let neighbors: Vec<u64> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| spec.adjacent(u, v))
                .fold(0u64, |m, u| m | 1 << u)
        })
        .collect();
    let en = Enumerator {
        spec,
        per_vertex_cap: spec.degree().min(k - 1) as u64,
        neighbors,
        n,
        k,
        prune: options.prune,
    };

    let chunks = en.chunks(options.reduce_symmetry);
    let outcomes: Vec<ChunkOutcome> = chunks.par_iter().map(|c| en.run(*c)).collect();

    // Chunks are in lexicographic order of their prefixes, so the first chunk
    // reaching the maximum holds the lexicographically smallest witness.
    let best = outcomes.iter().filter(|o| o.found).map(|o| o.best).max().expect("non-empty space");
    let mut merged = ChunkOutcome {
        best,
        found: true,
        ..ChunkOutcome::default()
    };
    let mut have_witness = false;
    for o in &outcomes {
        merged.examined += o.examined;
        if o.found && o.best == best {
            merged.count += o.count;
            if !have_witness {
                merged.witness = o.witness;
                have_witness = true;
            }
        }
    }
    merged
}

impl Enumerator<'_> {
    fn chunks(&self, reduce_symmetry: bool) -> Vec<Chunk> {
        let (n, k) = (self.n, self.k);
        if reduce_symmetry {
            let root = Chunk {
                mask: 1,
                size: 1,
                edges: 0,
                next: 1,
            };
            if k == 1 {
                return vec![root];
            }
            (1..=n - k + 1).map(|c| self.extend(root, c)).collect()
        } else {
            let empty = Chunk {
                mask: 0,
                size: 0,
                edges: 0,
                next: 0,
            };
            (0..=n - k).map(|c| self.extend(empty, c)).collect()
        }
    }

    fn extend(&self, chunk: Chunk, v: usize) -> Chunk {
        Chunk {
            mask: chunk.mask | 1 << v,
            size: chunk.size + 1,
            edges: chunk.edges + (self.neighbors[v] & chunk.mask).count_ones() as u64,
            next: v + 1,
        }
    }

    fn run(&self, chunk: Chunk) -> ChunkOutcome {
        let mut out = ChunkOutcome::default();
        self.descend(chunk, &mut out);
        out
    }

    fn descend(&self, node: Chunk, out: &mut ChunkOutcome) {
        if node.size == self.k {
            self.visit_leaf(node, out);
            return;
        }
        let remaining_after = (self.k - node.size - 1) as u64;
        let last = self.n - (self.k - node.size);
        for v in node.next..=last {
            let child = self.extend(node, v);
            if self.prune
                && out.found
                && child.edges + remaining_after * self.per_vertex_cap < out.best
            {
                continue;
            }
            self.descend(child, out);
        }
    }

    fn visit_leaf(&self, leaf: Chunk, out: &mut ChunkOutcome) {
        out.examined += 1;
        if cfg!(debug_assertions) && out.examined % 100 == 1 {
            let fresh = self
                .spec
                .edge_count(&VertexSubset::from_mask(self.n, leaf.mask))
                .expect("same cycle length");
            assert_eq!(leaf.edges, fresh, "incremental count drifted at {:#b}", leaf.mask);
        }
        if !out.found || leaf.edges > out.best {
            out.found = true;
            out.best = leaf.edges;
            out.witness = leaf.mask;
            out.count = 1;
        } else if leaf.edges == out.best {
            out.count += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, s: usize) -> GraphSpec {
        GraphSpec::new(n, s).unwrap()
    }

    #[test]
    fn small_maxima() {
        let r = brute_force_max(&g(6, 2), 3, false).unwrap();
        assert_eq!(r.max_edges, 3);
        assert_eq!(r.witness.to_vec(), vec![0, 1, 2]);
        assert_eq!(r.subsets_examined, 20);

        assert_eq!(brute_force_max(&g(9, 2), 4, true).unwrap().max_edges, 5);
        assert_eq!(brute_force_max(&g(9, 2), 4, false).unwrap().subsets_examined, 126);

        let r = brute_force_max(&g(5, 2), 5, true).unwrap();
        assert_eq!(r.max_edges, 10);
        assert_eq!(r.subsets_examined, 1);
    }

    #[test]
    fn single_vertex() {
        let r = brute_force_max(&g(7, 2), 1, true).unwrap();
        assert_eq!(r.max_edges, 0);
        assert_eq!(r.witness.to_vec(), vec![0]);
    }

    #[test]
    fn maximizer_counts() {
        // the triangles of K_6 minus a perfect matching: one vertex from each
        // antipodal pair, 2^3 of them
        assert_eq!(count_maximizers(&g(6, 2), 3).unwrap(), 8);
        assert_eq!(count_maximizers(&g(5, 2), 5).unwrap(), 1);
        assert_eq!(count_maximizers(&g(7, 1), 2).unwrap(), 7);
    }

    #[test]
    fn symmetric_count_matches_full_count() {
        for n in 3..=11 {
            for s in 1..n {
                for k in 1..=n {
                    let spec = g(n, s);
                    let opts = SearchOptions {
                        count_maximizers: true,
                        ..SearchOptions::default()
                    };
                    let reduced = search(&spec, k, &opts).unwrap();
                    assert_eq!(
                        reduced.maximizer_count.unwrap(),
                        count_maximizers(&spec, k).unwrap(),
                        "n={n} s={s} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let opts = SearchOptions {
            budget: 10,
            ..SearchOptions::default()
        };
        assert_eq!(
            search(&g(9, 2), 4, &opts),
            Err(Error::BudgetExceeded {
                projected: 56,
                budget: 10
            })
        );
        assert!(matches!(
            brute_force_max(&g(65, 2), 2, true),
            Err(Error::SearchTooWide { .. })
        ));
    }

    #[test]
    fn pruning_preserves_result() {
        for (n, s, k) in [(12, 2, 5), (13, 3, 6), (14, 1, 7), (10, 4, 4)] {
            let spec = g(n, s);
            let plain = search(&spec, k, &SearchOptions::default()).unwrap();
            let pruned = search(
                &spec,
                k,
                &SearchOptions {
                    prune: true,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert_eq!(plain.max_edges, pruned.max_edges);
            assert_eq!(plain.witness, pruned.witness);
            assert!(pruned.subsets_examined <= plain.subsets_examined);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(13, 6), 1716);
        assert_eq!(binomial(31, 15), DEFAULT_BUDGET);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(projected_subsets(6, 3, true), 10);
    }
}
