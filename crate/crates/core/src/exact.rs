//! Exact maximum number of edges induced by `k` vertices of `C_n^s`.
//!
//! A set of `k` consecutive vertices is always optimal, so the maximum is the
//! edge count of an interval. When the interval does not interact with itself
//! around the cycle (`k + s < n`) and `k >= s + 1` the count has the closed
//! form `s*k - s(s+1)/2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::GraphSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    IntervalCount,
    CompleteGraph,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::IntervalCount => "interval_count",
            Method::CompleteGraph => "complete_graph",
        }
    }
}

/// Which standing assumptions hold for a given `(n, k, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegimeFlags {
    pub complete: bool,
    /// `n >= 2s + 2`.
    pub strict: bool,
    /// `k >= s + 2`.
    pub beyond_clique: bool,
    /// `k + s < n`.
    pub no_wrap: bool,
}

impl RegimeFlags {
    pub fn of(spec: &GraphSpec, k: usize) -> Self {
        Self {
            complete: spec.is_complete(),
            strict: spec.strict_regime(),
            beyond_clique: k >= spec.s() + 2,
            no_wrap: k + spec.s() < spec.n(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub value: u64,
    pub method: Method,
    pub regime: RegimeFlags,
}

pub(crate) fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Maximum of `e(U)` over all `k`-subsets `U` of `C_n^s`.
pub fn exact_max(spec: &GraphSpec, k: usize) -> Result<ExactResult> {
    let (n, s) = (spec.n(), spec.s());
    if n <= s {
        return Err(Error::OutsideDomain { n, s });
    }
    if k < 1 || k > n {
        return Err(Error::CardinalityOutOfRange { k, n });
    }
    let regime = RegimeFlags::of(spec, k);

    if spec.is_complete() {
        return Ok(ExactResult {
            value: choose2(k as u64),
            method: Method::CompleteGraph,
            regime,
        });
    }

    if regime.no_wrap {
        let value = closed_form(spec, k)?;
        debug_assert_eq!(value, interval_count(spec, k));
        return Ok(ExactResult {
            value,
            method: Method::ClosedForm,
            regime,
        });
    }

    Ok(ExactResult {
        value: interval_count(spec, k),
        method: Method::IntervalCount,
        regime,
    })
}

fn interval_count(spec: &GraphSpec, k: usize) -> u64 {
    let interval = spec.interval(0, k).expect("k checked by caller");
    spec.edge_count(&interval).expect("same cycle length")
}

/// `s*k - s(s+1)/2`, valid when `k + s < n`.
///
/// For `k <= s + 1` the interval is a clique and `C(k, 2)` is returned; the
/// two agree at `k = s + 1`.
pub fn closed_form(spec: &GraphSpec, k: usize) -> Result<u64> {
    let (n, s) = (spec.n(), spec.s());
    if k < 1 || k > n {
        return Err(Error::CardinalityOutOfRange { k, n });
    }
    if k + s >= n {
        return Err(Error::OutOfRegime {
            what: "closed form",
            n,
            k,
            s,
        });
    }
    let (k, s) = (k as u64, s as u64);
    if k <= s + 1 {
        return Ok(choose2(k));
    }
    Ok(s * k - s * (s + 1) / 2)
}

/// Degrees of the vertices of `{0, ..., k-1}` inside that interval, in order.
///
/// Follows the two-case accounting: for `k >= 2s` the `s` outermost vertices
/// on each side have degrees `s, s+1, ..., 2s-1` and the interior ones `2s`;
/// for `k < 2s` the `k-s` outermost vertices on each side have degrees
/// `s, ..., k-1` and the middle `2s-k` vertices have degree `k-1`.
pub fn interval_degree_profile(spec: &GraphSpec, k: usize) -> Result<Vec<u64>> {
    let (n, s) = (spec.n(), spec.s());
    if k < 1 || k > n {
        return Err(Error::CardinalityOutOfRange { k, n });
    }
    if k + s >= n {
        return Err(Error::OutOfRegime {
            what: "interval degree profile",
            n,
            k,
            s,
        });
    }
    if k <= s {
        return Ok(vec![k as u64 - 1; k]);
    }

    let (outer, middle_len, middle_degree) = if k >= 2 * s {
        (s, k - 2 * s, 2 * s as u64)
    } else {
        (k - s, 2 * s - k, k as u64 - 1)
    };
    let rim: Vec<u64> = (1..=outer).map(|i| (s + i - 1) as u64).collect();

    let mut profile = Vec::with_capacity(k);
    profile.extend(rim.iter().copied());
    profile.extend(std::iter::repeat_n(middle_degree, middle_len));
    profile.extend(rim.iter().rev().copied());
    Ok(profile)
}
