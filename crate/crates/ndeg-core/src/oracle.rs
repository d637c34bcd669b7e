//! Exhaustive ground truth over all labeled simple graphs at small `n`.
//!
//! Every characterization in this crate is checked against this module: it
//! enumerates all `2^C(n,2)` adjacency masks with its own bitset
//! representation and its own inline neighborhood-degree computation, so it
//! shares no code path with the builders and checks it vets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Mode};
use crate::profile::Profile;

/// Default exhaustive-search bound: `2^21` graphs at `n = 7`.
pub const DEFAULT_N_LIMIT: usize = 7;
/// Absolute bound; `n = 8` means `2^28` graphs and is opt-in.
pub const MAX_N_LIMIT: usize = 8;
/// Leader-function enumeration explodes past this.
pub const DLF_N_LIMIT: usize = 6;

/// A realizability question for the brute-force oracle.
#[derive(Debug, Clone)]
pub struct OracleQuery {
    pub profile: Profile,
    pub mode: Mode,
    pub require_connected: bool,
    pub n_limit: usize,
}

impl OracleQuery {
    pub fn new(profile: Profile, mode: Mode, require_connected: bool) -> Self {
        OracleQuery {
            profile,
            mode,
            require_connected,
            n_limit: DEFAULT_N_LIMIT,
        }
    }

    pub fn with_limit(mut self, n_limit: usize) -> Result<Self> {
        if n_limit > MAX_N_LIMIT {
            return Err(Error::LimitExceeded(format!(
                "oracle supports n <= {MAX_N_LIMIT}, asked for {n_limit}"
            )));
        }
        self.n_limit = n_limit;
        Ok(self)
    }
}

/// Adjacency bitsets for `n <= 8`, decoded from an edge mask whose bit `i`
/// is the i-th pair `(u, v)`, `u < v`, in lexicographic order.
#[derive(Clone, Copy)]
struct BitGraph {
    n: usize,
    adj: [u8; MAX_N_LIMIT],
}

impl BitGraph {
    fn from_mask(n: usize, mask: u64) -> Self {
        let mut adj = [0u8; MAX_N_LIMIT];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
                bit += 1;
            }
        }
        BitGraph { n, adj }
    }

    fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn has_isolated(&self) -> bool {
        (0..self.n).any(|v| self.adj[v] == 0)
    }

    /// Per-value multiplicities of the requested statistic, indexed by value;
    /// `None` when the statistic is undefined (open mode, isolated vertex).
    fn value_counts(&self, mode: Mode) -> Option<[usize; MAX_N_LIMIT]> {
        let mut degs = [0usize; MAX_N_LIMIT];
        for (v, d) in degs.iter_mut().enumerate().take(self.n) {
            *d = self.adj[v].count_ones() as usize;
        }
        let mut counts = [0usize; MAX_N_LIMIT];
        for v in 0..self.n {
            let mut best: Option<usize> = match mode {
                Mode::MaxOpen => None,
                _ => Some(degs[v]),
            };
            let mut nbrs = self.adj[v];
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                best = Some(match (best, mode) {
                    (None, _) => degs[w],
                    (Some(b), Mode::MinClosed) => b.min(degs[w]),
                    (Some(b), _) => b.max(degs[w]),
                });
            }
            counts[best?] += 1;
        }
        Some(counts)
    }

    /// Connectivity over vertices of positive degree.
    fn is_connected_ignoring_isolated(&self) -> bool {
        let live: u8 = (0..self.n)
            .filter(|&v| self.adj[v] != 0)
            .fold(0, |m, v| m | 1 << v);
        if live == 0 {
            return true;
        }
        let mut seen: u8 = 1 << live.trailing_zeros();
        loop {
            let mut next = seen;
            let mut cur = seen;
            while cur != 0 {
                let v = cur.trailing_zeros() as usize;
                cur &= cur - 1;
                next |= self.adj[v];
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen & live == live
    }

    fn to_graph(self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges)
    }
}

fn target_counts(p: &Profile, n: usize) -> Option<[usize; MAX_N_LIMIT]> {
    let mut counts = [0usize; MAX_N_LIMIT];
    counts[0] = p.isolated();
    for &(d, c) in p.blocks() {
        if d >= n {
            return None; // no vertex can have degree n-1 < d
        }
        counts[d] = c;
    }
    Some(counts)
}

fn check_size(n: usize, n_limit: usize) -> Result<()> {
    if n_limit > MAX_N_LIMIT {
        return Err(Error::LimitExceeded(format!(
            "oracle supports n <= {MAX_N_LIMIT}, asked for limit {n_limit}"
        )));
    }
    if n > n_limit {
        return Err(Error::LimitExceeded(format!(
            "profile length {n} exceeds the oracle limit {n_limit}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidParams("empty profile".into()));
    }
    Ok(())
}

/// First realization in mask order, or `None` when none of the `2^C(n,2)`
/// labeled graphs realizes the profile.
pub fn oracle_realizable(q: &OracleQuery) -> Result<Option<Graph>> {
    let n = q.profile.total_len();
    check_size(n, q.n_limit)?;
    if q.mode == Mode::MaxOpen && q.profile.isolated() > 0 {
        return Err(Error::InvalidParams(
            "degree-0 demands are undefined in the open model".into(),
        ));
    }
    let Some(target) = target_counts(&q.profile, n) else {
        return Ok(None);
    };
    let bits = n * (n - 1) / 2;
    for mask in 0..1u64 << bits {
        let g = BitGraph::from_mask(n, mask);
        match g.value_counts(q.mode) {
            Some(counts) if counts == target => {
                if q.require_connected && !g.is_connected_ignoring_isolated() {
                    continue;
                }
                return Ok(Some(g.to_graph()));
            }
            _ => {}
        }
    }
    Ok(None)
}

/// Every realization of the profile, in mask order.
pub fn oracle_all_witnesses(q: &OracleQuery) -> Result<Vec<Graph>> {
    let n = q.profile.total_len();
    check_size(n, q.n_limit)?;
    let Some(target) = target_counts(&q.profile, n) else {
        return Ok(Vec::new());
    };
    let bits = n * (n - 1) / 2;
    let mut out = Vec::new();
    for mask in 0..1u64 << bits {
        let g = BitGraph::from_mask(n, mask);
        if let Some(counts) = g.value_counts(q.mode) {
            if counts == target && (!q.require_connected || g.is_connected_ignoring_isolated()) {
                out.push(g.to_graph());
            }
        }
    }
    Ok(out)
}

/// The exact set of realizable isolated-free profiles of length `n`. Graphs
/// containing an isolated vertex are skipped in every mode: their closed
/// profiles carry degree-0 demands, which the census formulas exclude, and
/// their open profiles are undefined.
pub fn oracle_all_profiles(
    n: usize,
    mode: Mode,
    require_connected: bool,
    n_limit: usize,
) -> Result<BTreeSet<Profile>> {
    check_size(n, n_limit)?;
    let bits = n * (n - 1) / 2;
    let mut out = BTreeSet::new();
    for mask in 0..1u64 << bits {
        let g = BitGraph::from_mask(n, mask);
        if g.has_isolated() {
            continue;
        }
        if require_connected && !g.is_connected_ignoring_isolated() {
            continue;
        }
        let counts = g.value_counts(mode).expect("no isolated vertices");
        let mut blocks = Vec::new();
        for d in (1..n).rev() {
            if counts[d] > 0 {
                blocks.push((d, counts[d]));
            }
        }
        out.insert(Profile::new(blocks, 0).expect("descending by construction"));
    }
    Ok(out)
}

/// Ground truth for the disjoint leader-follower property: enumerates every
/// realization of the profile and, for each, the full product of leader
/// functions (all minimum-degree choices per vertex), searching for one with
/// disjoint leader and follower sets.
pub fn oracle_dlf(p: &Profile) -> Result<bool> {
    let n = p.total_len();
    check_size(n, DLF_N_LIMIT)?;
    let Some(target) = target_counts(p, n) else {
        return Ok(false);
    };
    let bits = n * (n - 1) / 2;
    for mask in 0..1u64 << bits {
        let g = BitGraph::from_mask(n, mask);
        match g.value_counts(Mode::MinClosed) {
            Some(counts) if counts == target => {}
            _ => continue,
        }
        // argmin sets over the closed neighborhood
        let mut choices: Vec<Vec<usize>> = Vec::with_capacity(n);
        for v in 0..n {
            let closed = g.adj[v] | 1 << v;
            let min_deg = (0..n)
                .filter(|&w| closed >> w & 1 == 1)
                .map(|w| g.deg(w))
                .min()
                .unwrap();
            choices.push(
                (0..n)
                    .filter(|&w| closed >> w & 1 == 1 && g.deg(w) == min_deg)
                    .collect(),
            );
        }
        if dlf_product(&choices, &mut vec![0; n], 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn dlf_product(choices: &[Vec<usize>], assigned: &mut Vec<usize>, v: usize) -> bool {
    let n = choices.len();
    if v == n {
        // disjoint iff every vertex picked as a leader picks itself
        return (0..n).all(|x| assigned[assigned[x]] == assigned[x]);
    }
    for &u in &choices[v] {
        assigned[v] = u;
        if dlf_product(choices, assigned, v + 1) {
            return true;
        }
    }
    false
}
