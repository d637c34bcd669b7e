//! Simple undirected graphs over labels `[0, n)`, neighborhood-degree
//! extraction, verification against profiles, and text serialization.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::profile::Profile;

/// Which neighborhood-degree statistic a profile talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Minimum degree over the closed neighborhood `N[v]`.
    MinClosed,
    /// Maximum degree over the closed neighborhood `N[v]`.
    MaxClosed,
    /// Maximum degree over the open neighborhood `N(v)`; undefined on
    /// isolated vertices.
    MaxOpen,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min-closed" => Ok(Mode::MinClosed),
            "max-closed" => Ok(Mode::MaxClosed),
            "max-open" => Ok(Mode::MaxOpen),
            other => Err(Error::Parse(format!(
                "unknown mode `{other}` (expected min-closed, max-closed or max-open)"
            ))),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::MinClosed => "min-closed",
            Mode::MaxClosed => "max-closed",
            Mode::MaxOpen => "max-open",
        })
    }
}

/// Output formats for [`Graph::serialize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// `"n m"` header then one `"u v"` line per edge, 0-indexed, `u < v`,
    /// lexicographically sorted.
    EdgeList,
    /// Undirected DOT with bare integer node ids.
    Dot,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "dot" => Ok(Format::Dot),
            other => Err(Error::UnknownFormat(other.into())),
        }
    }
}

/// Mutable adjacency under construction. Freeze into a [`Graph`] when done.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<Vec<u32>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Appends `k` fresh isolated vertices and returns their labels.
    pub fn add_vertices(&mut self, k: usize) -> Vec<usize> {
        let start = self.adj.len();
        self.adj.resize(start + k, Vec::new());
        (start..start + k).collect()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop on vertex {u}");
        assert!(
            u < self.adj.len() && v < self.adj.len(),
            "edge endpoint out of range"
        );
        debug_assert!(!self.has_edge(u, v), "duplicate edge ({u}, {v})");
        self.adj[u].push(v as u32);
        self.adj[v].push(u as u32);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].contains(&(b as u32))
    }

    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn freeze(mut self) -> Graph {
        let mut m = 0;
        for list in &mut self.adj {
            list.sort_unstable();
            debug_assert!(list.windows(2).all(|w| w[0] != w[1]), "duplicate edge");
            m += list.len();
        }
        Graph {
            adj: self.adj,
            m: m / 2,
        }
    }
}

/// An immutable labeled simple undirected graph. All queries are read-only
/// and safe to call concurrently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    /// Builds a graph directly from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v);
        }
        b.freeze()
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                let v = v as usize;
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Per-vertex neighborhood-degree values for the given mode.
    ///
    /// Fails with `InvalidParams` in `MaxOpen` mode if any vertex is isolated
    /// (the maximum over an empty open neighborhood is undefined).
    pub fn ndeg_values(&self, mode: Mode) -> Result<Vec<usize>> {
        let degs: Vec<usize> = (0..self.n()).map(|v| self.deg(v)).collect();
        let mut values = Vec::with_capacity(self.n());
        for v in 0..self.n() {
            let over_open = self.adj[v].iter().map(|&w| degs[w as usize]);
            let value = match mode {
                Mode::MinClosed => over_open.chain(std::iter::once(degs[v])).min().unwrap(),
                Mode::MaxClosed => over_open.chain(std::iter::once(degs[v])).max().unwrap(),
                Mode::MaxOpen => over_open.max().ok_or_else(|| {
                    Error::InvalidParams(format!(
                        "vertex {v} is isolated; max-open is undefined on it"
                    ))
                })?,
            };
            values.push(value);
        }
        Ok(values)
    }

    /// The multiset of [`Graph::ndeg_values`] compressed into a [`Profile`].
    pub fn profile_of(&self, mode: Mode) -> Result<Profile> {
        Ok(Profile::from_values(&self.ndeg_values(mode)?))
    }

    /// Plain whole-graph connectivity (single vertex counts as connected).
    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let reached = self.bfs_from(0);
        reached.iter().all(|&r| r)
    }

    /// Connectivity over the non-isolated part only: true when every vertex
    /// of positive degree lies in one component. Vacuously true when the
    /// graph has no edges.
    pub fn is_connected_ignoring_isolated(&self) -> bool {
        let Some(start) = (0..self.n()).find(|&v| self.deg(v) > 0) else {
            return true;
        };
        let reached = self.bfs_from(start);
        (0..self.n()).all(|v| self.deg(v) == 0 || reached[v])
    }

    fn bfs_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut queue = std::collections::VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                let w = w as usize;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// True iff the graph's profile for `mode` equals `p` and, when
    /// requested, the graph is connected ignoring isolated-realized vertices.
    pub fn verify(&self, p: &Profile, mode: Mode, require_connected: bool) -> bool {
        match self.profile_of(mode) {
            Ok(actual) => {
                actual == *p && (!require_connected || self.is_connected_ignoring_isolated())
            }
            Err(_) => false,
        }
    }

    /// Subgraph induced by the given vertex set; `keep[i]` is the new label
    /// of old vertex `verts[i]`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut relabel = vec![usize::MAX; self.n()];
        for (new, &old) in verts.iter().enumerate() {
            relabel[old] = new;
        }
        let mut b = GraphBuilder::new(verts.len());
        for (new_u, &old_u) in verts.iter().enumerate() {
            for &w in &self.adj[old_u] {
                let new_w = relabel[w as usize];
                if new_w != usize::MAX && new_u < new_w {
                    b.add_edge(new_u, new_w);
                }
            }
        }
        b.freeze()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|list| {
            list.iter()
                .map(|&w| w + offset as u32)
                .collect::<Vec<u32>>()
        }));
        Graph {
            adj,
            m: self.m + other.m,
        }
    }

    pub fn serialize(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::EdgeList => {
                let _ = writeln!(out, "{} {}", self.n(), self.m());
                for (u, v) in self.edges() {
                    let _ = writeln!(out, "{u} {v}");
                }
            }
            Format::Dot => {
                out.push_str("graph {\n");
                for v in 0..self.n() {
                    let _ = writeln!(out, "    {v};");
                }
                for (u, v) in self.edges() {
                    let _ = writeln!(out, "    {u} -- {v};");
                }
                out.push_str("}\n");
            }
        }
        out
    }

    /// Parses the edge-list format produced by [`Graph::serialize`].
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad edge-list header".into()))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad edge-list header".into()))?;
        let mut b = GraphBuilder::new(n);
        let mut count = 0;
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line `{line}`")))?;
            if u == v || u >= n || v >= n {
                return Err(Error::Parse(format!("invalid edge ({u}, {v}) for n={n}")));
            }
            if b.has_edge(u, v) {
                return Err(Error::Parse(format!("duplicate edge ({u}, {v})")));
            }
            b.add_edge(u, v);
            count += 1;
        }
        if count != m {
            return Err(Error::Parse(format!(
                "header promises {m} edges but {count} were given"
            )));
        }
        Ok(b.freeze())
    }
}

/// A graph together with the mode it realizes a profile under, the
/// recomputed per-vertex achieved values, and its connectivity.
#[derive(Debug, Clone)]
pub struct Realization {
    pub graph: Graph,
    pub mode: Mode,
    /// `assignment[v]` is the recomputed neighborhood-degree value of `v`.
    pub assignment: Vec<usize>,
    pub connected: bool,
}

impl Realization {
    pub fn new(graph: Graph, mode: Mode) -> Result<Self> {
        let assignment = graph.ndeg_values(mode)?;
        let connected = graph.is_connected_ignoring_isolated();
        Ok(Realization {
            graph,
            mode,
            assignment,
            connected,
        })
    }

    /// The profile this realization achieves.
    pub fn profile(&self) -> Profile {
        Profile::from_values(&self.assignment)
    }
}
