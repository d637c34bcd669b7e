//! Decision procedure and constructions for minimum closed-neighborhood-degree
//! profiles.
//!
//! The conditions evaluated on a profile `(d_l^{n_l}, ..., d_1^{n_1})`:
//!
//! * NC1 (necessary): `d_i <= n_1 + ... + n_i - 1` for every `i`.
//! * NC2 (necessary): `d_l <= sum_i floor(n_i d_i / (d_i + 1))`.
//! * SC (sufficient): `d_i <= sum_{j<=i} floor(n_j d_j / (d_j + 1))` for every `i`.
//! * NC3 (decides `l = 3` together with the others): SC at `i = 2`, or
//!   `d_3 + 1 <= n - (1 + ceil((d_2 - n_2) / d_1))`.
//!
//! For `l <= 2` the NC conditions are already complete; for `l = 3` the four
//! conditions above are; for `l >= 4` a gap remains between NC and SC and the
//! verdict can be `Unknown`.

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Mode, Realization};
use crate::profile::Profile;
use crate::Verdict;

fn floor_share(n: usize, d: usize) -> usize {
    n * d / (d + 1)
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `ceil(a / b)` for signed `a`, positive `b`.
fn ceil_div_i64(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

/// Condition-by-condition evaluation of a profile, plus the verdict.
#[derive(Debug, Clone)]
pub struct MinCheckReport {
    /// NC1 per block, in increasing degree order (index 0 is `i = 1`).
    pub nc1_per_i: Vec<bool>,
    pub nc2: bool,
    /// SC per block, increasing degree order.
    pub sc_per_i: Vec<bool>,
    /// The tri-sequence disjunction; present only when the profile has
    /// exactly three blocks.
    pub nc3: Option<bool>,
    pub verdict: Verdict,
}

impl MinCheckReport {
    pub fn nc1(&self) -> bool {
        self.nc1_per_i.iter().all(|&b| b)
    }

    pub fn sc(&self) -> bool {
        self.sc_per_i.iter().all(|&b| b)
    }
}

/// Evaluates NC1, NC2, SC (and NC3 when `l = 3`) and derives the verdict.
/// Degree-0 demands must already be stripped; the `isolated` field is ignored.
pub fn check(p: &Profile) -> MinCheckReport {
    let blocks = p.blocks_ascending();
    let ell = blocks.len();

    let mut nc1_per_i = Vec::with_capacity(ell);
    let mut sc_per_i = Vec::with_capacity(ell);
    let mut count_prefix = 0usize;
    let mut share_prefix = 0usize;
    for &(d, n) in &blocks {
        count_prefix += n;
        share_prefix += floor_share(n, d);
        nc1_per_i.push(d < count_prefix);
        sc_per_i.push(d <= share_prefix);
    }
    let nc2 = match blocks.last() {
        Some(&(d_top, _)) => d_top <= share_prefix,
        None => true,
    };

    // The second NC3 branch is constructive: the plain inequality
    // d3 + 1 <= n - (1 + ceil((d2 - n2) / d1)) admits profiles with no
    // realization (the exhaustive oracle refutes it at (3^3, 2^1, 1^3)), so
    // the branch additionally requires a feasible leader layout. Layout
    // existence implies the inequality.
    let nc3 =
        (ell == 3).then(|| sc_per_i[1] || tri_layout(&TriParams::from_blocks(&blocks)).is_some());

    let nc_all = nc1_per_i.iter().all(|&b| b) && nc2;
    let sc_all = sc_per_i.iter().all(|&b| b);
    let verdict = match ell {
        0 => Verdict::Realizable,
        1 | 2 => {
            if nc_all {
                Verdict::Realizable
            } else {
                Verdict::NotRealizable
            }
        }
        3 => {
            if nc_all && nc3.unwrap() {
                Verdict::Realizable
            } else {
                Verdict::NotRealizable
            }
        }
        _ => {
            if sc_all {
                Verdict::Realizable
            } else if !nc_all {
                Verdict::NotRealizable
            } else {
                Verdict::Unknown
            }
        }
    };

    MinCheckReport {
        nc1_per_i,
        nc2,
        sc_per_i,
        nc3,
        verdict,
    }
}

/// True iff the profile admits a realization with disjoint leader and
/// follower sets, which holds exactly when SC holds for every prefix.
pub fn check_dlf(p: &Profile) -> bool {
    check(p).sc()
}

/// Per-leader spoke targets of the uniform construction: `q` hubs of degree
/// `d` over `q*d - r` rim vertices, the first `r` rim slots shared between
/// hubs 0 and 1.
fn uniform_spokes(q: usize, d: usize, r: usize) -> Vec<Vec<usize>> {
    debug_assert!(r == 0 || q >= 2);
    debug_assert!(r <= d);
    (0..q)
        .map(|t| match t {
            0 => (0..d).collect(),
            1 => (0..r).chain(d..2 * d - r).collect(),
            _ => {
                let start = 2 * d - r + (t - 2) * d;
                (start..start + d).collect()
            }
        })
        .collect()
}

/// Adds the uniform-block structure for `(d^count)` over the given labels:
/// every vertex of `leaders` ends with degree exactly `d`, and `rim` is left
/// to be completed into a clique by the caller.
fn add_uniform_block(
    builder: &mut GraphBuilder,
    leaders: &[usize],
    rim: &[usize],
    d: usize,
    r: usize,
) {
    for (t, targets) in uniform_spokes(leaders.len(), d, r).into_iter().enumerate() {
        for slot in targets {
            builder.add_edge(leaders[t], rim[slot]);
        }
    }
}

fn add_clique(builder: &mut GraphBuilder, verts: &[usize]) {
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            builder.add_edge(u, v);
        }
    }
}

/// A uniform realization together with its designated hub set `A` (degree
/// exactly `d`, one per closed neighborhood) and clique set `B`.
#[derive(Debug, Clone)]
pub struct UniformRealization {
    pub realization: Realization,
    pub leaders: Vec<usize>,
    pub clique: Vec<usize>,
}

/// Realizes the single-block profile `(d^n)`; requires `n >= d + 1`.
pub fn build_uniform(n: usize, d: usize) -> Result<UniformRealization> {
    if d == 0 {
        return Err(Error::InvalidParams("degree must be at least 1".into()));
    }
    if n < d + 1 {
        return Err(Error::InvalidParams(format!(
            "(d^n) = ({d}^{n}) needs n >= d+1"
        )));
    }
    let q = ceil_div(n, d + 1);
    let r = q * (d + 1) - n;
    let leaders: Vec<usize> = (0..q).collect();
    let clique: Vec<usize> = (q..n).collect();

    let mut builder = GraphBuilder::new(n);
    add_uniform_block(&mut builder, &leaders, &clique, d, r);
    add_clique(&mut builder, &clique);

    let realization = Realization::new(builder.freeze(), Mode::MinClosed)?;
    let target = Profile::new(vec![(d, n)], 0)?;
    if realization.profile() != target {
        return Err(Error::Construction(format!(
            "uniform build for ({d}^{n}) produced {}",
            realization.profile()
        )));
    }
    Ok(UniformRealization {
        realization,
        leaders,
        clique,
    })
}

/// A leader function over a realization: `leader[v]` is a minimum-degree
/// vertex of `N[v]`.
#[derive(Debug, Clone)]
pub struct LeaderAssignment {
    pub leader: Vec<usize>,
}

impl LeaderAssignment {
    /// The set of vertices chosen as somebody's leader.
    pub fn leader_set(&self) -> Vec<usize> {
        let mut set: Vec<usize> = self.leader.clone();
        set.sort_unstable();
        set.dedup();
        set
    }

    /// The set of vertices that are not their own leader.
    pub fn follower_set(&self) -> Vec<usize> {
        (0..self.leader.len())
            .filter(|&v| self.leader[v] != v)
            .collect()
    }

    pub fn disjoint(&self) -> bool {
        let leaders = self.leader_set();
        self.follower_set()
            .iter()
            .all(|v| leaders.binary_search(v).is_err())
    }
}

#[derive(Debug, Clone)]
pub struct ScRealization {
    pub realization: Realization,
    pub leaders: LeaderAssignment,
}

/// Realizes any profile satisfying SC, with leader and follower sets
/// disjoint under the returned leader function.
pub fn build_sc(p: &Profile) -> Result<ScRealization> {
    if p.isolated() > 0 {
        return Err(Error::Precondition("strip degree-0 demands first".into()));
    }
    let report = check(p);
    if !report.sc() {
        let i = report.sc_per_i.iter().position(|&b| !b).unwrap() + 1;
        return Err(Error::Precondition(format!("SC fails at i={i} for {p}")));
    }
    let blocks = p.blocks_ascending();
    let n: usize = blocks.iter().map(|b| b.1).sum();
    let mut builder = GraphBuilder::new(n);
    let mut leader = vec![usize::MAX; n];
    let mut rim_all: Vec<usize> = Vec::new();
    let mut next = 0usize;

    for &(d, count) in &blocks {
        let q = ceil_div(count, d + 1);
        let hubs: Vec<usize> = (next..next + q).collect();
        let rim: Vec<usize> = (next + q..next + count).collect();
        next += count;

        for &h in &hubs {
            leader[h] = h;
        }
        if q > 1 {
            let r = q * (d + 1) - count;
            for (t, targets) in uniform_spokes(q, d, r).into_iter().enumerate() {
                for slot in targets {
                    builder.add_edge(hubs[t], rim[slot]);
                    if leader[rim[slot]] == usize::MAX {
                        leader[rim[slot]] = hubs[t];
                    }
                }
            }
        } else {
            let hub = hubs[0];
            for &v in &rim {
                builder.add_edge(hub, v);
                leader[v] = hub;
            }
            // top the hub up to degree d from earlier rims, lowest labels first
            let need = d + 1 - count;
            assert!(
                need <= rim_all.len(),
                "SC guarantees enough earlier rim vertices"
            );
            for &v in &rim_all[..need] {
                builder.add_edge(hub, v);
            }
        }
        rim_all.extend(&rim);
    }
    add_clique(&mut builder, &rim_all);

    let realization = Realization::new(builder.freeze(), Mode::MinClosed)?;
    if realization.profile() != p.without_isolated() {
        return Err(Error::Construction(format!(
            "SC build for {p} produced {}",
            realization.profile()
        )));
    }
    let leaders = LeaderAssignment { leader };
    if !leaders.disjoint() {
        return Err(Error::Construction("leader/follower sets intersect".into()));
    }
    Ok(ScRealization {
        realization,
        leaders,
    })
}

/// Parameters of a three-block profile, smallest degree first.
#[derive(Debug, Clone, Copy)]
struct TriParams {
    d1: usize,
    n1: usize,
    d2: usize,
    n2: usize,
    d3: usize,
    n3: usize,
}

impl TriParams {
    fn from_blocks(blocks: &[(usize, usize)]) -> Self {
        TriParams {
            d1: blocks[0].0,
            n1: blocks[0].1,
            d2: blocks[1].0,
            n2: blocks[1].1,
            d3: blocks[2].0,
            n3: blocks[2].1,
        }
    }

    fn total(&self) -> usize {
        self.n1 + self.n2 + self.n3
    }
}

/// A consistent wiring plan for the tri-sequence construction.
#[derive(Debug, Clone)]
struct TriLayout {
    num_leaders: usize,
    /// Leaders adjacent to the bridge vertex `w`.
    alpha: usize,
    /// Low-value vertices inside the core that leaders must reach.
    y_sz: usize,
    /// Size of the uniform core `Z`.
    core_n: usize,
    /// Core vertices the bridge attaches to.
    t_sz: usize,
    /// Per-leader target indices into the `y` set.
    y_edges: Vec<Vec<usize>>,
    /// Edges among the leaders absorbing surplus degree budget.
    ll_edges: Vec<(usize, usize)>,
}

/// Searches for a tri-sequence wiring with the given leader count.
fn tri_layout_with(params: &TriParams, num_leaders: usize) -> Option<TriLayout> {
    let TriParams {
        d1,
        n1,
        d2,
        n2,
        d3,
        n3,
    } = *params;
    // w is the unique degree-d2 vertex; alpha of the leaders attach to it
    let alpha = d2 as i64 + num_leaders as i64 + 1 - n1 as i64 - n2 as i64;
    if alpha < 0 || alpha > num_leaders.min(d2) as i64 {
        return None;
    }
    let alpha = alpha as usize;
    // when no leader reaches w, w itself realizes value d2 instead of d1
    let w_takes_d1 = alpha >= 1;
    let y_sz = n1.checked_sub(num_leaders + usize::from(w_takes_d1))?;
    let core_n = params.total() - 1 - num_leaders;
    if core_n < d3 + 1 {
        return None;
    }
    let t_sz = core_n - n3;

    // leader budgets after the optional edge to w; all of it must be spent
    // on y vertices (covering every one) or on other leaders
    let budgets: Vec<usize> = (0..num_leaders)
        .map(|j| d1 - usize::from(j < alpha))
        .collect();
    let (y_edges, ll_edges) = assign_leader_edges(&budgets, y_sz)?;
    Some(TriLayout {
        num_leaders,
        alpha,
        y_sz,
        core_n,
        t_sz,
        y_edges,
        ll_edges,
    })
}

/// First feasible tri-sequence wiring, scanning the leader count upward.
/// `None` means the profile has no realization of this shape; together with
/// the other conditions that decides non-realizability.
fn tri_layout(params: &TriParams) -> Option<TriLayout> {
    let TriParams { d1, n2, d2, n1, .. } = *params;
    let leaders_min = ceil_div_i64(d2 as i64 - n2 as i64, d1 as i64).max(1) as usize;
    (leaders_min..=n1).find_map(|k| tri_layout_with(params, k))
}

fn construct_tri(params: &TriParams, layout: &TriLayout) -> Result<Realization> {
    let TriParams { d3, .. } = *params;
    let TriLayout {
        num_leaders,
        alpha,
        y_sz,
        core_n,
        t_sz,
        ref y_edges,
        ref ll_edges,
    } = *layout;

    // labels: leaders, then the bridge w, then the core Z
    let w = num_leaders;
    let z0 = num_leaders + 1;
    let mut builder = GraphBuilder::new(num_leaders + 1 + core_n);

    let q = ceil_div(core_n, d3 + 1);
    let r = q * (d3 + 1) - core_n;
    let hubs: Vec<usize> = (z0..z0 + q).collect();
    let rim: Vec<usize> = (z0 + q..z0 + core_n).collect();
    add_uniform_block(&mut builder, &hubs, &rim, d3, r);
    add_clique(&mut builder, &rim);

    // attach w inside the core, preferring vertices of degree above d3 so
    // that every untouched core vertex keeps a degree-d3 witness
    let mut pool: Vec<usize> = (z0..z0 + core_n).filter(|&v| builder.deg(v) > d3).collect();
    pool.extend((z0..z0 + core_n).filter(|&v| builder.deg(v) == d3));
    let attach = &pool[..t_sz];
    for &v in attach {
        builder.add_edge(w, v);
    }
    let y_verts = &attach[..y_sz];

    for j in 0..alpha {
        builder.add_edge(j, w);
    }
    for (j, ys) in y_edges.iter().enumerate() {
        for &y in ys {
            builder.add_edge(j, y_verts[y]);
        }
    }
    for &(a, b) in ll_edges {
        builder.add_edge(a, b);
    }
    Realization::new(builder.freeze(), Mode::MinClosed)
}

/// Realizes a three-block profile that meets the tri-sequence conditions but
/// fails SC at `i = 2` (profiles with SC go through [`build_sc`]).
pub fn build_tri(p: &Profile) -> Result<Realization> {
    if p.isolated() > 0 {
        return Err(Error::Precondition("strip degree-0 demands first".into()));
    }
    if p.num_blocks() != 3 {
        return Err(Error::Precondition(format!(
            "{p} does not have exactly 3 blocks"
        )));
    }
    let report = check(p);
    if report.verdict != Verdict::Realizable {
        return Err(Error::Precondition(format!(
            "tri-sequence conditions fail for {p}"
        )));
    }
    if report.sc_per_i[1] {
        return Err(Error::Precondition(
            "SC holds at i=2; use the SC builder".into(),
        ));
    }

    let params = TriParams::from_blocks(&p.blocks_ascending());
    let leaders_min =
        ceil_div_i64(params.d2 as i64 - params.n2 as i64, params.d1 as i64).max(1) as usize;
    for num_leaders in leaders_min..=params.n1 {
        let Some(layout) = tri_layout_with(&params, num_leaders) else {
            continue;
        };
        let realization = construct_tri(&params, &layout)?;
        if realization.profile() == *p {
            return Ok(realization);
        }
    }
    Err(Error::Construction(format!(
        "no tri-sequence layout produced {p}"
    )))
}

/// Per-leader target indices plus the edges among the leaders themselves.
type LeaderWiring = (Vec<Vec<usize>>, Vec<(usize, usize)>);

/// Distributes leader budgets so that every one of `y_sz` targets receives at
/// least one edge. Surplus budget goes to further target edges or to edges
/// among the leaders themselves; the split between the two is searched, since
/// a tight target set can force leader-leader edges. Returns per-leader
/// target indices and the leader-leader edges, or `None` when infeasible.
fn assign_leader_edges(budgets: &[usize], y_sz: usize) -> Option<LeaderWiring> {
    let k = budgets.len();
    let total: usize = budgets.iter().sum();
    if total < y_sz {
        return None;
    }
    // cover each target once, cycling through the leaders by descending
    // budget so the tight ones keep their slack
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&j| std::cmp::Reverse(budgets[j]));
    let mut own: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut pos = 0;
    for y in 0..y_sz {
        loop {
            let j = order[pos % k];
            pos += 1;
            if own[j].len() < budgets[j] {
                own[j].push(y);
                break;
            }
        }
    }
    let surplus: Vec<usize> = (0..k).map(|j| budgets[j] - own[j].len()).collect();
    let room: Vec<usize> = (0..k).map(|j| y_sz - own[j].len()).collect();
    let extra_max: Vec<usize> = (0..k).map(|j| surplus[j].min(room[j])).collect();
    let redirectable: usize = extra_max.iter().sum();

    'redirect: for moved in 0..=redirectable {
        // push `moved` units from target edges to leader-leader edges,
        // keeping the leader-leader degrees as balanced as possible
        let mut extra = extra_max.clone();
        let mut ll_deg: Vec<usize> = (0..k).map(|j| surplus[j] - extra[j]).collect();
        for _ in 0..moved {
            let Some(j) = (0..k)
                .filter(|&j| extra[j] > 0)
                .min_by_key(|&j| (ll_deg[j], j))
            else {
                continue 'redirect;
            };
            extra[j] -= 1;
            ll_deg[j] += 1;
        }
        let Some(ll_edges) = havel_hakimi(&ll_deg) else {
            continue 'redirect;
        };
        let mut y_edges = own.clone();
        for j in 0..k {
            let mut want = extra[j];
            for y in 0..y_sz {
                if want == 0 {
                    break;
                }
                if !y_edges[j].contains(&y) {
                    y_edges[j].push(y);
                    want -= 1;
                }
            }
            if want > 0 {
                continue 'redirect;
            }
        }
        return Some((y_edges, ll_edges));
    }
    None
}

/// Constructs a simple graph with the given degree sequence by the
/// largest-first rule, or `None` when the sequence is not graphical.
fn havel_hakimi(degrees: &[usize]) -> Option<Vec<(usize, usize)>> {
    let k = degrees.len();
    let mut rem = degrees.to_vec();
    let mut edges = Vec::new();
    loop {
        let top = (0..k).max_by_key(|&j| (rem[j], std::cmp::Reverse(j)))?;
        if rem[top] == 0 {
            return Some(edges);
        }
        let need = rem[top];
        rem[top] = 0;
        let mut partners: Vec<usize> = (0..k).filter(|&j| rem[j] > 0).collect();
        partners.sort_by_key(|&j| std::cmp::Reverse(rem[j]));
        if partners.len() < need {
            return None;
        }
        for &j in &partners[..need] {
            rem[j] -= 1;
            edges.push(ordered(top, j));
        }
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Inflates every count by the factor `gamma = (d_1 + 1) / d_1`; the result
/// of an NC1-satisfying profile always satisfies SC.
pub fn gamma_inflate(p: &Profile) -> Result<Profile> {
    let report = check(p);
    if !report.nc1() {
        return Err(Error::Precondition(format!("NC1 fails for {p}")));
    }
    let Some((d1, _)) = p.bottom_block() else {
        return Ok(p.clone());
    };
    let blocks = p
        .blocks()
        .iter()
        .map(|&(d, n)| (d, ceil_div(n * (d1 + 1), d1)))
        .collect();
    Profile::new(blocks, p.isolated())
}

/// Dispatches to the right builder for a min-closed profile (degree-0
/// demands must be stripped).
pub fn build(p: &Profile) -> Result<Realization> {
    let report = check(p);
    match report.verdict {
        Verdict::NotRealizable => Err(Error::NotRealizable(format!(
            "{p} violates the necessary conditions (NC1 {}, NC2 {}{})",
            report.nc1(),
            report.nc2,
            match report.nc3 {
                Some(b) => format!(", NC3 {b}"),
                None => String::new(),
            }
        ))),
        Verdict::Unknown => Err(Error::Undecided(format!(
            "{p} has 4 or more blocks, meets NC but not SC; no decision procedure is known"
        ))),
        Verdict::Realizable => {
            if report.sc() {
                Ok(build_sc(p)?.realization)
            } else {
                build_tri(p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Profile {
        text.parse().unwrap()
    }

    #[test]
    fn check_fig1_min_profile() {
        let report = check(&p("2^3 1^2"));
        assert!(report.nc1());
        assert!(report.nc2, "2 <= floor(2/2) + floor(6/3)");
        assert!(report.sc());
        assert_eq!(report.verdict, Verdict::Realizable);
    }

    #[test]
    fn check_fig2_tri_profile() {
        let report = check(&p("3^3 2^1 1^2"));
        assert!(!report.sc_per_i[1], "SC fails at i=2: 2 > 1");
        assert_eq!(report.nc3, Some(true), "4 <= 6 - (1 + 1)");
        assert_eq!(report.verdict, Verdict::Realizable);
    }

    #[test]
    fn check_nc1_failure() {
        let report = check(&p("2^2"));
        assert!(!report.nc1_per_i[0]);
        assert_eq!(report.verdict, Verdict::NotRealizable);
    }

    #[test]
    fn check_unknown_needs_four_blocks() {
        // NC holds, SC fails at i=2, and four blocks leave the gap open
        let report = check(&p("4^4 3^1 2^1 1^2"));
        assert!(report.nc1() && report.nc2);
        assert!(!report.sc());
        assert_eq!(report.verdict, Verdict::Unknown);
    }

    #[test]
    fn uniform_triangle() {
        let u = build_uniform(3, 2).unwrap();
        assert_eq!(u.realization.profile(), p("2^3"));
    }

    #[test]
    fn uniform_five() {
        let u = build_uniform(5, 2).unwrap();
        assert_eq!(u.leaders.len(), 2);
        assert_eq!(u.clique.len(), 3);
        assert_eq!(u.realization.profile(), p("2^5"));
        for &a in &u.leaders {
            assert_eq!(u.realization.graph.deg(a), 2);
        }
    }

    #[test]
    fn uniform_rejects_small_n() {
        assert!(build_uniform(2, 2).is_err());
        assert!(build_uniform(4, 0).is_err());
    }

    #[test]
    fn sc_builder_examples() {
        for text in ["2^3 1^2", "2^5", "3^4 2^3"] {
            let prof = p(text);
            let built = build_sc(&prof).unwrap();
            assert!(built
                .realization
                .graph
                .verify(&prof, Mode::MinClosed, false));
            assert!(built.leaders.disjoint());
        }
    }

    #[test]
    fn sc_builder_leader_witness() {
        let prof = p("3^4 2^3");
        let built = build_sc(&prof).unwrap();
        let g = &built.realization.graph;
        for v in 0..g.n() {
            let lead = built.leaders.leader[v];
            assert!(lead == v || g.has_edge(v, lead), "leader must be in N[v]");
            let min_deg = g
                .neighbors(v)
                .iter()
                .map(|&w| g.deg(w as usize))
                .chain(std::iter::once(g.deg(v)))
                .min()
                .unwrap();
            assert_eq!(g.deg(lead), min_deg);
        }
    }

    #[test]
    fn sc_builder_rejects_violation() {
        assert!(matches!(
            build_sc(&p("3^3 2^1 1^2")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn tri_builder_fig2() {
        let prof = p("3^3 2^1 1^2");
        let r = build_tri(&prof).unwrap();
        assert_eq!(r.graph.n(), 6);
        assert!(r.graph.verify(&prof, Mode::MinClosed, false));
    }

    #[test]
    fn tri_builder_wider_low_block() {
        let prof = p("3^4 2^1 1^2");
        let r = build_tri(&prof).unwrap();
        assert!(r.graph.verify(&prof, Mode::MinClosed, false));
    }

    #[test]
    fn tri_builder_rejects_nc_failure() {
        // NC2 fails: 4 > floor(2/2) + 0 + 0
        assert!(build_tri(&p("4^1 2^1 1^2")).is_err());
    }

    #[test]
    fn tri_check_refuses_the_unbuildable_corner() {
        // all four plain tri-sequence conditions hold here, but no graph
        // realizes the profile (oracle-verified at n=7); the constructive
        // NC3 branch must reject it
        let prof = p("3^3 2^1 1^3");
        let report = check(&prof);
        assert!(report.nc1() && report.nc2);
        assert!(!report.sc_per_i[1]);
        assert_eq!(report.nc3, Some(false));
        assert_eq!(report.verdict, Verdict::NotRealizable);
        assert!(build_tri(&prof).is_err());
    }

    #[test]
    #[ignore = "enumerates all 2^21 graphs on 7 vertices"]
    fn tri_check_matches_oracle_n7() {
        use crate::oracle::oracle_all_profiles;
        let truth = oracle_all_profiles(7, Mode::MinClosed, false, 7).unwrap();
        for prof in crate::census::all_profiles(7) {
            if prof.num_blocks() > 3 {
                continue;
            }
            let verdict = check(&prof).verdict;
            assert_ne!(verdict, Verdict::Unknown);
            assert_eq!(
                verdict == Verdict::Realizable,
                truth.contains(&prof),
                "check disagrees with the oracle on {prof}"
            );
        }
    }

    #[test]
    fn tri_builder_alpha_zero_corner() {
        // w has no room for a leader edge; the layout search must still succeed
        let prof = p("4^3 3^1 2^4");
        let report = check(&prof);
        assert_eq!(report.verdict, Verdict::Realizable);
        assert!(!report.sc_per_i[1]);
        let r = build_tri(&prof).unwrap();
        assert!(r.graph.verify(&prof, Mode::MinClosed, false));
    }

    #[test]
    fn tri_builder_sweep() {
        // every admissible tri-sequence in a broad parameter box must build
        let mut built = 0;
        for d1 in 1..=6usize {
            for d2 in d1 + 1..=7 {
                for d3 in d2 + 1..=8 {
                    for n1 in 1..=9usize {
                        for n2 in 1..=6usize {
                            for n3 in 1..=6usize {
                                let prof =
                                    Profile::new(vec![(d3, n3), (d2, n2), (d1, n1)], 0).unwrap();
                                let report = check(&prof);
                                if report.verdict != Verdict::Realizable || report.sc_per_i[1] {
                                    continue;
                                }
                                let r = build_tri(&prof)
                                    .unwrap_or_else(|e| panic!("build_tri failed for {prof}: {e}"));
                                assert!(
                                    r.graph.verify(&prof, Mode::MinClosed, false),
                                    "bad graph for {prof}"
                                );
                                built += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(built > 50, "sweep exercised only {built} profiles");
    }

    #[test]
    fn gamma_inflate_examples() {
        assert_eq!(gamma_inflate(&p("3^3 2^1 1^2")).unwrap(), p("3^6 2^2 1^4"));
        assert_eq!(gamma_inflate(&p("2^3")).unwrap(), p("2^5"));
        assert!(gamma_inflate(&p("2^2")).is_err(), "NC1 fails");
    }

    #[test]
    fn gamma_inflate_yields_sc() {
        assert!(check(&gamma_inflate(&p("3^3 2^1 1^2")).unwrap()).sc());
        assert!(check(&gamma_inflate(&p("2^5")).unwrap()).sc());
    }

    #[test]
    fn dlf_examples() {
        assert!(check_dlf(&p("2^3 1^2")));
        assert!(!check_dlf(&p("3^3 2^1 1^2")));
        for d in 1..6 {
            let prof = Profile::new(vec![(d, d + 1)], 0).unwrap();
            assert!(check_dlf(&prof), "single block (d^(d+1)) always has SC");
        }
    }

    #[test]
    fn dispatch_builds_or_reports() {
        assert!(build(&p("2^3 1^2")).is_ok());
        assert!(build(&p("3^3 2^1 1^2")).is_ok());
        assert!(matches!(build(&p("2^2")), Err(Error::NotRealizable(_))));
        assert!(matches!(
            build(&p("4^4 3^1 2^1 1^2")),
            Err(Error::Undecided(_))
        ));
    }
}
