//! Decision and constructions for maximum open-neighborhood-degree profiles.
//!
//! The layer machinery is shared with the closed model; what changes is the
//! seed graph. Uniform blocks need `k >= d + 2` here, `(d^{d+1})` is seeded
//! from a twin-hub gadget whose list is only pseudo-valid, and `(d^d)` alone
//! is impossible, so that case borrows one vertex from the next layer.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Mode, Realization};
use crate::maxndeg::{add_layer, build_caterpillar, VertexList};
use crate::profile::Profile;

/// Connected realization of `(d^k)` in the open model; needs `d >= 2` and
/// `k >= d + 2`. Also returns an independent set of `d` vertices with two of
/// degree 1 and the rest of degree at most 2.
pub fn build_uniform_open(d: usize, k: usize) -> Result<(Realization, Vec<usize>)> {
    if d < 2 {
        return Err(Error::InvalidParams(
            "(1^k) is open-realizable connected only as (1^2)".into(),
        ));
    }
    if k < d + 2 {
        return Err(Error::InvalidParams(format!(
            "open uniform ({d}^{k}) needs k >= d+2"
        )));
    }
    // with k >= d+2 the spine has at least two internal vertices, so every
    // vertex sees a degree-d neighbor even without counting itself
    let (closed, support) = build_caterpillar(d, k)?;
    let realization = Realization::new(closed.graph, Mode::MaxOpen)?;
    let target = Profile::new(vec![(d, k)], 0)?;
    if realization.profile() != target {
        return Err(Error::Construction(format!(
            "open uniform ({d}^{k}) produced {}",
            realization.profile()
        )));
    }
    Ok((realization, support))
}

/// Connected realization of `(d^d, dbar^1)` for `d > dbar >= 2`: a hub `z`
/// over `d-1` spokes, a secondary vertex `y` over the first `dbar-1` of them,
/// and the edge `z-y`. Returns a valid list of size `d-1`.
pub fn build_d_dbar(d: usize, dbar: usize) -> Result<(Realization, VertexList)> {
    if !(dbar >= 2 && d > dbar) {
        return Err(Error::InvalidParams(format!(
            "(d^d, dbar^1) needs d > dbar >= 2, got d={d}, dbar={dbar}"
        )));
    }
    let z = 0;
    let y = d;
    let mut builder = GraphBuilder::new(d + 1);
    for v in 1..d {
        builder.add_edge(z, v);
    }
    for v in 1..dbar {
        builder.add_edge(y, v);
    }
    builder.add_edge(z, y);

    let list = VertexList::valid((1..d).rev().collect());
    let realization = Realization::new(builder.freeze(), Mode::MaxOpen)?;
    let target = Profile::new(vec![(d, d), (dbar, 1)], 0)?;
    if realization.profile() != target {
        return Err(Error::Construction(format!(
            "(d^d, dbar^1) build produced {}",
            realization.profile()
        )));
    }
    Ok((realization, list))
}

/// Connected realization of `(d^{d+1})` for `d >= 2`: two adjacent hubs both
/// joined to `d-1` shared companions. No realization of this profile has a
/// degree-1 vertex, so the returned list is only pseudo-valid (all degree 2).
pub fn build_d_plus1(d: usize) -> Result<(Realization, VertexList)> {
    if d < 2 {
        return Err(Error::InvalidParams("(d^{d+1}) needs d >= 2".into()));
    }
    let mut builder = GraphBuilder::new(d + 1);
    builder.add_edge(0, 1);
    for w in 2..=d {
        builder.add_edge(0, w);
        builder.add_edge(1, w);
    }
    let list = VertexList::pseudo_valid((2..=d).collect());
    let realization = Realization::new(builder.freeze(), Mode::MaxOpen)?;
    let target = Profile::new(vec![(d, d + 1)], 0)?;
    if realization.profile() != target {
        return Err(Error::Construction(format!(
            "(d^(d+1)) build produced {}",
            realization.profile()
        )));
    }
    Ok((realization, list))
}

/// Connected realization of `(d^{d+1}, 2^k)` for `d >= 3`, `k >= 2`; the
/// `k = 1` profile is not realizable at all.
pub fn build_dplus1_2k(d: usize, k: usize) -> Result<Realization> {
    if d < 3 || k < 2 {
        return Err(Error::InvalidParams(format!(
            "(d^(d+1), 2^k) needs d >= 3 and k >= 2, got d={d}, k={k}"
        )));
    }
    let u1 = 0;
    let u2 = d + 1;
    let mut builder = GraphBuilder::new(d + k + 1);
    for v in 1..=d {
        builder.add_edge(u1, v);
    }
    for v in 2..=d {
        builder.add_edge(u2, v);
    }
    let v_extra = d + 2;
    builder.add_edge(u2, v_extra);
    // a path of k-2 further value-2 vertices hanging off v_extra
    let mut prev = v_extra;
    for a in d + 3..d + k + 1 {
        builder.add_edge(prev, a);
        prev = a;
    }

    let realization = Realization::new(builder.freeze(), Mode::MaxOpen)?;
    let target = Profile::new(vec![(d, d + 1), (2, k)], 0)?;
    if realization.profile() != target || !realization.connected {
        return Err(Error::Construction(format!(
            "(d^(d+1), 2^k) build produced {}",
            realization.profile()
        )));
    }
    Ok(realization)
}

/// Connected open-model characterization: `d_l <= min(n_l, n-1)` and
/// `d_1 >= 2` and the profile is not `(d^{d+1}, 2^1)`; or the profile is the
/// star profile `(d^d, 1^1)`; or it is `(1^2)`.
pub fn check_connected_open(p: &Profile) -> bool {
    if p.isolated() > 0 {
        return false;
    }
    if *p == two_matched() || p.is_star_open() {
        return true;
    }
    let (Some((dl, nl)), Some((d1, _))) = (p.top_block(), p.bottom_block()) else {
        return false;
    };
    dl <= nl.min(p.total_len() - 1) && d1 >= 2 && !p.is_d_plus1_2_1()
}

fn two_matched() -> Profile {
    Profile::new(vec![(1, 2)], 0).unwrap()
}

/// Connected realization of an open-model profile.
pub fn build_connected_open(p: &Profile) -> Result<Realization> {
    if !check_connected_open(p) {
        return Err(Error::Precondition(format!(
            "{p} fails the connected open-model characterization"
        )));
    }
    if *p == two_matched() {
        return Realization::new(Graph::from_edges(2, &[(0, 1)]), Mode::MaxOpen);
    }
    if p.is_star_open() {
        let d = p.max_degree().unwrap();
        let star = Graph::from_edges(d + 1, &(1..=d).map(|v| (0, v)).collect::<Vec<_>>());
        return Realization::new(star, Mode::MaxOpen);
    }
    if p.num_blocks() == 2 && p.blocks()[1].0 == 2 {
        let (d, n) = p.top_block().unwrap();
        if n == d + 1 {
            // (d^{d+1}, 2^k): the pseudo-valid list cannot feed a d = 2 layer
            return build_dplus1_2k(d, p.blocks()[1].1);
        }
    }

    let blocks = p.blocks().to_vec(); // descending
    let (d_top, n_top) = blocks[0];
    let mut counts: Vec<usize> = blocks.iter().map(|b| b.1).collect();

    let (mut builder, mut list);
    if n_top >= d_top + 2 {
        let (r, support) = build_uniform_open(d_top, n_top)?;
        builder = to_builder(&r.graph);
        list = VertexList::valid(support);
    } else if n_top == d_top + 1 {
        let (r, pseudo) = build_d_plus1(d_top)?;
        if blocks.len() == 1 {
            return Ok(r);
        }
        builder = to_builder(&r.graph);
        list = pseudo;
    } else {
        // n_top == d_top: seed realizes (d^d, d_{l-1}^1), borrowing one
        // vertex from the next layer
        debug_assert_eq!(n_top, d_top);
        debug_assert!(blocks.len() >= 2, "the check rejects a bare (d^d)");
        let (r, valid) = build_d_dbar(d_top, blocks[1].0)?;
        builder = to_builder(&r.graph);
        list = valid;
        counts[1] -= 1;
    }

    for (j, &(d, _)) in blocks.iter().enumerate().skip(1) {
        let k = counts[j];
        if k > 0 {
            let trimmed = list.truncated(d - 1);
            list = add_layer(&mut builder, &trimmed, k, d)?;
        }
        // layers with every vertex already supplied (the borrowed one) are
        // skipped; the list simply carries over for further truncation
    }

    let realization = Realization::new(builder.freeze(), Mode::MaxOpen)?;
    if realization.profile() != *p || !realization.connected {
        return Err(Error::Construction(format!(
            "open layered build for {p} produced {}",
            realization.profile()
        )));
    }
    Ok(realization)
}

fn to_builder(g: &Graph) -> GraphBuilder {
    let mut b = GraphBuilder::new(g.n());
    for (u, v) in g.edges() {
        b.add_edge(u, v);
    }
    b
}

/// General open-model characterization: some split `sigma = sigma1 + sigma2`
/// with `sigma1` empty or connected-realizable and `sigma2` a matching
/// `(1^{2a})` or a star plus matching `(d^d, 1^{2a+1})`.
pub fn check_general_open(p: &Profile) -> bool {
    if p.isolated() > 0 {
        return false;
    }
    find_split(p).is_some()
}

fn find_split(p: &Profile) -> Option<(Profile, Profile)> {
    p.split_candidates()
        .into_iter()
        .find(|(s1, _)| s1.is_empty() || check_connected_open(s1))
}

/// Realization of an open-model profile without the connectivity
/// requirement: a connected core, an optional star, and a matching.
pub fn build_general_open(p: &Profile) -> Result<Realization> {
    if p.isolated() > 0 {
        return Err(Error::Precondition(
            "degree-0 demands are undefined in the open model".into(),
        ));
    }
    let Some((sigma1, sigma2)) = find_split(p) else {
        if p.is_d_plus1_2_1() {
            return Err(Error::NotRealizable(format!(
                "{p} matches the excluded family (d^(d+1), 2^1)"
            )));
        }
        return Err(Error::NotRealizable(format!("{p} admits no valid split")));
    };

    let mut graph = if sigma1.is_empty() {
        Graph::empty(0)
    } else {
        build_connected_open(&sigma1)?.graph
    };
    if let Some((d, _)) = sigma2.top_block().filter(|&(d, _)| d >= 2) {
        let star = Graph::from_edges(d + 1, &(1..=d).map(|v| (0, v)).collect::<Vec<_>>());
        graph = graph.disjoint_union(&star);
    }
    let matching_edges = sigma2.count_of(1) / 2 * 2;
    // (d^d, 1^{2a+1}) spends one 1-demand on the star leaf itself
    let alpha = if sigma2.top_block().is_some_and(|(d, _)| d >= 2) {
        (sigma2.count_of(1) - 1) / 2
    } else {
        matching_edges / 2
    };
    if alpha > 0 {
        let matching = Graph::from_edges(
            2 * alpha,
            &(0..alpha).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>(),
        );
        graph = graph.disjoint_union(&matching);
    }

    let realization = Realization::new(graph, Mode::MaxOpen)?;
    if realization.profile() != *p {
        return Err(Error::Construction(format!(
            "general open build for {p} produced {}",
            realization.profile()
        )));
    }
    Ok(realization)
}
