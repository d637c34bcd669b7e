//! Decision and constructions for maximum closed-neighborhood-degree
//! profiles.
//!
//! The layer machinery: a realization is grown in decreasing degree order,
//! each layer consuming an ordered independent "list" of low-degree vertices
//! from the previous layer and producing a new one.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Mode, Realization};
use crate::profile::Profile;

/// Validity class of a vertex list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListClass {
    /// `deg(a_i) <= i` for each position (1-based) and the vertices form an
    /// independent set.
    Valid,
    /// Every vertex has degree exactly 2, independent set.
    PseudoValid,
}

/// An ordered independent vertex list consumed by [`add_layer`]. Validity is
/// relative to the host graph the list was produced from.
#[derive(Debug, Clone)]
pub struct VertexList {
    pub vertices: Vec<usize>,
    pub class: ListClass,
}

impl VertexList {
    pub fn valid(vertices: Vec<usize>) -> Self {
        VertexList {
            vertices,
            class: ListClass::Valid,
        }
    }

    pub fn pseudo_valid(vertices: Vec<usize>) -> Self {
        VertexList {
            vertices,
            class: ListClass::PseudoValid,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Prefix of the list; any prefix of a valid list stays valid.
    pub fn truncated(&self, len: usize) -> VertexList {
        VertexList {
            vertices: self.vertices[..len].to_vec(),
            class: self.class,
        }
    }

    /// Checks the class conditions against a graph under construction.
    pub fn check_in(&self, builder: &GraphBuilder) -> bool {
        let independent = self.vertices.iter().enumerate().all(|(i, &u)| {
            self.vertices[i + 1..]
                .iter()
                .all(|&v| !builder.has_edge(u, v))
        });
        let degrees_ok = match self.class {
            ListClass::Valid => self
                .vertices
                .iter()
                .enumerate()
                .all(|(i, &v)| builder.deg(v) <= i + 1),
            ListClass::PseudoValid => self.vertices.iter().all(|&v| builder.deg(v) == 2),
        };
        independent && degrees_ok
    }
}

/// Caterpillar layout over local labels `0..k`: a spine with pendant
/// vertices, plus `r` pendants shared between the first two internal spine
/// vertices when `k` falls short of a full caterpillar.
pub(crate) struct CaterpillarPlan {
    pub edges: Vec<(usize, usize)>,
    /// Independent support set, ascending degree; entry 0 is the spine
    /// endpoint `s_0` (degree 1).
    pub support: Vec<usize>,
}

pub(crate) fn caterpillar_plan(d: usize, k: usize) -> Result<CaterpillarPlan> {
    if d == 0 {
        return Err(Error::InvalidParams("degree must be at least 1".into()));
    }
    if k < d + 1 {
        return Err(Error::InvalidParams(format!(
            "(d^k) = ({d}^{k}) needs k >= d+1"
        )));
    }
    if d == 1 {
        if k != 2 {
            return Err(Error::InvalidParams(
                "(1^k) has a connected realization only for k = 2".into(),
            ));
        }
        return Ok(CaterpillarPlan {
            edges: vec![(0, 1)],
            support: vec![0],
        });
    }

    let alpha = (k - 2).div_ceil(d - 1);
    let r = 2 + alpha * (d - 1) - k;
    debug_assert!(r <= d.saturating_sub(2));
    debug_assert!(r == 0 || alpha >= 2);

    let mut edges = Vec::with_capacity(k);
    for i in 0..=alpha {
        edges.push((i, i + 1));
    }
    let mut next = alpha + 2;
    let merged: Vec<usize> = (next..next + r).collect();
    for &m in &merged {
        edges.push((1, m));
        edges.push((2, m));
    }
    next += r;
    let mut own_first: Vec<usize> = Vec::new();
    for i in 1..=alpha {
        let count = if i <= 2 { d - 2 - r } else { d - 2 };
        for leaf in next..next + count {
            edges.push((i, leaf));
            if i == 1 {
                own_first.push(leaf);
            }
        }
        next += count;
    }
    debug_assert_eq!(next, k);

    let mut support = vec![0, alpha + 1];
    support.extend(own_first); // degree 1
    support.extend(merged); // degree 2
    support.truncate(d);
    Ok(CaterpillarPlan { edges, support })
}

/// Connected realization of the uniform profile `(d^k)` for `k >= d+1`,
/// together with an independent set `S` of `d` low-degree vertices
/// (ascending degree; for `d >= 2` its first two entries have degree 1).
pub fn build_caterpillar(d: usize, k: usize) -> Result<(Realization, Vec<usize>)> {
    let plan = caterpillar_plan(d, k)?;
    let mut builder = GraphBuilder::new(k);
    for &(u, v) in &plan.edges {
        builder.add_edge(u, v);
    }
    let realization = Realization::new(builder.freeze(), Mode::MaxClosed)?;
    let target = Profile::new(vec![(d, k)], 0)?;
    if realization.profile() != target || !realization.connected {
        return Err(Error::Construction(format!(
            "caterpillar for ({d}^{k}) produced {}",
            realization.profile()
        )));
    }
    Ok((realization, plan.support))
}

/// Adds `k` new vertices of neighborhood value exactly `d` to the graph under
/// construction, consuming the list `L` (size `d-1`) and returning a valid
/// list of size `d-2` for the next, smaller layer.
///
/// `L` must be valid, or pseudo-valid with `d >= 3`. Works for the closed and
/// the open maximum alike.
pub fn add_layer(
    builder: &mut GraphBuilder,
    list: &VertexList,
    k: usize,
    d: usize,
) -> Result<VertexList> {
    if d < 2 {
        return Err(Error::InvalidParams("add_layer needs d >= 2".into()));
    }
    if k == 0 {
        return Err(Error::InvalidParams("add_layer needs k >= 1".into()));
    }
    if list.len() != d - 1 {
        return Err(Error::InvalidParams(format!(
            "list has {} vertices, add_layer with d={d} needs {}",
            list.len(),
            d - 1
        )));
    }
    if list.class == ListClass::PseudoValid && d < 3 {
        return Err(Error::Precondition(
            "a pseudo-valid list requires d >= 3".into(),
        ));
    }
    debug_assert!(
        list.check_in(builder),
        "input list fails its class conditions"
    );

    if k < d {
        add_layer_small(builder, &list.vertices, k, d)
    } else {
        add_layer_large(builder, &list.vertices, k, d)
    }
}

/// The `k <= d-1` branch: hang the new vertices off the tail of the list,
/// then complete the degree of the last-touched list vertex to exactly `d`.
fn add_layer_small(
    builder: &mut GraphBuilder,
    list: &[usize],
    k: usize,
    d: usize,
) -> Result<VertexList> {
    let w = builder.add_vertices(k);
    let mut count = k;
    let mut idx = d - 1; // 1-based position in the list
    let istar = loop {
        let a = list[idx - 1];
        let r = (d - builder.deg(a)).min(count);
        for t in 0..r {
            builder.add_edge(a, w[count - 1 - t]);
        }
        count -= r;
        if count == 0 {
            break idx;
        }
        if idx == 1 {
            return Err(Error::Construction("list capacity exhausted".into()));
        }
        idx -= 1;
    };

    let a_star = list[istar - 1];
    for j in (1..d).rev() {
        if builder.deg(a_star) == d {
            break;
        }
        if j < istar {
            builder.add_edge(list[j - 1], a_star);
        } else if j > istar {
            // a fresh degree-1 companion of a later list vertex
            let fresh = builder
                .neighbors(list[j - 1])
                .iter()
                .map(|&x| x as usize)
                .filter(|&x| x >= w[0] && builder.deg(x) == 1)
                .min();
            if let Some(x) = fresh {
                builder.add_edge(a_star, x);
            }
        }
    }
    if builder.deg(a_star) != d {
        return Err(Error::Construction(format!(
            "could not raise the pivot's degree to {d}"
        )));
    }

    let mut seq = w;
    seq.extend_from_slice(&list[..istar - 1]);
    if seq.len() < d - 2 {
        return Err(Error::Construction("new list is too short".into()));
    }
    seq.truncate(d - 2);
    Ok(VertexList::valid(seq))
}

/// The `k >= d` branch: realize `(d^{k+1})` over the new vertices plus the
/// head of the list, then complete the head's degree from the rest of the
/// list.
fn add_layer_large(
    builder: &mut GraphBuilder,
    list: &[usize],
    k: usize,
    d: usize,
) -> Result<VertexList> {
    let a1 = list[0];
    let plan = caterpillar_plan(d, k + 1)?;
    let w = builder.add_vertices(k);
    let map = |x: usize| if x == 0 { a1 } else { w[x - 1] };
    for &(u, v) in &plan.edges {
        builder.add_edge(map(u), map(v));
    }
    let mut need = d.saturating_sub(builder.deg(a1));
    for &a in &list[1..] {
        if need == 0 {
            break;
        }
        builder.add_edge(a, a1);
        need -= 1;
    }
    if builder.deg(a1) != d {
        return Err(Error::Construction(format!(
            "could not raise the head's degree to {d}"
        )));
    }
    let new_list: Vec<usize> = plan
        .support
        .iter()
        .filter(|&&x| x != 0)
        .map(|&x| map(x))
        .take(d - 2)
        .collect();
    Ok(VertexList::valid(new_list))
}

/// Connected closed-model characterization: `n_l >= d_l + 1` and `d_1 >= 2`,
/// or the profile is exactly `(1^2)`.
pub fn check_connected_closed(p: &Profile) -> bool {
    if p.isolated() > 0 {
        return false;
    }
    if *p == two_matched() {
        return true;
    }
    match (p.top_block(), p.bottom_block()) {
        (Some((dl, nl)), Some((d1, _))) => nl > dl && d1 >= 2,
        _ => false,
    }
}

/// General closed-model characterization: `d_l <= n_l - 1`, and `d_1 >= 2` or
/// `n_1` even. Degree-0 demands are allowed; they are realized by appended
/// isolated vertices.
pub fn check_general_closed(p: &Profile) -> bool {
    match (p.top_block(), p.bottom_block()) {
        (Some((dl, nl)), Some((d1, n1))) => dl < nl && (d1 >= 2 || n1 % 2 == 0),
        _ => true, // only isolated demands
    }
}

fn two_matched() -> Profile {
    Profile::new(vec![(1, 2)], 0).unwrap()
}

/// One constructed layer: the degree it realizes and its vertex labels.
#[derive(Debug, Clone)]
pub struct Layer {
    pub degree: usize,
    pub vertices: Vec<usize>,
}

/// Connected realization of a closed-model profile, layer by layer in
/// decreasing degree order.
pub fn build_connected_closed(p: &Profile) -> Result<Realization> {
    Ok(build_connected_closed_traced(p)?.0)
}

/// Same as [`build_connected_closed`] but also reports which vertices each
/// layer contributed, for instrumented prefix checks.
pub fn build_connected_closed_traced(p: &Profile) -> Result<(Realization, Vec<Layer>)> {
    if !check_connected_closed(p) {
        return Err(Error::Precondition(format!(
            "{p} fails the connected closed-model characterization"
        )));
    }
    if *p == two_matched() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let layers = vec![Layer {
            degree: 1,
            vertices: vec![0, 1],
        }];
        return Ok((Realization::new(g, Mode::MaxClosed)?, layers));
    }

    let blocks = p.blocks(); // descending
    let (d_top, n_top) = blocks[0];
    let plan = caterpillar_plan(d_top, n_top)?;
    let mut builder = GraphBuilder::new(n_top);
    for &(u, v) in &plan.edges {
        builder.add_edge(u, v);
    }
    let mut layers = vec![Layer {
        degree: d_top,
        vertices: (0..n_top).collect(),
    }];

    if blocks.len() > 1 {
        let mut list = VertexList::valid(plan.support[..blocks[1].0 - 1].to_vec());
        for (j, &(d, n)) in blocks.iter().enumerate().skip(1) {
            let before = builder.n();
            let new_list = add_layer(&mut builder, &list, n, d)?;
            layers.push(Layer {
                degree: d,
                vertices: (before..builder.n()).collect(),
            });
            if let Some(&(d_next, _)) = blocks.get(j + 1) {
                list = new_list.truncated(d_next - 1);
            }
        }
    }

    let realization = Realization::new(builder.freeze(), Mode::MaxClosed)?;
    if realization.profile() != *p || !realization.connected {
        return Err(Error::Construction(format!(
            "layered build for {p} produced {}",
            realization.profile()
        )));
    }
    Ok((realization, layers))
}

/// Realization of a closed-model profile without the connectivity
/// requirement: degree-1 demands become disjoint edges, degree-0 demands
/// isolated vertices, everything else a connected core.
pub fn build_general_closed(p: &Profile) -> Result<Realization> {
    if !check_general_closed(p) {
        return Err(Error::Precondition(format!(
            "{p} fails the general closed-model characterization"
        )));
    }
    let blocks = p.blocks();
    let mut graph = match p.bottom_block() {
        Some((1, n1)) => {
            let matching = Graph::from_edges(
                n1,
                &(0..n1 / 2).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>(),
            );
            if blocks.len() > 1 {
                let rest = Profile::new(blocks[..blocks.len() - 1].to_vec(), 0)?;
                build_connected_closed(&rest)?
                    .graph
                    .disjoint_union(&matching)
            } else {
                matching
            }
        }
        Some(_) => build_connected_closed(&p.without_isolated())?.graph,
        None => Graph::empty(0),
    };
    if p.isolated() > 0 {
        graph = graph.disjoint_union(&Graph::empty(p.isolated()));
    }
    let realization = Realization::new(graph, Mode::MaxClosed)?;
    if realization.profile() != *p {
        return Err(Error::Construction(format!(
            "general build for {p} produced {}",
            realization.profile()
        )));
    }
    Ok(realization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn p(text: &str) -> Profile {
        text.parse().unwrap()
    }

    #[test]
    fn connected_check_examples() {
        assert!(check_connected_closed(&p("3^4 2^1")));
        assert!(check_connected_closed(&p("1^2")));
        assert!(!check_connected_closed(&p("3^3")), "n_l < d_l + 1");
        assert!(!check_connected_closed(&p("3^4 1^1")), "d_1 = 1");
        assert!(!check_connected_closed(&p("2^3 0^1")));
    }

    #[test]
    fn general_check_examples() {
        assert!(check_general_closed(&p("1^4")));
        assert!(!check_general_closed(&p("2^2 1^1")), "d_l > n_l - 1");
        assert!(check_general_closed(&p("3^4 1^2")));
        assert!(
            !check_general_closed(&p("3^4 1^1")),
            "odd number of 1-demands"
        );
        assert!(check_general_closed(&p("0^3")));
    }

    #[test]
    fn caterpillar_fig4() {
        // d = 5, k = 12: spine of 3 internal vertices, 2 merges
        let (r, support) = build_caterpillar(5, 12).unwrap();
        assert_eq!(r.profile(), p("5^12"));
        assert!(r.connected);
        assert_eq!(support.len(), 5);
        let g = &r.graph;
        assert!(support.iter().all(|&v| g.deg(v) <= 2));
        assert!(support.iter().filter(|&&v| g.deg(v) == 1).count() >= 2);
        // independence
        for (i, &u) in support.iter().enumerate() {
            for &v in &support[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn caterpillar_small_cases() {
        let (r, s) = build_caterpillar(1, 2).unwrap();
        assert_eq!(r.profile(), p("1^2"));
        assert_eq!(s.len(), 1);

        let (r, _) = build_caterpillar(3, 4).unwrap();
        assert_eq!(r.profile(), p("3^4"));
        assert_eq!(r.graph.m(), 3, "exact fit is the star");

        assert!(build_caterpillar(3, 3).is_err());
        assert!(build_caterpillar(1, 5).is_err());
    }

    #[test]
    fn add_layer_star_example() {
        // star K_{1,3}: center 0, leaves 1..3
        let mut b = GraphBuilder::new(4);
        for v in 1..4 {
            b.add_edge(0, v);
        }
        let list = VertexList::valid(vec![1, 2]);
        let out = add_layer(&mut b, &list, 1, 3).unwrap();
        assert_eq!(out.vertices.len(), 1);
        assert_eq!(out.class, ListClass::Valid);
        let g = b.freeze();
        let values = g.ndeg_values(Mode::MaxClosed).unwrap();
        assert_eq!(values[4], 3, "the new vertex reaches value 3");
        assert_eq!(g.profile_of(Mode::MaxClosed).unwrap(), p("3^5"));
    }

    #[test]
    fn add_layer_large_branch() {
        // caterpillar (4^8), then a k >= d layer of five value-3 vertices
        let plan = caterpillar_plan(4, 8).unwrap();
        let mut b = GraphBuilder::new(8);
        for &(u, v) in &plan.edges {
            b.add_edge(u, v);
        }
        let list = VertexList::valid(plan.support[..2].to_vec());
        let out = add_layer(&mut b, &list, 5, 3).unwrap();
        assert!(out.check_in(&b));
        assert_eq!(out.vertices.len(), 1);
        let g = b.freeze();
        assert_eq!(g.profile_of(Mode::MaxClosed).unwrap(), p("4^8 3^5"));
        assert!(g.is_connected());
    }

    #[test]
    fn add_layer_rejects_bad_list_size() {
        let mut b = GraphBuilder::new(2);
        b.add_edge(0, 1);
        let list = VertexList::valid(vec![0]);
        assert!(add_layer(&mut b, &list, 1, 3).is_err());
    }

    #[test]
    fn build_connected_examples() {
        for text in ["3^4 2^1", "1^2", "4^5 3^2 2^1"] {
            let prof = p(text);
            let r = build_connected_closed(&prof).unwrap();
            assert!(
                r.graph.verify(&prof, Mode::MaxClosed, true),
                "profile {text}"
            );
        }
    }

    #[test]
    fn build_connected_prefix_invariant() {
        // after each layer, the suffix-induced graph realizes the partial profile
        for text in ["4^5 3^2 2^1", "5^7 4^2 3^3 2^2", "3^4 2^5"] {
            let prof = p(text);
            let (r, layers) = build_connected_closed_traced(&prof).unwrap();
            let mut verts: Vec<usize> = Vec::new();
            let mut partial: Vec<(usize, usize)> = Vec::new();
            for layer in &layers {
                verts.extend(&layer.vertices);
                partial.push((layer.degree, layer.vertices.len()));
                let sub = r.graph.induced(&verts);
                let want = Profile::new(partial.clone(), 0).unwrap();
                assert!(
                    sub.verify(&want, Mode::MaxClosed, true),
                    "prefix {want} of {text} not realized"
                );
            }
        }
    }

    #[test]
    fn build_general_examples() {
        let r = build_general_closed(&p("1^4")).unwrap();
        assert_eq!(r.graph.n(), 4);
        assert_eq!(r.graph.m(), 2, "two disjoint edges");

        let prof = p("3^4 1^2");
        let r = build_general_closed(&prof).unwrap();
        assert!(r.graph.verify(&prof, Mode::MaxClosed, false));
        assert!(!r.graph.is_connected());

        assert!(
            build_general_closed(&p("2^2 1^2")).is_err(),
            "(2^2) core is infeasible"
        );
    }

    #[test]
    fn build_general_with_isolated() {
        let prof = p("3^4 0^2");
        let r = build_general_closed(&prof).unwrap();
        assert!(r.graph.verify(&prof, Mode::MaxClosed, false));
    }

    #[test]
    fn inheritance_property_random_schedules() {
        // repeated add_layer calls must keep producing valid lists
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..400 {
            let d_top = rng.random_range(3..9usize);
            let k_top = d_top + 1 + rng.random_range(0..6usize);
            let plan = caterpillar_plan(d_top, k_top).unwrap();
            let mut b = GraphBuilder::new(k_top);
            for &(u, v) in &plan.edges {
                b.add_edge(u, v);
            }
            let mut d = rng.random_range(2..d_top);
            let mut list = VertexList::valid(plan.support[..d - 1].to_vec());
            loop {
                let k = rng.random_range(1..=(d + 3));
                let out = add_layer(&mut b, &list, k, d).unwrap();
                assert!(out.check_in(&b), "output list not valid (d={d}, k={k})");
                assert_eq!(out.vertices.len(), d - 2);
                if d == 2 {
                    break;
                }
                let d_next = rng.random_range(2..d);
                list = out.truncated(d_next - 1);
                d = d_next;
            }
            assert!(b.freeze().is_connected());
        }
    }

    #[test]
    fn layer_edges_touch_only_new_and_list_vertices() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let d_top = rng.random_range(3..8usize);
            let k_top = d_top + 1 + rng.random_range(0..5usize);
            let plan = caterpillar_plan(d_top, k_top).unwrap();
            let mut b = GraphBuilder::new(k_top);
            for &(u, v) in &plan.edges {
                b.add_edge(u, v);
            }
            let d = rng.random_range(2..d_top);
            let list = VertexList::valid(plan.support[..d - 1].to_vec());
            let before: Vec<usize> = (0..b.n()).map(|v| b.deg(v)).collect();
            let k = rng.random_range(1..=(d + 3));
            add_layer(&mut b, &list, k, d).unwrap();
            for (v, &deg_before) in before.iter().enumerate() {
                if !list.vertices.contains(&v) {
                    assert_eq!(b.deg(v), deg_before, "non-list vertex {v} was touched");
                } else {
                    assert!(b.deg(v) <= d, "list vertex {v} exceeds degree {d}");
                }
            }
        }
    }
}
