//! Realizability of extremal neighborhood-degree profiles.
//!
//! A profile `(d_l^{n_l}, ..., d_1^{n_1})` demands, for each block, exactly
//! `n_i` vertices whose minimum (or maximum) degree over their neighborhood
//! equals `d_i`. This crate decides whether such a profile is realizable by a
//! simple graph, constructs witness graphs in linear time, verifies graphs
//! against profiles, counts/enumerates/samples realizable profiles, and ships
//! a brute-force oracle that certifies every characterization on small
//! instances.
//!
//! Entry points: [`check_profile`] and [`realize_profile`] dispatch on the
//! mode and connectivity requirement; the per-model modules expose the
//! individual checks and builders; [`census`] handles counting and sampling;
//! [`oracle`] is the exhaustive ground truth.

pub mod census;
pub mod cli;
mod error;
pub mod graph;
pub mod maxndeg;
pub mod maxndeg_open;
pub mod minndeg;
pub mod oracle;
pub mod profile;

pub use error::{Error, Result};
pub use graph::{Format, Graph, GraphBuilder, Mode, Realization};
pub use profile::Profile;

/// Tri-state realizability decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Realizable,
    NotRealizable,
    /// Only reachable for min-closed profiles with four or more blocks that
    /// satisfy the necessary conditions but not the sufficient one.
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Realizable => "realizable",
            Verdict::NotRealizable => "not-realizable",
            Verdict::Unknown => "unknown",
        })
    }
}

/// Decides realizability of a profile in the given mode.
///
/// Degree-0 demands are handled here: they are always fine in the closed
/// models without connectivity, compatible with connectivity only as the
/// lone profile `(0^1)` (the one-vertex graph), and rejected in the open
/// model where the statistic is undefined.
pub fn check_profile(p: &Profile, mode: Mode, require_connected: bool) -> Result<Verdict> {
    if p.is_empty() {
        return Err(Error::InvalidParams("empty profile".into()));
    }
    if mode == Mode::MaxOpen && p.isolated() > 0 {
        return Err(Error::InvalidParams(
            "degree-0 demands are undefined in the open model".into(),
        ));
    }
    if require_connected && p.isolated() > 0 {
        let verdict = if p.num_blocks() == 0 && p.isolated() == 1 {
            Verdict::Realizable
        } else {
            Verdict::NotRealizable
        };
        return Ok(verdict);
    }
    Ok(match mode {
        Mode::MinClosed => {
            if require_connected {
                return Err(Error::InvalidParams(
                    "connected realizability is not defined for the min-closed model".into(),
                ));
            }
            minndeg::check(&p.without_isolated()).verdict
        }
        Mode::MaxClosed => {
            let ok = if require_connected {
                maxndeg::check_connected_closed(p)
            } else {
                maxndeg::check_general_closed(p)
            };
            if ok {
                Verdict::Realizable
            } else {
                Verdict::NotRealizable
            }
        }
        Mode::MaxOpen => {
            let ok = if require_connected {
                maxndeg_open::check_connected_open(p)
            } else {
                maxndeg_open::check_general_open(p)
            };
            if ok {
                Verdict::Realizable
            } else {
                Verdict::NotRealizable
            }
        }
    })
}

/// Constructs a witness graph for a realizable profile, appending isolated
/// vertices for degree-0 demands in the closed models.
pub fn realize_profile(p: &Profile, mode: Mode, require_connected: bool) -> Result<Realization> {
    match check_profile(p, mode, require_connected)? {
        Verdict::Realizable => {}
        Verdict::NotRealizable => {
            // builders produce the specific reason
            return Err(match mode {
                Mode::MinClosed => match minndeg::build(&p.without_isolated()) {
                    Err(e) => e,
                    Ok(_) => Error::Construction(format!("check and builder disagree on {p}")),
                },
                Mode::MaxClosed if require_connected => Error::NotRealizable(format!(
                    "{p} fails the connected closed-model characterization \
                     (needs n_l >= d_l + 1 and d_1 >= 2, or exactly (1^2))"
                )),
                Mode::MaxClosed => Error::NotRealizable(format!(
                    "{p} fails the closed-model characterization \
                     (needs d_l <= n_l - 1, and d_1 >= 2 or n_1 even)"
                )),
                Mode::MaxOpen if require_connected => {
                    if p.is_d_plus1_2_1() {
                        Error::NotRealizable(format!(
                            "{p} matches the excluded family (d^(d+1), 2^1)"
                        ))
                    } else {
                        Error::NotRealizable(format!(
                            "{p} fails the connected open-model characterization \
                             (needs d_l <= min(n_l, n-1) and d_1 >= 2, a star profile, or (1^2))"
                        ))
                    }
                }
                Mode::MaxOpen => match maxndeg_open::build_general_open(p) {
                    Err(e) => e,
                    Ok(_) => Error::Construction(format!("check and builder disagree on {p}")),
                },
            });
        }
        Verdict::Unknown => {
            return Err(Error::Undecided(format!(
                "{p} meets the necessary min-closed conditions but not the sufficient one; \
                 with four or more blocks no decision procedure is known"
            )))
        }
    }

    if require_connected && p.isolated() > 0 {
        // the check above admits only the one-vertex profile here
        return Realization::new(Graph::empty(1), mode);
    }
    let realization = match mode {
        Mode::MinClosed => {
            let core = minndeg::build(&p.without_isolated())?;
            if p.isolated() > 0 {
                let g = core.graph.disjoint_union(&Graph::empty(p.isolated()));
                Realization::new(g, mode)?
            } else {
                core
            }
        }
        Mode::MaxClosed => {
            if require_connected {
                maxndeg::build_connected_closed(p)?
            } else {
                maxndeg::build_general_closed(p)?
            }
        }
        Mode::MaxOpen => {
            if require_connected {
                maxndeg_open::build_connected_open(p)?
            } else {
                maxndeg_open::build_general_open(p)?
            }
        }
    };
    if realization.profile() != *p {
        return Err(Error::Construction(format!(
            "dispatch for {p} produced {}",
            realization.profile()
        )));
    }
    Ok(realization)
}
