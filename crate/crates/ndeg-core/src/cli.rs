//! Command-line surface. Exit codes are part of the contract so shell
//! harnesses can assert verdicts without parsing output:
//!
//! * 0 — success / realizable / verified
//! * 1 — not realizable / verification failed
//! * 2 — undecided (min-closed profiles in the open gap)
//! * 64 — usage errors, 65 — malformed data, 66 — unreadable input file,
//!   70 — internal construction failure
//!
//! Failures print a single machine-readable `reason: ...` line on stderr.
//! All output is deterministic; identical invocations produce identical
//! bytes.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::census::{self, Family, Sampler};
use crate::error::{Error, Result};
use crate::graph::{Format, Graph, Mode};
use crate::oracle::{self, OracleQuery};
use crate::profile::Profile;
use crate::{check_profile, minndeg, realize_profile, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_REALIZABLE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NOINPUT: i32 = 66;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser)]
#[command(
    name = "ndeg",
    version,
    about = "Decide, build, verify, count and sample neighborhood-degree profiles"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the realizability conditions for a profile
    Check {
        /// Profile, compact ("3^4 2^1") or raw list ("3,3,3,3,2")
        profile: String,
        #[arg(long, default_value = "max-closed")]
        mode: Mode,
        /// Require a connected realization
        #[arg(long)]
        connected: bool,
    },
    /// Construct a witness graph and print it
    Realize {
        profile: String,
        #[arg(long, default_value = "max-closed")]
        mode: Mode,
        #[arg(long)]
        connected: bool,
        /// Output format: edgelist or dot
        #[arg(long, default_value = "edgelist")]
        format: Format,
    },
    /// Check a graph file against a profile (exit 0 iff it realizes it)
    Verify {
        /// Edge-list file: "n m" header, then one "u v" line per edge
        graph_file: PathBuf,
        profile: String,
        #[arg(long, default_value = "max-closed")]
        mode: Mode,
        #[arg(long)]
        connected: bool,
    },
    /// Print the profile a graph realizes
    ProfileOf {
        graph_file: PathBuf,
        #[arg(long, default_value = "max-closed")]
        mode: Mode,
    },
    /// Count realizable profiles of length N (families: ccon, ocon, cgen,
    /// ogenl, ogenu, ogen-exact)
    Count { n: usize, family: String },
    /// List every realizable profile of length N (families: ccon, ocon, cgen)
    Enumerate { n: usize, family: String },
    /// Draw uniformly random realizable profiles of length N
    Sample {
        n: usize,
        family: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of draws
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Exhaustive ground truth: search all labeled graphs for a witness
    Oracle {
        profile: String,
        #[arg(long, default_value = "max-closed")]
        mode: Mode,
        #[arg(long)]
        connected: bool,
        /// Largest profile length to enumerate (max 8; 8 is slow)
        #[arg(long, default_value_t = oracle::DEFAULT_N_LIMIT)]
        n_limit: usize,
    },
}

/// Runs the CLI against explicit argv and output sinks; returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.cmd, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "reason: {e}");
            error_code(&e)
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::NotRealizable(_) => EXIT_NOT_REALIZABLE,
        Error::Undecided(_) => EXIT_UNKNOWN,
        Error::Io(_) => EXIT_NOINPUT,
        Error::Parse(_)
        | Error::UnknownFormat(_)
        | Error::InvalidParams(_)
        | Error::LimitExceeded(_) => EXIT_DATA,
        Error::Precondition(_) | Error::Construction(_) => EXIT_INTERNAL,
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Cmd::Check {
            profile,
            mode,
            connected,
        } => {
            let p: Profile = profile.parse()?;
            reject_min_connected(mode, connected)?;
            cmd_check(&p, mode, connected, out)
        }
        Cmd::Realize {
            profile,
            mode,
            connected,
            format,
        } => {
            let p: Profile = profile.parse()?;
            reject_min_connected(mode, connected)?;
            let realization = realize_profile(&p, mode, connected)?;
            write!(out, "{}", realization.graph.serialize(format))?;
            Ok(EXIT_OK)
        }
        Cmd::Verify {
            graph_file,
            profile,
            mode,
            connected,
        } => {
            let p: Profile = profile.parse()?;
            let text = std::fs::read_to_string(&graph_file)?;
            let g = Graph::parse_edge_list(&text)?;
            if g.verify(&p, mode, connected) {
                Ok(EXIT_OK)
            } else {
                let _ = writeln!(err, "reason: graph does not realize {p} under {mode}");
                Ok(EXIT_NOT_REALIZABLE)
            }
        }
        Cmd::ProfileOf { graph_file, mode } => {
            let text = std::fs::read_to_string(&graph_file)?;
            let g = Graph::parse_edge_list(&text)?;
            writeln!(out, "{}", g.profile_of(mode)?)?;
            Ok(EXIT_OK)
        }
        Cmd::Count { n, family } => {
            let value = if family == "ogen-exact" {
                census::ogen_exact(n)?
            } else {
                census::count(n, family.parse::<Family>()?)?
            };
            writeln!(out, "{value}")?;
            Ok(EXIT_OK)
        }
        Cmd::Enumerate { n, family } => {
            for p in census::enumerate(n, family.parse::<Family>()?)? {
                writeln!(out, "{p}")?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Sample {
            n,
            family,
            seed,
            count,
        } => {
            let fam: Family = family.parse()?;
            let mut sampler = Sampler::from_seed(seed);
            for _ in 0..count {
                writeln!(out, "{}", sampler.sample(n, fam)?)?;
            }
            Ok(EXIT_OK)
        }
        Cmd::Oracle {
            profile,
            mode,
            connected,
            n_limit,
        } => {
            let p: Profile = profile.parse()?;
            let q = OracleQuery::new(p.clone(), mode, connected).with_limit(n_limit)?;
            match oracle::oracle_realizable(&q)? {
                Some(g) => {
                    write!(out, "{}", g.serialize(Format::EdgeList))?;
                    Ok(EXIT_OK)
                }
                None => {
                    let _ = writeln!(
                        err,
                        "reason: exhaustive search over all {}-vertex graphs found no \
                         realization of {p}",
                        p.total_len()
                    );
                    Ok(EXIT_NOT_REALIZABLE)
                }
            }
        }
    }
}

fn reject_min_connected(mode: Mode, connected: bool) -> Result<()> {
    if mode == Mode::MinClosed && connected {
        return Err(Error::InvalidParams(
            "--connected is not defined for --mode min-closed".into(),
        ));
    }
    Ok(())
}

fn flag(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn cmd_check(p: &Profile, mode: Mode, connected: bool, out: &mut dyn Write) -> Result<i32> {
    if p.isolated() > 0 {
        writeln!(out, "isolated demands: {}", p.isolated())?;
    }
    match mode {
        Mode::MinClosed => {
            let report = minndeg::check(&p.without_isolated());
            for (i, ok) in report.nc1_per_i.iter().enumerate() {
                writeln!(out, "NC1[i={}]: {}", i + 1, flag(*ok))?;
            }
            writeln!(out, "NC2: {}", flag(report.nc2))?;
            for (i, ok) in report.sc_per_i.iter().enumerate() {
                writeln!(out, "SC[i={}]: {}", i + 1, flag(*ok))?;
            }
            if let Some(nc3) = report.nc3 {
                writeln!(out, "NC3: {}", flag(nc3))?;
            }
        }
        Mode::MaxClosed | Mode::MaxOpen => {
            if let (Some((dl, nl)), Some((d1, n1))) = (p.top_block(), p.bottom_block()) {
                let n = p.total_len();
                match (mode, connected) {
                    (Mode::MaxClosed, true) => {
                        writeln!(out, "n_l >= d_l + 1: {}", flag(nl > dl))?;
                        writeln!(out, "d_1 >= 2: {}", flag(d1 >= 2))?;
                        writeln!(out, "sigma = (1^2): {}", flag(p.to_values() == [1, 1]))?;
                    }
                    (Mode::MaxClosed, false) => {
                        writeln!(out, "d_l <= n_l - 1: {}", flag(dl < nl))?;
                        writeln!(
                            out,
                            "d_1 >= 2 or n_1 even: {}",
                            flag(d1 >= 2 || n1 % 2 == 0)
                        )?;
                    }
                    (Mode::MaxOpen, true) => {
                        writeln!(out, "d_l <= min(n_l, n-1): {}", flag(dl <= nl.min(n - 1)))?;
                        writeln!(out, "d_1 >= 2: {}", flag(d1 >= 2))?;
                        writeln!(
                            out,
                            "sigma != (d^(d+1), 2^1): {}",
                            flag(!p.is_d_plus1_2_1())
                        )?;
                        writeln!(
                            out,
                            "star or (1^2) special form: {}",
                            flag(p.is_star_open() || p.to_values() == [1, 1])
                        )?;
                    }
                    (Mode::MaxOpen, false) => {
                        let split = p.split_candidates().into_iter().find(|(s1, _)| {
                            s1.is_empty() || crate::maxndeg_open::check_connected_open(s1)
                        });
                        match split {
                            Some((s1, s2)) => {
                                writeln!(out, "split: sigma1 = ({s1}), sigma2 = ({s2})")?
                            }
                            None => writeln!(out, "split: none")?,
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
    let verdict = check_profile(p, mode, connected)?;
    writeln!(out, "verdict: {verdict}")?;
    Ok(match verdict {
        Verdict::Realizable => EXIT_OK,
        Verdict::NotRealizable => EXIT_NOT_REALIZABLE,
        Verdict::Unknown => EXIT_UNKNOWN,
    })
}
