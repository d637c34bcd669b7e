//! End-to-end checks of the command-line surface: exit codes, golden
//! output, determinism, and the realize -> verify round trip.

use std::io::Write as _;

use ndeg_core::cli;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Runs the CLI in-process and captures (exit code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("ndeg".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn check_exit_codes() {
    let (code, out, _) = run(&["check", "3^4 2^1", "--mode", "max-closed", "--connected"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: realizable"));

    let (code, out, _) = run(&["check", "3^3", "--mode", "max-closed", "--connected"]);
    assert_eq!(code, 1);
    assert!(out.contains("verdict: not-realizable"));

    // the min-closed gap at four blocks
    let (code, out, _) = run(&["check", "4^4 3^1 2^1 1^2", "--mode", "min-closed"]);
    assert_eq!(code, 2);
    assert!(out.contains("verdict: unknown"));

    let (code, out, _) = run(&["check", "3^3 2^1 1^2", "--mode", "min-closed"]);
    assert_eq!(code, 0);
    assert!(out.contains("NC3: ok"), "{out}");
    assert!(out.contains("SC[i=2]: FAIL"), "{out}");
}

#[test]
fn realize_prints_graph_and_reasons() {
    let (code, out, _) = run(&["realize", "1^2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2 1\n0 1\n");

    // the excluded open-model family: exit 1, reason cites the exclusion
    let (code, out, err) = run(&["realize", "3^4 2^1", "--mode", "max-open"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.starts_with("reason:"), "{err}");
    assert!(err.contains("(d^(d+1), 2^1)"), "{err}");

    let (code, _, err) = run(&["realize", "4^4 3^1 2^1 1^2", "--mode", "min-closed"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("reason:"));

    let (code, out, _) = run(&["realize", "2^3", "--mode", "max-open", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("graph {\n"), "{out}");
    assert!(out.contains("0 -- 1;"));
}

#[test]
fn count_golden_values() {
    let (code, out, _) = run(&["count", "6", "ccon"]);
    assert_eq!((code, out.as_str()), (0, "8\n"));
    let (_, out, _) = run(&["count", "5", "ocon"]);
    assert_eq!(out, "7\n");
    let (_, out, _) = run(&["count", "6", "cgen"]);
    assert_eq!(out, "11\n");
    let (_, out, _) = run(&["count", "20", "ogenu"]);
    assert_eq!(out, "524287\n");
    let (_, out, _) = run(&["count", "6", "ogen-exact"]);
    let exact: u64 = out.trim().parse().unwrap();
    assert!((20..=31).contains(&exact), "bracketed by ogenl/ogenu");
}

#[test]
fn enumerate_lists_profiles() {
    let (code, out, _) = run(&["enumerate", "4", "ccon"]);
    assert_eq!(code, 0);
    assert_eq!(out, "3^4\n2^4\n");

    let (code, out, _) = run(&["enumerate", "5", "ocon"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().any(|l| l == "4^4 1^1"));

    let (code, _, err) = run(&["enumerate", "5", "ogenl"]);
    assert_eq!(code, 65);
    assert!(err.starts_with("reason:"));
}

#[test]
fn sample_is_deterministic() {
    let a = run(&["sample", "10", "ccon", "--seed", "42", "--count", "5"]);
    let b = run(&["sample", "10", "ccon", "--seed", "42", "--count", "5"]);
    assert_eq!(a, b, "same seed, same bytes");
    assert_eq!(a.0, 0);
    assert_eq!(a.1.lines().count(), 5);
    let c = run(&["sample", "10", "ccon", "--seed", "43", "--count", "5"]);
    assert_ne!(a.1, c.1, "different seed should move the stream");
}

#[test]
fn verify_and_profile_of_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k2.edges");
    std::fs::write(&path, "2 1\n0 1\n").unwrap();
    let path = path.to_str().unwrap();

    let (code, _, _) = run(&["verify", path, "1^2", "--connected"]);
    assert_eq!(code, 0);
    let (code, _, err) = run(&["verify", path, "2^2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("reason:"));

    let (code, out, _) = run(&["profile-of", path, "--mode", "min-closed"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1^2\n");

    let (code, _, err) = run(&["profile-of", "/no/such/file"]);
    assert_eq!(code, 66);
    assert!(err.starts_with("reason:"));

    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "not a graph\n").unwrap();
    let (code, _, _) = run(&["verify", bad.to_str().unwrap(), "1^2"]);
    assert_eq!(code, 65);
}

#[test]
fn oracle_subcommand() {
    let (code, out, _) = run(&["oracle", "1^2", "--mode", "max-closed", "--connected"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2 1\n0 1\n", "first witness in mask order is K2");

    let (code, _, err) = run(&["oracle", "3^3", "--mode", "max-open"]);
    assert_eq!(code, 1);
    assert!(err.contains("no realization"));

    let (code, _, err) = run(&["oracle", "2^8 1^2", "--mode", "min-closed"]);
    assert_eq!(code, 65, "{err}");
    let (code, _, _) = run(&["oracle", "2^3", "--n-limit", "9"]);
    assert_eq!(code, 65);
}

#[test]
fn usage_errors() {
    let (code, _, _) = run(&["realize"]);
    assert_eq!(code, 64);
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 64);
    let (code, _, err) = run(&["check", "3^3", "--mode", "nonsense"]);
    assert_eq!(code, 64, "{err}");
    let (code, _, _) = run(&["check", "oops"]);
    assert_eq!(code, 65);
    let (code, _, err) = run(&["check", "2^3", "--mode", "min-closed", "--connected"]);
    assert_eq!(code, 65);
    assert!(err.contains("not defined"));
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn realize_verify_round_trip_fuzz() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut cases: Vec<(String, &str, bool)> = Vec::new();
    for _ in 0..60 {
        // realizable closed-connected profiles: top block large enough, rest >= 2
        let d = rng.random_range(2..=9);
        let mut vals = vec![d; d + 1 + rng.random_range(0..=4)];
        for _ in 0..rng.random_range(0..=4) {
            vals.push(rng.random_range(2..=d));
        }
        vals.sort_unstable_by(|a, b| b.cmp(a));
        let prof = ndeg_core::Profile::from_values(&vals);
        cases.push((prof.to_string(), "max-closed", true));
        if ndeg_core::maxndeg_open::check_connected_open(&prof) {
            cases.push((prof.to_string(), "max-open", true));
        }
    }
    for seed in 0..40 {
        let (_, out, _) = run(&["sample", "9", "cgen", "--seed", &seed.to_string()]);
        cases.push((out.trim().to_string(), "max-closed", false));
    }

    for (i, (profile, mode, connected)) in cases.iter().enumerate() {
        let mut args = vec!["realize", profile, "--mode", mode];
        if *connected {
            args.push("--connected");
        }
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "realize {profile} under {mode}: {err}");

        let path = dir.path().join(format!("case{i}.edges"));
        let mut file = std::fs::File::create(&path).unwrap();
        file.write_all(out.as_bytes()).unwrap();

        let mut args = vec!["verify", path.to_str().unwrap(), profile, "--mode", mode];
        if *connected {
            args.push("--connected");
        }
        let (code, _, err) = run(&args);
        assert_eq!(code, 0, "verify {profile} under {mode}: {err}");
    }
}

#[test]
fn oracle_agrees_with_realize_on_small_profiles() {
    // cross-check the two independent routes end to end through the CLI
    for (profile, mode) in [
        ("2^3 1^2", "min-closed"),
        ("3^4 2^1", "max-closed"),
        ("3^3 2^2", "max-open"),
        ("2^4 1^1", "max-open"),
        ("4^1 2^1 1^2", "min-closed"),
    ] {
        let (oracle_code, _, _) = run(&["oracle", profile, "--mode", mode]);
        let (realize_code, _, _) = run(&["realize", profile, "--mode", mode]);
        assert_eq!(
            oracle_code, realize_code,
            "oracle and realize disagree on {profile} under {mode}"
        );
    }
}
