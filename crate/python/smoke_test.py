#!/usr/bin/env python3
"""Smoke test for the `ndeg` Python extension.

Builds the extension with cargo, loads it straight from the target
directory, and exercises the main types and operations end to end.

Usage: python3 python/smoke_test.py [--release]
"""

import argparse
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_and_import(release: bool):
    cmd = ["cargo", "build", "-p", "ndeg-py"]
    if release:
        cmd.append("--release")
    subprocess.run(cmd, cwd=ROOT, check=True)

    profile_dir = "release" if release else "debug"
    built = ROOT / "target" / profile_dir / "libndeg.so"
    if not built.exists():  # e.g. macOS
        built = ROOT / "target" / profile_dir / "libndeg.dylib"
    if not built.exists():
        sys.exit(f"extension library not found under target/{profile_dir}")

    stage = Path(tempfile.mkdtemp(prefix="ndeg-py-"))
    shutil.copy2(built, stage / "ndeg.so")
    sys.path.insert(0, str(stage))
    import ndeg

    return ndeg


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--release", action="store_true", help="build with --release")
    args = parser.parse_args()
    ndeg = build_and_import(args.release)
    passed = 0

    def ok(name, cond):
        nonlocal passed
        assert cond, name
        passed += 1
        print(f"ok - {name}")

    # profiles: parsing, normalization, rendering
    p = ndeg.Profile("3^4 2^1")
    ok("parse compact", p.blocks == [(3, 4), (2, 1)] and p.isolated == 0)
    ok("parse raw equals compact", ndeg.Profile("3,3,3,3,2") == p)
    ok("zero stripping", ndeg.Profile("2^3 0^2").isolated == 2)
    ok("render", str(p) == "3^4 2^1")
    try:
        ndeg.Profile("1,2,3")
        ok("increasing raw list rejected", False)
    except ValueError:
        ok("increasing raw list rejected", True)

    # graphs and neighborhood degrees
    g = ndeg.Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)])
    ok("max-closed profile", g.profile_of("max-closed") == p)
    ok("min-closed profile", g.profile_of("min-closed") == ndeg.Profile("2^3 1^2"))
    ok("max-open profile", g.profile_of("max-open") == ndeg.Profile("3^3 2^2"))
    ok("verify", g.verify(p, "max-closed", True))

    # checks and builders across the three models
    ok("closed connected check", ndeg.check(p, "max-closed", True) == "realizable")
    ok("open exclusion", ndeg.check(p, "max-open", True) == "not-realizable")
    ok("min-closed gap", ndeg.check(ndeg.Profile("4^4 3^1 2^1 1^2"), "min-closed") == "unknown")

    for text, mode, connected in [
        ("3^4 2^1", "max-closed", True),
        ("3^3 2^2", "max-open", True),
        ("3^3 2^1 1^2", "min-closed", False),
        ("1^4", "max-open", False),
    ]:
        prof = ndeg.Profile(text)
        witness = ndeg.realize(prof, mode, connected)
        ok(f"realize {text} under {mode}", witness.verify(prof, mode, connected))

    # serialization round trip
    k2 = ndeg.realize(ndeg.Profile("1^2"))
    ok("edge list", k2.to_edge_list() == "2 1\n0 1\n")
    ok("edge list round trip", ndeg.Graph.parse_edge_list(k2.to_edge_list()) == k2)
    ok("dot output", k2.to_dot().startswith("graph {"))

    # census: counts, enumeration, sampling
    ok("count ccon", ndeg.count(6, "ccon") == 8)
    ok("count cgen", ndeg.count(6, "cgen") == 11)
    ok("count is exact at scale", ndeg.count(64, "ccon") == 2**61)
    profiles = ndeg.enumerate_profiles(5, "ocon")
    ok("enumerate ocon(5)", len(profiles) == 7 and ndeg.Profile("4^4 1^1") in profiles)
    draws = {str(ndeg.sample(4, "ccon", seed)) for seed in range(30)}
    ok("sample support", draws == {"3^4", "2^4"})
    ok("sample determinism", ndeg.sample(10, "ccon", 7) == ndeg.sample(10, "ccon", 7))

    # oracle ground truth
    ok("oracle finds K2", ndeg.oracle_realizable(ndeg.Profile("1^2")).m == 1)
    ok("oracle refutes (3^3) open", ndeg.oracle_realizable(ndeg.Profile("3^3"), "max-open") is None)
    truth = ndeg.oracle_all_profiles(4, "max-closed", True)
    ok("oracle census at n=4", sorted(map(str, truth)) == ["2^4", "3^4"])
    ok("dlf split", ndeg.check_dlf(ndeg.Profile("2^3 1^2"))
       and not ndeg.check_dlf(ndeg.Profile("3^3 2^1 1^2")))

    print(f"\nall {passed} smoke checks passed")


if __name__ == "__main__":
    main()
