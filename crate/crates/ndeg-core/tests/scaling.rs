//! Acceptance criterion 6: the layered builder runs in time linear in the
//! realization it emits. Kept in its own test binary so the wall-clock
//! measurements never compete with the parallel tests of the main suite.

use std::time::{Duration, Instant};

use ndeg_core::maxndeg;
use ndeg_core::profile::Profile;

#[test]
fn criterion_06_scalability() {
    let d = 1_000usize;
    let time_build = |n: usize| {
        let prof = Profile::new(vec![(d, n)], 0).unwrap();
        let mut best = Duration::MAX;
        let mut edges = 0;
        for _ in 0..5 {
            let start = Instant::now();
            let r = maxndeg::build_connected_closed(&prof).unwrap();
            best = best.min(start.elapsed());
            edges = r.graph.m();
        }
        assert!(edges <= 4 * (n + d), "edge bound at n={n}: {edges}");
        best
    };

    let t4 = time_build(10_000);
    let t5 = time_build(100_000);
    let t6 = time_build(1_000_000);
    assert!(t6 < Duration::from_secs(2), "n=10^6 took {t6:?}");
    let ratio = t6.as_secs_f64() / t4.as_secs_f64().max(1e-9);
    assert!(
        ratio < 300.0,
        "10^6/10^4 runtime ratio {ratio:.1} exceeds 3x the size ratio"
    );
    println!(
        "criterion 6 (scalability): PASS - (1000^n) builds: 10^4 in {t4:?}, \
         10^5 in {t5:?}, 10^6 in {t6:?}, ratio {ratio:.1} (bound 300)"
    );
}
