//! Seeded property suites and counterexample shrinking.

use modsym::properties::{run_properties, shrink, Outcome, Property};

fn main() {
    let report = run_properties(1, 50);
    for suite in &report.suites {
        println!(
            "{:<16} drawn {:>4} exercised {:>3} {}",
            suite.name,
            suite.drawn,
            suite.exercised,
            if suite.passed { "ok" } else { "FAILED" }
        );
    }

    // a deliberately false property: shrinking keeps the failure and moves toward zero
    let prop = Property::new("small_sum", 2, |c| {
        if c[0] + c[1] < 1000 {
            Outcome::Pass
        } else {
            Outcome::Fail(format!("{} + {} is large", c[0], c[1]))
        }
    });
    let (minimized, message) = shrink(&prop, &[40_000, 9_000]);
    println!("shrunk to {minimized:?}: {message}");
}
