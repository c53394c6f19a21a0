//! Run the built-in acceptance grid and print a CSV summary.

use modsym::scenario::{acceptance_grid, default_workers, run_grid, write_csv};

fn main() -> modsym::Result<()> {
    let outcome = run_grid(&acceptance_grid(), default_workers()).canonical();
    let reports: Vec<_> = outcome.reports.iter().filter_map(|r| r.report.as_ref()).collect();
    write_csv(std::io::stdout(), &reports)?;

    let s = &outcome.summary;
    eprintln!("{} scenarios, {} errors", s.scenarios, s.errors);
    for (case, counts) in &s.by_case {
        eprintln!("{case:>9}: {} equal, {} unequal", counts.equal, counts.unequal);
    }
    for failed in &s.failed_claims {
        eprintln!("claim fails: {failed}");
    }
    Ok(())
}
