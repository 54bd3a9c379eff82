//! Running a named suite and printing its JSON report.

use albert::suites::{run_suite, SuiteSpec};

fn main() -> albert::Result<()> {
    let spec = SuiteSpec { trials: Some(100), seed: 7, ..SuiteSpec::new("octonion-laws") };
    let report = run_suite(&spec)?;
    println!("{}", serde_json::to_string_pretty(&report.without_timing())?);
    Ok(())
}
