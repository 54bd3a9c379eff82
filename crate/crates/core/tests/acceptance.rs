//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use albert::report::Check;
use albert::suites::{
    connection_suite, dga_suite, derivation_dims, exceptional_suite, homotopy_suite, jordan_program, module_suite, octonion_laws, pierce_suite,
    spectral_suite, stabilizer_checks,
};
use albert::Result;

const SEED: u64 = 2024;

struct Criterion {
    id: usize,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<Vec<Check>>,
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "octonion laws on 500 exact samples", limit: Some(Duration::from_secs(5)), run: || Ok(octonion_laws(500, SEED)) },
        Criterion { id: 2, title: "derivation dimensions", limit: Some(Duration::from_secs(600)), run: || Ok(derivation_dims()?.checks) },
        Criterion { id: 3, title: "stabilizers 8 and 16, acg span", limit: None, run: stabilizer_checks },
        Criterion { id: 4, title: "Jordan program, coincidences, capacities", limit: None, run: || Ok(jordan_program(5, SEED)?.checks) },
        Criterion { id: 5, title: "spectral resolution of 100 J8_3 elements", limit: None, run: || spectral_suite(None, 100, SEED, 1e-9) },
        Criterion {
            id: 6,
            title: "modules, extensions, Pierce, commutants",
            limit: None,
            run: || {
                let mut c = module_suite(20, SEED)?;
                c.extend(pierce_suite()?);
                Ok(c)
            },
        },
        Criterion { id: 7, title: "graded Jordan calculus, 200 forms per context", limit: None, run: || dga_suite(200, SEED) },
        Criterion { id: 8, title: "connections on J8_3 x R^2 over su(3)", limit: None, run: || connection_suite(100, SEED) },
        Criterion { id: 9, title: "exceptional maps and charge conjugation", limit: None, run: || Ok(exceptional_suite(100, SEED, 1e-8)?.checks) },
        Criterion { id: 10, title: "universal calculus homotopy", limit: None, run: || homotopy_suite(50, SEED) },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Err(e) => Err(format!("error: {e}")),
            Ok(checks) => match checks.iter().find(|k| !k.passed) {
                Some(k) => Err(format!("{} ({})", k.name, k.witness.as_deref().unwrap_or("no witness"))),
                None if c.limit.is_some_and(|l| elapsed > l) => Err(format!("exceeded {:?}", c.limit.unwrap())),
                None => Ok(checks.len()),
            },
        };
        match verdict {
            Ok(n) => println!("criterion {:>2} PASS  {} [{n} checks, {:.2?}]", c.id, c.title, elapsed),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {why} [{:.2?}]", c.id, c.title, elapsed);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
