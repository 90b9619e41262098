//! Acceptance criteria, one PASS/FAIL line each. Exits 1 if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use selmer_core::cusp::shipped_certificates;
use selmer_core::report::{Report, Status};
use selmer_core::roots::euler::DEFAULT_PRIME_BOUND;
use selmer_core::roots::shipped_table;
use selmer_core::{suites, Result};

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    /// Print every check, not only the failing ones.
    verbose: bool,
    run: fn() -> Result<Report>,
}

fn cusp() -> Result<Report> {
    Ok(suites::cusp_suite(&shipped_certificates()))
}

fn partition() -> Result<Report> {
    Ok(suites::partition_suite())
}

fn order_weight() -> Result<Report> {
    Ok(suites::order_weight_suite())
}

fn pfaffians() -> Result<Report> {
    suites::algebra_suite(suites::DEFAULT_SEED, 1000, 200)
}

fn densities() -> Result<Report> {
    suites::densities_suite(&shipped_table(2)?, &shipped_table(3)?)
}

fn euler() -> Result<Report> {
    let mut r = suites::euler_suite(DEFAULT_PRIME_BOUND)?;
    r.extend(suites::families_suite(&shipped_table(2)?, &shipped_table(3)?));
    Ok(r)
}

fn ranks() -> Result<Report> {
    suites::ranks_suite()
}

fn gadgets() -> Result<Report> {
    suites::gadgets_suite(100)
}

fn counts() -> Result<Report> {
    suites::counts_suite()
}

const CRITERIA: &[Criterion] = &[
    Criterion { name: "cusp certificates", limit: Some(Duration::from_secs(1)), verbose: false, run: cusp },
    Criterion { name: "cuspidal partition cover", limit: Some(Duration::from_secs(60)), verbose: false, run: partition },
    Criterion { name: "order-weight equivalence", limit: None, verbose: false, run: order_weight },
    Criterion { name: "Pfaffian suite", limit: None, verbose: false, run: pfaffians },
    Criterion { name: "root densities", limit: Some(Duration::from_secs(300)), verbose: false, run: densities },
    Criterion { name: "Euler products and families", limit: None, verbose: true, run: euler },
    Criterion { name: "rank bounds", limit: None, verbose: false, run: ranks },
    Criterion { name: "inequality gadgets", limit: None, verbose: false, run: gadgets },
    Criterion { name: "invariant pair counts", limit: Some(Duration::from_secs(60)), verbose: false, run: counts },
];

fn tag(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|l| elapsed < l);
        let ok = matches!(&outcome, Ok(r) if r.passed()) && in_time;
        let limit = c.limit.map(|l| format!(" (limit {l:?})")).unwrap_or_default();
        println!("{} {}: {:.2?}{limit}", tag(ok), c.name, elapsed);
        match &outcome {
            Ok(r) => {
                for k in r.checks.iter().filter(|k| c.verbose || k.status == Status::Fail) {
                    let status = match k.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Info => "INFO",
                    };
                    let expected = if k.expected.is_empty() { String::new() } else { format!("  [expected {}]", k.expected) };
                    println!("    {status} {}: {}{expected}", k.id, k.actual);
                }
            }
            Err(e) => println!("    error: {e}"),
        }
        if !in_time {
            println!("    runtime exceeded");
        }
        failed += usize::from(!ok);
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
