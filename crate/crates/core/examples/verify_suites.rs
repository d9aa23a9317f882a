//! Runs the built-in verification suites from library code.

use superspace::verify::{self, Options, Suite};

fn main() {
    let suite = std::env::args().nth(1).map(|s| Suite::parse(&s).expect("unknown suite")).unwrap_or(Suite::All);
    let report = verify::run(suite, &Options::default());
    for check in &report.checks {
        println!("{check}");
    }
    if let Some(j) = report.resolved_j {
        println!("resolved j sign: {j}");
    }
    println!("{} checks, {} failed", report.checks.len(), report.failures());
}
