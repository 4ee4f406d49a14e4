//! Run every registered identity and print one line per report.

use mexlab::verify::{registry, run_suite, VerifyParams};

fn main() -> mexlab::Result<()> {
    let params = VerifyParams {
        max_n: 20,
        order: 80,
        ..VerifyParams::default()
    };
    let reports = run_suite(&params)?;
    for (entry, report) in registry().iter().zip(&reports) {
        println!("{:?} {:<20} {:>6} checks  {}", report.status, report.identity_id, report.checks, entry.summary);
        for v in &report.variants {
            println!("    {:?} {}", v.status, v.name);
        }
    }
    println!("{}", reports[0].to_json());
    Ok(())
}
