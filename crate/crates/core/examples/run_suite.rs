//! Ad-hoc driver: run a harness suite and print the report with per-check timing.

use std::env;

use tokgraph::harness::{run_suite, RunOptions};

fn main() {
    let args: Vec<String> = env::args().collect();
    let suite = args.get(1).map(String::as_str).unwrap_or("fast");
    let mut opts = RunOptions::default();
    if let Some(seed) = args.get(2) {
        opts.seed = seed.parse().expect("seed must be a u64");
    }
    if suite == "all" {
        opts.include_slow = true;
    }
    let report = run_suite(suite, &opts).expect("suite should resolve");
    for check in &report.checks {
        eprintln!("{:>8} ms  {:?}  {}", check.runtime_ms, check.status, check.name);
    }
    eprintln!(
        "pass={} fail={} discrepancy={} skipped={}",
        report.summary.pass,
        report.summary.fail,
        report.summary.discrepancy,
        report.summary.skipped
    );
    println!("{}", report.to_json());
}
