//! Runs every identity family through the library and prints a summary per
//! identity.
//!
//! cargo run --release --example verify_report -- [trials] [seed]

use std::collections::BTreeMap;

use permident::identities::{verify_all, TrialPlan};

fn main() -> permident::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let records = verify_all(None, &TrialPlan::new(trials, seed))?;

    let mut summary: BTreeMap<_, (usize, usize)> = BTreeMap::new();
    for r in &records {
        let e = summary.entry(r.identity).or_default();
        e.0 += 1;
        if r.passed() {
            e.1 += 1;
        }
    }
    for (id, (total, passed)) in &summary {
        println!("{:<22} {passed:>4}/{total:<4}", id.as_str());
    }
    for r in records.iter().filter(|r| !r.passed()) {
        println!("{}", r.to_human_line());
    }
    Ok(())
}
