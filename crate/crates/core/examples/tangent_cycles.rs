//! Sums of f(tau) over full cycles do not depend on the points and give
//! signed tangent numbers; those numbers satisfy a binomial recurrence.
//!
//! cargo run --release --example tangent_cycles

use permident::builders::PointVector;
use permident::identities::{s_by_cycles, s_sequence, verify_recurrence};
use permident::perm::{bernoulli, tangent_numbers};

fn main() -> permident::Result<()> {
    let samples = ["1,2", "1,2,3,4", "1/2,-3,7,9/4", "1,2,3,5,8,13", "-1,4/3,2,9,-7/2,6"];
    for s in samples {
        let xs: PointVector = s.parse()?;
        println!("s({xs}) = {}", s_by_cycles(&xs)?);
    }

    let t = tangent_numbers(10)?;
    println!("T_1..T_10: {}", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    println!("B_10 = {}", bernoulli(10)?);
    println!("s_1..s_6: {:?}", s_sequence(6)?.iter().map(|x| x.to_string()).collect::<Vec<_>>());

    let records = verify_recurrence(20)?;
    let failed = records.iter().filter(|r| !r.passed()).count();
    println!("recurrence checks up to n = 20: {} records, {failed} failed", records.len());
    Ok(())
}
