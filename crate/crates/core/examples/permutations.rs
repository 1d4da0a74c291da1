//! Cycle decompositions, derangements, k-cycles, and perfect matchings.
//!
//! cargo run --example permutations

use permident::perm::{derangements, even_cycle_perms, k_cycles, pair_partitions};
use permident::Permutation;

fn main() -> permident::Result<()> {
    let p: Permutation = "[3,1,2,5,4,6]".parse()?;
    let d = p.cycle_decompose();
    println!("{p} = {d}, sign {}, type {:?}", p.sign(), p.cycle_type());
    println!("inverse {}", p.inverse());

    let q = Permutation::parse_cycles(6, "(1 6)(2 3)")?;
    println!("{p} o {q} = {}", p.compose(&q)?);

    println!("derangements of 4:");
    for t in derangements(4)? {
        println!("  {t}  {}", t.cycle_decompose());
    }
    println!("3-cycles on 4 points: {}", k_cycles(4, 3)?.count());
    println!("even-cycle permutations of 6: {}", even_cycle_perms(6)?.count());
    for m in pair_partitions(4)? {
        println!("matching {:?}", m.pairs());
    }
    Ok(())
}
