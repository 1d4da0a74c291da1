//! Permanents by direct expansion and by Ryser's formula, determinants, and
//! the sequence r_n = per[(j + k)/(j - k)] over 0..=2n.
//!
//! cargo run --release --example permanents

use std::time::Instant;

use permident::builders::build_m;
use permident::identities::rn;
use permident::matrix::{permanent_naive, permanent_ryser, permanent_ryser_parallel};
use permident::{determinant, Rat, SquareMatrix};

fn main() -> permident::Result<()> {
    let m: SquareMatrix<Rat> = "1,2,3;4,5,6;7,8,10".parse()?;
    println!("M = {m}");
    println!("per(M) naive = {}", permanent_naive(&m)?);
    println!("per(M) Ryser = {}", permanent_ryser(&m)?);
    println!("det(M)       = {}", determinant(&m)?);

    for n in 1..=6 {
        let started = Instant::now();
        let value = rn(n)?;
        println!("r_{n} = {value}  ({:.1?})", started.elapsed());
    }

    // The split Ryser sum gives the same value for any number of parts.
    let big = build_m(7);
    let started = Instant::now();
    let serial = permanent_ryser(&big)?;
    let t_serial = started.elapsed();
    let started = Instant::now();
    let parallel = permanent_ryser_parallel(&big, 16)?;
    println!(
        "r_7 serial {:.1?}, 16 parts {:.1?}, equal: {}",
        t_serial,
        started.elapsed(),
        serial == parallel
    );
    Ok(())
}
