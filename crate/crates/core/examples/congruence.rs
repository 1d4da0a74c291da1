//! For odd primes p, the sum over S_{p-1} of prod (j + tau(j))/(j - tau(j))
//! reduced modulo p^2, next to ((p - 2)!!)^2.
//!
//! cargo run --release --example congruence

use num_bigint::BigInt;
use num_integer::Integer;
use permident::identities::{rational_residue, sun_sum};
use permident::perm::double_factorial;

fn main() -> permident::Result<()> {
    for p in [3u64, 5, 7, 11, 13] {
        let sum = sun_sum(p)?;
        let m = BigInt::from(p * p);
        let df = double_factorial(p - 2);
        println!(
            "p = {p:>2}: sum = {sum}\n        sum mod p^2 = {}, ((p-2)!!)^2 mod p^2 = {}",
            rational_residue(&sum, &m)?,
            (&df * &df).mod_floor(&m)
        );
    }
    Ok(())
}
