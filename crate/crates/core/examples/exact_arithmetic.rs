//! Big rationals and cyclotomic field elements.
//!
//! cargo run --example exact_arithmetic

use permident::arith::{cyclotomic_poly, CycloField};
use permident::Rat;

fn main() -> permident::Result<()> {
    let a: Rat = "5870/9".parse()?;
    let b: Rat = "-10".parse()?;
    println!("{a} * {b} = {}", &a * &b);
    println!("{a} / {b} = {}", a.checked_div(&b)?);
    println!("(2/3)^-3 = {}", Rat::new(2, 3)?.pow(-3)?);

    for n in [4, 5, 6, 12] {
        println!("Phi_{n} = {}", cyclotomic_poly(n));
    }

    // In Q(i), 1/(1 - i) = (1 + i)/2.
    let qi = CycloField::new(4)?;
    let one_minus_i = &qi.one() - &qi.root_power(1);
    println!("1/(1 - i) = {}", one_minus_i.inv()?);

    // zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4 = -1
    let f5 = CycloField::new(5)?;
    let sum = (1..5).fold(f5.zero(), |acc, k| &acc + &f5.root_power(k));
    println!("sum of primitive 5th roots = {}", sum.as_rational().expect("rational"));
    Ok(())
}
