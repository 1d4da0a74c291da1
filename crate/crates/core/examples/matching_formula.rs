//! S(x_1, ..., x_2n) = per[(x_j + x_k)/(x_j - x_k)] computed three ways: by
//! direct expansion, by Ryser's formula, and as a sum over perfect matchings.
//!
//! cargo run --example matching_formula -- 1,2,3,4

use permident::builders::PointVector;
use permident::identities::{s_by_definition, s_by_definition_naive, s_by_matching};

fn main() -> permident::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "1,2,3,4".into());
    let xs: PointVector = arg.parse()?;
    println!("points: {xs}");
    println!("Ryser:     {}", s_by_definition(&xs)?);
    if xs.len() <= 10 {
        println!("naive:     {}", s_by_definition_naive(&xs)?);
    }
    println!("matchings: {}", s_by_matching(&xs)?);

    let with_zero: PointVector = "0,5,7,11".parse()?;
    println!("with a zero coordinate ({with_zero}): {}", s_by_definition(&with_zero)?);
    Ok(())
}
