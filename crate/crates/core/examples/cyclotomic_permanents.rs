//! Permanents and determinants of [(1 + zeta^(j-k))/(1 - zeta^(j-k))] over
//! Q(zeta_n), including derangement sums and conjugate roots.
//!
//! cargo run --release --example cyclotomic_permanents

use permident::builders::build_c;
use permident::identities::{
    cyclotomic_expected, cyclotomic_permanent, derangement_sum, wang_sun_product,
};
use permident::determinant;

fn main() -> permident::Result<()> {
    println!("{:>3} {:>12} {:>12} {:>10}", "n", "permanent", "expected", "det");
    for n in 2..=11 {
        let size = if n % 2 == 0 { n } else { n - 1 };
        let per = cyclotomic_permanent(n, size, 1)?;
        let det = determinant(&build_c(n, n)?)?;
        println!(
            "{n:>3} {:>12} {:>12} {:>10}",
            per.as_rational().map_or(per.to_string(), |r| r.to_string()),
            cyclotomic_expected(n).to_string(),
            det.as_rational().map_or(det.to_string(), |r| r.to_string()),
        );
        assert_eq!(det.as_rational(), Some(wang_sun_product(n)));
    }

    // Any primitive root gives the same rational value.
    for k in [1, 3, 5, 7] {
        let per = cyclotomic_permanent(8, 8, k)?;
        println!("n = 8 with zeta^{k}: {}", per.as_rational().expect("rational"));
    }

    for n in 2..=7 {
        let m = if n % 2 == 0 { n } else { n - 1 };
        let sum = derangement_sum(n, m)?;
        println!("derangement sum, n = {n}: {}", sum.as_rational().expect("rational"));
    }
    Ok(())
}
