//! Named families of checks, their default sizes, and the `all` composition.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::verdict::VerdictRecord;
use super::verify::*;
use crate::error::{guard, Error, Result};

/// Largest prime accepted by the congruence check without `force`.
const SUN_UNFORCED_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Theorem1,
    Vanishing,
    Theorem2,
    Recurrence,
    PerA,
    Theorem3,
    EvenCycle,
    CycloEven,
    CycloOdd,
    CycleLemma,
    Derangement,
    WangSun,
    SunCongruence,
}

/// Which sizes of a family to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SizeSelection {
    Default,
    Exactly(usize),
    UpTo(usize),
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::Theorem1,
        Family::Vanishing,
        Family::Theorem2,
        Family::Recurrence,
        Family::PerA,
        Family::Theorem3,
        Family::EvenCycle,
        Family::CycloEven,
        Family::CycloOdd,
        Family::CycleLemma,
        Family::Derangement,
        Family::WangSun,
        Family::SunCongruence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Theorem1 => "theorem1",
            Family::Vanishing => "vanishing",
            Family::Theorem2 => "theorem2",
            Family::Recurrence => "recurrence",
            Family::PerA => "perA",
            Family::Theorem3 => "theorem3",
            Family::EvenCycle => "even-cycle",
            Family::CycloEven => "cyclo-even",
            Family::CycloOdd => "cyclo-odd",
            Family::CycleLemma => "cycle-lemma",
            Family::Derangement => "derangement",
            Family::WangSun => "wang-sun",
            Family::SunCongruence => "sun-congruence",
        }
    }

    /// Sizes are half the number of points for these families.
    fn is_half_size(self) -> bool {
        matches!(
            self,
            Family::Theorem1
                | Family::Vanishing
                | Family::Theorem2
                | Family::PerA
                | Family::Theorem3
                | Family::EvenCycle
        )
    }

    fn smallest(self) -> usize {
        match self {
            Family::Theorem2 | Family::CycloEven | Family::Derangement | Family::WangSun => 2,
            Family::CycloOdd | Family::CycleLemma | Family::SunCongruence => 3,
            _ => 1,
        }
    }

    fn default_largest(self) -> usize {
        match self {
            Family::Theorem1
            | Family::Vanishing
            | Family::Theorem2
            | Family::Theorem3
            | Family::EvenCycle => 3,
            Family::Recurrence => 20,
            Family::PerA | Family::CycleLemma => 6,
            Family::CycloEven | Family::WangSun => 10,
            Family::CycloOdd => 9,
            Family::Derangement => 8,
            Family::SunCongruence => SUN_UNFORCED_LIMIT,
        }
    }

    fn admits(self, k: usize) -> bool {
        match self {
            Family::CycloEven => k % 2 == 0,
            Family::CycloOdd => k % 2 == 1,
            Family::SunCongruence => k % 2 == 1 && (3..k).step_by(2).all(|d| k % d != 0),
            _ => true,
        }
    }

    pub fn sizes(self, sel: SizeSelection) -> Vec<usize> {
        match sel {
            SizeSelection::Exactly(k) => vec![k],
            SizeSelection::Default => self.sizes(SizeSelection::UpTo(self.default_largest())),
            SizeSelection::UpTo(k) => (self.smallest()..=k).filter(|&s| self.admits(s)).collect(),
        }
    }

    /// Runs the family at one size.
    pub fn run(self, size: usize, plan: &TrialPlan) -> Result<Vec<VerdictRecord>> {
        match self {
            Family::Theorem1 => verify_theorem1(size, plan),
            Family::Vanishing => verify_vanishing(size, plan),
            Family::Theorem2 => verify_theorem2(size, plan),
            Family::Recurrence => Ok(verify_recurrence(size)?
                .into_iter()
                .filter(|r| r.n == size as u64)
                .collect()),
            Family::PerA => Ok(verify_per_a(size)?
                .into_iter()
                .filter(|r| r.n == size as u64)
                .collect()),
            Family::Theorem3 => verify_theorem3_per_det(size, plan),
            Family::EvenCycle => verify_even_cycle_expansion(size, plan),
            Family::CycloEven => Ok(vec![verify_cyclotomic_even(size)?]),
            Family::CycloOdd => Ok(vec![verify_cyclotomic_odd(size)?]),
            Family::CycleLemma => verify_cycle_lemma(size, plan),
            Family::Derangement => Ok(vec![verify_derangement_sums(size)?]),
            Family::WangSun => verify_wang_sun_det(size),
            Family::SunCongruence => {
                if !plan.force {
                    guard("sun-congruence p", size, SUN_UNFORCED_LIMIT)?;
                }
                Ok(vec![verify_sun_congruence(size as u64)?])
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity family {s:?}")))
    }
}

/// Runs a family over the selected sizes. Records come back ordered by size,
/// then trial.
pub fn verify_family(
    family: Family,
    sel: SizeSelection,
    plan: &TrialPlan,
) -> Result<Vec<VerdictRecord>> {
    let sizes = family.sizes(sel);
    let per_size: Vec<Vec<VerdictRecord>> = sizes
        .par_iter()
        .map(|&k| family.run(k, plan))
        .collect::<Result<_>>()?;
    Ok(per_size.into_iter().flatten().collect())
}

/// Every family at its default sizes. With `max_n`, the families indexed by
/// half the point count stop at `min(max_n, default)`.
pub fn verify_all(max_n: Option<usize>, plan: &TrialPlan) -> Result<Vec<VerdictRecord>> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let sel = match max_n {
            Some(k) if family.is_half_size() => {
                SizeSelection::UpTo(k.min(family.default_largest()))
            }
            _ => SizeSelection::Default,
        };
        log::info!("verifying {family} at sizes {:?}", family.sizes(sel));
        out.extend(verify_family(family, sel, plan)?);
    }
    Ok(out)
}
