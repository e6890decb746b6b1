//! Exhaustive enumeration of the filters and ultrafilters of small universes.
//!
//! Filters over a finite set are exactly the families `{x : b ⊆ x ⊆ A}` for
//! nonempty `b`. [`enumerate_filters`] relies on that characterization and
//! [`enumerate_filters_bruteforce`] checks it against a sweep of every
//! family of subsets.

use std::fmt;

use rayon::prelude::*;

use crate::axioms::{is_filter, is_ultrafilter};
use crate::error::{Error, Result};
use crate::setcore::{powerset_iter, Subset, SubsetFamily, Universe};

pub const ENUMERATION_LIMIT: usize = 10;
pub const BRUTEFORCE_LIMIT: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnumerationKind {
    Filters,
    Ultrafilters,
}

impl fmt::Display for EnumerationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumerationKind::Filters => "filters",
            EnumerationKind::Ultrafilters => "ultrafilters",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub universe_size: usize,
    pub kind: EnumerationKind,
    pub families: Vec<SubsetFamily>,
    pub count: usize,
}

impl EnumerationResult {
    fn new(universe_size: usize, kind: EnumerationKind, mut families: Vec<SubsetFamily>) -> Self {
        families.sort_unstable();
        families.dedup();
        EnumerationResult {
            universe_size,
            kind,
            count: families.len(),
            families,
        }
    }
}

fn ensure_size(universe: &Universe, limit: usize) -> Result<()> {
    if universe.size() > limit {
        Err(Error::Capacity {
            what: "universe size for enumeration",
            limit: limit as u64,
            found: universe.size() as u64,
        })
    } else {
        Ok(())
    }
}

/// Every filter over `universe`, one per nonempty generator `b`.
pub fn enumerate_filters(universe: &Universe) -> Result<EnumerationResult> {
    ensure_size(universe, ENUMERATION_LIMIT)?;
    let families = powerset_iter(universe)?
        .filter(|b| !b.is_empty())
        .map(SubsetFamily::upset)
        .collect::<Result<Vec<_>>>()?;
    Ok(EnumerationResult::new(
        universe.size(),
        EnumerationKind::Filters,
        families,
    ))
}

/// Every filter over `universe`, found by testing all `2^(2^n)` families.
pub fn enumerate_filters_bruteforce(universe: &Universe) -> Result<EnumerationResult> {
    ensure_size(universe, BRUTEFORCE_LIMIT)?;
    let subsets: Vec<Subset> = powerset_iter(universe)?.collect();
    let n_families = 1u64 << subsets.len();
    let families = (0..n_families)
        .into_par_iter()
        .map(|selection| {
            let family = SubsetFamily::new(
                universe.size(),
                subsets
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| selection & (1 << i) != 0)
                    .map(|(_, s)| *s),
            )?;
            Ok(is_filter(&family, universe)?.verdict.then_some(family))
        })
        .collect::<Result<Vec<Option<SubsetFamily>>>>()?;
    Ok(EnumerationResult::new(
        universe.size(),
        EnumerationKind::Filters,
        families.into_iter().flatten().collect(),
    ))
}

/// Every ultrafilter over `universe`: the enumerated filters that pass the
/// ultrafilter check.
pub fn enumerate_ultrafilters(universe: &Universe) -> Result<EnumerationResult> {
    let filters = enumerate_filters(universe)?;
    let mut families = Vec::new();
    for f in filters.families {
        if is_ultrafilter(&f, universe)?.verdict {
            families.push(f);
        }
    }
    Ok(EnumerationResult::new(
        universe.size(),
        EnumerationKind::Ultrafilters,
        families,
    ))
}
