//! Constructions: principal ultrafilters, the Fréchet family of a finite set,
//! and the chain of extensions family → filter base → filter → ultrafilter.

use std::collections::BTreeSet;

use crate::axioms::{has_fip, is_filter};
use crate::error::{Error, Hypothesis, Result};
use crate::setcore::{
    ensure_scannable, intersect_all, powerset_iter, Subset, SubsetFamily, Universe,
    MATERIALIZE_LIMIT,
};

/// `F_a = {u ⊆ A : a ∈ u}`.
pub fn principal_ultrafilter(universe: &Universe, element: usize) -> Result<SubsetFamily> {
    let a = universe.singleton(element)?;
    SubsetFamily::upset(a)
}

/// The Fréchet family `{a ⊆ A : A ∼ a is finite}` of a finite universe.
///
/// Every complement is finite here, so the result is all of `pow(A)`,
/// including `∅`, and is not a filter.
pub fn frechet_finite(universe: &Universe) -> Result<SubsetFamily> {
    ensure_scannable(universe)?;
    SubsetFamily::new(
        universe.size(),
        powerset_iter(universe)?.filter(|a| a.complement().is_finite()),
    )
}

/// Closes a nonempty family under finite intersections: the family of
/// `a₁ ∩ ⋯ ∩ aₙ` over all `n ≥ 1` choices of members.
pub fn base_from_family(family: &SubsetFamily) -> Result<SubsetFamily> {
    if family.is_empty() {
        return Err(Error::EmptyFamily("base_from_family"));
    }
    let generators = family.members();
    let mut closed: BTreeSet<Subset> = generators.iter().copied().collect();
    let mut frontier: Vec<Subset> = generators.to_vec();
    // every ∩S arises by intersecting generators into a running value one at a time
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for f in &frontier {
            for g in generators {
                let meet = f.intersect(g);
                if closed.insert(meet) {
                    next.push(meet);
                }
            }
        }
        frontier = next;
    }
    Ok(SubsetFamily::from_set(family.width(), closed))
}

/// The upward closure `{u ⊆ A : ∃ b ∈ B, b ⊆ u}` of a family within `A`.
pub fn filter_from_base(base: &SubsetFamily, universe: &Universe) -> Result<SubsetFamily> {
    universe.check_width(base.width())?;
    // generators that are minimal under inclusion; ascending order visits
    // every subset before its supersets
    let mut minimal: Vec<Subset> = Vec::new();
    for b in base {
        if !minimal.iter().any(|m| m.is_subset_of(b)) {
            minimal.push(*b);
        }
    }
    let bound: u64 = minimal
        .iter()
        .map(|b| 1u64 << (universe.size() - b.len()).min(63))
        .fold(0u64, u64::saturating_add);
    if bound > MATERIALIZE_LIMIT {
        return Err(Error::Capacity {
            what: "generated family size",
            limit: MATERIALIZE_LIMIT,
            found: bound,
        });
    }
    let mut up = BTreeSet::new();
    for b in &minimal {
        up.extend(b.supersets());
    }
    Ok(SubsetFamily::from_set(universe.size(), up))
}

/// The filter generated by a nonempty family:
/// `{u ⊆ A : ∃ a₁, …, aₙ ∈ G, a₁ ∩ ⋯ ∩ aₙ ⊆ u}`.
pub fn filter_from_family(family: &SubsetFamily, universe: &Universe) -> Result<SubsetFamily> {
    universe.check_width(family.width())?;
    filter_from_base(&base_from_family(family)?, universe)
}

/// Which side of a complementary pair the greedy scan adjoined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Subset,
    Complement,
}

/// One step of [`extend_to_ultrafilter_traced`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreedyStep {
    pub considered: Subset,
    pub side: Side,
    pub adjoined: Subset,
}

/// Extends a filter to an ultrafilter containing it.
///
/// Subsets `a ⊆ A` are visited in ascending order; `a` is adjoined when the
/// family stays consistent with it, otherwise `A ∼ a` is. The result is the
/// filter generated by everything adjoined.
pub fn extend_to_ultrafilter(filter: &SubsetFamily, universe: &Universe) -> Result<SubsetFamily> {
    extend_to_ultrafilter_traced(filter, universe).map(|(f, _)| f)
}

pub fn extend_to_ultrafilter_traced(
    filter: &SubsetFamily,
    universe: &Universe,
) -> Result<(SubsetFamily, Vec<GreedyStep>)> {
    ensure_scannable(universe)?;
    if !is_filter(filter, universe)?.verdict {
        return Err(Error::Precondition(Hypothesis::Filter));
    }
    // The running intersection of the accumulated family: `current ∪ {a}` has
    // the finite intersection property exactly when `core ∩ a ≠ ∅`.
    let mut core = intersect_all(filter)?;
    let mut adjoined: BTreeSet<Subset> = filter.iter().copied().collect();
    let mut trace = Vec::with_capacity(1 << universe.size());
    for a in powerset_iter(universe)? {
        let meet = core.intersect(&a);
        let (side, chosen) = if meet.is_empty() {
            (Side::Complement, a.complement())
        } else {
            (Side::Subset, a)
        };
        core = core.intersect(&chosen);
        debug_assert!(!core.is_empty());
        adjoined.insert(chosen);
        trace.push(GreedyStep {
            considered: a,
            side,
            adjoined: chosen,
        });
    }
    let family = SubsetFamily::from_set(universe.size(), adjoined);
    Ok((filter_from_family(&family, universe)?, trace))
}

/// Hypotheses shared by every extension: a nonempty family of subsets of the
/// universe with the finite intersection property.
pub fn check_extension_hypotheses(family: &SubsetFamily, universe: &Universe) -> Result<()> {
    universe.check_width(family.width())?;
    if family.is_empty() {
        return Err(Error::Precondition(Hypothesis::NonemptyFamily));
    }
    let full = universe.full();
    if family.iter().any(|m| !m.is_subset_of(&full)) {
        return Err(Error::Precondition(Hypothesis::SubsetFamily));
    }
    if !has_fip(family) {
        return Err(Error::Precondition(Hypothesis::FiniteIntersection));
    }
    Ok(())
}

/// Extends a nonempty family with the finite intersection property to an
/// ultrafilter containing it.
pub fn fep(family: &SubsetFamily, universe: &Universe) -> Result<SubsetFamily> {
    fep_traced(family, universe).map(|(f, _)| f)
}

pub fn fep_traced(
    family: &SubsetFamily,
    universe: &Universe,
) -> Result<(SubsetFamily, Vec<GreedyStep>)> {
    check_extension_hypotheses(family, universe)?;
    ensure_scannable(universe)?;
    let filter = filter_from_family(family, universe)?;
    extend_to_ultrafilter_traced(&filter, universe)
}
