//! Decidable checkers for the filter-related predicates, each returning an
//! [`AxiomReport`] that names the first violated axiom and a witness.
//!
//! "First" is with respect to the canonical ascending subset order, so every
//! report is deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::setcore::{
    ensure_scannable, intersect_all, powerset_iter, Subset, SubsetFamily, Universe,
};

/// Largest family [`has_fip_oracle`] will enumerate subfamilies of.
pub const FIP_ORACLE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    NotSubsetFamily,
    EmptyMember,
    GroundSetMissing,
    NotIntersectionClosed,
    NotUpwardClosed,
    EmptyFamily,
    DichotomyFails,
    NotMaximal,
    NotFilter,
    FiniteMember,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::NotSubsetFamily => "a member is not a subset of the universe",
            Axiom::EmptyMember => "empty set is a member",
            Axiom::GroundSetMissing => "universe is not a member",
            Axiom::NotIntersectionClosed => "not closed under intersection",
            Axiom::NotUpwardClosed => "not closed under supersets",
            Axiom::EmptyFamily => "family is empty",
            Axiom::DichotomyFails => "neither a set nor its complement is a member",
            Axiom::NotMaximal => "a strictly larger filter exists",
            Axiom::NotFilter => "not a filter",
            Axiom::FiniteMember => "a finite set is a member",
        })
    }
}

/// Verdict of a checker. A failed verdict always carries the violated axiom
/// and a witness; a passing one carries neither.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport<W = Subset> {
    pub verdict: bool,
    pub failed_axiom: Option<Axiom>,
    pub witness: Option<Vec<W>>,
}

impl<W> AxiomReport<W> {
    pub fn pass() -> Self {
        AxiomReport {
            verdict: true,
            failed_axiom: None,
            witness: None,
        }
    }

    pub fn fail(axiom: Axiom, witness: Vec<W>) -> Self {
        AxiomReport {
            verdict: false,
            failed_axiom: Some(axiom),
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict
    }
}

macro_rules! bail_if_failed {
    ($report:expr) => {
        let report = $report;
        if !report.verdict {
            return Ok(report);
        }
    };
}

fn check_subset_family(family: &SubsetFamily, universe: &Universe) -> AxiomReport {
    let full = universe.full();
    match family.iter().find(|m| !m.is_subset_of(&full)) {
        Some(m) => AxiomReport::fail(Axiom::NotSubsetFamily, vec![*m]),
        None => AxiomReport::pass(),
    }
}

fn check_no_empty_member(family: &SubsetFamily, universe: &Universe) -> AxiomReport {
    let empty = universe.empty();
    if family.contains(&empty) {
        AxiomReport::fail(Axiom::EmptyMember, vec![empty])
    } else {
        AxiomReport::pass()
    }
}

fn check_intersection_closed(family: &SubsetFamily) -> AxiomReport {
    let members = family.members();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if !family.contains(&a.intersect(b)) {
                return AxiomReport::fail(Axiom::NotIntersectionClosed, vec![*a, *b]);
            }
        }
    }
    AxiomReport::pass()
}

// Closure under single-element additions implies closure under all supersets.
fn check_upward_closed(family: &SubsetFamily) -> AxiomReport {
    for a in family {
        for i in a.complement().indices() {
            let b = a.with(i);
            if !family.contains(&b) {
                return AxiomReport::fail(Axiom::NotUpwardClosed, vec![*a, b]);
            }
        }
    }
    AxiomReport::pass()
}

/// Checks that `family` is a filter over `universe`: a family of subsets
/// without `∅`, containing the universe, closed under pairwise intersection
/// and under supersets.
pub fn is_filter(family: &SubsetFamily, universe: &Universe) -> Result<AxiomReport> {
    universe.check_width(family.width())?;
    bail_if_failed!(check_subset_family(family, universe));
    bail_if_failed!(check_no_empty_member(family, universe));
    let full = universe.full();
    if !family.contains(&full) {
        return Ok(AxiomReport::fail(Axiom::GroundSetMissing, vec![full]));
    }
    bail_if_failed!(check_intersection_closed(family));
    Ok(check_upward_closed(family))
}

/// Checks that `family` is a filter base: nonempty, `∅`-free and closed
/// under pairwise intersection.
pub fn is_filter_base(family: &SubsetFamily, universe: &Universe) -> Result<AxiomReport> {
    universe.check_width(family.width())?;
    if family.is_empty() {
        return Ok(AxiomReport::fail(Axiom::EmptyFamily, Vec::new()));
    }
    bail_if_failed!(check_subset_family(family, universe));
    bail_if_failed!(check_no_empty_member(family, universe));
    Ok(check_intersection_closed(family))
}

/// Finite intersection property.
///
/// Intersections only shrink as members are added, so it is enough to look
/// at the intersection of the whole family. The empty family passes.
pub fn has_fip(family: &SubsetFamily) -> bool {
    match intersect_all(family) {
        Ok(core) => !core.is_empty(),
        Err(_) => true,
    }
}

/// Finite intersection property by enumerating every nonempty subfamily.
pub fn has_fip_oracle(family: &SubsetFamily) -> Result<bool> {
    let k = family.len();
    if k > FIP_ORACLE_LIMIT {
        return Err(Error::Capacity {
            what: "family size for subfamily enumeration",
            limit: FIP_ORACLE_LIMIT as u64,
            found: k as u64,
        });
    }
    let members = family.members();
    for selection in 1u32..(1u32 << k) {
        let mut chosen = (0..k)
            .filter(|i| selection & (1 << i) != 0)
            .map(|i| members[i]);
        let first = chosen.next().expect("selection is nonempty");
        if chosen.fold(first, |acc, m| acc.intersect(&m)).is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn filter_precondition(family: &SubsetFamily, universe: &Universe) -> Result<AxiomReport> {
    let report = is_filter(family, universe)?;
    Ok(match report.witness {
        Some(w) => AxiomReport::fail(Axiom::NotFilter, w),
        None => AxiomReport::pass(),
    })
}

/// Checks that `family` is an ultrafilter: a filter containing, for every
/// `a ⊆ A`, either `a` or `A ∼ a`.
///
/// When the family is not a filter the report names [`Axiom::NotFilter`] and
/// carries the witness [`is_filter`] produced.
pub fn is_ultrafilter(family: &SubsetFamily, universe: &Universe) -> Result<AxiomReport> {
    universe.check_width(family.width())?;
    ensure_scannable(universe)?;
    bail_if_failed!(filter_precondition(family, universe)?);
    for a in powerset_iter(universe)? {
        if !family.contains(&a) && !family.contains(&a.complement()) {
            return Ok(AxiomReport::fail(Axiom::DichotomyFails, vec![a]));
        }
    }
    Ok(AxiomReport::pass())
}

/// Checks that `family` is a maximal filter.
///
/// A filter `F` has a proper filter extension iff some `a ∉ F` keeps
/// `F ∪ {a}` consistent (finite intersection property), since such a family
/// generates a filter. The witness is the first such `a`.
pub fn is_max_filter(family: &SubsetFamily, universe: &Universe) -> Result<AxiomReport> {
    universe.check_width(family.width())?;
    ensure_scannable(universe)?;
    bail_if_failed!(filter_precondition(family, universe)?);
    let core = intersect_all(family)?;
    for a in powerset_iter(universe)? {
        if !family.contains(&a) && !core.intersect(&a).is_empty() {
            return Ok(AxiomReport::fail(Axiom::NotMaximal, vec![a]));
        }
    }
    Ok(AxiomReport::pass())
}

/// Checks that `family` is a free ultrafilter: an ultrafilter none of whose
/// members is a finite subset of the universe. Over a finite universe this
/// fails for every ultrafilter.
pub fn is_free_ultrafilter(family: &SubsetFamily, universe: &Universe) -> Result<AxiomReport> {
    bail_if_failed!(is_ultrafilter(family, universe)?);
    match family.iter().find(|m| m.is_finite()) {
        Some(m) => Ok(AxiomReport::fail(Axiom::FiniteMember, vec![*m])),
        None => Ok(AxiomReport::pass()),
    }
}

/// Returns the element `a` when `family` is exactly the principal family
/// `{u ⊆ A : a ∈ u}`.
pub fn is_principal(family: &SubsetFamily, universe: &Universe) -> Result<Option<usize>> {
    universe.check_width(family.width())?;
    let Ok(core) = intersect_all(family) else {
        return Ok(None);
    };
    if core.len() != 1 {
        return Ok(None);
    }
    // every member contains `a`, and there are exactly as many members as
    // subsets containing `a`
    let expected = 1u64 << (universe.size() - 1);
    if family.len() as u64 == expected {
        Ok(core.indices().next())
    } else {
        Ok(None)
    }
}
