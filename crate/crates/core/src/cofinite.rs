//! Finite and cofinite subsets of the natural numbers.
//!
//! These form a Boolean algebra closed under complement and intersection, and
//! the Fréchet filter (the cofinite sets) lives inside it. Sets that are
//! neither finite nor cofinite, like the even numbers, are not representable.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::axioms::{Axiom, AxiomReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exactly the support.
    Finite,
    /// Every natural number except the support.
    Cofinite,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CofiniteSet {
    pub mode: Mode,
    pub support: BTreeSet<u64>,
}

impl CofiniteSet {
    pub fn finite<I: IntoIterator<Item = u64>>(support: I) -> Self {
        CofiniteSet {
            mode: Mode::Finite,
            support: support.into_iter().collect(),
        }
    }

    pub fn cofinite<I: IntoIterator<Item = u64>>(excluded: I) -> Self {
        CofiniteSet {
            mode: Mode::Cofinite,
            support: excluded.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        CofiniteSet::finite([])
    }

    /// ω, the set of all natural numbers.
    pub fn omega() -> Self {
        CofiniteSet::cofinite([])
    }

    pub fn is_finite(&self) -> bool {
        self.mode == Mode::Finite
    }

    pub fn is_empty(&self) -> bool {
        self.mode == Mode::Finite && self.support.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        match self.mode {
            Mode::Finite => self.support.contains(&n),
            Mode::Cofinite => !self.support.contains(&n),
        }
    }

    pub fn complement(&self) -> Self {
        cof_complement(self)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        cof_intersect(self, other)
    }

    pub fn union(&self, other: &Self) -> Self {
        cof_complement(&cof_intersect(
            &cof_complement(self),
            &cof_complement(other),
        ))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        cof_intersect(self, &cof_complement(other)).is_empty()
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support.iter().map(u64::to_string).collect();
        match self.mode {
            Mode::Finite => write!(f, "{{{}}}", parts.join(",")),
            Mode::Cofinite if parts.is_empty() => f.write_str("ω"),
            Mode::Cofinite => write!(f, "ω∖{{{}}}", parts.join(",")),
        }
    }
}

pub fn cof_complement(s: &CofiniteSet) -> CofiniteSet {
    CofiniteSet {
        mode: match s.mode {
            Mode::Finite => Mode::Cofinite,
            Mode::Cofinite => Mode::Finite,
        },
        support: s.support.clone(),
    }
}

pub fn cof_intersect(s: &CofiniteSet, t: &CofiniteSet) -> CofiniteSet {
    use Mode::*;
    match (s.mode, t.mode) {
        (Finite, Finite) => CofiniteSet::finite(s.support.intersection(&t.support).copied()),
        (Finite, Cofinite) => CofiniteSet::finite(s.support.difference(&t.support).copied()),
        (Cofinite, Finite) => CofiniteSet::finite(t.support.difference(&s.support).copied()),
        (Cofinite, Cofinite) => CofiniteSet::cofinite(s.support.union(&t.support).copied()),
    }
}

/// Membership in the Fréchet filter over ω: the complement is finite.
pub fn frechet_contains(s: &CofiniteSet) -> bool {
    cof_complement(s).is_finite()
}

/// Checks the filter axioms of the Fréchet filter on `samples`, their
/// pairwise intersections and unions, `∅` and `ω`, and that no finite set is
/// a member.
pub fn frechet_axiom_suite(samples: &[CofiniteSet]) -> AxiomReport<CofiniteSet> {
    let empty = CofiniteSet::empty();
    let omega = CofiniteSet::omega();
    if frechet_contains(&empty) {
        return AxiomReport::fail(Axiom::EmptyMember, vec![empty]);
    }
    if !frechet_contains(&omega) {
        return AxiomReport::fail(Axiom::GroundSetMissing, vec![omega]);
    }

    let mut closure: BTreeSet<CofiniteSet> = samples.iter().cloned().collect();
    closure.insert(empty);
    closure.insert(omega);
    for (i, s) in samples.iter().enumerate() {
        for t in &samples[i..] {
            closure.insert(cof_intersect(s, t));
            closure.insert(s.union(t));
        }
    }
    let closure: Vec<CofiniteSet> = closure.into_iter().collect();

    for s in &closure {
        if s.is_finite() && frechet_contains(s) {
            return AxiomReport::fail(Axiom::FiniteMember, vec![s.clone()]);
        }
    }
    let members: Vec<&CofiniteSet> = closure.iter().filter(|s| frechet_contains(s)).collect();
    for (i, s) in members.iter().enumerate() {
        for t in &members[i..] {
            if !frechet_contains(&cof_intersect(s, t)) {
                return AxiomReport::fail(
                    Axiom::NotIntersectionClosed,
                    vec![(*s).clone(), (*t).clone()],
                );
            }
        }
    }
    for s in &members {
        for t in &closure {
            let bigger = s.union(t);
            debug_assert!(s.is_subset_of(&bigger));
            if !frechet_contains(&bigger) {
                return AxiomReport::fail(Axiom::NotUpwardClosed, vec![(*s).clone(), bigger]);
            }
            if s.is_subset_of(t) && !frechet_contains(t) {
                return AxiomReport::fail(Axiom::NotUpwardClosed, vec![(*s).clone(), t.clone()]);
            }
        }
    }
    AxiomReport::pass()
}
