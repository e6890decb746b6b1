//! Filters, ultrafilters and the filter extension principle over finite
//! universes, made executable.
//!
//! Subsets of a finite ground set are bit vectors ([`Subset`]), families of
//! subsets are canonical sorted collections ([`SubsetFamily`]). On top of
//! that sit decidable checkers for every filter-related predicate
//! ([`axioms`]), the closure constructions that extend a family with the
//! finite intersection property to a filter base, a filter and finally an
//! ultrafilter ([`construct`]), brute-force enumeration oracles for small
//! universes ([`enumerate`]), and a finite/cofinite set algebra over the
//! natural numbers in which the Fréchet filter can be exercised
//! ([`cofinite`]).

pub mod axioms;
pub mod cli;
pub mod cofinite;
pub mod construct;
pub mod enumerate;
mod error;
pub mod setcore;

pub use axioms::{Axiom, AxiomReport};
pub use cofinite::{CofiniteSet, Mode};
pub use error::{Error, Hypothesis, Result};
pub use setcore::{Subset, SubsetFamily, Universe};
