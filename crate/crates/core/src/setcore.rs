//! Ground sets, bit-vector subsets and canonical subset families.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Largest universe a [`Subset`] can index: one machine word, top bit unused.
pub const CAPACITY: usize = 63;

/// Largest universe for operations that walk all of `pow(A)`.
pub const SCAN_LIMIT: usize = 20;

/// Largest family an operation will materialize.
pub const MATERIALIZE_LIMIT: u64 = 1 << SCAN_LIMIT;

/// A named, ordered finite ground set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if labels.len() > CAPACITY {
            return Err(Error::Capacity {
                what: "universe size",
                limit: CAPACITY as u64,
                found: labels.len() as u64,
            });
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe { labels })
    }

    /// A universe of `size` elements labelled `e0`, `e1`, ...
    pub fn with_size(size: usize) -> Result<Self> {
        Universe::new((0..size).map(|i| format!("e{i}")))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.get(index).map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    /// The ground set itself, as a subset.
    pub fn full(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.size())
    }

    pub fn singleton(&self, index: usize) -> Result<Subset> {
        Subset::from_indices(self.size(), [index])
    }

    /// Builds a subset from element names.
    pub fn subset<'a, I>(&self, names: I) -> Result<Subset>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut bits = 0u64;
        for name in names {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownElement(name.to_owned()))?;
            bits |= 1 << i;
        }
        Ok(Subset {
            bits,
            width: self.size() as u8,
        })
    }

    pub fn check_width(&self, width: usize) -> Result<()> {
        if width == self.size() {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                expected: self.size(),
                found: width,
            })
        }
    }

    pub fn names(&self, a: &Subset) -> Vec<&str> {
        a.indices().map(|i| self.labels[i].as_str()).collect()
    }

    /// Renders a subset as `{x,y}`.
    pub fn render(&self, a: &Subset) -> String {
        format!("{{{}}}", self.names(a).join(","))
    }

    pub fn render_family(&self, family: &SubsetFamily) -> String {
        let parts: Vec<String> = family.iter().map(|a| self.render(a)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// A subset of a universe of `width` elements; bit `i` is element `i`.
///
/// Ordering is by numeric bit-vector value, which is the canonical order used
/// everywhere in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u64,
    width: u8,
}

#[inline]
fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        debug_assert!(width <= CAPACITY);
        Subset {
            bits: 0,
            width: width as u8,
        }
    }

    pub fn full(width: usize) -> Self {
        debug_assert!(width <= CAPACITY);
        Subset {
            bits: mask(width),
            width: width as u8,
        }
    }

    pub fn from_bits(bits: u64, width: usize) -> Result<Self> {
        if width > CAPACITY {
            return Err(Error::Capacity {
                what: "universe size",
                limit: CAPACITY as u64,
                found: width as u64,
            });
        }
        if bits & !mask(width) != 0 {
            return Err(Error::StrayBits { width });
        }
        Ok(Subset {
            bits,
            width: width as u8,
        })
    }

    pub fn from_indices<I>(width: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for index in indices {
            if index >= width {
                return Err(Error::ElementOutOfRange { index, size: width });
            }
            bits |= 1 << index;
        }
        Subset::from_bits(bits, width)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.width() && self.bits & (1 << index) != 0
    }

    /// Every subset of a finite universe is finite; kept as a predicate so
    /// that checkers can state the finiteness test literally.
    pub fn is_finite(&self) -> bool {
        true
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.width, other.width);
        Subset {
            bits: self.bits & other.bits,
            width: self.width,
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.width, other.width);
        Subset {
            bits: self.bits | other.bits,
            width: self.width,
        }
    }

    /// Complement relative to the full set of this subset's width.
    pub fn complement(&self) -> Subset {
        Subset {
            bits: !self.bits & mask(self.width()),
            width: self.width,
        }
    }

    pub fn with(&self, index: usize) -> Subset {
        debug_assert!(index < self.width());
        Subset {
            bits: self.bits | (1 << index),
            width: self.width,
        }
    }

    /// Element positions in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// All supersets of `self` within its universe, ascending.
    pub fn supersets(&self) -> impl Iterator<Item = Subset> {
        let base = self.bits;
        let free = !base & mask(self.width());
        let width = self.width;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let s = next?;
            // ascending walk over the submasks of `free`
            next = if s == free {
                None
            } else {
                Some(((s | !free).wrapping_add(1)) & free)
            };
            Some(Subset {
                bits: base | s,
                width,
            })
        })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// `A ∼ a`: the elements of `universe` not in `a`.
pub fn complement(universe: &Universe, a: &Subset) -> Result<Subset> {
    universe.check_width(a.width())?;
    Ok(a.complement())
}

/// Intersection of every member of a nonempty family.
///
/// The empty family is rejected; callers decide what an empty intersection
/// means in their context.
pub fn intersect_all(family: &SubsetFamily) -> Result<Subset> {
    let mut members = family.iter();
    let first = members.next().ok_or(Error::EmptyFamily("intersect_all"))?;
    Ok(members.fold(*first, |acc, m| acc.intersect(m)))
}

/// Every subset of `universe`, ascending.
pub fn powerset_iter(universe: &Universe) -> Result<impl Iterator<Item = Subset>> {
    let width = universe.size();
    if width > CAPACITY {
        return Err(Error::Capacity {
            what: "universe size",
            limit: CAPACITY as u64,
            found: width as u64,
        });
    }
    Ok((0..=mask(width)).map(move |bits| Subset {
        bits,
        width: width as u8,
    }))
}

pub(crate) fn ensure_scannable(universe: &Universe) -> Result<()> {
    if universe.size() > SCAN_LIMIT {
        return Err(Error::Capacity {
            what: "universe size for a powerset scan",
            limit: SCAN_LIMIT as u64,
            found: universe.size() as u64,
        });
    }
    Ok(())
}

/// A deduplicated family of subsets of one universe, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetFamily {
    members: Vec<Subset>,
    width: usize,
}

impl SubsetFamily {
    pub fn empty(width: usize) -> Self {
        SubsetFamily {
            members: Vec::new(),
            width,
        }
    }

    pub fn new<I>(width: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut members: Vec<Subset> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| m.width() != width) {
            return Err(Error::WidthMismatch {
                expected: width,
                found: bad.width(),
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(SubsetFamily { members, width })
    }

    pub(crate) fn from_set(width: usize, members: BTreeSet<Subset>) -> Self {
        SubsetFamily {
            members: members.into_iter().collect(),
            width,
        }
    }

    /// All subsets of `universe`.
    pub fn powerset(universe: &Universe) -> Result<Self> {
        ensure_scannable(universe)?;
        Ok(SubsetFamily {
            members: powerset_iter(universe)?.collect(),
            width: universe.size(),
        })
    }

    /// The family `{x : base ⊆ x ⊆ A}`.
    pub fn upset(base: Subset) -> Result<Self> {
        let free = base.width() - base.len();
        if free > SCAN_LIMIT {
            return Err(Error::Capacity {
                what: "generated family size",
                limit: MATERIALIZE_LIMIT,
                found: 1u64 << free.min(63),
            });
        }
        Ok(SubsetFamily {
            members: base.supersets().collect(),
            width: base.width(),
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subset> {
        self.members.iter()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn contains(&self, a: &Subset) -> bool {
        a.width() == self.width && self.members.binary_search(a).is_ok()
    }

    /// `self ∪ {a}`.
    pub fn with(&self, a: Subset) -> Result<Self> {
        if a.width() != self.width {
            return Err(Error::WidthMismatch {
                expected: self.width,
                found: a.width(),
            });
        }
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&a) {
            members.insert(pos, a);
        }
        Ok(SubsetFamily {
            members,
            width: self.width,
        })
    }

    pub fn is_subfamily_of(&self, other: &SubsetFamily) -> bool {
        self.width == other.width && self.members.iter().all(|m| other.contains(m))
    }
}

impl<'a> IntoIterator for &'a SubsetFamily {
    type Item = &'a Subset;
    type IntoIter = std::slice::Iter<'a, Subset>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
