//! World spaces and propositions.
//!
//! A world space enumerates every truth assignment over a list of named
//! atoms; world index `k` assigns atom `i` the truth value of bit `i` of
//! `k`. That bit layout is fixed so serialised circumstances stay stable.
//! A proposition is a subset of the worlds of one space.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Enumeration bound: explicit world sets stay manageable up to here.
pub const MAX_ATOMS: usize = 24;

/// Names reserved by the formula grammar.
const RESERVED: [&str; 2] = ["true", "false"];

/// An ordered list of distinct atom names spanning `2^n` worlds.
#[derive(Debug, PartialEq, Eq)]
pub struct WorldSpace {
    atoms: Vec<String>,
}

impl WorldSpace {
    /// Build a space from atom names. Names must be unique, identifier-shaped
    /// and at most [`MAX_ATOMS`] many.
    pub fn new<S: AsRef<str>>(atom_names: &[S]) -> Result<Arc<WorldSpace>> {
        if atom_names.is_empty() {
            return Err(Error::EmptyAtomList);
        }
        if atom_names.len() > MAX_ATOMS {
            return Err(Error::TooManyAtoms(atom_names.len()));
        }
        let mut atoms = Vec::with_capacity(atom_names.len());
        for name in atom_names {
            let name = name.as_ref();
            validate_atom_name(name)?;
            if atoms.iter().any(|a| a == name) {
                return Err(Error::DuplicateAtom(name.to_string()));
            }
            atoms.push(name.to_string());
        }
        Ok(Arc::new(WorldSpace { atoms }))
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn world_count(&self) -> u32 {
        1u32 << self.atoms.len()
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// Truth value of atom `index` in world `world`.
    pub fn world_satisfies(&self, world: u32, index: usize) -> bool {
        debug_assert!(index < self.atoms.len());
        world & (1 << index) != 0
    }

    /// A name not yet used by this space, derived from `base`.
    pub fn fresh_atom_name(&self, base: &str) -> String {
        if self.atom_index(base).is_none() && !RESERVED.contains(&base) {
            return base.to_string();
        }
        let mut k = 2usize;
        loop {
            let candidate = format!("{base}{k}");
            if self.atom_index(&candidate).is_none() {
                return candidate;
            }
            k += 1;
        }
    }
}

pub(crate) fn validate_atom_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let head_ok = chars
        .next()
        .map(|c| c.is_ascii_alphabetic() || c == '_')
        .unwrap_or(false);
    if !head_ok
        || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        || RESERVED.contains(&name)
    {
        return Err(Error::InvalidAtomName(name.to_string()));
    }
    Ok(())
}

/// A set of worlds of one space, closed under the Boolean operations.
#[derive(Clone, PartialEq, Eq)]
pub struct Proposition {
    space: Arc<WorldSpace>,
    worlds: FixedBitSet,
}

impl Proposition {
    /// The proposition naming a single atom.
    pub fn atom(space: &Arc<WorldSpace>, name: &str) -> Result<Proposition> {
        let index = space.atom_index(name).ok_or_else(|| Error::UnknownAtom {
            name: name.to_string(),
            position: 0,
        })?;
        let mut worlds = FixedBitSet::with_capacity(space.world_count() as usize);
        for world in 0..space.world_count() {
            if space.world_satisfies(world, index) {
                worlds.insert(world as usize);
            }
        }
        Ok(Proposition {
            space: Arc::clone(space),
            worlds,
        })
    }

    /// The certain proposition (all worlds).
    pub fn top(space: &Arc<WorldSpace>) -> Proposition {
        let mut worlds = FixedBitSet::with_capacity(space.world_count() as usize);
        worlds.insert_range(..);
        Proposition {
            space: Arc::clone(space),
            worlds,
        }
    }

    /// The impossible proposition (no worlds).
    pub fn bottom(space: &Arc<WorldSpace>) -> Proposition {
        Proposition {
            space: Arc::clone(space),
            worlds: FixedBitSet::with_capacity(space.world_count() as usize),
        }
    }

    /// A proposition from explicit world indices.
    pub fn from_worlds<I>(space: &Arc<WorldSpace>, iter: I) -> Result<Proposition>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut worlds = FixedBitSet::with_capacity(space.world_count() as usize);
        for world in iter {
            if world >= space.world_count() {
                return Err(Error::UnknownWorld(world));
            }
            worlds.insert(world as usize);
        }
        Ok(Proposition {
            space: Arc::clone(space),
            worlds,
        })
    }

    pub fn space(&self) -> &Arc<WorldSpace> {
        &self.space
    }

    pub fn contains(&self, world: u32) -> bool {
        self.worlds.contains(world as usize)
    }

    pub fn worlds(&self) -> impl Iterator<Item = u32> + '_ {
        self.worlds.ones().map(|w| w as u32)
    }

    pub fn world_count(&self) -> usize {
        self.worlds.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_clear()
    }

    pub fn complement(&self) -> Proposition {
        let mut worlds = self.worlds.clone();
        worlds.toggle_range(..);
        Proposition {
            space: Arc::clone(&self.space),
            worlds,
        }
    }

    /// `true` iff every world of `self` is a world of `other`.
    pub fn entails(&self, other: &Proposition) -> Result<bool> {
        self.check_same_space(other)?;
        Ok(self.worlds.is_subset(&other.worlds))
    }

    /// Material conditional as a world set: `!self | other`.
    pub fn implies(&self, other: &Proposition) -> Proposition {
        &self.complement() | other
    }

    pub(crate) fn check_same_space(&self, other: &Proposition) -> Result<()> {
        if self.space.atoms() != other.space.atoms() {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    fn assert_same_space(&self, other: &Proposition) {
        assert_eq!(
            self.space.atoms(),
            other.space.atoms(),
            "boolean operation across different world spaces"
        );
    }
}

impl BitAnd for &Proposition {
    type Output = Proposition;

    fn bitand(self, rhs: &Proposition) -> Proposition {
        self.assert_same_space(rhs);
        let mut worlds = self.worlds.clone();
        worlds.intersect_with(&rhs.worlds);
        Proposition {
            space: Arc::clone(&self.space),
            worlds,
        }
    }
}

impl BitOr for &Proposition {
    type Output = Proposition;

    fn bitor(self, rhs: &Proposition) -> Proposition {
        self.assert_same_space(rhs);
        let mut worlds = self.worlds.clone();
        worlds.union_with(&rhs.worlds);
        Proposition {
            space: Arc::clone(&self.space),
            worlds,
        }
    }
}

impl Not for &Proposition {
    type Output = Proposition;

    fn not(self) -> Proposition {
        self.complement()
    }
}

impl fmt::Debug for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Proposition{{worlds: [")?;
        for (i, w) in self.worlds().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_spaces_of_expected_size() {
        let s = WorldSpace::new(&["a", "b"]).unwrap();
        assert_eq!(s.world_count(), 4);
        let s = WorldSpace::new(&["r", "b", "h"]).unwrap();
        assert_eq!(s.world_count(), 8);
    }

    #[test]
    fn rejects_bad_atom_lists() {
        assert_eq!(
            WorldSpace::new(&["a", "a"]).unwrap_err(),
            Error::DuplicateAtom("a".into())
        );
        assert_eq!(
            WorldSpace::new::<&str>(&[]).unwrap_err(),
            Error::EmptyAtomList
        );
        let many: Vec<String> = (0..25).map(|i| format!("x{i}")).collect();
        assert_eq!(
            WorldSpace::new(&many).unwrap_err(),
            Error::TooManyAtoms(25)
        );
        assert!(matches!(
            WorldSpace::new(&["true"]).unwrap_err(),
            Error::InvalidAtomName(_)
        ));
        assert!(matches!(
            WorldSpace::new(&["3x"]).unwrap_err(),
            Error::InvalidAtomName(_)
        ));
    }

    #[test]
    fn atom_world_sets_follow_bit_layout() {
        let s = WorldSpace::new(&["a", "b"]).unwrap();
        let a = Proposition::atom(&s, "a").unwrap();
        let b = Proposition::atom(&s, "b").unwrap();
        assert_eq!(a.worlds().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(b.worlds().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn entailment_is_containment() {
        let s = WorldSpace::new(&["a", "b"]).unwrap();
        let a = Proposition::atom(&s, "a").unwrap();
        let b = Proposition::atom(&s, "b").unwrap();
        let ab = &a & &b;
        assert!(ab.entails(&b).unwrap());
        assert!(!b.entails(&ab).unwrap());
        assert!(Proposition::bottom(&s).entails(&a).unwrap());
    }

    #[test]
    fn entailment_requires_one_space() {
        let s = WorldSpace::new(&["a", "b"]).unwrap();
        let t = WorldSpace::new(&["a", "c"]).unwrap();
        let p = Proposition::atom(&s, "a").unwrap();
        let q = Proposition::atom(&t, "a").unwrap();
        assert_eq!(p.entails(&q).unwrap_err(), Error::SpaceMismatch);
    }

    #[test]
    fn double_complement_is_identity() {
        let s = WorldSpace::new(&["a", "b", "c"]).unwrap();
        let p = Proposition::from_worlds(&s, [0, 3, 5]).unwrap();
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn de_morgan() {
        let s = WorldSpace::new(&["a", "b", "c"]).unwrap();
        let p = Proposition::from_worlds(&s, [0, 1, 4]).unwrap();
        let q = Proposition::from_worlds(&s, [1, 2, 7]).unwrap();
        assert_eq!(!&(&p & &q), &(!&p) | &(!&q));
        assert_eq!(!&(&p | &q), &(!&p) & &(!&q));
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let s = WorldSpace::new(&["t", "t2"]).unwrap();
        assert_eq!(s.fresh_atom_name("t"), "t3");
        assert_eq!(s.fresh_atom_name("u"), "u");
    }
}
