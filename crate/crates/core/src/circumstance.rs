//! Circumstances: tiered exact-rational probability assignments.
//!
//! A circumstance carries an ordered list of tiers with pairwise disjoint
//! supports. Tier 0 defines all unconditional probabilities; deeper tiers
//! hold counterfactual structure, so that conditioning on a proposition of
//! probability zero is still well defined. Worlds in no tier are
//! inconceivable and stay inconceivable under every operation.
//!
//! Judging a proposition demotes the worlds that contradict it instead of
//! deleting them, which keeps the pre-judgment state recoverable and keeps
//! conditionals on zero-probability propositions meaningful.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ratio::{format_ratio, parse_ratio, ratio};
use crate::space::{Proposition, WorldSpace};

/// One distribution in the lexicographic hierarchy. All weights are
/// strictly positive and sum to exactly one; zero-weight worlds are
/// simply absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tier {
    weights: BTreeMap<u32, BigRational>,
}

impl Tier {
    pub fn new(weights: BTreeMap<u32, BigRational>) -> Result<Tier> {
        if weights.is_empty() {
            return Err(Error::InvalidDocument("empty tier".into()));
        }
        let mut total = BigRational::zero();
        for weight in weights.values() {
            if *weight <= BigRational::zero() {
                return Err(Error::InvalidDocument(
                    "tier weights must be strictly positive".into(),
                ));
            }
            total += weight;
        }
        if !total.is_one() {
            return Err(Error::InvalidDocument(format!(
                "tier weights sum to {}, expected 1",
                format_ratio(&total)
            )));
        }
        Ok(Tier { weights })
    }

    pub fn weights(&self) -> &BTreeMap<u32, BigRational> {
        &self.weights
    }

    pub fn weight_of(&self, world: u32) -> BigRational {
        self.weights
            .get(&world)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Total weight of the worlds satisfying `prop`.
    pub fn mass_on(&self, prop: &Proposition) -> BigRational {
        self.weights
            .iter()
            .filter(|(world, _)| prop.contains(**world))
            .map(|(_, weight)| weight)
            .sum()
    }

    pub fn intersects(&self, prop: &Proposition) -> bool {
        self.weights.keys().any(|world| prop.contains(*world))
    }

    /// Restriction to `prop`, renormalised; `None` when the support and
    /// `prop` are disjoint.
    pub fn restrict(&self, prop: &Proposition) -> Option<Tier> {
        let mass = self.mass_on(prop);
        if mass.is_zero() {
            return None;
        }
        let weights = self
            .weights
            .iter()
            .filter(|(world, _)| prop.contains(**world))
            .map(|(world, weight)| (*world, weight / &mass))
            .collect();
        Some(Tier { weights })
    }
}

/// A state in which every proposition of a space has a probability,
/// including conditionals on propositions of probability zero.
///
/// Circumstances are immutable; every operation returns a new value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circumstance {
    space: Arc<WorldSpace>,
    tiers: Vec<Tier>,
}

impl Circumstance {
    /// Build a circumstance from per-tier weight maps. Supports must be
    /// pairwise disjoint and each tier must sum to one.
    pub fn new(
        space: Arc<WorldSpace>,
        tier_weights: Vec<BTreeMap<u32, BigRational>>,
    ) -> Result<Circumstance> {
        if tier_weights.is_empty() {
            return Err(Error::InvalidDocument("a circumstance needs at least one tier".into()));
        }
        let mut seen: Vec<u32> = Vec::new();
        let mut tiers = Vec::with_capacity(tier_weights.len());
        for weights in tier_weights {
            for world in weights.keys() {
                if *world >= space.world_count() {
                    return Err(Error::UnknownWorld(*world));
                }
                if seen.contains(world) {
                    return Err(Error::InvalidDocument(format!(
                        "world {world} appears in more than one tier"
                    )));
                }
                seen.push(*world);
            }
            tiers.push(Tier::new(weights)?);
        }
        Ok(Circumstance { space, tiers })
    }

    /// The uniform single-tier circumstance over a space.
    pub fn uniform(space: Arc<WorldSpace>) -> Circumstance {
        let count = space.world_count();
        let weight = ratio(1, i64::from(count));
        let weights = (0..count).map(|world| (world, weight.clone())).collect();
        Circumstance {
            space,
            tiers: vec![Tier { weights }],
        }
    }

    pub fn space(&self) -> &Arc<WorldSpace> {
        &self.space
    }

    pub fn tiers(&self) -> &[Tier] {
        &self.tiers
    }

    /// Union of the tier supports: the worlds this circumstance can reach.
    pub fn conceivable(&self) -> Proposition {
        let worlds = self
            .tiers
            .iter()
            .flat_map(|tier| tier.weights.keys().copied())
            .collect::<Vec<_>>();
        Proposition::from_worlds(&self.space, worlds).expect("tier worlds are in range")
    }

    pub fn is_conceivable(&self, prop: &Proposition) -> bool {
        self.tiers.iter().any(|tier| tier.intersects(prop))
    }

    fn check_space(&self, prop: &Proposition) -> Result<()> {
        if self.space.atoms() != prop.space().atoms() {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    /// Unconditional probability: tier-0 mass on `prop`.
    pub fn prob(&self, prop: &Proposition) -> Result<BigRational> {
        self.check_space(prop)?;
        Ok(self.tiers[0].mass_on(prop))
    }

    /// Index of the first tier whose support meets `prop`.
    pub fn first_tier_on(&self, prop: &Proposition) -> Option<usize> {
        self.tiers.iter().position(|tier| tier.intersects(prop))
    }

    /// The probability `target` would acquire if `given` were judged true.
    /// Well defined for zero-probability `given` via the tier hierarchy.
    pub fn cond_prob(&self, target: &Proposition, given: &Proposition) -> Result<BigRational> {
        self.check_space(target)?;
        self.check_space(given)?;
        let tier_index = self.first_tier_on(given).ok_or(Error::Inconceivable)?;
        let tier = &self.tiers[tier_index];
        let joint = tier.mass_on(&(target & given));
        let base = tier.mass_on(given);
        Ok(joint / base)
    }

    /// Judge `given` true: every tier is split into its `given` part and
    /// its complement part; all complement parts are demoted, in order,
    /// below all `given` parts. Afterwards `prob(x) == cond_prob(x, given)`
    /// for every proposition `x`.
    pub fn judge(&self, given: &Proposition) -> Result<Circumstance> {
        self.check_space(given)?;
        let mut tiers: Vec<Tier> = self
            .tiers
            .iter()
            .filter_map(|tier| tier.restrict(given))
            .collect();
        if tiers.is_empty() {
            return Err(Error::Inconceivable);
        }
        let negated = given.complement();
        tiers.extend(self.tiers.iter().filter_map(|tier| tier.restrict(&negated)));
        Ok(Circumstance {
            space: Arc::clone(&self.space),
            tiers,
        })
    }

    /// Refine the space with a new atom. Each world `w` splits into a
    /// `(w, atom true)` child carrying `split(w)` of its weight and a
    /// `(w, atom false)` child carrying the rest; worlds absent from the
    /// map keep the atom false. Marginalising the new atom recovers the
    /// original circumstance exactly.
    pub fn extend(
        &self,
        new_atom: &str,
        split: &BTreeMap<u32, BigRational>,
    ) -> Result<Circumstance> {
        let atom_count = self.space.atom_count();
        if atom_count + 1 > crate::space::MAX_ATOMS {
            return Err(Error::TooManyAtoms(atom_count + 1));
        }
        if self.space.atom_index(new_atom).is_some() {
            return Err(Error::DuplicateAtom(new_atom.to_string()));
        }
        for (world, share) in split {
            if *world >= self.space.world_count() {
                return Err(Error::UnknownWorld(*world));
            }
            if *share < BigRational::zero() || *share > BigRational::one() {
                return Err(Error::WeightOutOfRange);
            }
        }
        let mut atoms: Vec<String> = self.space.atoms().to_vec();
        atoms.push(new_atom.to_string());
        let space = WorldSpace::new(&atoms)?;
        let high_bit = 1u32 << atom_count;

        let zero = BigRational::zero();
        let tiers = self
            .tiers
            .iter()
            .map(|tier| {
                let mut weights = BTreeMap::new();
                for (world, weight) in &tier.weights {
                    let share = split.get(world).unwrap_or(&zero);
                    let on = weight * share;
                    if !on.is_zero() {
                        weights.insert(world | high_bit, on);
                    }
                    let off = weight * (BigRational::one() - share);
                    if !off.is_zero() {
                        weights.insert(*world, off);
                    }
                }
                Tier { weights }
            })
            .collect();
        Ok(Circumstance { space, tiers })
    }

    /// Remove an atom by summing the weights of its two refinements of
    /// each world, tier by tier. Inverse of [`Circumstance::extend`]; fails
    /// if the merged tiers would overlap.
    pub fn marginalize_atom(&self, atom: &str) -> Result<Circumstance> {
        let index = self
            .space
            .atom_index(atom)
            .ok_or_else(|| Error::UnknownAtom {
                name: atom.to_string(),
                position: 0,
            })?;
        let atoms: Vec<String> = self
            .space
            .atoms()
            .iter()
            .filter(|a| a.as_str() != atom)
            .cloned()
            .collect();
        if atoms.is_empty() {
            return Err(Error::EmptyAtomList);
        }
        let space = WorldSpace::new(&atoms)?;
        let low_mask = (1u32 << index) - 1;
        let tier_weights = self
            .tiers
            .iter()
            .map(|tier| {
                let mut weights: BTreeMap<u32, BigRational> = BTreeMap::new();
                for (world, weight) in &tier.weights {
                    let merged = (world & low_mask) | ((world >> 1) & !low_mask);
                    *weights.entry(merged).or_insert_with(BigRational::zero) += weight;
                }
                weights
            })
            .collect();
        Circumstance::new(space, tier_weights)
    }

    /// JSON document: `{"atoms": [...], "tiers": [{"weights": {"<world>": "num/den"}}]}`
    /// with worlds keyed by their decimal bitmask and rationals in canonical
    /// `num/den` text. Round-trips bit-exactly through [`Circumstance::from_json`].
    pub fn to_json(&self) -> Value {
        let tiers: Vec<Value> = self
            .tiers
            .iter()
            .map(|tier| {
                let weights: Map<String, Value> = tier
                    .weights
                    .iter()
                    .map(|(world, weight)| (world.to_string(), Value::String(format_ratio(weight))))
                    .collect();
                json!({ "weights": weights })
            })
            .collect();
        json!({ "atoms": self.space.atoms(), "tiers": tiers })
    }

    pub fn from_json(value: &Value) -> Result<Circumstance> {
        let object = value
            .as_object()
            .ok_or_else(|| Error::InvalidDocument("expected an object".into()))?;
        let atoms = object
            .get("atoms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidDocument("missing `atoms` array".into()))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::InvalidDocument("atom names must be strings".into()))
            })
            .collect::<Result<Vec<String>>>()?;
        let space = WorldSpace::new(&atoms)?;
        let tiers = object
            .get("tiers")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::InvalidDocument("missing `tiers` array".into()))?;
        let mut tier_weights = Vec::with_capacity(tiers.len());
        for tier in tiers {
            let weights = tier
                .get("weights")
                .and_then(Value::as_object)
                .ok_or_else(|| Error::InvalidDocument("tier without `weights` map".into()))?;
            let mut map = BTreeMap::new();
            for (key, value) in weights {
                let world: u32 = key
                    .parse()
                    .map_err(|_| Error::InvalidDocument(format!("bad world key `{key}`")))?;
                let text = value.as_str().ok_or_else(|| {
                    Error::InvalidDocument("weights must be `num/den` strings".into())
                })?;
                map.insert(world, parse_ratio(text)?);
            }
            tier_weights.push(map);
        }
        Circumstance::new(space, tier_weights)
    }
}

/// Ready-made two-atom circumstances used in examples, docs and tests.
pub mod fixtures {
    use super::*;

    /// Atoms `a, b`, one tier: `w(ab)=1/10, w(a~b)=2/5, w(~ab)=3/10,
    /// w(~a~b)=1/5`. Here `P(a)=1/2`, `P(b)=2/5`, and the pair is
    /// negatively correlated.
    pub fn single_tier_example() -> Circumstance {
        let space = WorldSpace::new(&["a", "b"]).unwrap();
        let tier0 = BTreeMap::from([
            (3, ratio(1, 10)),
            (1, ratio(2, 5)),
            (2, ratio(3, 10)),
            (0, ratio(1, 5)),
        ]);
        Circumstance::new(space, vec![tier0]).unwrap()
    }

    /// Atoms `a, b`, two tiers: tier 0 puts `1/2` on each of the two
    /// `~a` worlds, tier 1 puts `3/4` on `ab` and `1/4` on `a~b`. Here
    /// `P(a)=0` while conditionals on `a` remain defined.
    pub fn two_tier_example() -> Circumstance {
        let space = WorldSpace::new(&["a", "b"]).unwrap();
        let tier0 = BTreeMap::from([(2, ratio(1, 2)), (0, ratio(1, 2))]);
        let tier1 = BTreeMap::from([(3, ratio(3, 4)), (1, ratio(1, 4))]);
        Circumstance::new(space, vec![tier0, tier1]).unwrap()
    }
}
