//! Belief revision over finite propositional world spaces.
//!
//! The crate models a *circumstance*: a state in which every proposition
//! has an exact rational probability, represented as an ordered list of
//! probability tiers so that conditioning on propositions of probability
//! zero stays well defined. On top of that it provides:
//!
//! - [`space`] / [`formula`]: world spaces, propositions as world sets,
//!   and a textual formula parser;
//! - [`circumstance`]: tiered probability, judgment (conditioning) and
//!   space refinement;
//! - [`info`]: per-proposition information measures, common information,
//!   and two constructions that realise it as fresh atoms;
//! - [`evidence`]: weight-of-evidence measures and a threshold-firing
//!   accumulation ledger;
//! - [`implication`]: four distinct ways of judging "if A then B", their
//!   minimal information costs, and counterfactual judgments;
//! - [`scenario`]: end-to-end worked models (a biased coin and a
//!   raven/blackness collection) built from the pieces above.
//!
//! All values are immutable; every operation returns a new value, so
//! everything here is safe to share and send between threads.

pub mod circumstance;
pub mod error;
pub mod evidence;
pub mod formula;
pub mod implication;
pub mod info;
pub mod ratio;
pub mod scenario;
pub mod space;

pub use circumstance::{Circumstance, Tier};
pub use error::{Error, Result};
pub use evidence::EvidenceLedger;
pub use formula::{parse_formula, Formula};
pub use implication::{CellTransport, ImplicationMode};
pub use info::ExtendedReal;
pub use scenario::{CoinConfig, RavenConfig, ScenarioReport};
pub use space::{Proposition, WorldSpace};
