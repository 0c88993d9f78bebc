//! Multiwinner committee elections with trichotomous ballots.
//!
//! Voters split the candidates into approved, indifferent and disapproved
//! classes. This crate provides
//!
//! * the ballot and profile model ([`model`]) and a line-oriented JSON
//!   profile format ([`profile`]);
//! * exact checkers for nine proportionality axioms, with witnesses and an
//!   exhaustive reference checker ([`axioms`]);
//! * eight committee rules: exact and greedy trichotomous Chamberlin–Courant
//!   and PAV, greedy Monroe, Droop STV, a greedy NCR construction and
//!   sequential Phragmén ([`rules`]);
//! * impartial-culture sampling and a seeded Monte Carlo audit of rules
//!   against axioms ([`sampling`]).
//!
//! ```
//! use trivote::{axioms::{check, AxiomId}, golden, rules::{Rule, RuleConfig}};
//!
//! let instance = golden::four_voter();
//! let outcome = Rule::SeqPhragmen.compute(&instance, &RuleConfig::default()).unwrap();
//! let report = check(&instance, outcome.committee.members(), AxiomId::Wncr).unwrap();
//! assert!(report.satisfied);
//! ```

pub mod axioms;
pub mod error;
pub mod golden;
pub mod model;
pub mod profile;
pub mod rules;
pub mod sampling;
pub mod subsets;

pub use error::{Error, Result};
pub use model::{
    meets_quota, validate_instance, CandidateSet, Committee, DichotomousProfile, ElectionInstance,
    RawBallot, TrichotomousBallot,
};
