//! Proportionality axioms for committees.
//!
//! Every axiom has the same shape: for each group of voters `V′` and level
//! `l` with `|V′|·k ≥ l·n`, if the group is cohesive enough (its cohesion
//! set has at least `l` members) then the committee must give it at least
//! `l` units of representation. The axioms differ in how cohesion and
//! representation are measured:
//!
//! | axiom | cohesion set | representation |
//! |-------|--------------|----------------|
//! | JR    | `∪A⁺` (l = 1) | `∪A⁺ ∩ W` |
//! | PJR   | `∩A⁺` | `∪A⁺ ∩ W` |
//! | SPR   | `∪A⁺ \ ∪A⁻` (l = 1) | `∪A⁺ ∩ W`, and nothing in `∩A⁻` seated |
//! | WTJR  | `∪A⁺ \ ∪A⁻` (l = 1) | `∪A⁺ ∩ W` |
//! | WTPJR | `∪A⁺ \ ∪A⁻` | `∪A⁺ ∩ W` |
//! | WAR   | `∪A⁺ \ ∪A⁻` | `(∪A⁺ ∪ ∩A⁰) ∩ W` |
//! | WA    | `∪A⁺ \ ∪A⁻` | `(∪A⁺ ∪ ∪A⁰) ∩ W` |
//! | NCR   | `∩A⁺` | `∩A⁺ ∩ W` |
//! | WNCR  | `∩A⁺` | `∪A⁺ ∩ W` |
//!
//! JR and PJR are the approval-ballot axioms; on a trichotomous instance
//! they read the approval sets only.
//!
//! [`brute_force_check`] evaluates these definitions literally over every
//! voter subset. The `check_*` functions search the candidate side instead
//! and are cross-checked against it in the test suite.

mod class_one;
mod cohesive;
mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{check_committee, meets_quota, CandidateSet, Committee, DichotomousProfile, ElectionInstance};
use crate::subsets::{binomial, combinations};

pub use class_one::{check_spr, check_wa, check_war, check_wtjr, check_wtpjr};
pub use cohesive::{check_jr, check_ncr, check_pjr, check_wncr};
pub use oracle::{brute_force_check, brute_force_check_with_bound, DEFAULT_ORACLE_BOUND};

/// The proportionality axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomId {
    Jr,
    Pjr,
    Spr,
    Wtjr,
    Wtpjr,
    War,
    Wa,
    Ncr,
    Wncr,
}

impl AxiomId {
    pub const ALL: [AxiomId; 9] = [
        AxiomId::Jr,
        AxiomId::Pjr,
        AxiomId::Spr,
        AxiomId::Wtjr,
        AxiomId::Wtpjr,
        AxiomId::War,
        AxiomId::Wa,
        AxiomId::Ncr,
        AxiomId::Wncr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Jr => "jr",
            AxiomId::Pjr => "pjr",
            AxiomId::Spr => "spr",
            AxiomId::Wtjr => "wtjr",
            AxiomId::Wtpjr => "wtpjr",
            AxiomId::War => "war",
            AxiomId::Wa => "wa",
            AxiomId::Ncr => "ncr",
            AxiomId::Wncr => "wncr",
        }
    }

    /// Highest level the axiom constrains.
    pub fn max_level(self, k: usize) -> usize {
        match self {
            AxiomId::Jr | AxiomId::Spr | AxiomId::Wtjr => 1.min(k),
            _ => k,
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.name().to_uppercase())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown axiom `{s}`")))
    }
}

/// A voter group certifying that an axiom is violated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupWitness {
    /// Voter indices, ascending, 0-based.
    pub voters: Vec<usize>,
    pub level: usize,
    /// The set whose size met the axiom's cohesion requirement.
    pub cohesion_set: CandidateSet,
    /// Size of the representation the committee gives the group.
    pub representation_found: usize,
    /// Seated candidates every group member disapproves (SPR only).
    #[serde(default)]
    pub seated_disapproved: CandidateSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub satisfied: bool,
    pub witness: Option<GroupWitness>,
}

impl AxiomReport {
    pub fn satisfied(axiom: AxiomId) -> Self {
        AxiomReport {
            axiom,
            satisfied: true,
            witness: None,
        }
    }

    pub fn violated(axiom: AxiomId, witness: GroupWitness) -> Self {
        AxiomReport {
            axiom,
            satisfied: false,
            witness: Some(witness),
        }
    }
}

/// Unions and intersections of a voter group's ballot classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct GroupSets {
    pub size: usize,
    pub union_approve: CandidateSet,
    pub union_disapprove: CandidateSet,
    pub union_indifferent: CandidateSet,
    pub inter_approve: CandidateSet,
    pub inter_disapprove: CandidateSet,
    pub inter_indifferent: CandidateSet,
}

impl GroupSets {
    pub fn empty(m: usize) -> Self {
        let all = CandidateSet::full(m);
        GroupSets {
            size: 0,
            union_approve: CandidateSet::empty(),
            union_disapprove: CandidateSet::empty(),
            union_indifferent: CandidateSet::empty(),
            inter_approve: all,
            inter_disapprove: all,
            inter_indifferent: all,
        }
    }

    pub fn add(&self, ballot: &crate::model::TrichotomousBallot) -> Self {
        let zero = ballot.indifferent();
        GroupSets {
            size: self.size + 1,
            union_approve: self.union_approve | ballot.approve(),
            union_disapprove: self.union_disapprove | ballot.disapprove(),
            union_indifferent: self.union_indifferent | zero,
            inter_approve: self.inter_approve & ballot.approve(),
            inter_disapprove: self.inter_disapprove & ballot.disapprove(),
            inter_indifferent: self.inter_indifferent & zero,
        }
    }

    pub fn of(instance: &ElectionInstance, voters: &[usize]) -> Self {
        voters.iter().fold(GroupSets::empty(instance.num_candidates()), |acc, &i| {
            acc.add(&instance.ballots()[i])
        })
    }
}

/// What a violating group looks like at one level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Violation {
    pub cohesion: CandidateSet,
    pub representation: usize,
    pub seated_disapproved: CandidateSet,
}

/// Evaluates an axiom's definition on one nonempty group at one level.
/// Quota is the caller's responsibility. Returns `Some` iff the group is
/// cohesive enough and under-represented.
pub(crate) fn literal_violation(
    axiom: AxiomId,
    g: &GroupSets,
    level: usize,
    w: CandidateSet,
) -> Option<Violation> {
    if g.size == 0 || level == 0 || level > axiom.max_level(usize::MAX) {
        return None;
    }
    let liberal = g.union_approve - g.union_disapprove;
    let (cohesion, represented) = match axiom {
        AxiomId::Jr => (g.union_approve, g.union_approve),
        AxiomId::Pjr | AxiomId::Wncr => (g.inter_approve, g.union_approve),
        AxiomId::Ncr => (g.inter_approve, g.inter_approve),
        AxiomId::Spr | AxiomId::Wtjr | AxiomId::Wtpjr => (liberal, g.union_approve),
        AxiomId::War => (liberal, g.union_approve | g.inter_indifferent),
        AxiomId::Wa => (liberal, g.union_approve | g.union_indifferent),
    };
    if cohesion.len() < level {
        return None;
    }
    let representation = (represented & w).len();
    let seated_disapproved = if axiom == AxiomId::Spr {
        g.inter_disapprove & w
    } else {
        CandidateSet::empty()
    };
    let violated = representation < level || !seated_disapproved.is_empty();
    violated.then_some(Violation {
        cohesion,
        representation,
        seated_disapproved,
    })
}

pub(crate) fn witness_for(
    instance: &ElectionInstance,
    axiom: AxiomId,
    voters: Vec<usize>,
    level: usize,
    w: CandidateSet,
) -> GroupWitness {
    let g = GroupSets::of(instance, &voters);
    let v = literal_violation(axiom, &g, level, w)
        .expect("search produced a group that does not violate the axiom");
    GroupWitness {
        voters,
        level,
        cohesion_set: v.cohesion,
        representation_found: v.representation,
        seated_disapproved: v.seated_disapproved,
    }
}

/// Re-evaluates a witness against the instance: quota met, cohesion
/// requirement met and representation insufficient.
pub fn verify_witness(
    instance: &ElectionInstance,
    w: CandidateSet,
    axiom: AxiomId,
    witness: &GroupWitness,
) -> bool {
    let n = instance.num_voters();
    let k = instance.committee_size();
    let mut voters = witness.voters.clone();
    voters.sort_unstable();
    voters.dedup();
    if voters.len() != witness.voters.len() || voters.iter().any(|&i| i >= n) {
        return false;
    }
    if witness.level == 0 || witness.level > axiom.max_level(k) {
        return false;
    }
    if !meets_quota(voters.len(), witness.level, n, k) {
        return false;
    }
    let g = GroupSets::of(instance, &voters);
    match literal_violation(axiom, &g, witness.level, w) {
        Some(v) => {
            v.cohesion == witness.cohesion_set
                && v.representation == witness.representation_found
                && v.seated_disapproved == witness.seated_disapproved
        }
        None => false,
    }
}

/// Checks `w` against `axiom` with the specialized checker.
pub fn check(instance: &ElectionInstance, w: CandidateSet, axiom: AxiomId) -> Result<AxiomReport> {
    match axiom {
        AxiomId::Jr => {
            check_committee(instance, w)?;
            check_jr(&instance.project_approvals(), instance.committee_size(), w)
        }
        AxiomId::Pjr => {
            check_committee(instance, w)?;
            check_pjr(&instance.project_approvals(), instance.committee_size(), w)
        }
        AxiomId::Spr => check_spr(instance, w),
        AxiomId::Wtjr => check_wtjr(instance, w),
        AxiomId::Wtpjr => check_wtpjr(instance, w),
        AxiomId::War => check_war(instance, w),
        AxiomId::Wa => check_wa(instance, w),
        AxiomId::Ncr => check_ncr(instance, w),
        AxiomId::Wncr => check_wncr(instance, w),
    }
}

/// Default cap on the number of committees [`exists_committee`] will visit.
pub const DEFAULT_COMMITTEE_BUDGET: u128 = 5_000_000;

/// First size-`k` committee (lexicographic order) satisfying `axiom`.
pub fn exists_committee(instance: &ElectionInstance, axiom: AxiomId) -> Result<Option<Committee>> {
    exists_committee_with_budget(instance, axiom, DEFAULT_COMMITTEE_BUDGET)
}

pub fn exists_committee_with_budget(
    instance: &ElectionInstance,
    axiom: AxiomId,
    budget: u128,
) -> Result<Option<Committee>> {
    let m = instance.num_candidates();
    let k = instance.committee_size();
    let count = binomial(m, k);
    if count > budget {
        return Err(Error::Budget(format!(
            "{count} committees of size {k} from {m} candidates exceeds budget {budget}"
        )));
    }
    for w in combinations(instance.candidates(), k) {
        if check(instance, w, axiom)?.satisfied {
            return Ok(Some(Committee::unchecked(w)));
        }
    }
    Ok(None)
}

/// Projection helpers for approval-only profiles.
pub(crate) fn dichotomous_sizes(dic: &DichotomousProfile, k: usize, w: CandidateSet) -> Result<()> {
    if dic.num_voters() == 0 {
        return Err(Error::Range("profile has no ballots".into()));
    }
    if k == 0 || k > dic.m {
        return Err(Error::Range(format!("committee size {k} outside 1..={}", dic.m)));
    }
    if !w.is_subset(CandidateSet::full(dic.m)) {
        return Err(Error::Range(format!("committee {w:?} contains unknown candidates")));
    }
    if w.len() != k {
        return Err(Error::Size {
            expected: k,
            got: w.len(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests;
