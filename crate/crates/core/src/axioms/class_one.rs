//! Candidate-side search for the union-based axioms (SPR, WTJR, WTPJR, WAR, WA).
//!
//! A group violates one of these at level `l` iff there is a target set `D`
//! of `l` candidates that some member approves and no member disapproves,
//! and a set `T ⊂ W` of `l − 1` seats outside of which the group has no
//! representation. For fixed `(T, D)` the set of voters compatible with both
//! is closed under union, so it suffices to test the largest such group.

use super::{witness_for, AxiomId, AxiomReport};
use crate::error::Result;
use crate::model::{check_committee, meets_quota, CandidateSet, ElectionInstance};
use crate::subsets::{combinations, VoterSet};

/// Which seats count as representing a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Representation {
    /// Seats some member approves.
    Approved,
    /// Approved seats plus seats every member is indifferent about.
    UnanimousIndifference,
    /// Approved seats plus seats some member is indifferent about.
    AnyIndifference,
}

pub(super) struct Supporters {
    pub approvers: Vec<VoterSet>,
    pub disapprovers: Vec<VoterSet>,
}

impl Supporters {
    pub fn new(instance: &ElectionInstance) -> Self {
        let n = instance.num_voters();
        let ballots = instance.ballots();
        let per_candidate = |pick: fn(&crate::model::TrichotomousBallot) -> CandidateSet| {
            (0..instance.num_candidates())
                .map(|c| VoterSet::from_predicate(n, |i| pick(&ballots[i]).contains(c)))
                .collect::<Vec<_>>()
        };
        Supporters {
            approvers: per_candidate(|b| b.approve()),
            disapprovers: per_candidate(|b| b.disapprove()),
        }
    }
}

struct LiberalSearch<'a> {
    sup: &'a Supporters,
    n: usize,
    k: usize,
    repr: Representation,
}

impl LiberalSearch<'_> {
    fn run(&self, all: &VoterSet, m: usize, w: CandidateSet, max_level: usize) -> Option<(VoterSet, usize)> {
        for level in 1..=max_level {
            for seated in combinations(w, level - 1) {
                let unrepresented = w - seated;
                let base = match self.repr {
                    Representation::Approved | Representation::UnanimousIndifference => unrepresented
                        .iter()
                        .fold(all.clone(), |acc, x| acc.and_not(&self.sup.approvers[x])),
                    Representation::AnyIndifference => unrepresented
                        .iter()
                        .fold(all.clone(), |acc, x| acc.and(&self.sup.disapprovers[x])),
                };
                if !meets_quota(base.len(), level, self.n, self.k) {
                    continue;
                }
                let pool = CandidateSet::full(m) - unrepresented;
                let pool = pool.to_vec();
                if let Some(group) = self.extend(&pool, 0, CandidateSet::empty(), level, &base, unrepresented) {
                    return Some((group, level));
                }
            }
        }
        None
    }

    /// Grows the target set one candidate at a time, shrinking the group to
    /// voters who do not disapprove it.
    fn extend(
        &self,
        pool: &[usize],
        from: usize,
        target: CandidateSet,
        level: usize,
        group: &VoterSet,
        unrepresented: CandidateSet,
    ) -> Option<VoterSet> {
        let depth = target.len();
        if depth == level {
            // later shrinking may have dropped the last approver of an earlier pick
            if !target.iter().all(|d| group.intersects(&self.sup.approvers[d])) {
                return None;
            }
            if self.repr == Representation::UnanimousIndifference
                && !unrepresented
                    .iter()
                    .all(|x| group.intersects(&self.sup.disapprovers[x]))
            {
                return None;
            }
            return Some(group.clone());
        }
        let needed = level - depth;
        for idx in from..pool.len() {
            if pool.len() - idx < needed {
                break;
            }
            let d = pool[idx];
            let next = group.and_not(&self.sup.disapprovers[d]);
            if !meets_quota(next.len(), level, self.n, self.k) || !next.intersects(&self.sup.approvers[d]) {
                continue;
            }
            if let Some(found) = self.extend(pool, idx + 1, target.with(d), level, &next, unrepresented) {
                return Some(found);
            }
        }
        None
    }
}

fn liberal_check(
    instance: &ElectionInstance,
    w: CandidateSet,
    axiom: AxiomId,
    repr: Representation,
) -> Result<AxiomReport> {
    check_committee(instance, w)?;
    let sup = Supporters::new(instance);
    let n = instance.num_voters();
    let k = instance.committee_size();
    let search = LiberalSearch { sup: &sup, n, k, repr };
    let all = VoterSet::full(n);
    Ok(
        match search.run(&all, instance.num_candidates(), w, axiom.max_level(k)) {
            Some((group, level)) => {
                AxiomReport::violated(axiom, witness_for(instance, axiom, group.to_vec(), level, w))
            }
            None => AxiomReport::satisfied(axiom),
        },
    )
}

/// Strong preliminary representation: every quota-size group with a
/// candidate approved by someone and disapproved by no one gets an approved
/// seat, and no seat is disapproved by the whole group. Level 1 only.
pub fn check_spr(instance: &ElectionInstance, w: CandidateSet) -> Result<AxiomReport> {
    let report = liberal_check(instance, w, AxiomId::Spr, Representation::Approved)?;
    if !report.satisfied {
        return Ok(report);
    }
    let sup = Supporters::new(instance);
    let n = instance.num_voters();
    let k = instance.committee_size();
    for x in w {
        for d in (0..instance.num_candidates()).filter(|&d| d != x) {
            let group = sup.disapprovers[x].and_not(&sup.disapprovers[d]);
            if meets_quota(group.len(), 1, n, k) && group.intersects(&sup.approvers[d]) {
                let witness = witness_for(instance, AxiomId::Spr, group.to_vec(), 1, w);
                return Ok(AxiomReport::violated(AxiomId::Spr, witness));
            }
        }
    }
    Ok(report)
}

pub fn check_wtjr(instance: &ElectionInstance, w: CandidateSet) -> Result<AxiomReport> {
    liberal_check(instance, w, AxiomId::Wtjr, Representation::Approved)
}

pub fn check_wtpjr(instance: &ElectionInstance, w: CandidateSet) -> Result<AxiomReport> {
    liberal_check(instance, w, AxiomId::Wtpjr, Representation::Approved)
}

pub fn check_war(instance: &ElectionInstance, w: CandidateSet) -> Result<AxiomReport> {
    liberal_check(instance, w, AxiomId::War, Representation::UnanimousIndifference)
}

pub fn check_wa(instance: &ElectionInstance, w: CandidateSet) -> Result<AxiomReport> {
    liberal_check(instance, w, AxiomId::Wa, Representation::AnyIndifference)
}
