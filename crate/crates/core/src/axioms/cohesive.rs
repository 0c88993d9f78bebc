//! Intersection-based axioms (NCR, WNCR, PJR) and JR.
//!
//! Groups whose members all approve a set `C′` of `l` candidates are found
//! by enumerating `C′` directly; the voters approving all of `C′` only
//! shrink as `C′` grows, which bounds the search by the quota.

use super::class_one::Supporters;
use super::{dichotomous_sizes, witness_for, AxiomId, AxiomReport, GroupWitness};
use crate::error::Result;
use crate::model::{check_committee, meets_quota, CandidateSet, DichotomousProfile, ElectionInstance};
use crate::subsets::{combinations, VoterSet};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Seats {
    /// Seats inside the common approval set.
    Common,
    /// Seats any member approves.
    AnyApproved,
}

struct CohesiveSearch<'a> {
    approvers: &'a [VoterSet],
    n: usize,
    k: usize,
    w: CandidateSet,
    seats: Seats,
}

impl CohesiveSearch<'_> {
    fn run(&self) -> Option<(VoterSet, usize)> {
        self.extend(0, 0, &VoterSet::full(self.n))
    }

    fn extend(&self, from: usize, depth: usize, group: &VoterSet) -> Option<(VoterSet, usize)> {
        let level = depth + 1;
        if level > self.k {
            return None;
        }
        for c in from..self.approvers.len() {
            let next = group.and(&self.approvers[c]);
            if !meets_quota(next.len(), level, self.n, self.k) {
                continue;
            }
            if let Some(found) = self.violation_at(&next, level) {
                return Some((found, level));
            }
            if let Some(found) = self.extend(c + 1, level, &next) {
                return Some(found);
            }
        }
        None
    }

    fn violation_at(&self, group: &VoterSet, level: usize) -> Option<VoterSet> {
        match self.seats {
            Seats::Common => {
                let common_seats = self
                    .w
                    .iter()
                    .filter(|&x| group.is_subset(&self.approvers[x]))
                    .count();
                (common_seats < level).then(|| group.clone())
            }
            Seats::AnyApproved => combinations(self.w, level - 1).find_map(|seated| {
                let rest = (self.w - seated)
                    .iter()
                    .fold(group.clone(), |acc, x| acc.and_not(&self.approvers[x]));
                meets_quota(rest.len(), level, self.n, self.k).then_some(rest)
            }),
        }
    }
}

fn approvers_of(approval_sets: &[CandidateSet], m: usize) -> Vec<VoterSet> {
    let n = approval_sets.len();
    (0..m)
        .map(|c| VoterSet::from_predicate(n, |i| approval_sets[i].contains(c)))
        .collect()
}

fn dichotomous_witness(
    dic: &DichotomousProfile,
    k: usize,
    axiom: AxiomId,
    voters: Vec<usize>,
    level: usize,
    w: CandidateSet,
) -> GroupWitness {
    let decisive = ElectionInstance::from_ballots(dic.to_decisive_ballots(), k)
        .expect("validated dichotomous profile");
    witness_for(&decisive, axiom, voters, level, w)
}

/// Justified representation on approval ballots: no group of at least
/// `n/k` voters with a nonempty approval union may be left with no approved
/// seat.
pub fn check_jr(dic: &DichotomousProfile, k: usize, w: CandidateSet) -> Result<AxiomReport> {
    dichotomous_sizes(dic, k, w)?;
    let n = dic.num_voters();
    let unrepresented: Vec<usize> = (0..n).filter(|&i| dic.approval_sets[i].is_disjoint(w)).collect();
    let union = unrepresented
        .iter()
        .fold(CandidateSet::empty(), |acc, &i| acc | dic.approval_sets[i]);
    if meets_quota(unrepresented.len(), 1, n, k) && !union.is_empty() {
        let witness = dichotomous_witness(dic, k, AxiomId::Jr, unrepresented, 1, w);
        return Ok(AxiomReport::violated(AxiomId::Jr, witness));
    }
    Ok(AxiomReport::satisfied(AxiomId::Jr))
}

/// Proportional justified representation on approval ballots.
pub fn check_pjr(dic: &DichotomousProfile, k: usize, w: CandidateSet) -> Result<AxiomReport> {
    dichotomous_sizes(dic, k, w)?;
    let approvers = approvers_of(&dic.approval_sets, dic.m);
    let search = CohesiveSearch {
        approvers: &approvers,
        n: dic.num_voters(),
        k,
        w,
        seats: Seats::AnyApproved,
    };
    Ok(match search.run() {
        Some((group, level)) => AxiomReport::violated(
            AxiomId::Pjr,
            dichotomous_witness(dic, k, AxiomId::Pjr, group.to_vec(), level, w),
        ),
        None => AxiomReport::satisfied(AxiomId::Pjr),
    })
}

fn cohesive_check(
    instance: &ElectionInstance,
    w: CandidateSet,
    axiom: AxiomId,
    seats: Seats,
) -> Result<AxiomReport> {
    check_committee(instance, w)?;
    let sup = Supporters::new(instance);
    let search = CohesiveSearch {
        approvers: &sup.approvers,
        n: instance.num_voters(),
        k: instance.committee_size(),
        w,
        seats,
    };
    Ok(match search.run() {
        Some((group, level)) => {
            AxiomReport::violated(axiom, witness_for(instance, axiom, group.to_vec(), level, w))
        }
        None => AxiomReport::satisfied(axiom),
    })
}

/// Every quota-size group whose members all approve `l` common candidates
/// must find `l` of those common candidates seated.
pub fn check_ncr(instance: &ElectionInstance, w: CandidateSet) -> Result<AxiomReport> {
    cohesive_check(instance, w, AxiomId::Ncr, Seats::Common)
}

/// As NCR, but any seat approved by some member counts.
pub fn check_wncr(instance: &ElectionInstance, w: CandidateSet) -> Result<AxiomReport> {
    cohesive_check(instance, w, AxiomId::Wncr, Seats::AnyApproved)
}
