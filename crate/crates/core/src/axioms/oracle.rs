//! Exhaustive reference checker: every nonempty voter subset, every level.

use super::{literal_violation, AxiomId, AxiomReport, GroupSets, GroupWitness, Violation};
use crate::error::{Error, Result};
use crate::model::{check_committee, max_level, CandidateSet, ElectionInstance};

/// Largest electorate [`brute_force_check`] accepts by default.
pub const DEFAULT_ORACLE_BOUND: usize = 20;

/// Evaluates `axiom`'s definition on all `2ⁿ − 1` voter groups.
///
/// Groups are visited in ascending order of their bit encoding (voter `i`
/// is bit `i`) and levels in ascending order, so the witness returned is
/// the first violation in that order.
pub fn brute_force_check(
    instance: &ElectionInstance,
    w: CandidateSet,
    axiom: AxiomId,
) -> Result<AxiomReport> {
    brute_force_check_with_bound(instance, w, axiom, DEFAULT_ORACLE_BOUND)
}

pub fn brute_force_check_with_bound(
    instance: &ElectionInstance,
    w: CandidateSet,
    axiom: AxiomId,
    bound: usize,
) -> Result<AxiomReport> {
    check_committee(instance, w)?;
    let n = instance.num_voters();
    if n > bound || n > 63 {
        return Err(Error::Budget(format!(
            "{n} voters exceeds the exhaustive oracle bound {}",
            bound.min(63)
        )));
    }
    let search = Search {
        instance,
        w,
        axiom,
        n,
        k: instance.committee_size(),
    };
    let start = GroupSets::empty(instance.num_candidates());
    Ok(match search.visit(n, start, 0) {
        Some((mask, level, v)) => AxiomReport::violated(
            axiom,
            GroupWitness {
                voters: CandidateSet::from_bits(mask).to_vec(),
                level,
                cohesion_set: v.cohesion,
                representation_found: v.representation,
                seated_disapproved: v.seated_disapproved,
            },
        ),
        None => AxiomReport::satisfied(axiom),
    })
}

struct Search<'a> {
    instance: &'a ElectionInstance,
    w: CandidateSet,
    axiom: AxiomId,
    n: usize,
    k: usize,
}

impl Search<'_> {
    /// Decides voters `remaining - 1` down to 0; excluding before including
    /// makes the leaves come out in ascending numeric order.
    fn visit(&self, remaining: usize, acc: GroupSets, mask: u64) -> Option<(u64, usize, Violation)> {
        if remaining == 0 {
            return self.evaluate(&acc).map(|(l, v)| (mask, l, v));
        }
        let voter = remaining - 1;
        self.visit(voter, acc, mask).or_else(|| {
            let next = acc.add(&self.instance.ballots()[voter]);
            self.visit(voter, next, mask | 1 << voter)
        })
    }

    fn evaluate(&self, acc: &GroupSets) -> Option<(usize, Violation)> {
        if acc.size == 0 {
            return None;
        }
        let top = max_level(acc.size, self.n, self.k).min(self.axiom.max_level(self.k));
        (1..=top).find_map(|l| literal_violation(self.axiom, acc, l, self.w).map(|v| (l, v)))
    }
}
