//! Greedy construction targeting NCR.
//!
//! Starting at level `l = k`, repeatedly look for the `l`-set of unseated
//! candidates approved by the most not-yet-served voters. If that group
//! meets the level-`l` quota, seat the whole set and retire the group;
//! otherwise drop to level `l − 1`. Leftover seats go to the lowest-index
//! unseated candidates.

use super::{fill_seats, Action, Rule, RoundRecord, RuleOutcome, Score, TiePolicy};
use crate::axioms::DEFAULT_COMMITTEE_BUDGET;
use crate::error::{Error, Result};
use crate::model::{meets_quota, CandidateSet, Committee, ElectionInstance};
use crate::subsets::{binomial, combinations};

pub fn greedy_ncr(instance: &ElectionInstance) -> Result<RuleOutcome> {
    greedy_ncr_with_budget(instance, DEFAULT_COMMITTEE_BUDGET)
}

pub fn greedy_ncr_with_budget(instance: &ElectionInstance, budget: u128) -> Result<RuleOutcome> {
    let n = instance.num_voters();
    let k = instance.committee_size();
    let ballots = instance.ballots();

    let mut unserved: Vec<usize> = (0..n).collect();
    let mut w = CandidateSet::empty();
    let mut available = instance.candidates();
    let mut trace = Vec::new();
    let mut level = k;

    while level > 0 {
        if w.len() + level > k {
            level -= 1;
            continue;
        }
        let count = binomial(available.len(), level);
        if count > budget {
            return Err(Error::Budget(format!(
                "{count} candidate sets of size {level} exceeds budget {budget}"
            )));
        }
        // first maximum in lexicographic order
        let mut best: Option<(CandidateSet, Vec<usize>)> = None;
        for subset in combinations(available, level) {
            let supporters: Vec<usize> = unserved
                .iter()
                .copied()
                .filter(|&i| subset.is_subset(ballots[i].approve()))
                .collect();
            if best.as_ref().is_none_or(|(_, b)| supporters.len() > b.len()) {
                best = Some((subset, supporters));
            }
        }
        let Some((subset, supporters)) = best else {
            level -= 1;
            continue;
        };
        if supporters.is_empty() || !meets_quota(supporters.len(), level, n, k) {
            level -= 1;
            continue;
        }
        for c in subset {
            let mut record = RoundRecord::new(trace.len() + 1, Action::Elected, c);
            record.level = Some(level);
            record.voters_removed = supporters.clone();
            trace.push(record);
        }
        w = w | subset;
        available = available - subset;
        unserved.retain(|i| supporters.binary_search(i).is_err());
    }
    let mut rng = crate::rules::RuleConfig::default().rng(Rule::GreedyNcr);
    fill_seats(&mut w, &mut available, k, TiePolicy::LowestIndex, &mut rng, &mut trace);

    let served = n - unserved.len();
    Ok(RuleOutcome {
        rule: Rule::GreedyNcr,
        committee: Committee::unchecked(w),
        score: Score::integer(served as i64),
        trace,
    })
}
