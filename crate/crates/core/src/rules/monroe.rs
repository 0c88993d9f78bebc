//! Greedy Monroe over positional scores.
//!
//! Each round, every available candidate is matched with the `⌈n/k⌉`
//! still-unassigned voters who rank it highest; the candidate whose matched
//! voters give it the largest positional sum is elected and those voters are
//! retired.

use super::{break_tie, fill_seats, Action, CandidateScore, Rule, RoundRecord, RuleConfig, RuleOutcome, Score};
use crate::model::{CandidateSet, Committee, ElectionInstance};

/// Voters assigned to each elected candidate, in election order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonroeAssignment {
    pub groups: Vec<(usize, Vec<usize>)>,
}

impl MonroeAssignment {
    /// Reads the assignment back out of a sequential-Monroe trace.
    pub fn from_outcome(outcome: &RuleOutcome) -> Self {
        MonroeAssignment {
            groups: outcome
                .trace
                .iter()
                .filter(|r| r.action == Action::Elected)
                .map(|r| (r.candidate, r.voters_removed.clone()))
                .collect(),
        }
    }
}

/// Top `size` voters of `pool` by position of `c`, ties by voter index.
fn best_voters(instance: &ElectionInstance, pool: &[usize], c: usize, size: usize) -> (Vec<usize>, i64) {
    let mut ranked: Vec<(i64, usize)> = pool
        .iter()
        .map(|&i| (instance.ballots()[i].position(c).expect("candidate in range"), i))
        .collect();
    ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    ranked.truncate(size);
    let total = ranked.iter().map(|&(p, _)| p).sum();
    let mut voters: Vec<usize> = ranked.into_iter().map(|(_, i)| i).collect();
    voters.sort_unstable();
    (voters, total)
}

pub fn seq_monroe(instance: &ElectionInstance, config: &RuleConfig) -> RuleOutcome {
    let n = instance.num_voters();
    let k = instance.committee_size();
    let group_size = n.div_ceil(k);
    let policy = config.ties_for(Rule::SeqMonroe);
    let mut rng = config.rng(Rule::SeqMonroe);

    let mut unassigned: Vec<usize> = (0..n).collect();
    let mut w = CandidateSet::empty();
    let mut available = instance.candidates();
    let mut trace = Vec::with_capacity(k);
    let mut total = 0i64;

    while w.len() < k && !unassigned.is_empty() {
        let options: Vec<(usize, Vec<usize>, i64)> = available
            .iter()
            .map(|c| {
                let (voters, score) = best_voters(instance, &unassigned, c, group_size);
                (c, voters, score)
            })
            .collect();
        let best = options.iter().map(|o| o.2).max().expect("available is nonempty");
        let tied: Vec<usize> = options.iter().filter(|o| o.2 == best).map(|o| o.0).collect();
        let chosen = break_tie(&tied, policy, &mut rng);
        let (_, voters, score) = options
            .iter()
            .find(|o| o.0 == chosen)
            .cloned()
            .expect("chosen candidate was scored");

        total += score;
        w.insert(chosen);
        available.remove(chosen);
        unassigned.retain(|i| voters.binary_search(i).is_err());

        let mut record = RoundRecord::new(trace.len() + 1, Action::Elected, chosen);
        record.scores = options
            .into_iter()
            .map(|(candidate, _, s)| CandidateScore {
                candidate,
                score: Score::integer(s),
            })
            .collect();
        record.voters_removed = voters;
        trace.push(record);
    }
    fill_seats(&mut w, &mut available, k, policy, &mut rng, &mut trace);

    RuleOutcome {
        rule: Rule::SeqMonroe,
        committee: Committee::unchecked(w),
        score: Score::integer(total),
        trace,
    }
}
