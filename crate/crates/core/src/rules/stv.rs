//! Droop-quota STV over three-tier ballots.
//!
//! A ballot ranks `A⁺ ≻ A⁰ ≻ A⁻`. Each voter's weight goes, split evenly, to
//! the candidates of the highest tier that still has hopeful candidates.
//! Each round the plurality leader is elected if it reaches the quota;
//! otherwise the plurality loser is eliminated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{break_tie, fill_seats, Action, CandidateScore, Rule, RoundRecord, RuleConfig, RuleOutcome, Score, StvMode};
use crate::model::{CandidateSet, Committee, ElectionInstance, TrichotomousBallot};

/// `⌊n/(k+1)⌋ + 1`.
pub fn droop_quota(n: usize, k: usize) -> usize {
    n / (k + 1) + 1
}

fn top_tier(ballot: &TrichotomousBallot, hopeful: CandidateSet) -> CandidateSet {
    [ballot.approve(), ballot.indifferent(), ballot.disapprove()]
        .into_iter()
        .map(|tier| tier & hopeful)
        .find(|tier| !tier.is_empty())
        .unwrap_or_default()
}

fn plurality(
    instance: &ElectionInstance,
    weights: &[BigRational],
    hopeful: CandidateSet,
) -> Vec<BigRational> {
    let mut scores = vec![BigRational::zero(); instance.num_candidates()];
    for (ballot, weight) in instance.ballots().iter().zip(weights) {
        if weight.is_zero() {
            continue;
        }
        let top = top_tier(ballot, hopeful);
        if top.is_empty() {
            continue;
        }
        let share = weight / BigInt::from(top.len());
        for c in top {
            scores[c] += &share;
        }
    }
    scores
}

pub fn droop_stv(instance: &ElectionInstance, config: &RuleConfig) -> RuleOutcome {
    let n = instance.num_voters();
    let k = instance.committee_size();
    let quota = BigRational::from_integer(BigInt::from(droop_quota(n, k)));
    let policy = config.ties_for(Rule::DroopStv);
    let mut rng = config.rng(Rule::DroopStv);

    let mut weights = vec![BigRational::one(); n];
    let mut hopeful = instance.candidates();
    let mut w = CandidateSet::empty();
    let mut trace = Vec::new();

    while w.len() < k && hopeful.len() > k - w.len() {
        let scores = plurality(instance, &weights, hopeful);
        let round_scores: Vec<CandidateScore> = hopeful
            .iter()
            .map(|c| CandidateScore {
                candidate: c,
                score: Score(scores[c].clone()),
            })
            .collect();
        let max = hopeful.iter().map(|c| &scores[c]).max().expect("hopeful is nonempty").clone();
        let leaders: Vec<usize> = hopeful.iter().filter(|&c| scores[c] == max).collect();
        let leader = break_tie(&leaders, policy, &mut rng);
        let reaches = if config.stv_strict_quota { max > quota } else { max >= quota };

        let mut record = if reaches {
            w.insert(leader);
            let mut record = RoundRecord::new(trace.len() + 1, Action::Elected, leader);
            if config.stv_mode == StvMode::Transfer {
                record.voters_removed = spend_quota(instance, &mut weights, hopeful, leader, &max, &quota);
            }
            hopeful.remove(leader);
            record
        } else {
            let min = hopeful.iter().map(|c| &scores[c]).min().expect("hopeful is nonempty").clone();
            let losers: Vec<usize> = hopeful.iter().filter(|&c| scores[c] == min).collect();
            let loser = break_tie(&losers, policy, &mut rng);
            hopeful.remove(loser);
            RoundRecord::new(trace.len() + 1, Action::Eliminated, loser)
        };
        record.scores = round_scores;
        record.quota = Some(Score(quota.clone()));
        trace.push(record);
    }
    // as many hopefuls as open seats: all of them are seated
    let mut remaining = hopeful;
    fill_seats(
        &mut w,
        &mut remaining,
        k,
        super::TiePolicy::LowestIndex,
        &mut rng,
        &mut trace,
    );

    RuleOutcome {
        rule: Rule::DroopStv,
        committee: Committee::unchecked(w),
        score: Score(quota),
        trace,
    }
}

/// Removes `quota` worth of weight from the elected candidate's supporters,
/// proportionally to what each contributed. Returns voters whose weight
/// dropped to zero.
fn spend_quota(
    instance: &ElectionInstance,
    weights: &mut [BigRational],
    hopeful: CandidateSet,
    elected: usize,
    score: &BigRational,
    quota: &BigRational,
) -> Vec<usize> {
    let spent_fraction = quota / score;
    let mut exhausted = Vec::new();
    for (i, ballot) in instance.ballots().iter().enumerate() {
        let top = top_tier(ballot, hopeful);
        if weights[i].is_zero() || !top.contains(elected) {
            continue;
        }
        let contribution = &weights[i] / BigInt::from(top.len());
        weights[i] -= contribution * &spent_fraction;
        if weights[i].is_zero() {
            exhausted.push(i);
        }
    }
    exhausted
}
