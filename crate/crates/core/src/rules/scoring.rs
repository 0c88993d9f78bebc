//! Trichotomous Chamberlin–Courant (TCC) and PAV (TPAV), exact and sequential.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{break_tie, Action, CandidateScore, Rule, RoundRecord, RuleConfig, RuleOutcome, Score};
use crate::error::{Error, Result};
use crate::model::{CandidateSet, Committee, ElectionInstance, TrichotomousBallot};
use crate::subsets::{binomial, combinations};

/// `1` iff the ballot's approved seats outnumber its disapproved seats by at least `alpha`.
pub fn sat_tcc(ballot: &TrichotomousBallot, w: CandidateSet, alpha: usize) -> u8 {
    let net = (ballot.approve() & w).len() as i64 - (ballot.disapprove() & w).len() as i64;
    u8::from(net >= alpha as i64)
}

/// `H(p) = 1 + 1/2 + … + 1/p`, with `H(0) = 0`.
pub fn harmonic(p: usize) -> BigRational {
    (1..=p).fold(BigRational::zero(), |acc, j| {
        acc + BigRational::new(BigInt::from(1), BigInt::from(j))
    })
}

/// `H(|A⁺ ∩ W|) − H(|A⁻ ∩ W|)`.
pub fn tpav_net(ballot: &TrichotomousBallot, w: CandidateSet) -> BigRational {
    harmonic((ballot.approve() & w).len()) - harmonic((ballot.disapprove() & w).len())
}

pub fn tcc_objective(instance: &ElectionInstance, w: CandidateSet, alpha: usize) -> i64 {
    instance
        .ballots()
        .iter()
        .map(|b| i64::from(sat_tcc(b, w, alpha)))
        .sum()
}

pub fn tpav_objective(instance: &ElectionInstance, w: CandidateSet) -> BigRational {
    Harmonics::new(instance.num_candidates()).objective(instance, w)
}

/// Cached harmonic numbers `H(0..=m)`.
struct Harmonics(Vec<BigRational>);

impl Harmonics {
    fn new(m: usize) -> Self {
        let mut values = Vec::with_capacity(m + 1);
        values.push(BigRational::zero());
        for j in 1..=m {
            let next = &values[j - 1] + BigRational::new(BigInt::from(1), BigInt::from(j));
            values.push(next);
        }
        Harmonics(values)
    }

    fn objective(&self, instance: &ElectionInstance, w: CandidateSet) -> BigRational {
        // count voters by (approved seats, disapproved seats) before touching rationals
        let m = instance.num_candidates();
        let mut plus = vec![0i64; m + 1];
        let mut minus = vec![0i64; m + 1];
        for b in instance.ballots() {
            plus[(b.approve() & w).len()] += 1;
            minus[(b.disapprove() & w).len()] += 1;
        }
        let weighted = |counts: &[i64]| {
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .fold(BigRational::zero(), |acc, (p, &c)| acc + &self.0[p] * BigInt::from(c))
        };
        weighted(&plus) - weighted(&minus)
    }
}

fn exhaustive(
    instance: &ElectionInstance,
    rule: Rule,
    budget: u128,
    objective: impl Fn(CandidateSet) -> BigRational,
) -> Result<RuleOutcome> {
    let m = instance.num_candidates();
    let k = instance.committee_size();
    let count = binomial(m, k);
    if count > budget {
        return Err(Error::Budget(format!(
            "{count} committees of size {k} from {m} candidates exceeds budget {budget}"
        )));
    }
    let mut best: Option<(CandidateSet, BigRational)> = None;
    for w in combinations(instance.candidates(), k) {
        let value = objective(w);
        // strict improvement keeps the lexicographically first optimum
        if best.as_ref().is_none_or(|(_, b)| value > *b) {
            best = Some((w, value));
        }
    }
    let (w, value) = best.expect("at least one committee since k <= m");
    Ok(RuleOutcome {
        rule,
        committee: Committee::unchecked(w),
        score: Score(value),
        trace: Vec::new(),
    })
}

/// Committee maximizing the number of TCC-satisfied voters.
pub fn exact_tcc(instance: &ElectionInstance, config: &RuleConfig) -> Result<RuleOutcome> {
    exhaustive(instance, Rule::ExactTcc, config.budget, |w| {
        BigRational::from_integer(BigInt::from(tcc_objective(instance, w, config.alpha)))
    })
}

/// Committee maximizing total TPAV satisfaction minus dissatisfaction.
pub fn exact_tpav(instance: &ElectionInstance, config: &RuleConfig) -> Result<RuleOutcome> {
    let h = Harmonics::new(instance.num_candidates());
    exhaustive(instance, Rule::ExactTpav, config.budget, |w| h.objective(instance, w))
}

fn sequential(
    instance: &ElectionInstance,
    config: &RuleConfig,
    rule: Rule,
    objective: impl Fn(CandidateSet) -> BigRational,
) -> RuleOutcome {
    let k = instance.committee_size();
    let policy = config.ties_for(rule);
    let mut rng = config.rng(rule);
    let mut w = CandidateSet::empty();
    let mut available = instance.candidates();
    let mut trace = Vec::with_capacity(k);
    while w.len() < k {
        let scores: Vec<(usize, BigRational)> =
            available.iter().map(|c| (c, objective(w.with(c)))).collect();
        let best = scores.iter().map(|(_, s)| s).max().expect("available is nonempty").clone();
        let tied: Vec<usize> = scores.iter().filter(|(_, s)| *s == best).map(|&(c, _)| c).collect();
        let chosen = break_tie(&tied, policy, &mut rng);
        w.insert(chosen);
        available.remove(chosen);
        let mut record = RoundRecord::new(trace.len() + 1, Action::Elected, chosen);
        record.scores = scores
            .into_iter()
            .map(|(candidate, s)| CandidateScore { candidate, score: Score(s) })
            .collect();
        trace.push(record);
    }
    RuleOutcome {
        rule,
        committee: Committee::unchecked(w),
        score: Score(objective(w)),
        trace,
    }
}

/// Greedy TCC: each round adds the candidate maximizing the TCC objective of the grown committee.
pub fn seq_tcc(instance: &ElectionInstance, config: &RuleConfig) -> RuleOutcome {
    sequential(instance, config, Rule::SeqTcc, |w| {
        BigRational::from_integer(BigInt::from(tcc_objective(instance, w, config.alpha)))
    })
}

/// Greedy TPAV.
pub fn seq_tpav(instance: &ElectionInstance, config: &RuleConfig) -> RuleOutcome {
    let h = Harmonics::new(instance.num_candidates());
    sequential(instance, config, Rule::SeqTpav, |w| h.objective(instance, w))
}
