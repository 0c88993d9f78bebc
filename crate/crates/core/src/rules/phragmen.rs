//! Sequential Phragmén on the approval sets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{fill_seats, Action, CandidateScore, Rule, RoundRecord, RuleConfig, RuleOutcome, Score, TiePolicy};
use crate::model::{CandidateSet, Committee, ElectionInstance};

/// Each round elects the candidate whose supporters, after jointly taking on
/// one more unit of load, would carry the smallest maximal load. Ties go to
/// the lowest index; candidates nobody approves are only used to fill.
pub fn seq_phragmen(instance: &ElectionInstance) -> RuleOutcome {
    let approvals = instance.project_approvals().approval_sets;
    let n = approvals.len();
    let k = instance.committee_size();

    let mut loads = vec![BigRational::zero(); n];
    let mut w = CandidateSet::empty();
    let mut available = instance.candidates();
    let mut trace = Vec::with_capacity(k);
    let mut max_load = BigRational::zero();

    while w.len() < k {
        let mut options = Vec::new();
        for c in available {
            let supporters: Vec<usize> = (0..n).filter(|&i| approvals[i].contains(c)).collect();
            if supporters.is_empty() {
                continue;
            }
            let total: BigRational = supporters.iter().fold(BigRational::one(), |acc, &i| acc + &loads[i]);
            let load = total / BigInt::from(supporters.len());
            options.push((c, load, supporters));
        }
        // strict comparison keeps the lowest index among ties
        let Some(best) = options
            .iter()
            .enumerate()
            .fold(None::<usize>, |best, (j, opt)| match best {
                Some(b) if options[b].1 <= opt.1 => Some(b),
                _ => Some(j),
            })
        else {
            break;
        };
        let (chosen, load, supporters) = options[best].clone();
        for &i in &supporters {
            loads[i] = load.clone();
        }
        if load > max_load {
            max_load = load;
        }
        w.insert(chosen);
        available.remove(chosen);
        let mut record = RoundRecord::new(trace.len() + 1, Action::Elected, chosen);
        record.scores = options
            .into_iter()
            .map(|(candidate, score, _)| CandidateScore {
                candidate,
                score: Score(score),
            })
            .collect();
        trace.push(record);
    }
    let mut rng = RuleConfig::default().rng(Rule::SeqPhragmen);
    fill_seats(&mut w, &mut available, k, TiePolicy::LowestIndex, &mut rng, &mut trace);

    RuleOutcome {
        rule: Rule::SeqPhragmen,
        committee: Committee::unchecked(w),
        score: Score(max_load),
        trace,
    }
}
