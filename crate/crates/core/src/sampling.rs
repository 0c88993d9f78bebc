//! Impartial-culture profiles and the Monte Carlo satisfaction experiment.
//!
//! Every profile draws from its own ChaCha stream (`stream = profile index`)
//! under the master seed, so the table does not depend on how profiles are
//! scheduled across threads.

use std::fmt::Write as _;
use std::path::Path;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::axioms::{check, AxiomId, DEFAULT_ORACLE_BOUND};
use crate::error::{Error, Result};
use crate::model::{CandidateSet, ElectionInstance, TrichotomousBallot};
use crate::rules::{Rule, RuleConfig};

/// How a single ballot is drawn.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BallotSampler {
    /// Each candidate independently approved, indifferent or disapproved
    /// with probability 1/3: uniform over the `3^m` class assignments.
    #[default]
    UniformClasses,
    /// Uniform over weak orders with at most three nonempty tiers. One tier
    /// reads as all-indifferent, two tiers as approve/disapprove.
    UniformWeakOrder,
}

/// Uniform over the `3^m` trichotomous ballots.
pub fn sample_ballot<R: Rng + ?Sized>(m: usize, rng: &mut R) -> TrichotomousBallot {
    let mut approve = CandidateSet::empty();
    let mut disapprove = CandidateSet::empty();
    for c in 0..m {
        match rng.gen_range(0..3u8) {
            0 => approve.insert(c),
            1 => {}
            _ => disapprove.insert(c),
        }
    }
    TrichotomousBallot::new(m, approve, disapprove).expect("sampled classes are disjoint")
}

/// Number of ordered partitions of `m` items into exactly `j` nonempty
/// blocks, `j!·S(m, j)`, by inclusion–exclusion.
fn surjections(m: usize, j: usize) -> f64 {
    let mut total = 0.0;
    let mut binom = 1.0;
    for i in 0..=j {
        let term = binom * ((j - i) as f64).powi(m as i32);
        total += if i % 2 == 0 { term } else { -term };
        binom = binom * (j - i) as f64 / (i + 1) as f64;
    }
    total
}

/// Uniform over weak orders on `m` candidates with at most three tiers.
pub fn sample_weak_order_ballot<R: Rng + ?Sized>(m: usize, rng: &mut R) -> TrichotomousBallot {
    let weights: Vec<f64> = (1..=3).map(|j| surjections(m, j)).collect();
    let mut draw = rng.gen::<f64>() * weights.iter().sum::<f64>();
    let mut tiers = 3;
    for (j, wgt) in weights.iter().enumerate() {
        if draw < *wgt {
            tiers = j + 1;
            break;
        }
        draw -= wgt;
    }
    // rejection sampling gives a uniform surjection onto `tiers` blocks
    let assignment: Vec<usize> = loop {
        let a: Vec<usize> = (0..m).map(|_| rng.gen_range(0..tiers)).collect();
        if (0..tiers).all(|t| a.contains(&t)) {
            break a;
        }
    };
    let block = |t: usize| -> CandidateSet { (0..m).filter(|&c| assignment[c] == t).collect() };
    match tiers {
        1 => TrichotomousBallot::indifferent_to_all(m),
        2 => TrichotomousBallot::new(m, block(0), block(1)).expect("disjoint blocks"),
        _ => TrichotomousBallot::new(m, block(0), block(2)).expect("disjoint blocks"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub num_profiles: usize,
    /// Inclusive voter-count range.
    pub n_range: (usize, usize),
    /// Inclusive candidate-count range; the lower end must be at least 2.
    pub m_range: (usize, usize),
    pub seed: u64,
    pub rules: Vec<Rule>,
    pub axioms: Vec<AxiomId>,
    /// Profiles with more voters than this are redrawn.
    pub oracle_bound: usize,
    pub sampler: BallotSampler,
    /// Alpha, STV mode and tie settings for the rules; the seed field is
    /// replaced per profile.
    pub rule_config: RuleConfig,
}

impl ExperimentConfig {
    pub const TABLE_RULES: [Rule; 4] = [Rule::SeqMonroe, Rule::SeqTcc, Rule::DroopStv, Rule::SeqTpav];
    pub const TABLE_AXIOMS: [AxiomId; 5] =
        [AxiomId::Wa, AxiomId::War, AxiomId::Wtpjr, AxiomId::Wncr, AxiomId::Ncr];

    /// 2,000 profiles, `n ∈ [4, 14]`, `m ∈ [2, 12]`.
    pub fn desk_scale(seed: u64) -> Self {
        ExperimentConfig {
            num_profiles: 2_000,
            n_range: (4, 14),
            m_range: (2, 12),
            seed,
            rules: Self::TABLE_RULES.to_vec(),
            axioms: Self::TABLE_AXIOMS.to_vec(),
            oracle_bound: 14,
            sampler: BallotSampler::UniformClasses,
            rule_config: RuleConfig::default(),
        }
    }

    /// 10,000 profiles, `n ∈ [4, 20]`, `m ∈ [2, 15]`.
    pub fn full_scale(seed: u64) -> Self {
        ExperimentConfig {
            num_profiles: 10_000,
            n_range: (4, 20),
            m_range: (2, 15),
            oracle_bound: DEFAULT_ORACLE_BOUND,
            ..Self::desk_scale(seed)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.num_profiles == 0 {
            return Err(Error::Config("num_profiles must be at least 1".into()));
        }
        let (n_lo, n_hi) = self.n_range;
        if n_lo < 1 || n_lo > n_hi {
            return Err(Error::Config(format!("bad voter range [{n_lo}, {n_hi}]")));
        }
        let (m_lo, m_hi) = self.m_range;
        if m_lo < 2 || m_lo > m_hi || m_hi > crate::model::MAX_CANDIDATES {
            return Err(Error::Config(format!(
                "bad candidate range [{m_lo}, {m_hi}]; need 2 <= lo <= hi <= {}",
                crate::model::MAX_CANDIDATES
            )));
        }
        if n_lo > self.oracle_bound {
            return Err(Error::Config(format!(
                "every profile exceeds the oracle bound {}",
                self.oracle_bound
            )));
        }
        if self.rules.is_empty() || self.axioms.is_empty() {
            return Err(Error::Config("at least one rule and one axiom are required".into()));
        }
        if self.rule_config.alpha != 1 && self.rule_config.alpha >= m_lo {
            return Err(Error::Config(format!(
                "alpha {} can exceed the committee size",
                self.rule_config.alpha
            )));
        }
        Ok(())
    }
}

/// Draws `n`, `m`, `k ∈ [1, m−1]` and `n` ballots.
pub fn sample_instance<R: Rng + ?Sized>(config: &ExperimentConfig, rng: &mut R) -> ElectionInstance {
    let n = rng.gen_range(config.n_range.0..=config.n_range.1);
    let m = rng.gen_range(config.m_range.0.max(2)..=config.m_range.1);
    let k = rng.gen_range(1..m);
    let ballots = (0..n)
        .map(|_| match config.sampler {
            BallotSampler::UniformClasses => sample_ballot(m, rng),
            BallotSampler::UniformWeakOrder => sample_weak_order_ballot(m, rng),
        })
        .collect();
    ElectionInstance::from_ballots(ballots, k).expect("sampled instance is valid")
}

/// The generator for profile number `index`.
pub fn profile_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws profile number `index`, redrawing while it has too many voters.
/// Returns the instance, the number of redraws and a seed for the rules.
pub fn sample_profile(config: &ExperimentConfig, index: u64) -> (ElectionInstance, usize, u64) {
    let mut rng = profile_rng(config.seed, index);
    let rule_seed = rng.next_u64();
    let mut redraws = 0;
    loop {
        let instance = sample_instance(config, &mut rng);
        if instance.num_voters() <= config.oracle_bound {
            return (instance, redraws, rule_seed);
        }
        redraws += 1;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableCell {
    pub rule: Rule,
    pub axiom: AxiomId,
    pub satisfied: usize,
    pub total: usize,
    pub probability: f64,
}

/// Rule × axiom satisfaction counts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SatisfactionTable {
    pub config: ExperimentConfig,
    pub seed: u64,
    /// Profiles redrawn because they exceeded the oracle bound.
    pub redrawn: usize,
    pub cells: Vec<TableCell>,
}

/// `satisfied/total` rounded half-up to four decimals, computed in integers.
pub fn format_probability(satisfied: usize, total: usize) -> String {
    let scaled = (satisfied as u128 * 20_000 + total as u128) / (2 * total as u128);
    format!("{}.{:04}", scaled / 10_000, scaled % 10_000)
}

impl SatisfactionTable {
    pub fn cell(&self, rule: Rule, axiom: AxiomId) -> Option<&TableCell> {
        self.cells.iter().find(|c| c.rule == rule && c.axiom == axiom)
    }

    pub fn probability(&self, rule: Rule, axiom: AxiomId) -> Option<f64> {
        self.cell(rule, axiom).map(|c| c.probability)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Io(e.to_string());
        writer
            .write_record(["rule", "axiom", "satisfied", "total", "probability"])
            .map_err(csv_err)?;
        for c in &self.cells {
            writer
                .write_record([
                    c.rule.name().to_string(),
                    c.axiom.name().to_string(),
                    c.satisfied.to_string(),
                    c.total.to_string(),
                    format_probability(c.satisfied, c.total),
                ])
                .map_err(csv_err)?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    /// Rules as rows, axioms as columns.
    pub fn summary(&self) -> String {
        let width = self.config.rules.iter().map(|r| r.name().len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        let _ = write!(out, "{:width$}", "rule");
        for a in &self.config.axioms {
            let _ = write!(out, " {:>8}", a.to_string());
        }
        out.push('\n');
        for r in &self.config.rules {
            let _ = write!(out, "{:width$}", r.name());
            for a in &self.config.axioms {
                let p = self
                    .cell(*r, *a)
                    .map(|c| format_probability(c.satisfied, c.total))
                    .unwrap_or_default();
                let _ = write!(out, " {p:>8}");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "profiles: {}  seed: {}  redrawn: {}",
            self.config.num_profiles, self.seed, self.redrawn
        );
        out
    }
}

/// Per-profile outcome: `satisfied[rule][axiom]`.
fn evaluate_profile(config: &ExperimentConfig, index: u64) -> Result<(Vec<Vec<bool>>, usize)> {
    let (instance, redraws, rule_seed) = sample_profile(config, index);
    let rule_config = RuleConfig {
        seed: rule_seed,
        ..config.rule_config.clone()
    };
    let mut rows = Vec::with_capacity(config.rules.len());
    for rule in &config.rules {
        let outcome = rule.compute(&instance, &rule_config)?;
        let w = outcome.committee.members();
        let row = config
            .axioms
            .iter()
            .map(|&a| check(&instance, w, a).map(|r| r.satisfied))
            .collect::<Result<Vec<bool>>>()?;
        rows.push(row);
    }
    Ok((rows, redraws))
}

/// Samples `num_profiles` instances and tallies, for each rule and axiom,
/// how often the rule's committee satisfies the axiom.
pub fn run_experiment(config: &ExperimentConfig) -> Result<SatisfactionTable> {
    config.validate()?;
    let per_profile = (0..config.num_profiles as u64)
        .into_par_iter()
        .map(|i| evaluate_profile(config, i))
        .collect::<Result<Vec<_>>>()?;

    let rules = config.rules.len();
    let axioms = config.axioms.len();
    let mut counts = vec![vec![0usize; axioms]; rules];
    let mut redrawn = 0;
    for (rows, redraws) in &per_profile {
        redrawn += redraws;
        for (r, row) in rows.iter().enumerate() {
            for (a, &ok) in row.iter().enumerate() {
                counts[r][a] += usize::from(ok);
            }
        }
    }
    let total = config.num_profiles;
    let cells = config
        .rules
        .iter()
        .enumerate()
        .flat_map(|(r, &rule)| {
            let counts = &counts;
            config.axioms.iter().enumerate().map(move |(a, &axiom)| TableCell {
                rule,
                axiom,
                satisfied: counts[r][a],
                total,
                probability: counts[r][a] as f64 / total as f64,
            })
        })
        .collect();
    Ok(SatisfactionTable {
        config: config.clone(),
        seed: config.seed,
        redrawn,
        cells,
    })
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    use std::io::Write;
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or_else(|| Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_candidate_frequencies() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut counts = [0usize; 3];
        let draws = 10_000;
        for _ in 0..draws {
            let b = sample_ballot(1, &mut rng);
            counts[(1 - b.position(0).unwrap()) as usize] += 1;
        }
        for c in counts {
            assert!((c as f64 / draws as f64 - 1.0 / 3.0).abs() < 0.02, "{counts:?}");
        }
        // chi-square with 2 degrees of freedom, 0.999 quantile
        let expected = draws as f64 / 3.0;
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - expected).powi(2) / expected).sum();
        assert!(chi2 < 13.82, "chi2 = {chi2}");
    }

    #[test]
    fn mean_approval_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = 9;
        let draws = 5_000;
        let total: usize = (0..draws).map(|_| sample_ballot(m, &mut rng).approve().len()).sum();
        let mean = total as f64 / draws as f64;
        // binomial(9, 1/3): sd of the mean is sqrt(2)/sqrt(5000) ≈ 0.02
        assert!((mean - 3.0).abs() < 0.1, "mean = {mean}");
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(surjections(3, 1), 1.0);
        assert_eq!(surjections(3, 2), 6.0);
        assert_eq!(surjections(3, 3), 6.0);
        assert_eq!(surjections(4, 2), 14.0);
    }

    #[test]
    fn weak_order_sampler_is_uniform_for_two_candidates() {
        // weak orders on 2 items: 1 one-tier + 2 two-tier = 3 outcomes
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut counts = std::collections::HashMap::new();
        let draws = 9_000;
        for _ in 0..draws {
            let b = sample_weak_order_ballot(2, &mut rng);
            *counts.entry((b.approve(), b.disapprove())).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 3);
        for &c in counts.values() {
            assert!((c as f64 / draws as f64 - 1.0 / 3.0).abs() < 0.03);
        }
    }

    #[test]
    fn instances_are_valid_and_reproducible() {
        let cfg = ExperimentConfig::desk_scale(42);
        for i in 0..200 {
            let (a, _, s1) = sample_profile(&cfg, i);
            let (b, _, s2) = sample_profile(&cfg, i);
            assert_eq!(a, b);
            assert_eq!(s1, s2);
            assert!((4..=14).contains(&a.num_voters()));
            assert!((2..=12).contains(&a.num_candidates()));
            assert!(a.committee_size() >= 1 && a.committee_size() < a.num_candidates());
        }
    }

    #[test]
    fn voter_count_histogram_is_flat() {
        let cfg = ExperimentConfig::desk_scale(9);
        let mut hist = [0usize; 15];
        let draws = 5_500;
        for i in 0..draws {
            hist[sample_profile(&cfg, i).0.num_voters()] += 1;
        }
        let expected = draws as f64 / 11.0;
        let chi2: f64 = hist[4..=14]
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // 10 degrees of freedom, 0.999 quantile
        assert!(chi2 < 29.59, "chi2 = {chi2}, {hist:?}");
    }

    #[test]
    fn redraws_oversized_profiles() {
        let mut cfg = ExperimentConfig::desk_scale(1);
        cfg.n_range = (4, 30);
        cfg.oracle_bound = 10;
        let redraws: usize = (0..100).map(|i| {
            let (inst, r, _) = sample_profile(&cfg, i);
            assert!(inst.num_voters() <= 10);
            r
        }).sum();
        assert!(redraws > 0);
    }

    #[test]
    fn config_errors() {
        let mut cfg = ExperimentConfig::desk_scale(0);
        cfg.num_profiles = 0;
        assert!(matches!(run_experiment(&cfg), Err(Error::Config(_))));
        let mut cfg = ExperimentConfig::desk_scale(0);
        cfg.m_range = (1, 5);
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
        let mut cfg = ExperimentConfig::desk_scale(0);
        cfg.rules.clear();
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
    }

    #[test]
    fn probability_formatting() {
        assert_eq!(format_probability(1999, 2000), "0.9995");
        assert_eq!(format_probability(2, 3), "0.6667");
        assert_eq!(format_probability(1, 3), "0.3333");
        assert_eq!(format_probability(5, 5), "1.0000");
        assert_eq!(format_probability(0, 7), "0.0000");
        assert_eq!(format_probability(1, 20_000), "0.0001");
    }

    #[test]
    fn small_experiment_is_deterministic() {
        let mut cfg = ExperimentConfig::desk_scale(7);
        cfg.num_profiles = 60;
        let a = run_experiment(&cfg).unwrap();
        let b = run_experiment(&cfg).unwrap();
        assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
        assert_eq!(a.cells.len(), 20);
        for c in &a.cells {
            assert_eq!(c.total, 60);
            assert!(c.satisfied <= c.total);
        }
        let csv = a.to_csv().unwrap();
        assert!(csv.starts_with("rule,axiom,satisfied,total,probability\n"));
    }
}
