//! Committee selection rules.
//!
//! All rules are deterministic functions of `(instance, config)`: wherever a
//! rule breaks ties or fills seats arbitrarily it does so either by lowest
//! candidate index or by a ChaCha stream seeded from [`RuleConfig::seed`].
//! Objective values and vote weights are exact rationals.

mod greedy_ncr;
mod monroe;
mod phragmen;
mod scoring;
mod stv;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::model::{CandidateSet, Committee, ElectionInstance};

pub use greedy_ncr::{greedy_ncr, greedy_ncr_with_budget};
pub use monroe::{seq_monroe, MonroeAssignment};
pub use phragmen::seq_phragmen;
pub use scoring::{exact_tcc, exact_tpav, harmonic, sat_tcc, seq_tcc, seq_tpav, tpav_net, tpav_objective, tcc_objective};
pub use stv::{droop_quota, droop_stv};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    ExactTcc,
    ExactTpav,
    SeqTcc,
    SeqTpav,
    SeqMonroe,
    DroopStv,
    GreedyNcr,
    SeqPhragmen,
}

impl Rule {
    pub const ALL: [Rule; 8] = [
        Rule::ExactTcc,
        Rule::ExactTpav,
        Rule::SeqTcc,
        Rule::SeqTpav,
        Rule::SeqMonroe,
        Rule::DroopStv,
        Rule::GreedyNcr,
        Rule::SeqPhragmen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::ExactTcc => "exact-tcc",
            Rule::ExactTpav => "exact-tpav",
            Rule::SeqTcc => "seq-tcc",
            Rule::SeqTpav => "seq-tpav",
            Rule::SeqMonroe => "seq-monroe",
            Rule::DroopStv => "droop-stv",
            Rule::GreedyNcr => "greedy-ncr",
            Rule::SeqPhragmen => "seq-phragmen",
        }
    }

    pub fn compute(self, instance: &ElectionInstance, config: &RuleConfig) -> Result<RuleOutcome> {
        config.validate(instance)?;
        match self {
            Rule::ExactTcc => exact_tcc(instance, config),
            Rule::ExactTpav => exact_tpav(instance, config),
            Rule::SeqTcc => Ok(seq_tcc(instance, config)),
            Rule::SeqTpav => Ok(seq_tpav(instance, config)),
            Rule::SeqMonroe => Ok(seq_monroe(instance, config)),
            Rule::DroopStv => Ok(droop_stv(instance, config)),
            Rule::GreedyNcr => greedy_ncr_with_budget(instance, config.budget),
            Rule::SeqPhragmen => Ok(seq_phragmen(instance)),
        }
    }

    /// Tie policy used when the config leaves it unset.
    pub fn default_tie_policy(self) -> TiePolicy {
        match self {
            Rule::DroopStv => TiePolicy::SeededRandom,
            _ => TiePolicy::LowestIndex,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown rule `{s}`")))
    }
}

/// How STV treats the voters behind an elected candidate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StvMode {
    /// Elected candidates are struck from the ballots; voter weights never change.
    #[default]
    Literal,
    /// A quota's worth of weight is removed from the elected candidate's supporters.
    Transfer,
}

impl FromStr for StvMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "literal" => Ok(StvMode::Literal),
            "transfer" => Ok(StvMode::Transfer),
            _ => Err(Error::Parse(format!("unknown stv mode `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TiePolicy {
    LowestIndex,
    SeededRandom,
}

impl FromStr for TiePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lowest-index" => Ok(TiePolicy::LowestIndex),
            "seeded-random" => Ok(TiePolicy::SeededRandom),
            _ => Err(Error::Parse(format!("unknown tie policy `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleConfig {
    /// Net approvals a voter needs in the committee to count as satisfied under TCC.
    pub alpha: usize,
    pub seed: u64,
    pub stv_mode: StvMode,
    /// `None` uses each rule's own default.
    pub tie_policy: Option<TiePolicy>,
    /// STV elects only when the top score strictly exceeds the quota.
    pub stv_strict_quota: bool,
    /// Cap on enumerated subsets for the exhaustive rules.
    pub budget: u128,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig {
            alpha: 1,
            seed: 0,
            stv_mode: StvMode::Literal,
            tie_policy: None,
            stv_strict_quota: false,
            budget: crate::axioms::DEFAULT_COMMITTEE_BUDGET,
        }
    }
}

impl RuleConfig {
    pub fn with_seed(seed: u64) -> Self {
        RuleConfig {
            seed,
            ..RuleConfig::default()
        }
    }

    pub fn validate(&self, instance: &ElectionInstance) -> Result<()> {
        if self.alpha < 1 || self.alpha > instance.committee_size() {
            return Err(Error::Config(format!(
                "alpha {} outside 1..={}",
                self.alpha,
                instance.committee_size()
            )));
        }
        Ok(())
    }

    pub(crate) fn ties_for(&self, rule: Rule) -> TiePolicy {
        self.tie_policy.unwrap_or_else(|| rule.default_tie_policy())
    }

    pub(crate) fn rng(&self, rule: Rule) -> ChaCha8Rng {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(rule as u64);
        rng
    }
}

/// An exact rational score, serialized as `"p/q"` (or `"p"` when integral).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Score(pub BigRational);

impl Score {
    pub fn integer(v: i64) -> Self {
        Score(BigRational::from_integer(BigInt::from(v)))
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Score {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    Elected,
    Eliminated,
    /// Seat filled without a qualifying score.
    Filled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateScore {
    pub candidate: usize,
    pub score: Score,
}

/// One step of a rule's execution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundRecord {
    pub round: usize,
    pub action: Action,
    pub candidate: usize,
    /// Scores of the candidates considered this round.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub scores: Vec<CandidateScore>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quota: Option<Score>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    /// Voters taken out of consideration this round.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub voters_removed: Vec<usize>,
}

impl RoundRecord {
    pub(crate) fn new(round: usize, action: Action, candidate: usize) -> Self {
        RoundRecord {
            round,
            action,
            candidate,
            scores: Vec::new(),
            quota: None,
            level: None,
            voters_removed: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleOutcome {
    pub rule: Rule,
    pub committee: Committee,
    /// The rule's objective evaluated on the committee.
    pub score: Score,
    pub trace: Vec<RoundRecord>,
}

/// Picks one of `tied` (ascending candidate indices, nonempty).
pub(crate) fn break_tie(tied: &[usize], policy: TiePolicy, rng: &mut ChaCha8Rng) -> usize {
    debug_assert!(!tied.is_empty());
    match policy {
        TiePolicy::LowestIndex => tied[0],
        TiePolicy::SeededRandom if tied.len() == 1 => tied[0],
        TiePolicy::SeededRandom => *tied.choose(rng).expect("nonempty tie set"),
    }
}

/// Fills the committee up to `k` seats from `available`, recording each seat.
pub(crate) fn fill_seats(
    w: &mut CandidateSet,
    available: &mut CandidateSet,
    k: usize,
    policy: TiePolicy,
    rng: &mut ChaCha8Rng,
    trace: &mut Vec<RoundRecord>,
) {
    while w.len() < k {
        let pool = available.to_vec();
        let c = break_tie(&pool, policy, rng);
        w.insert(c);
        available.remove(c);
        trace.push(RoundRecord::new(trace.len() + 1, Action::Filled, c));
    }
}
