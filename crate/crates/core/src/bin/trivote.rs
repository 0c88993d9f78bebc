use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use trivote::axioms::{self, AxiomId, GroupWitness};
use trivote::profile::{parse_committee, parse_profile, serialize_profile};
use trivote::rules::{Action, RoundRecord, Rule, RuleConfig, StvMode, TiePolicy};
use trivote::sampling::{self, BallotSampler, ExperimentConfig};
use trivote::{ElectionInstance, Error};

#[derive(Parser)]
#[command(name = "trivote", version, about = "Committee elections with trichotomous ballots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a committee with one rule.
    Compute {
        profile: PathBuf,
        #[arg(long)]
        rule: Rule,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "literal")]
        stv_mode: StvMode,
        #[arg(long)]
        tie_policy: Option<TiePolicy>,
        /// Elect in STV only when the top score strictly exceeds the quota.
        #[arg(long)]
        strict_quota: bool,
        /// Print the round-by-round trace after the committee.
        #[arg(long)]
        trace: bool,
    },
    /// Check whether a committee satisfies an axiom.
    Check {
        profile: PathBuf,
        #[arg(long)]
        axiom: AxiomId,
        /// Comma-separated candidate names.
        #[arg(long)]
        committee: String,
    },
    /// Search for a committee satisfying an axiom.
    Exists {
        profile: PathBuf,
        #[arg(long)]
        axiom: AxiomId,
    },
    /// Run the Monte Carlo satisfaction experiment.
    Experiment {
        #[arg(long, value_enum, default_value = "desk")]
        scale: Scale,
        #[arg(long)]
        profiles: Option<usize>,
        /// Inclusive voter range `lo,hi`.
        #[arg(long, value_parser = parse_range)]
        n: Option<(usize, usize)>,
        /// Inclusive candidate range `lo,hi`.
        #[arg(long, value_parser = parse_range)]
        m: Option<(usize, usize)>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated rule names.
        #[arg(long, value_delimiter = ',')]
        rules: Option<Vec<Rule>>,
        /// Comma-separated axiom names.
        #[arg(long, value_delimiter = ',')]
        axioms: Option<Vec<AxiomId>>,
        #[arg(long, default_value = "literal")]
        stv_mode: StvMode,
        #[arg(long, default_value_t = 1)]
        alpha: usize,
        #[arg(long, value_enum, default_value = "uniform-classes")]
        sampler: SamplerArg,
        #[arg(long)]
        oracle_bound: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Write a random impartial-culture profile.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "uniform-classes")]
        sampler: SamplerArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Scale {
    Desk,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum SamplerArg {
    UniformClasses,
    UniformWeakOrder,
}

impl From<SamplerArg> for BallotSampler {
    fn from(s: SamplerArg) -> Self {
        match s {
            SamplerArg::UniformClasses => BallotSampler::UniformClasses,
            SamplerArg::UniformWeakOrder => BallotSampler::UniformWeakOrder,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s.split_once(',').ok_or("expected `lo,hi`")?;
    let parse = |v: &str| v.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(lo)?, parse(hi)?))
}

/// Exit codes: 0 ok, 1 violated or none found, 2 bad input, 3 budget exceeded.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(match err {
                Error::Budget(_) => 3,
                _ => 2,
            })
        }
    }
}

fn load(path: &Path) -> Result<ElectionInstance, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_profile(&text)
}

fn names(instance: &ElectionInstance, set: trivote::CandidateSet) -> String {
    instance.names_of(set).join(" ")
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Compute {
            profile,
            rule,
            alpha,
            seed,
            stv_mode,
            tie_policy,
            strict_quota,
            trace,
        } => {
            let instance = load(&profile)?;
            let config = RuleConfig {
                alpha,
                seed,
                stv_mode,
                tie_policy,
                stv_strict_quota: strict_quota,
                ..RuleConfig::default()
            };
            let outcome = rule.compute(&instance, &config)?;
            println!("{}", names(&instance, outcome.committee.members()));
            if trace {
                println!("score {}", outcome.score);
                for record in &outcome.trace {
                    println!("{}", format_round(&instance, record));
                }
            }
            Ok(0)
        }
        Command::Check { profile, axiom, committee } => {
            let instance = load(&profile)?;
            let w = parse_committee(&instance, &committee)?;
            let report = axioms::check(&instance, w, axiom)?;
            match report.witness {
                None => {
                    println!("SATISFIED");
                    Ok(0)
                }
                Some(witness) => {
                    println!("VIOLATED");
                    print_witness(&instance, &witness);
                    Ok(1)
                }
            }
        }
        Command::Exists { profile, axiom } => {
            let instance = load(&profile)?;
            match axioms::exists_committee(&instance, axiom)? {
                Some(committee) => {
                    println!("{}", names(&instance, committee.members()));
                    Ok(0)
                }
                None => {
                    println!("NONE");
                    Ok(1)
                }
            }
        }
        Command::Experiment {
            scale,
            profiles,
            n,
            m,
            seed,
            rules,
            axioms,
            stv_mode,
            alpha,
            sampler,
            oracle_bound,
            out,
            format,
        } => {
            let mut config = match scale {
                Scale::Desk => ExperimentConfig::desk_scale(seed),
                Scale::Full => ExperimentConfig::full_scale(seed),
            };
            if let Some(p) = profiles {
                config.num_profiles = p;
            }
            if let Some(range) = n {
                config.n_range = range;
                if oracle_bound.is_none() {
                    config.oracle_bound = config.oracle_bound.max(range.1);
                }
            }
            if let Some(range) = m {
                config.m_range = range;
            }
            if let Some(r) = rules {
                config.rules = r;
            }
            if let Some(a) = axioms {
                config.axioms = a;
            }
            if let Some(bound) = oracle_bound {
                config.oracle_bound = bound;
            }
            config.sampler = sampler.into();
            config.rule_config.stv_mode = stv_mode;
            config.rule_config.alpha = alpha;

            let table = sampling::run_experiment(&config)?;
            print!("{}", table.summary());
            if let Some(path) = out {
                let body = match format {
                    Format::Csv => table.to_csv()?,
                    Format::Json => table.to_json(),
                };
                sampling::write_atomic(&path, body.as_bytes())?;
            }
            Ok(0)
        }
        Command::Gen {
            n,
            m,
            k,
            seed,
            sampler,
            out,
        } => {
            if n == 0 || m == 0 || m > trivote::model::MAX_CANDIDATES || k == 0 || k > m {
                return Err(Error::Config(format!("need n >= 1, 1 <= k <= m <= 64; got n={n} m={m} k={k}")));
            }
            let mut rng = sampling::profile_rng(seed, 0);
            let ballots = (0..n)
                .map(|_| match BallotSampler::from(sampler) {
                    BallotSampler::UniformClasses => sampling::sample_ballot(m, &mut rng),
                    BallotSampler::UniformWeakOrder => sampling::sample_weak_order_ballot(m, &mut rng),
                })
                .collect();
            let instance = ElectionInstance::from_ballots(ballots, k)?;
            let text = serialize_profile(&instance);
            match out {
                Some(path) => sampling::write_atomic(&path, text.as_bytes())?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn print_witness(instance: &ElectionInstance, witness: &GroupWitness) {
    let voters: Vec<String> = witness.voters.iter().map(|i| (i + 1).to_string()).collect();
    println!("voters: {}", voters.join(" "));
    println!("level: {}", witness.level);
    println!("cohesion set: {}", names(instance, witness.cohesion_set));
    println!("represented: {}", witness.representation_found);
    if !witness.seated_disapproved.is_empty() {
        println!("seated and disapproved by the group: {}", names(instance, witness.seated_disapproved));
    }
}

fn format_round(instance: &ElectionInstance, record: &RoundRecord) -> String {
    let name = |c: usize| instance.candidate_names()[c].as_str();
    let action = match record.action {
        Action::Elected => "elected",
        Action::Eliminated => "eliminated",
        Action::Filled => "filled",
    };
    let mut line = format!("round {}: {action} {}", record.round, name(record.candidate));
    if let Some(q) = &record.quota {
        line.push_str(&format!(" quota={q}"));
    }
    if let Some(l) = record.level {
        line.push_str(&format!(" level={l}"));
    }
    if !record.scores.is_empty() {
        let scores: Vec<String> = record
            .scores
            .iter()
            .map(|s| format!("{}={}", name(s.candidate), s.score))
            .collect();
        line.push_str(&format!(" scores[{}]", scores.join(" ")));
    }
    if !record.voters_removed.is_empty() {
        let voters: Vec<String> = record.voters_removed.iter().map(|i| (i + 1).to_string()).collect();
        line.push_str(&format!(" voters[{}]", voters.join(" ")));
    }
    line
}
