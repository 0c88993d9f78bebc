//! Droop STV round by round, with and without weight transfer.

use trivote::golden;
use trivote::rules::{Rule, RuleConfig, StvMode};

fn main() -> trivote::Result<()> {
    let instance = golden::four_voter();
    let names = instance.candidate_names();
    for mode in [StvMode::Literal, StvMode::Transfer] {
        let config = RuleConfig {
            stv_mode: mode,
            ..RuleConfig::with_seed(3)
        };
        let outcome = Rule::DroopStv.compute(&instance, &config)?;
        println!("{mode:?}: quota {}", outcome.score);
        for round in &outcome.trace {
            let scores: Vec<String> = round
                .scores
                .iter()
                .map(|s| format!("{}={}", names[s.candidate], s.score))
                .collect();
            println!(
                "  {:>2} {:<10} {:<2} [{}]",
                round.round,
                format!("{:?}", round.action).to_lowercase(),
                names[round.candidate],
                scores.join(" ")
            );
        }
        println!("  committee: {}", instance.names_of(outcome.committee.members()).join(" "));
    }
    Ok(())
}
