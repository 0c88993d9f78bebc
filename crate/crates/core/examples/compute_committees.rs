//! Runs all eight rules on a profile file, or on the four-voter fixture.
//!
//! ```sh
//! cargo run --example compute_committees -- crates/core/fixtures/three_voter.jsonl
//! ```

use trivote::axioms::{check, AxiomId};
use trivote::profile::parse_profile;
use trivote::rules::{Rule, RuleConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let instance = match std::env::args().nth(1) {
        Some(path) => parse_profile(&std::fs::read_to_string(path)?)?,
        None => trivote::golden::four_voter(),
    };
    println!(
        "n = {}, m = {}, k = {}",
        instance.num_voters(),
        instance.num_candidates(),
        instance.committee_size()
    );
    let config = RuleConfig::with_seed(1);
    for rule in Rule::ALL {
        let outcome = rule.compute(&instance, &config)?;
        let w = outcome.committee.members();
        let held: Vec<String> = AxiomId::ALL
            .into_iter()
            .filter(|&a| check(&instance, w, a).map(|r| r.satisfied).unwrap_or(false))
            .map(|a| a.to_string())
            .collect();
        println!(
            "{:<13} {:<12} score {:<8} satisfies {}",
            rule.name(),
            instance.names_of(w).join(" "),
            outcome.score.to_string(),
            held.join(" ")
        );
    }
    Ok(())
}
