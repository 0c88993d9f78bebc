//! Checks every shipped fixture's reference committee against all nine axioms.
//!
//! ```sh
//! cargo run --example golden_axioms
//! ```

use trivote::axioms::{check, AxiomId};
use trivote::golden;
use trivote::profile::parse_committee;

fn main() -> trivote::Result<()> {
    let cases = [
        ("four voters", golden::four_voter(), "a,b"),
        ("unanimous split", golden::unanimous_split(), "c1,c2"),
        ("polarized", golden::polarized(), "a,b"),
        ("three voters", golden::xyz(), "x"),
    ];
    for (label, instance, committee) in cases {
        let w = parse_committee(&instance, committee)?;
        println!("{label}: W = {{{committee}}}");
        for axiom in AxiomId::ALL {
            let report = check(&instance, w, axiom)?;
            match report.witness {
                None => println!("  {axiom:<6} satisfied"),
                Some(wit) => {
                    let voters: Vec<String> = wit.voters.iter().map(|i| (i + 1).to_string()).collect();
                    println!(
                        "  {axiom:<6} violated: voters {{{}}} at level {}, cohesive on {{{}}}, {} represented",
                        voters.join(","),
                        wit.level,
                        instance.names_of(wit.cohesion_set).join(","),
                        wit.representation_found
                    );
                }
            }
        }
    }
    Ok(())
}
