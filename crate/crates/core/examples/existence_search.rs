//! Searches for committees satisfying each axiom, including profiles where
//! none exists.

use trivote::axioms::{exists_committee, AxiomId};
use trivote::{golden, validate_instance, ElectionInstance, RawBallot};

/// Two overlapping blocks, each entitled to two seats out of three.
fn overlapping_blocks() -> ElectionInstance {
    let sets: [&[usize]; 6] = [&[0, 1, 2, 3], &[0, 1, 2, 3], &[0, 1], &[0, 1], &[2, 3], &[2, 3]];
    let raw: Vec<RawBallot> = sets.iter().map(|a| RawBallot::new(a, &[])).collect();
    validate_instance(&raw, 4, 3).expect("valid profile")
}

fn main() -> trivote::Result<()> {
    let profiles = [
        ("unanimous split", golden::unanimous_split()),
        ("polarized", golden::polarized()),
        ("overlapping blocks", overlapping_blocks()),
    ];
    for (label, instance) in profiles {
        println!("{label}");
        for axiom in AxiomId::ALL {
            let found = exists_committee(&instance, axiom)?;
            let shown = found.map_or("none".to_string(), |c| instance.names_of(c.members()).join(" "));
            println!("  {axiom:<6} {shown}");
        }
    }
    Ok(())
}
