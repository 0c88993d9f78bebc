//! Builds a profile in code, writes it in the line-JSON format, reads it
//! back, and draws a random profile.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trivote::model::Class::{Approve as P, Disapprove as M, Indifferent as Z};
use trivote::profile::{parse_profile, serialize_profile, ProfileDocument};
use trivote::sampling::sample_ballot;
use trivote::{ElectionInstance, TrichotomousBallot};

fn main() -> trivote::Result<()> {
    let ballots = vec![
        TrichotomousBallot::from_classes(&[P, P, Z, M])?,
        TrichotomousBallot::from_classes(&[P, Z, M, M])?,
        TrichotomousBallot::from_classes(&[M, Z, P, P])?,
    ];
    let names = ["north", "south", "east", "west"].map(String::from).to_vec();
    let instance = ElectionInstance::new(names, ballots, 2)?;
    let text = serialize_profile(&instance);
    print!("{text}");
    assert_eq!(parse_profile(&text)?, instance);

    // the indifferent list is optional on input
    let doc = ProfileDocument::from_text(
        "{\"version\":\"1\",\"candidates\":[\"p\",\"q\"],\"k\":1}\n{\"approve\":[\"p\"]}\n",
    )?;
    println!("parsed {} ballot(s); first is indifferent to {:?}", doc.ballots.len(), doc.to_instance()?.ballots()[0].indifferent().to_vec());

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let random = ElectionInstance::from_ballots((0..4).map(|_| sample_ballot(6, &mut rng)).collect(), 3)?;
    print!("{}", serialize_profile(&random));
    Ok(())
}
