//! Small hand-checked profiles shipped in `fixtures/`.

use crate::model::ElectionInstance;
use crate::profile::parse_profile;

pub const FOUR_VOTER_TEXT: &str = include_str!("../fixtures/four_voter.jsonl");
pub const UNANIMOUS_SPLIT_TEXT: &str = include_str!("../fixtures/unanimous_split.jsonl");
pub const POLARIZED_TEXT: &str = include_str!("../fixtures/polarized.jsonl");
pub const XYZ_TEXT: &str = include_str!("../fixtures/three_voter.jsonl");

fn load(text: &str) -> ElectionInstance {
    parse_profile(text).expect("bundled fixture is valid")
}

/// Four voters over `a..e`, `k = 2`. `{a, b}` satisfies SPR, WTJR and WTPJR.
pub fn four_voter() -> ElectionInstance {
    load(FOUR_VOTER_TEXT)
}

/// Two voters both approving `c1` and disapproving `c2`, `k = 2`.
/// The only committee violates SPR.
pub fn unanimous_split() -> ElectionInstance {
    load(UNANIMOUS_SPLIT_TEXT)
}

/// Two fully indifferent voters plus one single-approval voter for each of
/// `a`, `b`, `c`, `k = 2`. No committee satisfies WTJR or WAR; WA is satisfiable.
pub fn polarized() -> ElectionInstance {
    load(POLARIZED_TEXT)
}

/// Three voters over `x, y, z`, `k = 1`.
pub fn xyz() -> ElectionInstance {
    load(XYZ_TEXT)
}
