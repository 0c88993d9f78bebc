//! Profile documents: a line-oriented JSON format keyed by candidate names.
//!
//! The first JSON line is the header, every following JSON line is one
//! ballot. Blank lines and lines starting with `#` are ignored.
//!
//! ```text
//! # four voters, committee of two
//! {"version": "1", "candidates": ["a", "b", "c", "d", "e"], "k": 2}
//! {"approve": ["a", "b", "d"], "indifferent": ["c"], "disapprove": ["e"]}
//! {"approve": ["a", "b"], "disapprove": ["d", "e"]}
//! ```
//!
//! `indifferent` is optional; when present it must equal the candidates
//! neither approved nor disapproved.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{CandidateSet, ElectionInstance, TrichotomousBallot};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileHeader {
    pub version: String,
    pub candidates: Vec<String>,
    pub k: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallotRecord {
    #[serde(default)]
    pub approve: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indifferent: Option<Vec<String>>,
    #[serde(default)]
    pub disapprove: Vec<String>,
}

/// In-memory form of a profile file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileDocument {
    pub header: ProfileHeader,
    pub ballots: Vec<BallotRecord>,
}

impl ProfileDocument {
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lineno, first) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty profile document".into()))?;
        let header: ProfileHeader = serde_json::from_str(first)
            .map_err(|e| Error::Parse(format!("line {lineno}: bad header: {e}")))?;
        let ballots = lines
            .map(|(lineno, l)| {
                serde_json::from_str(l)
                    .map_err(|e| Error::Parse(format!("line {lineno}: bad ballot: {e}")))
            })
            .collect::<Result<Vec<BallotRecord>>>()?;
        Ok(ProfileDocument { header, ballots })
    }

    pub fn to_text(&self) -> String {
        let mut out = serde_json::to_string(&self.header).expect("header serializes");
        out.push('\n');
        for b in &self.ballots {
            out.push_str(&serde_json::to_string(b).expect("ballot serializes"));
            out.push('\n');
        }
        out
    }

    /// Validates names and ballots into an instance.
    pub fn to_instance(&self) -> Result<ElectionInstance> {
        if self.header.version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported profile version `{}`",
                self.header.version
            )));
        }
        let names = &self.header.candidates;
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::Parse(format!("duplicate candidate name `{name}`")));
            }
        }
        let m = names.len();
        let lookup = |voter: usize, list: &[String]| -> Result<CandidateSet> {
            list.iter()
                .map(|name| {
                    index.get(name.as_str()).copied().ok_or_else(|| {
                        Error::Range(format!("ballot {voter} names unknown candidate `{name}`"))
                    })
                })
                .collect()
        };
        let mut ballots = Vec::with_capacity(self.ballots.len());
        for (voter, record) in self.ballots.iter().enumerate() {
            let approve = lookup(voter, &record.approve)?;
            let disapprove = lookup(voter, &record.disapprove)?;
            let ballot = TrichotomousBallot::new(m, approve, disapprove).map_err(|e| match e {
                Error::Overlap { candidate, .. } => Error::Overlap { voter, candidate },
                other => other,
            })?;
            if let Some(listed) = &record.indifferent {
                let listed = lookup(voter, listed)?;
                if listed != ballot.indifferent() {
                    return Err(Error::Consistency(format!(
                        "ballot {voter}: listed indifferent set does not equal the unranked candidates"
                    )));
                }
            }
            ballots.push(ballot);
        }
        ElectionInstance::new(names.clone(), ballots, self.header.k)
    }

    /// Document for an instance, with every indifference set written out.
    pub fn from_instance(instance: &ElectionInstance) -> Self {
        let names = |set: CandidateSet| -> Vec<String> {
            instance.names_of(set).into_iter().map(str::to_owned).collect()
        };
        ProfileDocument {
            header: ProfileHeader {
                version: FORMAT_VERSION.into(),
                candidates: instance.candidate_names().to_vec(),
                k: instance.committee_size(),
            },
            ballots: instance
                .ballots()
                .iter()
                .map(|b| BallotRecord {
                    approve: names(b.approve()),
                    indifferent: Some(names(b.indifferent())),
                    disapprove: names(b.disapprove()),
                })
                .collect(),
        }
    }
}

pub fn parse_profile(text: &str) -> Result<ElectionInstance> {
    ProfileDocument::from_text(text)?.to_instance()
}

pub fn serialize_profile(instance: &ElectionInstance) -> String {
    ProfileDocument::from_instance(instance).to_text()
}

/// Parses a comma- or whitespace-separated list of candidate names.
pub fn parse_committee(instance: &ElectionInstance, names: &str) -> Result<CandidateSet> {
    let mut set = CandidateSet::empty();
    for name in names.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        let c = instance
            .candidate_index(name)
            .ok_or_else(|| Error::Range(format!("unknown candidate `{name}`")))?;
        set.insert(c);
    }
    Ok(set)
}
