//! Ballots, profiles and the set algebra every other module is written in.
//!
//! Candidates are identified by index `0..m`; names only exist at the I/O
//! boundary. A ballot stores its approval and disapproval sets and derives
//! the indifference set as the complement, so the three classes always
//! partition the candidate set.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of candidates.
pub const MAX_CANDIDATES: usize = 64;

/// A set of candidate indices stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CandidateSet(u64);

impl CandidateSet {
    pub const fn empty() -> Self {
        CandidateSet(0)
    }

    /// All candidates `0..m`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_CANDIDATES, "at most {MAX_CANDIDATES} candidates");
        if m == MAX_CANDIDATES {
            CandidateSet(u64::MAX)
        } else {
            CandidateSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(c: usize) -> Self {
        assert!(c < MAX_CANDIDATES);
        CandidateSet(1u64 << c)
    }

    pub const fn from_bits(bits: u64) -> Self {
        CandidateSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: usize) -> bool {
        c < MAX_CANDIDATES && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: usize) {
        *self = *self | CandidateSet::singleton(c);
    }

    pub fn remove(&mut self, c: usize) {
        if c < MAX_CANDIDATES {
            self.0 &= !(1u64 << c);
        }
    }

    pub fn with(self, c: usize) -> Self {
        self | CandidateSet::singleton(c)
    }

    pub fn union(self, other: Self) -> Self {
        CandidateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        CandidateSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        CandidateSet(self.0 & !other.0)
    }

    /// Complement within `0..m`.
    pub fn complement(self, m: usize) -> Self {
        CandidateSet::full(m).difference(self)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Index of the highest member plus one (0 for the empty set).
    pub fn span(self) -> usize {
        (64 - self.0.leading_zeros()) as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for CandidateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter()
            .fold(CandidateSet::empty(), |acc, c| acc.with(c))
    }
}

impl IntoIterator for CandidateSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl BitOr for CandidateSet {
    type Output = CandidateSet;

    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for CandidateSet {
    type Output = CandidateSet;

    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for CandidateSet {
    type Output = CandidateSet;

    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl fmt::Debug for CandidateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`CandidateSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let c = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Which class of a ballot a candidate falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Class {
    Approve,
    Indifferent,
    Disapprove,
}

impl Class {
    /// The positional value: 1, 0 or -1.
    pub fn position(self) -> i64 {
        match self {
            Class::Approve => 1,
            Class::Indifferent => 0,
            Class::Disapprove => -1,
        }
    }
}

/// One voter's partition of the candidates into approved, indifferent and
/// disapproved sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TrichotomousBallot {
    m: usize,
    approve: CandidateSet,
    disapprove: CandidateSet,
}

impl TrichotomousBallot {
    /// Builds a ballot over `m` candidates. The indifference set is the
    /// complement of `approve ∪ disapprove`.
    pub fn new(m: usize, approve: CandidateSet, disapprove: CandidateSet) -> Result<Self> {
        if m == 0 || m > MAX_CANDIDATES {
            return Err(Error::Range(format!(
                "candidate count {m} outside 1..={MAX_CANDIDATES}"
            )));
        }
        let universe = CandidateSet::full(m);
        if let Some(c) = (approve | disapprove).difference(universe).iter().next() {
            return Err(Error::Range(format!("unknown candidate index {c} (m = {m})")));
        }
        if let Some(c) = approve.intersection(disapprove).iter().next() {
            return Err(Error::Overlap { voter: 0, candidate: c });
        }
        Ok(TrichotomousBallot {
            m,
            approve,
            disapprove,
        })
    }

    /// A ballot indifferent about every candidate.
    pub fn indifferent_to_all(m: usize) -> Self {
        TrichotomousBallot::new(m, CandidateSet::empty(), CandidateSet::empty())
            .expect("empty classes are always valid")
    }

    /// Builds a ballot from the class of each candidate in index order.
    pub fn from_classes(classes: &[Class]) -> Result<Self> {
        let mut approve = CandidateSet::empty();
        let mut disapprove = CandidateSet::empty();
        for (c, class) in classes.iter().enumerate() {
            match class {
                Class::Approve => approve.insert(c),
                Class::Disapprove => disapprove.insert(c),
                Class::Indifferent => {}
            }
        }
        TrichotomousBallot::new(classes.len(), approve, disapprove)
    }

    pub fn num_candidates(&self) -> usize {
        self.m
    }

    pub fn approve(&self) -> CandidateSet {
        self.approve
    }

    pub fn disapprove(&self) -> CandidateSet {
        self.disapprove
    }

    pub fn indifferent(&self) -> CandidateSet {
        (self.approve | self.disapprove).complement(self.m)
    }

    pub fn class_of(&self, c: usize) -> Result<Class> {
        if c >= self.m {
            return Err(Error::Range(format!("candidate {c} >= m = {}", self.m)));
        }
        Ok(if self.approve.contains(c) {
            Class::Approve
        } else if self.disapprove.contains(c) {
            Class::Disapprove
        } else {
            Class::Indifferent
        })
    }

    /// Position of candidate `c`: 1 approved, 0 indifferent, -1 disapproved.
    pub fn position(&self, c: usize) -> Result<i64> {
        self.class_of(c).map(Class::position)
    }

    pub fn is_decisive(&self) -> bool {
        self.indifferent().is_empty()
    }
}

impl fmt::Debug for TrichotomousBallot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "+{:?} 0{:?} -{:?}",
            self.approve,
            self.indifferent(),
            self.disapprove
        )
    }
}

/// Approval and disapproval indices for one voter, before validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawBallot {
    pub approve: Vec<usize>,
    pub disapprove: Vec<usize>,
}

impl RawBallot {
    pub fn new(approve: &[usize], disapprove: &[usize]) -> Self {
        RawBallot {
            approve: approve.to_vec(),
            disapprove: disapprove.to_vec(),
        }
    }
}

/// A validated trichotomous profile with committee size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElectionInstance {
    candidate_names: Vec<String>,
    ballots: Vec<TrichotomousBallot>,
    k: usize,
}

/// Default display names: `a`..`z` for small elections, `c0`.. otherwise.
pub fn default_names(m: usize) -> Vec<String> {
    if m <= 26 {
        (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..m).map(|i| format!("c{i}")).collect()
    }
}

/// Validates raw ballots over `m` candidates and committee size `k`.
pub fn validate_instance(raw: &[RawBallot], m: usize, k: usize) -> Result<ElectionInstance> {
    if m == 0 || m > MAX_CANDIDATES {
        return Err(Error::Range(format!(
            "candidate count {m} outside 1..={MAX_CANDIDATES}"
        )));
    }
    let mut ballots = Vec::with_capacity(raw.len());
    for (voter, rb) in raw.iter().enumerate() {
        let mut approve = CandidateSet::empty();
        let mut disapprove = CandidateSet::empty();
        for &c in rb.approve.iter().chain(&rb.disapprove) {
            if c >= m {
                return Err(Error::Range(format!(
                    "voter {voter} references unknown candidate index {c} (m = {m})"
                )));
            }
        }
        rb.approve.iter().for_each(|&c| approve.insert(c));
        rb.disapprove.iter().for_each(|&c| disapprove.insert(c));
        let ballot = TrichotomousBallot::new(m, approve, disapprove).map_err(|e| match e {
            Error::Overlap { candidate, .. } => Error::Overlap { voter, candidate },
            other => other,
        })?;
        ballots.push(ballot);
    }
    ElectionInstance::new(default_names(m), ballots, k)
}

impl ElectionInstance {
    pub fn new(
        candidate_names: Vec<String>,
        ballots: Vec<TrichotomousBallot>,
        k: usize,
    ) -> Result<Self> {
        let m = candidate_names.len();
        if m == 0 || m > MAX_CANDIDATES {
            return Err(Error::Range(format!(
                "candidate count {m} outside 1..={MAX_CANDIDATES}"
            )));
        }
        if ballots.is_empty() {
            return Err(Error::Range("profile has no ballots".into()));
        }
        if k < 1 || k > m {
            return Err(Error::Range(format!("committee size {k} outside 1..={m}")));
        }
        if let Some(i) = ballots.iter().position(|b| b.num_candidates() != m) {
            return Err(Error::Range(format!(
                "ballot {i} is over {} candidates, expected {m}",
                ballots[i].num_candidates()
            )));
        }
        Ok(ElectionInstance {
            candidate_names,
            ballots,
            k,
        })
    }

    /// Builds an instance with default candidate names.
    pub fn from_ballots(ballots: Vec<TrichotomousBallot>, k: usize) -> Result<Self> {
        let m = ballots.first().map_or(0, |b| b.num_candidates());
        ElectionInstance::new(default_names(m), ballots, k)
    }

    pub fn num_voters(&self) -> usize {
        self.ballots.len()
    }

    pub fn num_candidates(&self) -> usize {
        self.candidate_names.len()
    }

    pub fn committee_size(&self) -> usize {
        self.k
    }

    pub fn ballots(&self) -> &[TrichotomousBallot] {
        &self.ballots
    }

    pub fn candidate_names(&self) -> &[String] {
        &self.candidate_names
    }

    pub fn candidates(&self) -> CandidateSet {
        CandidateSet::full(self.num_candidates())
    }

    /// Same profile with another committee size.
    pub fn with_committee_size(&self, k: usize) -> Result<Self> {
        ElectionInstance::new(self.candidate_names.clone(), self.ballots.clone(), k)
    }

    pub fn candidate_index(&self, name: &str) -> Option<usize> {
        self.candidate_names.iter().position(|n| n == name)
    }

    /// Sorted display names of a set.
    pub fn names_of(&self, set: CandidateSet) -> Vec<&str> {
        set.iter().map(|c| self.candidate_names[c].as_str()).collect()
    }

    pub fn position(&self, voter: usize, c: usize) -> Result<i64> {
        let ballot = self
            .ballots
            .get(voter)
            .ok_or_else(|| Error::Range(format!("voter {voter} >= n = {}", self.num_voters())))?;
        ballot.position(c)
    }

    /// Sum of positions of `c` over all ballots.
    pub fn positional_score(&self, c: usize) -> Result<i64> {
        self.ballots.iter().map(|b| b.position(c)).sum()
    }

    pub fn is_decisive(&self) -> bool {
        self.ballots.iter().all(TrichotomousBallot::is_decisive)
    }

    /// Keeps each voter's approval set, merging indifference into disapproval.
    pub fn project_approvals(&self) -> DichotomousProfile {
        DichotomousProfile {
            m: self.num_candidates(),
            approval_sets: self.ballots.iter().map(|b| b.approve()).collect(),
        }
    }
}

/// Approval-only profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomousProfile {
    pub m: usize,
    pub approval_sets: Vec<CandidateSet>,
}

impl DichotomousProfile {
    pub fn num_voters(&self) -> usize {
        self.approval_sets.len()
    }

    /// Reads every non-approved candidate as disapproved.
    pub fn to_decisive_ballots(&self) -> Vec<TrichotomousBallot> {
        self.approval_sets
            .iter()
            .map(|&a| {
                TrichotomousBallot::new(self.m, a, a.complement(self.m))
                    .expect("approval set is within the candidate range")
            })
            .collect()
    }
}

/// A selected set of exactly `k` candidates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Committee {
    members: CandidateSet,
}

impl Committee {
    /// Wraps `members`, checking the size against the instance.
    pub fn new(instance: &ElectionInstance, members: CandidateSet) -> Result<Self> {
        check_committee(instance, members)?;
        Ok(Committee { members })
    }

    pub(crate) fn unchecked(members: CandidateSet) -> Self {
        Committee { members }
    }

    pub fn members(&self) -> CandidateSet {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl fmt::Debug for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Committee{:?}", self.members)
    }
}

/// Checks that `w` is a size-`k` subset of the instance's candidates.
pub fn check_committee(instance: &ElectionInstance, w: CandidateSet) -> Result<()> {
    if !w.is_subset(instance.candidates()) {
        return Err(Error::Range(format!(
            "committee {:?} contains unknown candidates",
            w
        )));
    }
    if w.len() != instance.committee_size() {
        return Err(Error::Size {
            expected: instance.committee_size(),
            got: w.len(),
        });
    }
    Ok(())
}

/// `group_size ≥ l·n/k`, compared as `group_size·k ≥ l·n`.
pub fn meets_quota(group_size: usize, l: usize, n: usize, k: usize) -> bool {
    (group_size as u128) * (k as u128) >= (l as u128) * (n as u128)
}

/// Largest `l ≤ k` for which a group of `group_size` voters meets the quota.
pub fn max_level(group_size: usize, n: usize, k: usize) -> usize {
    if n == 0 {
        return k;
    }
    ((group_size as u128 * k as u128) / n as u128).min(k as u128) as usize
}
