//! Independent reference implementations for the integration tests.
//!
//! Everything here works from plain `BTreeSet`s and reads axiom definitions
//! straight off the quantifiers, without the library's bitsets, pruning or
//! shared helpers.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use trivote::{validate_instance, CandidateSet, ElectionInstance, RawBallot};

pub type Set = BTreeSet<usize>;

#[derive(Clone, Debug)]
pub struct Naive {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub plus: Vec<Set>,
    pub minus: Vec<Set>,
}

impl Naive {
    pub fn from_instance(inst: &ElectionInstance) -> Self {
        Naive {
            n: inst.num_voters(),
            m: inst.num_candidates(),
            k: inst.committee_size(),
            plus: inst.ballots().iter().map(|b| b.approve().iter().collect()).collect(),
            minus: inst.ballots().iter().map(|b| b.disapprove().iter().collect()).collect(),
        }
    }

    pub fn zero(&self, i: usize) -> Set {
        (0..self.m)
            .filter(|c| !self.plus[i].contains(c) && !self.minus[i].contains(c))
            .collect()
    }

    fn union(&self, group: &[usize], f: impl Fn(usize) -> Set) -> Set {
        group.iter().flat_map(|&i| f(i)).collect()
    }

    fn inter(&self, group: &[usize], f: impl Fn(usize) -> Set) -> Set {
        let mut it = group.iter().map(|&i| f(i));
        let first = it.next().unwrap_or_default();
        it.fold(first, |acc, s| acc.intersection(&s).copied().collect())
    }

    /// Does `group` witness a violation of `axiom` at `level`?
    pub fn violates(&self, axiom: &str, group: &[usize], level: usize, w: &Set) -> bool {
        if group.len() * self.k < level * self.n {
            return false;
        }
        let u_plus = self.union(group, |i| self.plus[i].clone());
        let u_minus = self.union(group, |i| self.minus[i].clone());
        let u_zero = self.union(group, |i| self.zero(i));
        let i_plus = self.inter(group, |i| self.plus[i].clone());
        let i_zero = self.inter(group, |i| self.zero(i));
        let i_minus = self.inter(group, |i| self.minus[i].clone());
        let liberal: Set = u_plus.difference(&u_minus).copied().collect();
        let seated = |s: &Set| s.intersection(w).count();
        let (cohesion, represented): (Set, Set) = match axiom {
            "jr" => (u_plus.clone(), u_plus.clone()),
            "pjr" | "wncr" => (i_plus.clone(), u_plus.clone()),
            "ncr" => (i_plus.clone(), i_plus.clone()),
            "spr" | "wtjr" | "wtpjr" => (liberal, u_plus.clone()),
            "war" => (liberal, u_plus.union(&i_zero).copied().collect()),
            "wa" => (liberal, u_plus.union(&u_zero).copied().collect()),
            other => panic!("unknown axiom {other}"),
        };
        if cohesion.len() < level {
            return false;
        }
        let under = seated(&represented) < level;
        if axiom == "spr" {
            under || seated(&i_minus) > 0
        } else {
            under
        }
    }

    pub fn max_level(&self, axiom: &str) -> usize {
        match axiom {
            "jr" | "spr" | "wtjr" => 1,
            _ => self.k,
        }
    }

    /// Satisfied iff no voter subset violates the axiom at any level.
    pub fn satisfies(&self, axiom: &str, w: &Set) -> bool {
        assert!(self.n <= 16, "naive oracle is exponential in n");
        for mask in 1u32..(1 << self.n) {
            let group: Vec<usize> = (0..self.n).filter(|i| mask >> i & 1 == 1).collect();
            for level in 1..=self.max_level(axiom) {
                if self.violates(axiom, &group, level, w) {
                    return false;
                }
            }
        }
        true
    }

    pub fn committees(&self) -> Vec<Set> {
        let mut out = Vec::new();
        for mask in 0u64..(1 << self.m) {
            if mask.count_ones() as usize == self.k {
                out.push((0..self.m).filter(|c| mask >> c & 1 == 1).collect());
            }
        }
        out
    }

    pub fn positional_score(&self, c: usize) -> i64 {
        (0..self.n)
            .map(|i| i64::from(self.plus[i].contains(&c)) - i64::from(self.minus[i].contains(&c)))
            .sum()
    }

    fn harmonic(p: usize) -> Rational64 {
        (1..=p as i64).map(|j| Rational64::new(1, j)).sum()
    }

    pub fn tpav(&self, w: &Set) -> Rational64 {
        (0..self.n)
            .map(|i| {
                Self::harmonic(self.plus[i].intersection(w).count())
                    - Self::harmonic(self.minus[i].intersection(w).count())
            })
            .sum()
    }

    pub fn tcc(&self, w: &Set, alpha: i64) -> i64 {
        (0..self.n)
            .filter(|&i| {
                self.plus[i].intersection(w).count() as i64 - self.minus[i].intersection(w).count() as i64 >= alpha
            })
            .count() as i64
    }
}

pub fn to_set(c: CandidateSet) -> Set {
    c.iter().collect()
}

pub fn to_bits(s: &Set) -> CandidateSet {
    s.iter().copied().collect()
}

/// Each candidate approved, indifferent or disapproved with equal odds.
pub fn random_instance(rng: &mut ChaCha8Rng, n: (usize, usize), m: (usize, usize)) -> ElectionInstance {
    let n = rng.gen_range(n.0..=n.1);
    let m = rng.gen_range(m.0..=m.1);
    let k = rng.gen_range(1..=m);
    let raw: Vec<RawBallot> = (0..n)
        .map(|_| {
            let mut ballot = RawBallot::default();
            for c in 0..m {
                match rng.gen_range(0..3) {
                    0 => ballot.approve.push(c),
                    2 => ballot.disapprove.push(c),
                    _ => {}
                }
            }
            ballot
        })
        .collect();
    validate_instance(&raw, m, k).expect("valid random instance")
}

/// Every indifferent entry resolved to disapproval.
pub fn random_decisive_instance(rng: &mut ChaCha8Rng, n: (usize, usize), m: (usize, usize)) -> ElectionInstance {
    let inst = random_instance(rng, n, m);
    let m = inst.num_candidates();
    let raw: Vec<RawBallot> = inst
        .ballots()
        .iter()
        .map(|b| RawBallot {
            approve: b.approve().to_vec(),
            disapprove: b.approve().complement(m).to_vec(),
        })
        .collect();
    validate_instance(&raw, m, inst.committee_size()).unwrap()
}

pub fn random_committee(rng: &mut ChaCha8Rng, inst: &ElectionInstance) -> CandidateSet {
    let mut all: Vec<usize> = (0..inst.num_candidates()).collect();
    all.shuffle(rng);
    all.into_iter().take(inst.committee_size()).collect()
}

pub const AXIOMS: [&str; 9] = ["jr", "pjr", "spr", "wtjr", "wtpjr", "war", "wa", "ncr", "wncr"];
