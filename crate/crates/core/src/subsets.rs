//! Enumeration helpers: fixed-size subsets in lexicographic order, binomial
//! counts, and a growable bitset over voter indices.

use crate::model::CandidateSet;

/// All `r`-subsets of `pool`, in lexicographic order of their sorted members.
#[derive(Clone, Debug)]
pub struct Combinations {
    pool: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(pool: CandidateSet, r: usize) -> Self {
        let pool = pool.to_vec();
        let done = r > pool.len();
        Combinations {
            idx: (0..r).collect(),
            pool,
            done,
        }
    }
}

impl Iterator for Combinations {
    type Item = CandidateSet;

    fn next(&mut self) -> Option<CandidateSet> {
        if self.done {
            return None;
        }
        let current = self.idx.iter().map(|&i| self.pool[i]).collect();
        let n = self.pool.len();
        let r = self.idx.len();
        // advance to the next index tuple
        match (0..r).rev().find(|&i| self.idx[i] != i + n - r) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..r {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(current)
    }
}

pub fn combinations(pool: CandidateSet, r: usize) -> Combinations {
    Combinations::new(pool, r)
}

/// `n choose r`, saturating at `u128::MAX`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Lexicographic comparison of the sorted member lists of two sets.
pub fn lex_cmp(a: CandidateSet, b: CandidateSet) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}

/// A set of voter indices of arbitrary size.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VoterSet {
    words: Vec<u64>,
}

impl VoterSet {
    pub fn empty(n: usize) -> Self {
        VoterSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = VoterSet::empty(n);
        for i in 0..n {
            set.insert(i);
        }
        set
    }

    pub fn from_predicate(n: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        let mut set = VoterSet::empty(n);
        for i in (0..n).filter(|&i| pred(i)) {
            set.insert(i);
        }
        set
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn and(&self, other: &VoterSet) -> VoterSet {
        VoterSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn and_not(&self, other: &VoterSet) -> VoterSet {
        VoterSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn intersects(&self, other: &VoterSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VoterSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            CandidateSet::from_bits(word).iter().map(move |b| wi * 64 + b)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}
