use proptest::prelude::*;

use super::*;
use crate::golden;
use crate::model::{RawBallot, TrichotomousBallot, validate_instance};

/// `"+ab-cd"`: approve a, b; disapprove c, d; everything else indifferent.
fn ballot(text: &str) -> RawBallot {
    let mut raw = RawBallot::default();
    let mut target = None;
    for ch in text.chars() {
        match ch {
            '+' => target = Some(true),
            '-' => target = Some(false),
            c if c.is_ascii_lowercase() => {
                let idx = (c as u8 - b'a') as usize;
                match target {
                    Some(true) => raw.approve.push(idx),
                    Some(false) => raw.disapprove.push(idx),
                    None => panic!("class marker expected before {c}"),
                }
            }
            _ => {}
        }
    }
    raw
}

fn instance(m: usize, k: usize, ballots: &[&str]) -> ElectionInstance {
    let raw: Vec<RawBallot> = ballots.iter().map(|s| ballot(s)).collect();
    validate_instance(&raw, m, k).unwrap()
}

fn set(names: &str) -> CandidateSet {
    names.chars().map(|c| (c as u8 - b'a') as usize).collect()
}

fn dic(m: usize, sets: &[&str]) -> DichotomousProfile {
    DichotomousProfile {
        m,
        approval_sets: sets.iter().map(|s| set(s)).collect(),
    }
}

fn assert_same(inst: &ElectionInstance, w: CandidateSet, axiom: AxiomId) -> AxiomReport {
    let fast = check(inst, w, axiom).unwrap();
    let slow = brute_force_check(inst, w, axiom).unwrap();
    assert_eq!(fast.satisfied, slow.satisfied, "{axiom} on {inst:?} with {w:?}");
    for report in [&fast, &slow] {
        if let Some(wit) = &report.witness {
            assert!(verify_witness(inst, w, axiom, wit), "{axiom}: bad witness {wit:?}");
        }
    }
    fast
}

#[test]
fn jr_examples() {
    let profile = dic(4, &["a", "a", "b", "b"]);
    assert!(check_jr(&profile, 2, set("ab")).unwrap().satisfied);
    let report = check_jr(&profile, 2, set("cd")).unwrap();
    assert!(!report.satisfied);
    let wit = report.witness.unwrap();
    assert_eq!(wit.voters, vec![0, 1, 2, 3]);
    assert_eq!(wit.level, 1);

    let abstain = dic(3, &["", "", ""]);
    assert!(check_jr(&abstain, 1, set("a")).unwrap().satisfied);
    assert!(matches!(check_jr(&profile, 2, set("a")), Err(Error::Size { .. })));
}

#[test]
fn pjr_examples() {
    let profile = dic(3, &["ab", "ab", "ab", "ab"]);
    assert!(check_pjr(&profile, 2, set("ab")).unwrap().satisfied);
    let report = check_pjr(&profile, 2, set("ac")).unwrap();
    let wit = report.witness.unwrap();
    assert_eq!(wit.level, 2);
    assert_eq!(wit.voters, vec![0, 1, 2, 3]);
    assert_eq!(wit.cohesion_set, set("ab"));
    assert_eq!(wit.representation_found, 1);
}

#[test]
fn spr_examples() {
    let e1 = golden::four_voter();
    assert!(assert_same(&e1, set("ab"), AxiomId::Spr).satisfied);

    let e2 = golden::unanimous_split();
    let report = assert_same(&e2, set("ab"), AxiomId::Spr);
    assert!(!report.satisfied);
    let wit = report.witness.unwrap();
    assert_eq!(wit.seated_disapproved, set("b"));

    let single = instance(1, 1, &["+a"]);
    assert!(assert_same(&single, set("a"), AxiomId::Spr).satisfied);
}

#[test]
fn wtpjr_and_wtjr_examples() {
    let e1 = golden::four_voter();
    assert!(assert_same(&e1, set("ab"), AxiomId::Wtpjr).satisfied);
    assert!(assert_same(&e1, set("ab"), AxiomId::Wtjr).satisfied);

    let r3 = golden::polarized();
    for w in combinations(r3.candidates(), 2) {
        for axiom in [AxiomId::Wtpjr, AxiomId::Wtjr] {
            let report = assert_same(&r3, w, axiom);
            let wit = report.witness.expect("violated");
            assert_eq!(wit.level, 1);
            assert!(wit.voters.contains(&0) || wit.voters.contains(&1) || wit.voters.len() == 3);
        }
    }

    let blank = ElectionInstance::from_ballots(vec![TrichotomousBallot::indifferent_to_all(3); 5], 2).unwrap();
    assert!(assert_same(&blank, set("ab"), AxiomId::Wtpjr).satisfied);
    assert!(assert_same(&blank, set("ab"), AxiomId::Wtjr).satisfied);
}

#[test]
fn polarized_profile_oracle_witness() {
    let r3 = golden::polarized();
    let report = brute_force_check(&r3, set("ab"), AxiomId::Wtjr).unwrap();
    let wit = report.witness.unwrap();
    // first group in encoding order: voters 1, 2 and the c-voter
    assert_eq!(wit.voters, vec![0, 1, 4]);
    assert_eq!(wit.level, 1);
    assert_eq!(wit.cohesion_set, set("c"));
}

#[test]
fn war_and_wa_examples() {
    let r3 = golden::polarized();
    for w in combinations(r3.candidates(), 2) {
        assert!(!assert_same(&r3, w, AxiomId::War).satisfied);
        assert!(assert_same(&r3, w, AxiomId::Wa).satisfied);
    }
    let e1 = golden::four_voter();
    assert!(assert_same(&e1, set("ab"), AxiomId::War).satisfied);
    assert!(assert_same(&e1, set("ab"), AxiomId::Wa).satisfied);
    let blank = ElectionInstance::from_ballots(vec![TrichotomousBallot::indifferent_to_all(3); 5], 2).unwrap();
    assert!(assert_same(&blank, set("bc"), AxiomId::War).satisfied);
    assert!(assert_same(&blank, set("bc"), AxiomId::Wa).satisfied);
}

#[test]
fn ncr_and_wncr_examples() {
    let inst = instance(3, 2, &["+ab", "+ab", "+ab", "+ab"]);
    assert!(assert_same(&inst, set("ab"), AxiomId::Ncr).satisfied);
    let report = assert_same(&inst, set("ac"), AxiomId::Ncr);
    let wit = report.witness.unwrap();
    assert_eq!(wit.level, 2);
    assert_eq!(wit.voters, vec![0, 1, 2, 3]);
    assert_eq!(wit.cohesion_set, set("ab"));
    let report = assert_same(&inst, set("ac"), AxiomId::Wncr);
    assert_eq!(report.witness.unwrap().level, 2);
}

#[test]
fn single_voter_satisfies_everything() {
    let inst = instance(1, 1, &["+a"]);
    for axiom in AxiomId::ALL {
        assert!(assert_same(&inst, set("a"), axiom).satisfied, "{axiom}");
    }
}

#[test]
fn size_errors() {
    let e1 = golden::four_voter();
    for axiom in AxiomId::ALL {
        assert!(matches!(check(&e1, set("abc"), axiom), Err(Error::Size { .. })));
        assert!(matches!(brute_force_check(&e1, set("a"), axiom), Err(Error::Size { .. })));
    }
}

#[test]
fn oracle_budget() {
    let big = ElectionInstance::from_ballots(vec![TrichotomousBallot::indifferent_to_all(2); 21], 1).unwrap();
    assert!(matches!(
        brute_force_check(&big, set("a"), AxiomId::Wa),
        Err(Error::Budget(_))
    ));
    assert!(brute_force_check_with_bound(&big, set("a"), AxiomId::Wa, 21).is_ok());
}

#[test]
fn existence_search() {
    assert_eq!(exists_committee(&golden::unanimous_split(), AxiomId::Spr).unwrap(), None);
    let r3 = golden::polarized();
    assert_eq!(exists_committee(&r3, AxiomId::Wtjr).unwrap(), None);
    assert_eq!(exists_committee(&r3, AxiomId::War).unwrap(), None);
    let wa = exists_committee(&r3, AxiomId::Wa).unwrap().unwrap();
    assert_eq!(wa.members(), set("ab"));
    assert!(matches!(
        exists_committee_with_budget(&r3, AxiomId::Wa, 2),
        Err(Error::Budget(_))
    ));
}

#[test]
fn ncr_can_be_unsatisfiable() {
    // two overlapping blocks each entitled to two seats from their common
    // approvals, with only three seats available
    let inst = instance(4, 3, &["+abcd", "+abcd", "+ab", "+ab", "+cd", "+cd"]);
    assert_eq!(exists_committee(&inst, AxiomId::Ncr).unwrap(), None);
    for w in combinations(inst.candidates(), 3) {
        assert!(!brute_force_check(&inst, w, AxiomId::Ncr).unwrap().satisfied);
    }
}

#[test]
fn axiom_names_round_trip() {
    for a in AxiomId::ALL {
        assert_eq!(a.name().parse::<AxiomId>().unwrap(), a);
        assert_eq!(a.to_string().parse::<AxiomId>().unwrap(), a);
    }
    assert!("foo".parse::<AxiomId>().is_err());
}

fn arb_instance(max_n: usize, max_m: usize) -> impl Strategy<Value = ElectionInstance> {
    (1..=max_n, 1..=max_m)
        .prop_flat_map(|(n, m)| {
            (
                prop::collection::vec(prop::collection::vec(0u8..3, m), n),
                1..=m,
            )
        })
        .prop_map(|(rows, k)| {
            let ballots = rows
                .iter()
                .map(|row| {
                    let approve = row.iter().enumerate().filter(|(_, &x)| x == 0).map(|(c, _)| c).collect();
                    let disapprove = row.iter().enumerate().filter(|(_, &x)| x == 2).map(|(c, _)| c).collect();
                    TrichotomousBallot::new(row.len(), approve, disapprove).unwrap()
                })
                .collect();
            ElectionInstance::from_ballots(ballots, k).unwrap()
        })
}

fn arb_case(max_n: usize, max_m: usize) -> impl Strategy<Value = (ElectionInstance, CandidateSet)> {
    arb_instance(max_n, max_m).prop_flat_map(|inst| {
        let m = inst.num_candidates();
        let k = inst.committee_size();
        (Just(inst), Just(m), Just(k), any::<u64>())
    })
    .prop_map(|(inst, m, k, pick)| {
        let all: Vec<CandidateSet> = combinations(CandidateSet::full(m), k).collect();
        let w = all[(pick % all.len() as u64) as usize];
        (inst, w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn checkers_match_oracle((inst, w) in arb_case(9, 6)) {
        for axiom in AxiomId::ALL {
            assert_same(&inst, w, axiom);
        }
    }

    #[test]
    fn checkers_match_oracle_wide((inst, w) in arb_case(14, 10)) {
        for axiom in AxiomId::ALL {
            assert_same(&inst, w, axiom);
        }
    }

    #[test]
    fn implications_hold((inst, w) in arb_case(9, 6)) {
        let sat = |a| check(&inst, w, a).unwrap().satisfied;
        prop_assert!(!sat(AxiomId::Spr) || sat(AxiomId::Wtjr));
        prop_assert!(!sat(AxiomId::Wtpjr) || sat(AxiomId::Wtjr));
        prop_assert!(!sat(AxiomId::Wtpjr) || sat(AxiomId::Wncr));
        prop_assert!(!sat(AxiomId::Ncr) || sat(AxiomId::Wncr));
        prop_assert!(!sat(AxiomId::Wtpjr) || sat(AxiomId::War));
        prop_assert!(!sat(AxiomId::War) || sat(AxiomId::Wa));
    }

    #[test]
    fn wncr_is_pjr_on_approvals((inst, w) in arb_case(9, 6)) {
        let wncr = check(&inst, w, AxiomId::Wncr).unwrap().satisfied;
        let pjr = check_pjr(&inst.project_approvals(), inst.committee_size(), w).unwrap().satisfied;
        prop_assert_eq!(wncr, pjr);
    }

    #[test]
    fn decisive_collapse((inst, w) in arb_case(9, 6)) {
        let m = inst.num_candidates();
        let decisive_ballots = inst.ballots().iter().map(|b| {
            TrichotomousBallot::new(m, b.approve(), b.approve().complement(m)).unwrap()
        }).collect();
        let decisive = ElectionInstance::from_ballots(decisive_ballots, inst.committee_size()).unwrap();
        prop_assert!(decisive.is_decisive());
        let wtpjr = check(&decisive, w, AxiomId::Wtpjr).unwrap().satisfied;
        let pjr = check_pjr(&decisive.project_approvals(), decisive.committee_size(), w).unwrap().satisfied;
        prop_assert_eq!(wtpjr, pjr);
        prop_assert_eq!(check(&decisive, w, AxiomId::War).unwrap().satisfied, wtpjr);
        prop_assert_eq!(check(&decisive, w, AxiomId::Wa).unwrap().satisfied, wtpjr);
        // the projection of a decisive profile loses nothing
        let rebuilt = decisive.project_approvals().to_decisive_ballots();
        prop_assert_eq!(rebuilt.as_slice(), decisive.ballots());
    }
}
