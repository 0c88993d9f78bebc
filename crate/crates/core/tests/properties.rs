mod common;

use common::{random_committee, random_instance, to_set, Naive, AXIOMS};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trivote::axioms::{brute_force_check, check, check_pjr, exists_committee, AxiomId};
use trivote::profile::{parse_profile, serialize_profile};
use trivote::rules::{Rule, RuleConfig};

#[test]
fn checkers_agree_with_naive_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..400 {
        let inst = random_instance(&mut rng, (1, 9), (1, 7));
        let w = random_committee(&mut rng, &inst);
        let naive = Naive::from_instance(&inst);
        for name in AXIOMS {
            let axiom: AxiomId = name.parse().unwrap();
            let expected = naive.satisfies(name, &to_set(w));
            assert_eq!(check(&inst, w, axiom).unwrap().satisfied, expected, "{name} on {inst:?} with {w:?}");
            assert_eq!(brute_force_check(&inst, w, axiom).unwrap().satisfied, expected, "{name}");
        }
    }
}

#[test]
fn existence_agrees_with_naive_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..150 {
        let inst = random_instance(&mut rng, (1, 7), (1, 5));
        let naive = Naive::from_instance(&inst);
        for name in AXIOMS {
            let axiom: AxiomId = name.parse().unwrap();
            let want = naive.committees().into_iter().find(|w| naive.satisfies(name, w));
            let got = exists_committee(&inst, axiom).unwrap().map(|c| to_set(c.members()));
            assert_eq!(got, want, "{name}");
        }
    }
}

#[test]
fn rule_committees_match_naive_objectives() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let config = RuleConfig::default();
    for _ in 0..150 {
        let inst = random_instance(&mut rng, (1, 10), (1, 7));
        let naive = Naive::from_instance(&inst);
        let best_tpav = naive.committees().iter().map(|w| naive.tpav(w)).max().unwrap();
        let best_tcc = naive.committees().iter().map(|w| naive.tcc(w, 1)).max().unwrap();
        let tpav = Rule::ExactTpav.compute(&inst, &config).unwrap();
        assert_eq!(naive.tpav(&to_set(tpav.committee.members())), best_tpav);
        let tcc = Rule::ExactTcc.compute(&inst, &config).unwrap();
        assert_eq!(naive.tcc(&to_set(tcc.committee.members()), 1), best_tcc);
    }
}

#[test]
fn phragmen_gives_proportional_committees() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let inst = random_instance(&mut rng, (1, 14), (2, 10));
        let w = Rule::SeqPhragmen.compute(&inst, &RuleConfig::default()).unwrap().committee.members();
        assert!(check(&inst, w, AxiomId::Wncr).unwrap().satisfied);
        let projection = inst.project_approvals();
        assert!(check_pjr(&projection, inst.committee_size(), w).unwrap().satisfied);
    }
}

#[test]
fn random_profiles_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let inst = random_instance(&mut rng, (1, 12), (1, 12));
        let text = serialize_profile(&inst);
        let back = parse_profile(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(serialize_profile(&back), text);
    }
}
