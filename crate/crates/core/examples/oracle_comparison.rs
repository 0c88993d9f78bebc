//! Times the specialized checkers against exhaustive group enumeration on
//! random profiles and confirms they agree.

use std::time::{Duration, Instant};

use trivote::axioms::{brute_force_check, check, AxiomId};
use trivote::sampling::{sample_profile, ExperimentConfig};

fn main() -> trivote::Result<()> {
    let config = ExperimentConfig::desk_scale(11);
    let mut fast = Duration::ZERO;
    let mut slow = Duration::ZERO;
    let mut checks = 0;
    for i in 0..200 {
        let (instance, _, _) = sample_profile(&config, i);
        let w = (0..instance.committee_size()).collect();
        for axiom in AxiomId::ALL {
            let t = Instant::now();
            let a = check(&instance, w, axiom)?;
            fast += t.elapsed();
            let t = Instant::now();
            let b = brute_force_check(&instance, w, axiom)?;
            slow += t.elapsed();
            assert_eq!(a.satisfied, b.satisfied, "{axiom} disagrees on profile {i}");
            checks += 1;
        }
    }
    println!("{checks} checks agree");
    println!("specialized: {fast:?}  exhaustive: {slow:?}");
    Ok(())
}
