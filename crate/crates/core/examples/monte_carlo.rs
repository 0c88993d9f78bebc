//! A seeded satisfaction experiment.
//!
//! ```sh
//! cargo run --release --example monte_carlo -- 2000 2024 table.csv
//! ```
//!
//! Arguments: number of profiles, seed, optional CSV output path.

use std::path::Path;

use trivote::sampling::{run_experiment, write_atomic, ExperimentConfig};

fn main() -> trivote::Result<()> {
    let mut args = std::env::args().skip(1);
    let profiles = args.next().map_or(300, |s| s.parse().expect("profile count"));
    let seed = args.next().map_or(2024, |s| s.parse().expect("seed"));
    let mut config = ExperimentConfig::desk_scale(seed);
    config.num_profiles = profiles;
    let table = run_experiment(&config)?;
    print!("{}", table.summary());
    if let Some(path) = args.next() {
        write_atomic(Path::new(&path), table.to_csv()?.as_bytes())?;
        println!("wrote {path}");
    }
    Ok(())
}
