//! Inequality audit on random connected graphs, plus the cone equality.
//!
//! ```text
//! cargo run --release --example bound_audit -- 50
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use upcolor::exact::Limits;
use upcolor::families::{self, FamilySpec};
use upcolor::{exact, io, orient};

fn main() -> upcolor::Result<()> {
    let count: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let lim = Limits::default();
    let mut violations = 0;
    for seed in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(5..=8);
        let g = io::random_connected_graph(n, 0.4, seed)?;
        let c = io::random_coloring(&g, n as u32, &mut rng);
        let report = families::audit_bounds(&orient(&g, &c)?, &lim)?;
        violations += report.violations().count();
        if seed == 0 {
            for check in &report.checks {
                println!(
                    "{:<24} {:>4} <= {:<4} {}",
                    check.name, check.left, check.right, check.statement
                );
            }
        }
    }
    println!("{count} graphs, {violations} violations");

    let cone = families::generate(&FamilySpec::Cone(Box::new(FamilySpec::Cycle(5))))?.graph;
    let (chi, _) = exact::chromatic_number(&cone, &lim)?;
    println!(
        "cone over C5: chi {chi}, Omega_uc {}",
        exact::omega_uc_min(&cone, &lim)?.value
    );
    Ok(())
}
