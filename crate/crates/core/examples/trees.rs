//! Linear-time routines on a seeded random tree, checked against the
//! exponential solvers.
//!
//! ```text
//! cargo run --release --example trees -- 5000
//! ```

use std::time::Instant;

use upcolor::exact::{self, Limits};
use upcolor::tree::{self, DpReading};
use upcolor::{io, orient};

fn main() -> upcolor::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2000);

    let (g, c) = io::random_tree(12, 4, 7);
    let cg = orient(&g, &c)?;
    let analysis = tree::analyze_directed_tree(&cg)?;
    println!("colors      {:?}", c.colors());
    println!("sources     {:?}", analysis.sources);
    println!("confluences {:?}", analysis.confluences);
    println!("precedence  {:?}", tree::precedence_order(&analysis).order);

    let (gamma, stats) = tree::tree_gamma_uc_with_stats(&cg)?;
    println!(
        "gamma_uc {} {:?}  (search says {})",
        gamma.size,
        gamma.witness.to_vec(),
        exact::gamma_uc_exact(&cg, &Limits::default())?.size
    );
    println!(
        "rules fired: a {} b {} c {}",
        stats.rule_a, stats.rule_b, stats.rule_c
    );
    let omega = tree::tree_omega_uc(&cg)?;
    let records = tree::tree_omega_uc_records(&cg, DpReading::ChildOp)?;
    println!(
        "omega_uc {} {:?}  (record sweep {})",
        omega.weight,
        omega.witness.to_vec(),
        records.weight
    );

    let (g, c) = io::random_tree(n, 4, 1);
    let cg = orient(&g, &c)?;
    let t = Instant::now();
    let gamma = tree::tree_gamma_uc(&cg)?;
    let t_gamma = t.elapsed();
    let t = Instant::now();
    let omega = tree::tree_omega_uc(&cg)?;
    println!(
        "n = {n}: gamma_uc {} in {t_gamma:?}, omega_uc {} in {:?}",
        gamma.size,
        omega.weight,
        t.elapsed()
    );
    Ok(())
}
