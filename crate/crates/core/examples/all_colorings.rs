//! Parameters that range over every coloring: Omega_uc, Gamma_uc and
//! chi_uc, for a few small families.
//!
//! ```text
//! cargo run --release --example all_colorings
//! ```

use upcolor::exact::{self, Limits};
use upcolor::families::{self, FamilySpec};

fn main() -> upcolor::Result<()> {
    let lim = Limits::default();
    println!(
        "{:<16}{:>4}{:>4}{:>10}{:>10}{:>8}",
        "graph", "n", "chi", "Omega_uc", "Gamma_uc", "chi_uc"
    );
    for spec in [
        "path:6",
        "path:7",
        "cycle:5",
        "cycle:6",
        "bipartite:3,3",
        "complete:5",
        "star:4",
        "flower:2",
    ] {
        let spec: FamilySpec = spec.parse()?;
        let g = families::generate(&spec)?.graph;
        let omega = exact::omega_uc_min(&g, &lim)?;
        let gamma = exact::gamma_uc_min(&g, &lim)?;
        let chi = exact::chi_uc_exact(&g, &lim)?;
        println!(
            "{:<16}{:>4}{:>4}{:>10}{:>10}{:>8}",
            spec.to_string(),
            g.n(),
            chi.chi,
            omega.value,
            gamma.value,
            chi.value
        );
    }

    let c6 = families::generate(&FamilySpec::Cycle(6))?.graph;
    let best = exact::omega_uc_min(&c6, &lim)?;
    println!(
        "\nC6 weight-optimal coloring {:?}, set {:?}",
        best.best_coloring.colors(),
        best.witness.witness.to_vec()
    );
    Ok(())
}
