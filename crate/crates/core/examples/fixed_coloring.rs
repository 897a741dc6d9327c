//! Up-color domination for one fixed coloring, on the two 2-colorings of
//! K_{2,3}.
//!
//! ```text
//! cargo run --example fixed_coloring
//! ```

use upcolor::exact::{self, Limits};
use upcolor::{orient, Coloring, Graph};

fn main() -> upcolor::Result<()> {
    let k23 = Graph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])?;
    let lim = Limits::default();

    for colors in [vec![0, 0, 1, 1, 1], vec![1, 1, 0, 0, 0]] {
        let cg = orient(&k23, &Coloring::new(colors.clone()))?;
        let gamma = exact::gamma_uc_exact(&cg, &lim)?;
        let omega = exact::omega_uc_exact(&cg, &lim)?;
        println!("coloring {colors:?}");
        println!("  local maxima   {:?}", cg.local_maxima().to_vec());
        println!(
            "  gamma_uc       {} with {:?}",
            gamma.size,
            gamma.witness.to_vec()
        );
        println!(
            "  omega_uc       {} with {:?}",
            omega.weight,
            omega.witness.to_vec()
        );
    }
    println!("gamma(K23) = {}", exact::domination_number(&k23, &lim)?);

    // An isolated vertex of color 0 can never be covered.
    let lonely = orient(&Graph::new(1, &[])?, &Coloring::new(vec![0]))?;
    println!(
        "K1 colored 0 feasible: {}",
        exact::gamma_uc_exact(&lonely, &lim)?.feasible
    );
    Ok(())
}
