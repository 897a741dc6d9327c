//! The 3-coloring construction for 3-SAT and how its domination number
//! relates to 3-colorings.
//!
//! ```text
//! cargo run --release --example sat_gadgets
//! ```

use upcolor::exact::{self, Limits};
use upcolor::io;
use upcolor::reductions::{self, ThreeSatInstance};

fn main() -> upcolor::Result<()> {
    let lim = Limits::default().with_search(64);
    for text in [
        "p cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n",
        "p cnf 1 2\n1 0\n-1 0\n",
        "p cnf 2 2\n1 2 0\n1 2 0\n",
    ] {
        let (vars, clauses) = io::parse_dimacs_cnf(text)?;
        let inst = ThreeSatInstance::new(vars, clauses)?;
        let out = reductions::reduce_3sat_chromatic(&inst)?;
        let g = &out.graph;
        let (r, s) = (inst.vars, inst.clauses.len());
        println!("{:?}", inst.clauses);
        println!(
            "  satisfiable     {}",
            reductions::solve_3sat(&inst)?.is_some()
        );
        println!(
            "  3-colorable     {}",
            reductions::three_coloring(g).is_some()
        );
        if reductions::three_coloring(g).is_none() {
            continue;
        }
        println!(
            "  gamma           {}  (2s+1 = {}, 2r+s+1 = {})",
            exact::domination_number(g, &lim)?,
            2 * s + 1,
            2 * r + s + 1
        );
        match reductions::equal_domination_three_coloring(g, &lim)? {
            Some((c, d)) => println!(
                "  3-coloring with gamma_uc = gamma: {:?}, set {:?}",
                c.colors(),
                d.to_vec()
            ),
            None => println!("  no 3-coloring reaches gamma"),
        }
    }
    Ok(())
}
