//! The minimum-cover construction: a cover of size t exists exactly when
//! the built colored graph has up-color domination number at most t + 1.
//!
//! ```text
//! cargo run --example min_cover
//! ```

use upcolor::exact::{self, Limits};
use upcolor::reductions::{self, MinCoverInstance};
use upcolor::{io, orient};

fn main() -> upcolor::Result<()> {
    let inst = io::parse_min_cover("u 5\ns 0 1 2\ns 2 3\ns 3 4\ns 0 4\ns 1 3\n")?;
    show(&inst)?;
    // Element 2 in no subset: its copies are isolated and all forced in.
    show(&MinCoverInstance::new(3, vec![vec![0], vec![1]], 2)?)?;
    Ok(())
}

fn show(inst: &MinCoverInstance) -> upcolor::Result<()> {
    let out = reductions::reduce_min_cover(inst, false)?;
    let cg = orient(
        &out.graph,
        out.coloring.as_ref().expect("coloring is fixed"),
    )?;
    let r = exact::gamma_uc_exact(&cg, &Limits::default().with_search(64))?;
    let cover = reductions::solve_min_cover(inst)?;
    println!(
        "{} elements, {} subsets -> {} vertices",
        inst.universe,
        inst.subsets.len(),
        out.graph.n()
    );
    println!("  smallest cover {cover:?}");
    println!("  gamma_uc {} with {:?}", r.size, r.witness.to_vec());
    Ok(())
}
