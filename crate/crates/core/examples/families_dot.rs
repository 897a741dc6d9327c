//! Named families, the hairy color floor and Graphviz output.
//!
//! ```text
//! cargo run --example families_dot > k33.dot && dot -Tsvg k33.dot > k33.svg
//! ```

use upcolor::exact::{self, Limits};
use upcolor::families::{self, FamilySpec};
use upcolor::{io, orient, Coloring};

fn main() -> upcolor::Result<()> {
    let lim = Limits::default();
    for spec in ["hairy:3:complete:2", "cone:cycle:4", "flower:2"] {
        let f = families::generate(&spec.parse()?)?;
        eprintln!(
            "{spec}: {} vertices, {} edges",
            f.graph.n(),
            f.graph.edge_count()
        );
    }
    let floor = families::hairy_color_floor(&FamilySpec::Complete(2), 3, &lim)?;
    eprintln!(
        "hairy K2 with 3 hairs: Omega_uc {}, {} optimal colorings, fewest colors {}",
        floor.omega_uc, floor.optimal_colorings, floor.floor
    );

    // K_{3,3} two-colored, weight-optimal set marked.
    let k33 = families::generate(&FamilySpec::CompleteBipartite(3, 3))?.graph;
    let c = Coloring::new(vec![1, 1, 1, 0, 0, 0]);
    let r = exact::omega_uc_exact(&orient(&k33, &c)?, &lim)?;
    print!("{}", io::emit_dot(&k33, Some(&c), Some(&r.witness)));
    Ok(())
}
