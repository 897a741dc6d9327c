//! Balanced max-E2-SAT construction: witness weights per assignment and the
//! structural audit.
//!
//! ```text
//! cargo run --example e2sat_weight
//! ```

use upcolor::orient;
use upcolor::reductions::{self, BalancedE2SatInstance};

fn main() -> upcolor::Result<()> {
    let inst = BalancedE2SatInstance::new(4, vec![[-1, 3], [1, -2], [2, 4], [-3, -4]], 4)?;
    let out = reductions::reduce_balanced_e2sat(&inst)?;
    let (r, s) = (inst.vars as u64, inst.clauses.len() as u64);
    println!("{} vertices, bound k = {}", out.graph.n(), inst.k());

    let (q, best) = reductions::solve_max_e2sat(&inst)?;
    println!("max satisfied clauses {q} with {best:?}");
    for a in [best.clone(), vec![false; inst.vars], vec![true; inst.vars]] {
        let w = reductions::build_weight_witness(&out, &a)?;
        let ok = orient(&out.graph, &w.coloring)?.is_up_color_dominating(&w.dominating_set);
        println!(
            "{a:?}: satisfied {}, weight {} = {} + 2*{}, valid {ok}",
            inst.satisfied_count(&a),
            w.weight,
            6 * r * s + 3 * s,
            w.unsatisfied
        );
    }

    let report = reductions::audit_reduction_structure(&out);
    for check in &report.checks {
        println!(
            "  {:<28} expected {:>4} got {:>4}",
            check.name, check.expected, check.actual
        );
    }
    Ok(())
}
