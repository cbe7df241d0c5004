//! Eliminating an existential variable in a linear system over GF(2) by
//! reducing an interacting-bialgebra diagram.

use frobrw::semantics::{ib_subspace, readoff_span};
use frobrw::strategies::ib::{existential_example, ib_reduce, ib_reduce_swapped, readoff_system, IB};

fn main() -> frobrw::error::Result<()> {
    let (g, n) = existential_example();
    let s = ib_subspace(&g, IB)?;
    println!("host: {} nodes, {} edges; solutions {s}", g.graph.node_count(), g.graph.edge_count());

    let run = ib_reduce(&g, n, IB)?;
    println!("{} interior black node(s) eliminated", run.iterations);
    for e in &run.log {
        println!("  {:>2} {:<8} node {:?} partner {:?} +{} -{}", e.step, e.action, e.node, e.partner, e.added, e.removed);
    }
    println!("cospan form:");
    for eq in readoff_system(&run.result, n, IB)? {
        println!("  {eq}");
    }

    let swapped = ib_reduce_swapped(&g, n, IB)?;
    let span = readoff_span(&swapped.result, IB)?;
    println!("span form: {span}; agrees with the host: {}", span == s);
    Ok(())
}
