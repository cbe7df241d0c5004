//! The group strategy on a small host, with every accepted step and its
//! depth profile.

use frobrw::cospan::Cospan;
use frobrw::semantics::FiniteModel;
use frobrw::strategies::group::{depth_profile, group_reduce_with, group_signature, GroupPack};
use frobrw::term::{interp, parse};

fn main() -> frobrw::error::Result<()> {
    let sig = group_signature();
    let pack = GroupPack::new(&sig)?;
    let src = "(u + id[1]) ; m ; frob.comult ; (id[1] + i) ; m ; frob.comult ; (i + i)";
    let (host, n) = interp(&sig, &parse(src, &sig)?)?.fold();
    println!("host: {} edges, profile {:?}", host.graph.edge_count(), depth_profile(&host)?);
    let run = group_reduce_with(&pack, &host, 100, &mut |st, _| {
        println!(
            "  {:?} {:<10} {:?} -> {:?}",
            st.phase, st.record.rule, st.before, st.after
        );
        Ok(())
    })?;
    println!(
        "{} step(s), {} rejected candidate(s), fixpoint {}, {} edges left",
        run.steps.len(),
        run.rejected.len(),
        run.fixpoint,
        run.result.graph.edge_count()
    );
    let z3 = FiniteModel::cyclic_group(&sig, 3)?;
    let same = z3.eval_cospan(&sig, &Cospan::unfold(&host, n))? == z3.eval_cospan(&sig, &Cospan::unfold(&run.result, n))?;
    println!("Z3 relation preserved: {same}");
    Ok(())
}
