//! A second Frobenius structure on the same wire. Moving it to its own colour
//! brings colour changers, which Υ-normalization contracts; without the rule
//! transform this can erase a redex.

use frobrw::cospan::interfaced_iso;
use frobrw::multifrob::{multifrob_rewrite, transform_rule, upsilon_normalize_with, BaseRule, PolySignature, UpsilonOrder};
use frobrw::random::{random_two_colour_graph, rng};
use frobrw::signature::Signature;
use frobrw::term::parse;

fn main() -> frobrw::error::Result<()> {
    let base = Signature::parse("o : 0 -> 1\nfamily r : rmu reta rdelta reps\n")?;
    let ps = PolySignature::new(&base)?;
    let l = parse("o ; rdelta ; (reps + reps)", &ps.base)?;
    let rules = vec![BaseRule { name: "alpha".into(), lhs: l.clone(), rhs: parse("id[0]", &ps.base)? }];

    let chromed = ps.chrome_rule("alpha", &rules[0].lhs, &rules[0].rhs)?;
    let (t, reports) = transform_rule(&chromed, ps.base_colours())?;
    println!("chromed lhs: {} edges; transformed lhs: {} edges", chromed.lhs.graph.edge_count(), t.lhs.graph.edge_count());
    println!("leg reports: {reports:?}");

    for transform in [false, true] {
        let run = multifrob_rewrite(&ps, &rules, &l, 10, transform)?;
        println!(
            "transform={transform}: start {} nodes/{} edges, {} step(s), result {} nodes/{} edges",
            run.start.graph.node_count(),
            run.start.graph.edge_count(),
            run.log.len(),
            run.result.graph.node_count(),
            run.result.graph.edge_count()
        );
    }

    // normal forms do not depend on the contraction order
    let orders = [UpsilonOrder::First, UpsilonOrder::Last, UpsilonOrder::Middle, UpsilonOrder::Alternate, UpsilonOrder::Random(7)];
    let mut agree = 0;
    for seed in 0..50 {
        let g = random_two_colour_graph(&mut rng(seed), 8);
        let nfs: Vec<_> = orders.iter().map(|o| upsilon_normalize_with(&g, *o).0).collect();
        agree += nfs.iter().all(|n| interfaced_iso(n, &nfs[0])) as usize;
    }
    println!("{agree}/50 random graphs: all five orders agree");
    Ok(())
}
