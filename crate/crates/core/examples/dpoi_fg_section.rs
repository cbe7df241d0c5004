//! Rewriting with interfaces on `(f ; g) + (f ; g)`: the rule `f ; g => id`
//! has two matches, while its reverse at a single node has several pushout
//! complements, one per admissible way of splitting the node.

use frobrw::cospan::interfaced_iso;
use frobrw::dpoi::{complements_enumerate, find_matches, rewrite_step, Match, Rule};
use frobrw::hypergraph::Homomorphism;
use frobrw::signature::Signature;
use frobrw::term::{interp, parse};

fn main() -> frobrw::error::Result<()> {
    let sig = Signature::parse("f : 1 -> 1\ng : 1 -> 1\n")?;
    let (host, _) = interp(&sig, &parse("(f ; g) + (f ; g)", &sig)?)?.fold();
    let lr = Rule::parse("lr : f ; g => id[1]", &sig)?;
    let ms = find_matches(&lr, &host)?;
    println!("{} matches of {}", ms.len(), lr.name);
    for m in &ms {
        println!("  nodes {:?} edges {:?} -> {} edges left", m.hom.nodes, m.hom.edges, rewrite_step(&lr, m)?.graph.edge_count());
    }

    let rl = lr.reversed();
    let a1 = host.graph.edges[0].targets[0];
    let hom = Homomorphism { nodes: vec![a1], edges: vec![] };
    let en = complements_enumerate(&rl, &host, &hom)?;
    for f in en.fibres.iter().filter(|f| f.elements.len() > 1) {
        let names: Vec<String> = f.elements.iter().map(|(_, e)| e.to_string()).collect();
        println!("fibre over node {}: {{{}}}", f.host_node, names.join(", "));
    }
    println!("{} partitions, {} complements", en.examined, en.complements.len());
    let results: Vec<_> = en
        .complements
        .iter()
        .map(|c| rewrite_step(&rl, &Match { hom: hom.clone(), complement: c.clone() }))
        .collect::<Result<_, _>>()?;
    for (i, (c, r)) in en.complements.iter().zip(&results).enumerate() {
        println!("  #{i}: partition {:?}, result has {} nodes", c.partition, r.graph.node_count());
    }
    let distinct = (0..results.len()).all(|i| (0..i).all(|j| !interfaced_iso(&results[i], &results[j])));
    println!("pairwise non-isomorphic: {distinct}");
    Ok(())
}
