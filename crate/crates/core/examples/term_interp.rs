//! Terms, their types, and equality modulo the Frobenius laws.

use frobrw::cospan::cospan_iso;
use frobrw::signature::Signature;
use frobrw::term::{interp, parse, term_equal_mod_frobenius};

fn main() -> frobrw::error::Result<()> {
    let sig = Signature::parse("mu : 2 -> 1\neta : 0 -> 1\nf : 1 -> 1\n")?;
    for src in ["mu ; f", "(eta + id[1]) ; mu", "frob.comult ; (f + f) ; frob.mult"] {
        let t = parse(src, &sig)?;
        let (d, c) = t.type_of(&sig)?;
        let g = interp(&sig, &t)?;
        println!(
            "{:<40} {} -> {}   {} nodes, {} edges",
            t.display(&sig),
            sig.word_name(&d),
            sig.word_name(&c),
            g.graph.node_count(),
            g.graph.edge_count()
        );
    }

    // the spider absorbs associativity, commutativity and the Frobenius law
    let pairs = [
        ("(frob.mult + id[1]) ; frob.mult", "(id[1] + frob.mult) ; frob.mult"),
        ("sym[1,1] ; frob.mult", "frob.mult"),
        ("(frob.comult + id[1]) ; (id[1] + frob.mult)", "frob.mult ; frob.comult"),
        ("frob.comult ; frob.mult", "id[1]"),
        ("sym[1,1] ; mu", "mu"),
    ];
    for (a, b) in pairs {
        let eq = term_equal_mod_frobenius(&sig, &parse(a, &sig)?, &parse(b, &sig)?)?;
        println!("{a}  =  {b}: {eq}");
    }
    let x = interp(&sig, &parse("f ; f", &sig)?)?;
    let y = interp(&sig, &parse("f", &sig)?)?;
    println!("f ; f  =  f: {}", cospan_iso(&x, &y));
    Ok(())
}
