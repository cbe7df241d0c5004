//! Two semantics side by side: relations in a finite model computed from
//! terms and from graphs, and GF(2) subspaces of interacting-bialgebra
//! diagrams.

use frobrw::random::{random_reduced_host, random_term, rng};
use frobrw::semantics::{ib_subspace, readoff_reduced, FiniteModel, SpiderKind};
use frobrw::signature::Signature;
use frobrw::strategies::ib::IB;
use frobrw::term::{interp, parse};

fn main() -> frobrw::error::Result<()> {
    let sig = Signature::parse("m : 2 -> 1\nu : 0 -> 1\ni : 1 -> 1\n")?;
    let z3 = FiniteModel::cyclic_group(&sig, 3)?;
    let t = parse("frob.comult ; (id[1] + i) ; m", &sig)?;
    let r = z3.eval_term(&sig, &t)?;
    println!("{} in Z3: {:?}", t.display(&sig), r.tuples);

    let mut ok = 0;
    for seed in 0..50 {
        let t = random_term(&sig, 5, &mut rng(seed));
        ok += (z3.eval_term(&sig, &t)? == z3.eval_cospan(&sig, &interp(&sig, &t)?)?) as usize;
    }
    println!("compositional = graph evaluation on {ok}/50 random terms");

    let mut parity = Signature::new(&["b", "r"]);
    parity.add_generator("k", vec![], vec![0]);
    let model = FiniteModel::new(&parity, vec![2, 2], vec![SpiderKind::Equal, SpiderKind::Parity])?;
    let xor = parse("(id[b] + id[b]) ; (chg[b,r] + chg[b,r]) ; frob.mult[r] ; chg[r,b]", &parity)?;
    println!("xor via a parity spider: {:?}", model.eval_term(&parity, &xor)?.tuples);

    let mut agree = 0;
    for seed in 0..50 {
        let (g, _) = random_reduced_host(&mut rng(seed), IB);
        agree += (readoff_reduced(&g, IB)? == ib_subspace(&g, IB)?) as usize;
    }
    println!("read-off = elimination on {agree}/50 reduced diagrams");
    Ok(())
}
