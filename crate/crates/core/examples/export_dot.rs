//! Graphviz and JSON renderings of a diagram.

use frobrw::io::{cospan_from_json, cospan_to_json, to_dot};
use frobrw::signature::Signature;
use frobrw::term::{interp, parse};

fn main() -> frobrw::error::Result<()> {
    let mut sig = Signature::new(&["b", "r"]);
    sig.add_generator("f", vec![0], vec![1, 1]);
    let c = interp(&sig, &parse("f ; (frob.mult[r] + frob.unit[r]) ; (chg[r,b] + id[r])", &sig)?)?;
    print!("{}", to_dot(&sig, &c));
    let json = cospan_to_json(&sig, &c);
    println!("{}", serde_json::to_string(&json).expect("json serializes"));
    assert_eq!(cospan_from_json(&sig, &json)?, c);
    Ok(())
}
