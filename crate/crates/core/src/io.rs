//! File formats: graph and cospan JSON, rule files, and DOT export.
//!
//! ```text
//! {"nodes":[{"id":0,"colour":"w"}],
//!  "edges":[{"id":0,"label":"f","sources":[0],"targets":[1,2]}],
//!  "inputs":[0], "outputs":[2]}
//! ```
//! Node and edge ids must be `0..n` in order. Labels are generator names or
//! `chg[a,b]`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cospan::Cospan;
use crate::dpoi::Rule;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Label};
use crate::signature::Signature;

#[derive(Serialize, Deserialize)]
struct NodeFile {
    id: usize,
    colour: String,
}

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    id: usize,
    label: String,
    sources: Vec<usize>,
    targets: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CospanFile {
    nodes: Vec<NodeFile>,
    edges: Vec<EdgeFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    inputs: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    outputs: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RuleFile {
    name: String,
    lhs: Value,
    rhs: Value,
}

fn format_err(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

fn graph_file(sig: &Signature, g: &Hypergraph) -> (Vec<NodeFile>, Vec<EdgeFile>) {
    let nodes = g
        .nodes
        .iter()
        .enumerate()
        .map(|(id, c)| NodeFile { id, colour: sig.colour_name(*c).to_string() })
        .collect();
    let edges = g
        .edges
        .iter()
        .enumerate()
        .map(|(id, e)| EdgeFile {
            id,
            label: sig.label_name(&e.label),
            sources: e.sources.clone(),
            targets: e.targets.clone(),
        })
        .collect();
    (nodes, edges)
}

fn read_graph(sig: &Signature, nodes: &[NodeFile], edges: &[EdgeFile]) -> Result<Hypergraph> {
    let mut g = Hypergraph::new();
    for (i, n) in nodes.iter().enumerate() {
        if n.id != i {
            return Err(Error::Format(format!("node ids must be 0..n in order; found {} at {i}", n.id)));
        }
        g.add_node(sig.colour_id(&n.colour)?);
    }
    for (i, e) in edges.iter().enumerate() {
        if e.id != i {
            return Err(Error::Format(format!("edge ids must be 0..n in order; found {} at {i}", e.id)));
        }
        if let Some(v) = e.sources.iter().chain(e.targets.iter()).find(|v| **v >= g.node_count()) {
            return Err(Error::Format(format!("edge {i} mentions missing node {v}")));
        }
        let label: Label = sig.parse_label(&e.label)?;
        g.add_edge(label, e.sources.clone(), e.targets.clone());
    }
    g.check(Some(sig))?;
    Ok(g)
}

pub fn graph_to_json(sig: &Signature, g: &Hypergraph) -> Value {
    let (nodes, edges) = graph_file(sig, g);
    serde_json::to_value(CospanFile { nodes, edges, inputs: None, outputs: None }).expect("graph serializes")
}

pub fn graph_from_json(sig: &Signature, v: &Value) -> Result<Hypergraph> {
    let f: CospanFile = serde_json::from_value(v.clone()).map_err(format_err)?;
    read_graph(sig, &f.nodes, &f.edges)
}

pub fn cospan_to_json(sig: &Signature, c: &Cospan) -> Value {
    let (nodes, edges) = graph_file(sig, &c.graph);
    serde_json::to_value(CospanFile { nodes, edges, inputs: Some(c.inputs.clone()), outputs: Some(c.outputs.clone()) })
        .expect("cospan serializes")
}

/// Reads a cospan; missing `inputs`/`outputs` mean empty legs.
pub fn cospan_from_json(sig: &Signature, v: &Value) -> Result<Cospan> {
    let f: CospanFile = serde_json::from_value(v.clone()).map_err(format_err)?;
    let graph = read_graph(sig, &f.nodes, &f.edges)?;
    let inputs = f.inputs.unwrap_or_default();
    let outputs = f.outputs.unwrap_or_default();
    if let Some(v) = inputs.iter().chain(outputs.iter()).find(|v| **v >= graph.node_count()) {
        return Err(Error::Format(format!("leg on missing node {v}")));
    }
    Ok(Cospan { graph, inputs, outputs })
}

pub fn parse_json(src: &str) -> Result<Value> {
    serde_json::from_str(src).map_err(format_err)
}

pub fn rule_to_json(sig: &Signature, r: &Rule) -> Value {
    serde_json::to_value(RuleFile {
        name: r.name.clone(),
        lhs: cospan_to_json(sig, &r.lhs),
        rhs: cospan_to_json(sig, &r.rhs),
    })
    .expect("rule serializes")
}

pub fn rule_from_json(sig: &Signature, v: &Value) -> Result<Rule> {
    let f: RuleFile = serde_json::from_value(v.clone()).map_err(format_err)?;
    Rule::new(&f.name, cospan_from_json(sig, &f.lhs)?, cospan_from_json(sig, &f.rhs)?)
}

/// A rule file: a JSON rule or array of rules, or text with one
/// `name : l => r` per line (`#` starts a comment).
pub fn parse_rules(src: &str, sig: &Signature) -> Result<Vec<Rule>> {
    let t = src.trim_start();
    if t.starts_with('{') {
        return Ok(vec![rule_from_json(sig, &parse_json(src)?)?]);
    }
    if t.starts_with('[') {
        return match parse_json(src)? {
            Value::Array(items) => items.iter().map(|v| rule_from_json(sig, v)).collect(),
            _ => unreachable!("starts with ["),
        };
    }
    src.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| Rule::parse(l, sig))
        .collect()
}

const PALETTE: [&str; 8] = ["black", "red", "blue", "darkgreen", "orange", "purple", "brown", "gray40"];

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: nodes as coloured dots, hyperedges as boxes with
/// numbered ports, interface legs as plain text nodes.
pub fn to_dot(sig: &Signature, c: &Cospan) -> String {
    let mut s = String::from("digraph G {\n  rankdir=LR;\n");
    for (v, col) in c.graph.nodes.iter().enumerate() {
        let colour = PALETTE[*col % PALETTE.len()];
        let _ = writeln!(
            s,
            "  n{v} [shape=point, width=0.15, color={colour}, xlabel=\"{}\"];",
            dot_escape(&format!("{v}:{}", sig.colour_name(*col)))
        );
    }
    for (i, e) in c.graph.edges.iter().enumerate() {
        let ins: Vec<String> = (0..e.sources.len()).map(|k| format!("<s{k}> {k}")).collect();
        let outs: Vec<String> = (0..e.targets.len()).map(|k| format!("<t{k}> {k}")).collect();
        let _ = writeln!(
            s,
            "  e{i} [shape=record, label=\"{{{{{}}}|{}|{{{}}}}}\"];",
            ins.join("|"),
            dot_escape(&sig.label_name(&e.label)).replace('[', "\\[").replace(']', "\\]").replace(',', "\\,"),
            outs.join("|")
        );
        for (k, v) in e.sources.iter().enumerate() {
            let _ = writeln!(s, "  n{v} -> e{i}:s{k};");
        }
        for (k, v) in e.targets.iter().enumerate() {
            let _ = writeln!(s, "  e{i}:t{k} -> n{v};");
        }
    }
    for (k, v) in c.inputs.iter().enumerate() {
        let _ = writeln!(s, "  in{k} [shape=plaintext, label=\"in {k}\"];\n  in{k} -> n{v} [style=dashed];");
    }
    for (k, v) in c.outputs.iter().enumerate() {
        let _ = writeln!(s, "  out{k} [shape=plaintext, label=\"out {k}\"];\n  n{v} -> out{k} [style=dashed];");
    }
    s.push_str("}\n");
    s
}
