//! Discrete cospans of labelled hypergraphs, the combinatorial string diagrams.

use crate::error::{Error, Result};
use crate::hypergraph::{isomorphism_with, pushout_discrete, Homomorphism, Hypergraph, Label, NodeId};
use crate::signature::{ColourId, FrobKind, GenId, Signature, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Cospan {
    pub graph: Hypergraph,
    pub inputs: Vec<NodeId>,
    pub outputs: Vec<NodeId>,
}

/// A hypergraph with a single interface leg `G <- J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct InterfacedGraph {
    pub graph: Hypergraph,
    pub interface: Vec<NodeId>,
}

impl Cospan {
    pub fn empty() -> Cospan {
        Cospan::default()
    }

    pub fn dom(&self) -> Word {
        self.inputs.iter().map(|v| self.graph.nodes[*v]).collect()
    }

    pub fn cod(&self) -> Word {
        self.outputs.iter().map(|v| self.graph.nodes[*v]).collect()
    }

    /// Discrete cospan on `|w|` nodes with both legs the identity.
    pub fn identity(w: &[ColourId]) -> Cospan {
        let mut g = Hypergraph::new();
        let legs: Vec<NodeId> = w.iter().map(|c| g.add_node(*c)).collect();
        Cospan { graph: g, inputs: legs.clone(), outputs: legs }
    }

    /// Symmetry `v w -> w v`.
    pub fn symmetry(v: &[ColourId], w: &[ColourId]) -> Cospan {
        let mut g = Hypergraph::new();
        let a: Vec<NodeId> = v.iter().map(|c| g.add_node(*c)).collect();
        let b: Vec<NodeId> = w.iter().map(|c| g.add_node(*c)).collect();
        let inputs = a.iter().chain(b.iter()).copied().collect();
        let outputs = b.iter().chain(a.iter()).copied().collect();
        Cospan { graph: g, inputs, outputs }
    }

    /// A single edge with fresh, distinct endpoint nodes.
    pub fn edge(label: Label, arity: &[ColourId], coarity: &[ColourId]) -> Cospan {
        let mut g = Hypergraph::new();
        let s: Vec<NodeId> = arity.iter().map(|c| g.add_node(*c)).collect();
        let t: Vec<NodeId> = coarity.iter().map(|c| g.add_node(*c)).collect();
        g.add_edge(label, s.clone(), t.clone());
        Cospan { graph: g, inputs: s, outputs: t }
    }

    pub fn generator(sig: &Signature, g: GenId) -> Result<Cospan> {
        let gen = sig
            .generators
            .get(g)
            .ok_or_else(|| Error::UnknownGenerator(format!("#{g}")))?;
        Ok(Cospan::edge(Label::Gen(g), &gen.arity, &gen.coarity))
    }

    pub fn changer(a: ColourId, b: ColourId) -> Cospan {
        Cospan::edge(Label::Chg(a, b), &[a], &[b])
    }

    /// The one-node spider for a Frobenius generator.
    pub fn frob(sig: &Signature, c: ColourId, kind: FrobKind) -> Result<Cospan> {
        if c >= sig.colours.len() {
            return Err(Error::UnknownColour(format!("#{c}")));
        }
        if !sig.has_frobenius(c) {
            return Err(Error::NoFrobenius(sig.colour_name(c).to_string()));
        }
        Ok(Cospan::spider(c, kind.shape().0, kind.shape().1))
    }

    /// A single node of colour `c` carrying `n` input and `m` output legs.
    pub fn spider(c: ColourId, n: usize, m: usize) -> Cospan {
        let mut g = Hypergraph::new();
        let v = g.add_node(c);
        Cospan { graph: g, inputs: vec![v; n], outputs: vec![v; m] }
    }

    /// Sequential composition `self ; b` by pushout over the shared boundary.
    pub fn compose(&self, b: &Cospan) -> Result<Cospan> {
        if self.cod() != b.dom() {
            return Err(Error::TypeMismatch(format!(
                "cannot compose: codomain has {} wires, domain has {}",
                self.outputs.len(),
                b.inputs.len()
            )));
        }
        let (g, ia, ib) = pushout_discrete(&self.graph, &self.outputs, &b.graph, &b.inputs)?;
        Ok(Cospan {
            graph: g,
            inputs: self.inputs.iter().map(|v| ia[*v]).collect(),
            outputs: b.outputs.iter().map(|v| ib[*v]).collect(),
        })
    }

    /// Monoidal product: disjoint union with concatenated legs.
    pub fn tensor(&self, b: &Cospan) -> Cospan {
        let mut g = self.graph.clone();
        let (off, _) = g.append(&b.graph);
        let mut inputs = self.inputs.clone();
        inputs.extend(b.inputs.iter().map(|v| v + off));
        let mut outputs = self.outputs.clone();
        outputs.extend(b.outputs.iter().map(|v| v + off));
        Cospan { graph: g, inputs, outputs }
    }

    /// Bends the inputs round to the outputs: interface = inputs ++ outputs.
    /// The number of inputs is returned so that [`Cospan::unfold`] is exact.
    pub fn fold(&self) -> (InterfacedGraph, usize) {
        let mut interface = self.inputs.clone();
        interface.extend_from_slice(&self.outputs);
        (InterfacedGraph { graph: self.graph.clone(), interface }, self.inputs.len())
    }

    pub fn unfold(g: &InterfacedGraph, n_inputs: usize) -> Cospan {
        Cospan {
            graph: g.graph.clone(),
            inputs: g.interface[..n_inputs].to_vec(),
            outputs: g.interface[n_inputs..].to_vec(),
        }
    }

    pub fn check(&self, sig: Option<&Signature>) -> Result<()> {
        self.graph.check(sig)?;
        for v in self.inputs.iter().chain(self.outputs.iter()) {
            if *v >= self.graph.node_count() {
                return Err(Error::Graph(format!("leg refers to unknown node {v}")));
            }
        }
        Ok(())
    }
}

/// Graph isomorphism commuting with both legs positionally.
pub fn cospan_isomorphism(a: &Cospan, b: &Cospan) -> Option<Homomorphism> {
    if a.inputs.len() != b.inputs.len() || a.outputs.len() != b.outputs.len() {
        return None;
    }
    let fixed: Vec<(NodeId, NodeId)> = a
        .inputs
        .iter()
        .zip(b.inputs.iter())
        .chain(a.outputs.iter().zip(b.outputs.iter()))
        .map(|(x, y)| (*x, *y))
        .collect();
    legs_isomorphism(&a.graph, &b.graph, &fixed)
}

pub fn cospan_iso(a: &Cospan, b: &Cospan) -> bool {
    cospan_isomorphism(a, b).is_some()
}

/// Graph isomorphism commuting with the interface legs.
pub fn interfaced_isomorphism(a: &InterfacedGraph, b: &InterfacedGraph) -> Option<Homomorphism> {
    if a.interface.len() != b.interface.len() {
        return None;
    }
    let fixed: Vec<(NodeId, NodeId)> =
        a.interface.iter().zip(b.interface.iter()).map(|(x, y)| (*x, *y)).collect();
    legs_isomorphism(&a.graph, &b.graph, &fixed)
}

pub fn interfaced_iso(a: &InterfacedGraph, b: &InterfacedGraph) -> bool {
    interfaced_isomorphism(a, b).is_some()
}

// Leg multiplicities must agree too: the node carrying legs {0, 2} must map
// to a node carrying exactly the same leg positions.
fn legs_isomorphism(g: &Hypergraph, h: &Hypergraph, fixed: &[(NodeId, NodeId)]) -> Option<Homomorphism> {
    let mut lg = vec![Vec::new(); g.node_count()];
    let mut lh = vec![Vec::new(); h.node_count()];
    for (i, (x, y)) in fixed.iter().enumerate() {
        if *x >= g.node_count() || *y >= h.node_count() {
            return None;
        }
        lg[*x].push(i);
        lh[*y].push(i);
    }
    let ok = |x: NodeId, y: NodeId| lg[x] == lh[y];
    isomorphism_with(g, h, fixed, &ok)
}

impl InterfacedGraph {
    pub fn new(graph: Hypergraph, interface: Vec<NodeId>) -> Self {
        InterfacedGraph { graph, interface }
    }

    pub fn interface_word(&self) -> Word {
        self.interface.iter().map(|v| self.graph.nodes[*v]).collect()
    }

    /// Number of interface legs on each node.
    pub fn leg_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.graph.node_count()];
        for v in &self.interface {
            c[*v] += 1;
        }
        c
    }
}
