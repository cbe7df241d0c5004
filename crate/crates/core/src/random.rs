//! Seeded generators for terms, contexts and hosts. Everything draws from a
//! `ChaCha8Rng` so runs are reproducible from a single `u64`.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cospan::InterfacedGraph;
use crate::hypergraph::{Hypergraph, Label};
use crate::multifrob::upsilon_normalize;
use crate::semantics::gf2::IbColours;
use crate::signature::{ColourId, FrobKind, Signature, Word};
use crate::strategies::group::group_signature;
use crate::term::{interp, Term};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Atoms whose domain is a prefix of `rest`.
fn atoms_for(sig: &Signature, rest: &[ColourId]) -> Vec<Term> {
    let mut out = Vec::new();
    let c = rest[0];
    out.push(Term::Id(vec![c]));
    for (g, gen) in sig.generators.iter().enumerate() {
        if !gen.arity.is_empty() && rest.starts_with(&gen.arity) {
            out.push(Term::Gen(g));
        }
    }
    if sig.has_frobenius(c) {
        out.push(Term::Frob(c, FrobKind::Comult));
        out.push(Term::Frob(c, FrobKind::Counit));
        if rest.len() >= 2 && rest[1] == c {
            out.push(Term::Frob(c, FrobKind::Mult));
        }
    }
    if rest.len() >= 2 {
        out.push(Term::Sym(vec![c], vec![rest[1]]));
    }
    for d in 0..sig.colours.len() {
        if d != c && sig.colours.len() > 1 && changer_ok(sig, c, d) {
            out.push(Term::Chg(c, d));
        }
    }
    out
}

fn changer_ok(sig: &Signature, a: ColourId, b: ColourId) -> bool {
    sig.has_frobenius(a) && sig.has_frobenius(b)
}

/// Atoms with empty domain.
fn sources(sig: &Signature) -> Vec<Term> {
    let mut out: Vec<Term> =
        (0..sig.generators.len()).filter(|g| sig.generators[*g].arity.is_empty()).map(Term::Gen).collect();
    for c in 0..sig.colours.len() {
        if sig.has_frobenius(c) {
            out.push(Term::Frob(c, FrobKind::Unit));
        }
    }
    out
}

/// One layer: a tensor of atoms covering `dom`, occasionally with a
/// nullary atom slipped in.
fn layer(sig: &Signature, dom: &[ColourId], r: &mut ChaCha8Rng) -> (Term, Word) {
    let mut parts = Vec::new();
    let mut cod = Vec::new();
    let mut i = 0;
    let srcs = sources(sig);
    while i <= dom.len() {
        if !srcs.is_empty() && r.gen_bool(0.12) {
            let t = srcs.choose(r).expect("non-empty").clone();
            cod.extend(t.type_of(sig).expect("atom types").1);
            parts.push(t);
        }
        if i == dom.len() {
            break;
        }
        let cands = atoms_for(sig, &dom[i..]);
        let t = cands.choose(r).expect("identity always fits").clone();
        let (d, c) = t.type_of(sig).expect("atom types");
        i += d.len();
        cod.extend(c);
        parts.push(t);
    }
    (Term::par_all(parts), cod)
}

/// A random term with domain `dom` and roughly `size` generator-bearing
/// atoms, built from layers.
pub fn random_term_from(sig: &Signature, dom: &[ColourId], size: usize, r: &mut ChaCha8Rng) -> Term {
    let mut t = Term::Id(dom.to_vec());
    let mut cur = dom.to_vec();
    let mut guard = 0;
    while t.size() < size && guard < 4 * size + 4 {
        guard += 1;
        let (l, cod) = layer(sig, &cur, r);
        if cod.len() > 6 {
            continue;
        }
        t = if matches!(t, Term::Id(_)) { l } else { Term::seq(t, l) };
        cur = cod;
    }
    t
}

pub fn random_word(sig: &Signature, max: usize, r: &mut ChaCha8Rng) -> Word {
    let n = r.gen_range(0..=max);
    (0..n).map(|_| r.gen_range(0..sig.colours.len())).collect()
}

pub fn random_term(sig: &Signature, size: usize, r: &mut ChaCha8Rng) -> Term {
    let dom = random_word(sig, 3, r);
    random_term_from(sig, &dom, size, r)
}

/// A context `pre ; (left + [] + right [+ sink]) ; post` around a hole of
/// fixed type.
#[derive(Clone, Debug)]
pub struct Context {
    pre: Option<Term>,
    left: Term,
    right: Term,
    sink: Option<Term>,
    post: Term,
}

impl Context {
    pub fn plug(&self, t: &Term) -> Term {
        let mut mid = Term::par_all(vec![self.left.clone(), t.clone(), self.right.clone()]);
        if let Some(s) = &self.sink {
            mid = Term::par(mid, s.clone());
        }
        if let Some(p) = &self.pre {
            mid = Term::seq(p.clone(), mid);
        }
        Term::seq(mid, self.post.clone())
    }
}

/// A random context for holes of type `dom -> cod`. When no suitable `pre`
/// turns up the context starts with the tensor.
pub fn random_context(sig: &Signature, dom: &[ColourId], cod: &[ColourId], size: usize, r: &mut ChaCha8Rng) -> Context {
    let left = random_term(sig, size / 3, r);
    let right = random_term(sig, size / 3, r);
    let (ld, lc) = left.type_of(sig).expect("typed");
    let (rd, rc) = right.type_of(sig).expect("typed");
    let mid_dom: Word = ld.iter().chain(dom).chain(rd.iter()).copied().collect();
    let mid_cod: Word = lc.iter().chain(cod).chain(rc.iter()).copied().collect();
    let mut pre = None;
    let mut sink = None;
    for _ in 0..8 {
        let start = random_word(sig, 3, r);
        let p = random_term_from(sig, &start, size / 3, r);
        let (_, pc) = p.type_of(sig).expect("typed");
        if pc == mid_dom {
            pre = Some(p);
            break;
        }
        if pc.len() > mid_dom.len() && pc.starts_with(&mid_dom) {
            let s = Term::par_all(pc[mid_dom.len()..].iter().map(|c| counit_or_id(sig, *c)).collect());
            if s.type_of(sig).expect("typed").1.is_empty() {
                pre = Some(p);
                sink = Some(s);
                break;
            }
        }
    }
    let post = random_term_from(sig, &mid_cod, size / 3, r);
    Context { pre, left, right, sink, post }
}

fn counit_or_id(sig: &Signature, c: ColourId) -> Term {
    if sig.has_frobenius(c) {
        Term::Frob(c, FrobKind::Counit)
    } else {
        Term::Id(vec![c])
    }
}

/// Graph over colours 0 and 1, rich in changer chains.
pub fn random_two_colour_graph(r: &mut ChaCha8Rng, max_nodes: usize) -> InterfacedGraph {
    let mut g = Hypergraph::new();
    let n = r.gen_range(1..=max_nodes.max(1));
    for _ in 0..n {
        g.add_node(r.gen_range(0..2));
    }
    let chains = r.gen_range(0..=n + 2);
    for _ in 0..chains {
        let u = r.gen_range(0..g.node_count());
        let col = g.nodes[u];
        let same: Vec<usize> = (0..g.node_count()).filter(|v| g.nodes[*v] == col).collect();
        let w = *same.choose(r).expect("u itself");
        let mid = g.add_node(1 - col);
        g.add_edge(Label::Chg(col, 1 - col), vec![u], vec![mid]);
        g.add_edge(Label::Chg(1 - col, col), vec![mid], vec![w]);
        if r.gen_bool(0.2) {
            // a third connection blocks this redex
            let x = r.gen_range(0..g.node_count());
            let cx = g.nodes[x];
            g.add_edge(Label::Chg(cx, 1 - col), vec![x], vec![mid]);
        }
    }
    let extra = r.gen_range(0..=n);
    for _ in 0..extra {
        let u = r.gen_range(0..g.node_count());
        let w = r.gen_range(0..g.node_count());
        g.add_edge(Label::Chg(g.nodes[u], g.nodes[w]), vec![u], vec![w]);
    }
    let legs = r.gen_range(0..=4);
    let interface = (0..legs).map(|_| r.gen_range(0..g.node_count())).collect();
    InterfacedGraph::new(g, interface)
}

/// Random bipartite IB host with an all-black interface, Υ-normalized.
/// Returns the graph and the number of inputs.
pub fn random_ib_host(r: &mut ChaCha8Rng, max_black: usize, max_red: usize, c: IbColours) -> (InterfacedGraph, usize) {
    let mut g = Hypergraph::new();
    let nb = r.gen_range(1..=max_black);
    let nr = r.gen_range(0..=max_red);
    let blacks: Vec<usize> = (0..nb).map(|_| g.add_node(c.black)).collect();
    let reds: Vec<usize> = (0..nr).map(|_| g.add_node(c.red)).collect();
    let p = r.gen_range(0.2..0.6);
    for b in &blacks {
        for rd in &reds {
            if r.gen_bool(p) {
                let copies = if r.gen_bool(0.1) { 2 } else { 1 };
                for _ in 0..copies {
                    if r.gen_bool(0.5) {
                        g.add_edge(Label::Chg(c.black, c.red), vec![*b], vec![*rd]);
                    } else {
                        g.add_edge(Label::Chg(c.red, c.black), vec![*rd], vec![*b]);
                    }
                }
            }
        }
    }
    let n_in = r.gen_range(0..=3);
    let n_out = r.gen_range(0..=3);
    let interface = (0..n_in + n_out).map(|_| *blacks.choose(r).expect("at least one black")).collect();
    (upsilon_normalize(&InterfacedGraph::new(g, interface)), n_in)
}

/// Random reduced IB graph, built directly from node types (I), (O), (IO).
pub fn random_reduced_host(r: &mut ChaCha8Rng, c: IbColours) -> (InterfacedGraph, usize) {
    let mut g = Hypergraph::new();
    let nb = r.gen_range(0..=6);
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    let mut kind = Vec::new();
    for _ in 0..nb {
        let v = g.add_node(c.black);
        match r.gen_range(0..3) {
            0 => {
                ins.push(v);
                kind.push((v, true));
            }
            1 => {
                outs.push(v);
                kind.push((v, false));
            }
            _ => {
                for _ in 0..r.gen_range(1..=2) {
                    ins.push(v);
                }
                for _ in 0..r.gen_range(1..=2) {
                    outs.push(v);
                }
                kind.push((v, true));
            }
        }
    }
    ins.shuffle(r);
    outs.shuffle(r);
    let nr = r.gen_range(0..=5);
    for _ in 0..nr {
        let rd = g.add_node(c.red);
        for &(b, from_input) in &kind {
            if r.gen_bool(0.4) {
                if from_input {
                    g.add_edge(Label::Chg(c.black, c.red), vec![b], vec![rd]);
                } else {
                    g.add_edge(Label::Chg(c.red, c.black), vec![rd], vec![b]);
                }
            }
        }
    }
    let n = ins.len();
    ins.extend(outs);
    (InterfacedGraph::new(g, ins), n)
}

/// Acyclic host over `m, i, u` with Frobenius, at most `max_edges` edges and
/// `max_nodes` nodes. Returns the graph and the number of inputs.
pub fn random_group_host(r: &mut ChaCha8Rng, max_edges: usize, max_nodes: usize) -> (InterfacedGraph, usize) {
    let sig = group_signature();
    loop {
        let size = r.gen_range(1..=max_edges + 4);
        let t = random_term(&sig, size, r);
        let c = interp(&sig, &t).expect("generated terms type-check");
        let (g, n) = c.fold();
        if g.graph.edge_count() <= max_edges
            && g.graph.node_count() <= max_nodes
            && g.graph.edge_count() > 0
            && g.graph.is_acyclic()
        {
            return (g, n);
        }
    }
}

/// Random depth profile with up to `max_len` letters below `max_letter`.
pub fn random_profile(r: &mut ChaCha8Rng, max_len: usize, max_letter: usize) -> Vec<usize> {
    let n = r.gen_range(0..=max_len);
    (0..n).map(|_| r.gen_range(0..max_letter)).collect()
}
