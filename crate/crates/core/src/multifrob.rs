//! Several Frobenius structures on one sort.
//!
//! Each extra structure (a [`FrobFamily`] of the base signature) is moved to
//! its own colour by the polychromatic interpretation [`PolySignature::chrome`],
//! with colour changers `chg[a,b]` mediating between colours. The changer
//! pairs `chg[a,c] ; chg[c,a]` are contracted by Υ-normalization, and rules
//! are transformed so that Υ cannot erase their redexes.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cospan::{Cospan, InterfacedGraph};
use crate::dpoi::{first_match, rewrite_step, LogRecord, Rule};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, Label, NodeId, Polarity};
use crate::signature::{ColourId, FrobKind, GenId, Signature};
use crate::term::{interp, Term};
use crate::unionfind::UnionFind;

#[derive(Clone, Debug)]
pub struct PolySignature {
    pub base: Signature,
    pub poly: Signature,
    /// Poly generator of each non-family base generator.
    gen_map: Vec<Option<GenId>>,
    /// Poly colour of each base family.
    family_colour: Vec<ColourId>,
}

impl PolySignature {
    /// Base colours keep their ids; family `i` gets colour `|C| + i`.
    pub fn new(base: &Signature) -> Result<PolySignature> {
        base.validate()?;
        let names: Vec<&str> = base.colours.iter().map(|c| c.name.as_str()).collect();
        let mut poly = Signature::new(&names);
        poly.frobenius = base.frobenius.clone();
        let mut family_colour = Vec::new();
        for f in &base.families {
            if poly.colour_id(&f.colour).is_ok() {
                return Err(Error::Signature(format!("family colour `{}` clashes with a base colour", f.colour)));
            }
            family_colour.push(poly.add_colour(&f.colour, true));
        }
        let mut gen_map = vec![None; base.generators.len()];
        for g in &base.generators {
            if base.family_of(g.id).is_none() {
                gen_map[g.id] = Some(poly.add_generator(&g.name, g.arity.clone(), g.coarity.clone()));
            }
        }
        Ok(PolySignature { base: base.clone(), poly, gen_map, family_colour })
    }

    pub fn base_colours(&self) -> usize {
        self.base.colours.len()
    }

    pub fn family_colour(&self, family: usize) -> ColourId {
        self.family_colour[family]
    }

    /// The polychromatic interpretation on terms.
    pub fn chrome(&self, t: &Term) -> Result<Term> {
        Ok(match t {
            Term::Gen(g) => match self.base.family_of(*g) {
                Some((fi, kind)) => {
                    let h = self.base.families[fi].host;
                    let c = self.family_colour[fi];
                    let to = Term::Chg(h, c);
                    let back = Term::Chg(c, h);
                    let frob = Term::Frob(c, kind);
                    match kind {
                        FrobKind::Mult => Term::seq_all(vec![Term::par(to.clone(), to), frob, back]),
                        FrobKind::Unit => Term::seq(frob, back),
                        FrobKind::Comult => Term::seq_all(vec![to, frob, Term::par(back.clone(), back)]),
                        FrobKind::Counit => Term::seq(to, frob),
                    }
                }
                None => Term::Gen(
                    self.gen_map
                        .get(*g)
                        .copied()
                        .flatten()
                        .ok_or_else(|| Error::UnknownGenerator(format!("#{g}")))?,
                ),
            },
            Term::Id(w) => Term::Id(w.clone()),
            Term::Sym(v, w) => Term::Sym(v.clone(), w.clone()),
            Term::Frob(c, k) => Term::Frob(*c, *k),
            Term::Chg(a, b) => Term::Chg(*a, *b),
            Term::Seq(a, b) => Term::seq(self.chrome(a)?, self.chrome(b)?),
            Term::Par(a, b) => Term::par(self.chrome(a)?, self.chrome(b)?),
        })
    }

    /// Interprets `chrome(t)` and folds it.
    pub fn host(&self, t: &Term) -> Result<(InterfacedGraph, usize)> {
        Ok(interp(&self.poly, &self.chrome(t)?)?.fold())
    }

    /// `chrome` applied to both sides of a base rule, untransformed.
    pub fn chrome_rule(&self, name: &str, l: &Term, r: &Term) -> Result<Rule> {
        Rule::from_terms(&self.poly, name, &self.chrome(l)?, &self.chrome(r)?)
    }
}

/// An Υ-redex: node `node` whose only connections are the target of the
/// changer `inbound` (a -> c) and the source of the changer `outbound`
/// (c -> a), with no interface legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UpsilonRedex {
    pub node: NodeId,
    pub inbound: EdgeId,
    pub outbound: EdgeId,
}

pub fn upsilon_redex_at(g: &InterfacedGraph, legs: &[usize], v: NodeId) -> Option<UpsilonRedex> {
    if legs[v] != 0 {
        return None;
    }
    let conns = g.graph.connections(v);
    if conns.len() != 2 {
        return None;
    }
    let (mut inb, mut outb) = (None, None);
    for c in &conns {
        match (c.polarity, g.graph.edges[c.edge].label) {
            (Polarity::Target, Label::Chg(..)) => inb = Some(c.edge),
            (Polarity::Source, Label::Chg(..)) => outb = Some(c.edge),
            _ => return None,
        }
    }
    let (i, o) = (inb?, outb?);
    if i == o {
        return None;
    }
    match (g.graph.edges[i].label, g.graph.edges[o].label) {
        (Label::Chg(a, _), Label::Chg(_, b)) if a == b => Some(UpsilonRedex { node: v, inbound: i, outbound: o }),
        _ => None,
    }
}

/// All Υ-redexes in node order.
pub fn upsilon_redexes(g: &InterfacedGraph) -> Vec<UpsilonRedex> {
    let legs = g.leg_counts();
    (0..g.graph.node_count()).filter_map(|v| upsilon_redex_at(g, &legs, v)).collect()
}

/// Contracts one redex: the node and both changers go, and the two outer
/// endpoints are merged.
pub fn upsilon_contract(g: &InterfacedGraph, r: &UpsilonRedex) -> InterfacedGraph {
    let u = g.graph.edges[r.inbound].sources[0];
    let w = g.graph.edges[r.outbound].targets[0];
    let mut keep_n = vec![true; g.graph.node_count()];
    keep_n[r.node] = false;
    let mut keep_e = vec![true; g.graph.edge_count()];
    keep_e[r.inbound] = false;
    keep_e[r.outbound] = false;
    let (h, nmap, _) = g.graph.restrict(&keep_n, &keep_e);
    let mut uf = UnionFind::new(h.node_count());
    uf.union(nmap[u].expect("outer node kept"), nmap[w].expect("outer node kept"));
    let (class, count) = uf.classes();
    let q = h.quotient(&class, count).expect("changer pair has matching colours");
    InterfacedGraph {
        graph: q,
        interface: g.interface.iter().map(|v| class[nmap[*v].expect("leg node kept")]).collect(),
    }
}

/// Which redex to contract next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpsilonOrder {
    First,
    Last,
    Middle,
    /// Alternate between the first and last redex.
    Alternate,
    Random(u64),
}

impl UpsilonOrder {
    pub fn parse(s: &str) -> Result<UpsilonOrder> {
        match s {
            "first" => Ok(UpsilonOrder::First),
            "last" => Ok(UpsilonOrder::Last),
            "middle" => Ok(UpsilonOrder::Middle),
            "alternate" => Ok(UpsilonOrder::Alternate),
            _ => match s.strip_prefix("random:").map(|n| n.parse::<u64>()) {
                Some(Ok(seed)) => Ok(UpsilonOrder::Random(seed)),
                _ => Err(Error::Format(format!("unknown order `{s}`"))),
            },
        }
    }
}

/// Normalizes under the given order; returns the result and step count.
pub fn upsilon_normalize_with(g: &InterfacedGraph, order: UpsilonOrder) -> (InterfacedGraph, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(match order {
        UpsilonOrder::Random(s) => s,
        _ => 0,
    });
    let mut cur = g.clone();
    let mut steps = 0;
    loop {
        let rs = upsilon_redexes(&cur);
        if rs.is_empty() {
            recolour_points(&mut cur);
            return (cur, steps);
        }
        let r = match order {
            UpsilonOrder::First => rs[0],
            UpsilonOrder::Last => rs[rs.len() - 1],
            UpsilonOrder::Middle => rs[rs.len() / 2],
            UpsilonOrder::Alternate => {
                if steps % 2 == 0 {
                    rs[0]
                } else {
                    rs[rs.len() - 1]
                }
            }
            UpsilonOrder::Random(_) => *rs.choose(&mut rng).expect("non-empty"),
        };
        cur = upsilon_contract(&cur, &r);
        steps += 1;
    }
}

pub fn upsilon_normalize(g: &InterfacedGraph) -> InterfacedGraph {
    upsilon_normalize_with(g, UpsilonOrder::First).0
}

pub fn is_upsilon_normal(g: &InterfacedGraph) -> bool {
    upsilon_redexes(g).is_empty() && stray_points(g).is_empty()
}

/// Isolated nodes (no edges, no legs) of a colour other than 0. A closed
/// changer cycle can collapse to a point of either colour depending on the
/// order of contractions, and all such points are Υ-equivalent, so the
/// normal form paints them with colour 0.
fn stray_points(g: &InterfacedGraph) -> Vec<NodeId> {
    let legs = g.leg_counts();
    let mut touched = vec![false; g.graph.node_count()];
    for e in &g.graph.edges {
        for v in e.sources.iter().chain(e.targets.iter()) {
            touched[*v] = true;
        }
    }
    (0..g.graph.node_count()).filter(|v| !touched[*v] && legs[*v] == 0 && g.graph.nodes[*v] != 0).collect()
}

fn recolour_points(g: &mut InterfacedGraph) {
    for v in stray_points(g) {
        g.graph.nodes[v] = 0;
    }
}

/// Υ-normalizes a cospan through its folded form.
pub fn upsilon_normalize_cospan(c: &Cospan) -> Cospan {
    let (f, n) = c.fold();
    Cospan::unfold(&upsilon_normalize(&f), n)
}

/// What happened at each boundary leg during [`transform_rule`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LegReport {
    /// The changer on this leg was moved to the right-hand side.
    Absorbed { leg: usize, changer: Label },
    /// Leg node already of base colour with no boundary changer.
    Plain { leg: usize },
    /// Leg node has other legs or connections; left as is.
    Untouched { leg: usize, reason: String },
}

/// The rule transform: Υ-normalize the left-hand side, then pull every
/// boundary changer out of it and append the inverse changer to the
/// corresponding right-hand leg. Leg order is kept.
pub fn transform_rule(rule: &Rule, base_colours: usize) -> Result<(Rule, Vec<LegReport>)> {
    for c in rule.k_word() {
        if c >= base_colours {
            return Err(Error::NotChromeImage(rule.name.clone()));
        }
    }
    let lhs = upsilon_normalize_cospan(&rule.lhs);
    let n_in = lhs.inputs.len();
    let legs: Vec<NodeId> = lhs.inputs.iter().chain(lhs.outputs.iter()).copied().collect();
    let mut leg_count = vec![0; lhs.graph.node_count()];
    for v in &legs {
        leg_count[*v] += 1;
    }
    let mut reports = Vec::new();
    // leg -> (edge, inner node)
    let mut absorb: Vec<Option<(EdgeId, NodeId)>> = vec![None; legs.len()];
    for (p, u) in legs.iter().enumerate() {
        let conns = lhs.graph.connections(*u);
        let input = p < n_in;
        if conns.is_empty() && leg_count[*u] == 1 {
            reports.push(LegReport::Plain { leg: p });
            continue;
        }
        if leg_count[*u] != 1 || conns.len() != 1 {
            if conns.iter().any(|c| matches!(lhs.graph.edges[c.edge].label, Label::Chg(..))) {
                reports.push(LegReport::Untouched {
                    leg: p,
                    reason: format!("boundary node has {} legs and {} connections", leg_count[*u], conns.len()),
                });
            } else {
                reports.push(LegReport::Plain { leg: p });
            }
            continue;
        }
        let c = conns[0];
        let e = &lhs.graph.edges[c.edge];
        match (e.label, c.polarity, input) {
            (Label::Chg(a, b), Polarity::Source, true) if a != b => {
                absorb[p] = Some((c.edge, e.targets[0]));
            }
            (Label::Chg(a, b), Polarity::Target, false) if a != b => {
                absorb[p] = Some((c.edge, e.sources[0]));
            }
            (Label::Chg(..), _, _) => reports.push(LegReport::Untouched {
                leg: p,
                reason: "changer points away from the boundary".to_string(),
            }),
            _ => reports.push(LegReport::Plain { leg: p }),
        }
    }

    let mut keep_n = vec![true; lhs.graph.node_count()];
    let mut keep_e = vec![true; lhs.graph.edge_count()];
    for (p, a) in absorb.iter().enumerate() {
        if let Some((e, _)) = a {
            keep_n[legs[p]] = false;
            keep_e[*e] = false;
        }
    }
    let (lg, nmap, _) = lhs.graph.restrict(&keep_n, &keep_e);
    let new_legs: Vec<NodeId> = legs
        .iter()
        .enumerate()
        .map(|(p, u)| match absorb[p] {
            Some((_, x)) => nmap[x].expect("inner node kept"),
            None => nmap[*u].expect("leg node kept"),
        })
        .collect();
    let new_lhs = Cospan { graph: lg, inputs: new_legs[..n_in].to_vec(), outputs: new_legs[n_in..].to_vec() };

    let mut rg = rule.rhs.graph.clone();
    let mut r_legs: Vec<NodeId> = rule.k_to_r();
    for (p, a) in absorb.iter().enumerate() {
        if let Some((e, x)) = a {
            let label = lhs.graph.edges[*e].label;
            let inner = lhs.graph.nodes[*x];
            let outer = rule.rhs.graph.nodes[r_legs[p]];
            let fresh = rg.add_node(inner);
            if p < n_in {
                rg.add_edge(Label::Chg(inner, outer), vec![fresh], vec![r_legs[p]]);
            } else {
                rg.add_edge(Label::Chg(outer, inner), vec![r_legs[p]], vec![fresh]);
            }
            r_legs[p] = fresh;
            reports.push(LegReport::Absorbed { leg: p, changer: label });
        }
    }
    reports.sort_by_key(|r| match r {
        LegReport::Absorbed { leg, .. } | LegReport::Plain { leg } | LegReport::Untouched { leg, .. } => *leg,
    });
    let new_rhs = Cospan { graph: rg, inputs: r_legs[..n_in].to_vec(), outputs: r_legs[n_in..].to_vec() };
    let out = Rule { name: format!("{}◇", rule.name), lhs: new_lhs, rhs: new_rhs };
    debug_assert!(is_upsilon_normal(&out.lhs.fold().0));
    Ok((out, reports))
}

/// A base-level rule given by two terms.
#[derive(Clone, Debug)]
pub struct BaseRule {
    pub name: String,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug)]
pub struct PipelineRun {
    /// Υ-normal form of the chromed host.
    pub start: InterfacedGraph,
    pub result: InterfacedGraph,
    pub log: Vec<LogRecord>,
    pub fixpoint: bool,
    /// Number of inputs of the host, to unfold the result.
    pub n_inputs: usize,
}

/// The rules as used by the pipeline: chromed, and transformed unless
/// `transform` is false.
pub fn pipeline_rules(ps: &PolySignature, rules: &[BaseRule], transform: bool) -> Result<Vec<Rule>> {
    rules
        .iter()
        .map(|r| {
            let c = ps.chrome_rule(&r.name, &r.lhs, &r.rhs)?;
            if transform {
                Ok(transform_rule(&c, ps.base_colours())?.0)
            } else {
                Ok(c)
            }
        })
        .collect()
}

/// chrome, interpret, fold, Υ-normalize, then rewrite with the transformed
/// rules, Υ-normalizing after every step.
pub fn multifrob_rewrite(
    ps: &PolySignature,
    rules: &[BaseRule],
    host: &Term,
    max_steps: usize,
    transform: bool,
) -> Result<PipelineRun> {
    let rs = pipeline_rules(ps, rules, transform)?;
    let (h, n_inputs) = ps.host(host)?;
    let start = upsilon_normalize(&h);
    let mut cur = start.clone();
    let mut log = Vec::new();
    for step in 0..max_steps {
        let mut applied = false;
        for r in &rs {
            if let Some(m) = first_match(r, &cur)? {
                cur = upsilon_normalize(&rewrite_step(r, &m)?);
                log.push(LogRecord::new(step, r, &m));
                applied = true;
                break;
            }
        }
        if !applied {
            return Ok(PipelineRun { start, result: cur, log, fixpoint: true, n_inputs });
        }
    }
    let mut fixpoint = true;
    for r in &rs {
        if first_match(r, &cur)?.is_some() {
            fixpoint = false;
        }
    }
    Ok(PipelineRun { start, result: cur, log, fixpoint, n_inputs })
}

/// Number of nodes per colour; handy in reports.
pub fn colour_histogram(g: &Hypergraph, colours: usize) -> Vec<usize> {
    let mut h = vec![0; colours];
    for c in &g.nodes {
        if *c < colours {
            h[*c] += 1;
        }
    }
    h
}
