//! GF(2) linear relations: subspaces in reduced row-echelon form, and the
//! reading of two-coloured graphs as linear relations.
//!
//! Coordinates are the interface legs in order (inputs, then outputs). A
//! black node is a variable, a red node a parity equation over everything
//! attached to it.

use std::fmt;

use crate::cospan::InterfacedGraph;
use crate::error::{Error, Result};
use crate::hypergraph::{Label, NodeId};
use crate::signature::ColourId;

type Row = Vec<u64>;

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn get(r: &[u64], i: usize) -> bool {
    r[i / 64] >> (i % 64) & 1 == 1
}

fn flip(r: &mut [u64], i: usize) {
    r[i / 64] ^= 1 << (i % 64);
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src.iter()) {
        *a ^= *b;
    }
}

fn is_zero(r: &[u64]) -> bool {
    r.iter().all(|w| *w == 0)
}

/// Row-reduces in place; returns the pivot column of each remaining row.
/// Columns are visited in the order given.
fn rref(rows: &mut Vec<Row>, order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for &col in order {
        let Some(p) = (top..rows.len()).find(|i| get(&rows[*i], col)) else {
            continue;
        };
        rows.swap(top, p);
        let pivot = rows[top].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != top && get(r, col) {
                xor_into(r, &pivot);
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    pivots
}

/// A subspace of GF(2)^dim, stored as its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace2 {
    pub dim: usize,
    rows: Vec<Row>,
}

impl Subspace2 {
    pub fn zero(dim: usize) -> Subspace2 {
        Subspace2 { dim, rows: Vec::new() }
    }

    pub fn full(dim: usize) -> Subspace2 {
        let vs: Vec<Vec<bool>> = (0..dim).map(|i| (0..dim).map(|j| i == j).collect()).collect();
        Subspace2::span(dim, &vs)
    }

    pub fn span(dim: usize, vectors: &[Vec<bool>]) -> Subspace2 {
        let rows = vectors
            .iter()
            .map(|v| {
                let mut r = vec![0u64; words(dim)];
                for (i, b) in v.iter().enumerate() {
                    if *b {
                        flip(&mut r, i);
                    }
                }
                r
            })
            .collect();
        Subspace2::from_rows(dim, rows)
    }

    fn from_rows(dim: usize, mut rows: Vec<Row>) -> Subspace2 {
        rows.retain(|r| !is_zero(r));
        let order: Vec<usize> = (0..dim).collect();
        rref(&mut rows, &order);
        Subspace2 { dim, rows }
    }

    /// Solution space of the homogeneous system with the given rows.
    pub fn solutions(dim: usize, equations: &[Vec<bool>]) -> Subspace2 {
        Subspace2::span(dim, equations).orthogonal_complement()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<Vec<bool>> {
        self.rows.iter().map(|r| (0..self.dim).map(|i| get(r, i)).collect()).collect()
    }

    pub fn contains(&self, v: &[bool]) -> bool {
        let mut s = self.rows.clone();
        let mut r = vec![0u64; words(self.dim)];
        for (i, b) in v.iter().enumerate() {
            if *b {
                flip(&mut r, i);
            }
        }
        s.push(r);
        Subspace2::from_rows(self.dim, s).rank() == self.rank()
    }

    /// `{ x : x . s = 0 for all s in self }`.
    pub fn orthogonal_complement(&self) -> Subspace2 {
        let pivots: Vec<usize> = self
            .rows
            .iter()
            .map(|r| (0..self.dim).find(|i| get(r, *i)).expect("non-zero row"))
            .collect();
        let mut out = Vec::new();
        for free in (0..self.dim).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; words(self.dim)];
            flip(&mut v, free);
            for (r, p) in self.rows.iter().zip(pivots.iter()) {
                if get(r, free) {
                    flip(&mut v, *p);
                }
            }
            out.push(v);
        }
        Subspace2::from_rows(self.dim, out)
    }

    /// Every vector of the subspace; only for small ranks.
    pub fn elements(&self) -> Vec<Vec<bool>> {
        let b = self.basis();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << b.len()) {
            let mut v = vec![false; self.dim];
            for (i, row) in b.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(row.iter()) {
                        *x ^= *y;
                    }
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn subspace_equal(a: &Subspace2, b: &Subspace2) -> bool {
    a == b
}

impl fmt::Display for Subspace2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis()
            .iter()
            .map(|v| v.iter().map(|b| if *b { '1' } else { '0' }).collect())
            .collect();
        write!(f, "span{{{}}} in GF(2)^{}", rows.join(", "), self.dim)
    }
}

/// The two colours of an IB graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IbColours {
    /// Variables.
    pub black: ColourId,
    /// Parity equations.
    pub red: ColourId,
}

impl IbColours {
    pub fn swapped(self) -> IbColours {
        IbColours { black: self.red, red: self.black }
    }
}

fn check_ib(g: &InterfacedGraph, c: IbColours) -> Result<()> {
    for (v, col) in g.graph.nodes.iter().enumerate() {
        if *col != c.black && *col != c.red {
            return Err(Error::Model(format!("node {v} has a colour outside the two IB colours")));
        }
    }
    for (i, e) in g.graph.edges.iter().enumerate() {
        if !matches!(e.label, Label::Chg(..)) {
            return Err(Error::Model(format!("edge {i} is not a colour changer")));
        }
    }
    Ok(())
}

/// Linear system: each row over `legs + internal` columns.
struct System {
    legs: usize,
    cols: usize,
    rows: Vec<Row>,
}

impl System {
    fn row(&mut self, vars: &[usize]) {
        let mut r = vec![0u64; words(self.cols)];
        for v in vars {
            flip(&mut r, *v);
        }
        self.rows.push(r);
    }

    /// Eliminates the internal columns; the rows left over span S-perp.
    fn project(mut self) -> Subspace2 {
        let order: Vec<usize> = (self.legs..self.cols).chain(0..self.legs).collect();
        let pivots = rref(&mut self.rows, &order);
        let mut eqs = Vec::new();
        for (r, p) in self.rows.iter().zip(pivots.iter()) {
            if *p < self.legs {
                eqs.push((0..self.legs).map(|i| get(r, i)).collect::<Vec<bool>>());
            }
        }
        Subspace2::span(self.legs, &eqs)
    }
}

/// The annihilator `S⊥` of the relation denoted by an IB graph, obtained by
/// eliminating the interior variables.
pub fn ib_equations(g: &InterfacedGraph, c: IbColours) -> Result<Subspace2> {
    check_ib(g, c)?;
    let legs = g.interface.len();
    let mut col = legs;
    let mut black_var = vec![usize::MAX; g.graph.node_count()];
    for (v, colour) in g.graph.nodes.iter().enumerate() {
        if *colour == c.black {
            black_var[v] = col;
            col += 1;
        }
    }
    // a changer between two red nodes shares one fresh variable
    let mut edge_var = vec![usize::MAX; g.graph.edge_count()];
    for (i, e) in g.graph.edges.iter().enumerate() {
        if g.graph.nodes[e.sources[0]] == c.red && g.graph.nodes[e.targets[0]] == c.red {
            edge_var[i] = col;
            col += 1;
        }
    }
    let mut sys = System { legs, cols: col, rows: Vec::new() };
    let mut red_terms: Vec<Vec<usize>> = vec![Vec::new(); g.graph.node_count()];
    for (p, v) in g.interface.iter().enumerate() {
        if g.graph.nodes[*v] == c.black {
            sys.row(&[p, black_var[*v]]);
        } else {
            red_terms[*v].push(p);
        }
    }
    for (i, e) in g.graph.edges.iter().enumerate() {
        let (s, t) = (e.sources[0], e.targets[0]);
        match (g.graph.nodes[s] == c.black, g.graph.nodes[t] == c.black) {
            (true, true) => sys.row(&[black_var[s], black_var[t]]),
            (true, false) => red_terms[t].push(black_var[s]),
            (false, true) => red_terms[s].push(black_var[t]),
            (false, false) => {
                red_terms[s].push(edge_var[i]);
                red_terms[t].push(edge_var[i]);
            }
        }
    }
    for (v, terms) in red_terms.iter().enumerate() {
        if g.graph.nodes[v] == c.red {
            sys.row(terms);
        }
    }
    Ok(sys.project())
}

/// The subspace `S` denoted by an IB graph.
pub fn ib_subspace(g: &InterfacedGraph, c: IbColours) -> Result<Subspace2> {
    Ok(ib_equations(g, c)?.orthogonal_complement())
}

fn legs_by_node(g: &InterfacedGraph) -> Vec<Vec<usize>> {
    let mut l = vec![Vec::new(); g.graph.node_count()];
    for (p, v) in g.interface.iter().enumerate() {
        l[*v].push(p);
    }
    l
}

/// Edge multiplicity mod 2 between each pair of differently coloured nodes.
fn adjacency_mod2(g: &InterfacedGraph) -> Vec<Vec<NodeId>> {
    let n = g.graph.node_count();
    let mut count = std::collections::BTreeMap::new();
    for e in &g.graph.edges {
        let (a, b) = (e.sources[0], e.targets[0]);
        let key = (a.min(b), a.max(b));
        *count.entry(key).or_insert(0usize) += 1;
    }
    let mut adj = vec![Vec::new(); n];
    for ((a, b), k) in count {
        if k % 2 == 1 && a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    adj
}

/// Cospan-form read-off of a reduced graph: one equation per red node over
/// the legs of its black neighbours, plus equalities between legs sharing a
/// black node. Returns the span of the equations, a basis of `S⊥`.
pub fn readoff_equations(g: &InterfacedGraph, c: IbColours) -> Result<Subspace2> {
    check_ib(g, c)?;
    let legs = legs_by_node(g);
    let adj = adjacency_mod2(g);
    let dim = g.interface.len();
    let mut eqs = Vec::new();
    for (v, colour) in g.graph.nodes.iter().enumerate() {
        if *colour == c.black {
            if legs[v].is_empty() {
                return Err(Error::Graph(format!("node {v} is interior; the graph is not reduced")));
            }
            for q in &legs[v][1..] {
                let mut e = vec![false; dim];
                e[legs[v][0]] = true;
                e[*q] ^= true;
                eqs.push(e);
            }
        }
    }
    for (v, colour) in g.graph.nodes.iter().enumerate() {
        if *colour == c.red {
            let mut e = vec![false; dim];
            for p in &legs[v] {
                e[*p] ^= true;
            }
            for b in &adj[v] {
                if g.graph.nodes[*b] == c.black {
                    e[legs[*b][0]] ^= true;
                }
            }
            eqs.push(e);
        }
    }
    Ok(Subspace2::span(dim, &eqs))
}

/// Span-form read-off of a colour-swapped reduced graph (`c` names the
/// colours as in the original run): every black node is a generator with a
/// one on the first leg of each adjacent red node, and legs sharing a red
/// node contribute their pairwise sums. Returns `S`.
pub fn readoff_span(g: &InterfacedGraph, c: IbColours) -> Result<Subspace2> {
    check_ib(g, c)?;
    let legs = legs_by_node(g);
    let adj = adjacency_mod2(g);
    let dim = g.interface.len();
    let mut gens = Vec::new();
    for (v, colour) in g.graph.nodes.iter().enumerate() {
        if *colour == c.red {
            if legs[v].is_empty() {
                return Err(Error::Graph(format!("node {v} is interior; the graph is not reduced")));
            }
            for q in &legs[v][1..] {
                let mut e = vec![false; dim];
                e[legs[v][0]] = true;
                e[*q] ^= true;
                gens.push(e);
            }
        }
    }
    for (v, colour) in g.graph.nodes.iter().enumerate() {
        if *colour == c.black {
            let mut e = vec![false; dim];
            for p in &legs[v] {
                e[*p] ^= true;
            }
            for r in &adj[v] {
                if g.graph.nodes[*r] == c.red {
                    e[legs[*r][0]] ^= true;
                }
            }
            gens.push(e);
        }
    }
    Ok(Subspace2::span(dim, &gens))
}

/// `S` read directly off a reduced graph without elimination.
pub fn readoff_reduced(g: &InterfacedGraph, c: IbColours) -> Result<Subspace2> {
    Ok(readoff_equations(g, c)?.orthogonal_complement())
}
