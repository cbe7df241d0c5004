//! Finite relational models. Every colour gets a finite carrier and a spider
//! kind; every generator a relation. Diagrams are evaluated either directly
//! on the graph (constraint search over node values) or compositionally on
//! terms, and the two must agree.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::cospan::Cospan;
use crate::error::{Error, Result};
use crate::hypergraph::Label;
use crate::signature::{ColourId, FrobKind, GenId, Signature, Word};
use crate::term::Term;
use crate::unionfind::UnionFind;

/// Upper bound on the number of partial assignments one evaluation may try.
pub const EVAL_LIMIT: u64 = 50_000_000;

/// How the Frobenius spiders of a colour are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpiderKind {
    /// Copy spiders: every leg carries the same value.
    Equal,
    /// Parity spiders over a carrier of size 2: the legs sum to zero.
    Parity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModel {
    pub carriers: Vec<usize>,
    pub spiders: Vec<SpiderKind>,
    pub relations: Vec<BTreeSet<Vec<usize>>>,
}

/// A relation between tuples over `dom` and tuples over `cod`; each tuple
/// lists the domain values followed by the codomain values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub dom: Word,
    pub cod: Word,
    pub tuples: BTreeSet<Vec<usize>>,
}

fn all_tuples(carriers: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &k in carriers {
        let mut next = Vec::with_capacity(out.len() * k);
        for t in &out {
            for x in 0..k {
                let mut u = t.clone();
                u.push(x);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

impl Relation {
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        if self.cod != other.dom {
            return Err(Error::TypeMismatch("relation composite with mismatched middle".into()));
        }
        let n = self.dom.len();
        let m = self.cod.len();
        let mut by_input: HashMap<&[usize], Vec<&[usize]>> = HashMap::new();
        for t in &other.tuples {
            by_input.entry(&t[..m]).or_default().push(&t[m..]);
        }
        let mut tuples = BTreeSet::new();
        for t in &self.tuples {
            if let Some(outs) = by_input.get(&t[n..]) {
                for o in outs {
                    let mut u = t[..n].to_vec();
                    u.extend_from_slice(o);
                    tuples.insert(u);
                }
            }
        }
        Ok(Relation { dom: self.dom.clone(), cod: other.cod.clone(), tuples })
    }

    pub fn tensor(&self, other: &Relation) -> Relation {
        let (n1, n2) = (self.dom.len(), other.dom.len());
        let mut tuples = BTreeSet::new();
        for a in &self.tuples {
            for b in &other.tuples {
                let mut u = a[..n1].to_vec();
                u.extend_from_slice(&b[..n2]);
                u.extend_from_slice(&a[n1..]);
                u.extend_from_slice(&b[n2..]);
                tuples.insert(u);
            }
        }
        let mut dom = self.dom.clone();
        dom.extend_from_slice(&other.dom);
        let mut cod = self.cod.clone();
        cod.extend_from_slice(&other.cod);
        Relation { dom, cod, tuples }
    }
}

impl FiniteModel {
    pub fn new(sig: &Signature, carriers: Vec<usize>, spiders: Vec<SpiderKind>) -> Result<FiniteModel> {
        if carriers.len() != sig.colours.len() || spiders.len() != sig.colours.len() {
            return Err(Error::Model("one carrier and spider kind per colour expected".into()));
        }
        let m = FiniteModel { carriers, spiders, relations: vec![BTreeSet::new(); sig.generators.len()] };
        for c in 0..m.carriers.len() {
            if m.spiders[c] == SpiderKind::Parity && m.carriers[c] != 2 {
                return Err(Error::Model(format!("parity spiders need a carrier of size 2 on `{}`", sig.colour_name(c))));
            }
        }
        Ok(m)
    }

    pub fn set_relation(&mut self, sig: &Signature, g: GenId, tuples: impl IntoIterator<Item = Vec<usize>>) -> Result<()> {
        let gen = sig.generator(g);
        let colours: Vec<ColourId> = gen.arity.iter().chain(gen.coarity.iter()).copied().collect();
        let mut set = BTreeSet::new();
        for t in tuples {
            if t.len() != colours.len() || t.iter().zip(colours.iter()).any(|(x, c)| *x >= self.carriers[*c]) {
                return Err(Error::Model(format!("tuple {t:?} does not fit `{}`", gen.name)));
            }
            set.insert(t);
        }
        self.relations[g] = set;
        Ok(())
    }

    /// The group `Z/n` on a monochrome signature with `m`, `i`, `u`.
    pub fn cyclic_group(sig: &Signature, n: usize) -> Result<FiniteModel> {
        let mut model = FiniteModel::new(sig, vec![n; sig.colours.len()], vec![SpiderKind::Equal; sig.colours.len()])?;
        let m = sig.gen_id("m")?;
        let i = sig.gen_id("i")?;
        let u = sig.gen_id("u")?;
        let mult = (0..n).flat_map(|a| (0..n).map(move |b| vec![a, b, (a + b) % n]));
        model.set_relation(sig, m, mult)?;
        model.set_relation(sig, i, (0..n).map(|a| vec![a, (n - a) % n]))?;
        model.set_relation(sig, u, [vec![0]])?;
        Ok(model)
    }

    /// GF(2) reading: every colour copies except `red`, which adds.
    pub fn ib(sig: &Signature, red: ColourId) -> Result<FiniteModel> {
        let mut spiders = vec![SpiderKind::Equal; sig.colours.len()];
        spiders[red] = SpiderKind::Parity;
        FiniteModel::new(sig, vec![2; sig.colours.len()], spiders)
    }

    fn check_changer(&self, sig: &Signature, a: ColourId, b: ColourId) -> Result<()> {
        if self.carriers[a] != self.carriers[b] {
            return Err(Error::Model(format!(
                "changer between `{}` and `{}` needs equal carriers",
                sig.colour_name(a),
                sig.colour_name(b)
            )));
        }
        Ok(())
    }

    fn spider(&self, c: ColourId, n: usize, m: usize) -> Relation {
        let k = self.carriers[c];
        let tuples = match self.spiders[c] {
            SpiderKind::Equal => (0..k).map(|x| vec![x; n + m]).collect(),
            SpiderKind::Parity => all_tuples(&vec![2; n + m])
                .into_iter()
                .filter(|t| t.iter().sum::<usize>() % 2 == 0)
                .collect(),
        };
        Relation { dom: vec![c; n], cod: vec![c; m], tuples }
    }

    pub fn identity(&self, w: &[ColourId]) -> Relation {
        let carriers: Vec<usize> = w.iter().map(|c| self.carriers[*c]).collect();
        let tuples = all_tuples(&carriers)
            .into_iter()
            .map(|mut t| {
                let copy = t.clone();
                t.extend(copy);
                t
            })
            .collect();
        Relation { dom: w.to_vec(), cod: w.to_vec(), tuples }
    }

    /// Compositional evaluation of a term.
    pub fn eval_term(&self, sig: &Signature, t: &Term) -> Result<Relation> {
        match t {
            Term::Gen(g) => {
                let gen = sig.generator(*g);
                Ok(Relation { dom: gen.arity.clone(), cod: gen.coarity.clone(), tuples: self.relations[*g].clone() })
            }
            Term::Id(w) => Ok(self.identity(w)),
            Term::Sym(v, w) => {
                let mut dom = v.clone();
                dom.extend_from_slice(w);
                let mut cod = w.clone();
                cod.extend_from_slice(v);
                let carriers: Vec<usize> = dom.iter().map(|c| self.carriers[*c]).collect();
                let tuples = all_tuples(&carriers)
                    .into_iter()
                    .map(|mut t| {
                        let swapped: Vec<usize> = t[v.len()..].iter().chain(t[..v.len()].iter()).copied().collect();
                        t.extend(swapped);
                        t
                    })
                    .collect();
                Ok(Relation { dom, cod, tuples })
            }
            Term::Frob(c, k) => {
                if !sig.has_frobenius(*c) {
                    return Err(Error::NoFrobenius(sig.colour_name(*c).to_string()));
                }
                let (n, m) = k.shape();
                Ok(self.spider(*c, n, m))
            }
            Term::Chg(a, b) => {
                self.check_changer(sig, *a, *b)?;
                let mut r = self.identity(&[*a]);
                r.cod = vec![*b];
                Ok(r)
            }
            Term::Seq(a, b) => self.eval_term(sig, a)?.compose(&self.eval_term(sig, b)?),
            Term::Par(a, b) => Ok(self.eval_term(sig, a)?.tensor(&self.eval_term(sig, b)?)),
        }
    }

    /// Evaluation of a cospan by searching for consistent value assignments.
    /// Equal-spider nodes hold one value; parity nodes hold one value per
    /// attachment, constrained to sum to zero.
    pub fn eval_cospan(&self, sig: &Signature, c: &Cospan) -> Result<Relation> {
        let g = &c.graph;
        let n = g.node_count();
        let mut slot_colour: Vec<ColourId> = Vec::new();
        let mut node_slot = vec![usize::MAX; n];
        let new_slot = |col: ColourId, slots: &mut Vec<ColourId>| {
            slots.push(col);
            slots.len() - 1
        };
        for v in 0..n {
            if self.spiders[g.nodes[v]] == SpiderKind::Equal {
                node_slot[v] = new_slot(g.nodes[v], &mut slot_colour);
            }
        }
        let mut parity_members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut attach = |v: usize, slots: &mut Vec<ColourId>| -> usize {
            if node_slot[v] != usize::MAX {
                node_slot[v]
            } else {
                let s = new_slot(g.nodes[v], slots);
                parity_members.entry(v).or_default().push(s);
                s
            }
        };
        let mut edge_slots = Vec::with_capacity(g.edge_count());
        for e in &g.edges {
            let s: Vec<usize> = e.sources.iter().map(|v| attach(*v, &mut slot_colour)).collect();
            let t: Vec<usize> = e.targets.iter().map(|v| attach(*v, &mut slot_colour)).collect();
            edge_slots.push((s, t));
        }
        let leg_slots: Vec<usize> = c
            .inputs
            .iter()
            .chain(c.outputs.iter())
            .map(|v| attach(*v, &mut slot_colour))
            .collect();

        let mut uf = UnionFind::new(slot_colour.len());
        let mut gen_constraints = Vec::new();
        for (e, (s, t)) in g.edges.iter().zip(edge_slots.iter()) {
            match &e.label {
                Label::Chg(a, b) => {
                    self.check_changer(sig, *a, *b)?;
                    uf.union(s[0], t[0]);
                }
                Label::Gen(id) => {
                    let slots: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
                    gen_constraints.push((*id, slots));
                }
            }
        }
        // variables are union-find classes
        let mut var_of = vec![usize::MAX; slot_colour.len()];
        let mut nvars = 0;
        for s in 0..slot_colour.len() {
            let r = uf.find(s);
            if var_of[r] == usize::MAX {
                var_of[r] = nvars;
                nvars += 1;
            }
            var_of[s] = var_of[r];
        }
        let mut scopes: Vec<Vec<usize>> = gen_constraints.iter().map(|(_, sl)| sl.iter().map(|s| var_of[*s]).collect()).collect();
        scopes.extend(parity_members.values().map(|m| m.iter().map(|s| var_of[*s]).collect::<Vec<usize>>()));
        let rank = search_order(nvars, &scopes);
        let mut domain = vec![0usize; nvars];
        for s in 0..slot_colour.len() {
            domain[rank[var_of[s]]] = self.carriers[slot_colour[s]];
        }

        // each generator relation as a dense table over mixed-radix tuples
        let mut tables: BTreeMap<usize, (Vec<usize>, Vec<bool>)> = BTreeMap::new();
        for (id, _) in &gen_constraints {
            tables.entry(*id).or_insert_with(|| {
                let gen = sig.generator(*id);
                let mut weights = Vec::new();
                let mut size = 1;
                for col in gen.arity.iter().chain(gen.coarity.iter()) {
                    weights.push(size);
                    size *= self.carriers[*col];
                }
                let mut table = vec![false; size];
                for t in &self.relations[*id] {
                    table[t.iter().zip(&weights).map(|(x, w)| x * w).sum::<usize>()] = true;
                }
                (weights, table)
            });
        }
        enum Constraint<'a> {
            Rel(&'a [usize], &'a [bool], Vec<usize>),
            Parity(Vec<usize>),
        }
        let mut buckets: Vec<Vec<Constraint>> = (0..=nvars).map(|_| Vec::new()).collect();
        let bucket = |vars: &[usize]| vars.iter().max().map(|m| m + 1).unwrap_or(0);
        let n_gen = gen_constraints.len();
        for (k, vars) in scopes.into_iter().enumerate() {
            let vars: Vec<usize> = vars.iter().map(|v| rank[*v]).collect();
            let b = bucket(&vars);
            if k < n_gen {
                let (weights, table) = &tables[&gen_constraints[k].0];
                buckets[b].push(Constraint::Rel(weights, table, vars));
            } else {
                buckets[b].push(Constraint::Parity(vars));
            }
        }
        let holds = |c: &Constraint, vals: &[usize]| match c {
            Constraint::Rel(weights, table, vars) => table[vars.iter().zip(weights.iter()).map(|(v, w)| vals[*v] * w).sum::<usize>()],
            Constraint::Parity(vars) => vars.iter().map(|v| vals[*v]).sum::<usize>() % 2 == 0,
        };
        if !buckets[0].iter().all(|c| holds(c, &[])) {
            return Ok(Relation { dom: c.dom(), cod: c.cod(), tuples: BTreeSet::new() });
        }
        let leg_vars: Vec<usize> = leg_slots.iter().map(|s| rank[var_of[*s]]).collect();
        let mut tuples = BTreeSet::new();
        let mut vals = vec![0usize; nvars];
        // iterative depth-first search
        let mut depth = 0usize;
        let mut next = vec![0usize; nvars + 1];
        let mut tried = 0u64;
        if nvars == 0 {
            tuples.insert(Vec::new());
        }
        while depth < nvars {
            if next[depth] >= domain[depth] {
                next[depth] = 0;
                if depth == 0 {
                    break;
                }
                depth -= 1;
                continue;
            }
            tried += 1;
            if tried > EVAL_LIMIT {
                return Err(Error::TooLarge(format!("{nvars} variables, more than {EVAL_LIMIT} partial assignments")));
            }
            vals[depth] = next[depth];
            next[depth] += 1;
            if buckets[depth + 1].iter().all(|c| holds(c, &vals)) {
                if depth + 1 == nvars {
                    tuples.insert(leg_vars.iter().map(|v| vals[*v]).collect());
                } else {
                    depth += 1;
                }
            }
        }
        Ok(Relation { dom: c.dom(), cod: c.cod(), tuples })
    }

    pub fn from_json(sig: &Signature, v: &serde_json::Value) -> Result<FiniteModel> {
        let file: ModelFile = serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))?;
        let mut carriers = vec![0; sig.colours.len()];
        let mut spiders = vec![SpiderKind::Equal; sig.colours.len()];
        for (name, k) in &file.carriers {
            carriers[sig.colour_id(name)?] = *k;
        }
        for (name, s) in &file.spiders {
            spiders[sig.colour_id(name)?] = *s;
        }
        if let Some(c) = carriers.iter().position(|k| *k == 0) {
            return Err(Error::Model(format!("no carrier for colour `{}`", sig.colour_name(c))));
        }
        let mut model = FiniteModel::new(sig, carriers, spiders)?;
        for (name, tuples) in file.relations {
            let g = sig.gen_id(&name)?;
            model.set_relation(sig, g, tuples)?;
        }
        Ok(model)
    }

    pub fn to_json(&self, sig: &Signature) -> serde_json::Value {
        let file = ModelFile {
            carriers: (0..self.carriers.len()).map(|c| (sig.colour_name(c).to_string(), self.carriers[c])).collect(),
            spiders: (0..self.spiders.len()).map(|c| (sig.colour_name(c).to_string(), self.spiders[c])).collect(),
            relations: self
                .relations
                .iter()
                .enumerate()
                .map(|(g, r)| (sig.generator(g).name.clone(), r.iter().cloned().collect()))
                .collect(),
        };
        serde_json::to_value(file).expect("model serialises")
    }
}

/// On-disk model format: carriers and spider kinds per colour name, and the
/// tuples of each generator (inputs then outputs).
#[derive(Serialize, Deserialize)]
struct ModelFile {
    carriers: BTreeMap<String, usize>,
    #[serde(default)]
    spiders: BTreeMap<String, SpiderKind>,
    #[serde(default)]
    relations: BTreeMap<String, Vec<Vec<usize>>>,
}

/// The relation of a term, computed from its cospan.
pub fn eval_graph(model: &FiniteModel, sig: &Signature, c: &Cospan) -> Result<Relation> {
    model.eval_cospan(sig, c)
}

/// Returns the tuples of a relation whose carriers are all of size 2 as
/// bit vectors, for comparison with GF(2) subspaces.
pub fn relation_bits(r: &Relation) -> Vec<Vec<bool>> {
    r.tuples.iter().map(|t| t.iter().map(|x| *x == 1).collect()).collect()
}

/// Spider shapes used in tests and examples.
pub fn frob_relation(model: &FiniteModel, c: ColourId, k: FrobKind) -> Relation {
    let (n, m) = k.shape();
    model.spider(c, n, m)
}

/// Greedy variable order for the search: the next variable is the one that
/// completes the most constraints, then the one touching the most chosen
/// variables. Returns the position of each variable.
fn search_order(nvars: usize, scopes: &[Vec<usize>]) -> Vec<usize> {
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); nvars];
    for (k, sc) in scopes.iter().enumerate() {
        for v in sc {
            if touching[*v].last() != Some(&k) {
                touching[*v].push(k);
            }
        }
    }
    let size: Vec<usize> = scopes.iter().map(|sc| sc.iter().collect::<BTreeSet<_>>().len()).collect();
    let mut missing = size.clone();
    let mut rank = vec![usize::MAX; nvars];
    for pos in 0..nvars {
        let best = (0..nvars)
            .filter(|v| rank[*v] == usize::MAX)
            .max_by_key(|v| {
                let done = touching[*v].iter().filter(|k| missing[**k] == 1).count();
                let near = touching[*v].iter().filter(|k| missing[**k] < size[**k]).count();
                (done, near, std::cmp::Reverse(*v))
            })
            .expect("unranked variable left");
        rank[best] = pos;
        for k in &touching[best] {
            missing[*k] -= 1;
        }
    }
    rank
}
