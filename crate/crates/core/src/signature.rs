//! Coloured monoidal signatures and their signature hypergraphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Label};

pub type ColourId = usize;
pub type GenId = usize;
pub type Word = Vec<ColourId>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colour {
    pub id: ColourId,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: GenId,
    pub name: String,
    pub arity: Word,
    pub coarity: Word,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FrobKind {
    Mult,
    Unit,
    Comult,
    Counit,
}

impl FrobKind {
    pub const ALL: [FrobKind; 4] = [FrobKind::Mult, FrobKind::Unit, FrobKind::Comult, FrobKind::Counit];

    pub fn name(self) -> &'static str {
        match self {
            FrobKind::Mult => "mult",
            FrobKind::Unit => "unit",
            FrobKind::Comult => "comult",
            FrobKind::Counit => "counit",
        }
    }

    /// Number of (inputs, outputs) of the generator.
    pub fn shape(self) -> (usize, usize) {
        match self {
            FrobKind::Mult => (2, 1),
            FrobKind::Unit => (0, 1),
            FrobKind::Comult => (1, 2),
            FrobKind::Counit => (1, 0),
        }
    }
}

/// A second (third, ...) Frobenius structure on `host`, written with ordinary
/// generators. The polychromatic interpretation moves it onto its own colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobFamily {
    pub colour: String,
    pub host: ColourId,
    pub mult: GenId,
    pub unit: GenId,
    pub comult: GenId,
    pub counit: GenId,
}

impl FrobFamily {
    pub fn kind_of(&self, g: GenId) -> Option<FrobKind> {
        if g == self.mult {
            Some(FrobKind::Mult)
        } else if g == self.unit {
            Some(FrobKind::Unit)
        } else if g == self.comult {
            Some(FrobKind::Comult)
        } else if g == self.counit {
            Some(FrobKind::Counit)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Signature {
    pub colours: Vec<Colour>,
    pub generators: Vec<Generator>,
    /// `frobenius[c]` is true when colour `c` carries a chosen Frobenius algebra.
    pub frobenius: Vec<bool>,
    pub families: Vec<FrobFamily>,
}

impl Signature {
    /// Signature with the given colours, all carrying Frobenius structure.
    pub fn new(colours: &[&str]) -> Signature {
        Signature {
            colours: colours
                .iter()
                .enumerate()
                .map(|(id, n)| Colour { id, name: n.to_string() })
                .collect(),
            generators: Vec::new(),
            frobenius: vec![true; colours.len()],
            families: Vec::new(),
        }
    }

    /// The single-colour case; the colour is named `w`.
    pub fn monochrome() -> Signature {
        Signature::new(&["w"])
    }

    pub fn add_colour(&mut self, name: &str, frobenius: bool) -> ColourId {
        let id = self.colours.len();
        self.colours.push(Colour { id, name: name.to_string() });
        self.frobenius.push(frobenius);
        id
    }

    /// Appends a generator without checking; see [`Signature::validate`].
    pub fn add_generator(&mut self, name: &str, arity: Word, coarity: Word) -> GenId {
        let id = self.generators.len();
        self.generators.push(Generator { id, name: name.to_string(), arity, coarity });
        id
    }

    /// Monochrome shorthand: `n` inputs and `m` outputs on colour 0.
    pub fn add_mono(&mut self, name: &str, n: usize, m: usize) -> GenId {
        self.add_generator(name, vec![0; n], vec![0; m])
    }

    /// Declares a further Frobenius family on `host`, adding its four generators.
    pub fn add_family(&mut self, colour: &str, host: ColourId, names: [&str; 4]) -> usize {
        let h = host;
        let mult = self.add_generator(names[0], vec![h, h], vec![h]);
        let unit = self.add_generator(names[1], vec![], vec![h]);
        let comult = self.add_generator(names[2], vec![h], vec![h, h]);
        let counit = self.add_generator(names[3], vec![h], vec![]);
        self.families.push(FrobFamily { colour: colour.to_string(), host, mult, unit, comult, counit });
        self.families.len() - 1
    }

    pub fn colour_id(&self, name: &str) -> Result<ColourId> {
        self.colours
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.id)
            .ok_or_else(|| Error::UnknownColour(name.to_string()))
    }

    pub fn colour_name(&self, c: ColourId) -> &str {
        self.colours.get(c).map(|c| c.name.as_str()).unwrap_or("?")
    }

    pub fn gen_id(&self, name: &str) -> Result<GenId> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .map(|g| g.id)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn generator(&self, g: GenId) -> &Generator {
        &self.generators[g]
    }

    pub fn has_frobenius(&self, c: ColourId) -> bool {
        self.frobenius.get(c).copied().unwrap_or(false)
    }

    pub fn family_of(&self, g: GenId) -> Option<(usize, FrobKind)> {
        self.families.iter().enumerate().find_map(|(i, f)| f.kind_of(g).map(|k| (i, k)))
    }

    pub fn word_name(&self, w: &[ColourId]) -> String {
        if w.is_empty() {
            return "0".to_string();
        }
        w.iter().map(|c| self.colour_name(*c)).collect::<Vec<_>>().join(" ")
    }

    /// Label name as used in files: generator name or `chg[c1,c2]`.
    pub fn label_name(&self, l: &Label) -> String {
        match l {
            Label::Gen(g) => self.generators[*g].name.clone(),
            Label::Chg(a, b) => format!("chg[{},{}]", self.colour_name(*a), self.colour_name(*b)),
        }
    }

    pub fn parse_label(&self, s: &str) -> Result<Label> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("chg[") {
            let inner = rest.strip_suffix(']').ok_or_else(|| Error::Format(format!("bad label `{s}`")))?;
            let mut parts = inner.split(',');
            let a = parts.next().unwrap_or("").trim();
            let b = parts.next().unwrap_or("").trim();
            if parts.next().is_some() {
                return Err(Error::Format(format!("bad label `{s}`")));
            }
            return Ok(Label::Chg(self.colour_id(a)?, self.colour_id(b)?));
        }
        Ok(Label::Gen(self.gen_id(s)?))
    }

    /// Arity and coarity of a label.
    pub fn label_type(&self, l: &Label) -> (Word, Word) {
        match l {
            Label::Gen(g) => (self.generators[*g].arity.clone(), self.generators[*g].coarity.clone()),
            Label::Chg(a, b) => (vec![*a], vec![*b]),
        }
    }

    /// Lists every invariant violation; empty means valid.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (i, c) in self.colours.iter().enumerate() {
            if c.id != i {
                out.push(format!("colour `{}` has id {} at position {}", c.name, c.id, i));
            }
            if self.colours[..i].iter().any(|d| d.name == c.name) {
                out.push(format!("duplicate colour `{}`", c.name));
            }
        }
        if self.frobenius.len() != self.colours.len() {
            out.push("frobenius flags do not match colours".to_string());
        }
        for (i, g) in self.generators.iter().enumerate() {
            if self.generators[..i].iter().any(|h| h.name == g.name) {
                out.push(format!("duplicate generator `{}`", g.name));
            }
            for c in g.arity.iter().chain(g.coarity.iter()) {
                if *c >= self.colours.len() {
                    out.push(format!("undeclared colour {} in generator `{}`", c, g.name));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Signature(v.join("; ")))
        }
    }

    /// One node per colour, one edge per generator.
    pub fn signature_graph(&self) -> Hypergraph {
        let mut g = Hypergraph::new();
        for c in &self.colours {
            g.add_node(c.id);
        }
        for gen in &self.generators {
            g.add_edge(Label::Gen(gen.id), gen.arity.clone(), gen.coarity.clone());
        }
        g
    }

    /// Parses the text or JSON signature format.
    pub fn parse(src: &str) -> Result<Signature> {
        if src.trim_start().starts_with('{') {
            let f: SignatureFile = serde_json::from_str(src).map_err(|e| Error::Format(e.to_string()))?;
            return f.into_signature();
        }
        parse_text(src)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let f = SignatureFile {
            colours: self.colours.iter().map(|c| c.name.clone()).collect(),
            frobenius: Some(
                self.colours.iter().filter(|c| self.frobenius[c.id]).map(|c| c.name.clone()).collect(),
            ),
            generators: self
                .generators
                .iter()
                .filter(|g| self.family_of(g.id).is_none())
                .map(|g| GeneratorFile {
                    name: g.name.clone(),
                    arity: g.arity.iter().map(|c| self.colour_name(*c).to_string()).collect(),
                    coarity: g.coarity.iter().map(|c| self.colour_name(*c).to_string()).collect(),
                })
                .collect(),
            families: self
                .families
                .iter()
                .map(|f| FamilyFile {
                    colour: f.colour.clone(),
                    host: Some(self.colour_name(f.host).to_string()),
                    generators: [f.mult, f.unit, f.comult, f.counit]
                        .iter()
                        .map(|g| self.generators[*g].name.clone())
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_value(f).expect("signature serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct GeneratorFile {
    name: String,
    #[serde(default)]
    arity: Vec<String>,
    #[serde(default)]
    coarity: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct FamilyFile {
    colour: String,
    #[serde(default)]
    host: Option<String>,
    generators: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct SignatureFile {
    colours: Vec<String>,
    #[serde(default)]
    frobenius: Option<Vec<String>>,
    #[serde(default)]
    generators: Vec<GeneratorFile>,
    #[serde(default)]
    families: Vec<FamilyFile>,
}

impl SignatureFile {
    fn into_signature(self) -> Result<Signature> {
        let names: Vec<&str> = self.colours.iter().map(|s| s.as_str()).collect();
        let mut sig = Signature::new(&names);
        let mut errors = Vec::new();
        if let Some(fr) = &self.frobenius {
            sig.frobenius = vec![false; sig.colours.len()];
            for n in fr {
                match sig.colour_id(n) {
                    Ok(c) => sig.frobenius[c] = true,
                    Err(_) => errors.push(format!("undeclared colour `{n}`")),
                }
            }
        }
        for g in &self.generators {
            let mut word = |ws: &[String]| -> Word {
                ws.iter()
                    .filter_map(|w| match sig.colour_id(w) {
                        Ok(c) => Some(c),
                        Err(_) => {
                            errors.push(format!("undeclared colour `{w}` in generator `{}`", g.name));
                            None
                        }
                    })
                    .collect()
            };
            let a = word(&g.arity);
            let b = word(&g.coarity);
            sig.add_generator(&g.name, a, b);
        }
        for f in &self.families {
            let host = match &f.host {
                Some(h) => sig.colour_id(h)?,
                None => 0,
            };
            if f.generators.len() != 4 {
                errors.push(format!("family `{}` needs four generator names", f.colour));
                continue;
            }
            sig.add_family(
                &f.colour,
                host,
                [&f.generators[0], &f.generators[1], &f.generators[2], &f.generators[3]],
            );
        }
        errors.extend(sig.violations());
        if errors.is_empty() {
            Ok(sig)
        } else {
            Err(Error::Signature(errors.join("; ")))
        }
    }
}

fn parse_word(sig: &Signature, s: &str, errors: &mut Vec<String>, owner: &str) -> Word {
    let s = s.trim();
    if s.is_empty() || s == "ε" {
        return Vec::new();
    }
    if let Ok(n) = s.parse::<usize>() {
        if sig.colours.is_empty() {
            errors.push(format!("generator `{owner}` uses a numeric word but no colour is declared"));
            return Vec::new();
        }
        return vec![0; n];
    }
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        match sig.colour_id(tok) {
            Ok(c) => out.push(c),
            Err(_) => errors.push(format!("undeclared colour `{tok}` in generator `{owner}`")),
        }
    }
    out
}

fn parse_text(src: &str) -> Result<Signature> {
    let mut sig = Signature::monochrome();
    let mut explicit_colours = false;
    let mut errors = Vec::new();
    for (lineno, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("colours:").or_else(|| line.strip_prefix("colors:")) {
            if explicit_colours || !sig.generators.is_empty() {
                errors.push(format!("line {}: colours must be declared once, first", lineno + 1));
                continue;
            }
            let names: Vec<&str> = rest.split_whitespace().collect();
            sig = Signature::new(&names);
            explicit_colours = true;
            continue;
        }
        if let Some(rest) = line.strip_prefix("frobenius:") {
            sig.frobenius = vec![false; sig.colours.len()];
            for n in rest.split_whitespace() {
                match sig.colour_id(n) {
                    Ok(c) => sig.frobenius[c] = true,
                    Err(_) => errors.push(format!("line {}: undeclared colour `{n}`", lineno + 1)),
                }
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("family ") {
            // family <colour> [on <host>] : mult unit comult counit
            let Some((head, gens)) = rest.split_once(':') else {
                errors.push(format!("line {}: expected `family name : m u d e`", lineno + 1));
                continue;
            };
            let head: Vec<&str> = head.split_whitespace().collect();
            let host = if head.len() == 3 && head[1] == "on" {
                match sig.colour_id(head[2]) {
                    Ok(c) => c,
                    Err(_) => {
                        errors.push(format!("line {}: undeclared colour `{}`", lineno + 1, head[2]));
                        continue;
                    }
                }
            } else {
                0
            };
            let gens: Vec<&str> = gens.split_whitespace().collect();
            if head.is_empty() || gens.len() != 4 {
                errors.push(format!("line {}: family needs a colour name and four generators", lineno + 1));
                continue;
            }
            sig.add_family(head[0], host, [gens[0], gens[1], gens[2], gens[3]]);
            continue;
        }
        let Some((name, ty)) = line.split_once(':') else {
            errors.push(format!("line {}: expected `name : word -> word`", lineno + 1));
            continue;
        };
        let name = name.trim();
        let Some((a, b)) = ty.split_once("->") else {
            errors.push(format!("line {}: expected `->` in type of `{name}`", lineno + 1));
            continue;
        };
        let a = parse_word(&sig, a, &mut errors, name);
        let b = parse_word(&sig, b, &mut errors, name);
        sig.add_generator(name, a, b);
    }
    errors.extend(sig.violations());
    if errors.is_empty() {
        Ok(sig)
    } else {
        Err(Error::Signature(errors.join("; ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cmon_signature_is_valid() {
        let s = Signature::parse("mu : 2 -> 1\neta : 0 -> 1\n").unwrap();
        assert_eq!(s.generators.len(), 2);
        assert_eq!(s.generators[0].arity, vec![0, 0]);
        assert!(s.validate().is_ok());
    }

    #[test]
    fn undeclared_colour_is_reported() {
        let e = Signature::parse("colours: a\nf : a -> b\n").unwrap_err();
        assert!(e.to_string().contains("undeclared colour"), "{e}");
    }

    #[test]
    fn duplicate_generator_is_reported() {
        let e = Signature::parse("f : 1 -> 1\nf : 2 -> 1\n").unwrap_err();
        assert!(e.to_string().contains("duplicate"), "{e}");
    }

    #[test]
    fn all_violations_listed() {
        let e = Signature::parse("colours: a\nf : a -> b\nf : a -> c\n").unwrap_err().to_string();
        assert!(e.contains("`b`") && e.contains("`c`") && e.contains("duplicate"), "{e}");
    }

    #[test]
    fn monochrome_signature_graph() {
        let s = Signature::parse("o1 : 2 -> 2\no2 : 1 -> 0\n").unwrap();
        let g = s.signature_graph();
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 2);
        assert_eq!((g.edges[0].sources.len(), g.edges[0].targets.len()), (2, 2));
        assert_eq!((g.edges[1].sources.len(), g.edges[1].targets.len()), (1, 0));
    }

    #[test]
    fn coloured_signature_graph() {
        let s = Signature::parse("colours: c1 c2\no1 : c1 c2 -> c2 c2\no2 : c2 -> \n").unwrap();
        let g = s.signature_graph();
        assert_eq!(g.node_count(), 2);
        let c2 = s.colour_id("c2").unwrap();
        assert_eq!(g.edges[1].sources, vec![c2]);
        assert!(g.edges[1].targets.is_empty());
        assert_eq!(g.edges[0].sources, vec![0, 1]);
        assert_eq!(g.edges[0].targets, vec![1, 1]);
    }

    #[test]
    fn empty_signature_graph() {
        let s = Signature::new(&["a", "b", "c"]);
        let g = s.signature_graph();
        assert_eq!((g.node_count(), g.edge_count()), (3, 0));
    }

    #[test]
    fn family_declaration_adds_generators() {
        let s = Signature::parse("o : 0 -> 1\nfamily r : rmu reta rdelta reps\n").unwrap();
        assert_eq!(s.generators.len(), 5);
        let d = s.gen_id("rdelta").unwrap();
        assert_eq!(s.family_of(d), Some((0, FrobKind::Comult)));
        assert_eq!(s.generator(d).coarity, vec![0, 0]);
    }

    #[test]
    fn json_round_trip() {
        let s = Signature::parse("colours: b r\nf : b r -> r\nfamily x on b : m u d e\n").unwrap();
        let j = s.to_json().to_string();
        let t = Signature::parse(&j).unwrap();
        assert_eq!(s, t);
    }
}
