//! Σ-terms: syntax, parser, type checking and interpretation into cospans.
//!
//! ```text
//! t ::= name | id[n] | id[word] | sym[w1,w2]
//!     | frob.mult[c] | frob.unit[c] | frob.comult[c] | frob.counit[c]
//!     | chg[c1,c2] | t ; t | t + t | ( t )
//! ```
//! `;` binds looser than `+`; both associate to the left. A bare number as a
//! word means that many copies of the first colour.

use crate::cospan::{cospan_iso, Cospan};
use crate::error::{Error, Result};
use crate::hypergraph::Label;
use crate::signature::{ColourId, FrobKind, GenId, Signature, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(GenId),
    Id(Word),
    Sym(Word, Word),
    Frob(ColourId, FrobKind),
    Chg(ColourId, ColourId),
    Seq(Box<Term>, Box<Term>),
    Par(Box<Term>, Box<Term>),
}

impl Term {
    pub fn seq(a: Term, b: Term) -> Term {
        Term::Seq(Box::new(a), Box::new(b))
    }

    pub fn par(a: Term, b: Term) -> Term {
        Term::Par(Box::new(a), Box::new(b))
    }

    /// Left-nested sequential composite of a non-empty list.
    pub fn seq_all(ts: Vec<Term>) -> Term {
        let mut it = ts.into_iter();
        let first = it.next().expect("seq_all of an empty list");
        it.fold(first, Term::seq)
    }

    /// Left-nested tensor; the empty list gives `id[0]`.
    pub fn par_all(ts: Vec<Term>) -> Term {
        let mut it = ts.into_iter();
        match it.next() {
            None => Term::Id(Vec::new()),
            Some(first) => it.fold(first, Term::par),
        }
    }

    /// Domain and codomain, checking every `;`.
    pub fn type_of(&self, sig: &Signature) -> Result<(Word, Word)> {
        match self {
            Term::Gen(g) => {
                let gen = sig
                    .generators
                    .get(*g)
                    .ok_or_else(|| Error::UnknownGenerator(format!("#{g}")))?;
                Ok((gen.arity.clone(), gen.coarity.clone()))
            }
            Term::Id(w) => Ok((w.clone(), w.clone())),
            Term::Sym(v, w) => {
                let mut a = v.clone();
                a.extend_from_slice(w);
                let mut b = w.clone();
                b.extend_from_slice(v);
                Ok((a, b))
            }
            Term::Frob(c, k) => {
                if !sig.has_frobenius(*c) {
                    return Err(Error::NoFrobenius(sig.colour_name(*c).to_string()));
                }
                let (n, m) = k.shape();
                Ok((vec![*c; n], vec![*c; m]))
            }
            Term::Chg(a, b) => Ok((vec![*a], vec![*b])),
            Term::Seq(a, b) => {
                let (d, m1) = a.type_of(sig)?;
                let (m2, c) = b.type_of(sig)?;
                if m1 != m2 {
                    return Err(Error::TypeMismatch(format!(
                        "`{}` has codomain {} but `{}` has domain {}",
                        a.display(sig),
                        sig.word_name(&m1),
                        b.display(sig),
                        sig.word_name(&m2)
                    )));
                }
                Ok((d, c))
            }
            Term::Par(a, b) => {
                let (mut d1, mut c1) = a.type_of(sig)?;
                let (d2, c2) = b.type_of(sig)?;
                d1.extend(d2);
                c1.extend(c2);
                Ok((d1, c1))
            }
        }
    }

    /// Fully parenthesised rendering in the input grammar.
    pub fn display(&self, sig: &Signature) -> String {
        let word = |w: &Word| -> String {
            if !w.is_empty() && w.iter().all(|c| *c == 0) && sig.colours.len() == 1 {
                w.len().to_string()
            } else if w.is_empty() {
                "0".to_string()
            } else {
                w.iter().map(|c| sig.colour_name(*c)).collect::<Vec<_>>().join(" ")
            }
        };
        match self {
            Term::Gen(g) => sig.generators[*g].name.clone(),
            Term::Id(w) => format!("id[{}]", word(w)),
            Term::Sym(v, w) => format!("sym[{},{}]", word(v), word(w)),
            Term::Frob(c, k) => format!("frob.{}[{}]", k.name(), sig.colour_name(*c)),
            Term::Chg(a, b) => format!("chg[{},{}]", sig.colour_name(*a), sig.colour_name(*b)),
            Term::Seq(a, b) => format!("({} ; {})", a.display(sig), b.display(sig)),
            Term::Par(a, b) => format!("({} + {})", a.display(sig), b.display(sig)),
        }
    }

    /// Number of generator, Frobenius and changer occurrences.
    pub fn size(&self) -> usize {
        match self {
            Term::Gen(_) | Term::Frob(..) | Term::Chg(..) => 1,
            Term::Id(_) | Term::Sym(..) => 0,
            Term::Seq(a, b) | Term::Par(a, b) => a.size() + b.size(),
        }
    }
}

/// Structural interpretation into cospans.
pub fn interp(sig: &Signature, t: &Term) -> Result<Cospan> {
    match t {
        Term::Gen(g) => Cospan::generator(sig, *g),
        Term::Id(w) => Ok(Cospan::identity(w)),
        Term::Sym(v, w) => Ok(Cospan::symmetry(v, w)),
        Term::Frob(c, k) => Cospan::frob(sig, *c, *k),
        Term::Chg(a, b) => Ok(Cospan::edge(Label::Chg(*a, *b), &[*a], &[*b])),
        Term::Seq(a, b) => interp(sig, a)?.compose(&interp(sig, b)?),
        Term::Par(a, b) => Ok(interp(sig, a)?.tensor(&interp(sig, b)?)),
    }
}

/// Equality modulo the symmetric monoidal and Frobenius axioms, decided by
/// comparing interpretations.
pub fn term_equal_mod_frobenius(sig: &Signature, s: &Term, t: &Term) -> Result<bool> {
    if s.type_of(sig)? != t.type_of(sig)? {
        return Ok(false);
    }
    Ok(cospan_iso(&interp(sig, s)?, &interp(sig, t)?))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Num(usize),
    LBrack,
    RBrack,
    Comma,
    Semi,
    Plus,
    LParen,
    RParen,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.' || c == '\'' || c == '-'
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let single = match c {
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            '+' => Some(Tok::Plus),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if is_name_char(c) {
            let start = i;
            while i < chars.len() && is_name_char(chars[i].1) {
                i += 1;
            }
            let s: String = chars[start..i].iter().map(|p| p.1).collect();
            match s.parse::<usize>() {
                Ok(n) => out.push((pos, Tok::Num(n))),
                Err(_) => out.push((pos, Tok::Name(s))),
            }
        } else {
            return Err(Error::Syntax { pos, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    sig: &'a Signature,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.at += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn seq(&mut self) -> Result<Term> {
        let mut t = self.par()?;
        while self.peek() == Some(&Tok::Semi) {
            self.at += 1;
            let pos = self.pos();
            let r = self.par()?;
            let joined = Term::seq(t, r);
            if let Err(e) = joined.type_of(self.sig) {
                return Err(match e {
                    Error::TypeMismatch(m) => Error::TypeMismatch(format!("at {pos}: {m}")),
                    other => other,
                });
            }
            t = joined;
        }
        Ok(t)
    }

    fn par(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.peek() == Some(&Tok::Plus) {
            self.at += 1;
            t = Term::par(t, self.atom()?);
        }
        Ok(t)
    }

    fn colour(&mut self) -> Result<ColourId> {
        match self.peek().cloned() {
            Some(Tok::Name(n)) => {
                self.at += 1;
                self.sig.colour_id(&n)
            }
            _ => self.err("expected a colour name"),
        }
    }

    /// A word inside brackets, stopping before `,` or `]`.
    fn word(&mut self) -> Result<Word> {
        if let Some(Tok::Num(n)) = self.peek().cloned() {
            self.at += 1;
            if n > 0 && self.sig.colours.is_empty() {
                return self.err("numeric word needs a declared colour");
            }
            return Ok(vec![0; n]);
        }
        let mut w = Vec::new();
        while let Some(Tok::Name(_)) = self.peek() {
            w.push(self.colour()?);
        }
        Ok(w)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.at += 1;
                let t = self.seq()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Some(Tok::Name(n)) => {
                self.at += 1;
                let bracket = self.peek() == Some(&Tok::LBrack);
                match n.as_str() {
                    "id" if bracket => {
                        self.at += 1;
                        let w = self.word()?;
                        self.expect(Tok::RBrack, "`]`")?;
                        Ok(Term::Id(w))
                    }
                    "sym" if bracket => {
                        self.at += 1;
                        let v = self.word()?;
                        self.expect(Tok::Comma, "`,`")?;
                        let w = self.word()?;
                        self.expect(Tok::RBrack, "`]`")?;
                        Ok(Term::Sym(v, w))
                    }
                    "chg" if bracket => {
                        self.at += 1;
                        let a = self.colour()?;
                        self.expect(Tok::Comma, "`,`")?;
                        let b = self.colour()?;
                        self.expect(Tok::RBrack, "`]`")?;
                        Ok(Term::Chg(a, b))
                    }
                    _ if n.starts_with("frob.") => {
                        let kind = match &n[5..] {
                            "mult" => FrobKind::Mult,
                            "unit" => FrobKind::Unit,
                            "comult" => FrobKind::Comult,
                            "counit" => FrobKind::Counit,
                            other => return self.err(format!("unknown Frobenius generator `{other}`")),
                        };
                        let c = if bracket {
                            self.at += 1;
                            let c = self.colour()?;
                            self.expect(Tok::RBrack, "`]`")?;
                            c
                        } else if self.sig.colours.len() == 1 {
                            0
                        } else {
                            return self.err("`frob.*` needs a colour in brackets");
                        };
                        if !self.sig.has_frobenius(c) {
                            return Err(Error::NoFrobenius(self.sig.colour_name(c).to_string()));
                        }
                        Ok(Term::Frob(c, kind))
                    }
                    _ => Ok(Term::Gen(self.sig.gen_id(&n)?)),
                }
            }
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses and type checks a term.
pub fn parse(src: &str, sig: &Signature) -> Result<Term> {
    let toks = lex(src)?;
    let mut p = Parser { sig, toks, at: 0, end: src.len() };
    let t = p.seq()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    t.type_of(sig)?;
    Ok(t)
}
