//! Module expressions: `Term ("+" Term)*` with `Term := [int "*"] Atom`.
//!
//! Parsing is split in two. [`parse_ast`] checks only the grammar and keeps
//! numbers as written; [`lower`] validates labels against the parameters and
//! builds canonical direct sums.

use std::fmt;

use singlet_core::orbifold::{OrbifoldExpr, OrbifoldIndec, OrbifoldParams};
use singlet_core::rational as rat;
use singlet_core::{Error as CoreError, Indecomposable, ModuleExpr, Params};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    M,
    P,
    F,
    Fa,
    G,
    W,
    V,
    R,
}

impl Kind {
    pub const ALL: [Kind; 8] = [Kind::M, Kind::P, Kind::F, Kind::Fa, Kind::G, Kind::W, Kind::V, Kind::R];

    pub fn name(self) -> &'static str {
        match self {
            Kind::M => "M",
            Kind::P => "P",
            Kind::F => "F",
            Kind::Fa => "Fa",
            Kind::G => "G",
            Kind::W => "W",
            Kind::V => "V",
            Kind::R => "R",
        }
    }

    fn from_name(name: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Whether the atom takes a single rational rather than a pair `(r,s)`.
    pub fn takes_rational(self) -> bool {
        matches!(self, Kind::F | Kind::V)
    }

    pub fn is_orbifold(self) -> bool {
        matches!(self, Kind::W | Kind::V | Kind::R)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Args {
    Pair(i64, i64),
    Rational { num: i64, den: Option<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    pub kind: Kind,
    pub args: Args,
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.args {
            Args::Pair(r, s) => write!(f, "{}({r},{s})", self.kind.name()),
            Args::Rational { num, den: None } => write!(f, "{}({num})", self.kind.name()),
            Args::Rational { num, den: Some(d) } => write!(f, "{}({num}/{d})", self.kind.name()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: Option<i64>,
    pub atom: Atom,
    /// Byte offset of the term in the source, ignored by equality.
    pub offset: usize,
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.coeff == other.coeff && self.atom == other.atom
    }
}

impl Eq for Term {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ast {
    pub terms: Vec<Term>,
}

/// Prints the terms in source order with numbers exactly as parsed.
pub fn print_ast(ast: &Ast) -> String {
    let parts: Vec<String> = ast
        .terms
        .iter()
        .map(|t| match t.coeff {
            Some(c) => format!("{c}*{}", t.atom),
            None => t.atom.to_string(),
        })
        .collect();
    parts.join(" + ")
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid module {atom}: {message}")]
    Semantic { atom: String, message: String },
}

impl ParseError {
    fn semantic(atom: &Atom, message: impl Into<String>) -> Self {
        ParseError::Semantic {
            atom: atom.to_string(),
            message: message.into(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !f(c))
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        &self.src[start..start + len]
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat('-');
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            self.pos = start;
            return self.err("expected an integer");
        }
        let text = if neg { format!("-{digits}") } else { digits.to_string() };
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.take_while(|c| c.is_ascii_alphabetic());
        let Some(kind) = Kind::from_name(name) else {
            self.pos = start;
            return if name.is_empty() {
                self.err("expected a module name")
            } else {
                self.err(format!("unknown module name '{name}'"))
            };
        };
        self.expect('(')?;
        let args = if kind.takes_rational() {
            let num = self.int()?;
            let den = if self.eat('/') { Some(self.int()?) } else { None };
            Args::Rational { num, den }
        } else {
            let r = self.int()?;
            self.expect(',')?;
            Args::Pair(r, self.int()?)
        };
        self.expect(')')?;
        Ok(Atom { kind, args })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        let offset = self.pos;
        let starts_number = matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '-');
        let coeff = if starts_number {
            let c = self.int()?;
            self.expect('*')?;
            Some(c)
        } else {
            None
        };
        Ok(Term {
            coeff,
            atom: self.atom()?,
            offset,
        })
    }
}

/// Parses the grammar without consulting any parameters.
pub fn parse_ast(src: &str) -> Result<Ast, ParseError> {
    let mut parser = Parser { src, pos: 0 };
    let mut terms = vec![parser.term()?];
    while parser.eat('+') {
        terms.push(parser.term()?);
    }
    if let Some(c) = parser.peek() {
        return parser.err(format!("unexpected '{c}'"));
    }
    Ok(Ast { terms })
}

/// A validated expression over one of the two algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedExpr {
    Singlet(ModuleExpr),
    Orbifold(OrbifoldExpr),
}

fn rational(atom: &Atom) -> Result<rat::Q, ParseError> {
    match atom.args {
        Args::Rational { num, den: None } => Ok(rat::int(num)),
        Args::Rational { den: Some(0), .. } => Err(ParseError::semantic(atom, "zero denominator")),
        Args::Rational { num, den: Some(d) } => Ok(rat::frac(num, d)),
        Args::Pair(..) => unreachable!("pair arguments are parsed only for pair atoms"),
    }
}

fn pair(atom: &Atom) -> (i64, i64) {
    match atom.args {
        Args::Pair(r, s) => (r, s),
        Args::Rational { .. } => unreachable!("rational arguments are parsed only for F and V"),
    }
}

fn singlet_atom(params: &Params, atom: &Atom) -> Result<Indecomposable, ParseError> {
    let built = match atom.kind {
        Kind::F => Indecomposable::fock(params, rational(atom)?),
        kind => {
            let (r, s) = pair(atom);
            match kind {
                Kind::M => Indecomposable::simple(params, r, s),
                Kind::P => Indecomposable::proj(params, r, s),
                Kind::Fa => Indecomposable::fock_atypical(params, r, s),
                _ => Indecomposable::gen_verma(params, r, s),
            }
        }
    };
    built.map_err(|e| ParseError::semantic(atom, core_message(&e)))
}

fn orbifold_atom(op: &OrbifoldParams, atom: &Atom) -> Result<OrbifoldIndec, ParseError> {
    let built = match atom.kind {
        Kind::V => OrbifoldIndec::v(op, rational(atom)?),
        Kind::W => OrbifoldIndec::w(op, pair(atom).0, pair(atom).1),
        _ => OrbifoldIndec::r(op, pair(atom).0, pair(atom).1),
    };
    built.map_err(|e| ParseError::semantic(atom, core_message(&e)))
}

fn core_message(e: &CoreError) -> String {
    match e {
        CoreError::NotTypical(_) => "typical Fock modules need a non-integer weight".into(),
        CoreError::NotLocal(_) => "weight is not local for this orbifold".into(),
        other => other.to_string(),
    }
}

fn multiplicity(term: &Term) -> Result<u64, ParseError> {
    match term.coeff {
        None => Ok(1),
        Some(c) if c > 0 => Ok(c as u64),
        Some(c) => Err(ParseError::semantic(
            &term.atom,
            format!("multiplicity {c} is not positive"),
        )),
    }
}

/// Validates an AST. Orbifold atoms need orbifold parameters, and the two
/// kinds of atom cannot be mixed.
pub fn lower(ast: &Ast, params: &Params, orbifold: Option<&OrbifoldParams>) -> Result<ParsedExpr, ParseError> {
    let first = &ast.terms[0].atom;
    if let Some(t) = ast
        .terms
        .iter()
        .find(|t| t.atom.kind.is_orbifold() != first.kind.is_orbifold())
    {
        return Err(ParseError::semantic(&t.atom, format!("cannot be added to {first}")));
    }
    if first.kind.is_orbifold() {
        let Some(op) = orbifold else {
            return Err(ParseError::semantic(first, "orbifold modules need --m"));
        };
        let mut out = OrbifoldExpr::new();
        for t in &ast.terms {
            out.insert(orbifold_atom(op, &t.atom)?, multiplicity(t)?);
        }
        Ok(ParsedExpr::Orbifold(out))
    } else {
        let mut out = ModuleExpr::new();
        for t in &ast.terms {
            out.insert(singlet_atom(params, &t.atom)?, multiplicity(t)?);
        }
        Ok(ParsedExpr::Singlet(out))
    }
}

/// Parses and validates in one step.
pub fn parse_expr(src: &str, params: &Params, orbifold: Option<&OrbifoldParams>) -> Result<ParsedExpr, ParseError> {
    lower(&parse_ast(src)?, params, orbifold)
}
