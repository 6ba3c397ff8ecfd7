//! The `.lie` text format.
//!
//! ```text
//! # Example: a 3-dim solvable algebra
//! basis e1 e2 e3
//! [e2, e1] = e2 + e3
//! [e3, e1] = e3
//! ```
//!
//! The full grammar is in `docs/lie-format.md`.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use lielocder_core::arith::{Field, Fp, Modulus, Rational};
use lielocder_core::lie::{LieAlgebra, TableBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    InvalidField,
    InvalidCoefficient,
    UndeclaredBasisName,
    DuplicateBasisName,
    DuplicateBracket,
    AntisymmetryConflict,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::Lexical => "LexicalError",
            ParseErrorKind::Syntax => "SyntaxError",
            ParseErrorKind::InvalidField => "InvalidField",
            ParseErrorKind::InvalidCoefficient => "InvalidCoefficient",
            ParseErrorKind::UndeclaredBasisName => "UndeclaredBasisName",
            ParseErrorKind::DuplicateBasisName => "DuplicateBasisName",
            ParseErrorKind::DuplicateBracket => "DuplicateBracket",
            ParseErrorKind::AntisymmetryConflict => "AntisymmetryConflict",
        }
    }
}

/// 1-based line and column (in characters).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    fn new(kind: ParseErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        ParseError { kind, pos, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at line {}, column {}: {}", self.kind.as_str(), self.pos.line, self.pos.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Name {
    pub text: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coefficient: Rational,
    pub name: Name,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketStatement {
    pub left: Name,
    pub right: Name,
    pub terms: Vec<Term>,
    pub pos: Pos,
}

/// Syntax tree of a `.lie` file; names are not yet resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub field: FieldTag,
    pub basis: Vec<Name>,
    pub brackets: Vec<BracketStatement>,
}

/// An algebra read from text, over whichever field the file declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedAlgebra {
    Rational(LieAlgebra<Rational>),
    Prime(LieAlgebra<Fp>),
}

impl ParsedAlgebra {
    pub fn field(&self) -> FieldTag {
        match self {
            ParsedAlgebra::Rational(_) => FieldTag::Rational,
            ParsedAlgebra::Prime(l) => FieldTag::Prime(l.ctx().get()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ParsedAlgebra::Rational(l) => l.dim(),
            ParsedAlgebra::Prime(l) => l.dim(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Slash,
    Star,
    Plus,
    Minus,
    LBracket,
    RBracket,
    Comma,
    Equals,
    Sep,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("name `{s}`"),
            Tok::Int(s) => format!("number `{s}`"),
            Tok::Slash => "`/`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Sep => "end of statement".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        let single = match c {
            '/' => Some(Tok::Slash),
            '*' => Some(Tok::Star),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Equals),
            ';' => Some(Tok::Sep),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            column += 1;
            out.push((t, pos));
        } else if c == '\n' {
            chars.next();
            out.push((Tok::Sep, pos));
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
                column += 1;
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                column += 1;
            }
            if chars.peek().is_some_and(|&c| is_name_char(c)) {
                return Err(ParseError::new(
                    ParseErrorKind::Lexical,
                    Pos { line, column },
                    "name characters directly after a number",
                ));
            }
            out.push((Tok::Int(s), pos));
        } else if is_name_start(c) {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|&&d| is_name_char(d)) {
                s.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(s), pos));
        } else {
            return Err(ParseError::new(ParseErrorKind::Lexical, pos, format!("unexpected character {c:?}")));
        }
    }
    out.push((Tok::Eof, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(
            ParseErrorKind::Syntax,
            self.pos(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn expect(&mut self, tok: Tok, wanted: &str) -> Result<Pos, ParseError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn name(&mut self) -> Result<Name, ParseError> {
        match self.peek().clone() {
            Tok::Ident(text) => {
                let pos = self.bump().1;
                Ok(Name { text, pos })
            }
            _ => Err(self.unexpected("a basis name")),
        }
    }

    fn skip_separators(&mut self) {
        while *self.peek() == Tok::Sep {
            self.bump();
        }
    }

    fn end_statement(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Sep | Tok::Eof => Ok(()),
            _ => Err(self.unexpected("`;` or a newline")),
        }
    }

    fn field(&mut self) -> Result<FieldTag, ParseError> {
        let pos = self.pos();
        let Tok::Ident(tag) = self.peek().clone() else {
            return Err(self.unexpected("`Q` or `F_p`"));
        };
        self.bump();
        if tag == "Q" {
            return Ok(FieldTag::Rational);
        }
        let digits = tag.strip_prefix("F_").filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()));
        let p = digits.and_then(|d| d.parse::<u64>().ok()).ok_or_else(|| {
            ParseError::new(ParseErrorKind::InvalidField, pos, format!("unknown field `{tag}`; use Q or F_p"))
        })?;
        Modulus::new(p).map_err(|_| ParseError::new(ParseErrorKind::InvalidField, pos, format!("{p} is not prime")))?;
        Ok(FieldTag::Prime(p))
    }

    /// `INT [ "/" INT ]`
    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let (Tok::Int(num), pos) = self.bump() else { unreachable!("caller checked for an integer") };
        let mut text = num;
        if *self.peek() == Tok::Slash {
            self.bump();
            match self.bump() {
                (Tok::Int(den), dpos) => {
                    if den.bytes().all(|b| b == b'0') {
                        return Err(ParseError::new(ParseErrorKind::InvalidCoefficient, dpos, "zero denominator"));
                    }
                    text = format!("{text}/{den}");
                }
                (t, p) => {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        p,
                        format!("expected a denominator, found {}", t.describe()),
                    ))
                }
            }
        }
        text.parse()
            .map_err(|_| ParseError::new(ParseErrorKind::InvalidCoefficient, pos, format!("cannot read `{text}`")))
    }

    /// `combo = "0" | [sign] term { sign term }`
    fn combination(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Tok::Plus => {
                    self.bump();
                    false
                }
                Tok::Minus => {
                    self.bump();
                    true
                }
                _ if first => false,
                _ => break,
            };
            let mut coefficient = Rational::integer(1);
            if let Tok::Int(_) = self.peek() {
                let cpos = self.pos();
                coefficient = self.coefficient()?;
                if *self.peek() == Tok::Star {
                    self.bump();
                } else if first && !negative && matches!(self.peek(), Tok::Sep | Tok::Eof) {
                    if coefficient.is_zero() {
                        return Ok(terms);
                    }
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        cpos,
                        "a bracket must equal 0 or a combination of basis names",
                    ));
                }
            }
            let name = self.name()?;
            if negative {
                coefficient = coefficient.neg();
            }
            terms.push(Term { coefficient, name });
            first = false;
        }
        Ok(terms)
    }

    fn bracket(&mut self) -> Result<BracketStatement, ParseError> {
        let pos = self.expect(Tok::LBracket, "`[`")?;
        let left = self.name()?;
        self.expect(Tok::Comma, "`,`")?;
        let right = self.name()?;
        self.expect(Tok::RBracket, "`]`")?;
        self.expect(Tok::Equals, "`=`")?;
        let terms = self.combination()?;
        Ok(BracketStatement { left, right, terms, pos })
    }

    fn document(&mut self) -> Result<AlgebraDocument, ParseError> {
        let mut field = None;
        let mut basis: Option<Vec<Name>> = None;
        let mut brackets = Vec::new();
        loop {
            self.skip_separators();
            let pos = self.pos();
            match self.peek().clone() {
                Tok::Eof => break,
                Tok::Ident(kw) if kw == "field" => {
                    if field.is_some() || basis.is_some() {
                        return Err(ParseError::new(
                            ParseErrorKind::Syntax,
                            pos,
                            "`field` must come first and only once",
                        ));
                    }
                    self.bump();
                    field = Some(self.field()?);
                }
                Tok::Ident(kw) if kw == "basis" => {
                    if basis.is_some() {
                        return Err(ParseError::new(ParseErrorKind::Syntax, pos, "second `basis` declaration"));
                    }
                    self.bump();
                    let mut names: Vec<Name> = Vec::new();
                    while let Tok::Ident(_) = self.peek() {
                        let n = self.name()?;
                        if names.iter().any(|m| m.text == n.text) {
                            return Err(ParseError::new(
                                ParseErrorKind::DuplicateBasisName,
                                n.pos,
                                format!("`{}` declared twice", n.text),
                            ));
                        }
                        names.push(n);
                        if *self.peek() == Tok::Comma {
                            self.bump();
                        }
                    }
                    if names.is_empty() {
                        return Err(self.unexpected("at least one basis name"));
                    }
                    basis = Some(names);
                }
                Tok::LBracket => {
                    if basis.is_none() {
                        return Err(ParseError::new(
                            ParseErrorKind::Syntax,
                            pos,
                            "bracket before the `basis` declaration",
                        ));
                    }
                    brackets.push(self.bracket()?);
                }
                _ => return Err(self.unexpected("`field`, `basis` or a bracket statement")),
            }
            self.end_statement()?;
        }
        let basis =
            basis.ok_or_else(|| ParseError::new(ParseErrorKind::Syntax, self.pos(), "missing `basis` declaration"))?;
        Ok(AlgebraDocument { field: field.unwrap_or(FieldTag::Rational), basis, brackets })
    }
}

/// Parse text into a syntax tree. Name resolution and table checks happen
/// in [`AlgebraDocument::build`].
pub fn parse_document(text: &str) -> Result<AlgebraDocument, ParseError> {
    let toks = lex(text)?;
    Parser { toks, at: 0 }.document()
}

/// Parse and build in one step.
pub fn parse(text: &str) -> Result<ParsedAlgebra, ParseError> {
    parse_document(text)?.build()
}

impl AlgebraDocument {
    pub fn build(&self) -> Result<ParsedAlgebra, ParseError> {
        match self.field {
            FieldTag::Rational => self.build_over(&(), |c, _| Ok(c.clone())).map(ParsedAlgebra::Rational),
            FieldTag::Prime(p) => {
                let m = Modulus::new(p).expect("checked while parsing");
                self.build_over(&m, |c, pos| {
                    c.reduce_mod(m).map_err(|_| {
                        ParseError::new(
                            ParseErrorKind::InvalidCoefficient,
                            pos,
                            format!("denominator of {c} vanishes modulo {p}"),
                        )
                    })
                })
                .map(ParsedAlgebra::Prime)
            }
        }
    }

    fn build_over<F: Field>(
        &self,
        ctx: &F::Ctx,
        convert: impl Fn(&Rational, Pos) -> Result<F, ParseError>,
    ) -> Result<LieAlgebra<F>, ParseError> {
        let index: HashMap<&str, usize> = self.basis.iter().enumerate().map(|(i, n)| (n.text.as_str(), i)).collect();
        let resolve = |n: &Name| {
            index.get(n.text.as_str()).copied().ok_or_else(|| {
                ParseError::new(
                    ParseErrorKind::UndeclaredBasisName,
                    n.pos,
                    format!("`{}` is not a declared basis name", n.text),
                )
            })
        };
        let mut builder = TableBuilder::<F>::new(self.basis.iter().map(|n| n.text.clone()).collect(), ctx);
        let mut seen: HashMap<(usize, usize), Pos> = HashMap::new();
        for st in &self.brackets {
            let (i, j) = (resolve(&st.left)?, resolve(&st.right)?);
            let mut terms = Vec::with_capacity(st.terms.len());
            for t in &st.terms {
                terms.push((resolve(&t.name)?, convert(&t.coefficient, t.name.pos)?));
            }
            if let Some(prev) = seen.insert((i, j), st.pos) {
                return Err(ParseError::new(
                    ParseErrorKind::DuplicateBracket,
                    st.pos,
                    format!("[{}, {}] already stated at line {}", st.left.text, st.right.text, prev.line),
                ));
            }
            builder.bracket(i, j, &terms).map_err(|_| {
                let msg = if i == j {
                    format!("[{0}, {0}] must be 0", st.left.text)
                } else {
                    format!("[{0}, {1}] is not the negative of the stated [{1}, {0}]", st.left.text, st.right.text)
                };
                ParseError::new(ParseErrorKind::AntisymmetryConflict, st.pos, msg)
            })?;
        }
        Ok(builder.build())
    }
}

fn write_combination<F: Field>(
    out: &mut String,
    algebra: &LieAlgebra<F>,
    coords: &[F],
    show: impl Fn(&F) -> (bool, String),
) {
    let mut first = true;
    for (c, label) in coords.iter().zip(algebra.labels()) {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = show(c);
        match (first, neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if mag != "1" {
            let _ = write!(out, "{mag}*");
        }
        out.push_str(label);
        first = false;
    }
    if first {
        out.push('0');
    }
}

fn serialize_with<F: Field>(
    algebra: &LieAlgebra<F>,
    header: Option<String>,
    show: impl Fn(&F) -> (bool, String) + Copy,
) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        let _ = writeln!(out, "{h}");
    }
    let _ = writeln!(out, "basis {};", algebra.labels().join(" "));
    let n = algebra.dim();
    let bracket_line = |out: &mut String, i: usize, j: usize| {
        let _ = write!(out, "[{}, {}] = ", algebra.labels()[i], algebra.labels()[j]);
        write_combination(out, algebra, algebra.bracket_basis(i, j), show);
        out.push('\n');
    };
    for i in 0..n {
        for j in 0..=i {
            let ij = algebra.bracket_basis(i, j);
            let ji = algebra.bracket_basis(j, i);
            let antisymmetric = ij.iter().zip(ji).all(|(a, b)| a.add(b).is_zero());
            if ij.iter().any(|c| !c.is_zero()) || (i != j && !antisymmetric) {
                bracket_line(&mut out, i, j);
            }
            // keep tables that fail antisymmetry honest: the reverse line
            // makes the parser report the conflict
            if i != j && !antisymmetric {
                bracket_line(&mut out, j, i);
            }
        }
    }
    out
}

fn sign_split(s: String) -> (bool, String) {
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

/// Text form of a rational table: one line per nonzero `[e_i, e_j]` with
/// `i > j` in basis order.
pub fn serialize(algebra: &LieAlgebra<Rational>) -> String {
    serialize_with(algebra, None, |c| sign_split(c.to_string()))
}

/// Text form of a table over `F_p`, coefficients in balanced form.
pub fn serialize_mod_p(algebra: &LieAlgebra<Fp>) -> String {
    let header = format!("field F_{};", algebra.ctx().get());
    serialize_with(algebra, Some(header), |c| sign_split(c.balanced().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn positions_are_one_based() {
        let e = err("basis e1 e2 e3\n[e1,e2] = e9");
        assert_eq!(e.kind, ParseErrorKind::UndeclaredBasisName);
        assert_eq!(e.pos, Pos { line: 2, column: 11 });
    }

    #[test]
    fn lexical_error_position() {
        let e = err("basis a b; [a, b] = a $ b");
        assert_eq!(e.kind, ParseErrorKind::Lexical);
        assert_eq!(e.pos.column, 23);
    }

    #[test]
    fn coefficient_forms() {
        let ParsedAlgebra::Rational(l) = parse("basis a b c; [a,b] = -2/4*a + 3 c - b").unwrap() else { panic!() };
        assert_eq!(l.bracket_basis(0, 1), &[Rational::new(-1, 2), Rational::integer(-1), Rational::integer(3)]);
        assert_eq!(l.bracket_basis(1, 0)[2], Rational::integer(-3));
    }

    #[test]
    fn zero_right_hand_side() {
        let ParsedAlgebra::Rational(l) = parse("basis a b\n[a,b] = 0\n[b,a] = 0").unwrap() else { panic!() };
        assert!(l.is_abelian());
        assert_eq!(err("basis a b; [a,b] = 2").kind, ParseErrorKind::Syntax);
    }

    #[test]
    fn modular_coefficients() {
        let ParsedAlgebra::Prime(l) = parse("field F_5; basis a b; [b,a] = 1/2 b").unwrap() else { panic!() };
        assert_eq!(l.bracket_basis(1, 0)[1].value(), 3);
        assert_eq!(err("field F_5; basis a b; [b,a] = 1/5 b").kind, ParseErrorKind::InvalidCoefficient);
        assert_eq!(err("field F_6; basis a").kind, ParseErrorKind::InvalidField);
    }

    #[test]
    fn serializer_signs() {
        let ParsedAlgebra::Rational(l) = parse("basis a b c; [a,b] = -a + 1/2 c").unwrap() else { panic!() };
        assert_eq!(serialize(&l), "basis a b c;\n[b, a] = a - 1/2*c\n");
    }
}
