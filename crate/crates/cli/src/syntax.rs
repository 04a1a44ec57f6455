//! Lexer, AST and recursive-descent parser for Schubert-calculus queries.
//!
//! ```text
//! query   := expr [ "in" context ] EOF
//! context := "G" "(" INT "," INT ")"
//!          | "P" "(" bundle ")" "over" "G" "(" INT "," INT ")"
//! expr    := term { ("+" | "-") term }
//! term    := unary { ("*" | "·") unary }
//! unary   := "-" unary | power
//! power   := atom [ "^" INT ]
//! atom    := INT
//!          | "sigma" "[" [ INT { "," INT } ] "]"
//!          | "zeta"
//!          | "c" "(" INT "," bundle ")"
//!          | "integrate" "(" expr ")"
//!          | "(" expr ")"
//! bundle  := "S" | "Sdual" | "Q"
//!          | "O" "(" SINT ")"
//!          | "sym" "(" INT "," bundle ")"
//!          | "dual" "(" bundle ")"
//!          | "twist" "(" bundle "," SINT ")"
//!          | "sum" "(" bundle "," bundle ")"
//!          | "quot" "(" bundle "," bundle ")"
//! SINT    := [ "-" ] INT
//! ```

use std::fmt;

use enumgeom::BigInt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Int(BigInt),
    Sigma(Vec<u32>),
    Zeta,
    Chern(u32, Bundle),
    Integrate(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Bundle {
    Sub,
    SubDual,
    Quotient,
    /// `O(a)`: the `a`-th power of the hyperplane line bundle (`ζ` on a
    /// projective bundle, `σ_1` on a Grassmannian).
    Line(i64),
    Sym(u32, Box<Bundle>),
    Dual(Box<Bundle>),
    Twist(Box<Bundle>, i64),
    Sum(Box<Bundle>, Box<Bundle>),
    Quot(Box<Bundle>, Box<Bundle>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Context {
    Grass { k: usize, n: usize },
    Proj { bundle: Bundle, k: usize, n: usize },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Query {
    pub expr: Expr,
    pub context: Option<Context>,
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            f.write_str("(")?;
            self.fmt_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Sigma(parts) => {
                let parts: Vec<String> = parts.iter().map(u32::to_string).collect();
                write!(f, "sigma[{}]", parts.join(","))
            }
            Expr::Zeta => f.write_str("zeta"),
            Expr::Chern(i, b) => write!(f, "c({i}, {b})"),
            Expr::Integrate(e) => write!(f, "integrate({e})"),
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.fmt_at(f, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.fmt_at(f, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                b.fmt_at(f, 2)
            }
            Expr::Mul(a, b) => {
                a.fmt_at(f, 2)?;
                f.write_str("*")?;
                b.fmt_at(f, 3)
            }
            Expr::Pow(a, e) => {
                a.fmt_at(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bundle::Sub => f.write_str("S"),
            Bundle::SubDual => f.write_str("Sdual"),
            Bundle::Quotient => f.write_str("Q"),
            Bundle::Line(a) => write!(f, "O({a})"),
            Bundle::Sym(m, b) => write!(f, "sym({m}, {b})"),
            Bundle::Dual(b) => write!(f, "dual({b})"),
            Bundle::Twist(b, a) => write!(f, "twist({b}, {a})"),
            Bundle::Sum(a, b) => write!(f, "sum({a}, {b})"),
            Bundle::Quot(a, b) => write!(f, "quot({a}, {b})"),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Grass { k, n } => write!(f, "G({k},{n})"),
            Context::Proj { bundle, k, n } => write!(f, "P({bundle}) over G({k},{n})"),
        }
    }
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)?;
        if let Some(ctx) = &self.context {
            write!(f, " in {ctx}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(String),
    Ident(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(s) => write!(f, "integer {s}"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    offset: usize,
    line: usize,
    column: usize,
}

/// A syntax error with its position (1-based line and column, byte offset)
/// and the tokens that would have been accepted there.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub found: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: syntax error: ", self.line, self.column)?;
        match self.expected.as_slice() {
            [] => write!(f, "unexpected {}", self.found),
            [one] => write!(f, "expected {one}, found {}", self.found),
            many => write!(
                f,
                "expected one of {}, found {}",
                many.join(", "),
                self.found
            ),
        }
    }
}

impl std::error::Error for ParseError {}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = input.char_indices().peekable();
    while let Some(&(offset, c)) = chars.peek() {
        let start = (offset, line, column);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            let (_, c) = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let tok = if c.is_whitespace() {
            advance(&mut chars);
            continue;
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|&(_, c)| c.is_ascii_digit()) {
                s.push(advance(&mut chars));
            }
            Tok::Int(s)
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars
                .peek()
                .is_some_and(|&(_, c)| c.is_alphanumeric() || c == '_')
            {
                s.push(advance(&mut chars));
            }
            Tok::Ident(s)
        } else if "()[],+-*^".contains(c) {
            advance(&mut chars);
            Tok::Sym(c)
        } else if c == '·' {
            advance(&mut chars);
            Tok::Sym('*')
        } else {
            return Err(ParseError {
                offset,
                line,
                column,
                found: format!("character '{c}'"),
                expected: Vec::new(),
            });
        };
        out.push(Token {
            tok,
            offset: start.0,
            line: start.1,
            column: start.2,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        offset: input.len(),
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

const ATOM_START: &[&str] = &[
    "integer",
    "'sigma'",
    "'zeta'",
    "'c'",
    "'integrate'",
    "'('",
    "'-'",
];
const BUNDLE_START: &[&str] = &[
    "'S'", "'Sdual'", "'Q'", "'O'", "'sym'", "'dual'", "'twist'", "'sum'", "'quot'",
];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].tok.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let t = &self.tokens[self.pos];
        ParseError {
            offset: t.offset,
            line: t.line,
            column: t.column,
            found: t.tok.to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn at_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn at_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == name)
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.at_sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&format!("'{c}'")]))
        }
    }

    fn expect_ident(&mut self, name: &str) -> Result<(), ParseError> {
        if self.at_ident(name) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&format!("'{name}'")]))
        }
    }

    fn int_text(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Int(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn small<T: std::str::FromStr>(&mut self) -> Result<T, ParseError> {
        let save = self.pos;
        let s = self.int_text()?;
        s.parse().map_err(|_| {
            let mut e = self.error(&[]);
            let t = &self.tokens[save];
            (e.offset, e.line, e.column) = (t.offset, t.line, t.column);
            e.found = format!("integer {s} (out of range)");
            e
        })
    }

    fn signed(&mut self) -> Result<i64, ParseError> {
        if self.at_sym('-') {
            self.bump();
            let v: i64 = self.small()?;
            Ok(-v)
        } else if matches!(self.peek(), Tok::Int(_)) {
            self.small()
        } else {
            Err(self.error(&["integer", "'-'"]))
        }
    }

    fn query(&mut self) -> Result<Query, ParseError> {
        let expr = self.expr()?;
        let context = if self.at_ident("in") {
            self.bump();
            Some(self.context()?)
        } else {
            None
        };
        if *self.peek() != Tok::Eof {
            let expected: &[&str] = if context.is_some() {
                &["end of input"]
            } else {
                &["'+'", "'-'", "'*'", "'in'", "end of input"]
            };
            return Err(self.error(expected));
        }
        Ok(Query { expr, context })
    }

    fn grass_args(&mut self) -> Result<(usize, usize), ParseError> {
        self.expect_ident("G")?;
        self.expect_sym('(')?;
        let k = self.small()?;
        self.expect_sym(',')?;
        let n = self.small()?;
        self.expect_sym(')')?;
        Ok((k, n))
    }

    fn context(&mut self) -> Result<Context, ParseError> {
        if self.at_ident("G") {
            let (k, n) = self.grass_args()?;
            Ok(Context::Grass { k, n })
        } else if self.at_ident("P") {
            self.bump();
            self.expect_sym('(')?;
            let bundle = self.bundle()?;
            self.expect_sym(')')?;
            self.expect_ident("over")?;
            let (k, n) = self.grass_args()?;
            Ok(Context::Proj { bundle, k, n })
        } else {
            Err(self.error(&["'G'", "'P'"]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.at_sym('+') {
                self.bump();
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.at_sym('-') {
                self.bump();
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.at_sym('*') {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.at_sym('-') {
            self.bump();
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.at_sym('^') {
            self.bump();
            let e = self.small()?;
            Ok(Expr::Pow(Box::new(base), e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(s) => {
                self.bump();
                Ok(Expr::Int(s.parse().expect("digits")))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "sigma" => {
                    self.bump();
                    self.expect_sym('[')?;
                    let mut parts = Vec::new();
                    if !self.at_sym(']') {
                        if !matches!(self.peek(), Tok::Int(_)) {
                            return Err(self.error(&["integer", "']'"]));
                        }
                        parts.push(self.small()?);
                        while self.at_sym(',') {
                            self.bump();
                            parts.push(self.small()?);
                        }
                    }
                    if !self.at_sym(']') {
                        return Err(self.error(&["','", "']'"]));
                    }
                    self.bump();
                    Ok(Expr::Sigma(parts))
                }
                "zeta" => {
                    self.bump();
                    Ok(Expr::Zeta)
                }
                "c" => {
                    self.bump();
                    self.expect_sym('(')?;
                    let i = self.small()?;
                    self.expect_sym(',')?;
                    let b = self.bundle()?;
                    self.expect_sym(')')?;
                    Ok(Expr::Chern(i, b))
                }
                "integrate" => {
                    self.bump();
                    self.expect_sym('(')?;
                    let e = self.expr()?;
                    self.expect_sym(')')?;
                    Ok(Expr::Integrate(Box::new(e)))
                }
                _ => Err(self.error(ATOM_START)),
            },
            _ => Err(self.error(ATOM_START)),
        }
    }

    fn bundle(&mut self) -> Result<Bundle, ParseError> {
        let name = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return Err(self.error(BUNDLE_START)),
        };
        let simple = match name.as_str() {
            "S" => Some(Bundle::Sub),
            "Sdual" => Some(Bundle::SubDual),
            "Q" => Some(Bundle::Quotient),
            _ => None,
        };
        if let Some(b) = simple {
            self.bump();
            return Ok(b);
        }
        if !["O", "sym", "dual", "twist", "sum", "quot"].contains(&name.as_str()) {
            return Err(self.error(BUNDLE_START));
        }
        self.bump();
        self.expect_sym('(')?;
        let b = match name.as_str() {
            "O" => Bundle::Line(self.signed()?),
            "sym" => {
                let m = self.small()?;
                self.expect_sym(',')?;
                Bundle::Sym(m, Box::new(self.bundle()?))
            }
            "dual" => Bundle::Dual(Box::new(self.bundle()?)),
            "twist" => {
                let b = self.bundle()?;
                self.expect_sym(',')?;
                Bundle::Twist(Box::new(b), self.signed()?)
            }
            "sum" | "quot" => {
                let a = self.bundle()?;
                self.expect_sym(',')?;
                let b = self.bundle()?;
                if name == "sum" {
                    Bundle::Sum(Box::new(a), Box::new(b))
                } else {
                    Bundle::Quot(Box::new(a), Box::new(b))
                }
            }
            _ => unreachable!(),
        };
        self.expect_sym(')')?;
        Ok(b)
    }
}

/// Parses a full query: an expression with an optional `in` context.
pub fn parse(input: &str) -> Result<Query, ParseError> {
    let tokens = lex(input)?;
    Parser { tokens, pos: 0 }.query()
}

/// Parses a context clause on its own, e.g. `G(2,5)`.
pub fn parse_context(input: &str) -> Result<Context, ParseError> {
    let tokens = lex(input)?;
    let mut p = Parser { tokens, pos: 0 };
    let ctx = p.context()?;
    if *p.peek() != Tok::Eof {
        return Err(p.error(&["end of input"]));
    }
    Ok(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_node() {
        let q = parse("sigma[1]^6 in G(2,5)").unwrap();
        assert_eq!(q.expr, Expr::Pow(Box::new(Expr::Sigma(vec![1])), 6));
        assert_eq!(q.context, Some(Context::Grass { k: 2, n: 5 }));
    }

    #[test]
    fn integrate_node() {
        let q = parse("integrate(c(6, sym(5, Sdual))) in G(2,5)").unwrap();
        let want = Expr::Integrate(Box::new(Expr::Chern(
            6,
            Bundle::Sym(5, Box::new(Bundle::SubDual)),
        )));
        assert_eq!(q.expr, want);
    }

    #[test]
    fn eof_diagnostic() {
        let e = parse("sigma[1").unwrap_err();
        assert_eq!((e.offset, e.line, e.column), (7, 1, 8));
        assert_eq!(e.expected, vec!["','", "']'"]);
        assert_eq!(
            e.to_string(),
            "1:8: syntax error: expected one of ',', ']', found end of input"
        );
    }

    #[test]
    fn diagnostics_carry_lines() {
        let e = parse("sigma[1]\n  + in G(2,4)").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        assert!(e.expected.contains(&"'sigma'".to_string()));
        let e = parse("sigma[1] $").unwrap_err();
        assert_eq!(e.column, 10);
        assert_eq!(e.found, "character '$'");
    }

    #[test]
    fn precedence_and_rendering() {
        let q = parse("-sigma[1]^2 + 3*(sigma[1] - zeta)·zeta").unwrap();
        assert_eq!(q.expr.to_string(), "-sigma[1]^2 + 3*(sigma[1] - zeta)*zeta");
        let q = parse("a").unwrap_err();
        assert_eq!(q.found, "'a'");
        let q = parse("1 - (2 - 3)").unwrap();
        assert_eq!(q.expr.to_string(), "1 - (2 - 3)");
        let q = parse("(1 - 2) - 3").unwrap();
        assert_eq!(q.expr.to_string(), "1 - 2 - 3");
    }

    #[test]
    fn projective_context() {
        let q = parse("integrate(zeta^11) in P(sym(2, Sdual)) over G(3,5)").unwrap();
        assert_eq!(
            q.context.unwrap().to_string(),
            "P(sym(2, Sdual)) over G(3,5)"
        );
        let b = parse("c(1, twist(quot(S, O(-2)), -1))").unwrap();
        assert_eq!(b.expr.to_string(), "c(1, twist(quot(S, O(-2)), -1))");
    }

    #[test]
    fn out_of_range_integers() {
        let e = parse("sigma[99999999999]").unwrap_err();
        assert!(e.found.contains("out of range"));
        assert_eq!(e.column, 7);
    }
}
