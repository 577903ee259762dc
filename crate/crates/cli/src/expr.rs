//! Arithmetic expression grammar for user-defined graph surfaces.
//!
//! Grammar (EBNF, also documented in the README):
//!
//! ```text
//! expr    := term { ("+" | "-") term } ;
//! term    := factor { ("*" | "/") factor } ;
//! factor  := "-" factor | primary ;
//! primary := number | "x" | "y" | "pi" | "e"
//!          | function "(" expr ")" | "(" expr ")" ;
//! function := "sin" | "cos" | "tan" | "sinh" | "cosh" | "tanh"
//!           | "exp" | "log" | "arctan" | "sqrt" ;
//! ```
//!
//! The expression is parsed once into an AST and evaluated in jet
//! arithmetic, so user graphs get exact first and second derivatives.

use anyhow::{anyhow, bail, Result};
use mixedtype::taylor::Jet;

#[derive(Clone, Debug)]
pub enum Expr {
    Num(f64),
    X,
    Y,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

#[derive(Copy, Clone, Debug)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Exp,
    Log,
    Arctan,
    Sqrt,
}

impl Expr {
    pub fn eval(&self, x: Jet, y: Jet) -> Jet {
        match self {
            Expr::Num(c) => Jet::constant(*c),
            Expr::X => x,
            Expr::Y => y,
            Expr::Neg(e) => -e.eval(x, y),
            Expr::Add(a, b) => a.eval(x, y) + b.eval(x, y),
            Expr::Sub(a, b) => a.eval(x, y) - b.eval(x, y),
            Expr::Mul(a, b) => a.eval(x, y) * b.eval(x, y),
            Expr::Div(a, b) => a.eval(x, y) / b.eval(x, y),
            Expr::Call(f, e) => {
                let v = e.eval(x, y);
                match f {
                    Func::Sin => v.sin(),
                    Func::Cos => v.cos(),
                    Func::Tan => v.tan(),
                    Func::Sinh => v.sinh(),
                    Func::Cosh => v.cosh(),
                    Func::Tanh => v.tanh(),
                    Func::Exp => v.exp(),
                    Func::Log => v.ln(),
                    Func::Arctan => v.atan(),
                    Func::Sqrt => v.sqrt(),
                }
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    bail!("expected `)` at byte {}", self.pos);
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.ident(),
            other => bail!("unexpected input at byte {}: {:?}", self.pos, other.map(char::from)),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_digit()
                || self.src[self.pos] == b'.'
                || self.src[self.pos] == b'e'
                || self.src[self.pos] == b'E'
                || ((self.src[self.pos] == b'+' || self.src[self.pos] == b'-')
                    && self.pos > start
                    && (self.src[self.pos - 1] == b'e' || self.src[self.pos - 1] == b'E')))
        {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<f64>()
            .map(Expr::Num)
            .map_err(|_| anyhow!("cannot parse number `{text}`"))
    }

    fn ident(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let func = match name {
            "x" => return Ok(Expr::X),
            "y" => return Ok(Expr::Y),
            "pi" => return Ok(Expr::Num(std::f64::consts::PI)),
            "e" => return Ok(Expr::Num(std::f64::consts::E)),
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "tanh" => Func::Tanh,
            "exp" => Func::Exp,
            "log" => Func::Log,
            "arctan" => Func::Arctan,
            "sqrt" => Func::Sqrt,
            other => bail!("unknown identifier `{other}`"),
        };
        if !self.eat(b'(') {
            bail!("function `{name}` expects `(`");
        }
        let arg = self.expr()?;
        if !self.eat(b')') {
            bail!("expected `)` after argument of `{name}`");
        }
        Ok(Expr::Call(func, Box::new(arg)))
    }
}

/// Parse a single expression, requiring the whole input to be consumed.
pub fn parse_expression(src: &str) -> Result<Expr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        bail!("trailing input at byte {}: `{}`", p.pos, &src[p.pos..]);
    }
    Ok(expr)
}

/// Strip comments/blank lines from a graph expression file and parse the
/// remaining text as one expression.
pub fn parse_graph_source(text: &str) -> Result<Expr> {
    let body: String = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .collect::<Vec<_>>()
        .join(" ");
    let trimmed = body.trim();
    if trimmed.is_empty() {
        bail!("graph file contains no expression");
    }
    parse_expression(trimmed)
}
