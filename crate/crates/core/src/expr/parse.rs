//! Recursive-descent parser for trig/surd expressions.
//!
//! ```text
//! equation := expr '=' expr
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*'? factor | '/' factor)*
//! factor   := number | 'pi' | func '(' expr ')' | '(' expr ')' | '-' factor
//! func     := 'sin' | 'cos' | 'tan' | 'sqrt'
//! ```
//!
//! Juxtaposition multiplies, so `4 sin(2pi/11)` and `3pi/11` parse as
//! expected. Whitespace is insignificant.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::rational::{parse_rational, render, to_f64};
use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Sqrt,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        match name {
            "sin" => Some(Func::Sin),
            "cos" => Some(Func::Cos),
            "tan" => Some(Func::Tan),
            "sqrt" => Some(Func::Sqrt),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Sqrt => "sqrt",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Pi,
    Call(Func, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

impl Expr {
    /// Direct double-precision evaluation. Not certified.
    pub fn eval_f64(&self) -> f64 {
        match self {
            Expr::Num(q) => to_f64(q),
            Expr::Pi => std::f64::consts::PI,
            Expr::Call(f, arg) => {
                let x = arg.eval_f64();
                match f {
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Tan => x.tan(),
                    Func::Sqrt => x.sqrt(),
                }
            }
            Expr::Add(a, b) => a.eval_f64() + b.eval_f64(),
            Expr::Sub(a, b) => a.eval_f64() - b.eval_f64(),
            Expr::Mul(a, b) => a.eval_f64() * b.eval_f64(),
            Expr::Div(a, b) => a.eval_f64() / b.eval_f64(),
            Expr::Neg(a) => -a.eval_f64(),
        }
    }
}

/// Fully parenthesized rendering; reparses to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{}", render(q)),
            Expr::Pi => write!(f, "pi"),
            Expr::Call(func, arg) => write!(f, "{}({arg})", func.name()),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Neg(a) => write!(f, "-({a})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Equals,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if d.is_ascii_digit() || d == '.' {
                    end = i + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let literal = &text[pos..end];
            let q = parse_rational(literal)
                .ok_or_else(|| Error::Syntax { pos, message: format!("malformed number '{literal}'") })?;
            out.push((pos, Tok::Num(q)));
            continue;
        }
        if c.is_alphabetic() {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if d.is_alphabetic() {
                    end = i + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &text[pos..end];
            let word = if word == "π" { "pi".to_string() } else { word.to_ascii_lowercase() };
            out.push((pos, Tok::Ident(word)));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{00b7}' => Tok::Star,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Equals,
            other => return Err(Error::Syntax { pos, message: format!("unexpected character '{other}'") }),
        };
        out.push((pos, tok));
        chars.next();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    len: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser { toks: tokenize(text)?, idx: 0, len: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.len, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let message = message.into();
        let message =
            if self.idx >= self.toks.len() { format!("{message} at end of input") } else { message };
        Err(Error::Syntax { pos: self.pos(), message })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.idx += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.bump();
                Ok(Expr::Num(q))
            }
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.factor()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.factor()
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                if name == "pi" {
                    self.bump();
                    return Ok(Expr::Pi);
                }
                let Some(func) = Func::from_name(&name) else {
                    return self.error(format!("unknown name '{name}'"));
                };
                self.bump();
                self.expect(Tok::LParen, &format!("'(' after {name}"))?;
                let arg = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(Expr::Call(func, Box::new(arg)))
            }
            Some(_) => self.error("expected a number, 'pi', a function or '('"),
            None => self.error("expected an operand"),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.idx < self.toks.len() {
            self.error("unexpected trailing input")
        } else {
            Ok(())
        }
    }
}

/// Parses a single expression.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses `lhs = rhs`.
pub fn parse_equation(text: &str) -> Result<(Expr, Expr)> {
    let mut p = Parser::new(text)?;
    let lhs = p.expr()?;
    p.expect(Tok::Equals, "'='")?;
    let rhs = p.expr()?;
    p.finish()?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn headline_lhs() {
        let e = parse("tan(3pi/11) + 4 sin(2pi/11)").unwrap();
        let three_pi_11 = Expr::Div(Box::new(Expr::Mul(Box::new(Expr::Num(int(3))), Box::new(Expr::Pi))), Box::new(Expr::Num(int(11))));
        match e {
            Expr::Add(a, b) => {
                assert_eq!(*a, Expr::Call(Func::Tan, Box::new(three_pi_11)));
                assert!(matches!(*b, Expr::Mul(ref c, ref s) if **c == Expr::Num(int(4)) && matches!(**s, Expr::Call(Func::Sin, _))));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sqrt_node() {
        assert_eq!(parse("sqrt(11)").unwrap(), Expr::Call(Func::Sqrt, Box::new(Expr::Num(int(11)))));
    }

    #[test]
    fn unbalanced_paren_reports_end_of_input() {
        let err = parse("tan(3pi/11").unwrap_err();
        match err {
            Error::Syntax { pos, message } => {
                assert_eq!(pos, 10);
                assert!(message.contains("end of input"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn error_positions() {
        assert!(matches!(parse("1 + # 2"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse("foo(1)"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("1 2 )"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_equation("1 + 2"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn precedence_and_eval() {
        let v = parse("1 + 2*3 - 4/2 - -1").unwrap().eval_f64();
        assert_eq!(v, 6.0);
        let v = parse("3/2 sqrt(4)").unwrap().eval_f64();
        assert_eq!(v, 3.0);
        let v = parse("tan(3pi/11) + 4 sin(2pi/11)").unwrap().eval_f64();
        assert!((v - 11f64.sqrt()).abs() < 1e-12);
    }
}
