//! Group expressions such as `A5 x C3`, `PSL2(9)` or `(C2 x C2) x S3`.
//!
//! ```text
//! expr := term ('x' term)*
//! term := atom | '(' expr ')'
//! atom := NAME '(' INT ')' | NAME INT | 'Q8'
//! NAME := C | D | S | A | SL2 | PSL2 | PGL2      (case-insensitive)
//! ```
//!
//! Products associate to the left. Whitespace is ignored between tokens.
//! Error positions are 1-based byte positions, so an error at the end of
//! `"A5 x"` is reported at position 5.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::group::{build_atomic, direct_product, Atom, GroupError, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Atom(Atom),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown group name {name:?} at offset {offset}")]
    UnknownName { offset: usize, name: String },
    #[error("malformed integer {text:?} at offset {offset}")]
    BadInteger { offset: usize, text: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownName { offset, .. }
            | ParseError::BadInteger { offset, .. } => *offset,
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn syntax<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.pos + 1,
            message: message.to_string(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.syntax(&format!("expected '{c}'"))
        }
    }

    fn expr(&mut self) -> Result<GroupExpr, ParseError> {
        let mut left = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('x' | 'X') => {
                    self.pos += 1;
                    let right = self.term()?;
                    left = GroupExpr::Product(Box::new(left), Box::new(right));
                }
                _ => return Ok(left),
            }
        }
    }

    fn term(&mut self) -> Result<GroupExpr, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => self.atom(),
            Some(_) => self.syntax("expected a group name or '('"),
            None => self.syntax("unexpected end of input"),
        }
    }

    fn atom(&mut self) -> Result<GroupExpr, ParseError> {
        let start = self.pos;
        let rest = &self.text[start..];
        let upper: String = rest
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_uppercase();
        // longest name first so that "PSL2" is not read as "P..." or "S"
        const NAMES: [&str; 8] = ["PSL2", "PGL2", "SL2", "Q8", "C", "D", "S", "A"];
        let Some(name) = NAMES.iter().find(|n| upper.starts_with(*n)) else {
            let word: String = rest
                .chars()
                .take_while(|c| c.is_ascii_alphanumeric())
                .collect();
            return Err(ParseError::UnknownName {
                offset: start + 1,
                name: word,
            });
        };
        self.pos += name.len();
        if *name == "Q8" {
            return Ok(GroupExpr::Atom(Atom::Quaternion8));
        }
        let n = self.parameter(name)?;
        let atom = match *name {
            "C" => Atom::Cyclic(n),
            "D" => Atom::Dihedral(n),
            "S" => Atom::Symmetric(n),
            "A" => Atom::Alternating(n),
            "SL2" => Atom::Sl2(n),
            "PSL2" => Atom::Psl2(n),
            _ => Atom::Pgl2(n),
        };
        Ok(GroupExpr::Atom(atom))
    }

    /// `'(' INT ')'` or a bare `INT`.
    fn parameter(&mut self, name: &str) -> Result<u32, ParseError> {
        self.skip_ws();
        let parenthesized = self.peek() == Some('(');
        if parenthesized {
            self.pos += 1;
            self.skip_ws();
        }
        let start = self.pos;
        let digits: String = self.text[start..]
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric() && !matches!(c, 'x' | 'X'))
            .collect();
        if digits.is_empty() {
            return self.syntax(&format!("expected an integer after {name}"));
        }
        self.pos += digits.len();
        let n = digits
            .parse::<u32>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or(ParseError::BadInteger {
                offset: start + 1,
                text: digits,
            })?;
        if parenthesized {
            self.expect(')')?;
        }
        Ok(n)
    }
}

pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(e)
}

impl std::str::FromStr for GroupExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_expr(s)
    }
}

impl fmt::Display for GroupExpr {
    /// Canonical form: `A5`, `PSL2(9)`, left-nested products without parentheses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Atom(a) => write!(f, "{a}"),
            GroupExpr::Product(l, r) => match **r {
                GroupExpr::Product(..) => write!(f, "{l} x ({r})"),
                GroupExpr::Atom(_) => write!(f, "{l} x {r}"),
            },
        }
    }
}

impl GroupExpr {
    /// Order computed from the expression alone; validates parameters.
    pub fn predicted_order(&self) -> Result<u64, GroupError> {
        match self {
            GroupExpr::Atom(a) => a.predicted_order(),
            GroupExpr::Product(l, r) => {
                let (a, b) = (l.predicted_order()?, r.predicted_order()?);
                Ok(a.saturating_mul(b))
            }
        }
    }
}

/// Builds the group, refusing before any construction if the predicted order exceeds `cap`.
pub fn elaborate(expr: &GroupExpr, cap: u64) -> Result<Arc<GroupTable>, GroupError> {
    let order = expr.predicted_order()?;
    if order > cap {
        return Err(GroupError::CapExceeded { order, cap });
    }
    let g = build(expr, cap)?;
    debug_assert_eq!(g.order() as u64, order);
    Ok(g)
}

fn build(expr: &GroupExpr, cap: u64) -> Result<Arc<GroupTable>, GroupError> {
    match expr {
        GroupExpr::Atom(a) => build_atomic(*a, cap),
        GroupExpr::Product(l, r) => direct_product(&build(l, cap)?, &build(r, cap)?, cap),
    }
}
