use num_bigint::BigInt;

use super::{Identity, ProductTree, Term};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    declared: bool,
    vars: Vec<String>,
}

/// Parse the identity DSL (see the module docs for the grammar).
pub fn parse_identity(src: &str) -> Result<Identity> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, declared: false, vars: Vec::new() };
    p.skip_ws();
    if p.peek() == Some(b'[') {
        p.declaration()?;
    }
    let lhs = p.side()?;
    let rhs = if p.eat(b'=') { p.side()? } else { Vec::new() };
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Identity::new(p.vars, lhs, rhs)
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    /// Skip whitespace, then consume `b` if it is next.
    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", b as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => self.pos += 1,
            _ => return Err(self.error("expected a variable name")),
        }
        while self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn declaration(&mut self) -> Result<()> {
        self.expect(b'[')?;
        loop {
            let name = self.ident()?;
            if self.vars.contains(&name) {
                return Err(Error::Arity(format!("variable {name} declared twice")));
            }
            self.vars.push(name);
            if self.eat(b']') {
                break;
            }
            self.eat(b',');
        }
        self.declared = true;
        Ok(())
    }

    fn var(&mut self) -> Result<ProductTree> {
        let start = self.pos;
        let name = self.ident()?;
        if let Some(i) = self.vars.iter().position(|v| *v == name) {
            return Ok(ProductTree::Var(i));
        }
        if self.declared {
            self.pos = start;
            return Err(Error::Arity(format!("variable {name} is not declared")));
        }
        self.vars.push(name);
        Ok(ProductTree::Var(self.vars.len() - 1))
    }

    fn tree(&mut self) -> Result<ProductTree> {
        if self.eat(b'(') {
            let left = self.tree()?;
            let right = self.tree()?;
            self.expect(b')')?;
            Ok(ProductTree::product(left, right))
        } else {
            self.var()
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok().filter(|s| !s.is_empty()).and_then(|s| s.parse().ok())
    }

    fn coefficient(&mut self) -> Result<Option<Scalar>> {
        self.skip_ws();
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let den = if self.peek() == Some(b'/') {
            self.pos += 1;
            self.digits().ok_or_else(|| self.error("expected a denominator"))?
        } else {
            BigInt::from(1)
        };
        let c = Scalar::from_big(num, den).map_err(|_| self.error("zero denominator"))?;
        Ok(Some(c))
    }

    /// A literal `0` side, or a signed sum of summands.
    fn side(&mut self) -> Result<Vec<Term>> {
        self.skip_ws();
        let save = self.pos;
        if let Some(c) = self.coefficient()? {
            if c.is_zero() && !self.eat(b'*') {
                return Ok(Vec::new());
            }
        }
        self.pos = save;

        let mut terms = Vec::new();
        let mut negative = self.eat(b'-');
        loop {
            let coef = match self.coefficient()? {
                Some(c) => {
                    self.expect(b'*')?;
                    c
                }
                None => Scalar::one(),
            };
            let tree = self.tree()?;
            terms.push((if negative { -coef } else { coef }, tree));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(terms)
    }
}
