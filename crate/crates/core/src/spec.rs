//! Text grammar for group specifications, one per line:
//!
//! ```text
//! cyclic(7)  dihedral(10)  symmetric(3)  elemabelian(2,3)  frobenius(11,5)
//! affine(2,3)  semilinear(2,3)  product(A, B, ...)  wreath(base, top, natural|regular)
//! subgroup(spec; g0*g1^-1, g2, ...)
//! ```

use std::fmt;

use crate::constructions::{self, Word, WreathAction};
use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    Symmetric(u64),
    ElemAbelian(u64, u32),
    Affine(u64, u32),
    Semilinear(u64, u32),
    Frobenius(u64, u64),
    Product(Vec<GroupSpec>),
    Wreath(Box<GroupSpec>, Box<GroupSpec>, WreathAction),
    Subgroup(Box<GroupSpec>, Vec<Word>),
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut p = Parser { src: text, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Group> {
        match self {
            GroupSpec::Cyclic(n) => constructions::cyclic(*n),
            GroupSpec::Dihedral(n) => constructions::dihedral(*n),
            GroupSpec::Symmetric(n) => constructions::symmetric(*n),
            GroupSpec::ElemAbelian(p, k) => constructions::elem_abelian(*p, *k),
            GroupSpec::Affine(p, k) => constructions::affine(*p, *k),
            GroupSpec::Semilinear(p, k) => constructions::semilinear(*p, *k),
            GroupSpec::Frobenius(p, q) => constructions::frobenius(*p, *q),
            GroupSpec::Product(parts) => {
                let groups: Vec<Group> = parts.iter().map(|s| s.build()).collect::<Result<_>>()?;
                constructions::direct_product(&groups)
            }
            GroupSpec::Wreath(base, top, action) => constructions::wreath(&base.build()?, &top.build()?, *action),
            GroupSpec::Subgroup(spec, words) => {
                let parent = spec.build()?;
                let gens = words.iter().map(|w| w.evaluate(&parent)).collect::<Result<Vec<_>>>()?;
                Group::from_generators(parent.degree(), gens)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupSpec::ElemAbelian(p, k) => write!(f, "elemabelian({p},{k})"),
            GroupSpec::Affine(p, k) => write!(f, "affine({p},{k})"),
            GroupSpec::Semilinear(p, k) => write!(f, "semilinear({p},{k})"),
            GroupSpec::Frobenius(p, q) => write!(f, "frobenius({p},{q})"),
            GroupSpec::Product(parts) => {
                write!(f, "product(")?;
                for (i, s) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            GroupSpec::Wreath(b, t, a) => {
                let a = match a {
                    WreathAction::Natural => "natural",
                    WreathAction::Regular => "regular",
                };
                write!(f, "wreath({b}, {t}, {a})")
            }
            GroupSpec::Subgroup(s, words) => {
                write!(f, "subgroup({s};")?;
                for (i, w) in words.iter().enumerate() {
                    write!(f, "{}{w}", if i > 0 { ", " } else { " " })?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses a comma-separated list of words such as `g0*g1^-1, g2`.
pub fn parse_words(text: &str) -> Result<Vec<Word>> {
    let mut p = Parser { src: text, pos: 0 };
    let words = p.words(None)?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(words)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a name"));
        }
        let s = self.rest()[..len].to_ascii_lowercase();
        self.pos += len;
        Ok(s)
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        let v = self.rest()[..len].parse().map_err(|_| self.error("number out of range"))?;
        self.pos += len;
        Ok(v)
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let v = self.number()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn two_numbers(&mut self) -> Result<(u64, u64)> {
        self.expect('(')?;
        let a = self.number()?;
        self.expect(',')?;
        let b = self.number()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn one_number(&mut self) -> Result<u64> {
        self.expect('(')?;
        let a = self.number()?;
        self.expect(')')?;
        Ok(a)
    }

    fn exponent(&mut self, e: u64) -> Result<u32> {
        u32::try_from(e).map_err(|_| self.error("exponent out of range"))
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        let spec = match name.as_str() {
            "cyclic" => GroupSpec::Cyclic(self.one_number()?),
            "dihedral" => GroupSpec::Dihedral(self.one_number()?),
            "symmetric" => GroupSpec::Symmetric(self.one_number()?),
            "elemabelian" => {
                let (p, k) = self.two_numbers()?;
                GroupSpec::ElemAbelian(p, self.exponent(k)?)
            }
            "affine" => {
                let (p, k) = self.two_numbers()?;
                GroupSpec::Affine(p, self.exponent(k)?)
            }
            "semilinear" => {
                let (p, k) = self.two_numbers()?;
                GroupSpec::Semilinear(p, self.exponent(k)?)
            }
            "frobenius" => {
                let (p, q) = self.two_numbers()?;
                GroupSpec::Frobenius(p, q)
            }
            "product" => {
                self.expect('(')?;
                let mut parts = vec![self.spec()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    parts.push(self.spec()?);
                }
                self.expect(')')?;
                GroupSpec::Product(parts)
            }
            "wreath" => {
                self.expect('(')?;
                let base = self.spec()?;
                self.expect(',')?;
                let top = self.spec()?;
                self.expect(',')?;
                let action = match self.ident()?.as_str() {
                    "natural" => WreathAction::Natural,
                    "regular" => WreathAction::Regular,
                    _ => return Err(self.error("expected 'natural' or 'regular'")),
                };
                self.expect(')')?;
                GroupSpec::Wreath(Box::new(base), Box::new(top), action)
            }
            "subgroup" => {
                self.expect('(')?;
                let parent = self.spec()?;
                self.expect(';')?;
                let words = self.words(Some(')'))?;
                self.expect(')')?;
                GroupSpec::Subgroup(Box::new(parent), words)
            }
            _ => {
                self.pos = start;
                return Err(self.error(&format!("unknown constructor '{name}'")));
            }
        };
        Ok(spec)
    }

    fn words(&mut self, terminator: Option<char>) -> Result<Vec<Word>> {
        let mut words = Vec::new();
        if self.peek() == terminator || self.peek().is_none() {
            return Ok(words);
        }
        loop {
            words.push(self.word()?);
            if self.peek() == Some(',') {
                self.pos += 1;
            } else {
                return Ok(words);
            }
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        if self.peek() == Some('e') {
            self.pos += 1;
            return Ok(Word(letters));
        }
        loop {
            if self.peek() != Some('g') {
                return Err(self.error("expected a generator like g0"));
            }
            self.pos += 1;
            let i = self.number()? as usize;
            let e = if self.peek() == Some('^') {
                self.pos += 1;
                self.signed()?
            } else {
                1
            };
            letters.push((i, e));
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok(Word(letters));
            }
        }
    }
}
