//! The element literal grammar.
//!
//! Modular elements are decimal integers (sign allowed), reduced to the
//! canonical residue on parse. Matrix elements are nested bracket lists,
//! `[[e,e],[e,e]]`, whose entries are Gaussian rationals written as `p`,
//! `p/q`, `p/q+r/si`, `i` or `-i` (so `3/4i` means (3/4)i). Whitespace is
//! tolerated on input; canonical output contains none. Parsing the canonical
//! literal of an element always reproduces the element.

use super::gaussian::GaussianRational;
use super::matrix::Matrix;
use super::{Element, RingContext};
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{BigRational, Integer, One, Zero};

pub(super) fn parse_ring_spec(s: &str) -> Result<RingContext> {
    let s = s.trim();
    if let Some(n) = s.strip_prefix("zmod:") {
        let n: u64 = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in ring spec {s:?}")))?;
        return RingContext::modular(n).map_err(|_| Error::Parse("modulus must be >= 1".into()));
    }
    if let Some(k) = s.strip_prefix("gqmat:") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad dimension in ring spec {s:?}")))?;
        return RingContext::matrix(k).map_err(|_| Error::Parse("dimension must be >= 1".into()));
    }
    Err(Error::Parse(format!(
        "unknown ring spec {s:?}; expected zmod:<n> or gqmat:<k>"
    )))
}

pub(super) fn parse_element(ring: &RingContext, s: &str) -> Result<Element> {
    match ring {
        RingContext::Modular { modulus } => {
            let t = s.trim();
            let v: BigInt = t
                .parse()
                .map_err(|_| Error::Parse(format!("bad residue literal {t:?}")))?;
            let r = v.mod_floor(&BigInt::from(*modulus));
            let (_, digits) = r.to_u64_digits();
            Ok(ring.residue(*digits.first().unwrap_or(&0))?)
        }
        RingContext::Matrix { dim } => {
            let stripped: String = s.chars().filter(|c| !c.is_whitespace()).collect();
            let mut p = Cursor {
                s: stripped.as_bytes(),
                pos: 0,
            };
            let rows = p.matrix()?;
            if !p.done() {
                return Err(Error::Parse(format!(
                    "trailing input after matrix literal {s:?}"
                )));
            }
            if rows.len() != *dim || rows.iter().any(|r| r.len() != *dim) {
                return Err(Error::Parse(format!(
                    "expected a {dim}x{dim} matrix literal, got {s:?}"
                )));
            }
            ring.matrix_from_rows(rows)
        }
    }
}

pub(super) fn matrix_literal(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.dim())
        .map(|r| {
            let entries: Vec<String> = (0..m.dim()).map(|c| m.at(r, c).literal()).collect();
            format!("[{}]", entries.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn done(&self) -> bool {
        self.pos == self.s.len()
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {:?} at byte {} of matrix literal",
                c as char, self.pos
            )))
        }
    }

    fn matrix(&mut self) -> Result<Vec<Vec<GaussianRational>>> {
        self.eat(b'[')?;
        let mut rows = vec![self.row()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            rows.push(self.row()?);
        }
        self.eat(b']')?;
        Ok(rows)
    }

    fn row(&mut self) -> Result<Vec<GaussianRational>> {
        self.eat(b'[')?;
        let mut entries = vec![self.gaussian()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            entries.push(self.gaussian()?);
        }
        self.eat(b']')?;
        Ok(entries)
    }

    // entry := sign? term (sign term)?   with at most one real and one
    // imaginary term; term := rational 'i'? | 'i'
    fn gaussian(&mut self) -> Result<GaussianRational> {
        let mut re: Option<BigRational> = None;
        let mut im: Option<BigRational> = None;
        let (v, imag) = self.term(true)?;
        if imag {
            im = Some(v);
        } else {
            re = Some(v);
        }
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            let (v, imag) = self.term(false)?;
            let slot = if imag { &mut im } else { &mut re };
            if slot.is_some() {
                return Err(Error::Parse(
                    "two real or two imaginary terms in one entry".into(),
                ));
            }
            *slot = Some(v);
        }
        Ok(GaussianRational::new(
            re.unwrap_or_else(BigRational::zero),
            im.unwrap_or_else(BigRational::zero),
        ))
    }

    fn term(&mut self, sign_optional: bool) -> Result<(BigRational, bool)> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ if sign_optional => false,
            _ => return Err(Error::Parse("expected a sign".into())),
        };
        let mag = if self.peek() == Some(b'i') {
            self.pos += 1;
            BigRational::one()
        } else {
            let numer = self.integer()?;
            let denom = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.integer()?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                d
            } else {
                BigInt::one()
            };
            let q = BigRational::new(numer, denom);
            if self.peek() == Some(b'i') {
                self.pos += 1;
                return Ok((if negative { -q } else { q }, true));
            }
            return Ok((if negative { -q } else { q }, false));
        };
        Ok((if negative { -mag } else { mag }, true))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse(format!(
                "expected digits at byte {start} of matrix literal"
            )));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string parses"))
    }
}
