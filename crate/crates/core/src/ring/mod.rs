//! Concrete unital *-rings and their elements.
//!
//! Two families are supported:
//!
//! * `modular(n)`: the integers modulo n, n >= 1, stored as canonical
//!   residues in [0, n). The involution is the identity. n = 1 is the zero
//!   ring, where 0 = 1.
//! * `matrix(k)`: k x k matrices over the Gaussian rationals, k >= 1, with
//!   conjugate transpose as the involution.
//!
//! Elements are plain values carrying their ring; mixing elements of
//! different rings is reported as an error, never coerced. Equality is
//! structural, and both representations are canonical, so `==` is
//! mathematical equality.

mod gaussian;
mod literal;
mod matrix;

pub use gaussian::GaussianRational;
pub use matrix::Matrix;

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingContext {
    Modular { modulus: u64 },
    Matrix { dim: usize },
}

impl RingContext {
    /// Z/n. The modulus must be at least 1.
    pub fn modular(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidShape("modulus must be >= 1".into()));
        }
        Ok(RingContext::Modular { modulus })
    }

    /// k x k matrices over the Gaussian rationals. k must be at least 1.
    pub fn matrix(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidShape("matrix dimension must be >= 1".into()));
        }
        Ok(RingContext::Matrix { dim })
    }

    /// Ring spec literal: `zmod:<n>` or `gqmat:<k>`.
    pub fn spec(&self) -> String {
        match self {
            RingContext::Modular { modulus } => format!("zmod:{modulus}"),
            RingContext::Matrix { dim } => format!("gqmat:{dim}"),
        }
    }

    pub fn parse_spec(s: &str) -> Result<Self> {
        literal::parse_ring_spec(s)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, RingContext::Modular { .. })
    }

    /// Whether multiplication commutes; true for the modular family.
    pub fn is_commutative(&self) -> bool {
        match self {
            RingContext::Modular { .. } => true,
            RingContext::Matrix { dim } => *dim == 1,
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            RingContext::Modular { .. } => self.residue_unchecked(0),
            RingContext::Matrix { dim } => Element {
                ring: self.clone(),
                payload: Payload::Matrix(Matrix::zero(*dim)),
            },
        }
    }

    pub fn one(&self) -> Element {
        match self {
            RingContext::Modular { .. } => self.from_integer(1),
            RingContext::Matrix { dim } => Element {
                ring: self.clone(),
                payload: Payload::Matrix(Matrix::identity(*dim)),
            },
        }
    }

    /// The image of the integer v under the unique ring map from Z.
    pub fn from_integer(&self, v: i64) -> Element {
        match self {
            RingContext::Modular { modulus } => {
                let n = *modulus as i128;
                let r = ((v as i128 % n) + n) % n;
                self.residue_unchecked(r as u64)
            }
            RingContext::Matrix { dim } => Element {
                ring: self.clone(),
                payload: Payload::Matrix(Matrix::scalar(
                    *dim,
                    &GaussianRational::from_integer(v),
                )),
            },
        }
    }

    /// Canonical residue in a modular ring.
    pub fn residue(&self, v: u64) -> Result<Element> {
        match self {
            RingContext::Modular { modulus } => Ok(self.residue_unchecked(v % modulus)),
            RingContext::Matrix { .. } => Err(Error::InvalidShape(
                "residues only exist in modular rings".into(),
            )),
        }
    }

    fn residue_unchecked(&self, v: u64) -> Element {
        Element {
            ring: self.clone(),
            payload: Payload::Residue(v),
        }
    }

    /// A matrix element from rows of Gaussian rationals.
    pub fn matrix_from_rows(&self, rows: Vec<Vec<GaussianRational>>) -> Result<Element> {
        match self {
            RingContext::Matrix { dim } => {
                let m = Matrix::from_rows(rows)?;
                if m.dim() != *dim {
                    return Err(Error::InvalidShape(format!(
                        "expected a {dim}x{dim} matrix, got {}x{}",
                        m.dim(),
                        m.dim()
                    )));
                }
                Ok(Element {
                    ring: self.clone(),
                    payload: Payload::Matrix(m),
                })
            }
            RingContext::Modular { .. } => Err(Error::InvalidShape(
                "matrix elements only exist in matrix rings".into(),
            )),
        }
    }

    /// Parse an element literal for this ring.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        literal::parse_element(self, s)
    }

    /// All elements in ascending residue order. Errors on infinite rings.
    pub fn enumerate(&self) -> Result<Vec<Element>> {
        match self {
            RingContext::Modular { modulus } => Ok((0..*modulus)
                .map(|v| self.residue_unchecked(v))
                .collect()),
            RingContext::Matrix { .. } => Err(Error::NotFinite { ring: self.spec() }),
        }
    }

    pub fn size(&self) -> Option<u64> {
        match self {
            RingContext::Modular { modulus } => Some(*modulus),
            RingContext::Matrix { .. } => None,
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Payload {
    Residue(u64),
    Matrix(Matrix),
}

/// An element of a [`RingContext`]. Produced by ring constructors or the
/// literal parser; all arithmetic stays within one ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    ring: RingContext,
    payload: Payload,
}

impl Element {
    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    fn check_ring(&self, o: &Element) -> Result<()> {
        if self.ring == o.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.spec(),
                right: o.ring.spec(),
            })
        }
    }

    fn modulus(&self) -> u64 {
        match &self.ring {
            RingContext::Modular { modulus } => *modulus,
            RingContext::Matrix { .. } => unreachable!("residue payload in matrix ring"),
        }
    }

    /// The canonical residue for modular elements.
    pub fn residue_value(&self) -> Option<u64> {
        match &self.payload {
            Payload::Residue(v) => Some(*v),
            Payload::Matrix(_) => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&Matrix> {
        match &self.payload {
            Payload::Matrix(m) => Some(m),
            Payload::Residue(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Residue(v) => *v == 0,
            Payload::Matrix(m) => m.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ring.one()
    }

    pub fn add(&self, o: &Element) -> Result<Element> {
        self.check_ring(o)?;
        Ok(match (&self.payload, &o.payload) {
            (Payload::Residue(a), Payload::Residue(b)) => {
                let n = self.modulus() as u128;
                self.ring
                    .residue_unchecked(((*a as u128 + *b as u128) % n) as u64)
            }
            (Payload::Matrix(a), Payload::Matrix(b)) => Element {
                ring: self.ring.clone(),
                payload: Payload::Matrix(a.add(b)),
            },
            _ => unreachable!("payload kind fixed by ring"),
        })
    }

    pub fn sub(&self, o: &Element) -> Result<Element> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Element {
        match &self.payload {
            Payload::Residue(v) => {
                let n = self.modulus();
                self.ring.residue_unchecked(if *v == 0 { 0 } else { n - *v })
            }
            Payload::Matrix(m) => Element {
                ring: self.ring.clone(),
                payload: Payload::Matrix(m.neg()),
            },
        }
    }

    pub fn mul(&self, o: &Element) -> Result<Element> {
        self.check_ring(o)?;
        Ok(match (&self.payload, &o.payload) {
            (Payload::Residue(a), Payload::Residue(b)) => {
                let n = self.modulus() as u128;
                self.ring
                    .residue_unchecked(((*a as u128 * *b as u128) % n) as u64)
            }
            (Payload::Matrix(a), Payload::Matrix(b)) => Element {
                ring: self.ring.clone(),
                payload: Payload::Matrix(a.mul(b)),
            },
            _ => unreachable!("payload kind fixed by ring"),
        })
    }

    /// Nonnegative power; a^0 is the identity.
    pub fn pow(&self, e: u32) -> Element {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            base = base.mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// The ring involution: identity on modular rings, conjugate transpose on
    /// matrix rings.
    pub fn involution(&self) -> Element {
        match &self.payload {
            Payload::Residue(_) => self.clone(),
            Payload::Matrix(m) => Element {
                ring: self.ring.clone(),
                payload: Payload::Matrix(m.conj_transpose()),
            },
        }
    }

    pub fn is_unit(&self) -> bool {
        self.unit_inverse().is_ok()
    }

    /// Two-sided multiplicative inverse; errors with `NotAUnit` otherwise.
    pub fn unit_inverse(&self) -> Result<Element> {
        match &self.payload {
            Payload::Residue(v) => {
                let n = self.modulus();
                match inv_mod(*v, n) {
                    Some(w) => Ok(self.ring.residue_unchecked(w)),
                    None => Err(Error::NotAUnit {
                        element: self.literal(),
                    }),
                }
            }
            Payload::Matrix(m) => match m.inverse() {
                Some(inv) => Ok(Element {
                    ring: self.ring.clone(),
                    payload: Payload::Matrix(inv),
                }),
                None => Err(Error::NotAUnit {
                    element: self.literal(),
                }),
            },
        }
    }

    /// Canonical literal; parses back to the same element.
    pub fn literal(&self) -> String {
        match &self.payload {
            Payload::Residue(v) => v.to_string(),
            Payload::Matrix(m) => literal::matrix_literal(m),
        }
    }

    pub(crate) fn from_matrix(ring: &RingContext, m: Matrix) -> Element {
        debug_assert!(matches!(ring, RingContext::Matrix { dim } if *dim == m.dim()));
        Element {
            ring: ring.clone(),
            payload: Payload::Matrix(m),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// Modular inverse by extended Euclid; None when gcd(a, n) > 1. In the zero
/// ring (n = 1) every element is 0 = 1 and is its own inverse.
fn inv_mod(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut r0, mut r1) = (n as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    let n = n as i128;
    Some((((t0 % n) + n) % n) as u64)
}
