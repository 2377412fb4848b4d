//! The inverse of a along d: the unique b with b*a*d = d = d*a*b lying in
//! d*R intersect R*d, when it exists, plus its one-sided variants.
//!
//! Existence and the value are decided through a unit criterion: for regular
//! d with inner inverse d^-, the element u = da + 1 - dd^- is invertible
//! exactly when the inverse along d exists, and then b = u^-1 d = d v^-1
//! where v = ad + 1 - d^-d. The same works with any bijective centralizer
//! sigma applied to da and ad, giving b = sigma(u^-1) d. Whether u is a unit
//! does not depend on the choice of d^-; the test suite checks that
//! exhaustively. All returned certificates are re-validated against the
//! defining equations before they leave this module.

use crate::centralizer::CentralizerMap;
use crate::error::{AbsentReason, Error, Outcome, Result};
use crate::regular::{inner_inverse, is_regular};
use crate::ring::{Element, RingContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A one-sided inverse along d.
///
/// Left: b*a*d = d and b = witness * d. Right: d*a*b = d and b = d * witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidedInverse {
    pub side: Side,
    pub b: Element,
    pub witness: Element,
}

/// A two-sided inverse along d with every certificate the construction
/// produced: the criterion units u, v, their inverses, and membership
/// witnesses b = left_witness * d = d * right_witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlongInverse {
    pub b: Element,
    pub u: Element,
    pub u_inv: Element,
    pub v: Element,
    pub v_inv: Element,
    pub left_witness: Element,
    pub right_witness: Element,
}

fn mismatch(detail: String) -> Error {
    Error::InternalFormulaMismatch {
        operation: "invert_along",
        detail,
    }
}

/// Witness that b lies in R*d (left) or d*R (right): the x with b = x*d,
/// respectively b = d*x. Canonical: smallest residue, or the zero-free-variable
/// solution of the linear system in a matrix ring.
pub fn ideal_membership(b: &Element, d: &Element, side: Side) -> Result<Outcome<Element>> {
    if b.ring() != d.ring() {
        return Err(Error::RingMismatch {
            left: b.ring().spec(),
            right: d.ring().spec(),
        });
    }
    match b.ring() {
        RingContext::Modular { .. } => {
            for x in b.ring().enumerate()? {
                let prod = match side {
                    Side::Left => x.mul(d)?,
                    Side::Right => d.mul(&x)?,
                };
                if prod == *b {
                    return Ok(Outcome::Found(x));
                }
            }
            Ok(Outcome::Absent(AbsentReason::NoWitness))
        }
        RingContext::Matrix { .. } => {
            let bm = b.as_matrix().expect("matrix ring payload");
            let dm = d.as_matrix().expect("matrix ring payload");
            let sol = match side {
                Side::Left => dm.solve_left(bm),
                Side::Right => dm.solve_right(bm),
            };
            Ok(match sol {
                Some(x) => Outcome::Found(Element::from_matrix(b.ring(), x)),
                None => Outcome::Absent(AbsentReason::NoWitness),
            })
        }
    }
}

/// Canonical one-sided inverse of a along d, or Absent when none exists.
pub fn sided_inverse_along(a: &Element, d: &Element, side: Side) -> Result<Outcome<SidedInverse>> {
    if a.ring() != d.ring() {
        return Err(Error::RingMismatch {
            left: a.ring().spec(),
            right: d.ring().spec(),
        });
    }
    match a.ring() {
        RingContext::Modular { .. } => {
            for witness in a.ring().enumerate()? {
                if let Some(found) = sided_from_witness(a, d, side, &witness)? {
                    return Ok(Outcome::Found(found));
                }
            }
            Ok(Outcome::Absent(AbsentReason::NoSidedInverse))
        }
        RingContext::Matrix { .. } => {
            let dad = d.mul(a)?.mul(d)?;
            let dadm = dad.as_matrix().expect("matrix ring payload");
            let dm = d.as_matrix().expect("matrix ring payload");
            // b = x*d with b*a*d = d  <=>  x*(dad) = d; dually for the right
            let sol = match side {
                Side::Left => dadm.solve_left(dm),
                Side::Right => dadm.solve_right(dm),
            };
            Ok(match sol {
                Some(x) => {
                    let witness = Element::from_matrix(a.ring(), x);
                    let b = match side {
                        Side::Left => witness.mul(d)?,
                        Side::Right => d.mul(&witness)?,
                    };
                    Outcome::Found(SidedInverse { side, b, witness })
                }
                None => Outcome::Absent(AbsentReason::NoSidedInverse),
            })
        }
    }
}

fn sided_from_witness(
    a: &Element,
    d: &Element,
    side: Side,
    witness: &Element,
) -> Result<Option<SidedInverse>> {
    let (b, holds) = match side {
        Side::Left => {
            let b = witness.mul(d)?;
            let holds = b.mul(a)?.mul(d)? == *d;
            (b, holds)
        }
        Side::Right => {
            let b = d.mul(witness)?;
            let holds = d.mul(a)?.mul(&b)? == *d;
            (b, holds)
        }
    };
    Ok(holds.then(|| SidedInverse {
        side,
        b,
        witness: witness.clone(),
    }))
}

/// Every distinct one-sided inverse of a along d, ascending by witness.
/// Finite rings only; used to verify laws over all possible choices.
pub fn all_sided_inverses(a: &Element, d: &Element, side: Side) -> Result<Vec<SidedInverse>> {
    let mut out: Vec<SidedInverse> = Vec::new();
    for witness in a.ring().enumerate()? {
        if let Some(found) = sided_from_witness(a, d, side, &witness)? {
            if !out.iter().any(|s| s.b == found.b) {
                out.push(found);
            }
        }
    }
    Ok(out)
}

/// The inverse of a along d through the unit criterion with the canonical
/// inner inverse of d. Absent with `NotRegularD` when d has no inner inverse,
/// with `UnitCriterionFailed` when u = da + 1 - dd^- is not invertible.
pub fn invert_along(a: &Element, d: &Element) -> Result<Outcome<AlongInverse>> {
    if !is_regular(d) {
        check_rings(a, d)?;
        return Ok(Outcome::Absent(AbsentReason::NotRegularD));
    }
    let d_inner = inner_inverse(d)?;
    build(a, d, &d_inner, None)
}

/// Same construction with a caller-chosen inner inverse of d. The criterion's
/// verdict and the resulting b are independent of that choice.
pub fn invert_along_with_inner(
    a: &Element,
    d: &Element,
    d_inner: &Element,
) -> Result<Outcome<AlongInverse>> {
    if d.mul(d_inner)?.mul(d)? != *d {
        return Err(Error::PreconditionFailed(format!(
            "{d_inner} is not an inner inverse of {d}"
        )));
    }
    build(a, d, d_inner, None)
}

/// The twisted criterion u = sigma(da) + 1 - dd^-, for a bijective
/// centralizer sigma; the inverse comes out as sigma(u^-1) d. Rejects any
/// sigma that is not a bijective centralizer: the criterion is simply not
/// valid for those, and silently applying it would misreport existence.
pub fn invert_along_sigma(
    a: &Element,
    d: &Element,
    sigma: &CentralizerMap,
) -> Result<Outcome<AlongInverse>> {
    if !sigma.is_centralizer() || !sigma.is_bijective() {
        return Err(Error::NotBijectiveCentralizer);
    }
    invert_along_sigma_unchecked(a, d, sigma)
}

/// Diagnostic variant of [`invert_along_sigma`] that skips the bijectivity
/// guard and reports exactly what the criterion formula says. For a
/// non-bijective sigma the verdict `UnitCriterionFailed` may be wrong (the
/// inverse can exist anyway); that failure mode is the point of the guard.
/// The map must still be a centralizer, or the formula is meaningless.
pub fn invert_along_sigma_unchecked(
    a: &Element,
    d: &Element,
    sigma: &CentralizerMap,
) -> Result<Outcome<AlongInverse>> {
    if !sigma.is_centralizer() {
        return Err(Error::NotBijectiveCentralizer);
    }
    if sigma.ring() != a.ring() {
        return Err(Error::RingMismatch {
            left: sigma.ring().spec(),
            right: a.ring().spec(),
        });
    }
    if !is_regular(d) {
        check_rings(a, d)?;
        return Ok(Outcome::Absent(AbsentReason::NotRegularD));
    }
    let d_inner = inner_inverse(d)?;
    build(a, d, &d_inner, Some(sigma))
}

/// The twisted criterion with a caller-chosen inner inverse of d. Verdict
/// and value depend on neither the choice nor the (bijective centralizer)
/// sigma.
pub fn invert_along_sigma_with_inner(
    a: &Element,
    d: &Element,
    sigma: &CentralizerMap,
    d_inner: &Element,
) -> Result<Outcome<AlongInverse>> {
    if !sigma.is_centralizer() || !sigma.is_bijective() {
        return Err(Error::NotBijectiveCentralizer);
    }
    if d.mul(d_inner)?.mul(d)? != *d {
        return Err(Error::PreconditionFailed(format!(
            "{d_inner} is not an inner inverse of {d}"
        )));
    }
    build(a, d, d_inner, Some(sigma))
}

/// Whether a is invertible along d.
pub fn exists_along(a: &Element, d: &Element) -> Result<bool> {
    Ok(invert_along(a, d)?.is_found())
}

fn check_rings(a: &Element, d: &Element) -> Result<()> {
    if a.ring() != d.ring() {
        return Err(Error::RingMismatch {
            left: a.ring().spec(),
            right: d.ring().spec(),
        });
    }
    Ok(())
}

fn build(
    a: &Element,
    d: &Element,
    d_inner: &Element,
    sigma: Option<&CentralizerMap>,
) -> Result<Outcome<AlongInverse>> {
    check_rings(a, d)?;
    check_rings(a, d_inner)?;
    let one = a.ring().one();
    let twist = |x: &Element| -> Result<Element> {
        match sigma {
            Some(s) => s.apply(x),
            None => Ok(x.clone()),
        }
    };
    let u = twist(&d.mul(a)?)?.add(&one)?.sub(&d.mul(d_inner)?)?;
    let v = twist(&a.mul(d)?)?.add(&one)?.sub(&d_inner.mul(d)?)?;
    let Ok(u_inv) = u.unit_inverse() else {
        // u = 1 + xy and v = 1 + yx share invertibility
        if v.is_unit() {
            return Err(mismatch(format!("u = {u} is singular but v = {v} is a unit")));
        }
        return Ok(Outcome::Absent(AbsentReason::UnitCriterionFailed));
    };
    let v_inv = v
        .unit_inverse()
        .map_err(|_| mismatch(format!("u = {u} is a unit but v = {v} is singular")))?;
    let left_witness = twist(&u_inv)?;
    let right_witness = twist(&v_inv)?;
    let b = left_witness.mul(d)?;
    if b != d.mul(&right_witness)? {
        return Err(mismatch(format!(
            "the two certificate products differ: {b} vs {}",
            d.mul(&right_witness)?
        )));
    }
    if b.mul(a)?.mul(d)? != *d || d.mul(a)?.mul(&b)? != *d {
        return Err(mismatch(format!(
            "candidate {b} fails the defining equations along {d}"
        )));
    }
    Ok(Outcome::Found(AlongInverse {
        b,
        u,
        u_inv,
        v,
        v_inv,
        left_witness,
        right_witness,
    }))
}
