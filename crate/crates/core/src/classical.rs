//! Group, Drazin, and Moore-Penrose inverses, each computed through the same
//! unit-criterion machinery as the inverse along an element: group along a,
//! Drazin along a^n for n at least the index, Moore-Penrose along a*.
//!
//! Each computation re-checks its defining axioms on the way out and reports
//! `InternalFormulaMismatch` if they fail, so a wrong closed formula cannot
//! produce a quietly wrong answer.

use crate::along::{invert_along, AlongInverse, Side};
use crate::centralizer::CentralizerMap;
use crate::error::{AbsentReason, Error, Outcome, Result};
use crate::regular::{inner_inverse, is_regular, penrose_check};
use crate::ring::{Element, RingContext};
use std::collections::HashMap;

fn mismatch(operation: &'static str, detail: String) -> Error {
    Error::InternalFormulaMismatch { operation, detail }
}

fn guard_sigma(ring: &RingContext, sigma: Option<&CentralizerMap>) -> Result<()> {
    if let Some(s) = sigma {
        if s.ring() != ring {
            return Err(Error::RingMismatch {
                left: s.ring().spec(),
                right: ring.spec(),
            });
        }
        if !s.is_centralizer() || !s.is_bijective() {
            return Err(Error::NotBijectiveCentralizer);
        }
    }
    Ok(())
}

fn twist(x: &Element, sigma: Option<&CentralizerMap>) -> Result<Element> {
    match sigma {
        Some(s) => s.apply(x),
        None => Ok(x.clone()),
    }
}

/// The group inverse: the b commuting with a such that aba = a and bab = b.
/// Exists iff a is invertible along itself; u = sigma(a^2) + 1 - a a^-
/// decides it, with b = sigma(u^-1) a.
pub fn group_inverse(a: &Element, sigma: Option<&CentralizerMap>) -> Result<Outcome<Element>> {
    guard_sigma(a.ring(), sigma)?;
    if !is_regular(a) {
        return Ok(Outcome::Absent(AbsentReason::NotRegular));
    }
    let a_inner = inner_inverse(a)?;
    let u = twist(&a.mul(a)?, sigma)?
        .add(&a.ring().one())?
        .sub(&a.mul(&a_inner)?)?;
    let Ok(u_inv) = u.unit_inverse() else {
        return Ok(Outcome::Absent(AbsentReason::UnitCriterionFailed));
    };
    let b = twist(&u_inv, sigma)?.mul(a)?;
    let ab = a.mul(&b)?;
    if ab != b.mul(a)? || ab.mul(a)? != *a || b.mul(&ab)? != b {
        return Err(mismatch(
            "group_inverse",
            format!("candidate {b} fails the group axioms for {a}"),
        ));
    }
    Ok(Outcome::Found(b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrazinResult {
    pub inverse: Element,
    /// The Drazin index: the least k with a^k = a^(k+1) b.
    pub index: u32,
    /// The power exponent at which the unit criterion fired.
    pub n_used: u32,
}

/// Tail and period of the power sequence a, a^2, a^3, ... in a modular ring:
/// the least (t, p) with a^(t+p) = a^t. None in a matrix ring, where powers
/// need not repeat.
pub fn power_cycle(a: &Element) -> Option<(u32, u32)> {
    match a.ring() {
        RingContext::Matrix { .. } => None,
        RingContext::Modular { .. } => {
            let mut seen: HashMap<Element, u32> = HashMap::new();
            let mut p = a.clone();
            let mut e = 1u32;
            loop {
                if let Some(&first) = seen.get(&p) {
                    return Some((first, e - first));
                }
                seen.insert(p.clone(), e);
                p = p.mul(a).expect("same ring");
                e += 1;
            }
        }
    }
}

/// How many powers of a the Drazin scan must try before giving up. In a
/// matrix ring the index cannot exceed the dimension. In a modular ring the
/// power sequence a, a^2, ... is eventually periodic and the index equals the
/// tail length, so the scan stops where the powers start repeating.
pub fn drazin_scan_bound(a: &Element) -> u32 {
    match a.ring() {
        RingContext::Matrix { dim } => *dim as u32,
        RingContext::Modular { .. } => {
            let (tail, _) = power_cycle(a).expect("modular ring");
            tail.max(1)
        }
    }
}

/// The Drazin inverse: the b with ab = ba, b a b = b, and a^k = a^(k+1) b for
/// some k (the least such k is the index). Found by scanning n = 1, 2, ...:
/// whenever a^n is regular and u = sigma(a^(n+1)) + 1 - a^n (a^n)^- is a
/// unit, b = sigma(u^-1) a^n is the Drazin inverse. The criterion first fires
/// exactly at the index.
pub fn drazin_inverse(a: &Element, sigma: Option<&CentralizerMap>) -> Result<Outcome<DrazinResult>> {
    guard_sigma(a.ring(), sigma)?;
    let one = a.ring().one();
    let bound = drazin_scan_bound(a);
    for n in 1..=bound {
        let p = a.pow(n);
        if !is_regular(&p) {
            continue;
        }
        let p_inner = inner_inverse(&p)?;
        let u = twist(&a.pow(n + 1), sigma)?
            .add(&one)?
            .sub(&p.mul(&p_inner)?)?;
        let Ok(u_inv) = u.unit_inverse() else {
            continue;
        };
        let b = twist(&u_inv, sigma)?.mul(&p)?;
        let ab = a.mul(&b)?;
        if ab != b.mul(a)? || b.mul(&ab)? != b {
            return Err(mismatch(
                "drazin_inverse",
                format!("candidate {b} fails commutation or b a b = b for {a}"),
            ));
        }
        let mut index = None;
        let mut power = a.clone();
        for k in 1..=n {
            if power.mul(a)?.mul(&b)? == power {
                index = Some(k);
                break;
            }
            power = power.mul(a)?;
        }
        let Some(index) = index else {
            return Err(mismatch(
                "drazin_inverse",
                format!("criterion fired at n = {n} but no index at most n certifies {b}"),
            ));
        };
        return Ok(Outcome::Found(DrazinResult {
            inverse: b,
            index,
            n_used: n,
        }));
    }
    Ok(Outcome::Absent(AbsentReason::ScanExhausted))
}

/// The Moore-Penrose inverse under the ring's involution: the b satisfying
/// aba = a, bab = b, (ab)* = ab, (ba)* = ba. Exists iff a is invertible
/// along a*; with u = sigma(a a*) + 1 - a a^- and v = sigma(a* a) + 1 - a^- a
/// it comes out as a* (sigma(u^-1))^2 a a*, equivalently a* a (sigma(v^-1))^2 a*.
/// Both are computed and compared.
pub fn moore_penrose(a: &Element, sigma: Option<&CentralizerMap>) -> Result<Outcome<Element>> {
    guard_sigma(a.ring(), sigma)?;
    if !is_regular(a) {
        return Ok(Outcome::Absent(AbsentReason::NotRegular));
    }
    let one = a.ring().one();
    let astar = a.involution();
    let a_inner = inner_inverse(a)?;
    let u = twist(&a.mul(&astar)?, sigma)?
        .add(&one)?
        .sub(&a.mul(&a_inner)?)?;
    let v = twist(&astar.mul(a)?, sigma)?
        .add(&one)?
        .sub(&a_inner.mul(a)?)?;
    let Ok(u_inv) = u.unit_inverse() else {
        if v.is_unit() {
            return Err(mismatch(
                "moore_penrose",
                format!("u = {u} is singular but v = {v} is a unit"),
            ));
        }
        return Ok(Outcome::Absent(AbsentReason::UnitCriterionFailed));
    };
    let v_inv = v.unit_inverse().map_err(|_| {
        mismatch(
            "moore_penrose",
            format!("u = {u} is a unit but v = {v} is singular"),
        )
    })?;
    let su = twist(&u_inv, sigma)?;
    let sv = twist(&v_inv, sigma)?;
    let via_u = astar.mul(&su)?.mul(&su)?.mul(a)?.mul(&astar)?;
    let via_v = astar.mul(a)?.mul(&sv)?.mul(&sv)?.mul(&astar)?;
    if via_u != via_v {
        return Err(mismatch(
            "moore_penrose",
            format!("the u-side and v-side formulas disagree: {via_u} vs {via_v}"),
        ));
    }
    if !penrose_check(a, &via_u)?.is_moore_penrose() {
        return Err(mismatch(
            "moore_penrose",
            format!("candidate {via_u} fails a Penrose equation for {a}"),
        ));
    }
    Ok(Outcome::Found(via_u))
}

/// Moore-Penrose through a one-sided inverse of u = a a* + 1 - a a^-.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneSidedMp {
    pub inverse: Element,
    pub u: Element,
    /// The one-sided inverse w of u that was found (w u = 1 or u w = 1).
    pub u_one_sided: Element,
    /// On the right side, the derived inverse of v = a* a + 1 - a^- a.
    pub v_inverse: Option<Element>,
}

/// Computes the Moore-Penrose inverse from a merely one-sided inverse w of
/// u = a a* + 1 - a a^-. Left (w u = 1) gives a* w^2 a a* directly; right
/// (u w = 1) first converts to v^-1 = 1 - (a* - a^-) w a and uses
/// a* a (v^-1)^2 a*. Each result is cross-checked against the alternate
/// product form (w a)* a (w a)*, resp. (a v^-1)* a (a v^-1)*.
pub fn mp_one_sided(a: &Element, side: Side) -> Result<Outcome<OneSidedMp>> {
    if !is_regular(a) {
        return Ok(Outcome::Absent(AbsentReason::NotRegular));
    }
    let one = a.ring().one();
    let astar = a.involution();
    let a_inner = inner_inverse(a)?;
    let u = a.mul(&astar)?.add(&one)?.sub(&a.mul(&a_inner)?)?;
    let w = match a.ring() {
        RingContext::Modular { .. } => {
            let mut found = None;
            for w in a.ring().enumerate()? {
                let holds = match side {
                    Side::Left => w.mul(&u)? == one,
                    Side::Right => u.mul(&w)? == one,
                };
                if holds {
                    found = Some(w);
                    break;
                }
            }
            found
        }
        RingContext::Matrix { .. } => u.unit_inverse().ok(),
    };
    let Some(w) = w else {
        return Ok(Outcome::Absent(AbsentReason::UnitCriterionFailed));
    };
    let (inverse, alternate, v_inverse) = match side {
        Side::Left => {
            let mp = astar.mul(&w)?.mul(&w)?.mul(a)?.mul(&astar)?;
            let wa = w.mul(a)?;
            let alt = wa.involution().mul(a)?.mul(&wa.involution())?;
            (mp, alt, None)
        }
        Side::Right => {
            let v_inv = one.sub(&astar.sub(&a_inner)?.mul(&w)?.mul(a)?)?;
            let mp = astar.mul(a)?.mul(&v_inv)?.mul(&v_inv)?.mul(&astar)?;
            let av = a.mul(&v_inv)?;
            let alt = av.involution().mul(a)?.mul(&av.involution())?;
            (mp, alt, Some(v_inv))
        }
    };
    if alternate != inverse {
        return Err(mismatch(
            "mp_one_sided",
            format!("product form {alternate} disagrees with {inverse}"),
        ));
    }
    if !penrose_check(a, &inverse)?.is_moore_penrose() {
        return Err(mismatch(
            "mp_one_sided",
            format!("candidate {inverse} fails a Penrose equation for {a}"),
        ));
    }
    Ok(Outcome::Found(OneSidedMp {
        inverse,
        u,
        u_one_sided: w,
        v_inverse,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    Group,
    Drazin(u32),
    MoorePenrose,
}

/// Each classical inverse as an inverse along a specific element: group along
/// a, Drazin along a^n, Moore-Penrose along a*.
pub fn inverse_along_specialization(
    a: &Element,
    which: Specialization,
) -> Result<Outcome<AlongInverse>> {
    let d = match which {
        Specialization::Group => a.clone(),
        Specialization::Drazin(n) => a.pow(n),
        Specialization::MoorePenrose => a.involution(),
    };
    invert_along(a, &d)
}
