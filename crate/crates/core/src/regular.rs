//! Von Neumann regularity: inner inverses a^- with a a^- a = a, and the
//! Penrose equation profile of a candidate pair.
//!
//! Inner inverses are wildly non-unique; everything downstream that consumes
//! one must be insensitive to the choice. The constructors here return a
//! *canonical* choice so results are reproducible: the smallest residue in a
//! modular ring, and the rank-factorization inverse in a matrix ring.

use crate::error::{Error, Outcome, Result};
use crate::ring::{Element, RingContext};

/// Canonical inner inverse: x with a * x * a = a.
///
/// Modular rings are searched in ascending residue order; matrix rings use
/// the rank factorization, which always exists over a field. Errors with
/// `NotRegular` when no inner inverse exists.
pub fn inner_inverse(a: &Element) -> Result<Element> {
    match a.ring() {
        RingContext::Modular { .. } => {
            for x in a.ring().enumerate()? {
                if a.mul(&x)?.mul(a)? == *a {
                    return Ok(x);
                }
            }
            Err(Error::NotRegular {
                element: a.literal(),
            })
        }
        RingContext::Matrix { .. } => {
            let m = a.as_matrix().expect("matrix ring payload");
            let x = Element::from_matrix(a.ring(), m.inner_inverse());
            debug_assert_eq!(a.mul(&x)?.mul(a)?, *a);
            Ok(x)
        }
    }
}

/// Whether a has any inner inverse. Every matrix over a field is regular.
pub fn is_regular(a: &Element) -> bool {
    match a.ring() {
        RingContext::Modular { .. } => inner_inverse(a).is_ok(),
        RingContext::Matrix { .. } => true,
    }
}

/// Every inner inverse of a, in ascending residue order. Only meaningful in
/// finite rings; a matrix has an affine family of inner inverses.
pub fn all_inner_inverses(a: &Element) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for x in a.ring().enumerate()? {
        if a.mul(&x)?.mul(a)? == *a {
            out.push(x);
        }
    }
    Ok(out)
}

/// Which of the four Penrose equations a candidate pair satisfies:
/// (1) aba = a, (2) bab = b, (3) (ab)* = ab, (4) (ba)* = ba.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PenroseProfile {
    satisfied: [bool; 4],
}

impl PenroseProfile {
    pub fn contains(&self, eq: u8) -> bool {
        (1..=4).contains(&eq) && self.satisfied[(eq - 1) as usize]
    }

    /// All four equations hold: b is the Moore-Penrose inverse of a.
    pub fn is_moore_penrose(&self) -> bool {
        self.satisfied == [true; 4]
    }

    /// Equations in the profile, ascending.
    pub fn equations(&self) -> Vec<u8> {
        (1u8..=4).filter(|&e| self.contains(e)).collect()
    }
}

impl std::fmt::Display for PenroseProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let eqs: Vec<String> = self.equations().iter().map(u8::to_string).collect();
        write!(f, "{{{}}}", eqs.join(","))
    }
}

/// Evaluate all four Penrose equations for the pair (a, b).
pub fn penrose_check(a: &Element, b: &Element) -> Result<PenroseProfile> {
    let ab = a.mul(b)?;
    let ba = b.mul(a)?;
    Ok(PenroseProfile {
        satisfied: [
            ab.mul(a)? == *a,
            ba.mul(b)? == *b,
            ab.involution() == ab,
            ba.involution() == ba,
        ],
    })
}

/// Moore-Penrose inverses are unique when they exist: the first element whose
/// profile is full, if any. Exhaustive; finite rings only.
pub fn exhaustive_moore_penrose(a: &Element) -> Result<Outcome<Element>> {
    for b in a.ring().enumerate()? {
        if penrose_check(a, &b)?.is_moore_penrose() {
            return Ok(Outcome::Found(b));
        }
    }
    Ok(Outcome::Absent(crate::error::AbsentReason::NoWitness))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_inner_inverse_is_smallest_residue() {
        let z6 = RingContext::modular(6).unwrap();
        assert_eq!(inner_inverse(&z6.from_integer(2)).unwrap(), z6.from_integer(2));
        assert_eq!(inner_inverse(&z6.zero()).unwrap(), z6.zero());
        let z7 = RingContext::modular(7).unwrap();
        assert_eq!(inner_inverse(&z7.from_integer(3)).unwrap(), z7.from_integer(5));
    }

    #[test]
    fn non_regular_elements_are_detected() {
        let z4 = RingContext::modular(4).unwrap();
        let two = z4.from_integer(2);
        assert!(!is_regular(&two));
        assert!(matches!(
            inner_inverse(&two),
            Err(Error::NotRegular { .. })
        ));
        // 2 * 2 * 2 = 2 in Z/6
        let z6 = RingContext::modular(6).unwrap();
        assert!(is_regular(&z6.from_integer(2)));
    }

    #[test]
    fn matrix_inner_inverse_is_the_rank_factorization_one() {
        let m2 = RingContext::matrix(2).unwrap();
        let a = m2.parse_element("[[1,1],[0,0]]").unwrap();
        let x = inner_inverse(&a).unwrap();
        assert_eq!(x, m2.parse_element("[[1,0],[0,0]]").unwrap());
        assert_eq!(a.mul(&x).unwrap().mul(&a).unwrap(), a);
        assert!(is_regular(&a));
        assert_eq!(inner_inverse(&m2.zero()).unwrap(), m2.zero());
    }

    #[test]
    fn all_inner_inverses_enumerates_every_witness() {
        let z6 = RingContext::modular(6).unwrap();
        for a in z6.enumerate().unwrap() {
            let all = all_inner_inverses(&a).unwrap();
            for x in &all {
                assert_eq!(a.mul(x).unwrap().mul(&a).unwrap(), a);
            }
            if let Ok(canon) = inner_inverse(&a) {
                assert_eq!(all.first(), Some(&canon));
            } else {
                assert!(all.is_empty());
            }
        }
    }

    #[test]
    fn penrose_profiles() {
        let z9 = RingContext::modular(9).unwrap();
        let a = z9.from_integer(7);
        let b = z9.from_integer(4);
        assert!(penrose_check(&a, &b).unwrap().is_moore_penrose());

        // aba = a holds for a = 0 whatever b is; bab fails for b = 1
        let profile = penrose_check(&z9.zero(), &z9.one()).unwrap();
        assert_eq!(profile.equations(), vec![1, 3, 4]);
        assert_eq!(profile.to_string(), "{1,3,4}");

        let m2 = RingContext::matrix(2).unwrap();
        let a = m2.parse_element("[[1,0],[1,0]]").unwrap();
        let b = m2.parse_element("[[1/2,1/2],[0,0]]").unwrap();
        assert!(penrose_check(&a, &b).unwrap().is_moore_penrose());
        let inner_only = penrose_check(&a, &inner_inverse(&a).unwrap()).unwrap();
        assert!(inner_only.contains(1));
        assert!(!inner_only.is_moore_penrose());
    }

    #[test]
    fn moore_penrose_pairs_are_unique_in_small_rings() {
        for n in 2..=9u64 {
            let ring = RingContext::modular(n).unwrap();
            for a in ring.enumerate().unwrap() {
                let mps: Vec<Element> = ring
                    .enumerate()
                    .unwrap()
                    .into_iter()
                    .filter(|b| penrose_check(&a, b).unwrap().is_moore_penrose())
                    .collect();
                assert!(mps.len() <= 1, "two Moore-Penrose inverses for {a} mod {n}");
            }
        }
    }
}
