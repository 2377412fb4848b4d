//! Scaling maps x -> c*x and how far they are from being centralizers.
//!
//! Every scaling is a left centralizer (s(xy) = s(x)y holds by
//! associativity). It is a two-sided centralizer exactly when c is central,
//! and bijective exactly when c is a unit. Modular rings are commutative, so
//! centrality is free there; in a matrix ring centrality is decided by
//! commuting with the finitely many unit matrices e_pq, which generate.

use crate::error::{Error, Result};
use crate::ring::{Element, Matrix, RingContext};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A scaling map together with its verified properties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerMap {
    scaling: Element,
    right_verified: bool,
    inverse_scaling: Option<Element>,
}

impl CentralizerMap {
    /// The map x -> c*x.
    pub fn scaling(c: &Element) -> Self {
        let right_verified = match c.ring() {
            RingContext::Modular { .. } => true,
            RingContext::Matrix { dim } => {
                let m = c.as_matrix().expect("matrix ring payload");
                commutes_with_unit_matrices(m, *dim)
            }
        };
        CentralizerMap {
            scaling: c.clone(),
            right_verified,
            inverse_scaling: c.unit_inverse().ok(),
        }
    }

    /// The identity map, as the scaling by 1.
    pub fn identity(ring: &RingContext) -> Self {
        CentralizerMap::scaling(&ring.one())
    }

    pub fn ring(&self) -> &RingContext {
        self.scaling.ring()
    }

    pub fn scaling_element(&self) -> &Element {
        &self.scaling
    }

    pub fn is_identity(&self) -> bool {
        self.scaling.is_one()
    }

    /// Left centralizer law s(xy) = s(x)y; true for every scaling.
    pub fn is_left_centralizer(&self) -> bool {
        true
    }

    /// Right centralizer law s(xy) = x s(y); true iff the scalar is central.
    pub fn is_right_centralizer(&self) -> bool {
        self.right_verified
    }

    pub fn is_centralizer(&self) -> bool {
        self.is_left_centralizer() && self.is_right_centralizer()
    }

    /// Bijective iff the scalar is a unit.
    pub fn is_bijective(&self) -> bool {
        self.inverse_scaling.is_some()
    }

    pub fn inverse_scaling_element(&self) -> Option<&Element> {
        self.inverse_scaling.as_ref()
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        self.scaling.mul(a)
    }

    /// Preimage under a bijective scaling; errors with `NotBijective` otherwise.
    pub fn inverse_apply(&self, a: &Element) -> Result<Element> {
        match &self.inverse_scaling {
            Some(cinv) => cinv.mul(a),
            None => Err(Error::NotBijective),
        }
    }
}

fn commutes_with_unit_matrices(c: &Matrix, dim: usize) -> bool {
    for r in 0..dim {
        for s in 0..dim {
            let e = Matrix::unit(dim, r, s);
            if c.mul(&e) != e.mul(c) {
                return false;
            }
        }
    }
    true
}

/// How to probe the centralizer laws in [`verify_centralizer`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerificationMode {
    /// Every pair of ring elements; finite rings only.
    Exhaustive,
    /// A deterministic pseudo-random sample of this many pairs. For matrix
    /// rings the structural centrality test already decides the law; the
    /// sample re-checks it on concrete pairs.
    Sampled(usize),
}

/// Check x*s(y) = s(xy) = s(x)*y over the requested verification set.
pub fn verify_centralizer(map: &CentralizerMap, mode: VerificationMode) -> Result<bool> {
    let ring = map.ring().clone();
    let pairs: Vec<(Element, Element)> = match mode {
        VerificationMode::Exhaustive => {
            let all = ring.enumerate()?;
            let mut pairs = Vec::with_capacity(all.len() * all.len());
            for x in &all {
                for y in &all {
                    pairs.push((x.clone(), y.clone()));
                }
            }
            pairs
        }
        VerificationMode::Sampled(count) => {
            if ring.is_finite() {
                let mut rng = StdRng::seed_from_u64(0x5ca1ab1e);
                (0..count)
                    .map(|_| (sample_element(&ring, &mut rng), sample_element(&ring, &mut rng)))
                    .collect()
            } else {
                // the generator test is the decision procedure; a non-central
                // scalar cannot pass regardless of the sample
                if !map.is_right_centralizer() {
                    return Ok(false);
                }
                let mut rng = StdRng::seed_from_u64(0x5ca1ab1e);
                (0..count)
                    .map(|_| (sample_element(&ring, &mut rng), sample_element(&ring, &mut rng)))
                    .collect()
            }
        }
    };
    for (x, y) in pairs {
        let xy = x.mul(&y)?;
        let s_xy = map.apply(&xy)?;
        if s_xy != x.mul(&map.apply(&y)?)? || s_xy != map.apply(&x)?.mul(&y)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deterministic small random element; matrix entries have numerators and
/// denominators within [-3, 3].
fn sample_element(ring: &RingContext, rng: &mut StdRng) -> Element {
    match ring {
        RingContext::Modular { modulus } => ring.from_integer(rng.random_range(0..*modulus) as i64),
        RingContext::Matrix { dim } => {
            use crate::ring::GaussianRational;
            let rows = (0..*dim)
                .map(|_| {
                    (0..*dim)
                        .map(|_| {
                            let re = GaussianRational::from_ratio(
                                rng.random_range(-3..=3),
                                rng.random_range(1..=3),
                            );
                            let im = GaussianRational::from_ratio(
                                rng.random_range(-3..=3),
                                rng.random_range(1..=3),
                            );
                            re.add(&im.mul(&GaussianRational::i()))
                        })
                        .collect()
                })
                .collect();
            ring.matrix_from_rows(rows).expect("square by construction")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaling_by_a_unit_is_bijective() {
        let z9 = RingContext::modular(9).unwrap();
        let s = CentralizerMap::scaling(&z9.from_integer(2));
        assert!(s.is_centralizer());
        assert!(s.is_bijective());
        assert_eq!(s.inverse_scaling_element(), Some(&z9.from_integer(5)));
        let a = z9.from_integer(7);
        assert_eq!(s.apply(&a).unwrap(), z9.from_integer(5));
        assert_eq!(s.inverse_apply(&s.apply(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn scaling_by_a_zero_divisor_is_not_bijective() {
        let z6 = RingContext::modular(6).unwrap();
        let s = CentralizerMap::scaling(&z6.from_integer(3));
        assert!(s.is_centralizer());
        assert!(!s.is_bijective());
        assert!(matches!(
            s.inverse_apply(&z6.one()),
            Err(Error::NotBijective)
        ));
        assert!(verify_centralizer(&s, VerificationMode::Exhaustive).unwrap());
    }

    #[test]
    fn central_matrix_scalings_are_exactly_the_scalar_matrices() {
        let m2 = RingContext::matrix(2).unwrap();
        let half = m2.parse_element("[[1/2,0],[0,1/2]]").unwrap();
        let s = CentralizerMap::scaling(&half);
        assert!(s.is_centralizer());
        assert!(s.is_bijective());
        assert!(verify_centralizer(&s, VerificationMode::Sampled(64)).unwrap());

        let shear = m2.parse_element("[[1,1],[0,1]]").unwrap();
        let t = CentralizerMap::scaling(&shear);
        assert!(t.is_left_centralizer());
        assert!(!t.is_right_centralizer());
        assert!(t.is_bijective());
        assert!(!verify_centralizer(&t, VerificationMode::Sampled(64)).unwrap());
    }

    #[test]
    fn exhaustive_verification_rejects_infinite_rings() {
        let m2 = RingContext::matrix(2).unwrap();
        let s = CentralizerMap::identity(&m2);
        assert!(matches!(
            verify_centralizer(&s, VerificationMode::Exhaustive),
            Err(Error::NotFinite { .. })
        ));
    }

    #[test]
    fn regularity_transfers_through_bijective_centralizers() {
        // if x is an inner inverse of a, then s^-1(x) is one of s(a)
        for n in 2..=8u64 {
            let ring = RingContext::modular(n).unwrap();
            for c in ring.enumerate().unwrap() {
                let s = CentralizerMap::scaling(&c);
                if !s.is_bijective() {
                    continue;
                }
                for a in ring.enumerate().unwrap() {
                    let Ok(x) = crate::regular::inner_inverse(&a) else {
                        continue;
                    };
                    let sa = s.apply(&a).unwrap();
                    let y = s.inverse_apply(&x).unwrap();
                    assert_eq!(sa.mul(&y).unwrap().mul(&sa).unwrap(), sa);
                }
            }
        }
    }
}
