//! Shared helpers for the integration suites: a brute-force reference for
//! the inverse along an element, and a seeded generator of small
//! Gaussian-rational matrices.

use rand::rngs::StdRng;
use rand::Rng;
use ringinv::{Element, GaussianRational, RingContext};

/// The inverse of a along d straight from the definition: enumerate every b
/// in the (finite) ring, keep those with b a d = d = d a b that lie in both
/// dR and Rd, and insist there is at most one.
pub fn definitional_along(a: &Element, d: &Element) -> Option<Element> {
    let elems = a.ring().enumerate().expect("finite ring");
    let mut hits: Vec<Element> = Vec::new();
    for b in &elems {
        if b.mul(a).unwrap().mul(d).unwrap() != *d {
            continue;
        }
        if d.mul(a).unwrap().mul(b).unwrap() != *d {
            continue;
        }
        let in_rd = elems.iter().any(|x| x.mul(d).unwrap() == *b);
        let in_dr = elems.iter().any(|y| d.mul(y).unwrap() == *b);
        if in_rd && in_dr {
            hits.push(b.clone());
        }
    }
    assert!(
        hits.len() <= 1,
        "the inverse along an element must be unique; a = {a}, d = {d} admits {}",
        hits.len()
    );
    hits.pop()
}

/// A Gaussian rational with numerators in [-3, 3] and denominators in
/// [-3, 3] minus zero, for both the real and imaginary parts.
pub fn random_gaussian(rng: &mut StdRng) -> GaussianRational {
    const DENS: [i64; 6] = [-3, -2, -1, 1, 2, 3];
    let re = GaussianRational::from_ratio(rng.random_range(-3..=3), DENS[rng.random_range(0..6)]);
    let im = GaussianRational::from_ratio(rng.random_range(-3..=3), DENS[rng.random_range(0..6)]);
    re.add(&im.mul(&GaussianRational::i()))
}

pub fn random_matrix(rng: &mut StdRng, ring: &RingContext, dim: usize) -> Element {
    let rows: Vec<Vec<GaussianRational>> = (0..dim)
        .map(|_| (0..dim).map(|_| random_gaussian(rng)).collect())
        .collect();
    ring.matrix_from_rows(rows).expect("square shape")
}
