//! Randomized checks of the ring substrate: literal grammar round-trips and
//! the algebraic laws every higher operation silently leans on.

use proptest::collection::vec;
use proptest::prelude::*;
use ringinv::{Element, GaussianRational, RingContext};

fn gq() -> impl Strategy<Value = GaussianRational> {
    (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9).prop_map(|(p, q, r, s)| {
        GaussianRational::from_ratio(p, q)
            .add(&GaussianRational::from_ratio(r, s).mul(&GaussianRational::i()))
    })
}

fn square_matrix() -> impl Strategy<Value = Element> {
    (1usize..=3).prop_flat_map(|dim| {
        vec(gq(), dim * dim).prop_map(move |entries| {
            let ring = RingContext::matrix(dim).unwrap();
            let rows = entries.chunks(dim).map(|r| r.to_vec()).collect();
            ring.matrix_from_rows(rows).unwrap()
        })
    })
}

fn matrix_triple() -> impl Strategy<Value = (Element, Element, Element)> {
    (1usize..=3).prop_flat_map(|dim| {
        vec(gq(), 3 * dim * dim).prop_map(move |entries| {
            let ring = RingContext::matrix(dim).unwrap();
            let mut blocks = entries.chunks(dim * dim).map(|block| {
                let rows = block.chunks(dim).map(|r| r.to_vec()).collect();
                ring.matrix_from_rows(rows).unwrap()
            });
            let a = blocks.next().unwrap();
            let b = blocks.next().unwrap();
            let c = blocks.next().unwrap();
            (a, b, c)
        })
    })
}

proptest! {
    #[test]
    fn modular_literals_round_trip(n in 1u64..=5000, v in any::<i64>()) {
        let ring = RingContext::modular(n).unwrap();
        let e = ring.from_integer(v);
        prop_assert!(e.residue_value().unwrap() < n.max(1));
        prop_assert_eq!(ring.parse_element(&e.literal()).unwrap(), e);
    }

    #[test]
    fn matrix_literals_round_trip(m in square_matrix()) {
        let ring = m.ring();
        prop_assert_eq!(ring.parse_element(&m.literal()).unwrap(), m.clone());
    }

    #[test]
    fn gaussian_rationals_form_a_field_with_conjugation(x in gq(), y in gq()) {
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!(x.norm(), x.mul(&x.conj()).re().clone());
        if !x.is_zero() {
            prop_assert!(x.inverse().unwrap().mul(&x).is_one());
        } else {
            prop_assert!(x.inverse().is_none());
        }
    }

    #[test]
    fn matrix_rings_satisfy_the_ring_axioms(
        (a, b, c) in matrix_triple(),
    ) {
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            b.add(&c).unwrap().mul(&a).unwrap(),
            b.mul(&a).unwrap().add(&c.mul(&a).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sub(&b).unwrap(), a.add(&b.neg()).unwrap());
    }

    #[test]
    fn the_conjugate_transpose_is_an_involution((a, b, _) in matrix_triple()) {
        prop_assert_eq!(
            a.mul(&b).unwrap().involution(),
            b.involution().mul(&a.involution()).unwrap()
        );
        prop_assert_eq!(
            a.add(&b).unwrap().involution(),
            a.involution().add(&b.involution()).unwrap()
        );
        prop_assert_eq!(a.involution().involution(), a.clone());
    }

    #[test]
    fn modular_arithmetic_behaves(n in 1u64..=300, x in any::<i64>(), y in any::<i64>()) {
        let ring = RingContext::modular(n).unwrap();
        let a = ring.from_integer(x);
        let b = ring.from_integer(y);
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a.clone());
        prop_assert_eq!(a.pow(3), a.mul(&a).unwrap().mul(&a).unwrap());
        prop_assert_eq!(a.pow(0), ring.one());
        if a.is_unit() {
            let inv = a.unit_inverse().unwrap();
            prop_assert!(a.mul(&inv).unwrap().is_one());
            prop_assert!(inv.mul(&a).unwrap().is_one());
        } else {
            prop_assert!(a.unit_inverse().is_err());
        }
    }
}
