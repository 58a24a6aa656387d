mod common;

use common::criteria;
use lie_gsb::commutative::{Field, YMonomial};
use lie_gsb::freelie::{LieElement, Monomial};
use lie_gsb::lyndon::enumerate_alsw;
use proptest::prelude::*;

#[test]
fn triangular_to_degree_six() {
    assert_eq!(criteria::triangularity(2, 6).unwrap(), 2 + 1 + 2 + 3 + 6 + 9);
    criteria::triangularity(3, 6).unwrap();
}

#[test]
fn jacobi_and_anticommutativity() {
    assert_eq!(criteria::jacobi(1000, 11).unwrap(), 1000);
}

#[test]
fn bracket_matches_commutator() {
    criteria::bracket_oracle(2, 6).unwrap();
    criteria::bracket_oracle(3, 5).unwrap();
}

fn element(field: Field) -> impl Strategy<Value = LieElement> {
    let words = enumerate_alsw(2, 5);
    let n = words.len();
    prop::collection::vec((0..n, 0u32..3, -4i64..5), 0..6).prop_map(move |terms| {
        let mut e = LieElement::zero(field);
        for (w, y, c) in terms {
            let m = Monomial::new(YMonomial::pow(0, y), words[w].clone());
            e = e.add(&LieElement::monomial(field, field.from_i64(c), m).unwrap());
        }
        e
    })
}

proptest! {
    #[test]
    fn associative_round_trip(e in element(Field::Rational)) {
        prop_assert_eq!(LieElement::from_associative(&e.to_associative()).unwrap(), e);
    }

    #[test]
    fn associative_round_trip_gf2(e in element(Field::Prime(2))) {
        prop_assert_eq!(LieElement::from_associative(&e.to_associative()).unwrap(), e);
    }

    #[test]
    fn bracket_is_commutator(a in element(Field::Rational), b in element(Field::Rational)) {
        let lhs = a.bracket(&b).to_associative();
        let (aa, ba) = (a.to_associative(), b.to_associative());
        prop_assert_eq!(lhs, aa.mul(&ba).sub(&ba.mul(&aa)));
    }
}
