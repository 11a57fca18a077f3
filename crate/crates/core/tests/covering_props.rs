mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use toric_core::covering::{
    build_h1_lattice, c_value, c_values, pullback_matrix, radical, CoveringSpec, H1Lattice,
};
use toric_core::exactlin::{IntMatrix, Lattice};
use toric_core::layers::{enumerate_layers, is_isomorphic};

fn valid_specs() -> impl Strategy<Value = CoveringSpec> {
    (1i64..40, -20i64..20).prop_filter_map("a and a+1 prime to n", |(n, a)| CoveringSpec::new(n, a).ok())
}

#[test]
fn c_value_pattern_is_shared_by_both_twists() {
    for n in [7, 11, 13] {
        let first = c_values(&build_h1_lattice(&CoveringSpec::new(n, 1).unwrap()).unwrap()).unwrap();
        let second = c_values(&build_h1_lattice(&CoveringSpec::new(n, 2).unwrap()).unwrap()).unwrap();
        assert_eq!(first, second);
        for ((i, j), c) in first {
            let expected = if [(0, 1), (0, 2), (1, 2), (3, 4)].contains(&(i, j)) { n } else { 1 };
            assert_eq!(c, BigInt::from(expected));
        }
    }
}

#[test]
fn twisted_coverings_have_isomorphic_posets() {
    for n in [7, 11, 13] {
        let first = enumerate_layers(&CoveringSpec::new(n, 1).unwrap().arrangement()).unwrap();
        let second = enumerate_layers(&CoveringSpec::new(n, 2).unwrap().arrangement()).unwrap();
        assert!(is_isomorphic(&first, &second).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn c_values_are_symmetric_and_coordinate_free(spec in valid_specs(), u in common::unimodular(5)) {
        let h = build_h1_lattice(&spec).unwrap();
        let moved: Vec<Lattice> = h
            .components()
            .iter()
            .map(|l| Lattice::from_rows(&l.basis().mul(&u).unwrap()))
            .collect();
        let g = H1Lattice::from_components(spec, moved).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    let c = c_value(&h, i, j).unwrap();
                    prop_assert_eq!(&c, &c_value(&h, j, i).unwrap());
                    prop_assert_eq!(c, c_value(&g, i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn radical_is_idempotent_and_monotone(a in common::matrix(3, 4, 4, 4), extra in proptest::collection::vec(-4i64..=4, 4)) {
        let ambient = Lattice::full(4);
        let small = Lattice::from_rows(&a);
        let big = small.sum(&Lattice::from_vectors(4, &[common::big(&extra)]).unwrap()).unwrap();
        let r = radical(&small, &ambient).unwrap();
        prop_assert_eq!(radical(&r, &ambient).unwrap(), r.clone());
        prop_assert!(r.contains_lattice(&small).unwrap());
        prop_assert!(radical(&big, &ambient).unwrap().contains_lattice(&r).unwrap());
    }

    #[test]
    fn pullback_carries_characters_to_characters(spec in valid_specs()) {
        // base characters in the ψ₁, ψ₂ coordinates are the columns of the three lines
        let base = IntMatrix::from_i64(&[&[1, 0, 1], &[0, 1, 1]]);
        let covering = spec.arrangement();
        let p = pullback_matrix(&spec);
        for j in 0..3 {
            let mut v = vec![BigInt::from(0); 3];
            v.extend(base.column(j));
            let image = p.mul_vec(&v);
            prop_assert_eq!(image[3..].to_vec(), covering.column(j));
            prop_assert!(image[..3].iter().all(|x| x == &BigInt::from(0)));
        }
    }
}
