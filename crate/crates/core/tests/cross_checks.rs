use hochschild_core::bar::{bar_hh_dimension, cochain_dimension_count, ReducedBarComplex};
use hochschild_core::hochschild::formulas::expected_dims;
use hochschild_core::hochschild::{cochain_basis, cohomology_dimensions, hom_matrix, Cochain, CochainSpace};
use hochschild_core::linalg::LinearMap;
use hochschild_core::resolution::rank_of_q;
use hochschild_core::scalar::divides_two_t_plus_one;
use hochschild_core::yoneda::{lift_cocycle, yoneda_product, z_generator};
use hochschild_core::{Algebra, Field};
use proptest::prelude::*;

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(0u64), Just(2), Just(3), Just(5), Just(7)].prop_map(|p| Field::new(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dimensions_follow_formulas(t in 0u32..4, n in 0usize..10, field in field_strategy()) {
        let d = cohomology_dimensions(t, n, field).unwrap();
        let want = expected_dims(t, n, divides_two_t_plus_one(field, t)).unwrap();
        prop_assert_eq!((d.ker, d.im, d.hh), want);
        prop_assert_eq!(d.cochains, cochain_basis(t, n).len());
    }

    #[test]
    fn coboundary_maps_compose_to_zero(t in 0u32..3, n in 1usize..9, field in field_strategy()) {
        let alg = Algebra::new(t, field);
        let lower = hom_matrix(&alg, n).unwrap().matrix;
        let upper = hom_matrix(&alg, n + 1).unwrap().matrix;
        prop_assert!(upper.compose(&lower).is_zero());
    }

    #[test]
    fn bar_oracle_agrees(n in 0usize..3, t in 0u32..2, p in prop_oneof![Just(0u64), Just(2), Just(5)]) {
        let field = Field::new(p).unwrap();
        prop_assert_eq!(bar_hh_dimension(t, n, field).unwrap(), cohomology_dimensions(t, n, field).unwrap().hh);
    }
}

#[test]
fn cochain_space_size_is_corner_count() {
    // one corner of dimension 2T+1, 2T+2, 2T+1 or 2T per generator, by n mod 4
    for t in 0..4u32 {
        for n in 0..12 {
            let width = [2 * t + 1, 2 * t + 2, 2 * t + 1, 2 * t][n % 4] as usize;
            assert_eq!(cochain_basis(t, n).len(), rank_of_q(n) * width);
            let alg = Algebra::new(t, Field::RATIONALS);
            assert_eq!(CochainSpace::new(&alg, n).dim(), rank_of_q(n) * width);
        }
    }
}

#[test]
fn bar_complex_is_a_complex_in_characteristic_two() {
    let alg = Algebra::new(1, Field::new(2).unwrap());
    let complex = ReducedBarComplex::new(&alg, 3);
    for n in 0..2 {
        assert_eq!(complex.cochain_dim(n), cochain_dimension_count(1, n));
        let lower = LinearMap::new(complex.cochain_dim(n + 1), complex.differential_columns(n));
        let upper = LinearMap::new(complex.cochain_dim(n + 2), complex.differential_columns(n + 1));
        assert!(upper.compose(&lower).is_zero());
    }
}

#[test]
fn products_of_generators_over_f5() {
    let field = Field::new(5).unwrap();
    let alg = Algebra::new(0, field);
    let z: Vec<Cochain> = (0..=4).map(|j| z_generator(&alg, j)).collect();
    let space = CochainSpace::new(&alg, 8);
    for u in 0..=4 {
        let chain = lift_cocycle(&alg, &z[u], 4).unwrap();
        for (v, zv) in z.iter().enumerate() {
            let p = yoneda_product(&alg, zv, &chain).unwrap();
            let mut want = space.beta(0, 0, u + v);
            for i in 1..4 {
                want = want.add(&space.beta(0, i, u + v), field);
            }
            assert_eq!(p.coords, want, "z_{v} × z_{u}");
        }
    }
}
