use proptest::prelude::*;

use tolattice::fca::{concepts, FormalContext};
use tolattice::io;
use tolattice::relation::{alpha, beta};
use tolattice::tolerance::{enumerate_tolerances, tolerance_generated_by};
use tolattice::verify::lattices_of_size;
use tolattice::{FiniteLattice, Relation, Subset};

fn lattice() -> impl Strategy<Value = FiniteLattice> {
    (1usize..=6).prop_flat_map(|n| {
        let all = lattices_of_size(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn lattice_and_pairs() -> impl Strategy<Value = (FiniteLattice, Vec<(usize, usize)>)> {
    lattice().prop_flat_map(|lat| {
        let n = lat.n();
        (Just(lat), prop::collection::vec((0..n, 0..n), 0..4))
    })
}

fn context() -> impl Strategy<Value = FormalContext> {
    (0usize..6, 0usize..6).prop_flat_map(|(g, m)| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), m), g).prop_map(move |rows| {
            let objects = (0..g).map(|i| format!("g{i}")).collect();
            let attributes = (0..m).map(|i| format!("m{i}")).collect();
            let rows = rows
                .iter()
                .map(|r| {
                    let mut s = Subset::with_capacity(m);
                    r.iter().enumerate().filter(|(_, &b)| b).for_each(|(i, _)| s.insert(i));
                    s
                })
                .collect();
            FormalContext::new(objects, attributes, rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_tolerance_is_least((lat, pairs) in lattice_and_pairs()) {
        let t = tolerance_generated_by(&lat, &pairs);
        prop_assert!(t.is_tolerance(&lat));
        for &(x, y) in &pairs {
            prop_assert!(t.contains(x, y));
        }
        for other in enumerate_tolerances(&lat).unwrap() {
            if pairs.iter().all(|&(x, y)| other.contains(x, y)) {
                prop_assert!(t.is_subset(&other));
            }
        }
    }

    #[test]
    fn alpha_undoes_beta((lat, pairs) in lattice_and_pairs()) {
        let t = tolerance_generated_by(&lat, &pairs);
        let r = beta(&lat, &t).unwrap();
        prop_assert!(r.is_rewor(&lat));
        prop_assert_eq!(alpha(&lat, &r).unwrap(), t);
    }

    #[test]
    fn relation_json_round_trip((lat, pairs) in lattice_and_pairs()) {
        let r = Relation::from_pairs(lat.n(), pairs);
        let lat_back = io::lattice_from_json(&io::lattice_to_json(&lat)).unwrap();
        prop_assert_eq!(&lat_back, &lat);
        prop_assert_eq!(io::relation_from_json(&io::relation_to_json(&lat, &r), &lat).unwrap(), r);
    }

    #[test]
    fn cxt_round_trip(ctx in context()) {
        let text = io::write_cxt(&ctx);
        let back = io::read_cxt(&text).unwrap();
        prop_assert_eq!(io::write_cxt(&back), text);
        prop_assert_eq!(back, ctx);
    }

    #[test]
    fn concepts_are_closed(ctx in context()) {
        let cl = concepts(&ctx).unwrap();
        for c in &cl.concepts {
            prop_assert!(ctx.is_concept(c));
        }
        prop_assert!(cl.density_violation().is_none());
    }
}
