use szeged_core::formulas::{szeged_cyclic_formula, szeged_dihedral_formula};
use szeged_core::number_theory::euler_totient;
use szeged_core::power_graph::{
    cyclic_decomposition, power_graph_cyclic, power_graph_cyclic_punctured, power_graph_dihedral,
};
use szeged_core::{build_generalized_join, szeged_join_formula};

#[test]
fn classes_partition_the_group() {
    for n in 3..=400 {
        let d = cyclic_decomposition(n).unwrap();
        assert_eq!(d.ell, euler_totient(n).unwrap() + 1);
        assert_eq!(d.ell + d.class_sizes.iter().sum::<u64>(), n);
        let members = d.class_members();
        assert_eq!(members[0].len() as u64, d.ell);
        for (block, size) in members[1..].iter().zip(&d.class_sizes) {
            assert_eq!(block.len() as u64, *size);
        }
        assert_eq!(d.quotient.universal_vertex(), Some(0));
    }
}

#[test]
fn quotient_is_the_divisibility_graph() {
    for n in [12u64, 30, 36, 60, 64, 210] {
        let d = cyclic_decomposition(n).unwrap();
        for (i, &a) in d.divisors.iter().enumerate() {
            for (j, &b) in d.divisors.iter().enumerate().skip(i + 1) {
                assert_eq!(d.divisor_adjacent(i, j), b % a == 0, "n={n} d={a},{b}");
            }
        }
    }
}

#[test]
fn join_of_classes_gives_the_cyclic_index() {
    for n in 3..=120 {
        let spec = cyclic_decomposition(n).unwrap().join_spec();
        let joined = build_generalized_join(&spec).unwrap().graph;
        let direct = power_graph_cyclic(n).unwrap();
        let expected = direct.szeged_index().unwrap();
        assert_eq!(joined.szeged_index().unwrap(), expected, "n={n}");
        assert_eq!(szeged_join_formula(&spec).unwrap(), expected, "n={n}");
        assert_eq!(szeged_cyclic_formula(n).unwrap(), expected, "n={n}");
    }
}

#[test]
fn frozen_values() {
    let cyclic = [
        (6, 25),
        (8, 28),
        (9, 36),
        (12, 180),
        (15, 241),
        (18, 493),
        (20, 610),
        (30, 3129),
    ];
    for (n, sz) in cyclic {
        assert_eq!(
            power_graph_cyclic(n).unwrap().szeged_index().unwrap(),
            sz,
            "n={n}"
        );
    }
    let dihedral = [
        (3, 24),
        (4, 46),
        (5, 75),
        (6, 121),
        (7, 154),
        (10, 361),
        (12, 588),
        (15, 886),
    ];
    for (n, sz) in dihedral {
        assert_eq!(szeged_dihedral_formula(n).unwrap(), sz, "n={n}");
        assert_eq!(
            power_graph_dihedral(n).unwrap().szeged_index().unwrap(),
            sz,
            "n={n}"
        );
    }
    let punctured = [(6, 16), (10, 64), (12, 149), (15, 211)];
    for (n, sz) in punctured {
        assert_eq!(
            power_graph_cyclic_punctured(n)
                .unwrap()
                .szeged_index()
                .unwrap(),
            sz,
            "n={n}"
        );
    }
    assert_eq!(power_graph_cyclic(6).unwrap().wiener_index().unwrap(), 17);
    assert_eq!(power_graph_cyclic(12).unwrap().wiener_index().unwrap(), 76);
    assert_eq!(
        power_graph_dihedral(6).unwrap().wiener_index().unwrap(),
        113
    );
}
