//! Gates on the bundled catalog: declared polynomials, cyclotomicity, the
//! two-eigenvalue family, sign-symmetry facts, and the cospectral pair.

use num_bigint::BigInt;
use num_rational::BigRational;
use sgraph::cert;
use sgraph::constructions::{self, CatalogEntry};
use sgraph::search::{cospectral_mates, SignatureSpace};
use sgraph::spectral;

fn entry<'a>(cat: &'a [CatalogEntry], name: &str) -> &'a CatalogEntry {
    cat.iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("catalog entry {name} missing"))
}

#[test]
fn builtin_catalog_loads_and_validates() {
    let cat = constructions::builtin_catalog().unwrap();
    assert_eq!(cat.len(), 13);
    for e in &cat {
        assert!(e.expected_char_poly.is_some(), "{} lacks a declared poly", e.name);
    }
}

#[test]
fn toroidal_family_has_two_eigenvalues() {
    let cat = constructions::builtin_catalog().unwrap();
    for k in 3..=8usize {
        let e = entry(&cat, &format!("T_{}", 2 * k));
        assert_eq!(e.graph.n(), 2 * k);
        let p = spectral::char_poly(&e.graph);
        assert_eq!(p, constructions::two_eigenvalue_poly(k));
        assert_eq!(p.distinct_root_count(), 2);
        assert_eq!(constructions::weighing_weight(&e.graph), Some(4));
        assert!(spectral::is_cyclotomic(&e.graph));
        assert!(e.graph.is_connected());
    }
}

#[test]
fn toroidal_family_is_sign_symmetric_in_cert_range() {
    let cat = constructions::builtin_catalog().unwrap();
    for k in 3..=5usize {
        let e = entry(&cat, &format!("T_{}", 2 * k));
        assert!(
            cert::is_sign_symmetric(&e.graph).unwrap(),
            "T_{} should be sign-symmetric",
            2 * k
        );
    }
}

#[test]
fn sporadic_entries_are_cyclotomic_with_two_eigenvalues() {
    let cat = constructions::builtin_catalog().unwrap();
    for (name, k) in [("S_14", 7usize), ("S_16", 8usize)] {
        let e = entry(&cat, name);
        let p = spectral::char_poly(&e.graph);
        assert_eq!(p, constructions::two_eigenvalue_poly(k));
        assert_eq!(p.distinct_root_count(), 2);
        assert!(spectral::is_cyclotomic(&e.graph));
        assert!(e.graph.is_connected());
        assert_eq!(constructions::weighing_weight(&e.graph), Some(4));
    }
}

#[test]
fn sporadics_are_not_the_toroidal_class() {
    let cat = constructions::builtin_catalog().unwrap();
    let s14 = entry(&cat, "S_14");
    let t14 = entry(&cat, "T_14");
    assert!(!cert::switching_isomorphic_backtracking(&s14.graph, &t14.graph));
    let s16 = entry(&cat, "S_16");
    let t16 = entry(&cat, "T_16");
    assert!(!cert::switching_isomorphic_backtracking(&s16.graph, &t16.graph));
}

#[test]
fn hypercube_signing_matches_the_16_vertex_sporadic() {
    // recorded comparison: the bundled S_16 and the recursive signing agree
    // up to switching isomorphism
    let cat = constructions::builtin_catalog().unwrap();
    let s16 = entry(&cat, "S_16");
    let huang = constructions::huang_signing(4).unwrap();
    assert!(cert::switching_isomorphic_backtracking(&s16.graph, &huang));
}

#[test]
fn a1_is_symmetric_but_not_sign_symmetric() {
    let cat = constructions::builtin_catalog().unwrap();
    let a1 = entry(&cat, "A_1");
    let p = spectral::char_poly(&a1.graph);
    // symmetric spectrum: all odd coefficients vanish
    for (i, c) in p.coeffs().iter().enumerate() {
        if i % 2 != p.degree().unwrap() % 2 {
            assert_eq!(c, &BigInt::from(0), "odd coefficient {i} nonzero");
        }
    }
    assert!(!cert::is_sign_symmetric(&a1.graph).unwrap());
}

#[test]
fn a2_is_cospectral_with_a1_and_sign_symmetric() {
    let cat = constructions::builtin_catalog().unwrap();
    let a1 = entry(&cat, "A_1");
    let a2 = entry(&cat, "A_2");
    assert_eq!(spectral::char_poly(&a1.graph), spectral::char_poly(&a2.graph));
    assert!(cert::is_sign_symmetric(&a2.graph).unwrap());
    assert!(!cert::are_switching_isomorphic(&a1.graph, &a2.graph).unwrap());
}

#[test]
fn hexagon_cospectral_pair() {
    let cat = constructions::builtin_catalog().unwrap();
    let c6 = entry(&cat, "C6_plus");
    let mate = entry(&cat, "P2_Q4_tilde");
    assert_eq!(spectral::char_poly(&c6.graph), spectral::char_poly(&mate.graph));
    assert_ne!(
        cert::canonical_cert(&c6.graph).unwrap(),
        cert::canonical_cert(&mate.graph).unwrap()
    );
    let groups = cospectral_mates(&[c6.graph.clone(), mate.graph.clone()]).unwrap();
    assert_eq!(groups.len(), 1);
    assert_eq!(groups[0].classes.len(), 2);
}

#[test]
fn cyclotomic_entries_pass_the_exact_root_test() {
    let cat = constructions::builtin_catalog().unwrap();
    let two = BigRational::from(BigInt::from(2));
    for e in &cat {
        let p = spectral::char_poly(&e.graph);
        let outside = p.count_roots_outside(&-two.clone(), &two);
        let expect_cyclotomic = e.name.starts_with("T_")
            || e.name.starts_with("S_")
            || e.name.starts_with("C6")
            || e.name.contains("Q4");
        assert_eq!(outside == 0, expect_cyclotomic, "{}", e.name);
    }
}

#[test]
fn seidel_switching_moves_within_the_seidel_class() {
    // switching seidel(g) at U equals seidel(g') where g' complements the
    // edges across the cut
    use sgraph::{SignedGraph, VertexSet};
    let g = SignedGraph::build(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (0, 4, 1)]).unwrap();
    let s = constructions::seidel(&g).unwrap();
    for mask in 0u64..32 {
        let u = VertexSet::from_mask(5, mask);
        let switched = s.switch(&u);
        // complement g across the cut
        let mut edges = Vec::new();
        for a in 0..5usize {
            for b in a + 1..5 {
                let crossing = u.contains(a) != u.contains(b);
                let has = g.has_edge(a, b);
                let keep = if crossing { !has } else { has };
                if keep {
                    edges.push((a, b, 1i64));
                }
            }
        }
        let complemented = SignedGraph::build(5, &edges).unwrap();
        assert_eq!(switched, constructions::seidel(&complemented).unwrap());
    }
}

#[test]
fn signature_space_of_toroidal_base_contains_entry_class() {
    // the T_6 entry is reachable as a forest-positive representative
    let cat = constructions::builtin_catalog().unwrap();
    let t6 = entry(&cat, "T_6");
    let space = SignatureSpace::new(&t6.graph).unwrap();
    let target = cert::canonical_cert(&t6.graph).unwrap();
    let found = space
        .iter()
        .any(|g| cert::canonical_cert(&g).unwrap() == target);
    assert!(found);
}
